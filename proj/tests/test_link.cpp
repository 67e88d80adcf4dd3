#include <doctest.h>

#include "mva/link.hpp"
#include "support.hpp"

using namespace mva;

namespace {

MultiPoly P(const LinkDiagram& d, const std::string& s)
{
    return parse_poly(s, d.names(), d.nvars());
}

std::string parse_code(const std::string& text)
{
    try {
        parse_link(text);
    } catch (const ParseError& e) {
        return e.code;
    }
    return "";
}

const char* kinked_unknot = R"({"variables": ["t"],
  "components": [{"colour": 1, "rot": 1, "arc": "s1"}],
  "crossings": [{"id": "k", "sign": 1, "ends": ["s2", "s1", "s1", "s2"]}],
  "outer": {"arc": "s2", "side": "right"}})";

}  // namespace

TEST_CASE("two-component link with five crossings")
{
    LinkDiagram d = parse_link(fixture("s2.json"));
    REQUIRE(d.size() == 5);
    CHECK(d.arc_labels().size() == 5);
    CHECK_FALSE(d.knot());
    CHECK_FALSE(d.split());

    PolyMatrix m = wirtinger_matrix(d);
    CHECK(m.at(0, 0) == P(d, "y - 1"));
    CHECK(m.at(0, 4) == P(d, "1 - x"));
    CHECK(m.at(1, 0) == P(d, "1 - y"));
    CHECK(m.at(1, 1) == P(d, "x"));
    CHECK(m.at(2, 1) == P(d, "-y"));
    CHECK(m.at(2, 2) == P(d, "1"));
    CHECK(m.at(2, 3) == P(d, "y - 1"));
    CHECK(m.at(4, 2) == P(d, "y - 1"));

    MultiPoly expect = P(d, "x*y*(1 - y + y^2)");
    for (size_t i = 0; i < d.size(); ++i) {
        MvaResult r = mva::mva(d, i);
        INFO("deleted arc " << i);
        CHECK(r.value == expect);
    }
    MvaResult r5 = mva::mva(d, 4);
    CHECK(r5.word == Monomial::t(2, -2));
    CHECK(r5.mu == std::vector<int>{1, 4});
    CHECK(r5.rot == std::vector<int>{1, 2});
    CHECK(r5.det == P(d, "x*(y - 1)*(1 - y + y^2)"));
    CHECK(path_word(d, 4) == Monomial::t(2, -2));
}

TEST_CASE("off-diagonal deletions agree")
{
    LinkDiagram d = parse_link(fixture("s2.json"));
    MultiPoly expect = P(d, "x*y*(1 - y + y^2)");
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = 0; j < d.size(); ++j)
            CHECK(mva::mva(d, i, j).value == expect);
}

TEST_CASE("rotation numbers implied by the embedding")
{
    LinkDiagram d = parse_link(fixture("s2.json"));
    CHECK(implied_rotation_numbers(d) == std::vector<Rational>{1, 2});
    LinkDiagram h = parse_link(fixture("hopf.json"));
    CHECK(implied_rotation_numbers(h) == std::vector<Rational>{1, 1});
    Faces f = trace_faces(d);
    CHECK(f.count == d.size() + 2);
}

TEST_CASE("Hopf link")
{
    LinkDiagram d = parse_link(fixture("hopf.json"));
    CHECK(d.arc_labels().size() == 2);
    for (size_t i = 0; i < 2; ++i) {
        MvaResult r = mva::mva(d, i);
        CHECK(r.value == P(d, "-x*y"));
        CHECK(r.mu == std::vector<int>{1, 1});
    }
}

TEST_CASE("Wirtinger rows vanish at t = 1 and t_i - 1 divides the minors")
{
    for (const char* name : {"s2.json", "hopf.json"}) {
        LinkDiagram d = parse_link(fixture(name));
        PolyMatrix m = wirtinger_matrix(d);
        for (size_t r = 0; r < m.rows(); ++r) {
            Rational sum = 0;
            for (const auto& [c, v] : m.row(r))
                sum += v.sum_of_coefficients();
            CHECK(sum == 0);
        }
        for (size_t i = 0; i < d.size(); ++i) {
            MultiPoly ti = MultiPoly::t(d.arc_colour(i), d.nvars()) - 1;
            CHECK(divides(ti, det(m.without(i, i))));
        }
    }
}

TEST_CASE("kinked unknot")
{
    LinkDiagram d = parse_link(kinked_unknot);
    CHECK(d.knot());
    PolyMatrix m = wirtinger_matrix(d);
    REQUIRE(m.rows() == 1);
    CHECK(m.at(0, 0).is_zero());
    MvaResult r = mva::mva(d, 0);
    CHECK(r.mu == std::vector<int>{1});
    CHECK(r.knot);
}

TEST_CASE("word override is used verbatim")
{
    auto j = nlohmann::json::parse(fixture("s2.json"));
    j["words"] = {{"c5", {{"y", -1}}}};
    LinkDiagram d = link_from_json(j);
    MvaResult r = mva::mva(d, 4);
    CHECK(r.word == Monomial::t(2, -1));
    // w drops from y^-2 to y^-1, so the value loses one factor of y
    CHECK(r.value == P(d, "x*(1 - y + y^2)"));
}

TEST_CASE("malformed links")
{
    auto base = nlohmann::json::parse(fixture("hopf.json"));

    auto once = base;
    once["crossings"][0]["ends"][0] = "z9";
    CHECK_FALSE(parse_code(once.dump()).empty());

    auto norot = base;
    norot["components"][0].erase("rot");
    CHECK(parse_code(norot.dump()) == "missing-rot");

    auto noouter = base;
    noouter.erase("outer");
    CHECK(parse_code(noouter.dump()) == "missing-outer");

    auto badsign = base;
    badsign["crossings"][0]["sign"] = 2;
    CHECK(parse_code(badsign.dump()) == "bad-sign");

    auto dup = base;
    dup["crossings"][1]["id"] = "k1";
    CHECK(parse_code(dup.dump()) == "duplicate-id");

    CHECK(parse_code("{}") != "");
    CHECK(parse_code(base.dump()).empty());
}

TEST_CASE("json round trip")
{
    LinkDiagram d = parse_link(fixture("s2.json"));
    LinkDiagram e = link_from_json(to_json(d));
    CHECK(mva::mva(e, 0).value == mva::mva(d, 0).value);
    CHECK(e.arc_labels() == d.arc_labels());
}
