#include <doctest.h>

#include "mva/finitetype.hpp"
#include "mva/weight.hpp"
#include "support.hpp"

using namespace mva;

namespace {

LinkDiagram theorem_fixture(int m)
{
    return parse_link(fixture("theorem_m" + std::to_string(m) + ".json"));
}

}  // namespace

TEST_CASE("resolution order and signs")
{
    ResolutionSum one = resolve(theorem_fixture(1));
    REQUIRE(one.terms.size() == 2);
    CHECK(one.terms[0].sign == 1);
    CHECK(one.terms[0].choice == std::vector<int>{1});
    CHECK(one.terms[1].sign == -1);
    CHECK(one.terms[1].choice == std::vector<int>{-1});

    ResolutionSum two = resolve(theorem_fixture(2));
    REQUIRE(two.terms.size() == 4);
    std::vector<int> signs;
    for (const auto& t : two.terms)
        signs.push_back(t.sign);
    CHECK(signs == std::vector<int>{1, -1, -1, 1});
    CHECK(two.terms[1].choice == std::vector<int>{1, -1});
    for (const auto& t : two.terms)
        CHECK_FALSE(t.diagram.singular());

    CHECK(resolve(theorem_fixture(3)).terms.size() == 8);
}

TEST_CASE("resolved crossings keep the strands")
{
    LinkDiagram s = theorem_fixture(1);
    ResolutionSum r = resolve(s);
    for (size_t c = 0; c < s.size(); ++c) {
        const Crossing& orig = s.data().crossings[c];
        if (orig.sign != 0)
            continue;
        const Crossing& plus = r.terms[0].diagram.data().crossings[c];
        const Crossing& minus = r.terms[1].diagram.data().crossings[c];
        CHECK(plus.sign == 1);
        CHECK(plus.ends == std::array<std::string, 4>{orig.ends[3], orig.ends[0], orig.ends[1], orig.ends[2]});
        CHECK(minus.sign == -1);
        CHECK(minus.ends == orig.ends);
    }
}

TEST_CASE("underlying chord diagrams")
{
    ChordDiagram d3 = underlying_chord_diagram(theorem_fixture(3));
    CHECK(d3.chord_count() == 3);
    CHECK(weight(d3).weight == weight(parse_chord_diagram(fixture("s5.json"))).weight);
    CHECK(weight(d3).weight == parse_poly("-t2^2", d3.names(), d3.nvars()));
    for (int m = 1; m <= 3; ++m)
        CHECK(underlying_chord_diagram(theorem_fixture(m)).chord_count() == static_cast<size_t>(m));
}

TEST_CASE("resolution sums expand to the weight")
{
    int global_sign = 0;
    for (int m = 1; m <= 3; ++m) {
        INFO("m = " << m);
        TheoremCheck c = verify_theorem(theorem_fixture(m));
        CHECK(c.m == static_cast<size_t>(m));
        CHECK(c.lower_vanish);
        REQUIRE(c.first_nonzero_degree);
        CHECK(*c.first_nonzero_degree == m - 1);
        CHECK(c.verdict == TheoremCheck::Verdict::Equal);
        if (global_sign == 0)
            global_sign = c.sign();
        CHECK(c.sign() == global_sign);
        if (m >= 2)
            CHECK(c.parity_ok);
        CHECK(c.term_values.size() == (size_t{1} << m));
    }
}

TEST_CASE("higher truncation keeps the leading coefficient")
{
    for (int m = 1; m <= 2; ++m) {
        TheoremCheck low = verify_theorem(theorem_fixture(m));
        TheoremCheck high = verify_theorem(theorem_fixture(m), m + 2);
        CHECK(high.cap == m + 2);
        CHECK(high.coefficient == low.coefficient);
        CHECK(high.verdict == low.verdict);
        CHECK(high.lower_vanish);
    }
    CHECK_THROWS_AS(verify_theorem(theorem_fixture(3), 1), UsageError);
}

TEST_CASE("nonsingular diagrams are rejected")
{
    LinkDiagram d = parse_link(fixture("hopf.json"));
    CHECK_THROWS_AS(resolve(d), UsageError);
    CHECK_THROWS(verify_theorem(d));
}
