#include <doctest.h>

#include <random>

#include "mva/checks.hpp"
#include "mva/matrix.hpp"
#include "mva/series.hpp"
#include "mva/text.hpp"

using namespace mva;

namespace {

const VarNames names2 = VarNames::defaults(2);

MultiPoly P(const std::string& s, int n = 2)
{
    return parse_poly(s, VarNames::defaults(n), n);
}

}  // namespace

TEST_CASE("half-step variables square to t")
{
    MultiPoly s1 = MultiPoly::term(Monomial::s(1, 1), 1, 2);
    CHECK(s1 * s1 - 1 + 1 == MultiPoly::t(1, 2));
    CHECK(P("t1^(1/2)") * P("t1^(1/2)") == P("t1"));
    CHECK(Monomial::t(1, 3).exponent(1) == 6);
    CHECK(Monomial::t(2, -1).inverse() == Monomial::t(2, 1));
}

TEST_CASE("products and differences")
{
    CHECK((P("t1 + t2") * P("t1 - t2")) == P("t1^2 - t2^2"));
    CHECK(P("t1 - t1") .is_zero());
    CHECK(P("(t1 + 1)^3") == P("t1^3 + 3*t1^2 + 3*t1 + 1"));
    CHECK(P("t1^-1 * t1") == MultiPoly(1, 2));
}

TEST_CASE("exact division")
{
    CHECK(div_exact(P("t1^2 - 1"), P("t1 - 1")) == P("t1 + 1"));
    VarNames xy{{"x", "y"}, "t"};
    MultiPoly a = parse_poly("x*(y - 1)*(1 - y + y^2)", xy, 2);
    CHECK(div_exact(a, parse_poly("y - 1", xy, 2)) == parse_poly("x*(1 - y + y^2)", xy, 2));
    CHECK(div_exact(P("t1^-2 - t1^2"), P("t1 - t1^-1")) == P("-t1 - t1^-1"));
    CHECK_THROWS_AS(div_exact(P("t1 + 1"), P("t1 - 1")), DivisionError);
    CHECK_FALSE(divides(P("t1 - 1"), P("t1 + 1")));
    CHECK(divides(P("t2"), P("t1*t2 + t2^3")));
}

TEST_CASE("homogeneous parts")
{
    MultiPoly a = P("3 + t1 - 2*t2 + t1*t2 + t2^2 + t1^(1/2)");
    CHECK(homogeneous_part(a, 0) == MultiPoly(3, 2));
    CHECK(homogeneous_part(a, 1) == P("t1 - 2*t2"));
    CHECK(homogeneous_part(a, 2) == P("t1*t2 + t2^2"));
    CHECK(homogeneous_part(a, Rational(1, 2)) == P("t1^(1/2)"));
    CHECK(homogeneous_part(a, 3).is_zero());
    CHECK(s_degrees(a) == std::vector<int>{0, 1, 2, 4});
}

TEST_CASE("exponential substitution")
{
    // u_k is stored in the slot of t_k
    TruncatedSeries a = series_exp_substitute(P("t1 - 1"), 2);
    CHECK(a.poly() == P("t1 + t1^2/2"));
    CHECK(series_exp_substitute(P("t1^(1/2)"), 1).poly() == P("1 + t1/2"));
    CHECK(series_exp_substitute(P("(t1 - 1)*t1^-1"), 1).poly() == P("t1"));
    CHECK(series_exp_substitute(P("t1^-1"), 3).poly() == P("1 - t1 + t1^2/2 - t1^3/6"));
    TruncatedSeries b = series_exp_substitute(P("t1*t2 - 1"), 2);
    CHECK(b.part(1) == P("t1 + t2"));
    CHECK(b.part(2) == P("(t1 + t2)^2/2"));
}

TEST_CASE("determinants")
{
    PolyMatrix one = PolyMatrix::from_dense({{MultiPoly(1, 2)}}, 2);
    CHECK(det(one) == MultiPoly(1, 2));
    PolyMatrix m = PolyMatrix::from_dense({{P("t1"), P("1")}, {P("1"), P("t2")}}, 2);
    CHECK(det(m) == P("t1*t2 - 1"));
    CHECK(det_bareiss(m) == P("t1*t2 - 1"));

    PolyMatrix swapped = PolyMatrix::from_dense({{P("1"), P("t2")}, {P("t1"), P("1")}}, 2);
    CHECK(det(swapped) == -det(m));

    PolyMatrix zero(3, 3, 2);
    CHECK(det(zero).is_zero());
    CHECK(det_bareiss(zero).is_zero());
}

TEST_CASE("three-chord matrix with the marked row removed")
{
    // rows/cols a2..a7 of the seven-arc three-chord example
    auto h = Rational(1, 2);
    MultiPoly t1 = P("t1"), t2 = P("t2"), z = MultiPoly::zero(2);
    MultiPoly p = MultiPoly(h, 2), n = MultiPoly(-h, 2);
    PolyMatrix m = PolyMatrix::from_dense(
        {
            {t2, -t1, z, -t1, t2, z},
            {z, p, n, z, n, p},
            {z, p, n, z, p, n},
            {z, z, t2, -t2, -t2, t2},
            {z, -t2, z, p, z, z},
            {z, z, t2, z, -t2, z},
        },
        2);
    CHECK(det(m) == det_bareiss(m));
}

TEST_CASE("minors")
{
    PolyMatrix a = PolyMatrix::from_dense({{P("1"), P("0"), P("0")}, {P("0"), P("1"), P("0")}}, 2);
    auto v = all_minors(a, 2);
    REQUIRE(v.size() == 3);
    CHECK(v[0] == MultiPoly(1, 2));
    CHECK(v[1].is_zero());
    CHECK(v[2].is_zero());
    CHECK(minor_subsets(3, 2) == std::vector<std::vector<size_t>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(minor_subsets(4, 2, 1) == std::vector<std::vector<size_t>>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(column_subsets(9, 5).size() == 126);

    PolyMatrix id = PolyMatrix::from_dense({{P("1"), P("0"), P("0")}, {P("0"), P("1"), P("0")}, {P("0"), P("0"), P("1")}}, 2);
    auto w = all_minors(id, 3);
    REQUIRE(w.size() == 1);
    CHECK(w[0] == MultiPoly(1, 2));

    PolyMatrix rep = PolyMatrix::from_dense({{P("t1"), P("t1"), P("1")}, {P("t2"), P("t2"), P("0")}}, 2);
    auto r = all_minors(rep, 2);
    CHECK(r[0].is_zero());
    CHECK(r[1] == P("-t2"));
}

TEST_CASE("ring axioms on random instances")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        MultiPoly a = random_poly(rng, 3, 4, -2, 2, true);
        MultiPoly b = random_poly(rng, 3, 4, -2, 2, true);
        MultiPoly c = random_poly(rng, 3, 4, -2, 2, true);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == MultiPoly::zero(3));
        if (!b.is_zero())
            CHECK(div_exact(a * b, b) == a);
    }
}

TEST_CASE("rendering and parsing")
{
    CHECK(to_text(P("-t1*t2^2/2"), names2) == "-1/2*t1*t2^2");
    CHECK(to_text(MultiPoly::zero(2), names2) == "0");
    CHECK(to_text(P("t1^(1/2)*t2^-1"), names2) == "t1^(1/2)*t2^(-1)");
    VarNames xy{{"x", "y"}, "t"};
    CHECK(to_text_factored(parse_poly("x*y - x*y^2 + x*y^3", xy, 2), xy) == "x*y*(1 - y + y^2)");
    CHECK(parse_poly("t2 + y", xy, 2) == parse_poly("2*y", xy, 2));
    CHECK_THROWS_AS(P("t1 +"), ParseError);
    CHECK_THROWS_AS(P("t3"), ParseError);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        MultiPoly a = random_poly(rng, 2, 5, -3, 3, true);
        CHECK(P(to_text(a, names2)) == a);
        CHECK(poly_from_json(to_json(a, names2), names2, 2) == a);
    }
}

TEST_CASE("cross-checks")
{
    CHECK(det_cross_check(40, 21).ok());
    CHECK(series_homomorphism_check(40, 22).ok());
}
