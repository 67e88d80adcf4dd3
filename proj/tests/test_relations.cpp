#include <doctest.h>

#include <random>

#include "mva/checks.hpp"
#include "mva/relations.hpp"
#include "mva/weight.hpp"
#include "support.hpp"

using namespace mva;

namespace {

std::string parse_code(const std::string& text)
{
    try {
        parse_relation(text);
    } catch (const ParseError& e) {
        return e.code;
    }
    return "";
}

}  // namespace

TEST_CASE("six 4x4 minors")
{
    FourRowSuite s = builtin_four_row_suite(data_dir());
    MultiPoly q = parse_poly("((t1 + t2)/2)^2", s.spec.names(), s.spec.nvars());
    std::vector<int> pattern{1, 0, -1, 1, 0, 1};
    REQUIRE(s.first.size() == 6);
    REQUIRE(s.second.size() == 6);
    for (size_t k = 0; k < 6; ++k) {
        CHECK(s.first[k] == q.scaled(pattern[k]));
        CHECK(s.second[k] == MultiPoly(pattern[k], s.spec.nvars()));
    }
    CHECK(s.verdict.holds);
    CHECK(s.spec.subsets().size() == 6);
}

TEST_CASE("five-row relation through the fixed column")
{
    RelationSpec spec = builtin_five_row_spec(data_dir());
    CHECK(spec.blocks.size() == 8);
    CHECK(spec.k == 5);
    CHECK(spec.fixed == 1);
    RelationVerdict v = check_minor_relation(spec);
    CHECK(v.minor_vector.size() == 70);
    CHECK(v.holds);
    CHECK_FALSE(v.first_nonzero);
}

TEST_CASE("the same blocks without a fixed column")
{
    RelationSpec spec = builtin_five_row_spec(data_dir());
    spec.fixed = 0;
    RelationVerdict v = check_minor_relation(spec);
    CHECK(v.minor_vector.size() == 126);
    CHECK_FALSE(v.holds);
    REQUIRE(v.first_nonzero);
    CHECK(v.first_nonzero->subset.front() != 0);
}

TEST_CASE("a flipped coefficient breaks the relation")
{
    RelationSpec spec = builtin_five_row_spec(data_dir());
    spec.blocks[2].coeff = -spec.blocks[2].coeff;
    RelationVerdict v = check_minor_relation(spec);
    CHECK_FALSE(v.holds);
    REQUIRE(v.first_nonzero);
    CHECK_FALSE(v.first_nonzero->value.is_zero());
    CHECK(v.first_nonzero->subset.size() == 5);
}

TEST_CASE("opposite copies of one block cancel")
{
    const char* text = R"({"variables": ["t1"], "k": 2, "blocks": [
      {"coeff": "1", "matrix": [["t1", "1", "0"], ["0", "t1^2", "3"]]},
      {"coeff": "-1", "matrix": [["t1", "1", "0"], ["0", "t1^2", "3"]]}]})";
    RelationVerdict v = check_minor_relation(parse_relation(text));
    CHECK(v.holds);
    CHECK(v.minor_vector.size() == 3);
}

TEST_CASE("malformed relation files")
{
    CHECK(parse_code(R"({"variables": ["t1"], "k": 2, "blocks": [
      {"coeff": "1", "matrix": [["t1", "1"], ["0"]]}]})") == "ragged-matrix");
    CHECK(parse_code(R"({"variables": ["t1"], "k": 2, "blocks": [
      {"coeff": "1", "matrix": [["t1", "1"], ["0", "1"]]},
      {"coeff": "1", "matrix": [["t1", "1", "2"], ["0", "1", "2"]]}]})") == "dimension-mismatch");
    CHECK(parse_code(R"({"variables": ["t1"], "k": 2, "blocks": [
      {"coeff": "1", "matrix": [["t1", "1"], ["0", "q7"]]}]})") == "bad-entry");
    CHECK(parse_code(R"({"variables": ["t1"], "k": 2, "blocks": [
      {"coeff": "0", "matrix": [["t1", "1"], ["0", "1"]]}]})") == "zero-coefficient");
    CHECK(parse_code(R"({"variables": ["t1"], "k": 3, "blocks": [
      {"coeff": "1", "matrix": [["t1", "1"], ["0", "1"]]}]})") == "bad-order");
    RelationSpec empty;
    empty.k = 1;
    CHECK_THROWS_AS(check_minor_relation(empty), UsageError);
}

TEST_CASE("relations among chord diagrams")
{
    ChordDiagram d = parse_chord_diagram(fixture("s5.json"));
    MultiPoly one(1, d.nvars());
    CHECK(check_diagram_relation({{one, d}, {-one, d}}).holds);
    RelationVerdict alone = check_diagram_relation({{one, d}});
    CHECK_FALSE(alone.holds);
    REQUIRE(alone.first_nonzero);
    CHECK(alone.first_nonzero->value == parse_poly("-t2^2", d.names(), d.nvars()));
    // swapping the sides of a chord gives the same weight
    CHECK(check_diagram_relation({{one, d}, {-one, swap_sides(d, "c1")}}).holds);
}

TEST_CASE("block determinant expansion")
{
    CHECK(block_expansion_check(60, 5).ok());
    // m = 1 row, the single column 1: (-1)^(1 + 1)
    CHECK(block_expansion_sign({0}, 1) == 1);
    CHECK(block_expansion_sign({1}, 1) == -1);
    CHECK(block_expansion_sign({0, 1}, 2) == 1);
    CHECK(block_expansion_sign({0, 2}, 2) == -1);
}

TEST_CASE("a vanishing minor combination kills every completion")
{
    // if sum_i c_i det(A_i|S) = 0 for all S, the block determinants combine to 0
    RelationSpec spec = builtin_five_row_spec(data_dir());
    std::mt19937_64 rng(17);
    size_t n = spec.blocks[0].matrix.cols();
    size_t rows = spec.blocks[0].matrix.rows();
    for (int trial = 0; trial < 3; ++trial) {
        PolyMatrix m(n - rows, n - spec.fixed, spec.nvars());
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t c = 0; c < m.cols(); ++c)
                m.set(r, c, random_poly(rng, spec.nvars(), 2, 0, 1, false));
        MultiPoly total = MultiPoly::zero(spec.nvars());
        for (const auto& b : spec.blocks)
            total += b.coeff * block_expansion(b.matrix, spec.fixed, m);
        CHECK(total.is_zero());
    }
}
