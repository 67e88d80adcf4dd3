#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mva/chord.hpp"
#include "mva/matrix.hpp"

namespace mva {

struct RelationBlock {
    MultiPoly coeff;
    PolyMatrix matrix;
};

// Blocks A_i share their shape. Minors of order k are taken over the first k
// rows; columns 0..fixed-1 belong to every minor (they are the columns where
// the completion M is zero).
struct RelationSpec {
    std::vector<std::string> variables;
    size_t k = 0;
    size_t fixed = 0;
    std::vector<RelationBlock> blocks;

    int nvars() const { return static_cast<int>(variables.size()); }
    VarNames names() const { return VarNames{variables, "t"}; }
    std::vector<std::vector<size_t>> subsets() const;
};

struct MinorWitness {
    std::vector<size_t> subset;  // 0-based columns
    MultiPoly value;
};

struct RelationVerdict {
    bool holds = false;
    std::vector<MultiPoly> minor_vector;
    std::vector<std::vector<size_t>> subsets;
    std::optional<MinorWitness> first_nonzero;
};

RelationSpec relation_from_json(const nlohmann::json& j);
RelationSpec parse_relation(const std::string& text);
RelationSpec load_relation(const std::string& path);

RelationVerdict check_minor_relation(const RelationSpec& spec);

struct FourRowSuite {
    RelationSpec spec;
    std::vector<MultiPoly> first, second;  // minors of each block in subset order
    RelationVerdict verdict;
};
FourRowSuite builtin_four_row_suite(const std::string& data_dir);
RelationSpec builtin_five_row_spec(const std::string& data_dir);

RelationVerdict check_diagram_relation(const std::vector<std::pair<MultiPoly, ChordDiagram>>& terms);

// Block determinants. B stacks A (rows 0..m-1, columns 0..l-1) over M (the remaining
// rows, columns fixed..n-1), zero elsewhere. Expanding along A's rows,
//   det B = sum over m-subsets S of A's columns containing 0..fixed-1 of
//           sign(S) det(A|S) det(M|complement of S),
// with sign(S) = (-1)^(m(m+1)/2 + sum of the 1-based columns in S).
PolyMatrix assemble_block(const PolyMatrix& a, size_t fixed, const PolyMatrix& m);
int block_expansion_sign(const std::vector<size_t>& subset, size_t rows);
MultiPoly block_expansion(const PolyMatrix& a, size_t fixed, const PolyMatrix& m);

}  // namespace mva
