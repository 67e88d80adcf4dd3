#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mva/poly.hpp"

namespace mva {

// Sparse matrix over MultiPoly with row and column labels.
class PolyMatrix {
public:
    using Row = std::map<size_t, MultiPoly>;

    PolyMatrix() = default;
    PolyMatrix(size_t rows, size_t cols, int nvars = 0);

    size_t rows() const { return rows_.size(); }
    size_t cols() const { return ncols_; }
    int nvars() const { return nvars_; }
    bool square() const { return rows() == cols(); }

    const MultiPoly& at(size_t i, size_t j) const;
    const Row& row(size_t i) const { return rows_.at(i); }
    void set(size_t i, size_t j, const MultiPoly& v);
    void add(size_t i, size_t j, const MultiPoly& v);
    void negate_row(size_t i);

    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }
    void set_row_labels(std::vector<std::string> labels);
    void set_col_labels(std::vector<std::string> labels);
    size_t row_of(const std::string& label) const;
    size_t col_of(const std::string& label) const;

    PolyMatrix without(size_t row, size_t col) const;
    PolyMatrix select(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const;
    static PolyMatrix from_dense(const std::vector<std::vector<MultiPoly>>& d, int nvars = 0);

    bool operator==(const PolyMatrix& o) const;

private:
    std::vector<Row> rows_;
    size_t ncols_ = 0;
    int nvars_ = 0;
    std::vector<std::string> row_labels_, col_labels_;
};

// Laplace expansion along rows sorted by sparsity, memoized on the set of
// remaining columns.
MultiPoly det(const PolyMatrix& m);
// Fraction-free (Bareiss) elimination with exact division.
MultiPoly det_bareiss(const PolyMatrix& m);

// k-element column subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<size_t>> column_subsets(size_t n, size_t k);
// Determinants of the first k rows restricted to every k-column subset, in
// lexicographic subset order. Subsets can be restricted to those containing
// the columns 0..fixed-1.
std::vector<MultiPoly> all_minors(const PolyMatrix& m, size_t k, size_t fixed = 0);
std::vector<std::vector<size_t>> minor_subsets(size_t cols, size_t k, size_t fixed = 0);

}  // namespace mva
