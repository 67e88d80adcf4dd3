#include "mva/matrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

namespace mva {

namespace {
const MultiPoly& zero_poly()
{
    static const MultiPoly z;
    return z;
}

std::vector<std::string> numbered(size_t n)
{
    std::vector<std::string> v;
    for (size_t i = 0; i < n; ++i)
        v.push_back(std::to_string(i + 1));
    return v;
}
}  // namespace

PolyMatrix::PolyMatrix(size_t rows, size_t cols, int nvars)
    : rows_(rows), ncols_(cols), nvars_(nvars), row_labels_(numbered(rows)), col_labels_(numbered(cols))
{
}

const MultiPoly& PolyMatrix::at(size_t i, size_t j) const
{
    if (i >= rows() || j >= ncols_)
        throw UsageError("matrix index out of range");
    auto it = rows_[i].find(j);
    return it == rows_[i].end() ? zero_poly() : it->second;
}

void PolyMatrix::set(size_t i, size_t j, const MultiPoly& v)
{
    if (i >= rows() || j >= ncols_)
        throw UsageError("matrix index out of range");
    nvars_ = merged_context(nvars_, v.nvars());
    if (v.is_zero())
        rows_[i].erase(j);
    else
        rows_[i][j] = v;
}

void PolyMatrix::add(size_t i, size_t j, const MultiPoly& v)
{
    set(i, j, at(i, j) + v);
}

void PolyMatrix::negate_row(size_t i)
{
    for (auto& [j, v] : rows_.at(i))
        v = -v;
}

namespace {
void check_bijective(const std::vector<std::string>& labels, size_t n)
{
    if (labels.size() != n)
        throw UsageError("label count does not match dimension");
    std::vector<std::string> s = labels;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw UsageError("duplicate matrix label");
}
}  // namespace

void PolyMatrix::set_row_labels(std::vector<std::string> labels)
{
    check_bijective(labels, rows());
    row_labels_ = std::move(labels);
}

void PolyMatrix::set_col_labels(std::vector<std::string> labels)
{
    check_bijective(labels, cols());
    col_labels_ = std::move(labels);
}

size_t PolyMatrix::row_of(const std::string& label) const
{
    auto it = std::find(row_labels_.begin(), row_labels_.end(), label);
    if (it == row_labels_.end())
        throw UsageError("no row labelled '" + label + "'");
    return static_cast<size_t>(it - row_labels_.begin());
}

size_t PolyMatrix::col_of(const std::string& label) const
{
    auto it = std::find(col_labels_.begin(), col_labels_.end(), label);
    if (it == col_labels_.end())
        throw UsageError("no column labelled '" + label + "'");
    return static_cast<size_t>(it - col_labels_.begin());
}

PolyMatrix PolyMatrix::select(const std::vector<size_t>& rs, const std::vector<size_t>& cs) const
{
    PolyMatrix r(rs.size(), cs.size(), nvars_);
    std::vector<long> colmap(ncols_, -1);
    for (size_t j = 0; j < cs.size(); ++j)
        colmap.at(cs[j]) = static_cast<long>(j);
    std::vector<std::string> rl, cl;
    for (size_t i = 0; i < rs.size(); ++i) {
        for (const auto& [j, v] : rows_.at(rs[i]))
            if (colmap[j] >= 0)
                r.rows_[i][static_cast<size_t>(colmap[j])] = v;
        rl.push_back(row_labels_[rs[i]]);
    }
    for (size_t j : cs)
        cl.push_back(col_labels_[j]);
    r.row_labels_ = rl;
    r.col_labels_ = cl;
    return r;
}

PolyMatrix PolyMatrix::without(size_t row, size_t col) const
{
    std::vector<size_t> rs, cs;
    for (size_t i = 0; i < rows(); ++i)
        if (i != row)
            rs.push_back(i);
    for (size_t j = 0; j < cols(); ++j)
        if (j != col)
            cs.push_back(j);
    return select(rs, cs);
}

PolyMatrix PolyMatrix::from_dense(const std::vector<std::vector<MultiPoly>>& d, int nvars)
{
    size_t nc = d.empty() ? 0 : d[0].size();
    PolyMatrix m(d.size(), nc, nvars);
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i].size() != nc)
            throw UsageError("ragged dense matrix");
        for (size_t j = 0; j < nc; ++j)
            m.set(i, j, d[i][j]);
    }
    return m;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const
{
    return ncols_ == o.ncols_ && rows_ == o.rows_;
}

namespace {

// Expands the rows `order` (top to bottom) over column masks.
class MaskExpander {
public:
    MaskExpander(const PolyMatrix& m, std::vector<size_t> order, int nvars)
        : m_(m), order_(std::move(order)), nvars_(nvars)
    {
        if (m.cols() > 63)
            throw UsageError("determinant expansion supports at most 63 columns");
    }

    const MultiPoly& det(uint64_t mask)
    {
        auto it = memo_.find(mask);
        if (it != memo_.end())
            return it->second;
        size_t depth = order_.size() - static_cast<size_t>(std::popcount(mask));
        MultiPoly acc = MultiPoly::zero(nvars_);
        if (mask == 0) {
            acc = MultiPoly(1, nvars_);
        } else {
            for (const auto& [c, v] : m_.row(order_[depth])) {
                uint64_t bit = uint64_t(1) << c;
                if (!(mask & bit))
                    continue;
                const MultiPoly& sub = det(mask & ~bit);
                if (sub.is_zero())
                    continue;
                int pos = std::popcount(mask & (bit - 1));
                MultiPoly term = v * sub;
                if (pos % 2)
                    acc -= term;
                else
                    acc += term;
            }
        }
        return memo_.emplace(mask, std::move(acc)).first->second;
    }

private:
    const PolyMatrix& m_;
    std::vector<size_t> order_;
    int nvars_;
    std::unordered_map<uint64_t, MultiPoly> memo_;
};

int permutation_sign(const std::vector<size_t>& p)
{
    int sign = 1;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        size_t len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0)
            sign = -sign;
    }
    return sign;
}

}  // namespace

MultiPoly det(const PolyMatrix& m)
{
    if (!m.square())
        throw UsageError("determinant of a non-square matrix");
    size_t n = m.rows();
    if (n == 0)
        return MultiPoly(1, m.nvars());
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return m.row(a).size() < m.row(b).size(); });
    MaskExpander ex(m, order, m.nvars());
    uint64_t all = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
    MultiPoly d = ex.det(all);
    return permutation_sign(order) < 0 ? -d : d;
}

MultiPoly det_bareiss(const PolyMatrix& m)
{
    if (!m.square())
        throw UsageError("determinant of a non-square matrix");
    size_t n = m.rows();
    int ctx = m.nvars();
    if (n == 0)
        return MultiPoly(1, ctx);
    std::vector<std::vector<MultiPoly>> a(n, std::vector<MultiPoly>(n, MultiPoly::zero(ctx)));
    for (size_t i = 0; i < n; ++i)
        for (const auto& [j, v] : m.row(i))
            a[i][j] = v;
    int sign = 1;
    MultiPoly prev(1, ctx);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && a[p][k].is_zero())
                ++p;
            if (p == n)
                return MultiPoly::zero(ctx);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = div_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            a[i][k] = MultiPoly::zero(ctx);
        }
        prev = a[k][k];
    }
    return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

std::vector<std::vector<size_t>> column_subsets(size_t n, size_t k)
{
    std::vector<std::vector<size_t>> out;
    if (k > n)
        return out;
    std::vector<size_t> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    for (;;) {
        out.push_back(cur);
        long i = static_cast<long>(k) - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + static_cast<size_t>(i))
            --i;
        if (i < 0)
            break;
        ++cur[static_cast<size_t>(i)];
        for (size_t j = static_cast<size_t>(i) + 1; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<std::vector<size_t>> minor_subsets(size_t cols, size_t k, size_t fixed)
{
    if (fixed > k || k > cols)
        throw UsageError("minor order exceeds matrix dimensions");
    std::vector<std::vector<size_t>> out;
    for (auto rest : column_subsets(cols - fixed, k - fixed)) {
        std::vector<size_t> s(fixed);
        std::iota(s.begin(), s.end(), 0);
        for (size_t c : rest)
            s.push_back(c + fixed);
        out.push_back(s);
    }
    return out;
}

std::vector<MultiPoly> all_minors(const PolyMatrix& m, size_t k, size_t fixed)
{
    if (k > m.rows() || k > m.cols())
        throw UsageError("minor order exceeds matrix dimensions");
    std::vector<size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    MaskExpander ex(m, order, m.nvars());
    std::vector<MultiPoly> out;
    for (const auto& s : minor_subsets(m.cols(), k, fixed)) {
        uint64_t mask = 0;
        for (size_t c : s)
            mask |= uint64_t(1) << c;
        out.push_back(ex.det(mask));
    }
    return out;
}

}  // namespace mva
