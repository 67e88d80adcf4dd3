#include "mva/series.hpp"

#include <map>

namespace mva {

TruncatedSeries::TruncatedSeries(int cap, int nvars) : cap_(cap), p_(MultiPoly::zero(nvars))
{
    if (cap < 0)
        throw UsageError("series cap must be non-negative");
}

TruncatedSeries::TruncatedSeries(const MultiPoly& p, int cap) : cap_(cap), p_(p)
{
    if (cap < 0)
        throw UsageError("series cap must be non-negative");
    for (const auto& [m, c] : p.terms())
        for (const auto& [k, e] : m.exps())
            if (e < 0 || e % 2 != 0)
                throw UsageError("series terms need non-negative integer u-exponents");
    truncate();
}

void TruncatedSeries::truncate()
{
    MultiPoly kept = MultiPoly::zero(p_.nvars());
    for (const auto& [m, c] : p_.terms())
        if (m.total() <= 2 * cap_)
            kept.add_term(m, c);
    p_ = kept;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o)
{
    if (cap_ != o.cap_)
        throw UsageError("adding series with different caps");
    p_ += o.p_;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.cap_ != b.cap_)
        throw UsageError("multiplying series with different caps");
    TruncatedSeries r(a.cap_, merged_context(a.p_.nvars(), b.p_.nvars()));
    for (const auto& [ma, ca] : a.p_.terms())
        for (const auto& [mb, cb] : b.p_.terms())
            if (ma.total() + mb.total() <= 2 * a.cap_)
                r.p_.add_term(ma * mb, ca * cb);
    return r;
}

namespace {

// exp(s_exp * u_k / 2) up to degree cap
TruncatedSeries exp_of(int k, int s_exp, int cap, int nvars)
{
    MultiPoly p = MultiPoly::zero(nvars);
    Rational alpha(s_exp, 2);
    alpha.canonicalize();
    Rational coeff = 1;
    for (int j = 0; j <= cap; ++j) {
        p.add_term(Monomial::t(k, j), coeff);
        coeff *= alpha;
        coeff /= j + 1;
    }
    return TruncatedSeries(p, cap);
}

}  // namespace

TruncatedSeries series_exp_substitute(const MultiPoly& a, int cap)
{
    int n = a.nvars();
    std::map<std::pair<int, int>, TruncatedSeries> cache;
    TruncatedSeries sum(cap, n);
    for (const auto& [m, c] : a.terms()) {
        TruncatedSeries term(MultiPoly(c, n), cap);
        for (const auto& [k, e] : m.exps()) {
            auto key = std::make_pair(k, e);
            auto it = cache.find(key);
            if (it == cache.end())
                it = cache.emplace(key, exp_of(k, e, cap, n)).first;
            term = term * it->second;
        }
        sum += term;
    }
    return sum;
}

}  // namespace mva
