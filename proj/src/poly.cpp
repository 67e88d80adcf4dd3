#include "mva/poly.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace mva {

Monomial Monomial::s(int k, int s_exp)
{
    if (k < 1)
        throw UsageError("variable index must be >= 1");
    Monomial m;
    if (s_exp != 0)
        m.e_.emplace_back(k, s_exp);
    return m;
}

int Monomial::exponent(int k) const
{
    for (const auto& [v, e] : e_)
        if (v == k)
            return e;
    return 0;
}

int Monomial::total() const
{
    int t = 0;
    for (const auto& p : e_)
        t += p.second;
    return t;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    size_t i = 0, j = 0;
    while (i < e_.size() || j < o.e_.size()) {
        if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
            r.e_.push_back(e_[i++]);
        } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
            r.e_.push_back(o.e_[j++]);
        } else {
            int s = e_[i].second + o.e_[j].second;
            if (s != 0)
                r.e_.emplace_back(e_[i].first, s);
            ++i;
            ++j;
        }
    }
    return r;
}

Monomial Monomial::inverse() const
{
    Monomial r = *this;
    for (auto& p : r.e_)
        p.second = -p.second;
    return r;
}

Monomial Monomial::pow(int n) const
{
    if (n == 0)
        return {};
    Monomial r = *this;
    for (auto& p : r.e_)
        p.second *= n;
    return r;
}

int Monomial::lex_compare(const Monomial& a, const Monomial& b)
{
    size_t i = 0, j = 0;
    while (i < a.e_.size() || j < b.e_.size()) {
        int va = i < a.e_.size() ? a.e_[i].first : std::numeric_limits<int>::max();
        int vb = j < b.e_.size() ? b.e_[j].first : std::numeric_limits<int>::max();
        int v = std::min(va, vb);
        int ea = va == v ? a.e_[i].second : 0;
        int eb = vb == v ? b.e_[j].second : 0;
        if (ea != eb)
            return ea < eb ? -1 : 1;
        if (va == v)
            ++i;
        if (vb == v)
            ++j;
    }
    return 0;
}

bool Monomial::graded_less(const Monomial& a, const Monomial& b)
{
    int ta = a.total(), tb = b.total();
    if (ta != tb)
        return ta < tb;
    return lex_compare(a, b) > 0;
}

int merged_context(int a, int b)
{
    if (a == 0)
        return b;
    if (b == 0 || a == b)
        return a;
    throw UsageError("polynomials from different variable contexts (" + std::to_string(a) + " vs " +
                     std::to_string(b) + " variables)");
}

MultiPoly::MultiPoly(const Rational& c, int nvars) : n_(nvars)
{
    if (c != 0)
        terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c, int nvars)
{
    if (nvars > 0 && m.max_var() > nvars)
        throw UsageError("variable index exceeds context");
    MultiPoly p = zero(nvars);
    if (c != 0)
        p.terms_.emplace(m, c);
    return p;
}

MultiPoly MultiPoly::with_nvars(int n) const
{
    if (n > 0 && max_var() > n)
        throw UsageError("polynomial uses more variables than the requested context");
    MultiPoly p = *this;
    p.n_ = n;
    return p;
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const
{
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::sum_of_coefficients() const
{
    Rational s = 0;
    for (const auto& [m, c] : terms_)
        s += c;
    return s;
}

std::pair<Monomial, Rational> MultiPoly::lex_leading() const
{
    if (terms_.empty())
        throw UsageError("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (Monomial::lex_compare(it->first, best->first) > 0)
            best = it;
    return *best;
}

int MultiPoly::min_exponent(int k) const
{
    int r = std::numeric_limits<int>::max();
    for (const auto& [m, c] : terms_)
        r = std::min(r, m.exponent(k));
    return r;
}

int MultiPoly::max_exponent(int k) const
{
    int r = std::numeric_limits<int>::min();
    for (const auto& [m, c] : terms_)
        r = std::max(r, m.exponent(k));
    return r;
}

int MultiPoly::max_var() const
{
    int r = 0;
    for (const auto& [m, c] : terms_)
        r = std::max(r, m.max_var());
    return r;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    n_ = merged_context(n_, o.n_);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    n_ = merged_context(n_, o.n_);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    MultiPoly r = MultiPoly::zero(merged_context(a.n_, b.n_));
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const
{
    if (c == 0)
        return zero(n_);
    MultiPoly r = *this;
    for (auto& [m, v] : r.terms_)
        v *= c;
    return r;
}

MultiPoly MultiPoly::times(const Monomial& mono) const
{
    MultiPoly r = zero(n_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m * mono, c);
    return r;
}

MultiPoly MultiPoly::rename_vars(const std::map<int, int>& map, int nvars) const
{
    MultiPoly r = zero(nvars);
    for (const auto& [m, c] : terms_) {
        Monomial nm;
        for (const auto& [v, e] : m.exps()) {
            auto it = map.find(v);
            nm = nm * Monomial::s(it == map.end() ? v : it->second, e);
        }
        r.add_term(nm, c);
    }
    return r.with_nvars(nvars);
}

MultiPoly div_exact(const MultiPoly& a, const MultiPoly& b)
{
    if (b.is_zero())
        throw UsageError("division by the zero polynomial");
    int ctx = merged_context(a.nvars(), b.nvars());
    MultiPoly q = MultiPoly::zero(ctx);
    if (a.is_zero())
        return q;

    std::set<int> vars;
    for (const auto& [m, c] : a.terms())
        for (const auto& p : m.exps())
            vars.insert(p.first);
    for (const auto& [m, c] : b.terms())
        for (const auto& p : m.exps())
            vars.insert(p.first);
    std::map<int, std::pair<int, int>> box;
    for (int v : vars)
        box[v] = {a.min_exponent(v) - b.min_exponent(v), a.max_exponent(v) - b.max_exponent(v)};

    auto [lb, lbc] = b.lex_leading();
    MultiPoly r = a.with_nvars(ctx);
    while (!r.is_zero()) {
        auto [lr, lrc] = r.lex_leading();
        Monomial qm = lr * lb.inverse();
        for (const auto& [v, range] : box) {
            int e = qm.exponent(v);
            if (e < range.first || e > range.second)
                throw DivisionError("polynomial is not exactly divisible", r);
        }
        Rational qc = lrc / lbc;
        q.add_term(qm, qc);
        r -= b.times(qm).scaled(qc);
    }
    return q;
}

bool divides(const MultiPoly& b, const MultiPoly& a)
{
    try {
        div_exact(a, b);
        return true;
    } catch (const DivisionError&) {
        return false;
    }
}

MultiPoly homogeneous_part(const MultiPoly& a, const Rational& d)
{
    MultiPoly r = MultiPoly::zero(a.nvars());
    Rational sd = d * 2;
    for (const auto& [m, c] : a.terms())
        if (Rational(m.total()) == sd)
            r.add_term(m, c);
    return r;
}

std::vector<int> s_degrees(const MultiPoly& a)
{
    std::set<int> d;
    for (const auto& [m, c] : a.terms())
        d.insert(m.total());
    return {d.begin(), d.end()};
}

}  // namespace mva
