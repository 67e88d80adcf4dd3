#pragma once

#include "mva/poly.hpp"

namespace mva {

// Power series in u_1..u_n truncated at total degree `cap`. Terms are kept in a
// MultiPoly whose Monomial exponents are 2 * (u-exponent), so u_k shares the
// storage layout of t_k and degree bookkeeping matches homogeneous_part.
class TruncatedSeries {
public:
    TruncatedSeries(int cap, int nvars = 0);
    TruncatedSeries(const MultiPoly& p, int cap);

    int cap() const { return cap_; }
    const MultiPoly& poly() const { return p_; }
    MultiPoly part(int degree) const { return homogeneous_part(p_, degree); }
    bool is_zero() const { return p_.is_zero(); }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    bool operator==(const TruncatedSeries& o) const { return cap_ == o.cap_ && p_ == o.p_; }

private:
    int cap_;
    MultiPoly p_;
    void truncate();
};

// Substitute s_k = exp(u_k / 2), i.e. t_k = exp(u_k), and expand to total degree cap.
TruncatedSeries series_exp_substitute(const MultiPoly& a, int cap);

}  // namespace mva
