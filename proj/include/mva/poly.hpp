#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mva/errors.hpp"

namespace mva {

using Rational = mpq_class;

// A Laurent monomial in the half-step variables s_k = t_k^(1/2).
// Exponents are stored sparsely, sorted by variable index, never zero.
class Monomial {
public:
    Monomial() = default;

    static Monomial t(int k, int power = 1) { return s(k, 2 * power); }
    static Monomial s(int k, int s_exp);

    int exponent(int k) const;
    int total() const;
    int max_var() const { return e_.empty() ? 0 : e_.back().first; }
    bool is_one() const { return e_.empty(); }
    const std::vector<std::pair<int, int>>& exps() const { return e_; }

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(int n) const;

    bool operator==(const Monomial&) const = default;

    // graded order used for printing and map storage: lower total degree
    // first, then larger exponent of the lowest-indexed variable first
    static bool graded_less(const Monomial& a, const Monomial& b);
    // pure lexicographic comparison, variable 1 most significant
    static int lex_compare(const Monomial& a, const Monomial& b);

private:
    std::vector<std::pair<int, int>> e_;
};

struct GradedLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::graded_less(a, b); }
};

// Exact Laurent polynomial with rational coefficients. The variable count is a
// context tag: 0 means "context free" (plain constants) and adapts to any other.
class MultiPoly {
public:
    using Terms = std::map<Monomial, Rational, GradedLess>;

    MultiPoly() = default;
    static MultiPoly zero(int nvars) { MultiPoly p; p.n_ = nvars; return p; }
    MultiPoly(const Rational& c, int nvars = 0);
    MultiPoly(long c, int nvars = 0) : MultiPoly(Rational(c), nvars) {}
    MultiPoly(int c, int nvars = 0) : MultiPoly(Rational(c), nvars) {}

    static MultiPoly term(const Monomial& m, const Rational& c, int nvars = 0);
    static MultiPoly t(int k, int nvars = 0) { return term(Monomial::t(k), 1, nvars); }

    int nvars() const { return n_; }
    MultiPoly with_nvars(int n) const;
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    Rational constant_term() const;
    Rational sum_of_coefficients() const;

    // lexicographically largest term; precondition: nonzero
    std::pair<Monomial, Rational> lex_leading() const;
    int min_exponent(int k) const;
    int max_exponent(int k) const;
    int max_var() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Rational& c) const;
    MultiPoly times(const Monomial& m) const;

    // rename variable k to map[k]; unmapped variables stay
    MultiPoly rename_vars(const std::map<int, int>& map, int nvars) const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    void add_term(const Monomial& m, const Rational& c);

private:
    int n_ = 0;
    Terms terms_;
};

int merged_context(int a, int b);

struct DivisionError : std::runtime_error {
    DivisionError(const std::string& what, MultiPoly rem) : std::runtime_error(what), remainder(std::move(rem)) {}
    MultiPoly remainder;
};

// q with q*b == a exactly, or DivisionError carrying the remainder at the
// point where the quotient would leave the Newton box of a/b.
MultiPoly div_exact(const MultiPoly& a, const MultiPoly& b);
bool divides(const MultiPoly& b, const MultiPoly& a);

// terms of total t-degree exactly d (s-degree 2d)
MultiPoly homogeneous_part(const MultiPoly& a, const Rational& d);
// distinct total s-degrees present, ascending
std::vector<int> s_degrees(const MultiPoly& a);

}  // namespace mva
