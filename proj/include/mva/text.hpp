#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mva/poly.hpp"

namespace mva {

// Variable naming for rendering and parsing. Index k (1-based) renders as
// names[k-1] when present, otherwise as prefix + k. The spelling prefix + k
// is always accepted on input as an alias.
struct VarNames {
    std::vector<std::string> names;
    std::string prefix = "t";

    static VarNames defaults(int n, const std::string& prefix = "t");
    std::string name(int k) const;
    std::optional<int> lookup(const std::string& ident) const;
    int count() const { return static_cast<int>(names.size()); }
};

std::string rational_text(const Rational& q);
Rational parse_rational(const std::string& s);

std::string monomial_text(const Monomial& m, const VarNames& v);
std::string to_text(const MultiPoly& p, const VarNames& v);
// The largest monomial dividing every term pulled out front: "x*y*(1 - y + y^2)".
std::string to_text_factored(const MultiPoly& p, const VarNames& v);
std::string to_latex(const MultiPoly& p, const VarNames& v);

nlohmann::json to_json(const MultiPoly& p, const VarNames& v);
MultiPoly poly_from_json(const nlohmann::json& j, const VarNames& v, int nvars);

// Polynomial syntax: sums/differences/products of rationals and variables,
// parentheses, integer powers of anything, and rational powers of monomials
// such as t1^(1/2) or y^(-2). Division by a polynomial must be exact.
MultiPoly parse_poly(const std::string& text, const VarNames& v, int nvars);

}  // namespace mva
