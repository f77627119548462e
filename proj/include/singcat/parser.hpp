#pragma once

#include <string>
#include <vector>

#include "singcat/polynomial.hpp"

namespace singcat {

/// Parses the polynomial grammar: integer or p/q coefficients, identifiers,
/// `+ - * ^` and parentheses; `^` binds tightest; no implicit multiplication.
/// Example: "x^3 + y^3 + x*y*z + w^2". Unknown variables are rejected.
Polynomial parse_polynomial(const std::string& text, const AmbientPtr& ambient);

struct ParsedRingSpec {
  Field field;
  std::vector<std::string> vars;
  std::vector<Polynomial> relations;  // in the ambient (grevlex by default)
  AmbientPtr ambient;
};

/// Parses "FIELD[v1,...,vk]/(g1,...,gm)" with FIELD in {QQ, F<p>}; relations
/// may be empty: "QQ[x]/()".
ParsedRingSpec parse_ring_spec(const std::string& text);

/// Comma-separated list of polynomials in a fixed ambient.
std::vector<Polynomial> parse_polynomial_list(const std::string& text, const AmbientPtr& ambient);

}  // namespace singcat
