#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "singcat/field.hpp"
#include "singcat/monomial.hpp"

namespace singcat {

/// The ambient polynomial ring: a coefficient field, named variables, and the
/// monomial order used for canonical term layout. Immutable and shareable.
struct Ambient {
  Field field;
  std::vector<std::string> vars;
  MonomialOrder order;

  std::size_t nvars() const { return vars.size(); }
  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }
  /// Same ring: field and variable list agree (order may differ).
  bool same_ring(const Ambient& o) const { return field == o.field && vars == o.vars; }
  bool operator==(const Ambient& o) const {
    return field == o.field && vars == o.vars && order == o.order;
  }
};

using AmbientPtr = std::shared_ptr<const Ambient>;

AmbientPtr make_ambient(Field field, std::vector<std::string> vars);
AmbientPtr make_ambient(Field field, std::vector<std::string> vars, MonomialOrder order);
/// Same ring, different canonical order.
AmbientPtr with_order(const AmbientPtr& a, MonomialOrder order);

struct Term {
  Monomial mono;
  Scalar coeff;
  bool operator==(const Term&) const = default;
};

/// Exact multivariate polynomial. Terms are kept strictly descending in the
/// ambient order with no zero coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;  // detached zero; only containers use this
  static Polynomial zero(AmbientPtr a);
  static Polynomial constant(AmbientPtr a, const Scalar& c);
  static Polynomial constant(AmbientPtr a, long c) { return constant(a, Scalar(c)); }
  static Polynomial variable(AmbientPtr a, std::size_t idx);
  static Polynomial monomial(AmbientPtr a, Monomial m, const Scalar& c);
  /// Builds canonical form from arbitrary (monomial, coeff) pairs.
  static Polynomial from_terms(AmbientPtr a, std::vector<Term> terms);

  const AmbientPtr& ambient() const { return ambient_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::size_t nterms() const { return terms_.size(); }

  /// Highest term under the ambient order; polynomial must be nonzero.
  const Term& leading_term() const;
  Scalar constant_coefficient() const;
  int total_degree() const;  // -1 for the zero polynomial
  std::vector<std::size_t> variables_used() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t var) const;
  /// Sets the given variable to zero (drops every term containing it).
  Polynomial substitute_zero(std::size_t var) const;

  /// Re-sorts into an ambient over the same field/vars with another order.
  Polynomial in_ambient(const AmbientPtr& target) const;
  /// Embeds into a larger variable set; var_map[i] = index of old var i.
  Polynomial mapped(const AmbientPtr& target, const std::vector<int>& var_map) const;

  std::string str() const;

  /// Mathematical equality (same field/vars; order-insensitive).
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  AmbientPtr ambient_;
  std::vector<Term> terms_;
};

/// Throws AmbientError unless both operands live in the same ring.
void require_same_ring(const Polynomial& a, const Polynomial& b);

}  // namespace singcat
