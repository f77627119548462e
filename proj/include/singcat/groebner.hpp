#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "singcat/gb_engine.hpp"
#include "singcat/ideal.hpp"

namespace singcat {

/// Reduced Groebner basis: monic, no term divisible by another element's
/// lead, sorted by ascending lead. Unique for (ideal, order).
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> basis;
  Ideal source;
  AmbientPtr ambient;  // source ambient re-ordered to `order`

  bool is_unit_ideal() const {
    return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
  }
  std::vector<Monomial> lead_monomials() const;
};

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order);
GroebnerBasis buchberger(const Ideal& ideal);  // ambient order

/// Remainder with no term divisible by any lead of G; idempotent and linear.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// f == sum coeff_i * generator_i, checked by direct expansion.
struct MembershipCertificate {
  Polynomial element;
  std::vector<std::pair<Polynomial, std::size_t>> combination;
  bool verify(const std::vector<Polynomial>& generators) const;
};

struct MembershipResult {
  bool member = false;
  std::optional<MembershipCertificate> certificate;
};

MembershipResult ideal_member(const Polynomial& f, const Ideal& ideal, bool want_certificate = false);
/// Membership against a precomputed basis (no certificate path).
bool ideal_member(const Polynomial& f, const GroebnerBasis& gb);

bool ideal_equal(const Ideal& a, const Ideal& b);

/// Colon ideal (I : f) = { g | g*f in I }, via intersection with (f).
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f);

/// Number of standard monomials of S/I; nullopt when infinite.
std::optional<unsigned long> quotient_length(const Ideal& ideal);
std::optional<unsigned long> quotient_length(const GroebnerBasis& gb);

/// Krull dimension of S/I from the lead-term ideal; requires I proper.
unsigned krull_dimension(const Ideal& ideal);
unsigned krull_dimension(const GroebnerBasis& gb);

struct ModuleMembership {
  bool member = false;
  std::optional<std::vector<Polynomial>> combination;  // over the given generators
};

/// Membership of v in the submodule of S^r spanned by gens, decided by a
/// module Groebner basis under position-over-term order. Certificates are
/// re-checked by expansion before being returned.
ModuleMembership module_member(const VecPoly& v, const std::vector<VecPoly>& gens,
                               bool want_certificate = true);

}  // namespace singcat
