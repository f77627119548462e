#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singcat/multiplicity.hpp"
#include "singcat/ring_presentation.hpp"

namespace singcat {

/// Subideal of the stable annihilator with recorded provenance. Bounds are
/// monotone in the subideal, so any certified subideal yields valid bounds.
struct CertifiedSubideal {
  enum class Justification { jacobian, user_asserted, explicit_certificates };
  Ideal ideal;
  Justification justification = Justification::user_asserted;
  std::vector<std::string> evidence;  // free-form provenance lines

  std::string justification_tag() const;
};

/// Ideal generated by the h-minors of the Jacobian matrix together with the
/// relations, h = #vars - dim(S/relations).
Ideal jacobian_ideal(const RingPresentation& ring);

/// jacobian_ideal wrapped with provenance; `inclusion_asserted` records that
/// the ambient hypotheses for jac R lying inside the stable annihilator hold.
CertifiedSubideal certified_jacobian(const RingPresentation& ring, bool inclusion_asserted);

struct AlphaResult {
  std::optional<unsigned> exponent;  // least n with x^n in the target; nullopt = NOT_FOUND(cap)
  unsigned cap = 0;
  std::optional<MembershipCertificate> certificate;
  std::string semantics;
};

/// Least n <= cap with x^n in (J + relations) under the ring's membership
/// semantics. Requires x in the maximal ideal (throws HypothesisError for
/// units). Default cap: the Loewy length of R/J when finite, else 32.
AlphaResult alpha_exponent(const Polynomial& x, const CertifiedSubideal& subideal,
                           const RingPresentation& ring, std::optional<unsigned> cap = {});

/// Least n with every degree-n monomial inside J + relations; nullopt when
/// the quotient has infinite length.
std::optional<unsigned> loewy_length(const RingPresentation& ring, const Ideal& subideal);

struct NonzerodivisorResult {
  bool nonzerodivisor = false;
  bool unit = false;
  std::string note;
};

/// (relations : x) == relations test; zero and units are flagged.
NonzerodivisorResult is_nonzerodivisor(const Polynomial& x, const RingPresentation& ring);

bool is_regular_sequence(const std::vector<Polynomial>& xs, const RingPresentation& ring);

/// R/(xs); when an x_i is (a unit multiple of) a variable, the variable is
/// eliminated from the presentation. Throws on the zero ring.
RingPresentation quotient_ring(const RingPresentation& ring, const std::vector<Polynomial>& xs);

/// User-supplied dimension assertions keyed by canonical ring spec string.
using DsgAssertions = std::map<std::string, unsigned>;

struct DsgLookup {
  std::optional<unsigned> dim;  // nullopt = UNKNOWN
  std::string source;           // "table:<name>", "regular (zero category)", "user", "unknown"
};

/// Literal normal-form lookup: ADE patterns (finite CM type, dim 0), the
/// one-unused-variable quadric over two variables (countable type, dim 1),
/// and regular presentations (zero category, reported as dim 0). Matching is
/// up to variable renaming and unit scaling of monomial coefficients only;
/// no right-equivalence computation. Unknown inputs are never guessed.
DsgLookup dsg_dimension_lookup(const RingPresentation& ring, const DsgAssertions& assertions = {});

/// True when the reduced constant term vanishes (element of m).
bool in_maximal_ideal(const Polynomial& x, const RingPresentation& ring);

}  // namespace singcat
