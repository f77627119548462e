#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singcat/groebner.hpp"
#include "singcat/ideal.hpp"

namespace singcat {

/// Local-ring membership semantics. Quasi-homogeneous presentations decide
/// membership by plain polynomial arithmetic ("graded: exact"); otherwise
/// m-primary targets are decided after adjoining m^N for a computed N.
enum class Semantics { graded_exact, truncated };

/// R = k[vars]/(relations), with hypersurface bookkeeping when the relation
/// ideal has a single generator.
class RingPresentation {
 public:
  static RingPresentation make(const Field& field, std::vector<std::string> vars,
                               std::vector<Polynomial> relations);
  static RingPresentation make(AmbientPtr ambient, std::vector<Polynomial> relations);

  const AmbientPtr& ambient() const { return ambient_; }
  const Ideal& relations() const { return relations_; }
  bool is_regular_presentation() const { return relations_.generators().empty(); }
  bool is_hypersurface() const { return relations_.generators().size() == 1; }
  const Polynomial& hypersurface_potential() const;
  Semantics semantics() const { return semantics_; }
  std::string semantics_tag() const;
  std::string spec_string() const;  // canonical "QQ[x,y]/(...)"

 private:
  AmbientPtr ambient_;
  Ideal relations_;
  Semantics semantics_ = Semantics::graded_exact;
};

/// True when all polynomials are quasi-homogeneous for one common strictly
/// positive rational weight vector (decided exactly; a failed positivity
/// probe over the weight kernel conservatively reports false).
bool common_positive_weights(const std::vector<Polynomial>& polys, const AmbientPtr& ambient);

/// Effective ideal for deciding "x in J" with local semantics, together with
/// the tag recorded in reports.
struct MembershipTarget {
  Ideal effective;  // J + relations (+ m^N under truncated semantics)
  GroebnerBasis gb;
  std::string tag;                    // "graded: exact" / "truncated(N)" / "polynomial (target not m-primary)"
  std::optional<unsigned> truncation;
};

MembershipTarget make_membership_target(const RingPresentation& ring, const Ideal& subideal,
                                        std::optional<unsigned> truncation_override = {});

}  // namespace singcat
