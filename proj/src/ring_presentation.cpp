#include "singcat/ring_presentation.hpp"

#include <algorithm>
#include <sstream>

namespace singcat {

namespace {

// Kernel basis of the rational matrix rows*w = 0, by Gaussian elimination.
std::vector<std::vector<Scalar>> kernel_basis(std::vector<std::vector<Scalar>> rows, std::size_t n) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Scalar inv = 1 / rows[r][c];
    for (std::size_t j = 0; j < n; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Scalar factor = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= factor * rows[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(n, Scalar(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k)
      v[static_cast<std::size_t>(pivot_col[k])] = -rows[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool strictly_positive(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x > 0; });
}

}  // namespace

bool common_positive_weights(const std::vector<Polynomial>& polys, const AmbientPtr& ambient) {
  const std::size_t n = ambient->nvars();
  if (n == 0) return true;
  std::vector<std::vector<Scalar>> rows;
  for (const auto& p : polys) {
    const auto& ts = p.terms();
    for (std::size_t k = 1; k < ts.size(); ++k) {
      std::vector<Scalar> row(n);
      for (std::size_t i = 0; i < n; ++i)
        row[i] = Scalar(ts[k].mono.exponent(i) - ts[0].mono.exponent(i));
      rows.push_back(std::move(row));
    }
  }
  auto basis = kernel_basis(std::move(rows), n);
  if (basis.empty()) return false;  // only w = 0 satisfies the constraints
  if (basis.size() > 8) basis.resize(8);

  // Probe sign combinations of the kernel basis for a strictly positive vector.
  for (unsigned mask = 0; mask < (1u << basis.size()); ++mask) {
    std::vector<Scalar> w(n, Scalar(0));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Scalar s = (mask >> k) & 1 ? Scalar(-1) : Scalar(1);
      for (std::size_t i = 0; i < n; ++i) w[i] += s * basis[k][i];
    }
    if (strictly_positive(w)) return true;
  }
  for (const auto& b : basis) {
    if (strictly_positive(b)) return true;
    std::vector<Scalar> neg(n);
    for (std::size_t i = 0; i < n; ++i) neg[i] = -b[i];
    if (strictly_positive(neg)) return true;
  }
  return false;
}

RingPresentation RingPresentation::make(const Field& field, std::vector<std::string> vars,
                                        std::vector<Polynomial> relations) {
  return make(make_ambient(field, std::move(vars)), std::move(relations));
}

RingPresentation RingPresentation::make(AmbientPtr ambient, std::vector<Polynomial> relations) {
  RingPresentation r;
  r.ambient_ = ambient;
  r.relations_ = Ideal(std::move(ambient), std::move(relations));
  r.semantics_ = common_positive_weights(r.relations_.generators(), r.ambient_)
                     ? Semantics::graded_exact
                     : Semantics::truncated;
  return r;
}

const Polynomial& RingPresentation::hypersurface_potential() const {
  if (!is_hypersurface()) throw HypothesisError("presentation is not a hypersurface");
  return relations_.generators()[0];
}

std::string RingPresentation::semantics_tag() const {
  return semantics_ == Semantics::graded_exact ? "graded: exact" : "truncated";
}

std::string RingPresentation::spec_string() const {
  std::ostringstream os;
  os << ambient_->field.name() << "[";
  for (std::size_t i = 0; i < ambient_->vars.size(); ++i) {
    if (i) os << ",";
    os << ambient_->vars[i];
  }
  os << "]/(";
  const auto& gens = relations_.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ", ";
    os << gens[i].str();
  }
  os << ")";
  return os.str();
}

MembershipTarget make_membership_target(const RingPresentation& ring, const Ideal& subideal,
                                        std::optional<unsigned> truncation_override) {
  Ideal base = subideal.plus(ring.relations());
  MembershipTarget target;
  if (ring.semantics() == Semantics::graded_exact) {
    target.effective = base;
    target.gb = buchberger(base);
    target.tag = "graded: exact";
    return target;
  }
  GroebnerBasis base_gb = buchberger(base);
  auto len = quotient_length(base_gb);
  if (!len) {
    // Truncation rule only applies to m-primary targets.
    target.effective = base;
    target.gb = std::move(base_gb);
    target.tag = "polynomial (target not m-primary; local semantics undecided)";
    return target;
  }
  unsigned truncation;
  if (truncation_override) {
    truncation = *truncation_override;
  } else {
    // Default: a computed Loewy bound + 1. Search the plain Loewy length of
    // the base ideal; *len bounds it whenever the quotient is local.
    unsigned loewy = static_cast<unsigned>(*len) + 1;
    for (unsigned m = 0; m <= *len; ++m) {
      bool all_in = true;
      Ideal degree_m = maximal_ideal_power(ring.ambient(), m);
      for (const auto& g : degree_m.generators()) {
        if (!normal_form(g, base_gb).is_zero()) {
          all_in = false;
          break;
        }
      }
      if (all_in) {
        loewy = m;
        break;
      }
    }
    truncation = loewy + 1;
  }
  target.effective = base.plus(maximal_ideal_power(ring.ambient(), truncation));
  target.gb = buchberger(target.effective);
  target.tag = "truncated(" + std::to_string(truncation) + ")";
  target.truncation = truncation;
  return target;
}

}  // namespace singcat
