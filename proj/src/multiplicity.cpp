#include "singcat/multiplicity.hpp"

#include <sstream>

namespace singcat {

static unsigned long length_of(const Ideal& ideal, const char* what) {
  auto len = quotient_length(ideal);
  if (!len) throw HypothesisError(std::string(what) + " has infinite colength");
  return *len;
}

MultiplicityResult hilbert_samuel_multiplicity(const RingPresentation& ring, const Ideal& ideal,
                                               const MultiplicityConfig& config) {
  const Ideal& rel = ring.relations();
  auto base_len = quotient_length(ideal.plus(rel));
  if (!base_len) throw HypothesisError("ideal is not m-primary in R");
  unsigned d = rel.generators().empty() ? static_cast<unsigned>(ring.ambient()->nvars())
                                        : krull_dimension(rel);

  MultiplicityResult res;
  res.dimension = d;
  res.lengths.push_back(*base_len);
  if (d == 0) {
    res.value = length_of(rel, "R");  // ell(R) itself
    return res;
  }

  // d-th finite difference of ell(R/I^{n+1}) stabilizes at e(I).
  Ideal power = ideal;
  unsigned stable_run = 0;
  long long stable_value = -1;
  for (unsigned n = 1; n <= config.power_cap; ++n) {
    power = power.times(ideal);  // I^{n+1}
    res.lengths.push_back(length_of(power.plus(rel), "ideal power"));
    if (res.lengths.size() >= d + 1) {
      std::vector<long long> diff(res.lengths.begin(), res.lengths.end());
      for (unsigned k = 0; k < d; ++k)
        for (std::size_t i = diff.size() - 1; i > 0; --i) diff[i] -= diff[i - 1];
      long long current = diff.back();
      if (current == stable_value) {
        if (++stable_run >= config.window) {
          res.value = static_cast<unsigned long>(current);
          return res;
        }
      } else {
        stable_value = current;
        stable_run = 1;
      }
    }
  }
  std::ostringstream os;
  os << "Hilbert-Samuel function did not stabilize within cap " << config.power_cap
     << "; partial lengths:";
  for (auto l : res.lengths) os << " " << l;
  throw CapError(os.str());
}

ReductionResult multiplicity_via_reduction(const RingPresentation& ring, const Ideal& ideal,
                                           const Ideal& reduction, bool cohen_macaulay_asserted,
                                           const MultiplicityConfig& config) {
  const Ideal& rel = ring.relations();
  unsigned d = rel.generators().empty() ? static_cast<unsigned>(ring.ambient()->nvars())
                                        : krull_dimension(rel);
  if (reduction.generators().size() != d) {
    throw HypothesisError("reduction must be generated by dim R = " + std::to_string(d) +
                          " elements, got " + std::to_string(reduction.generators().size()));
  }
  GroebnerBasis ideal_gb = buchberger(ideal.plus(rel));
  for (const auto& q : reduction.generators())
    if (!normal_form(q, ideal_gb).is_zero())
      throw HypothesisError("reduction generator " + q.str() + " lies outside the ideal");

  ReductionResult res;
  res.cohen_macaulay_asserted = cohen_macaulay_asserted;
  bool verified = false;
  Ideal ideal_power = ideal.power(0);  // I^k, starting at k = 0
  for (unsigned k = 0; k <= config.reduction_cap; ++k) {
    Ideal lhs = ideal_power.times(ideal).plus(rel);          // I^{k+1} + rel
    Ideal rhs = reduction.times(ideal_power).plus(rel);      // Q*I^k + rel
    if (ideal_equal(lhs, rhs)) {
      res.reduction_index = k;
      verified = true;
      break;
    }
    ideal_power = ideal_power.times(ideal);
  }
  if (!verified)
    throw HypothesisError("reduction property I^{k+1} = Q*I^k not verified for k <= " +
                          std::to_string(config.reduction_cap));
  res.value = length_of(reduction.plus(rel), "R/Q");
  return res;
}

}  // namespace singcat
