#pragma once

#include <vector>

#include "singcat/ring_presentation.hpp"

namespace singcat {

struct MultiplicityConfig {
  unsigned power_cap = 12;      // largest n for which ell(R/I^{n+1}) is computed
  unsigned window = 3;          // consecutive agreements of the d-th difference
  unsigned reduction_cap = 10;  // largest k tried for I^{k+1} = Q*I^k
};

struct MultiplicityResult {
  unsigned long value = 0;
  unsigned dimension = 0;
  std::vector<unsigned long> lengths;  // ell(R/I^{n+1}) for n = 0,1,...
};

/// Hilbert-Samuel multiplicity e(I) of an m-primary ideal of R: d! times the
/// leading coefficient of n -> ell(R/I^{n+1}), read off once the d-th finite
/// difference stabilizes for `window` consecutive values. d = dim R.
MultiplicityResult hilbert_samuel_multiplicity(const RingPresentation& ring, const Ideal& ideal,
                                               const MultiplicityConfig& config = {});

struct ReductionResult {
  unsigned long value = 0;        // ell(R/Q)
  unsigned reduction_index = 0;   // first k with I^{k+1} = Q*I^k
  bool cohen_macaulay_asserted = false;
};

/// Multiplicity via a verified reduction Q of I: checks I^{k+1} = Q*I^k for
/// some k <= cap and returns ell(R/Q). Requires Q inside I, generated by
/// dim R elements, and a user assertion that R is Cohen-Macaulay.
ReductionResult multiplicity_via_reduction(const RingPresentation& ring, const Ideal& ideal,
                                           const Ideal& reduction, bool cohen_macaulay_asserted,
                                           const MultiplicityConfig& config = {});

}  // namespace singcat
