#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "singcat/ring.hpp"

namespace singcat {

using Json = nlohmann::ordered_json;

/// Exact integer evaluation of omega = sum_i a_i * (prod_j m_j) / m_i.
long long omega(const std::vector<long long>& m, const std::vector<long long>& a);

/// sum d_i + n - 1 (all quotient dimensions known).
long long theorem_a_decomposition_bound(const std::vector<long long>& d);

/// omega * (d + 1) - 1.
long long theorem_c_bound(long long omega_value, long long d);

/// alpha * (d + 1) - 1.
long long isolated_singularity_bound(long long alpha, long long d);

/// 2 * loewy - 1.
long long loewy_comparison_bound(long long loewy);

/// e - 1.
long long multiplicity_comparison_bound(long long e);

struct Hypothesis {
  std::string text;
  bool checked = false;  // machine-checked vs explicitly asserted
};

struct BoundEntry {
  std::string name;
  long long value = 0;
  std::string citation;
  std::vector<Hypothesis> hypotheses;
  Json witness;

  unsigned asserted_count() const;
};

struct BoundReport {
  std::string ring_spec;
  std::string semantics;
  std::string field_note;
  Json subideal;
  Json candidates = Json::array();
  std::vector<BoundEntry> bounds;
  std::optional<BoundEntry> best;
  std::vector<std::string> annotations;
  bool singularity_category_vanishes = false;
  std::string status_note;

  Json to_json() const;
  std::string render_text() const;
};

struct BoundsConfig {
  unsigned candidate_degree_cap = 4;
  unsigned candidate_limit = 200;
  std::optional<unsigned> alpha_cap;
  unsigned max_sequence_length = 3;
  bool jacobian_inclusion_asserted = true;
  DsgAssertions dsg_assertions;
  MultiplicityConfig multiplicity;
};

/// Computes the certified subideal, searches candidate elements and regular
/// sequences, resolves quotient dimensions, and evaluates every applicable
/// bound; "best" is the minimum (ties broken by fewer asserted hypotheses).
BoundReport best_bound_report(const RingPresentation& ring, const BoundsConfig& config = {});

}  // namespace singcat
