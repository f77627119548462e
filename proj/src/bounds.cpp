#include "singcat/bounds.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace singcat {

long long omega(const std::vector<long long>& m, const std::vector<long long>& a) {
  if (m.size() != a.size()) throw HypothesisError("omega: exponent lists must have equal length");
  if (m.empty()) throw HypothesisError("omega: empty exponent data");
  bool any = false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 1) throw HypothesisError("omega: every m_i must be positive");
    if (a[i] < 0) throw HypothesisError("omega: every a_i must be nonnegative");
    if (a[i] > 0) any = true;
  }
  if (!any) throw HypothesisError("omega: not all a_i may vanish");
  long long w = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    long long partial = a[i];
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != i) partial *= m[j];
    w += partial;
  }
  return w;
}

long long theorem_a_decomposition_bound(const std::vector<long long>& d) {
  if (d.empty()) throw HypothesisError("decomposition bound needs at least one element");
  long long sum = 0;
  for (long long v : d) {
    if (v < 0) throw HypothesisError("quotient dimension must be known and nonnegative");
    sum += v;
  }
  return sum + static_cast<long long>(d.size()) - 1;
}

long long theorem_c_bound(long long omega_value, long long d) {
  if (omega_value < 1 || d < 0) throw HypothesisError("theorem_c_bound needs omega >= 1, d >= 0");
  return omega_value * (d + 1) - 1;
}

long long isolated_singularity_bound(long long alpha, long long d) {
  if (alpha < 1 || d < 0) throw HypothesisError("isolated bound needs alpha >= 1, d >= 0");
  return alpha * (d + 1) - 1;
}

long long loewy_comparison_bound(long long loewy) {
  if (loewy < 0) throw HypothesisError("Loewy length must be finite and nonnegative");
  return 2 * loewy - 1;
}

long long multiplicity_comparison_bound(long long e) {
  if (e < 1) throw HypothesisError("multiplicity must be positive");
  return e - 1;
}

unsigned BoundEntry::asserted_count() const {
  unsigned n = 0;
  for (const auto& h : hypotheses)
    if (!h.checked) ++n;
  return n;
}

static Json hypotheses_json(const std::vector<Hypothesis>& hs) {
  Json arr = Json::array();
  for (const auto& h : hs) {
    Json o;
    o["text"] = h.text;
    o["status"] = h.checked ? "checked" : "asserted";
    arr.push_back(o);
  }
  return arr;
}

Json BoundReport::to_json() const {
  Json j;
  j["ring"] = ring_spec;
  j["semantics"] = semantics;
  j["field_note"] = field_note;
  j["subideal"] = subideal;
  j["candidates"] = candidates;
  Json bs = Json::array();
  for (const auto& b : bounds) {
    Json o;
    o["name"] = b.name;
    o["value"] = b.value;
    o["citation"] = b.citation;
    o["hypotheses"] = hypotheses_json(b.hypotheses);
    o["witness"] = b.witness;
    bs.push_back(o);
  }
  j["bounds"] = bs;
  if (best) {
    j["best"] = Json{{"name", best->name}, {"value", best->value}};
  } else {
    j["best"] = nullptr;
  }
  j["singularity_category_vanishes"] = singularity_category_vanishes;
  j["annotations"] = annotations;
  j["status"] = status_note;
  return j;
}

std::string BoundReport::render_text() const {
  std::ostringstream os;
  os << "ring: " << ring_spec << "\n";
  os << "semantics: " << semantics << "\n";
  if (!field_note.empty()) os << "note: " << field_note << "\n";
  if (singularity_category_vanishes) {
    os << "singularity category vanishes (regular ring); dimension 0 by convention\n";
  }
  if (!subideal.is_null()) {
    os << "certified subideal (" << subideal.value("justification", std::string{}) << "): (";
    bool first = true;
    for (const auto& g : subideal.value("generators", Json::array())) {
      if (!first) os << ", ";
      os << g.get<std::string>();
      first = false;
    }
    os << ")\n";
  }
  for (const auto& b : bounds) {
    os << "  " << b.name << " = " << b.value << "    [" << b.citation << "]\n";
    for (const auto& h : b.hypotheses)
      os << "      - " << h.text << " (" << (h.checked ? "checked" : "asserted") << ")\n";
  }
  if (best)
    os << "best bound: " << best->value << " via " << best->name << "\n";
  else if (!status_note.empty())
    os << status_note << "\n";
  for (const auto& a : annotations) os << "annotation: " << a << "\n";
  return os.str();
}

namespace {

struct CandidateInfo {
  Polynomial element;
  std::optional<unsigned> alpha;
  std::optional<RingPresentation> quotient;
  DsgLookup lookup;
  bool nonzerodivisor = false;
};

Json certificate_json(const std::optional<MembershipCertificate>& cert) {
  if (!cert) return nullptr;
  Json arr = Json::array();
  for (const auto& [coeff, idx] : cert->combination)
    arr.push_back(Json{{"coefficient", coeff.str()}, {"generator_index", idx}});
  return Json{{"element", cert->element.str()}, {"combination", arr}};
}

std::vector<Hypothesis> base_hypotheses(const RingPresentation& ring, const BoundsConfig& config) {
  std::vector<Hypothesis> hs;
  hs.push_back({"certified subideal of the stable annihilator: Jacobian ideal, inclusion " +
                    std::string(config.jacobian_inclusion_asserted
                                    ? "asserted for the equicharacteristic setting"
                                    : "recorded as a plain user assertion"),
                false});
  if (ring.ambient()->field.is_prime_field()) {
    unsigned long p = ring.ambient()->field.characteristic();
    bool ok = p != 2 && p != 3 && p != 5;
    hs.push_back({"characteristic " + std::to_string(p) + " avoids {2,3,5}", ok});
  } else {
    hs.push_back({"characteristic zero", true});
    hs.push_back({"algebraically closed base field (rational certificates transfer)", false});
  }
  return hs;
}

}  // namespace

BoundReport best_bound_report(const RingPresentation& ring, const BoundsConfig& config) {
  BoundReport report;
  report.ring_spec = ring.spec_string();
  report.semantics = ring.semantics_tag();
  report.field_note = ring.ambient()->field.is_prime_field()
                          ? "computed over " + ring.ambient()->field.name()
                          : "rational data: membership certificates transfer to extension fields";

  // Knowledge-base annotation for the two-variable family x^3 +- y^b, b >= 6.
  if (ring.is_hypersurface() && ring.ambient()->nvars() == 2) {
    const Polynomial& f = ring.hypersurface_potential();
    if (f.nterms() == 2) {
      const auto& t0 = f.terms()[0].mono;
      const auto& t1 = f.terms()[1].mono;
      if (t0.support().size() == 1 && t1.support().size() == 1 &&
          t0.support()[0] != t1.support()[0]) {
        int e0 = t0.total_degree(), e1 = t1.total_degree();
        int lo = std::min(e0, e1), hi = std::max(e0, e1);
        if (lo == 3 && hi >= 6)
          report.annotations.push_back(
              "known exact value: this family (cube plus b-th power, b >= 6) has singularity "
              "category of dimension exactly 1 by the finite-type classification; recorded as "
              "knowledge, not computed");
      }
    }
  }

  if (ring.is_regular_presentation()) {
    report.singularity_category_vanishes = true;
    report.status_note = "regular presentation: no singular data; D_sg = 0";
    report.annotations.push_back(
        "zero category reported as dimension 0 by the literal infimum convention");
    return report;
  }

  CertifiedSubideal sub = certified_jacobian(ring, config.jacobian_inclusion_asserted);
  {
    Json gens = Json::array();
    for (const auto& g : sub.ideal.generators()) gens.push_back(g.str());
    report.subideal =
        Json{{"justification", sub.justification_tag()}, {"generators", gens}, {"evidence", sub.evidence}};
  }

  MembershipTarget target = make_membership_target(ring, sub.ideal);
  report.semantics = target.tag;
  if (target.gb.is_unit_ideal()) {
    report.singularity_category_vanishes = true;
    report.status_note = "Jacobian ideal is the unit ideal: smooth presentation; D_sg = 0";
    report.annotations.push_back(
        "zero category reported as dimension 0 by the literal infimum convention");
    return report;
  }

  auto target_len = quotient_length(target.gb);
  unsigned alpha_cap = config.alpha_cap.value_or(32);
  if (!config.alpha_cap && target_len) {
    auto loewy = loewy_length(ring, sub.ideal);
    if (loewy) alpha_cap = std::max(1u, *loewy);
  }

  // Candidate elements: variables first, then monomials by increasing degree.
  std::vector<Polynomial> elements;
  const AmbientPtr& amb = ring.ambient();
  for (std::size_t v = 0; v < amb->nvars(); ++v) elements.push_back(Polynomial::variable(amb, v));
  for (unsigned d = 2; d <= config.candidate_degree_cap; ++d) {
    Ideal degree_d = maximal_ideal_power(amb, d);
    for (const auto& mono : degree_d.generators()) {
      if (elements.size() >= config.candidate_limit) break;
      elements.push_back(mono);
    }
  }

  std::vector<CandidateInfo> variable_info(amb->nvars());
  std::optional<BoundEntry> corollary9;
  for (std::size_t idx = 0; idx < elements.size(); ++idx) {
    const Polynomial& x = elements[idx];
    CandidateInfo info;
    info.element = x;
    Json row;
    row["element"] = x.str();
    NonzerodivisorResult nzd = is_nonzerodivisor(x, ring);
    info.nonzerodivisor = nzd.nonzerodivisor && !nzd.unit;
    row["nonzerodivisor"] = nzd.nonzerodivisor;
    if (nzd.unit) row["note"] = nzd.note;
    if (info.nonzerodivisor) {
      Polynomial power = Polynomial::constant(amb, 1);
      for (unsigned n = 1; n <= alpha_cap && !info.alpha; ++n) {
        power = power * x;
        if (normal_form(power, target.gb).is_zero()) info.alpha = n;
      }
      row["alpha"] = info.alpha ? Json(*info.alpha)
                                : Json("NOT_FOUND(cap=" + std::to_string(alpha_cap) + ")");
      try {
        info.quotient = quotient_ring(ring, {x});
        info.lookup = dsg_dimension_lookup(*info.quotient, config.dsg_assertions);
        row["quotient"] = info.quotient->spec_string();
        row["dsg_dim"] = info.lookup.dim ? Json(*info.lookup.dim) : Json("UNKNOWN");
        row["dsg_source"] = info.lookup.source;
      } catch (const HypothesisError& e) {
        row["quotient"] = std::string("error: ") + e.what();
      }
    }
    report.candidates.push_back(row);
    if (idx < amb->nvars()) variable_info[idx] = info;

    if (info.nonzerodivisor && info.alpha && info.lookup.dim) {
      long long value = isolated_singularity_bound(*info.alpha, *info.lookup.dim);
      if (!corollary9 || value < corollary9->value) {
        BoundEntry entry;
        entry.name = "Corollary 9";
        entry.value = value;
        entry.citation = "dim D_sg(R) <= alpha(x) * (dim D_sg(R/xR) + 1) - 1, instantiating the "
                         "decomposition bound with one repeated witness";
        entry.hypotheses = base_hypotheses(ring, config);
        entry.hypotheses.push_back({"witness " + x.str() + " is a nonzerodivisor and a non-unit", true});
        auto cert = ideal_member(x.pow(*info.alpha), target.effective, true);
        entry.hypotheses.push_back(
            {"certified power " + x.str() + "^" + std::to_string(*info.alpha) +
                 " lies in the subideal",
             cert.member});
        entry.hypotheses.push_back({"dim D_sg(" + info.quotient->spec_string() +
                                        ") = " + std::to_string(*info.lookup.dim) + " [" +
                                        info.lookup.source + "]",
                                    info.lookup.source.rfind("table:", 0) == 0 ||
                                        info.lookup.source == "regular (zero category)"});
        entry.witness = Json{{"element", x.str()},
                             {"alpha", *info.alpha},
                             {"quotient", info.quotient->spec_string()},
                             {"dsg_dim", *info.lookup.dim},
                             {"dsg_source", info.lookup.source},
                             {"certificate", certificate_json(cert.certificate)}};
        corollary9 = std::move(entry);
      }
    }
  }
  if (corollary9) report.bounds.push_back(*corollary9);

  // Theorem A with pairwise-distinct variables whose product is certified.
  std::optional<BoundEntry> theorem_a;
  const std::size_t nv = amb->nvars();
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t j = i + 1; j < nv; ++j) {
      const CandidateInfo &ci = variable_info[i], &cj = variable_info[j];
      if (!ci.nonzerodivisor || !cj.nonzerodivisor || !ci.lookup.dim || !cj.lookup.dim) continue;
      Polynomial prod = ci.element * cj.element;
      if (!normal_form(prod, target.gb).is_zero()) continue;
      long long value = theorem_a_decomposition_bound(
          {static_cast<long long>(*ci.lookup.dim), static_cast<long long>(*cj.lookup.dim)});
      if (!theorem_a || value < theorem_a->value) {
        BoundEntry entry;
        entry.name = "Theorem A";
        entry.value = value;
        entry.citation = "dim D_sg(R) <= sum_i dim D_sg(R/x_iR) + n - 1";
        entry.hypotheses = base_hypotheses(ring, config);
        entry.hypotheses.push_back({"both witnesses are nonzerodivisor non-units", true});
        auto cert = ideal_member(prod, target.effective, true);
        entry.hypotheses.push_back({"certified product " + prod.str() + " lies in the subideal",
                                    cert.member});
        entry.hypotheses.push_back({"both quotient dimensions resolved", true});
        entry.witness = Json{{"elements", Json::array({ci.element.str(), cj.element.str()})},
                             {"dims", Json::array({*ci.lookup.dim, *cj.lookup.dim})},
                             {"certificate", certificate_json(cert.certificate)}};
        theorem_a = std::move(entry);
      }
    }
  }
  if (theorem_a) report.bounds.push_back(*theorem_a);

  // Theorem C over regular sequences of distinct variables (length >= 2).
  std::optional<BoundEntry> theorem_c;
  std::vector<std::size_t> vars_with_alpha;
  for (std::size_t v = 0; v < nv; ++v)
    if (variable_info[v].nonzerodivisor && variable_info[v].alpha) vars_with_alpha.push_back(v);
  unsigned max_len = std::min<unsigned>(config.max_sequence_length,
                                        static_cast<unsigned>(vars_with_alpha.size()));
  std::vector<std::size_t> seq;
  std::function<void(std::size_t, unsigned)> enumerate = [&](std::size_t start, unsigned want) {
    if (seq.size() == want) {
      std::vector<Polynomial> xs;
      std::vector<long long> m;
      for (std::size_t v : seq) {
        xs.push_back(variable_info[v].element);
        m.push_back(static_cast<long long>(*variable_info[v].alpha));
      }
      if (!is_regular_sequence(xs, ring)) return;
      std::optional<RingPresentation> quot_opt;
      try {
        quot_opt = quotient_ring(ring, xs);
      } catch (const HypothesisError&) {
        return;  // zero quotient
      }
      const RingPresentation& quot = *quot_opt;
      DsgLookup look = dsg_dimension_lookup(quot, config.dsg_assertions);
      if (!look.dim) return;
      // Grid-search the product exponents minimizing omega.
      std::optional<long long> best_omega;
      std::vector<long long> best_a;
      std::vector<long long> a(seq.size(), 0);
      std::function<void(std::size_t)> grid = [&](std::size_t pos) {
        if (pos == seq.size()) {
          if (std::all_of(a.begin(), a.end(), [](long long v) { return v == 0; })) return;
          Polynomial prod = Polynomial::constant(amb, 1);
          for (std::size_t k = 0; k < seq.size(); ++k)
            prod = prod * xs[k].pow(static_cast<unsigned>(a[k]));
          if (!normal_form(prod, target.gb).is_zero()) return;
          long long w = omega(m, a);
          if (!best_omega || w < *best_omega) {
            best_omega = w;
            best_a = a;
          }
          return;
        }
        for (a[pos] = 0; a[pos] <= m[pos]; ++a[pos]) grid(pos + 1);
        a[pos] = 0;
      };
      grid(0);
      if (!best_omega) return;
      long long value = theorem_c_bound(*best_omega, static_cast<long long>(*look.dim));
      if (theorem_c && value >= theorem_c->value) return;

      BoundEntry entry;
      entry.name = "Theorem C";
      entry.value = value;
      entry.citation =
          "dim D_sg(R) <= omega * (dim D_sg(R/xR) + 1) - 1 with omega = m_1...m_n "
          "(a_1/m_1 + ... + a_n/m_n)";
      entry.hypotheses = base_hypotheses(ring, config);
      std::string seq_str;
      for (std::size_t k = 0; k < xs.size(); ++k) seq_str += (k ? ", " : "") + xs[k].str();
      entry.hypotheses.push_back({"(" + seq_str + ") is a regular sequence on R", true});
      Json power_certs = Json::array();
      for (std::size_t k = 0; k < xs.size(); ++k) {
        auto cert = ideal_member(xs[k].pow(static_cast<unsigned>(m[k])), target.effective, true);
        power_certs.push_back(certificate_json(cert.certificate));
        entry.hypotheses.push_back({"certified power " + xs[k].str() + "^" + std::to_string(m[k]) +
                                        " lies in the subideal",
                                    cert.member});
      }
      Polynomial prod = Polynomial::constant(amb, 1);
      for (std::size_t k = 0; k < xs.size(); ++k)
        prod = prod * xs[k].pow(static_cast<unsigned>(best_a[k]));
      auto prod_cert = ideal_member(prod, target.effective, true);
      entry.hypotheses.push_back({"certified product " + prod.str() + " lies in the subideal",
                                  prod_cert.member});
      entry.hypotheses.push_back({"dim D_sg(" + quot.spec_string() + ") = " +
                                      std::to_string(*look.dim) + " [" + look.source + "]",
                                  look.source.rfind("table:", 0) == 0 ||
                                      look.source == "regular (zero category)"});
      entry.witness = Json{{"sequence", seq_str},
                           {"m", m},
                           {"a", best_a},
                           {"omega", *best_omega},
                           {"quotient", quot.spec_string()},
                           {"dsg_dim", *look.dim},
                           {"dsg_source", look.source},
                           {"power_certificates", power_certs},
                           {"product_certificate", certificate_json(prod_cert.certificate)}};
      theorem_c = std::move(entry);
      return;
    }
    for (std::size_t k = start; k < vars_with_alpha.size(); ++k) {
      seq.push_back(vars_with_alpha[k]);
      enumerate(k + 1, want);
      seq.pop_back();
    }
  };
  for (unsigned len = 2; len <= max_len; ++len) enumerate(0, len);
  if (theorem_c) report.bounds.push_back(*theorem_c);

  // Loewy and multiplicity comparisons are gated on an m-primary subideal.
  if (target_len) {
    auto loewy = loewy_length(ring, sub.ideal);
    if (loewy && *loewy > 0) {
      BoundEntry entry;
      entry.name = "Loewy comparison";
      entry.value = loewy_comparison_bound(static_cast<long long>(*loewy));
      entry.citation = "dim D_sg(R) <= 2*loewy(R/J) - 1";
      entry.hypotheses = base_hypotheses(ring, config);
      entry.hypotheses.push_back({"subideal is m-primary", true});
      entry.witness = Json{{"loewy_length", *loewy}};
      report.bounds.push_back(entry);
    }
    try {
      MultiplicityResult e = hilbert_samuel_multiplicity(ring, sub.ideal, config.multiplicity);
      BoundEntry entry;
      entry.name = "multiplicity comparison";
      entry.value = multiplicity_comparison_bound(static_cast<long long>(e.value));
      entry.citation = "dim D_sg(R) <= e(J) - 1";
      entry.hypotheses = base_hypotheses(ring, config);
      entry.hypotheses.push_back({"subideal is m-primary", true});
      entry.witness = Json{{"multiplicity", e.value}, {"lengths", e.lengths}};
      report.bounds.push_back(entry);
    } catch (const CapError& e) {
      report.annotations.push_back(std::string("multiplicity comparison skipped: ") + e.what());
    }
  }

  if (report.bounds.empty()) {
    report.status_note =
        "no applicable bound: no candidate produced both a certified power and a resolved "
        "quotient dimension (all d_i UNKNOWN), and the subideal is not m-primary";
  } else {
    const BoundEntry* best = &report.bounds[0];
    for (const auto& b : report.bounds) {
      if (b.value < best->value ||
          (b.value == best->value && b.asserted_count() < best->asserted_count()))
        best = &b;
    }
    report.best = *best;
    report.status_note = "computed";
  }
  report.annotations.push_back(
      "reported best is an upper bound for the infimum over all nonzerodivisors; the candidate "
      "search space is finite and configurable");
  return report;
}

}  // namespace singcat
