#include "singcat/ring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace singcat {

std::string CertifiedSubideal::justification_tag() const {
  switch (justification) {
    case Justification::jacobian: return "jacobian";
    case Justification::user_asserted: return "user-asserted";
    case Justification::explicit_certificates: return "explicit-certificates";
  }
  return "unknown";
}

namespace {

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m, std::vector<std::size_t> rows,
                       std::vector<std::size_t> cols, const AmbientPtr& amb) {
  if (rows.empty()) return Polynomial::constant(amb, 1);
  if (rows.size() == 1) return m[rows[0]][cols[0]];
  Polynomial det = Polynomial::zero(amb);
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (m[rows[0]][cols[k]].is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) sub_cols.push_back(cols[j]);
    Polynomial minor = determinant(m, sub_rows, sub_cols, amb);
    Polynomial contrib = m[rows[0]][cols[k]] * minor;
    det = (k % 2 == 0) ? det + contrib : det - contrib;
  }
  return det;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i-- > 0) {
      if (idx[i] + (k - i) < n + 0) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace

Ideal jacobian_ideal(const RingPresentation& ring) {
  const Ideal& rel = ring.relations();
  if (rel.generators().empty())
    throw HypothesisError("jacobian_ideal requires a nonempty relation ideal");
  const AmbientPtr& amb = ring.ambient();
  const std::size_t n = amb->nvars();
  const std::size_t k = rel.generators().size();

  GroebnerBasis rel_gb = buchberger(rel);
  if (rel_gb.is_unit_ideal())
    throw HypothesisError("relations generate the unit ideal (zero ring)");
  unsigned dim = krull_dimension(rel_gb);
  std::size_t height = n - dim;
  if (height > k) {
    throw HypothesisError(
        "height " + std::to_string(height) + " exceeds the number of relations " +
        std::to_string(k) + "; presentation rejected as non-equidimensional");
  }

  std::vector<std::vector<Polynomial>> jac(k, std::vector<Polynomial>(n, Polynomial::zero(amb)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) jac[i][j] = rel.generators()[i].derivative(j);

  std::vector<Polynomial> gens;
  for_each_combination(k, height, [&](const std::vector<std::size_t>& rows) {
    for_each_combination(n, height, [&](const std::vector<std::size_t>& cols) {
      Polynomial minor = determinant(jac, rows, cols, amb);
      if (!minor.is_zero()) gens.push_back(std::move(minor));
    });
  });
  for (const auto& g : rel.generators()) gens.push_back(g);
  return Ideal(amb, std::move(gens));
}

CertifiedSubideal certified_jacobian(const RingPresentation& ring, bool inclusion_asserted) {
  CertifiedSubideal sub;
  sub.ideal = jacobian_ideal(ring);
  sub.justification = inclusion_asserted ? CertifiedSubideal::Justification::jacobian
                                         : CertifiedSubideal::Justification::user_asserted;
  sub.evidence.push_back(inclusion_asserted
                             ? "jacobian ideal; inclusion in the stable annihilator asserted "
                               "for this equicharacteristic setting"
                             : "jacobian ideal; inclusion in the stable annihilator is a "
                               "user assertion (flag not set)");
  return sub;
}

bool in_maximal_ideal(const Polynomial& x, const RingPresentation& ring) {
  GroebnerBasis gb = buchberger(ring.relations());
  return normal_form(x, gb).constant_coefficient() == 0;
}

AlphaResult alpha_exponent(const Polynomial& x, const CertifiedSubideal& subideal,
                           const RingPresentation& ring, std::optional<unsigned> cap) {
  GroebnerBasis rel_gb = buchberger(ring.relations());
  Polynomial x_red = normal_form(x, rel_gb);
  if (x_red.constant_coefficient() != 0)
    throw HypothesisError("alpha_exponent requires an element of the maximal ideal");
  if (x_red.is_zero()) {
    // zero element: annihilates at the first power
    AlphaResult res;
    res.exponent = 1;
    res.cap = cap.value_or(1);
    res.semantics = ring.semantics_tag();
    auto m = ideal_member(x, subideal.ideal.plus(ring.relations()), true);
    res.certificate = m.certificate;
    return res;
  }

  MembershipTarget target = make_membership_target(ring, subideal.ideal);
  unsigned effective_cap;
  if (cap) {
    effective_cap = *cap;
  } else {
    auto loewy = loewy_length(ring, subideal.ideal);
    effective_cap = loewy ? std::max(1u, *loewy) : 32u;
  }

  AlphaResult res;
  res.cap = effective_cap;
  res.semantics = target.tag;
  Polynomial power = Polynomial::constant(ring.ambient(), 1);
  for (unsigned n = 1; n <= effective_cap; ++n) {
    power = power * x;
    if (normal_form(power, target.gb).is_zero()) {
      res.exponent = n;
      auto m = ideal_member(power, target.effective, true);
      if (!m.member) throw Error("internal: membership flipped between basis and certificate path");
      res.certificate = m.certificate;
      return res;
    }
  }
  return res;  // NOT_FOUND(cap)
}

std::optional<unsigned> loewy_length(const RingPresentation& ring, const Ideal& subideal) {
  MembershipTarget target = make_membership_target(ring, subideal);
  auto len = quotient_length(target.gb);
  if (!len) return std::nullopt;
  for (unsigned n = 0; n <= *len + 1; ++n) {
    bool all_in = true;
    Ideal degree_n = maximal_ideal_power(ring.ambient(), n);
    for (const auto& g : degree_n.generators()) {
      if (!normal_form(g, target.gb).is_zero()) {
        all_in = false;
        break;
      }
    }
    if (all_in) return n;
  }
  return std::nullopt;  // quotient is not local (finite length, m not nilpotent)
}

NonzerodivisorResult is_nonzerodivisor(const Polynomial& x, const RingPresentation& ring) {
  NonzerodivisorResult res;
  if (x.is_zero()) {
    res.note = "zero is a zerodivisor in a nonzero ring";
    return res;
  }
  GroebnerBasis rel_gb = buchberger(ring.relations());
  Polynomial x_red = normal_form(x, rel_gb);
  if (x_red.is_zero()) {
    res.note = "element is zero in R";
    return res;
  }
  if (x_red.constant_coefficient() != 0) {
    res.unit = true;
    res.note = "unit (nonzero constant term); not accepted for bounds";
  }
  res.nonzerodivisor = ideal_equal(ideal_quotient(ring.relations(), x), ring.relations());
  return res;
}

bool is_regular_sequence(const std::vector<Polynomial>& xs, const RingPresentation& ring) {
  if (xs.empty()) throw HypothesisError("regular sequence test needs a nonempty list");
  Ideal current = ring.relations();
  for (const auto& x : xs) {
    if (!ideal_equal(ideal_quotient(current, x), current)) return false;
    current = current.plus(x);
  }
  return !buchberger(current).is_unit_ideal();  // full quotient must be nonzero
}

RingPresentation quotient_ring(const RingPresentation& ring, const std::vector<Polynomial>& xs) {
  AmbientPtr amb = ring.ambient();
  std::vector<Polynomial> relations = ring.relations().generators();
  std::vector<Polynomial> pending;
  for (const auto& x : xs) pending.push_back(x.in_ambient(amb));

  // Eliminate unit-multiple-of-variable generators; append the rest.
  for (std::size_t i = 0; i < pending.size(); ++i) {
    Polynomial x = pending[i];
    if (x.is_zero()) continue;
    bool is_var = x.nterms() == 1 && x.terms()[0].mono.total_degree() == 1;
    if (!is_var) {
      relations.push_back(x);
      continue;
    }
    std::size_t var = x.terms()[0].mono.support()[0];
    std::vector<std::string> new_vars;
    std::vector<int> down(amb->nvars(), -1);
    for (std::size_t v = 0; v < amb->nvars(); ++v) {
      if (v == var) continue;
      down[v] = static_cast<int>(new_vars.size());
      new_vars.push_back(amb->vars[v]);
    }
    AmbientPtr next = make_ambient(amb->field, new_vars);
    auto project = [&](const Polynomial& p) { return p.substitute_zero(var).mapped(next, down); };
    std::vector<Polynomial> next_rel;
    for (const auto& r : relations) next_rel.push_back(project(r));
    for (std::size_t j = i + 1; j < pending.size(); ++j) pending[j] = project(pending[j]);
    relations = std::move(next_rel);
    amb = next;
  }

  for (const auto& r : relations)
    if (!r.is_zero() && r.is_constant())
      throw HypothesisError("quotient is the zero ring");
  RingPresentation q = RingPresentation::make(amb, std::move(relations));
  if (!q.relations().generators().empty() && buchberger(q.relations()).is_unit_ideal())
    throw HypothesisError("quotient is the zero ring");
  return q;
}

namespace {

struct PatternMatch {
  std::string name;
  unsigned dim;
};

// Literal ADE shapes: every term a pure power or the designated mixed term,
// distinct variables, all ambient variables used.
std::optional<PatternMatch> match_table(const Polynomial& f, std::size_t nvars) {
  struct Part {
    std::vector<std::pair<std::size_t, int>> exps;  // (var, exponent), len 1 or 2
  };
  std::vector<Part> parts;
  for (const auto& t : f.terms()) {
    Part p;
    for (std::size_t v = 0; v < t.mono.nvars(); ++v)
      if (t.mono.exponent(v)) p.exps.push_back({v, t.mono.exponent(v)});
    if (p.exps.empty() || p.exps.size() > 2) return std::nullopt;
    parts.push_back(std::move(p));
  }

  std::vector<std::pair<std::size_t, int>> pure;              // (var, exp)
  std::vector<std::array<std::pair<std::size_t, int>, 2>> mixed;
  for (const auto& p : parts) {
    if (p.exps.size() == 1) pure.push_back(p.exps[0]);
    else mixed.push_back({p.exps[0], p.exps[1]});
  }

  auto all_vars_once = [&](bool allow_shared_mixed_var, std::size_t shared) {
    std::vector<int> count(nvars, 0);
    for (auto [v, e] : pure) {
      (void)e;
      count[v]++;
    }
    for (const auto& m : mixed)
      for (auto [v, e] : m) {
        (void)e;
        count[v]++;
      }
    for (std::size_t v = 0; v < nvars; ++v) {
      int expected = (allow_shared_mixed_var && v == shared) ? 2 : 1;
      if (count[v] != expected) return false;
    }
    return true;
  };

  if (mixed.empty()) {
    // Candidates: A_e (one power >= 2, rest squares) or E6/E8 (3 + 4, 3 + 5).
    std::vector<int> nonsquare;
    for (std::size_t i = 0; i < pure.size(); ++i)
      if (pure[i].second != 2) nonsquare.push_back(static_cast<int>(i));
    if (!all_vars_once(false, 0)) return std::nullopt;
    for (auto [v, e] : pure)
      if (e < 2) return std::nullopt;
    if (nonsquare.empty()) return PatternMatch{"A1", 0};
    if (nonsquare.size() == 1) {
      int e = pure[static_cast<std::size_t>(nonsquare[0])].second;
      return PatternMatch{"A" + std::to_string(e - 1), 0};
    }
    if (nonsquare.size() == 2) {
      int e1 = pure[static_cast<std::size_t>(nonsquare[0])].second;
      int e2 = pure[static_cast<std::size_t>(nonsquare[1])].second;
      if (e1 > e2) std::swap(e1, e2);
      if (e1 == 3 && e2 == 4) return PatternMatch{"E6", 0};
      if (e1 == 3 && e2 == 5) return PatternMatch{"E8", 0};
    }
    return std::nullopt;
  }
  if (mixed.size() != 1) return std::nullopt;

  // D_e: v0^2*v1 + v1^{e-1} + squares; E7: v0^3 + v0*v1^3 + squares.
  auto [m0, m1] = std::pair{mixed[0][0], mixed[0][1]};
  auto try_shapes = [&](std::pair<std::size_t, int> a,
                        std::pair<std::size_t, int> b) -> std::optional<PatternMatch> {
    // a, b are the two factors of the mixed term in some orientation.
    for (const auto& [pv, pe] : pure) {
      if (a.second == 2 && b.second == 1 && pv == b.first && pe >= 3) {
        // x^2 y + y^{e-1}: every other pure term must be a square.
        bool ok = true;
        for (const auto& [qv, qe] : pure)
          if (qv != pv && qe != 2) ok = false;
        if (ok && all_vars_once(true, b.first))
          return PatternMatch{"D" + std::to_string(pe + 1), 0};
      }
      if (a.second == 1 && b.second == 3 && pv == a.first && pe == 3) {
        // x^3 + x y^3
        bool ok = true;
        for (const auto& [qv, qe] : pure)
          if (qv != pv && qe != 2) ok = false;
        if (ok && all_vars_once(true, a.first)) return PatternMatch{"E7", 0};
      }
    }
    return std::nullopt;
  };
  if (auto r = try_shapes(m0, m1)) return r;
  if (auto r = try_shapes(m1, m0)) return r;
  return std::nullopt;
}

}  // namespace

DsgLookup dsg_dimension_lookup(const RingPresentation& ring, const DsgAssertions& assertions) {
  if (auto it = assertions.find(ring.spec_string()); it != assertions.end())
    return DsgLookup{it->second, "user"};

  if (ring.is_regular_presentation()) return DsgLookup{0, "regular (zero category)"};
  if (!ring.is_hypersurface()) return DsgLookup{std::nullopt, "unknown"};

  const Polynomial& f = ring.hypersurface_potential();
  const std::size_t nvars = ring.ambient()->nvars();
  int order = f.total_degree() >= 0 ? f.terms().back().mono.total_degree() : -1;
  for (const auto& t : f.terms()) order = std::min(order, t.mono.total_degree());
  if (order <= 0) return DsgLookup{std::nullopt, "unknown"};
  if (order == 1) return DsgLookup{0, "regular (zero category)"};

  // Countable-type entry: a single quadric term over exactly two variables,
  // one of them unused.
  if (nvars == 2 && f.nterms() == 1) {
    const Monomial& m = f.terms()[0].mono;
    auto sup = m.support();
    if (sup.size() == 1 && m.exponent(sup[0]) == 2)
      return DsgLookup{1, "table:countable-quadric"};
  }

  if (auto match = match_table(f, nvars)) return DsgLookup{match->dim, "table:" + match->name};
  return DsgLookup{std::nullopt, "unknown"};
}

}  // namespace singcat
