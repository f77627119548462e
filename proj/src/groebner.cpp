#include "singcat/groebner.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace singcat {

std::vector<Monomial> GroebnerBasis::lead_monomials() const {
  std::vector<Monomial> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis) leads.push_back(g.leading_term().mono);
  return leads;
}

GroebnerBasis buchberger(const Ideal& ideal) { return buchberger(ideal, ideal.ambient()->order); }

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order) {
  AmbientPtr amb = with_order(ideal.ambient(), order);
  GBEngine engine(amb, 1, /*track=*/false);
  for (const auto& g : ideal.generators()) engine.add_generator({g.in_ambient(amb)});
  engine.compute();
  GroebnerBasis gb;
  gb.order = order;
  gb.source = ideal;
  gb.ambient = amb;
  gb.basis.reserve(engine.basis().size());
  for (const auto& v : engine.basis()) gb.basis.push_back(v[0]);
  return gb;
}

// Plain multivariate division against a monic basis.
static Polynomial divide_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                              const AmbientPtr& amb,
                              std::vector<Polynomial>* quotients = nullptr) {
  const Field& field = amb->field;
  if (quotients) quotients->assign(basis.size(), Polynomial::zero(amb));
  Polynomial p = f.in_ambient(amb);
  Polynomial rem = Polynomial::zero(amb);
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Term& bl = basis[k].leading_term();
      if (bl.mono.divides(lt.mono)) {
        Monomial qm = lt.mono.quotient_by(bl.mono);
        Scalar qc = field.div(lt.coeff, bl.coeff);
        p = p - basis[k].times_term(qm, qc);
        if (quotients) (*quotients)[k] = (*quotients)[k] + Polynomial::monomial(amb, qm, qc);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      Polynomial t = Polynomial::monomial(amb, lt.mono, lt.coeff);
      rem = rem + t;
      p = p - t;
    }
  }
  return rem;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!f.ambient()->same_ring(*gb.ambient)) throw AmbientError("normal_form across rings");
  Polynomial r = divide_full(f, gb.basis, gb.ambient);
  return r.in_ambient(f.ambient());
}

bool MembershipCertificate::verify(const std::vector<Polynomial>& generators) const {
  if (element.is_zero() && combination.empty()) return true;
  Polynomial acc = Polynomial::zero(element.ambient());
  for (const auto& [coeff, idx] : combination) {
    if (idx >= generators.size()) return false;
    acc = acc + coeff * generators[idx];
  }
  return acc == element;
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb).is_zero();
}

MembershipResult ideal_member(const Polynomial& f, const Ideal& ideal, bool want_certificate) {
  if (!f.ambient()->same_ring(*ideal.ambient())) throw AmbientError("ideal_member across rings");
  MembershipResult res;
  if (!want_certificate) {
    res.member = ideal_member(f, buchberger(ideal));
    return res;
  }
  GBEngine engine(ideal.ambient(), 1, /*track=*/true);
  for (const auto& g : ideal.generators()) engine.add_generator({g});
  engine.compute();
  auto comb = engine.member_combination({f});
  res.member = comb.has_value();
  if (comb) {
    MembershipCertificate cert;
    cert.element = f;
    for (std::size_t i = 0; i < comb->size(); ++i)
      if (!(*comb)[i].is_zero()) cert.combination.emplace_back((*comb)[i], i);
    if (!cert.verify(ideal.generators()))
      throw Error("internal: membership certificate failed to re-verify");
    res.certificate = std::move(cert);
  }
  return res;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!a.ambient()->same_ring(*b.ambient())) throw AmbientError("ideal_equal across rings");
  MonomialOrder order = a.ambient()->order;
  GroebnerBasis ga = buchberger(a, order);
  GroebnerBasis gb = buchberger(b.in_ambient(a.ambient()), order);
  if (ga.basis.size() != gb.basis.size()) return false;
  for (std::size_t i = 0; i < ga.basis.size(); ++i)
    if (!(ga.basis[i] == gb.basis[i])) return false;
  return true;
}

static std::string fresh_var_name(const Ambient& amb) {
  std::string name = "_t";
  while (amb.var_index(name) >= 0) name += "_";
  return name;
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw HypothesisError("ideal quotient by zero");
  const AmbientPtr& amb = ideal.ambient();
  if (!f.ambient()->same_ring(*amb)) throw AmbientError("ideal_quotient across rings");

  // I cap (f) by eliminating t from t*I + (1-t)*(f), then exact division by f.
  std::vector<std::string> ext_vars{fresh_var_name(*amb)};
  ext_vars.insert(ext_vars.end(), amb->vars.begin(), amb->vars.end());
  AmbientPtr ext = make_ambient(amb->field, ext_vars, MonomialOrder::lex(ext_vars.size()));
  std::vector<int> up(amb->nvars());
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = static_cast<int>(i + 1);

  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one = Polynomial::constant(ext, 1);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(t * g.mapped(ext, up));
  gens.push_back((one - t) * f.mapped(ext, up));
  GroebnerBasis gb = buchberger(Ideal(ext, std::move(gens)));

  std::vector<int> down(ext->nvars(), -1);
  for (std::size_t i = 0; i < amb->nvars(); ++i) down[i + 1] = static_cast<int>(i);
  std::vector<Polynomial> quotient_gens;
  for (const auto& g : gb.basis) {
    bool has_t = false;
    for (const auto& term : g.terms())
      if (term.mono.exponent(0) != 0) {
        has_t = true;
        break;
      }
    if (has_t) continue;
    Polynomial inter = g.mapped(amb, down);  // element of I cap (f)
    std::vector<Polynomial> q;
    Polynomial r = divide_full(inter, {f.in_ambient(amb)}, amb, &q);
    if (!r.is_zero()) throw Error("internal: intersection element not divisible by f");
    quotient_gens.push_back(q[0].in_ambient(amb));
  }
  return Ideal(amb, std::move(quotient_gens));
}

std::optional<unsigned long> quotient_length(const Ideal& ideal) {
  return quotient_length(buchberger(ideal));
}

std::optional<unsigned long> quotient_length(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) return 0;
  const std::size_t n = gb.ambient->nvars();
  std::vector<Monomial> leads = gb.lead_monomials();
  // Finite colength iff each variable has a pure lead power bounding the box.
  std::vector<int> box(n, -1);
  for (const auto& m : leads) {
    auto sup = m.support();
    if (sup.size() == 1) {
      int e = m.exponent(sup[0]);
      if (box[sup[0]] < 0 || e < box[sup[0]]) box[sup[0]] = e;
    }
    if (sup.empty()) return 0;  // unit lead
  }
  for (std::size_t i = 0; i < n; ++i)
    if (box[i] < 0) return std::nullopt;

  unsigned long long volume = 1;
  for (std::size_t i = 0; i < n; ++i) {
    volume *= static_cast<unsigned long long>(box[i]);
    if (volume > 50'000'000ULL) throw CapError("standard-monomial box too large to enumerate");
  }
  unsigned long count = 0;
  Monomial m(n);
  std::function<void(std::size_t)> rec = [&](std::size_t var) {
    if (var == n) {
      for (const auto& l : leads)
        if (l.divides(m)) return;
      ++count;
      return;
    }
    for (int e = 0; e < box[var]; ++e) {
      m.set_exponent(var, e);
      rec(var + 1);
    }
    m.set_exponent(var, 0);
  };
  rec(0);
  return count;
}

unsigned krull_dimension(const Ideal& ideal) { return krull_dimension(buchberger(ideal)); }

unsigned krull_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) throw HypothesisError("krull_dimension requires a proper ideal");
  const std::size_t n = gb.ambient->nvars();
  if (n > 24) throw CapError("too many variables for subset enumeration");
  std::vector<unsigned> supports;
  for (const auto& m : gb.lead_monomials()) {
    unsigned mask = 0;
    for (std::size_t v : m.support()) mask |= 1u << v;
    supports.push_back(mask);
  }
  unsigned best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (unsigned s : supports)
      if ((s & ~mask) == 0) {
        independent = false;
        break;
      }
    if (independent) best = std::max(best, static_cast<unsigned>(std::popcount(mask)));
  }
  return best;
}

ModuleMembership module_member(const VecPoly& v, const std::vector<VecPoly>& gens,
                               bool want_certificate) {
  if (v.empty()) throw AmbientError("module rank must be positive");
  AmbientPtr amb = v[0].ambient();
  for (const auto& g : gens)
    if (g.size() != v.size()) throw AmbientError("module generator rank mismatch");

  GBEngine engine(amb, v.size(), want_certificate);
  for (const auto& g : gens) engine.add_generator(g);
  engine.compute();

  ModuleMembership res;
  if (!want_certificate) {
    res.member = vec_is_zero(engine.reduce(v));
    return res;
  }
  auto comb = engine.member_combination(v);
  res.member = comb.has_value();
  if (comb) {
    VecPoly acc = vec_zero(amb, v.size());
    for (std::size_t g = 0; g < gens.size(); ++g)
      acc = vec_add(acc, vec_scale(gens[g], (*comb)[g]));
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!(acc[i] == v[i])) throw Error("internal: module combination failed to re-verify");
    res.combination = std::move(comb);
  }
  return res;
}

}  // namespace singcat
