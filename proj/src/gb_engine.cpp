#include "singcat/gb_engine.hpp"

#include <algorithm>
#include <numeric>

namespace singcat {

VecPoly vec_zero(const AmbientPtr& a, std::size_t rank) {
  return VecPoly(rank, Polynomial::zero(a));
}

bool vec_is_zero(const VecPoly& v) {
  return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

VecPoly vec_add(const VecPoly& a, const VecPoly& b) {
  VecPoly r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

VecPoly vec_sub(const VecPoly& a, const VecPoly& b) {
  VecPoly r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
  return r;
}

VecPoly vec_scale(const VecPoly& v, const Polynomial& c) {
  VecPoly r;
  r.reserve(v.size());
  for (const auto& p : v) r.push_back(p * c);
  return r;
}

VecPoly vec_times_term(const VecPoly& v, const Monomial& m, const Scalar& c) {
  VecPoly r;
  r.reserve(v.size());
  for (const auto& p : v) r.push_back(p.times_term(m, c));
  return r;
}

ModuleLead module_lead(const VecPoly& v) {
  for (std::size_t pos = 0; pos < v.size(); ++pos) {
    if (!v[pos].is_zero()) {
      const Term& t = v[pos].leading_term();
      return ModuleLead{pos, t.mono, t.coeff};
    }
  }
  throw Error("zero vector has no leading term");
}

GBEngine::GBEngine(AmbientPtr ambient, std::size_t rank, bool track)
    : ambient_(std::move(ambient)), rank_(rank), track_(track) {}

void GBEngine::add_generator(VecPoly g) {
  if (computed_) throw Error("generators must be added before compute()");
  if (g.size() != rank_) throw AmbientError("generator rank mismatch");
  for (auto& p : g) {
    if (!p.ambient()->same_ring(*ambient_)) throw AmbientError("generator in a different ring");
    if (!(p.ambient()->order == ambient_->order)) p = p.in_ambient(ambient_);
  }
  gens_.push_back(std::move(g));
}

VecPoly GBEngine::reduce_by(const std::vector<std::size_t>& idxs, VecPoly v,
                            std::vector<Polynomial>* quotients) const {
  const Field& field = ambient_->field;
  VecPoly rem = vec_zero(ambient_, rank_);
  while (!vec_is_zero(v)) {
    ModuleLead lt = module_lead(v);
    bool reduced = false;
    for (std::size_t k : idxs) {
      const ModuleLead& bl = leads_[k];
      if (bl.pos == lt.pos && bl.mono.divides(lt.mono)) {
        Monomial qm = lt.mono.quotient_by(bl.mono);
        Scalar qc = field.div(lt.coeff, bl.coeff);
        v = vec_sub(v, vec_times_term(basis_[k], qm, qc));
        if (quotients)
          (*quotients)[k] = (*quotients)[k] + Polynomial::monomial(ambient_, qm, qc);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      Polynomial t = Polynomial::monomial(ambient_, lt.mono, lt.coeff);
      rem[lt.pos] = rem[lt.pos] + t;
      v[lt.pos] = v[lt.pos] - t;
    }
  }
  return rem;
}

VecPoly GBEngine::reduce(VecPoly v, std::vector<Polynomial>* quotients) const {
  if (quotients) quotients->assign(basis_.size(), Polynomial::zero(ambient_));
  std::vector<std::size_t> all(basis_.size());
  std::iota(all.begin(), all.end(), 0);
  return reduce_by(all, std::move(v), quotients);
}

void GBEngine::insert_basis_element(VecPoly h, std::vector<Polynomial> rep) {
  ModuleLead lt = module_lead(h);
  Scalar inv = ambient_->field.inverse(lt.coeff);
  if (!ambient_->field.is_one(lt.coeff)) {
    Polynomial c = Polynomial::constant(ambient_, inv);
    h = vec_scale(h, c);
    if (track_)
      for (auto& r : rep) r = r * c;
  }
  lt.coeff = Scalar(1);
  basis_.push_back(std::move(h));
  leads_.push_back(std::move(lt));
  if (track_) reps_.push_back(std::move(rep));
  update_pairs(basis_.size() - 1);
}

void GBEngine::update_pairs(std::size_t t) {
  // Gebauer-Moller update at rank 1; plain same-position pairs otherwise.
  const ModuleLead& ht = leads_[t];
  std::vector<Pair> cand;
  for (std::size_t i = 0; i < t; ++i) {
    if (leads_[i].pos != ht.pos) continue;
    cand.push_back(Pair{i, t, ht.pos, Monomial::lcm(leads_[i].mono, ht.mono)});
  }
  if (rank_ != 1) {
    for (auto& p : cand) pairs_.push_back(std::move(p));
    return;
  }

  std::vector<Pair> kept;
  for (std::size_t a = 0; a < cand.size(); ++a) {
    bool coprime = leads_[cand[a].i].mono.coprime_with(ht.mono);
    bool dominated = false;
    if (!coprime) {
      for (std::size_t b = a + 1; b < cand.size() && !dominated; ++b)
        if (cand[b].lcm.divides(cand[a].lcm) && !(cand[a].lcm == cand[b].lcm)) dominated = true;
      for (const auto& k : kept)
        if (dominated) break;
        else if (k.lcm.divides(cand[a].lcm)) dominated = true;
    }
    if (coprime || !dominated) kept.push_back(cand[a]);
  }

  // Chain criterion against surviving old pairs.
  std::vector<Pair> next;
  for (auto& p : pairs_) {
    Monomial l_it = Monomial::lcm(leads_[p.i].mono, ht.mono);
    Monomial l_jt = Monomial::lcm(leads_[p.j].mono, ht.mono);
    bool drop = ht.mono.divides(p.lcm) && !(l_it == p.lcm) && !(l_jt == p.lcm);
    if (!drop) next.push_back(std::move(p));
  }
  // Product criterion: coprime new pairs are discarded after serving in the
  // divisibility pruning above.
  for (auto& p : kept)
    if (!leads_[p.i].mono.coprime_with(ht.mono)) next.push_back(std::move(p));
  pairs_ = std::move(next);
}

std::size_t GBEngine::select_pair() const {
  // Normal strategy: minimal lcm (degree, then order, then indices).
  const MonomialOrder& order = ambient_->order;
  std::size_t best = 0;
  for (std::size_t k = 1; k < pairs_.size(); ++k) {
    const Pair &a = pairs_[k], &b = pairs_[best];
    int da = a.lcm.total_degree(), db = b.lcm.total_degree();
    if (da != db) {
      if (da < db) best = k;
      continue;
    }
    if (a.pos != b.pos) {
      if (a.pos < b.pos) best = k;
      continue;
    }
    int c = order.compare(a.lcm, b.lcm);
    if (c < 0 || (c == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = k;
  }
  return best;
}

void GBEngine::compute() {
  if (computed_) return;
  computed_ = true;

  std::vector<std::size_t> all;
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    if (vec_is_zero(gens_[j])) continue;
    std::vector<Polynomial> q;
    if (track_) q.assign(basis_.size(), Polynomial::zero(ambient_));
    all.resize(basis_.size());
    std::iota(all.begin(), all.end(), 0);
    VecPoly r = reduce_by(all, gens_[j], track_ ? &q : nullptr);
    if (vec_is_zero(r)) continue;
    std::vector<Polynomial> rep;
    if (track_) {
      rep.assign(gens_.size(), Polynomial::zero(ambient_));
      rep[j] = Polynomial::constant(ambient_, 1);
      for (std::size_t k = 0; k < q.size(); ++k)
        for (std::size_t g = 0; g < gens_.size(); ++g)
          rep[g] = rep[g] - q[k] * reps_[k][g];
    }
    insert_basis_element(std::move(r), std::move(rep));
  }

  while (!pairs_.empty()) {
    std::size_t sel = select_pair();
    Pair p = pairs_[sel];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(sel));

    const ModuleLead &li = leads_[p.i], &lj = leads_[p.j];
    Monomial ui = p.lcm.quotient_by(li.mono);
    Monomial uj = p.lcm.quotient_by(lj.mono);
    VecPoly s = vec_sub(vec_times_term(basis_[p.i], ui, Scalar(1)),
                        vec_times_term(basis_[p.j], uj, Scalar(1)));
    if (vec_is_zero(s)) continue;

    std::vector<Polynomial> q;
    if (track_) q.assign(basis_.size(), Polynomial::zero(ambient_));
    all.resize(basis_.size());
    std::iota(all.begin(), all.end(), 0);
    VecPoly r = reduce_by(all, std::move(s), track_ ? &q : nullptr);
    if (vec_is_zero(r)) continue;

    std::vector<Polynomial> rep;
    if (track_) {
      rep.assign(gens_.size(), Polynomial::zero(ambient_));
      for (std::size_t g = 0; g < gens_.size(); ++g) {
        rep[g] = reps_[p.i][g].times_term(ui, Scalar(1)) - reps_[p.j][g].times_term(uj, Scalar(1));
        for (std::size_t k = 0; k < q.size(); ++k) rep[g] = rep[g] - q[k] * reps_[k][g];
      }
    }
    insert_basis_element(std::move(r), std::move(rep));
  }

  finalize();
}

void GBEngine::finalize() {
  // Minimalize: scan by ascending lead, drop anything an earlier kept lead divides.
  std::vector<std::size_t> idx(basis_.size());
  std::iota(idx.begin(), idx.end(), 0);
  const MonomialOrder& order = ambient_->order;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (leads_[a].pos != leads_[b].pos) return leads_[a].pos < leads_[b].pos;
    int c = order.compare(leads_[a].mono, leads_[b].mono);
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<std::size_t> kept;
  for (std::size_t k : idx) {
    bool divisible = false;
    for (std::size_t j : kept) {
      if (leads_[j].pos == leads_[k].pos && leads_[j].mono.divides(leads_[k].mono)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) kept.push_back(k);
  }

  // Tail-reduce each kept element by the others; leads are untouched.
  std::vector<VecPoly> new_basis;
  std::vector<ModuleLead> new_leads;
  std::vector<std::vector<Polynomial>> new_reps;
  for (std::size_t k : kept) {
    std::vector<std::size_t> others;
    for (std::size_t j : kept)
      if (j != k) others.push_back(j);
    std::vector<Polynomial> q;
    if (track_) q.assign(basis_.size(), Polynomial::zero(ambient_));
    VecPoly r = reduce_by(others, basis_[k], track_ ? &q : nullptr);
    if (track_) {
      std::vector<Polynomial> rep = reps_[k];
      for (std::size_t j : others)
        if (!q[j].is_zero())
          for (std::size_t g = 0; g < gens_.size(); ++g) rep[g] = rep[g] - q[j] * reps_[j][g];
      new_reps.push_back(std::move(rep));
    }
    new_leads.push_back(module_lead(r));
    new_basis.push_back(std::move(r));
  }
  basis_ = std::move(new_basis);
  leads_ = std::move(new_leads);
  reps_ = std::move(new_reps);
}

std::optional<std::vector<Polynomial>> GBEngine::member_combination(const VecPoly& v) const {
  if (!track_) throw Error("member_combination requires a tracking engine");
  std::vector<Polynomial> q;
  VecPoly r = reduce(v, &q);
  if (!vec_is_zero(r)) return std::nullopt;
  std::vector<Polynomial> comb(gens_.size(), Polynomial::zero(ambient_));
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (q[k].is_zero()) continue;
    for (std::size_t g = 0; g < gens_.size(); ++g) comb[g] = comb[g] + q[k] * reps_[k][g];
  }
  return comb;
}

}  // namespace singcat
