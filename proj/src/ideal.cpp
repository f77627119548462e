#include "singcat/ideal.hpp"

#include <functional>

namespace singcat {

Ideal::Ideal(AmbientPtr ambient, std::vector<Polynomial> gens) : ambient_(std::move(ambient)) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.ambient()->same_ring(*ambient_)) throw AmbientError("generator in a different ring");
    gens_.push_back(g.ambient()->order == ambient_->order ? std::move(g) : g.in_ambient(ambient_));
  }
}

Ideal Ideal::plus(const Ideal& o) const {
  if (!ambient_->same_ring(*o.ambient_)) throw AmbientError("ideal sum across rings");
  std::vector<Polynomial> gens = gens_;
  for (const auto& g : o.gens_) gens.push_back(g);
  return Ideal(ambient_, std::move(gens));
}

Ideal Ideal::plus(const Polynomial& g) const {
  std::vector<Polynomial> gens = gens_;
  gens.push_back(g);
  return Ideal(ambient_, std::move(gens));
}

Ideal Ideal::times(const Ideal& o) const {
  if (!ambient_->same_ring(*o.ambient_)) throw AmbientError("ideal product across rings");
  std::vector<Polynomial> gens;
  gens.reserve(gens_.size() * o.gens_.size());
  for (const auto& a : gens_)
    for (const auto& b : o.gens_) gens.push_back(a * b);
  return Ideal(ambient_, std::move(gens));
}

Ideal Ideal::power(unsigned e) const {
  if (e == 0) return Ideal(ambient_, {Polynomial::constant(ambient_, 1)});
  Ideal r = *this;
  for (unsigned i = 1; i < e; ++i) r = r.times(*this);
  return r;
}

Ideal Ideal::in_ambient(const AmbientPtr& target) const {
  std::vector<Polynomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.in_ambient(target));
  return Ideal(target, std::move(gens));
}

Ideal Ideal::mapped(const AmbientPtr& target, const std::vector<int>& var_map) const {
  std::vector<Polynomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.mapped(target, var_map));
  return Ideal(target, std::move(gens));
}

Ideal maximal_ideal_power(const AmbientPtr& a, unsigned n) {
  std::vector<Polynomial> gens;
  const std::size_t nv = a->nvars();
  Monomial m(nv);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned left) {
    if (var + 1 == nv) {
      m.set_exponent(var, static_cast<int>(left));
      gens.push_back(Polynomial::monomial(a, m, Scalar(1)));
      m.set_exponent(var, 0);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m.set_exponent(var, static_cast<int>(e));
      rec(var + 1, left - e);
    }
    m.set_exponent(var, 0);
  };
  if (nv == 0) {
    if (n == 0) gens.push_back(Polynomial::constant(a, 1));
    return Ideal(a, std::move(gens));
  }
  rec(0, n);
  return Ideal(a, std::move(gens));
}

}  // namespace singcat
