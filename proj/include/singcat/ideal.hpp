#pragma once

#include <vector>

#include "singcat/polynomial.hpp"

namespace singcat {

/// Finitely generated ideal of the ambient ring; zero generators are dropped.
class Ideal {
 public:
  Ideal() = default;
  Ideal(AmbientPtr ambient, std::vector<Polynomial> gens);
  static Ideal zero(AmbientPtr a) { return Ideal(std::move(a), {}); }

  const AmbientPtr& ambient() const { return ambient_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  Ideal plus(const Ideal& o) const;
  Ideal plus(const Polynomial& g) const;
  Ideal times(const Ideal& o) const;  // pairwise generator products
  Ideal power(unsigned e) const;
  Ideal in_ambient(const AmbientPtr& target) const;
  Ideal mapped(const AmbientPtr& target, const std::vector<int>& var_map) const;

 private:
  AmbientPtr ambient_;
  std::vector<Polynomial> gens_;
};

/// The maximal-ideal power m^n, generated by all degree-n monomials.
Ideal maximal_ideal_power(const AmbientPtr& a, unsigned n);

}  // namespace singcat
