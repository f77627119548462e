#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "singcat/polynomial.hpp"

namespace singcat {

/// Element of the free module S^rank; component 0 has the highest priority in
/// the position-over-term order.
using VecPoly = std::vector<Polynomial>;

VecPoly vec_zero(const AmbientPtr& a, std::size_t rank);
bool vec_is_zero(const VecPoly& v);
VecPoly vec_add(const VecPoly& a, const VecPoly& b);
VecPoly vec_sub(const VecPoly& a, const VecPoly& b);
VecPoly vec_scale(const VecPoly& v, const Polynomial& c);
VecPoly vec_times_term(const VecPoly& v, const Monomial& m, const Scalar& c);

struct ModuleLead {
  std::size_t pos;
  Monomial mono;
  Scalar coeff;
};

/// Leading module term under position-over-term; v must be nonzero.
ModuleLead module_lead(const VecPoly& v);

/// Buchberger engine over a free module S^rank (rank 1 recovers ideals).
/// Gebauer-Moller pair elimination is applied at rank 1; higher ranks process
/// every same-position pair (the product criterion is not valid for modules).
/// With tracking enabled, each basis element carries its representation as an
/// S-linear combination of the input generators.
class GBEngine {
 public:
  GBEngine(AmbientPtr ambient, std::size_t rank, bool track = false);

  void add_generator(VecPoly g);
  void compute();  // runs Buchberger + inter-reduction; idempotent

  const AmbientPtr& ambient() const { return ambient_; }
  std::size_t rank() const { return rank_; }
  const std::vector<VecPoly>& basis() const { return basis_; }
  /// basis[i] == sum_j representations()[i][j] * generator[j] (tracking only).
  const std::vector<std::vector<Polynomial>>& representations() const { return reps_; }
  const std::vector<VecPoly>& input_generators() const { return gens_; }

  /// Full normal form of v modulo the reduced basis. With `quotients` set,
  /// v == sum_i quotients[i] * basis()[i] + result.
  VecPoly reduce(VecPoly v, std::vector<Polynomial>* quotients = nullptr) const;

  /// Combination over the input generators for a member v (tracking only);
  /// nullopt when v is not in the submodule.
  std::optional<std::vector<Polynomial>> member_combination(const VecPoly& v) const;

 private:
  struct Pair {
    std::size_t i, j;
    std::size_t pos;
    Monomial lcm;
  };

  void insert_basis_element(VecPoly h, std::vector<Polynomial> rep);
  void update_pairs(std::size_t t);
  VecPoly reduce_by(const std::vector<std::size_t>& idxs, VecPoly v,
                    std::vector<Polynomial>* quotients) const;
  std::size_t select_pair() const;
  void finalize();

  AmbientPtr ambient_;
  std::size_t rank_;
  bool track_;
  bool computed_ = false;
  std::vector<VecPoly> gens_;
  std::vector<VecPoly> basis_;                 // monic leads
  std::vector<ModuleLead> leads_;              // cached leading terms
  std::vector<std::vector<Polynomial>> reps_;  // parallel to basis_ when tracking
  std::vector<Pair> pairs_;
};

}  // namespace singcat
