#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singcat/groebner.hpp"
#include "singcat/polynomial.hpp"

namespace singcat {

/// Dense matrix over the ambient polynomial ring (row-major).
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(AmbientPtr ambient, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(const AmbientPtr& ambient, std::size_t n);
  static PolyMatrix scalar(const AmbientPtr& ambient, std::size_t n, const Polynomial& c);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const AmbientPtr& ambient() const { return ambient_; }

  const Polynomial& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Polynomial& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator-() const;
  PolyMatrix scaled(const Polynomial& c) const;
  void set_block(std::size_t i0, std::size_t j0, const PolyMatrix& m);

  /// [[a, b], [c, d]] with matching block shapes.
  static PolyMatrix block2x2(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c,
                             const PolyMatrix& d);
  static PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b);

  bool operator==(const PolyMatrix& o) const;

 private:
  AmbientPtr ambient_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> data_;
};

/// Pair (A, B) of square matrices over S with A*B = B*A = f*I; the concrete
/// model of an object of the singularity category of S/(f).
struct MatrixFactorization {
  AmbientPtr ambient;
  Polynomial potential;  // f
  PolyMatrix a;          // F1 -> F0
  PolyMatrix b;          // F0 -> F1

  std::size_t rank() const { return a.rows(); }
};

bool validate(const MatrixFactorization& x);  // AB = BA = f*I, shapes checked

MatrixFactorization mf_zero_object(const AmbientPtr& ambient, const Polynomial& f);
MatrixFactorization shift(const MatrixFactorization& x);                        // (-B, -A)
MatrixFactorization shift_power(const MatrixFactorization& x, unsigned n);
MatrixFactorization direct_sum(const MatrixFactorization& x, const MatrixFactorization& y);

/// Morphism (a0: F0 -> F0', a1: F1 -> F1') with a0*A = A'*a1, a1*B = B'*a0.
struct MFMorphism {
  MatrixFactorization source, target;
  PolyMatrix a0, a1;
};

bool is_valid_morphism(const MFMorphism& phi);

MFMorphism identity_morphism(const MatrixFactorization& x);
MFMorphism zero_morphism(const MatrixFactorization& source, const MatrixFactorization& target);
MFMorphism mult_morphism(const MatrixFactorization& x, const Polynomial& r);
MFMorphism compose(const MFMorphism& second, const MFMorphism& first);  // second o first
MFMorphism morphism_sum(const MFMorphism& a, const MFMorphism& b);      // same source/target
MFMorphism morphism_scale(const Polynomial& c, const MFMorphism& phi);
MFMorphism shift_morphism(const MFMorphism& phi);                       // phi[1]
MFMorphism direct_sum_morphism(const MFMorphism& a, const MFMorphism& b);

/// Certificate that a morphism is zero in the homotopy category:
/// a0 = A'*s + t*B and a1 = s*A + B'*t.
struct Homotopy {
  PolyMatrix s;  // F0 -> F1'
  PolyMatrix t;  // F1 -> F0'
};

/// Independent re-verification by matrix expansion (no solver involved).
bool verify_homotopy(const MFMorphism& phi, const Homotopy& h);

Homotopy homotopy_add(const Homotopy& a, const Homotopy& b);
Homotopy homotopy_scale(const Polynomial& c, const Homotopy& h);
/// Homotopy of psi o phi from a homotopy of phi.
Homotopy homotopy_compose_left(const MFMorphism& psi, const Homotopy& h);
/// Homotopy of phi o rho from a homotopy of phi.
Homotopy homotopy_compose_right(const Homotopy& h, const MFMorphism& rho);
/// Homotopy of phi[1] from a homotopy of phi: (s, t) -> (-t, -s).
Homotopy homotopy_shift(const Homotopy& h);
Homotopy homotopy_direct_sum(const Homotopy& a, const Homotopy& b);

struct ConeResult {
  MatrixFactorization cone;
  MFMorphism inclusion;   // target -> cone
  MFMorphism projection;  // cone -> shift(source)
};

/// Mapping cone of phi: X -> Y, blocks [[A_Y, a0], [0, -B_X]] / [[B_Y, a1], [0, -A_X]].
ConeResult cone(const MFMorphism& phi);

/// K(x) tensor X, realized as cone(x * id_X); rank doubles.
MatrixFactorization koszul_tensor(const MatrixFactorization& x, const Polynomial& elt);

/// Exact decision via a module Groebner basis over S: a returned NONE is a
/// proof of non-null-homotopy, not a timeout.
std::optional<Homotopy> is_nullhomotopic(const MFMorphism& phi);

/// Canonical homotopy for multiplication by f: (s, t) = (B, 0).
Homotopy potential_homotopy(const MatrixFactorization& x);
/// Canonical homotopy for multiplication by elt on cone(elt * id_X).
Homotopy koszul_mult_homotopy(const MatrixFactorization& koszul);

/// Verified isomorphism in the homotopy category.
struct EquivalenceCertificate {
  MFMorphism forward;   // X -> Y
  MFMorphism backward;  // Y -> X
  Homotopy back_forward;  // homotopy of backward o forward - id_X
  Homotopy forward_back;  // homotopy of forward o backward - id_Y
};

/// Independent re-verification of all four identities by expansion.
bool verify_equivalence(const EquivalenceCertificate& cert);

EquivalenceCertificate identity_equivalence(const MatrixFactorization& x);
EquivalenceCertificate compose_equivalences(const EquivalenceCertificate& second,
                                            const EquivalenceCertificate& first);
EquivalenceCertificate direct_sum_equivalences(const EquivalenceCertificate& a,
                                               const EquivalenceCertificate& b);
EquivalenceCertificate shift_equivalence(const EquivalenceCertificate& c);

/// phi is an isomorphism in the homotopy category iff id_{cone(phi)} is
/// null-homotopic; the inverse and homotopies are extracted from the
/// contraction. NONE is exact.
std::optional<EquivalenceCertificate> is_homotopy_equivalence(const MFMorphism& phi);

struct ProbeHit {
  Polynomial element;
  Homotopy homotopy;
};

/// Tests every monomial of degree <= cap for stable annihilation of X; the
/// returned elements (always including f) generate a subideal of the stable
/// annihilator of X.
std::vector<ProbeHit> stable_annihilator_probe(const MatrixFactorization& x, unsigned degree_cap);

/// Explicit equivalence K(elt) tensor X ~ X + X[1], built by contracting the
/// cone of the null-homotopic multiplication map; requires its homotopy.
EquivalenceCertificate verify_koszul_split(const MatrixFactorization& x, const Polynomial& elt,
                                           std::optional<Homotopy> mult_homotopy = {});

struct SplitProductTriangle {
  MatrixFactorization b;          // cone(xy * id_X)
  MFMorphism from_koszul_x;       // K(x) tensor X -> B
  MFMorphism to_koszul_y;         // B -> K(y) tensor X
  Homotopy composite_nullhomotopy;
  EquivalenceCertificate splitting;  // B ~ X + X[1]
};

/// The octahedral triangle K(x)X -> B -> K(y)X with B ~ X + X[1]; requires
/// xy to stably annihilate X.
SplitProductTriangle split_product_triangle(const MatrixFactorization& x, const Polynomial& ex,
                                            const Polynomial& ey);

struct KoszulBinomial {
  MatrixFactorization iterated;              // K(x_n)...K(x_1) tensor X
  MatrixFactorization decomposition;         // canonical block sum
  std::vector<unsigned> multiplicities;      // multiplicities[i] = copies of X[i]
  EquivalenceCertificate certificate;
};

/// Iterated Koszul splitting: n-fold tensor ~ sum over i of X[i]^(n choose i).
/// Every element must stably annihilate X (certificates computed first).
KoszulBinomial verify_koszul_binomial(const MatrixFactorization& x,
                                      const std::vector<Polynomial>& elts);

}  // namespace singcat
