#include "singcat/mf.hpp"

#include <algorithm>

#include "singcat/ideal.hpp"

namespace singcat {

PolyMatrix::PolyMatrix(AmbientPtr ambient, std::size_t rows, std::size_t cols)
    : ambient_(std::move(ambient)), rows_(rows), cols_(cols),
      data_(rows * cols, Polynomial::zero(ambient_)) {}

PolyMatrix PolyMatrix::identity(const AmbientPtr& ambient, std::size_t n) {
  PolyMatrix m(ambient, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(ambient, 1);
  return m;
}

PolyMatrix PolyMatrix::scalar(const AmbientPtr& ambient, std::size_t n, const Polynomial& c) {
  PolyMatrix m(ambient, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw AmbientError("matrix shape mismatch in product");
  PolyMatrix r(ambient_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Polynomial& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
      }
    }
  return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw AmbientError("matrix shape mismatch in sum");
  PolyMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] + o.data_[i];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const { return *this + (-o); }

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r = *this;
  for (auto& p : r.data_) p = -p;
  return r;
}

PolyMatrix PolyMatrix::scaled(const Polynomial& c) const {
  PolyMatrix r = *this;
  for (auto& p : r.data_) p = p * c;
  return r;
}

void PolyMatrix::set_block(std::size_t i0, std::size_t j0, const PolyMatrix& m) {
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) at(i0 + i, j0 + j) = m.at(i, j);
}

PolyMatrix PolyMatrix::block2x2(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c,
                                const PolyMatrix& d) {
  PolyMatrix r(a.ambient_, a.rows_ + c.rows_, a.cols_ + b.cols_);
  r.set_block(0, 0, a);
  r.set_block(0, a.cols_, b);
  r.set_block(a.rows_, 0, c);
  r.set_block(a.rows_, a.cols_, d);
  return r;
}

PolyMatrix PolyMatrix::block_diag(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix r(a.ambient_ ? a.ambient_ : b.ambient_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  r.set_block(0, 0, a);
  r.set_block(a.rows_, a.cols_, b);
  return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!(data_[i] == o.data_[i])) return false;
  return true;
}

static bool mf_equal(const MatrixFactorization& x, const MatrixFactorization& y) {
  return x.potential == y.potential && x.a == y.a && x.b == y.b;
}

bool validate(const MatrixFactorization& x) {
  if (x.a.rows() != x.a.cols() || x.b.rows() != x.b.cols() || x.a.rows() != x.b.rows())
    throw AmbientError("matrix factorization requires square matrices of equal rank");
  PolyMatrix fi = PolyMatrix::scalar(x.ambient, x.rank(), x.potential);
  return x.a * x.b == fi && x.b * x.a == fi;
}

MatrixFactorization mf_zero_object(const AmbientPtr& ambient, const Polynomial& f) {
  return MatrixFactorization{ambient, f, PolyMatrix(ambient, 0, 0), PolyMatrix(ambient, 0, 0)};
}

MatrixFactorization shift(const MatrixFactorization& x) {
  return MatrixFactorization{x.ambient, x.potential, -x.b, -x.a};
}

MatrixFactorization shift_power(const MatrixFactorization& x, unsigned n) {
  return n % 2 == 0 ? x : shift(x);  // shift is a strict involution
}

MatrixFactorization direct_sum(const MatrixFactorization& x, const MatrixFactorization& y) {
  if (!(x.potential == y.potential)) throw AmbientError("direct sum requires one potential");
  return MatrixFactorization{x.ambient, x.potential, PolyMatrix::block_diag(x.a, y.a),
                             PolyMatrix::block_diag(x.b, y.b)};
}

bool is_valid_morphism(const MFMorphism& phi) {
  const auto& x = phi.source;
  const auto& y = phi.target;
  if (!(x.potential == y.potential)) return false;
  if (phi.a0.rows() != y.rank() || phi.a0.cols() != x.rank()) return false;
  if (phi.a1.rows() != y.rank() || phi.a1.cols() != x.rank()) return false;
  return phi.a0 * x.a == y.a * phi.a1 && phi.a1 * x.b == y.b * phi.a0;
}

MFMorphism identity_morphism(const MatrixFactorization& x) {
  PolyMatrix id = PolyMatrix::identity(x.ambient, x.rank());
  return MFMorphism{x, x, id, id};
}

MFMorphism zero_morphism(const MatrixFactorization& source, const MatrixFactorization& target) {
  return MFMorphism{source, target, PolyMatrix(source.ambient, target.rank(), source.rank()),
                    PolyMatrix(source.ambient, target.rank(), source.rank())};
}

MFMorphism mult_morphism(const MatrixFactorization& x, const Polynomial& r) {
  PolyMatrix m = PolyMatrix::scalar(x.ambient, x.rank(), r);
  return MFMorphism{x, x, m, m};
}

MFMorphism compose(const MFMorphism& second, const MFMorphism& first) {
  if (!mf_equal(second.source, first.target))
    throw AmbientError("morphism composition: source/target mismatch");
  return MFMorphism{first.source, second.target, second.a0 * first.a0, second.a1 * first.a1};
}

MFMorphism morphism_sum(const MFMorphism& a, const MFMorphism& b) {
  return MFMorphism{a.source, a.target, a.a0 + b.a0, a.a1 + b.a1};
}

MFMorphism morphism_scale(const Polynomial& c, const MFMorphism& phi) {
  return MFMorphism{phi.source, phi.target, phi.a0.scaled(c), phi.a1.scaled(c)};
}

MFMorphism shift_morphism(const MFMorphism& phi) {
  return MFMorphism{shift(phi.source), shift(phi.target), phi.a1, phi.a0};
}

MFMorphism direct_sum_morphism(const MFMorphism& a, const MFMorphism& b) {
  return MFMorphism{direct_sum(a.source, b.source), direct_sum(a.target, b.target),
                    PolyMatrix::block_diag(a.a0, b.a0), PolyMatrix::block_diag(a.a1, b.a1)};
}

bool verify_homotopy(const MFMorphism& phi, const Homotopy& h) {
  const auto& x = phi.source;
  const auto& y = phi.target;
  return phi.a0 == y.a * h.s + h.t * x.b && phi.a1 == h.s * x.a + y.b * h.t;
}

Homotopy homotopy_add(const Homotopy& a, const Homotopy& b) {
  return Homotopy{a.s + b.s, a.t + b.t};
}

Homotopy homotopy_scale(const Polynomial& c, const Homotopy& h) {
  return Homotopy{h.s.scaled(c), h.t.scaled(c)};
}

Homotopy homotopy_compose_left(const MFMorphism& psi, const Homotopy& h) {
  return Homotopy{psi.a1 * h.s, psi.a0 * h.t};
}

Homotopy homotopy_compose_right(const Homotopy& h, const MFMorphism& rho) {
  return Homotopy{h.s * rho.a0, h.t * rho.a1};
}

Homotopy homotopy_shift(const Homotopy& h) { return Homotopy{-h.t, -h.s}; }

Homotopy homotopy_direct_sum(const Homotopy& a, const Homotopy& b) {
  return Homotopy{PolyMatrix::block_diag(a.s, b.s), PolyMatrix::block_diag(a.t, b.t)};
}

ConeResult cone(const MFMorphism& phi) {
  if (!is_valid_morphism(phi)) throw HypothesisError("cone of an invalid morphism");
  const auto& x = phi.source;
  const auto& y = phi.target;
  const AmbientPtr& amb = x.ambient;
  PolyMatrix zero_xy(amb, x.rank(), y.rank());
  MatrixFactorization c{amb, x.potential,
                        PolyMatrix::block2x2(y.a, phi.a0, zero_xy, -x.b),
                        PolyMatrix::block2x2(y.b, phi.a1, zero_xy, -x.a)};

  // inclusion Y -> cone and projection cone -> X[1]; composite is zero.
  PolyMatrix inc(amb, c.rank(), y.rank());
  inc.set_block(0, 0, PolyMatrix::identity(amb, y.rank()));
  MFMorphism inclusion{y, c, inc, inc};
  PolyMatrix proj(amb, x.rank(), c.rank());
  proj.set_block(0, y.rank(), PolyMatrix::identity(amb, x.rank()));
  MFMorphism projection{c, shift(x), proj, proj};
  return ConeResult{std::move(c), std::move(inclusion), std::move(projection)};
}

MatrixFactorization koszul_tensor(const MatrixFactorization& x, const Polynomial& elt) {
  return cone(mult_morphism(x, elt)).cone;
}

std::optional<Homotopy> is_nullhomotopic(const MFMorphism& phi) {
  if (!is_valid_morphism(phi)) throw HypothesisError("null-homotopy test on an invalid morphism");
  const auto& x = phi.source;
  const auto& y = phi.target;
  const AmbientPtr& amb = x.ambient;
  const std::size_t r = x.rank(), rr = y.rank();
  if (r == 0 || rr == 0) return Homotopy{PolyMatrix(amb, rr, r), PolyMatrix(amb, rr, r)};

  // Stack the two matrix identities into a free-module membership problem:
  // components 0..rr*r-1 hold a0 = A_Y s + t B_X, the rest hold a1 = s A_X + B_Y t.
  const std::size_t nc = rr * r;
  auto eq1 = [&](std::size_t i, std::size_t j) { return i * r + j; };
  auto eq2 = [&](std::size_t i, std::size_t j) { return nc + i * r + j; };

  VecPoly target = vec_zero(amb, 2 * nc);
  for (std::size_t i = 0; i < rr; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      target[eq1(i, j)] = phi.a0.at(i, j);
      target[eq2(i, j)] = phi.a1.at(i, j);
    }

  std::vector<VecPoly> gens;
  gens.reserve(2 * nc);
  for (std::size_t k = 0; k < rr; ++k)
    for (std::size_t l = 0; l < r; ++l) {
      VecPoly col = vec_zero(amb, 2 * nc);  // unknown s_{k,l}
      for (std::size_t i = 0; i < rr; ++i) col[eq1(i, l)] = col[eq1(i, l)] + y.a.at(i, k);
      for (std::size_t j = 0; j < r; ++j) col[eq2(k, j)] = col[eq2(k, j)] + x.a.at(l, j);
      gens.push_back(std::move(col));
    }
  for (std::size_t k = 0; k < rr; ++k)
    for (std::size_t l = 0; l < r; ++l) {
      VecPoly col = vec_zero(amb, 2 * nc);  // unknown t_{k,l}
      for (std::size_t j = 0; j < r; ++j) col[eq1(k, j)] = col[eq1(k, j)] + x.b.at(l, j);
      for (std::size_t i = 0; i < rr; ++i) col[eq2(i, l)] = col[eq2(i, l)] + y.b.at(i, k);
      gens.push_back(std::move(col));
    }

  ModuleMembership mem = module_member(target, gens, /*want_certificate=*/true);
  if (!mem.member) return std::nullopt;
  Homotopy h{PolyMatrix(amb, rr, r), PolyMatrix(amb, rr, r)};
  for (std::size_t k = 0; k < rr; ++k)
    for (std::size_t l = 0; l < r; ++l) {
      h.s.at(k, l) = (*mem.combination)[k * r + l];
      h.t.at(k, l) = (*mem.combination)[nc + k * r + l];
    }
  if (!verify_homotopy(phi, h)) throw Error("internal: solved homotopy failed re-verification");
  return h;
}

Homotopy potential_homotopy(const MatrixFactorization& x) {
  return Homotopy{x.b, PolyMatrix(x.ambient, x.rank(), x.rank())};
}

Homotopy koszul_mult_homotopy(const MatrixFactorization& koszul) {
  if (koszul.rank() % 2 != 0) throw HypothesisError("not a Koszul cone (odd rank)");
  const std::size_t r = koszul.rank() / 2;
  const AmbientPtr& amb = koszul.ambient;
  PolyMatrix m(amb, 2 * r, 2 * r);
  m.set_block(r, 0, PolyMatrix::identity(amb, r));
  return Homotopy{m, m};
}

bool verify_equivalence(const EquivalenceCertificate& cert) {
  if (!is_valid_morphism(cert.forward) || !is_valid_morphism(cert.backward)) return false;
  MFMorphism bf = morphism_sum(compose(cert.backward, cert.forward),
                               morphism_scale(Polynomial::constant(cert.forward.source.ambient, -1),
                                              identity_morphism(cert.forward.source)));
  MFMorphism fb = morphism_sum(compose(cert.forward, cert.backward),
                               morphism_scale(Polynomial::constant(cert.forward.source.ambient, -1),
                                              identity_morphism(cert.forward.target)));
  return verify_homotopy(bf, cert.back_forward) && verify_homotopy(fb, cert.forward_back);
}

static Homotopy zero_homotopy(const MatrixFactorization& source, const MatrixFactorization& target) {
  return Homotopy{PolyMatrix(source.ambient, target.rank(), source.rank()),
                  PolyMatrix(source.ambient, target.rank(), source.rank())};
}

EquivalenceCertificate identity_equivalence(const MatrixFactorization& x) {
  return EquivalenceCertificate{identity_morphism(x), identity_morphism(x), zero_homotopy(x, x),
                                zero_homotopy(x, x)};
}

EquivalenceCertificate compose_equivalences(const EquivalenceCertificate& second,
                                            const EquivalenceCertificate& first) {
  EquivalenceCertificate c;
  c.forward = compose(second.forward, first.forward);
  c.backward = compose(first.backward, second.backward);
  c.back_forward = homotopy_add(
      homotopy_compose_left(first.backward,
                            homotopy_compose_right(second.back_forward, first.forward)),
      first.back_forward);
  c.forward_back = homotopy_add(
      homotopy_compose_left(second.forward,
                            homotopy_compose_right(first.forward_back, second.backward)),
      second.forward_back);
  return c;
}

EquivalenceCertificate direct_sum_equivalences(const EquivalenceCertificate& a,
                                               const EquivalenceCertificate& b) {
  return EquivalenceCertificate{direct_sum_morphism(a.forward, b.forward),
                                direct_sum_morphism(a.backward, b.backward),
                                homotopy_direct_sum(a.back_forward, b.back_forward),
                                homotopy_direct_sum(a.forward_back, b.forward_back)};
}

EquivalenceCertificate shift_equivalence(const EquivalenceCertificate& c) {
  return EquivalenceCertificate{shift_morphism(c.forward), shift_morphism(c.backward),
                                homotopy_shift(c.back_forward), homotopy_shift(c.forward_back)};
}

std::optional<EquivalenceCertificate> is_homotopy_equivalence(const MFMorphism& phi) {
  ConeResult c = cone(phi);
  std::optional<Homotopy> contraction = is_nullhomotopic(identity_morphism(c.cone));
  if (!contraction) return std::nullopt;

  const auto& x = phi.source;
  const auto& y = phi.target;
  const std::size_t ry = y.rank(), rx = x.rank();
  auto block = [&](const PolyMatrix& m, std::size_t i0, std::size_t j0, std::size_t h,
                   std::size_t w) {
    PolyMatrix r(x.ambient, h, w);
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < w; ++j) r.at(i, j) = m.at(i0 + i, j0 + j);
    return r;
  };
  // Contraction blocks yield the inverse and both homotopies.
  PolyMatrix s_a = block(contraction->s, 0, 0, ry, ry);
  PolyMatrix s_c = block(contraction->s, ry, 0, rx, ry);
  PolyMatrix s_d = block(contraction->s, ry, ry, rx, rx);
  PolyMatrix t_a = block(contraction->t, 0, 0, ry, ry);
  PolyMatrix t_c = block(contraction->t, ry, 0, rx, ry);
  PolyMatrix t_d = block(contraction->t, ry, ry, rx, rx);

  EquivalenceCertificate cert;
  cert.forward = phi;
  cert.backward = MFMorphism{y, x, s_c, t_c};
  cert.back_forward = Homotopy{t_d, s_d};
  cert.forward_back = Homotopy{-s_a, -t_a};
  if (!verify_equivalence(cert))
    throw Error("internal: extracted equivalence failed re-verification");
  return cert;
}

std::vector<ProbeHit> stable_annihilator_probe(const MatrixFactorization& x, unsigned degree_cap) {
  std::vector<ProbeHit> hits;
  for (unsigned d = 0; d <= degree_cap; ++d) {
    Ideal degree_d = maximal_ideal_power(x.ambient, d);
    for (const auto& mono : degree_d.generators()) {
      auto h = is_nullhomotopic(mult_morphism(x, mono));
      if (h) hits.push_back(ProbeHit{mono, std::move(*h)});
    }
  }
  bool have_f = std::any_of(hits.begin(), hits.end(),
                            [&](const ProbeHit& h) { return h.element == x.potential; });
  if (!have_f) hits.push_back(ProbeHit{x.potential, potential_homotopy(x)});
  return hits;
}

EquivalenceCertificate verify_koszul_split(const MatrixFactorization& x, const Polynomial& elt,
                                           std::optional<Homotopy> mult_homotopy) {
  Homotopy h = mult_homotopy ? std::move(*mult_homotopy) : [&] {
    auto solved = is_nullhomotopic(mult_morphism(x, elt));
    if (!solved)
      throw HypothesisError("element '" + elt.str() + "' does not stably annihilate the object");
    return *solved;
  }();
  if (!verify_homotopy(mult_morphism(x, elt), h))
    throw HypothesisError("supplied homotopy does not witness the multiplication map");

  const AmbientPtr& amb = x.ambient;
  const std::size_t r = x.rank();
  MatrixFactorization k = koszul_tensor(x, elt);
  MatrixFactorization d = direct_sum(x, shift(x));

  // cone of a null-homotopic map is strictly isomorphic to the direct sum;
  // the change of basis is assembled from the homotopy.
  PolyMatrix id = PolyMatrix::identity(amb, r);
  PolyMatrix zero(amb, r, r);
  PolyMatrix mu0 = PolyMatrix::block2x2(id, h.t, zero, id);
  PolyMatrix mu1 = PolyMatrix::block2x2(id, h.s, zero, id);
  PolyMatrix nu0 = PolyMatrix::block2x2(id, -h.t, zero, id);
  PolyMatrix nu1 = PolyMatrix::block2x2(id, -h.s, zero, id);

  EquivalenceCertificate cert;
  cert.forward = MFMorphism{k, d, mu0, mu1};
  cert.backward = MFMorphism{d, k, nu0, nu1};
  cert.back_forward = zero_homotopy(k, k);
  cert.forward_back = zero_homotopy(d, d);
  if (!verify_equivalence(cert)) throw Error("internal: Koszul splitting failed re-verification");
  return cert;
}

SplitProductTriangle split_product_triangle(const MatrixFactorization& x, const Polynomial& ex,
                                            const Polynomial& ey) {
  Polynomial product = ex * ey;
  auto h = is_nullhomotopic(mult_morphism(x, product));
  if (!h)
    throw HypothesisError("product '" + product.str() + "' does not stably annihilate the object");

  const AmbientPtr& amb = x.ambient;
  const std::size_t r = x.rank();
  SplitProductTriangle res;
  res.b = koszul_tensor(x, product);
  MatrixFactorization kx = koszul_tensor(x, ex);
  MatrixFactorization ky = koszul_tensor(x, ey);

  PolyMatrix id = PolyMatrix::identity(amb, r);
  PolyMatrix zero(amb, r, r);
  PolyMatrix u = PolyMatrix::block2x2(PolyMatrix::scalar(amb, r, ey), zero, zero, id);
  res.from_koszul_x = MFMorphism{kx, res.b, u, u};
  PolyMatrix v = PolyMatrix::block2x2(id, zero, zero, PolyMatrix::scalar(amb, r, ex));
  res.to_koszul_y = MFMorphism{res.b, ky, v, v};
  if (!is_valid_morphism(res.from_koszul_x) || !is_valid_morphism(res.to_koszul_y))
    throw Error("internal: octahedral structure maps are not morphisms");

  // The two consecutive triangle maps compose to a stably zero morphism;
  // the witness is the same shape as the Koszul multiplication homotopy.
  PolyMatrix w(amb, 2 * r, 2 * r);
  w.set_block(r, 0, id);
  res.composite_nullhomotopy = Homotopy{w, w};
  if (!verify_homotopy(compose(res.to_koszul_y, res.from_koszul_x), res.composite_nullhomotopy))
    throw Error("internal: composite homotopy failed re-verification");

  res.splitting = verify_koszul_split(x, product, *h);
  return res;
}

namespace {

// Canonical block sum: multiplicities[i] copies of shift^i(X), i ascending.
MatrixFactorization canonical_sum(const MatrixFactorization& x,
                                  const std::vector<unsigned>& multiplicities) {
  MatrixFactorization acc = mf_zero_object(x.ambient, x.potential);
  for (std::size_t i = 0; i < multiplicities.size(); ++i)
    for (unsigned c = 0; c < multiplicities[i]; ++c)
      acc = direct_sum(acc, shift_power(x, static_cast<unsigned>(i)));
  return acc;
}

// Strict block-permutation equivalence between direct sums of equal-rank
// blocks; src_of_dst[j] = index of the source block landing at position j.
EquivalenceCertificate block_permutation(const std::vector<MatrixFactorization>& blocks,
                                         const std::vector<std::size_t>& src_of_dst) {
  const AmbientPtr& amb = blocks[0].ambient;
  MatrixFactorization src = mf_zero_object(amb, blocks[0].potential);
  for (const auto& b : blocks) src = direct_sum(src, b);
  MatrixFactorization dst = mf_zero_object(amb, blocks[0].potential);
  for (std::size_t j : src_of_dst) dst = direct_sum(dst, blocks[j]);

  std::vector<std::size_t> offset(blocks.size() + 1, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) offset[i + 1] = offset[i] + blocks[i].rank();
  PolyMatrix q(amb, dst.rank(), src.rank());
  std::size_t row = 0;
  for (std::size_t j : src_of_dst) {
    q.set_block(row, offset[j], PolyMatrix::identity(amb, blocks[j].rank()));
    row += blocks[j].rank();
  }
  PolyMatrix qt(amb, src.rank(), dst.rank());
  row = 0;
  for (std::size_t j : src_of_dst) {
    qt.set_block(offset[j], row, PolyMatrix::identity(amb, blocks[j].rank()));
    row += blocks[j].rank();
  }

  EquivalenceCertificate cert;
  cert.forward = MFMorphism{src, dst, q, q};
  cert.backward = MFMorphism{dst, src, qt, qt};
  cert.back_forward = zero_homotopy(src, src);
  cert.forward_back = zero_homotopy(dst, dst);
  if (!verify_equivalence(cert)) throw Error("internal: block permutation is not an isomorphism");
  return cert;
}

}  // namespace

KoszulBinomial verify_koszul_binomial(const MatrixFactorization& x,
                                      const std::vector<Polynomial>& elts) {
  std::vector<Homotopy> base_homotopies;
  for (const auto& e : elts) {
    auto h = is_nullhomotopic(mult_morphism(x, e));
    if (!h)
      throw HypothesisError("element '" + e.str() + "' does not stably annihilate the object");
    base_homotopies.push_back(std::move(*h));
  }

  MatrixFactorization iterated = x;
  std::vector<unsigned> mult{1};
  EquivalenceCertificate cert = identity_equivalence(x);

  for (std::size_t step = 0; step < elts.size(); ++step) {
    const Polynomial& e = elts[step];
    // Homotopy of e on the canonical sum: shifted copies of the base homotopy.
    std::optional<Homotopy> on_sum;
    for (std::size_t i = 0; i < mult.size(); ++i) {
      Homotopy piece = base_homotopies[step];
      if (i % 2 == 1) piece = homotopy_shift(piece);
      for (unsigned c = 0; c < mult[i]; ++c)
        on_sum = on_sum ? homotopy_direct_sum(*on_sum, piece) : piece;
    }
    // Transport to the iterated object: e*id_T = back o (e*id_D) o fwd - e*(back o fwd - id).
    Homotopy on_iterated = homotopy_add(
        homotopy_compose_left(cert.backward, homotopy_compose_right(*on_sum, cert.forward)),
        homotopy_scale(-e, cert.back_forward));
    if (!verify_homotopy(mult_morphism(iterated, e), on_iterated))
      throw Error("internal: transported homotopy failed re-verification");

    EquivalenceCertificate split = verify_koszul_split(iterated, e, on_iterated);
    EquivalenceCertificate sum_cert = direct_sum_equivalences(cert, shift_equivalence(cert));

    // Interleave D + D[1] into the canonical order of the next level.
    std::vector<MatrixFactorization> blocks;
    std::vector<std::size_t> dst;
    for (std::size_t i = 0; i < mult.size(); ++i)
      for (unsigned c = 0; c < mult[i]; ++c)
        blocks.push_back(shift_power(x, static_cast<unsigned>(i)));
    std::size_t half = blocks.size();
    for (std::size_t i = 0; i < mult.size(); ++i)
      for (unsigned c = 0; c < mult[i]; ++c)
        blocks.push_back(shift_power(x, static_cast<unsigned>(i) + 1));
    std::vector<unsigned> next_mult(mult.size() + 1, 0);
    for (std::size_t i = 0; i < mult.size(); ++i) {
      next_mult[i] += mult[i];
      next_mult[i + 1] += mult[i];
    }
    std::vector<std::size_t> first_start(mult.size() + 1, half), second_start(mult.size() + 1, half);
    {
      std::size_t acc = 0;
      for (std::size_t i = 0; i < mult.size(); ++i) {
        first_start[i] = acc;
        acc += mult[i];
      }
      acc = half;
      for (std::size_t i = 0; i < mult.size(); ++i) {
        second_start[i + 1] = acc;
        acc += mult[i];
      }
    }
    for (std::size_t i = 0; i < next_mult.size(); ++i) {
      if (i < mult.size())
        for (unsigned c = 0; c < mult[i]; ++c) dst.push_back(first_start[i] + c);
      if (i >= 1)
        for (unsigned c = 0; c < mult[i - 1]; ++c) dst.push_back(second_start[i] + c);
    }
    EquivalenceCertificate perm = block_permutation(blocks, dst);

    cert = compose_equivalences(perm, compose_equivalences(sum_cert, split));
    iterated = koszul_tensor(iterated, e);
    mult = std::move(next_mult);
  }

  KoszulBinomial res;
  res.iterated = iterated;
  res.decomposition = canonical_sum(x, mult);
  res.multiplicities = std::move(mult);
  res.certificate = std::move(cert);
  if (!verify_equivalence(res.certificate))
    throw Error("internal: binomial certificate failed re-verification");
  return res;
}

}  // namespace singcat
