#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "singcat/mf.hpp"
#include "singcat/mf_io.hpp"
#include "support.hpp"

using namespace singcat;
using namespace singcat::test;

namespace {

MatrixFactorization mf1(const AmbientPtr& a, const std::string& f, const std::string& ae,
                        const std::string& be) {
  PolyMatrix am(a, 1, 1), bm(a, 1, 1);
  am.at(0, 0) = pp(a, ae);
  bm.at(0, 0) = pp(a, be);
  return MatrixFactorization{a, pp(a, f), am, bm};
}

}  // namespace

TEST_CASE("validation") {
  auto a = qq({"x"});
  CHECK(validate(mf1(a, "x^3", "x", "x^2")));
  CHECK_FALSE(validate(mf1(a, "x^3", "x", "x")));
  SUBCASE("Koszul factorization of a divisor") {
    auto b = qq({"x", "y"});
    CHECK(validate(mf1(b, "x*y^2", "x", "y^2")));
    CHECK(validate(mf1(b, "x*y^2", "x*y", "y")));
  }
  SUBCASE("shape mismatch throws") {
    PolyMatrix am(a, 1, 1), bm(a, 2, 2);
    MatrixFactorization bad{a, pp(a, "x^3"), am, bm};
    CHECK_THROWS_AS(validate(bad), AmbientError);
  }
}

TEST_CASE("shift") {
  auto a = qq({"x"});
  auto x = mf1(a, "x^3", "x", "x^2");
  auto sx = shift(x);
  CHECK(sx.a == (-x.b));
  CHECK(sx.b == (-x.a));
  CHECK(validate(sx));
  auto ssx = shift(sx);
  CHECK(ssx.a == x.a);
  CHECK(ssx.b == x.b);
}

TEST_CASE("direct sums") {
  auto a = qq({"x"});
  auto x = mf1(a, "x^3", "x", "x^2");
  auto zero = mf_zero_object(a, pp(a, "x^3"));
  auto s = direct_sum(x, zero);
  CHECK(s.rank() == x.rank());
  CHECK(s.a == x.a);
  auto y = mf1(a, "x^3", "x^2", "x");
  auto xy = direct_sum(x, y);
  CHECK(xy.rank() == 2);
  CHECK(validate(xy));
  CHECK(xy.a.at(0, 0) == pp(a, "x"));
  CHECK(xy.a.at(1, 1) == pp(a, "x^2"));
  CHECK(xy.a.at(0, 1).is_zero());
}

TEST_CASE("multiplication morphisms") {
  auto a = qq({"x"});
  auto x = mf1(a, "x^3", "x", "x^2");
  CHECK(is_valid_morphism(mult_morphism(x, Polynomial::zero(a))));
  CHECK(is_valid_morphism(mult_morphism(x, pp(a, "1"))));
  SUBCASE("multiplication by the potential has the canonical homotopy") {
    MFMorphism phi = mult_morphism(x, pp(a, "x^3"));
    Homotopy h = potential_homotopy(x);
    CHECK(verify_homotopy(phi, h));
  }
}

TEST_CASE("cones") {
  auto a = qq({"x"});
  auto x = mf1(a, "x^3", "x", "x^2");
  SUBCASE("cone of the identity is contractible") {
    ConeResult c = cone(identity_morphism(x));
    CHECK(validate(c.cone));
    auto contraction = is_nullhomotopic(identity_morphism(c.cone));
    REQUIRE(contraction.has_value());
    CHECK(verify_homotopy(identity_morphism(c.cone), *contraction));
  }
  SUBCASE("cone of zero is the block direct sum") {
    auto y = mf1(a, "x^3", "x^2", "x");
    ConeResult c = cone(zero_morphism(x, y));
    MatrixFactorization expected = direct_sum(y, shift(x));
    CHECK(c.cone.a == expected.a);
    CHECK(c.cone.b == expected.b);
  }
  SUBCASE("cone of multiplication is the Koszul tensor") {
    ConeResult c = cone(mult_morphism(x, pp(a, "x")));
    MatrixFactorization k = koszul_tensor(x, pp(a, "x"));
    CHECK(c.cone.a == k.a);
    CHECK(c.cone.b == k.b);
  }
  SUBCASE("structure maps compose to zero") {
    ConeResult c = cone(mult_morphism(x, pp(a, "x")));
    CHECK(is_valid_morphism(c.inclusion));
    CHECK(is_valid_morphism(c.projection));
    MFMorphism comp = compose(c.projection, c.inclusion);
    CHECK(comp.a0 == PolyMatrix(a, 1, 1));
    CHECK(comp.a1 == PolyMatrix(a, 1, 1));
  }
  SUBCASE("invalid morphism rejected") {
    auto y = mf1(a, "x^3", "x^2", "x");
    MFMorphism bogus{x, y, PolyMatrix::identity(a, 1), PolyMatrix::identity(a, 1)};
    CHECK_THROWS_AS(cone(bogus), HypothesisError);
  }
}

TEST_CASE("koszul tensor") {
  auto a = qq({"x"});
  auto x = mf1(a, "x^3", "x", "x^2");
  SUBCASE("iterated rank doubling") {
    MatrixFactorization k = x;
    for (int n = 1; n <= 3; ++n) {
      k = koszul_tensor(k, pp(a, "x"));
      CHECK(k.rank() == (1u << n));
      CHECK(validate(k));
    }
  }
  SUBCASE("zero element gives the direct sum") {
    MatrixFactorization k = koszul_tensor(x, Polynomial::zero(a));
    MatrixFactorization expected = direct_sum(x, shift(x));
    CHECK(k.a == expected.a);
    CHECK(k.b == expected.b);
  }
  SUBCASE("canonical multiplication homotopy") {
    MatrixFactorization k = koszul_tensor(x, pp(a, "x"));
    CHECK(verify_homotopy(mult_morphism(k, pp(a, "x")), koszul_mult_homotopy(k)));
  }
}

TEST_CASE("null-homotopy decisions") {
  auto a = qq({"x"});
  SUBCASE("multiplication by f is always null-homotopic") {
    auto x = mf1(a, "x^3", "x", "x^2");
    auto h = is_nullhomotopic(mult_morphism(x, pp(a, "x^3")));
    REQUIRE(h.has_value());
    CHECK(verify_homotopy(mult_morphism(x, pp(a, "x^3")), *h));
  }
  SUBCASE("x kills coker(x^2) stably") {
    auto x = mf1(a, "x^3", "x^2", "x");
    auto h = is_nullhomotopic(mult_morphism(x, pp(a, "x")));
    REQUIRE(h.has_value());
    CHECK(verify_homotopy(mult_morphism(x, pp(a, "x")), *h));
    // the hand solution (s, t) = (0, 1) also verifies
    PolyMatrix s(a, 1, 1), t(a, 1, 1);
    t.at(0, 0) = pp(a, "1");
    CHECK(verify_homotopy(mult_morphism(x, pp(a, "x")), Homotopy{s, t}));
  }
  SUBCASE("identity on a non-contractible object is NOT null-homotopic") {
    auto x = mf1(a, "x^3", "x", "x^2");
    CHECK_FALSE(is_nullhomotopic(identity_morphism(x)).has_value());
  }
  SUBCASE("rank-zero objects absorb everything") {
    auto z = mf_zero_object(a, pp(a, "x^3"));
    CHECK(is_nullhomotopic(identity_morphism(z)).has_value());
  }
}

TEST_CASE("homotopy solver linearity on random instances") {
  auto a = qq({"x", "y"});
  std::mt19937 rng(90210);
  Polynomial f = pp(a, "x^3 - x*y^3");  // x * (x^2 - y^3)
  auto x = mf1(a, "x^3 - x*y^3", "x", "x^2 - y^3");
  for (int i = 0; i < 12; ++i) {
    Polynomial g1 = random_polynomial(a, rng, 2, 2), g2 = random_polynomial(a, rng, 2, 2);
    // both f*g1 and f*g2 act null-homotopically; so do sums and scalings
    MFMorphism m1 = mult_morphism(x, f * g1), m2 = mult_morphism(x, f * g2);
    auto h1 = is_nullhomotopic(m1), h2 = is_nullhomotopic(m2);
    REQUIRE(h1.has_value());
    REQUIRE(h2.has_value());
    MFMorphism sum = morphism_sum(m1, m2);
    CHECK(verify_homotopy(sum, homotopy_add(*h1, *h2)));
    auto hs = is_nullhomotopic(sum);
    CHECK(hs.has_value());
    Polynomial c = random_polynomial(a, rng, 2, 2);
    auto hscaled = is_nullhomotopic(morphism_scale(c, m1));
    CHECK(hscaled.has_value());
    CHECK(verify_homotopy(morphism_scale(c, m1), homotopy_scale(c, *h1)));
  }
}

TEST_CASE("stable annihilator probe") {
  auto a = qq({"x"});
  SUBCASE("coker(x^2) is annihilated by x") {
    auto x = mf1(a, "x^3", "x^2", "x");
    auto hits = stable_annihilator_probe(x, 2);
    bool found_x = false;
    for (const auto& h : hits) {
      CHECK(verify_homotopy(mult_morphism(x, h.element), h.homotopy));
      if (h.element == pp(a, "x")) found_x = true;
    }
    CHECK(found_x);
  }
  SUBCASE("f is always a hit") {
    auto x = mf1(a, "x^3", "x", "x^2");
    auto hits = stable_annihilator_probe(x, 1);
    bool found_f = false;
    for (const auto& h : hits)
      if (h.element == pp(a, "x^3")) found_f = true;
    CHECK(found_f);
  }
  SUBCASE("rank zero: every monomial annihilates") {
    auto z = mf_zero_object(a, pp(a, "x^3"));
    auto hits = stable_annihilator_probe(z, 2);
    CHECK(hits.size() == 4);  // 1, x, x^2, f
  }
  SUBCASE("hits are closed under multiplication within the cap") {
    auto x = mf1(a, "x^3", "x^2", "x");
    unsigned cap = 3;
    auto hits = stable_annihilator_probe(x, cap);
    for (const auto& h : hits) {
      Polynomial prod = h.element * pp(a, "x");
      if (prod.total_degree() > static_cast<int>(cap)) continue;
      bool present = false;
      for (const auto& other : hits)
        if (other.element == prod) present = true;
      CHECK(present);
    }
  }
}

TEST_CASE("homotopy equivalences") {
  auto a = qq({"x"});
  auto x = mf1(a, "x^3", "x", "x^2");
  SUBCASE("identity certifies trivially") {
    auto cert = is_homotopy_equivalence(identity_morphism(x));
    REQUIRE(cert.has_value());
    CHECK(verify_equivalence(*cert));
  }
  SUBCASE("inclusion into X + contractible is an equivalence") {
    MatrixFactorization contractible = cone(identity_morphism(x)).cone;
    MatrixFactorization target = direct_sum(x, contractible);
    PolyMatrix inc0(a, target.rank(), x.rank()), inc1(a, target.rank(), x.rank());
    inc0.set_block(0, 0, PolyMatrix::identity(a, x.rank()));
    inc1.set_block(0, 0, PolyMatrix::identity(a, x.rank()));
    MFMorphism phi{x, target, inc0, inc1};
    REQUIRE(is_valid_morphism(phi));
    auto cert = is_homotopy_equivalence(phi);
    REQUIRE(cert.has_value());
    CHECK(verify_equivalence(*cert));
  }
  SUBCASE("zero endomorphism of a non-contractible object is not") {
    CHECK_FALSE(is_homotopy_equivalence(zero_morphism(x, x)).has_value());
  }
}

TEST_CASE("koszul splitting") {
  auto a = qq({"x"});
  SUBCASE("coker(x^2), element x") {
    auto x = mf1(a, "x^3", "x^2", "x");
    auto cert = verify_koszul_split(x, pp(a, "x"));
    CHECK(verify_equivalence(cert));
    CHECK(cert.forward.source.rank() == 2);
    CHECK(cert.forward.target.rank() == 2);
    auto cross = is_homotopy_equivalence(cert.forward);  // oracle: independent contraction
    CHECK(cross.has_value());
  }
  SUBCASE("coker(x), element x, homotopy (1, 0)") {
    auto x = mf1(a, "x^3", "x", "x^2");
    PolyMatrix s(a, 1, 1), t(a, 1, 1);
    s.at(0, 0) = pp(a, "1");
    CHECK(verify_homotopy(mult_morphism(x, pp(a, "x")), Homotopy{s, t}));
    auto cert = verify_koszul_split(x, pp(a, "x"), Homotopy{s, t});
    CHECK(verify_equivalence(cert));
  }
  SUBCASE("zero element splits definitionally") {
    auto x = mf1(a, "x^3", "x", "x^2");
    auto cert = verify_koszul_split(x, Polynomial::zero(a));
    CHECK(verify_equivalence(cert));
  }
  SUBCASE("non-annihilating element rejected") {
    auto x = mf1(a, "x^3", "x", "x^2");
    CHECK_THROWS_AS(verify_koszul_split(x, pp(a, "1")), HypothesisError);
  }
}

TEST_CASE("split product triangle") {
  auto a = qq({"x"});
  SUBCASE("x * x on coker(x^2)") {
    auto x = mf1(a, "x^3", "x^2", "x");
    auto res = split_product_triangle(x, pp(a, "x"), pp(a, "x"));
    CHECK(validate(res.b));
    CHECK(is_valid_morphism(res.from_koszul_x));
    CHECK(is_valid_morphism(res.to_koszul_y));
    CHECK(verify_homotopy(compose(res.to_koszul_y, res.from_koszul_x), res.composite_nullhomotopy));
    CHECK(verify_equivalence(res.splitting));
    auto solver = is_nullhomotopic(compose(res.to_koszul_y, res.from_koszul_x));
    CHECK(solver.has_value());  // oracle: exact solver agrees
  }
  SUBCASE("unit factor") {
    auto x = mf1(a, "x^3", "x^2", "x");
    auto res = split_product_triangle(x, pp(a, "1"), pp(a, "x"));
    CHECK(verify_equivalence(res.splitting));
  }
  SUBCASE("potential factorization applies to every object") {
    auto b = qq({"x", "y"});
    auto x = mf1(b, "x*y", "x", "y");
    auto res = split_product_triangle(x, pp(b, "x"), pp(b, "y"));
    CHECK(verify_equivalence(res.splitting));
  }
  SUBCASE("non-annihilating product rejected") {
    auto x = mf1(a, "x^3", "x", "x^2");
    CHECK_THROWS_AS(split_product_triangle(x, pp(a, "1"), pp(a, "1")), HypothesisError);
  }
}

TEST_CASE("koszul binomial decomposition") {
  auto a = qq({"x"});
  auto x = mf1(a, "x^3", "x^2", "x");
  SUBCASE("n = 0 is the identity") {
    auto res = verify_koszul_binomial(x, {});
    CHECK(res.multiplicities == std::vector<unsigned>{1});
    CHECK(verify_equivalence(res.certificate));
  }
  SUBCASE("n = 1 is the Koszul splitting") {
    auto res = verify_koszul_binomial(x, {pp(a, "x")});
    CHECK(res.multiplicities == std::vector<unsigned>{1, 1});
    CHECK(res.iterated.rank() == 2);
    CHECK(verify_equivalence(res.certificate));
  }
  SUBCASE("n = 2 has ranks (1, 2, 1)") {
    auto res = verify_koszul_binomial(x, {pp(a, "x"), pp(a, "x")});
    CHECK(res.multiplicities == std::vector<unsigned>{1, 2, 1});
    CHECK(res.iterated.rank() == 4);
    CHECK(res.decomposition.rank() == 4);
    CHECK(verify_equivalence(res.certificate));
  }
  SUBCASE("failing precondition rejected") {
    auto y = mf1(a, "x^3", "x", "x^2");
    CHECK_THROWS_AS(verify_koszul_binomial(y, {pp(a, "1")}), HypothesisError);
  }
}

TEST_CASE("extension lemma instances: annihilators multiply across cones") {
  auto a = qq({"x"});
  std::mt19937 rng(777);
  auto m = mf1(a, "x^3", "x^2", "x");
  MatrixFactorization kx = koszul_tensor(m, pp(a, "x"));  // x annihilates this
  for (int i = 0; i < 6; ++i) {
    // E = cone(phi: C[-1] -> A) with A = kx, C = shift(kx): phi = mult by g
    Polynomial g = random_polynomial(a, rng, 2, 2);
    MFMorphism phi = mult_morphism(kx, g);
    ConeResult e = cone(phi);
    auto h = is_nullhomotopic(mult_morphism(e.cone, pp(a, "x^2")));  // x * x
    REQUIRE(h.has_value());
    CHECK(verify_homotopy(mult_morphism(e.cone, pp(a, "x^2")), *h));
  }
  SUBCASE("zero morphism variant with distinct factors") {
    auto b = qq({"x", "y"});
    auto n = mf1(b, "x^2*y^2", "x*y", "x*y");
    MatrixFactorization kx2 = koszul_tensor(n, pp(b, "x"));
    MatrixFactorization ky2 = koszul_tensor(n, pp(b, "y"));
    ConeResult e = cone(zero_morphism(shift(ky2), kx2));
    auto h = is_nullhomotopic(mult_morphism(e.cone, pp(b, "x*y")));
    REQUIRE(h.has_value());
  }
}

TEST_CASE("operations preserve validity on random objects") {
  auto a = qq({"x", "y"});
  std::mt19937 rng(1234);
  for (int i = 0; i < 15; ++i) {
    Polynomial u = random_nonzero(a, rng, 2, 2), v = random_nonzero(a, rng, 2, 2);
    auto x = mf1(a, (u * v).str(), u.str(), v.str());
    REQUIRE(validate(x));
    CHECK(validate(shift(x)));
    CHECK(validate(direct_sum(x, shift(x))));
    Polynomial g = random_polynomial(a, rng, 2, 2);
    CHECK(validate(cone(mult_morphism(x, g)).cone));
    CHECK(validate(koszul_tensor(x, g)));
  }
}

TEST_CASE("mf interchange format") {
  auto a = qq({"x"});
  auto x = mf1(a, "x^3", "x^2", "x");
  SUBCASE("writer output round-trips bit-exactly") {
    std::string doc = write_mf(x);
    MatrixFactorization back = read_mf(doc);
    CHECK(write_mf(back) == doc);
    CHECK(back.a == x.a);
    CHECK(back.b == x.b);
    CHECK(back.potential == x.potential);
  }
  SUBCASE("rank-2 with rationals") {
    auto k = koszul_tensor(x, pp(a, "x"));
    std::string doc = write_mf(k);
    CHECK(write_mf(read_mf(doc)) == doc);
  }
  SUBCASE("invalid factorization rejected") {
    std::string doc = "field: QQ\nvariables: x\npotential: x^3\nrank: 1\nA:\nx\nB:\nx\n";
    CHECK_THROWS_AS(read_mf(doc), HypothesisError);
  }
  SUBCASE("malformed document rejected") {
    CHECK_THROWS_AS(read_mf("field: QQ\nvariables: x\n"), ParseError);
  }
}
