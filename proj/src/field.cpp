#include "singcat/field.hpp"

namespace singcat {

Field Field::rationals() { return Field(FieldKind::rationals, 0); }

Field Field::prime(unsigned long p) {
  mpz_class n(static_cast<unsigned long>(p));
  if (p < 2 || mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) {
    throw HypothesisError("modulus " + std::to_string(p) + " is not prime");
  }
  return Field(FieldKind::prime, p);
}

Scalar Field::normalize(const Scalar& a) const {
  if (kind_ == FieldKind::rationals) {
    Scalar r = a;
    r.canonicalize();
    return r;
  }
  // num * den^{-1} mod p, result in [0, p)
  mpz_class p(p_);
  mpz_class num = a.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = a.get_den() % p;
  if (den < 0) den += p;
  if (den == 0) throw HypothesisError("denominator divisible by the field characteristic");
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
      throw HypothesisError("denominator not invertible modulo " + std::to_string(p_));
    }
    num = (num * inv) % p;
  }
  return Scalar(num);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
Scalar Field::sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
Scalar Field::mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }

Scalar Field::div(const Scalar& a, const Scalar& b) const {
  if (b == 0) throw HypothesisError("division by zero coefficient");
  if (kind_ == FieldKind::rationals) return normalize(a / b);
  return mul(a, inverse(b));
}

Scalar Field::neg(const Scalar& a) const { return normalize(-a); }

Scalar Field::inverse(const Scalar& a) const {
  if (a == 0) throw HypothesisError("zero coefficient has no inverse");
  if (kind_ == FieldKind::rationals) return normalize(1 / a);
  mpz_class p(p_);
  mpz_class v = normalize(a).get_num();
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw HypothesisError("residue not invertible modulo " + std::to_string(p_));
  }
  return Scalar(inv);
}

Scalar Field::parse(const std::string& text) const {
  try {
    Scalar q(text);
    return normalize(q);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad numeric literal '" + text + "'", 0);
  }
}

std::string Field::str(const Scalar& a) const { return a.get_str(); }

std::string Field::name() const {
  return kind_ == FieldKind::rationals ? "QQ" : "F" + std::to_string(p_);
}

}  // namespace singcat
