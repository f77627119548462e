#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace singcat {

/// Base class of all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text; carries the byte offset of the first bad token.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
  std::size_t offset;
};

/// A stated hypothesis of an operation does not hold for the given input.
struct HypothesisError : Error {
  using Error::Error;
};

/// A configured resource cap (iteration bound, search bound) was hit.
struct CapError : Error {
  using Error::Error;
};

/// Operands live in different ambient rings.
struct AmbientError : Error {
  using Error::Error;
};

// Coefficients are exact: arbitrary-precision rationals, or residues of a
// prime field stored as integers in [0, p). Both use mpq_class storage; the
// Field decides the arithmetic.
using Scalar = mpq_class;

enum class FieldKind { rationals, prime };

class Field {
 public:
  static Field rationals();
  static Field prime(unsigned long p);  // throws ParseError-free HypothesisError if p is not prime

  FieldKind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == FieldKind::prime; }
  unsigned long characteristic() const { return kind_ == FieldKind::prime ? p_ : 0; }

  /// Canonical representative: lowest terms for rationals, [0, p) for residues.
  Scalar normalize(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inverse(const Scalar& a) const;

  Scalar from_long(long v) const { return normalize(Scalar(v)); }
  /// Parses "n" or "n/d" (arbitrary precision).
  Scalar parse(const std::string& text) const;

  bool is_zero(const Scalar& a) const { return a == 0; }
  bool is_one(const Scalar& a) const { return a == 1; }

  std::string str(const Scalar& a) const;
  std::string name() const;  // "QQ" or "F<p>"

  bool operator==(const Field&) const = default;

 private:
  Field(FieldKind k, unsigned long p) : kind_(k), p_(p) {}
  FieldKind kind_;
  unsigned long p_ = 0;
};

}  // namespace singcat
