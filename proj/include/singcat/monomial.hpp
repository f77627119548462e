#pragma once

#include <cstddef>
#include <vector>

namespace singcat {

/// Dense exponent vector of fixed length (one slot per ambient variable).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  static Monomial unit(std::size_t nvars, std::size_t var, int power = 1) {
    Monomial m(nvars);
    m.e_[var] = power;
    return m;
  }

  std::size_t nvars() const { return e_.size(); }
  int exponent(std::size_t i) const { return e_[i]; }
  void set_exponent(std::size_t i, int e) { e_[i] = e; }

  int total_degree() const {
    int d = 0;
    for (int e : e_) d += e;
    return d;
  }
  bool is_one() const {
    for (int e : e_)
      if (e) return false;
    return true;
  }

  Monomial times(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  /// this / d; requires d.divides(*this).
  Monomial quotient_by(const Monomial& d) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= d.e_[i];
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i)
      if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
    return r;
  }
  bool coprime_with(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i]) s.push_back(i);
    return s;
  }

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> e_;
};

enum class OrderKind { lex, grevlex };

/// Total multiplicative monomial order: lex or degrevlex, over a variable
/// priority permutation (priority[0] = most significant variable index).
class MonomialOrder {
 public:
  MonomialOrder() = default;
  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder lex(std::vector<int> priority);
  static MonomialOrder grevlex(std::vector<int> priority);

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return priority_.size(); }
  const std::vector<int>& priority() const { return priority_; }

  /// >0 if a comes after b (a is greater), <0 if smaller, 0 if equal.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder&) const = default;

 private:
  OrderKind kind_ = OrderKind::grevlex;
  std::vector<int> priority_;
};

}  // namespace singcat
