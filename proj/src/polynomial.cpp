#include "singcat/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace singcat {

AmbientPtr make_ambient(Field field, std::vector<std::string> vars) {
  MonomialOrder order = MonomialOrder::grevlex(vars.size());
  return make_ambient(std::move(field), std::move(vars), std::move(order));
}

AmbientPtr make_ambient(Field field, std::vector<std::string> vars, MonomialOrder order) {
  return std::make_shared<const Ambient>(Ambient{std::move(field), std::move(vars), std::move(order)});
}

AmbientPtr with_order(const AmbientPtr& a, MonomialOrder order) {
  if (a->order == order) return a;
  return make_ambient(a->field, a->vars, std::move(order));
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!a.ambient() || !b.ambient() || !a.ambient()->same_ring(*b.ambient())) {
    throw AmbientError("operands live in different ambient rings");
  }
}

Polynomial Polynomial::zero(AmbientPtr a) {
  Polynomial p;
  p.ambient_ = std::move(a);
  return p;
}

Polynomial Polynomial::constant(AmbientPtr a, const Scalar& c) {
  Monomial one(a ? a->nvars() : 0);
  return monomial(std::move(a), std::move(one), c);
}

Polynomial Polynomial::variable(AmbientPtr a, std::size_t idx) {
  return monomial(a, Monomial::unit(a->nvars(), idx), Scalar(1));
}

Polynomial Polynomial::monomial(AmbientPtr a, Monomial m, const Scalar& c) {
  Polynomial p;
  p.ambient_ = std::move(a);
  Scalar v = p.ambient_->field.normalize(c);
  if (v != 0) p.terms_.push_back({std::move(m), std::move(v)});
  return p;
}

Polynomial Polynomial::from_terms(AmbientPtr a, std::vector<Term> terms) {
  const Field& field = a->field;
  const MonomialOrder& order = a->order;
  auto desc = [&order](const Monomial& x, const Monomial& y) { return order.compare(x, y) > 0; };
  std::map<Monomial, Scalar, decltype(desc)> acc(desc);
  for (auto& t : terms) {
    Scalar v = field.normalize(t.coeff);
    if (v == 0) continue;
    auto [it, fresh] = acc.emplace(std::move(t.mono), v);
    if (!fresh) {
      it->second = field.add(it->second, v);
      if (it->second == 0) acc.erase(it);
    }
  }
  Polynomial p;
  p.ambient_ = std::move(a);
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) p.terms_.push_back({m, c});
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return terms_.front();
}

Scalar Polynomial::constant_coefficient() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Scalar(0);
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

std::vector<std::size_t> Polynomial::variables_used() const {
  std::vector<bool> used(ambient_ ? ambient_->nvars() : 0, false);
  for (const auto& t : terms_)
    for (std::size_t v : t.mono.support()) used[v] = true;
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (used[i]) r.push_back(i);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(*this, o);
  const Polynomial& rhs = ambient_->order == o.ambient_->order ? o : o.in_ambient(ambient_);
  const Field& field = ambient_->field;
  const MonomialOrder& order = ambient_->order;
  Polynomial r;
  r.ambient_ = ambient_;
  r.terms_.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    int c = order.compare(terms_[i].mono, rhs.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(rhs.terms_[j++]);
    } else {
      Scalar s = field.add(terms_[i].coeff, rhs.terms_[j].coeff);
      if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < rhs.terms_.size(); ++j) r.terms_.push_back(rhs.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = ambient_->field.neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(*this, o);
  const Polynomial& rhs = ambient_->order == o.ambient_->order ? o : o.in_ambient(ambient_);
  const Field& field = ambient_->field;
  std::vector<Term> prods;
  prods.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : rhs.terms_)
      prods.push_back({a.mono.times(b.mono), field.mul(a.coeff, b.coeff)});
  return from_terms(ambient_, std::move(prods));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  const Field& field = ambient_->field;
  Scalar v = field.normalize(c);
  if (v == 0) return zero(ambient_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = field.mul(t.coeff, v);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  const Field& field = ambient_->field;
  Scalar v = field.normalize(c);
  if (v == 0) return zero(ambient_);
  Polynomial r;
  r.ambient_ = ambient_;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono.times(m), field.mul(t.coeff, v)});
  return r;  // multiplying by a monomial preserves the term order
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(ambient_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ambient_->nvars()) throw Error("unknown variable index in derivative");
  const Field& field = ambient_->field;
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.mono.exponent(var);
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set_exponent(var, e - 1);
    out.push_back({std::move(m), field.mul(t.coeff, Scalar(e))});
  }
  return from_terms(ambient_, std::move(out));
}

Polynomial Polynomial::substitute_zero(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.exponent(var) == 0) out.push_back(t);
  return from_terms(ambient_, std::move(out));
}

Polynomial Polynomial::in_ambient(const AmbientPtr& target) const {
  if (!ambient_->same_ring(*target)) throw AmbientError("in_ambient requires the same ring");
  if (ambient_->order == target->order) {
    Polynomial r = *this;
    r.ambient_ = target;
    return r;
  }
  return from_terms(target, terms_);
}

Polynomial Polynomial::mapped(const AmbientPtr& target, const std::vector<int>& var_map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < ambient_->nvars(); ++i) {
      int e = t.mono.exponent(i);
      if (!e) continue;
      if (var_map[i] < 0) throw AmbientError("variable has no image under the mapping");
      m.set_exponent(static_cast<std::size_t>(var_map[i]), e);
    }
    out.push_back({std::move(m), t.coeff});
  }
  return from_terms(target, std::move(out));
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  const Field& field = ambient_->field;
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    Scalar mag = negative ? Scalar(-c) : c;
    bool printed_coeff = false;
    if (mag != 1 || t.mono.is_one()) {
      os << field.str(mag);
      printed_coeff = true;
    }
    for (std::size_t v = 0; v < t.mono.nvars(); ++v) {
      int e = t.mono.exponent(v);
      if (!e) continue;
      if (printed_coeff) os << "*";
      printed_coeff = true;
      os << ambient_->vars[v];
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ambient_ || !o.ambient_) return terms_.empty() && o.terms_.empty();
  if (!ambient_->same_ring(*o.ambient_)) return false;
  if (ambient_->order == o.ambient_->order) return terms_ == o.terms_;
  return terms_ == o.in_ambient(ambient_).terms_;
}

}  // namespace singcat
