#include "singcat/monomial.hpp"

#include <numeric>

namespace singcat {

static std::vector<int> identity_perm(std::size_t n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) { return lex(identity_perm(nvars)); }
MonomialOrder MonomialOrder::grevlex(std::size_t nvars) { return grevlex(identity_perm(nvars)); }

MonomialOrder MonomialOrder::lex(std::vector<int> priority) {
  MonomialOrder o;
  o.kind_ = OrderKind::lex;
  o.priority_ = std::move(priority);
  return o;
}

MonomialOrder MonomialOrder::grevlex(std::vector<int> priority) {
  MonomialOrder o;
  o.kind_ = OrderKind::grevlex;
  o.priority_ = std::move(priority);
  return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = priority_.size();
  if (kind_ == OrderKind::lex) {
    for (std::size_t k = 0; k < n; ++k) {
      int d = a.exponent(priority_[k]) - b.exponent(priority_[k]);
      if (d) return d;
    }
    return 0;
  }
  // grevlex: total degree first, then the last differing variable in priority
  // sequence decides, with the smaller exponent winning.
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da - db;
  for (std::size_t k = n; k-- > 0;) {
    int d = a.exponent(priority_[k]) - b.exponent(priority_[k]);
    if (d) return -d;
  }
  return 0;
}

}  // namespace singcat
