#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "singcat/groebner.hpp"
#include "singcat/parser.hpp"

namespace singcat::test {

inline AmbientPtr qq(std::vector<std::string> vars) {
  return make_ambient(Field::rationals(), std::move(vars));
}

inline Polynomial pp(const AmbientPtr& a, const std::string& text) {
  return parse_polynomial(text, a);
}

inline Ideal ii(const AmbientPtr& a, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(pp(a, g));
  return Ideal(a, std::move(ps));
}

/// Independent division oracle: reduces f by G picking the applicable divisor
/// in a shuffled order at every step. For a Groebner basis the zero-ness of
/// the remainder must agree with normal_form regardless of choices.
inline Polynomial shuffled_division(const Polynomial& f, const std::vector<Polynomial>& basis,
                                    std::mt19937& rng) {
  const AmbientPtr& amb = f.ambient();
  const Field& field = amb->field;
  Polynomial p = f;
  Polynomial rem = Polynomial::zero(amb);
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    std::vector<std::size_t> order(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    bool reduced = false;
    for (std::size_t k : order) {
      if (basis[k].is_zero()) continue;
      const Term& bl = basis[k].leading_term();
      if (bl.mono.divides(lt.mono)) {
        p = p - basis[k].times_term(lt.mono.quotient_by(bl.mono), field.div(lt.coeff, bl.coeff));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      Polynomial t = Polynomial::monomial(amb, lt.mono, lt.coeff);
      rem = rem + t;
      p = p - t;
    }
  }
  return rem;
}

/// Random polynomial: up to `terms` terms, exponents < max_exp per variable.
inline Polynomial random_polynomial(const AmbientPtr& amb, std::mt19937& rng, int terms = 4,
                                    int max_exp = 3, int coeff_range = 5) {
  std::uniform_int_distribution<int> nterms(0, terms);
  std::uniform_int_distribution<int> exp(0, max_exp - 1);
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::vector<Term> ts;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m(amb->nvars());
    for (std::size_t v = 0; v < amb->nvars(); ++v) m.set_exponent(v, exp(rng));
    ts.push_back({m, Scalar(coeff(rng))});
  }
  return Polynomial::from_terms(amb, std::move(ts));
}

inline Polynomial random_nonzero(const AmbientPtr& amb, std::mt19937& rng, int terms = 4,
                                 int max_exp = 3) {
  for (;;) {
    Polynomial p = random_polynomial(amb, rng, terms, max_exp);
    if (!p.is_zero()) return p;
  }
}

/// Direct lattice count of standard monomials of a *monomial* ideal, used as
/// an independent oracle for quotient_length on staircases.
inline unsigned long staircase_length(const std::vector<Monomial>& gens, std::size_t nvars,
                                      int box) {
  std::vector<int> e(nvars, 0);
  unsigned long count = 0;
  for (;;) {
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars; ++i) m.set_exponent(i, e[i]);
    bool divisible = false;
    for (const auto& g : gens)
      if (g.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) ++count;
    std::size_t i = 0;
    while (i < nvars && ++e[i] >= box) e[i++] = 0;
    if (i == nvars) break;
  }
  return count;
}

}  // namespace singcat::test
