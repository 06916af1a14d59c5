#ifndef TCE_POLY_HPP
#define TCE_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tce/field.hpp"

namespace tce {

// Exponent vector. Variables are x_1 > x_2 > ... > x_r; entry i is the
// exponent of x_{i+1}.
using Monomial = std::vector<int>;

inline int mono_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

// Graded lexicographic order, descending: higher degree first, then
// lexicographically larger exponent vector first.
struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    return a > b; // vector lex
  }
};

inline bool mono_divides(const Monomial& a, const Monomial& b) {
  // does a divide b?
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial q(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
  return q;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial q(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) q[i] = a[i] + b[i];
  return q;
}

// Sparse multivariate polynomial over F_p. Zero coefficients are never
// stored; terms are kept in graded-lex descending order.
class Poly {
public:
  using TermMap = std::map<Monomial, std::int64_t, GrlexDesc>;

  Poly() : field_(), nvars_(0) {}
  Poly(PrimeField f, int nvars) : field_(f), nvars_(nvars) {}

  static Poly zero(PrimeField f, int nvars) { return Poly(f, nvars); }

  static Poly constant(PrimeField f, int nvars, std::int64_t c) {
    Poly r(f, nvars);
    r.add_term(Monomial(nvars, 0), c);
    return r;
  }

  static Poly monomial(PrimeField f, int nvars, Monomial m, std::int64_t c = 1) {
    Poly r(f, nvars);
    r.add_term(std::move(m), c);
    return r;
  }

  static Poly variable(PrimeField f, int nvars, int i) {
    Monomial m(nvars, 0);
    m[i] = 1;
    return monomial(f, nvars, std::move(m));
  }

  const PrimeField& field() const { return field_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Monomial m, std::int64_t c) {
    c = field_.normalize(c);
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), c);
    } else {
      it->second = field_.add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Total degree of the leading term; -1 for the zero polynomial.
  int degree() const {
    if (terms_.empty()) return -1;
    return mono_degree(terms_.begin()->first);
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = degree();
    for (const auto& [m, c] : terms_)
      if (mono_degree(m) != d) return false;
    return true;
  }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading monomial of zero");
    return terms_.begin()->first;
  }

  std::int64_t leading_coeff() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
  }

  std::int64_t coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }

  Poly operator+(const Poly& o) const {
    check_compatible(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  Poly operator-(const Poly& o) const {
    check_compatible(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, field_.neg(c));
    return r;
  }

  Poly operator*(const Poly& o) const {
    check_compatible(o);
    Poly r(field_, nvars_);
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_)
        r.add_term(mono_mul(m1, m2), field_.mul(c1, c2));
    return r;
  }

  Poly scaled(std::int64_t c) const {
    c = field_.normalize(c);
    Poly r(field_, nvars_);
    for (const auto& [m, cc] : terms_) r.add_term(m, field_.mul(cc, c));
    return r;
  }

  Poly shifted(const Monomial& m) const {
    Poly r(field_, nvars_);
    for (const auto& [mm, c] : terms_) r.add_term(mono_mul(mm, m), c);
    return r;
  }

  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // d/dx_i, exact over F_p (terms with exponent divisible by p drop out).
  Poly derivative(int i) const {
    Poly r(field_, nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[i] == 0) continue;
      Monomial mm = m;
      std::int64_t k = field_.normalize(mm[i]);
      mm[i] -= 1;
      r.add_term(std::move(mm), field_.mul(c, k));
    }
    return r;
  }

private:
  void check_compatible(const Poly& o) const {
    if (nvars_ != o.nvars_ || !(field_ == o.field_))
      throw std::invalid_argument("polynomials over different rings");
  }

  PrimeField field_;
  int nvars_;
  TermMap terms_;
};

// --- text format ---------------------------------------------------------
//
// Sums of terms `c*x^a*y^b*z^c`; `^1` and a leading `1*` may be elided.
// The canonical printer emits terms in graded-lex descending order with
// coefficients normalized to [1, p-1] and no whitespace, so reports are
// byte-stable and reparse to the same polynomial.

std::string poly_to_string(const Poly& f, const std::vector<std::string>& vars);
Poly parse_poly(const PrimeField& field, const std::vector<std::string>& vars,
                const std::string& text);

// Enumerates all exponent vectors of total degree n in nvars variables,
// graded-lex descending. Empty for n < 0.
std::vector<Monomial> monomials_of_degree(int nvars, int n);

} // namespace tce

#endif
