#ifndef TCE_RING_HPP
#define TCE_RING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tce/matrix.hpp"
#include "tce/poly.hpp"

namespace tce {

// Standard graded ring F_p[x_1..x_r], optionally modulo one homogeneous
// hypersurface relation F. All variables have weight 1.
//
// Since (F) is principal, {F} is a Groebner basis for any term order, so
// division by F alone computes canonical normal forms. The standard
// monomials of degree n are the degree-n monomials not divisible by the
// graded-lex leading monomial of F.
//
// The per-degree basis cache is a write-once memo guarded by a mutex;
// everything else is immutable after construction, so independent
// computations on the same ring may run concurrently.
class GradedRing {
public:
  GradedRing(PrimeField field, std::vector<std::string> vars)
      : field_(field), vars_(std::move(vars)) {}

  GradedRing(PrimeField field, std::vector<std::string> vars, Poly relation)
      : field_(field), vars_(std::move(vars)) {
    if (relation.is_zero()) throw std::invalid_argument("relation must be nonzero");
    if (!relation.is_homogeneous())
      throw std::invalid_argument("relation must be homogeneous");
    if (relation.nvars() != nvars())
      throw std::invalid_argument("relation variable count mismatch");
    if (relation.degree() < 1)
      throw std::invalid_argument("relation must have positive degree");
    // monic leading coefficient simplifies division and leaves (F) unchanged
    relation_ = relation.scaled(field_.inverse(relation.leading_coeff()));
  }

  const PrimeField& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  bool has_relation() const { return relation_.has_value(); }
  const Poly& relation() const {
    if (!relation_) throw std::domain_error("ring has no relation");
    return *relation_;
  }
  int relation_degree() const { return relation_ ? relation_->degree() : 0; }

  Poly parse(const std::string& text) const { return parse_poly(field_, vars_, text); }
  std::string print(const Poly& f) const { return poly_to_string(f, vars_); }
  Poly zero() const { return Poly::zero(field_, nvars()); }
  Poly one() const { return Poly::constant(field_, nvars(), 1); }
  Poly var(int i) const { return Poly::variable(field_, nvars(), i); }

  // dim_{F_p} R_n by the binomial formula; 0 for n < 0.
  std::int64_t graded_piece_dim(int n) const {
    std::int64_t dim = binom(n + nvars() - 1, nvars() - 1);
    if (relation_) dim -= binom(n - relation_->degree() + nvars() - 1, nvars() - 1);
    return dim;
  }

  // Normal form modulo (F) (identity map when there is no relation).
  Poly reduce(Poly f) const {
    if (!f.is_homogeneous())
      throw std::invalid_argument("reduce: input must be homogeneous");
    if (!relation_ || f.is_zero()) return f;
    const Poly& F = *relation_;
    const Monomial& lm = F.leading_monomial();
    for (;;) {
      const Monomial* hit = nullptr;
      std::int64_t coeff = 0;
      for (const auto& [m, c] : f.terms()) {
        if (mono_divides(lm, m)) {
          hit = &m;
          coeff = c;
          break; // terms are in grlex-desc order, first hit is the largest
        }
      }
      if (!hit) return f;
      Monomial q = mono_div(*hit, lm);
      f = f - F.shifted(q).scaled(coeff);
    }
  }

  struct Basis {
    std::vector<Monomial> monomials;          // standard monomials, grlex desc
    std::map<Monomial, std::size_t, GrlexDesc> index;
  };

  const Basis& basis(int n) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = basis_cache_.find(n);
    if (it != basis_cache_.end()) return *it->second;
    auto b = std::make_unique<Basis>();
    for (Monomial& m : monomials_of_degree(nvars(), n)) {
      if (relation_ && mono_divides(relation_->leading_monomial(), m)) continue;
      b->index.emplace(m, b->monomials.size());
      b->monomials.push_back(std::move(m));
    }
    auto [pos, inserted] = basis_cache_.emplace(n, std::move(b));
    return *pos->second;
  }

  // Coordinates of a reduced homogeneous polynomial of degree n in the
  // standard-monomial basis of R_n.
  std::vector<std::int64_t> coordinates(const Poly& reduced, int n) const {
    const Basis& b = basis(n);
    std::vector<std::int64_t> v(b.monomials.size(), 0);
    for (const auto& [m, c] : reduced.terms()) {
      auto it = b.index.find(m);
      if (it == b.index.end())
        throw std::logic_error("coordinates: term outside the standard basis");
      v[it->second] = c;
    }
    return v;
  }

  Poly from_coordinates(const std::vector<std::int64_t>& v, int n) const {
    const Basis& b = basis(n);
    if (v.size() != b.monomials.size())
      throw std::invalid_argument("from_coordinates: size mismatch");
    Poly f(field_, nvars());
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) f.add_term(b.monomials[i], v[i]);
    return f;
  }

  // Matrix of multiplication by f from R_source to R_{source+deg f} in the
  // standard-monomial bases. f with deg f + source < 0 or a zero f gives the
  // zero map.
  FpMatrix mult_matrix(const Poly& f, int source_degree) const {
    if (!f.is_homogeneous())
      throw std::invalid_argument("mult_matrix: multiplier must be homogeneous");
    Poly fr = reduce(f);
    int target_degree = source_degree + (fr.is_zero() ? 0 : fr.degree());
    const Basis& src = basis(source_degree);
    const Basis& dst = basis(target_degree);
    FpMatrix m(field_, dst.monomials.size(), src.monomials.size());
    if (fr.is_zero()) return m;
    for (std::size_t j = 0; j < src.monomials.size(); ++j) {
      Poly col = reduce(fr.shifted(src.monomials[j]));
      for (const auto& [mono, c] : col.terms()) {
        auto it = dst.index.find(mono);
        m.at(it->second, j) = c;
      }
    }
    return m;
  }

  // [mult(f_1) | ... | mult(f_k)] : (+) R_{n - deg f_i} -> R_n. Generators of
  // degree > n contribute no columns. Offsets of each block are returned via
  // `offsets` when non-null.
  FpMatrix stacked_mult_matrix(const std::vector<Poly>& gens, int n,
                               std::vector<std::size_t>* offsets = nullptr) const {
    std::size_t rows = static_cast<std::size_t>(std::max<std::int64_t>(graded_piece_dim(n), 0));
    std::size_t total_cols = 0;
    std::vector<FpMatrix> blocks;
    for (const Poly& g : gens) {
      int src = n - g.degree();
      if (offsets) offsets->push_back(total_cols);
      if (g.is_zero() || src < 0) {
        blocks.emplace_back(field_, rows, 0);
        continue;
      }
      FpMatrix b = mult_matrix(g, src);
      total_cols += b.cols();
      blocks.push_back(std::move(b));
    }
    FpMatrix m(field_, rows, total_cols);
    std::size_t col0 = 0;
    for (const FpMatrix& b : blocks) {
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m.at(r, col0 + c) = b.at(r, c);
      col0 += b.cols();
    }
    return m;
  }

  // f^e with reduction after every product, staying inside graded pieces.
  Poly pow_reduced(const Poly& f, std::int64_t e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Poly base = reduce(f);
    Poly result = one();
    while (e > 0) {
      if (e & 1) result = reduce(result * base);
      e >>= 1;
      if (e) base = reduce(base * base);
    }
    return result;
  }

  static std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }

private:
  PrimeField field_;
  std::vector<std::string> vars_;
  std::optional<Poly> relation_;

  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::unique_ptr<Basis>> basis_cache_;
};

} // namespace tce

#endif
