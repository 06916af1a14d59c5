#ifndef TCE_MATRIX_HPP
#define TCE_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tce/field.hpp"

namespace tce {

// Dense matrix over F_p. Row reduction is plain Gauss-Jordan with the first
// nonzero pivot in column order, so every derived object (rank, kernel
// basis, particular solutions) is deterministic.
class FpMatrix {
public:
  FpMatrix() : field_(), rows_(0), cols_(0) {}
  FpMatrix(PrimeField f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  std::int64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void set(std::size_t r, std::size_t c, std::int64_t v) { at(r, c) = field_.normalize(v); }

  static FpMatrix identity(PrimeField f, std::size_t n) {
    FpMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  // Horizontal concatenation [A | B].
  static FpMatrix hcat(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hcat: row mismatch");
    FpMatrix m(a.field_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t c = 0; c < a.cols_; ++c) m.at(r, c) = a.at(r, c);
      for (std::size_t c = 0; c < b.cols_; ++c) m.at(r, a.cols_ + c) = b.at(r, c);
    }
    return m;
  }

  // Vertical concatenation [A; B].
  static FpMatrix vcat(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("vcat: column mismatch");
    FpMatrix m(a.field_, a.rows_ + b.rows_, a.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t c = 0; c < a.cols_; ++c) m.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows_; ++r)
      for (std::size_t c = 0; c < b.cols_; ++c) m.at(a.rows_ + r, c) = b.at(r, c);
    return m;
  }

  FpMatrix operator*(const FpMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    FpMatrix m(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        std::int64_t a = at(r, k);
        if (a == 0) continue;
        for (std::size_t c = 0; c < o.cols_; ++c)
          m.at(r, c) = field_.add(m.at(r, c), field_.mul(a, o.at(k, c)));
      }
    return m;
  }

  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    std::vector<std::int64_t> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::int64_t acc = 0;
      for (std::size_t c = 0; c < cols_; ++c)
        if (at(r, c) != 0 && v[c] != 0) acc = field_.add(acc, field_.mul(at(r, c), v[c]));
      out[r] = acc;
    }
    return out;
  }

  bool operator==(const FpMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  // In-place reduced row echelon form; returns pivot column indices.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = row;
      while (sel < rows_ && at(sel, col) == 0) ++sel;
      if (sel == rows_) continue;
      if (sel != row)
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(row, c));
      std::int64_t inv = field_.inverse(at(row, col));
      for (std::size_t c = col; c < cols_; ++c) at(row, c) = field_.mul(at(row, c), inv);
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row) continue;
        std::int64_t f = at(r, col);
        if (f == 0) continue;
        for (std::size_t c = col; c < cols_; ++c)
          at(r, c) = field_.sub(at(r, c), field_.mul(f, at(row, c)));
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    FpMatrix copy = *this;
    return copy.rref().size();
  }

  // Basis of the right kernel, one column vector per free column of the
  // RREF, ordered by free column index.
  std::vector<std::vector<std::int64_t>> kernel_basis() const {
    FpMatrix m = *this;
    std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::int64_t>> basis;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (is_pivot[j]) continue;
      std::vector<std::int64_t> v(cols_, 0);
      v[j] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i)
        v[pivots[i]] = field_.neg(m.at(i, j));
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Solves Ax = b; free variables are set to 0 (read off the RREF), which
  // makes certificates reproducible.
  std::optional<std::vector<std::int64_t>> solve(const std::vector<std::int64_t>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve: rhs size mismatch");
    FpMatrix aug(field_, rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
      aug.at(r, cols_) = field_.normalize(b[r]);
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt; // inconsistent
    std::vector<std::int64_t> x(cols_, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, cols_);
    return x;
  }

private:
  PrimeField field_;
  std::size_t rows_, cols_;
  std::vector<std::int64_t> data_;
};

} // namespace tce

#endif
