#ifndef TCE_FIELD_HPP
#define TCE_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tce {

// Arithmetic in the prime field F_p, p < 2^31. All values are kept in
// [0, p), so products fit in int64 without overflow.
class PrimeField {
public:
  PrimeField() : p_(2) {}

  explicit PrimeField(std::int64_t p) : p_(p) {
    if (p < 2 || p > 2147483647LL)
      throw std::invalid_argument("characteristic out of range: " + std::to_string(p));
    if (!is_prime(p))
      throw std::invalid_argument("characteristic must be prime: " + std::to_string(p));
  }

  std::int64_t p() const { return p_; }

  std::int64_t normalize(std::int64_t a) const {
    std::int64_t r = a % p_;
    return r < 0 ? r + p_ : r;
  }

  std::int64_t add(std::int64_t a, std::int64_t b) const {
    std::int64_t r = a + b;
    return r >= p_ ? r - p_ : r;
  }

  std::int64_t sub(std::int64_t a, std::int64_t b) const {
    std::int64_t r = a - b;
    return r < 0 ? r + p_ : r;
  }

  std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }

  std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p_; }

  std::int64_t pow(std::int64_t a, std::int64_t e) const {
    a = normalize(a);
    std::int64_t r = 1;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::int64_t inverse(std::int64_t a) const {
    a = normalize(a);
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return normalize(t);
  }

  static bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
  std::int64_t p_;
};

} // namespace tce

#endif
