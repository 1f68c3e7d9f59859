#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials with exact, overflow-checked
 *        64-bit integer coefficients.
 *
 * Every generating polynomial in this library (lattice polynomials, the
 * crossing polynomials of partial matchings, the r-index polynomials of even
 * trees) is a small-degree counting polynomial, so a dense coefficient vector
 * is used. Arithmetic never wraps: any overflow throws ArithmeticOverflow.
 */

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace latpoly {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);

}  // namespace checked

class Poly {
 public:
  using Coeff = std::int64_t;

  Poly() = default;
  Poly(std::initializer_list<Coeff> coeffs);
  explicit Poly(std::vector<Coeff> coeffs);

  // c * x^k
  static Poly monomial(Coeff c, std::size_t k);

  // coeffs()[k] is the coefficient of x^k; empty for the zero polynomial.
  std::span<const Coeff> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of x^k, zero past the degree.
  Coeff operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }

  Poly& operator+=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }

  Poly shift_mul_x() const;
  Coeff eval_at_one() const;

  // "2 + 3*x + x^2"; the zero polynomial renders "0".
  std::string to_text() const;

  bool operator==(const Poly&) const = default;

 private:
  void canonicalize();

  std::vector<Coeff> coeffs_;
};

}  // namespace latpoly
