#include "latpoly/poly.hpp"

#include <string>
#include <utility>

#include "latpoly/errors.hpp"

namespace latpoly {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw ArithmeticOverflow("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ArithmeticOverflow("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

}  // namespace checked

Poly::Poly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { canonicalize(); }

Poly::Poly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

Poly Poly::monomial(Coeff c, std::size_t k) {
  std::vector<Coeff> v(k + 1, 0);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
    coeffs_[k] = checked::add(coeffs_[k], other.coeffs_[k]);
  }
  canonicalize();
  return *this;
}

Poly Poly::shift_mul_x() const {
  if (is_zero()) return {};
  Poly r;
  r.coeffs_.reserve(coeffs_.size() + 1);
  r.coeffs_.push_back(0);
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

Poly::Coeff Poly::eval_at_one() const {
  Coeff sum = 0;
  for (Coeff c : coeffs_) sum = checked::add(sum, c);
  return sum;
}

std::string Poly::to_text() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    Coeff c = coeffs_[k];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    // magnitude without negating INT64_MIN
    std::string mag = std::to_string(c);
    if (c < 0) mag.erase(0, 1);
    if (k == 0) {
      out += mag;
      continue;
    }
    if (mag != "1") out += mag + "*";
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace latpoly
