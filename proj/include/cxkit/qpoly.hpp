#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cxkit {

// Polynomial in the formal variable q with integer coefficients and
// nonnegative exponents. All arithmetic is exact.
class QPolynomial {
 public:
  QPolynomial() = default;

  static QPolynomial constant(long long c) {
    QPolynomial p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
  }

  static QPolynomial monomial(int exponent, long long c = 1) {
    QPolynomial p;
    p.add_term(exponent, c);
    return p;
  }

  void add_term(int exponent, long long c) {
    if (c == 0) return;
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    if (static_cast<std::size_t>(exponent) >= coeffs_.size()) {
      coeffs_.resize(static_cast<std::size_t>(exponent) + 1, 0);
    }
    coeffs_[static_cast<std::size_t>(exponent)] += c;
    trim();
  }

  long long coeff(int exponent) const {
    if (exponent < 0 || static_cast<std::size_t>(exponent) >= coeffs_.size()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent)];
  }

  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  bool is_zero() const { return coeffs_.empty(); }

  bool operator==(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const QPolynomial& o) const { return !(*this == o); }

  QPolynomial& operator+=(const QPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  // Coefficient of q^k equals that of q^{deg-k} for all k.
  bool is_palindromic() const {
    int d = degree();
    for (int k = 0; 2 * k <= d; ++k) {
      if (coeff(k) != coeff(d - k)) return false;
    }
    return true;
  }

  long long evaluate(long long q) const {
    long long acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (__builtin_mul_overflow(acc, q, &acc) ||
          __builtin_add_overflow(acc, coeffs_[i], &acc)) {
        throw std::overflow_error("polynomial evaluation overflows");
      }
    }
    return acc;
  }

  // Value at q = p^{e/2} for a prime p and odd or even integer e, split as
  // integer_part + sqrt_coeff * sqrt(p^e). The sqrt part vanishes exactly
  // when every odd power of q has zero total contribution.
  struct HalfPowerValue {
    long long integer_part = 0;
    long long sqrt_coeff = 0;
    bool exact() const { return sqrt_coeff == 0; }
  };

  HalfPowerValue evaluate_half_power(long long p, int e) const {
    if (p < 2 || e < 1) throw std::invalid_argument("need p >= 2 and e >= 1");
    HalfPowerValue v;
    long long q2 = ipow(p, e);  // q^2
    for (int m = 0; m <= degree(); ++m) {
      long long c = coeff(m);
      if (c == 0) continue;
      if (m % 2 == 0) {
        v.integer_part = checked_add(v.integer_part, checked_mul(c, ipow(q2, m / 2)));
      } else {
        v.sqrt_coeff = checked_add(v.sqrt_coeff, checked_mul(c, ipow(q2, (m - 1) / 2)));
      }
    }
    return v;
  }

  // "1 + 2*q + 2*q^2 + q^3", ascending exponents; "0" when zero.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
      long long c = coeff(k);
      if (c == 0) continue;
      if (!out.empty()) out += (c > 0) ? " + " : " - ";
      else if (c < 0)
        out += "-";
      unsigned long long a = (c < 0) ? static_cast<unsigned long long>(-(c + 1)) + 1
                                     : static_cast<unsigned long long>(c);
      if (k == 0) {
        out += std::to_string(a);
      } else {
        if (a != 1) out += std::to_string(a) + "*";
        out += (k == 1) ? "q" : "q^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  static long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("overflow");
    return r;
  }

  static long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("overflow");
    return r;
  }

  static long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
  }

  std::vector<long long> coeffs_;
};

}  // namespace cxkit
