#ifndef PCK_CYCLOTOMIC_HPP
#define PCK_CYCLOTOMIC_HPP

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pck/rational.hpp"

namespace pck {

/// Euler's totient.
int euler_phi(int n);

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
/// Computed by dividing x^n - 1 by Phi_d for every proper divisor d, and
/// cached for the lifetime of the process (thread-safe).
const std::vector<Rational>& cyclotomic_polynomial(int n);

/// An element of Q(zeta_N), stored as its unique representative of degree
/// < phi(N) modulo Phi_N. Order 1 is plain Q.
///
/// Binary operations require equal orders and throw std::invalid_argument
/// otherwise. Values are immutable in practice; every operation returns a
/// fresh reduced element.
class CycScalar {
 public:
  /// Zero of Q.
  CycScalar();
  /// Zero of Q(zeta_order).
  explicit CycScalar(int order);
  CycScalar(int order, const Rational& value);
  /// Sum of coeffs[i] * zeta^i; any length is accepted and reduced.
  CycScalar(int order, std::vector<Rational> coeffs);

  static CycScalar root_of_unity(int order, std::int64_t k);

  /// Parses the scalar literal grammar: terms `c` or `c*z^k` (also `z`,
  /// `z^k`, `c*z`) joined by `+`/`-`, with `c` an int or int/int and `z`
  /// denoting zeta_order. Whitespace is ignored.
  static CycScalar parse(std::string_view text, int order);

  int order() const { return order_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;

  CycScalar inverse() const;

  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator/=(const CycScalar& o) { return *this *= o.inverse(); }

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
  CycScalar operator-() const;

  CycScalar scaled(const Rational& r) const;

  friend bool operator==(const CycScalar& a, const CycScalar& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  /// Canonical literal, e.g. "-1/2 + 3*z^2". Zero prints as "0".
  std::string to_literal() const;

 private:
  void require_same_order(const CycScalar& o) const;

  int order_ = 1;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycScalar& c);

inline CycScalar cyc_add(const CycScalar& a, const CycScalar& b) { return a + b; }
inline CycScalar cyc_mul(const CycScalar& a, const CycScalar& b) { return a * b; }
inline CycScalar cyc_inv(const CycScalar& a) { return a.inverse(); }
inline CycScalar root_of_unity(int order, std::int64_t k) { return CycScalar::root_of_unity(order, k); }

inline bool is_zero(const CycScalar& c) { return c.is_zero(); }
inline CycScalar zero_like(const CycScalar& c) { return CycScalar(c.order()); }
inline CycScalar one_like(const CycScalar& c) { return CycScalar(c.order(), Rational(1)); }

}  // namespace pck

#endif  // PCK_CYCLOTOMIC_HPP
