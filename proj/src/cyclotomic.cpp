#include "pck/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace pck {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  trim(out);
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder; divisor must be nonzero after trimming.
std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
  if (den.empty()) throw std::domain_error("polynomial division by zero");
  trim(num);
  if (num.size() < den.size()) return {{}, num};
  Poly quot(num.size() - den.size() + 1);
  const Rational lead_inv = den.back().inverse();
  for (std::size_t k = num.size() - 1;; --k) {
    const Rational c = num[k] * lead_inv;
    const std::size_t shift = k - (den.size() - 1);
    quot[shift] = c;
    if (!c.is_zero()) {
      for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    }
    if (k == den.size() - 1) break;
  }
  trim(num);
  trim(quot);
  return {quot, num};
}

// Reduces modulo the monic polynomial phi into exactly deg(phi) slots.
Poly reduce_mod(Poly p, const Poly& phi) {
  const std::size_t d = phi.size() - 1;
  for (std::size_t k = p.size(); k-- > d;) {
    const Rational c = p[k];
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i <= d; ++i) p[k - d + i] -= c * phi[i];
  }
  p.resize(d);
  return p;
}

std::mutex cache_mutex;
std::map<int, Poly> cache;

Poly compute_cyclotomic(int n) {
  Poly p(static_cast<std::size_t>(n) + 1);
  p[0] = Rational(-1);
  p[n] = Rational(1);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = poly_divmod(p, cyclotomic_polynomial(d)).first;
  }
  return p;
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi of non-positive integer");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Rational>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  Poly p = compute_cyclotomic(n);
  std::lock_guard lock(cache_mutex);
  // std::map references stay valid across later insertions.
  return cache.try_emplace(n, std::move(p)).first->second;
}

CycScalar::CycScalar() : CycScalar(1) {}

CycScalar::CycScalar(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), Rational(0));
}

CycScalar::CycScalar(int order, const Rational& value) : CycScalar(order) { coeffs_[0] = value; }

CycScalar::CycScalar(int order, std::vector<Rational> coeffs) : order_(order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  const auto& phi = cyclotomic_polynomial(order);
  if (coeffs.size() < phi.size() - 1) coeffs.resize(phi.size() - 1);
  coeffs_ = reduce_mod(std::move(coeffs), phi);
}

CycScalar CycScalar::root_of_unity(int order, std::int64_t k) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::int64_t e = k % order;
  if (e < 0) e += order;
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
  c[static_cast<std::size_t>(e)] = Rational(1);
  return CycScalar(order, std::move(c));
}

bool CycScalar::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CycScalar::is_one() const {
  if (!coeffs_[0].is_one()) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

void CycScalar::require_same_order(const CycScalar& o) const {
  if (order_ != o.order_) {
    throw std::invalid_argument("cyclotomic order mismatch: " + std::to_string(order_) + " vs " +
                                std::to_string(o.order_));
  }
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  require_same_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  require_same_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  require_same_order(o);
  if (coeffs_.size() == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  Poly prod = poly_mul(coeffs_, o.coeffs_);
  if (prod.size() < coeffs_.size()) prod.resize(coeffs_.size());
  coeffs_ = reduce_mod(std::move(prod), cyclotomic_polynomial(order_));
  return *this;
}

CycScalar CycScalar::operator-() const {
  CycScalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycScalar CycScalar::scaled(const Rational& r) const {
  CycScalar out = *this;
  for (auto& c : out.coeffs_) c *= r;
  return out;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta_" + std::to_string(order_) + ")");
  if (coeffs_.size() == 1) return CycScalar(order_, coeffs_[0].inverse());
  // Extended Euclid: track s with s * a == r (mod phi) until r is a constant.
  const Poly& phi = cyclotomic_polynomial(order_);
  Poly r0 = phi;
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0;
  Poly s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // Phi_N is irreducible, so the last nonzero remainder is a unit.
  const Rational c = r1.at(0).inverse();
  for (auto& x : s1) x *= c;
  return CycScalar(order_, std::move(s1));
}

std::string CycScalar::to_literal() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (first) {
      os << c.str();
    } else {
      os << (c.sign() < 0 ? " - " : " + ") << (c.sign() < 0 ? (-c).str() : c.str());
    }
    if (k > 0) os << "*z^" << k;
    first = false;
  }
  if (first) return "0";
  return os.str();
}

CycScalar CycScalar::parse(std::string_view text, int order) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  const auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad scalar literal '" + std::string(text) + "': " + why);
  };
  const auto read_digits = [&](std::size_t& pos) {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected digits at offset " + std::to_string(start));
    return s.substr(start, pos - start);
  };

  std::vector<Rational> acc;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-' at offset " + std::to_string(pos));
    }
    first = false;
    if (pos >= s.size()) fail("dangling sign");

    Rational coeff(1);
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::string num = read_digits(pos);
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        num += "/" + read_digits(pos);
      }
      coeff = Rational::parse(num);
      has_coeff = true;
    }
    std::int64_t power = 0;
    bool has_z = false;
    if (has_coeff && pos < s.size() && s[pos] == '*') {
      ++pos;
      if (pos >= s.size() || s[pos] != 'z') fail("expected 'z' after '*'");
    }
    if (pos < s.size() && s[pos] == 'z') {
      has_z = true;
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        power = std::stoll(read_digits(pos));
      }
    }
    if (!has_coeff && !has_z) fail("expected a term at offset " + std::to_string(pos));
    if (negative) coeff = -coeff;
    const auto k = static_cast<std::size_t>(power % order);
    if (acc.size() <= k) acc.resize(k + 1);
    acc[k] += coeff;
  }
  return CycScalar(order, std::move(acc));
}

std::ostream& operator<<(std::ostream& os, const CycScalar& c) { return os << c.to_literal(); }

}  // namespace pck
