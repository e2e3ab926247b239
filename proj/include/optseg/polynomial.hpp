#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "optseg/bigint.hpp"
#include "optseg/errors.hpp"

namespace optseg {

/// Dense univariate polynomial over arbitrary-precision integers.
/// coeff(k) is the coefficient of x^k; trailing zeros are trimmed and the
/// zero polynomial has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPoly monomial(int power, BigInt coeff = BigInt(1)) {
    std::vector<BigInt> c(power + 1, BigInt(0));
    c[power] = std::move(coeff);
    return IntPoly(std::move(c));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

  const BigInt& coeff(int k) const {
    static const BigInt zero(0);
    return k >= 0 && k <= degree() ? c_[k] : zero;
  }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  const BigInt& leading() const {
    if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
  }

  double eval(double x) const noexcept {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
  }

  BigInt eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return IntPoly(std::move(c));
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
    return IntPoly(std::move(c));
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
  }

  friend IntPoly operator*(const BigInt& s, const IntPoly& a) {
    if (s == 0) return {};
    std::vector<BigInt> c = a.c_;
    for (auto& v : c) v *= s;
    return IntPoly(std::move(c));
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  /// gcd of the coefficients, non-negative; 0 for the zero polynomial.
  BigInt content() const {
    BigInt g = 0;
    for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
  }

  /// Divided by +-content so the leading coefficient is positive.
  IntPoly primitive_part() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (c_.back() < 0) g = -g;
    std::vector<BigInt> c = c_;
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(c));
  }

  /// Exact quotient a / d; throws ContractError when the division has a
  /// remainder.
  static IntPoly divide_exact(const IntPoly& a, const IntPoly& d) {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < d.degree()) throw ContractError("polynomial division is not exact");
    std::vector<BigInt> rem = a.c_;
    std::vector<BigInt> quot(a.degree() - d.degree() + 1, BigInt(0));
    for (int k = a.degree() - d.degree(); k >= 0; --k) {
      const BigInt& top = rem[k + d.degree()];
      if (top == 0) continue;
      if (!mpz_divisible_p(top.get_mpz_t(), d.leading().get_mpz_t()))
        throw ContractError("polynomial division is not exact");
      BigInt q;
      mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
      for (int j = 0; j <= d.degree(); ++j) rem[k + j] -= q * d.c_[j];
      quot[k] = std::move(q);
    }
    for (const auto& v : rem)
      if (v != 0) throw ContractError("polynomial division is not exact");
    return IntPoly(std::move(quot));
  }

  /// Polynomial gcd over Z[x] by the primitive pseudo-remainder sequence;
  /// the result is content-normalized with a positive leading coefficient.
  static IntPoly gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly{} : normalized(b);
    if (b.is_zero()) return normalized(a);
    BigInt content_gcd;
    mpz_gcd(content_gcd.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
      IntPoly r = pseudo_remainder(a, b);
      a = std::move(b);
      b = r.is_zero() ? IntPoly{} : r.primitive_part();
    }
    return content_gcd * a;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
      if (c_[k] == 0) continue;
      if (!out.empty()) out += c_[k] > 0 ? " + " : " - ";
      else if (c_[k] < 0) out += "-";
      const BigInt mag = abs(c_[k]);
      if (k == 0 || mag != 1) out += mag.get_str();
      if (k > 0) out += mag == 1 ? "x" : "*x";
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  static IntPoly normalized(const IntPoly& p) {
    return p.leading() < 0 ? BigInt(-1) * p : p;
  }

  // lc(b)-scaled remainder of a by b (deg a >= deg b > -1); exactness of the
  // final gcd does not depend on the scaling because every step is followed
  // by a primitive-part reduction
  static IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const BigInt& lead_b = b.leading();
    while (!a.is_zero() && a.degree() >= b.degree()) {
      const int shift = a.degree() - b.degree();
      IntPoly scaled = lead_b * a;
      IntPoly subtract = a.leading() * (IntPoly::monomial(shift) * b);
      a = scaled - subtract;
    }
    return a;
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

}  // namespace optseg
