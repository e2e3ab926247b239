#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "optseg/core.hpp"
#include "optseg/polynomial.hpp"

namespace optseg {

/// A composition-counting generating function as a ratio of integer
/// polynomials. The coefficient of x^N in the power-series expansion is the
/// number of admissible segmentations of a length-N sequence.
struct RationalGF {
  IntPoly numerator;
  IntPoly denominator;  ///< constant term != 0
};

inline RationalGF make_rational_gf(IntPoly num, IntPoly den) {
  if (den.coeff(0) == 0)
    throw DomainError("generating function denominator needs a non-zero constant term");
  return {std::move(num), std::move(den)};
}

enum class BoundsKind { unbounded, lower, upper, double_bounded };

inline std::string_view to_string(BoundsKind k) {
  switch (k) {
    case BoundsKind::unbounded: return "unbounded";
    case BoundsKind::lower: return "lower";
    case BoundsKind::upper: return "upper";
    default: return "double";
  }
}

/// Which closed form a bounds value calls for: no constraints, a lower
/// bound only, an upper bound only, or both.
inline BoundsKind kind_for_bounds(const SegmentBounds& b) {
  check_bounds(b);
  const bool lower = b.min_len > 1;
  const bool upper = b.max_len.has_value();
  if (lower && upper) return BoundsKind::double_bounded;
  if (lower) return BoundsKind::lower;
  if (upper) return BoundsKind::upper;
  return BoundsKind::unbounded;
}

/// The exact closed forms for counting [a,b]-restricted compositions:
///
///   unbounded:      x / (1 - 2x)
///   lower  (1 < a): x^a / (1 - x - x^a)
///   upper  (1 < b): (1 - x) / (1 - 2x + x^(b+1))
///   double (1 < a < b): (x^a - x^(b+1)) / (1 - x - x^a + x^(b+1))
///
/// Parameter ranges outside these cases are a DomainError.
inline RationalGF gf_for_bounds(const SegmentBounds& bounds, BoundsKind kind) {
  check_bounds(bounds);
  const int a = bounds.min_len;
  switch (kind) {
    case BoundsKind::unbounded:
      return make_rational_gf({0, 1}, {1, -2});
    case BoundsKind::lower: {
      if (a <= 1) throw DomainError("lower-bounded form requires min length > 1");
      IntPoly den = IntPoly{1, -1} - IntPoly::monomial(a);
      return make_rational_gf(IntPoly::monomial(a), std::move(den));
    }
    case BoundsKind::upper: {
      if (!bounds.max_len) throw DomainError("upper-bounded form requires a max length");
      const int b = *bounds.max_len;
      if (b <= 1) throw DomainError("upper-bounded form requires max length > 1");
      IntPoly den = IntPoly{1, -2} + IntPoly::monomial(b + 1);
      return make_rational_gf(IntPoly{1, -1}, std::move(den));
    }
    case BoundsKind::double_bounded: {
      if (!bounds.max_len) throw DomainError("doubly-bounded form requires a max length");
      const int b = *bounds.max_len;
      if (!(1 < a && a < b))
        throw DomainError("doubly-bounded form requires 1 < min length < max length");
      IntPoly num = IntPoly::monomial(a) - IntPoly::monomial(b + 1);
      IntPoly den = IntPoly{1, -1} - IntPoly::monomial(a) + IntPoly::monomial(b + 1);
      return make_rational_gf(std::move(num), std::move(den));
    }
  }
  throw DomainError("unknown bounds kind");
}

inline RationalGF gf_for_bounds(const SegmentBounds& bounds) {
  return gf_for_bounds(bounds, kind_for_bounds(bounds));
}

/// Cancels the polynomial gcd of numerator and denominator; the upper and
/// double closed forms share the factor (1 - x), which must go before root
/// analysis or x = 1 shows up as a spurious smallest root. Keeps the
/// denominator's constant term positive. The coefficient stream is
/// unchanged.
inline RationalGF reduce_common_factors(const RationalGF& gf) {
  if (gf.denominator.coeff(0) == 0)
    throw DomainError("generating function denominator needs a non-zero constant term");
  if (gf.numerator.is_zero()) return {IntPoly{}, IntPoly{1}};
  IntPoly g = IntPoly::gcd(gf.numerator, gf.denominator);
  IntPoly num = IntPoly::divide_exact(gf.numerator, g);
  IntPoly den = IntPoly::divide_exact(gf.denominator, g);
  if (den.coeff(0) < 0) {
    num = BigInt(-1) * num;
    den = BigInt(-1) * den;
  }
  return {std::move(num), std::move(den)};
}

/// Power-series coefficients [x^0 .. x^n_max], exact: with denominator
/// d0 + d1 x + ..., the recurrence d0 * s_n = p_n - sum_{k>=1} d_k * s_{n-k}
/// holds term by term (the division by d0 must be exact, which it is for
/// every counting generating function).
inline std::vector<BigInt> coefficients(const RationalGF& gf, int n_max) {
  if (n_max < 0) throw DomainError("coefficients: n_max must be >= 0");
  const IntPoly& den = gf.denominator;
  const BigInt& d0 = den.coeff(0);
  if (d0 == 0)
    throw DomainError("generating function denominator needs a non-zero constant term");
  std::vector<BigInt> s;
  s.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    BigInt acc = gf.numerator.coeff(n);
    const int reach = std::min(n, den.degree());
    for (int k = 1; k <= reach; ++k) acc -= den.coeff(k) * s[n - k];
    if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t()))
      throw ContractError("coefficient recurrence is not integral for this function");
    BigInt sn;
    mpz_divexact(sn.get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
    s.push_back(std::move(sn));
  }
  return s;
}

struct RootEstimate {
  double value = 0.0;
  double width = 0.0;     ///< final bracket width
  double residual = 0.0;  ///< |q(value)|
};

/// Root of q inside [lo, hi] by bisection; the bracket must show a sign
/// change. The reduced denominators of the closed forms always have one:
/// (0, 1) works for every kind, and (0, 3/4] for the upper form. Width cap
/// 1e-12, at most 200 iterations. For the reduced denominators this is the
/// root of smallest modulus.
inline RootEstimate smallest_root(const IntPoly& q, double lo, double hi) {
  if (!(lo < hi)) throw DomainError("smallest_root: bracket must satisfy lo < hi");
  double f_lo = q.eval(lo);
  double f_hi = q.eval(hi);
  if (f_lo == 0.0) return {lo, 0.0, 0.0};
  if (f_hi == 0.0) return {hi, 0.0, 0.0};
  if ((f_lo > 0) == (f_hi > 0))
    throw BracketError("smallest_root: no sign change on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  for (int iteration = 0; iteration < 200 && hi - lo > 1e-12; ++iteration) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = q.eval(mid);
    if (f_mid == 0.0) return {mid, 0.0, 0.0};
    if ((f_mid > 0) == (f_lo > 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  return {root, hi - lo, std::fabs(q.eval(root))};
}

struct GrowthEstimate {
  double alpha = 0.0;        ///< smallest-modulus denominator root, in (0,1)
  double alpha_width = 0.0;  ///< bisection bracket width at termination
  double residual = 0.0;     ///< |q(alpha)|
  double growth = 0.0;       ///< A = 1/alpha
  double growth_error = 0.0; ///< error bound propagated from alpha_width
};

/// Exponential growth factor A = 1/alpha of the coefficient sequence, where
/// alpha is the smallest-modulus root of the reduced denominator. Reduction
/// is applied internally, so passing an unreduced closed form is fine.
inline GrowthEstimate growth_factor(const RationalGF& gf) {
  const RationalGF reduced = reduce_common_factors(gf);
  if (reduced.denominator.degree() < 1)
    throw DomainError("growth_factor: denominator has no roots");
  const RootEstimate root = smallest_root(reduced.denominator, 0.0, 1.0);
  GrowthEstimate est;
  est.alpha = root.value;
  est.alpha_width = root.width;
  est.residual = root.residual;
  est.growth = 1.0 / root.value;
  est.growth_error = root.width / (root.value * root.value) + 4 * est.growth * 1e-16;
  return est;
}

/// Ratio of the last two counts, the empirical growth estimate. Requires at
/// least 10 trailing nonzero counts.
inline double empirical_growth(const std::vector<BigInt>& counts) {
  if (counts.size() < 10)
    throw DomainError("empirical_growth needs at least 10 trailing counts");
  for (std::size_t k = counts.size() - 10; k < counts.size(); ++k)
    if (counts[k] == 0) throw DomainError("empirical_growth: trailing counts must be non-zero");
  mpq_class ratio(counts.back(), counts[counts.size() - 2]);
  ratio.canonicalize();
  return ratio.get_d();
}

}  // namespace optseg
