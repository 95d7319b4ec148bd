#pragma once

// Integer polynomials p_n and the step functions built from them, which
// converge to phi as the level grows.

#include <cstddef>
#include <vector>

#include "dphi/numeric.hpp"

namespace dphi {

/// Dense polynomial with big-integer coefficients; coeffs[i] multiplies x^i.
/// Kept trimmed: the zero polynomial has no coefficients, otherwise the
/// leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Degree; 0 for constants and for the zero polynomial.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  /// Coefficient of x^i (0 beyond the degree).
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  BigInt value_at_one() const;

  /// p(x^2)
  IntPolynomial compose_square() const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// 1 + x + ... + x^{len-1}
IntPolynomial geometric_polynomial(std::size_t len);

/// p_0 = 1, p_n(x) = p_{n-1}(x^2) (1 + x)^n.
IntPolynomial poly_p(unsigned n);

/// deg p_n: g_0 = 0, g_n = 2 g_{n-1} + n.
std::size_t degree_g(unsigned n);

/// Piecewise-constant function on consecutive half-open intervals of width
/// 2^-level starting at left_edge.
struct StepFunction {
  unsigned level = 0;
  Dyadic left_edge;
  std::vector<BigRational> values;

  Dyadic width() const { return Dyadic(1, level); }
  Dyadic right_edge() const;
  /// [left, right) of plateau j.
  Dyadic plateau_left(std::size_t j) const;
  /// width * sum(values)
  BigRational integral() const;
};

/// Level-n approximant: x^m in 2^{-C(n+1,2)} p_n(x) becomes 2^n times the
/// indicator of [(2m - 1 - g_n) / 2^{n+1}, (2m + 1 - g_n) / 2^{n+1}).
StepFunction step_function(unsigned n);

/// Value assigned at a jump between two plateaus.
enum class EdgeRule {
  /// Mean of the two one-sided limits; keeps every approximant exactly even.
  midpoint,
  /// Plateaus are [left, right): the right-hand value wins.
  half_open,
};

/// Plateau value containing t; 0 away from [left_edge, right_edge].
BigRational step_eval(const StepFunction& sf, const Dyadic& t, EdgeRule rule = EdgeRule::midpoint);

/// Number of tuples (s_1..s_m) with sum r and 0 <= s_i <= 2^i - 1, counted by
/// direct enumeration.
BigInt restricted_partitions(unsigned m, std::size_t r);

}  // namespace dphi
