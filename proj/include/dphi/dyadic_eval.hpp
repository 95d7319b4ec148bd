#pragma once

// Exact values of phi, the Thue-Morse alternating sum theta, all derivatives
// phi^(k), and the (polynomial) Taylor expansions at dyadic points.

#include <cstddef>
#include <memory>
#include <vector>

#include "dphi/coefficients.hpp"
#include "dphi/numeric.hpp"

namespace dphi {

/// Process-wide coefficient table of at least the given moment order. The
/// cache only ever grows; each returned table is immutable and may be shared
/// freely across threads.
std::shared_ptr<const CoefficientTable> shared_coefficients(std::size_t order);

/// Exact phi(t). Points are first folded into [-1, -1/2] with evenness and
/// phi(t) + phi(t - 1) = 1, then evaluated with the closed dyadic sum.
BigRational phi_exact(const Dyadic& t);

/// The closed dyadic sum applied directly to t = q/2^n (canonical n), with no
/// symmetry folding. Valid on the whole real line: returns 0 for t > 1 and
/// yields the empty sum for t <= -1. Cost grows like (q + 2^n) * n.
BigRational phi_exact_raw(const Dyadic& t);

/// theta(t) = sum_{k>=0} (-1)^{s(k)} phi(t - 2k - 1).
BigRational theta_exact(const Dyadic& t);

/// phi^(k)(t) = 2^{C(k+1,2)} theta(2^k t + 2^k) on [-1, 1]; 0 outside.
BigRational phi_derivative(unsigned k, const Dyadic& t);

struct TaylorPolynomial {
  Dyadic center;
  /// coeffs[k] = phi^(k)(center) / k!
  std::vector<BigRational> coeffs;

  /// Index of the highest nonzero coefficient (0 for the zero polynomial).
  std::size_t degree() const;
};

/// Taylor coefficients of phi at t up to max_order. At t = q/2^n with q odd
/// every coefficient above order n is exactly zero.
TaylorPolynomial taylor_at(const Dyadic& t, std::size_t max_order);

/// Least common denominator of phi(q/2^n) over q = 0..2^n.
BigInt level_denominator(unsigned n);

}  // namespace dphi
