#pragma once

// Exact coefficient sequences: the power-series coefficients c_k of the
// Fourier transform and their integer numerators F_k, the moment-generating
// coefficients d_n with integer numerators G_n, the one-sided moments
// m_n = int_0^1 t^n phi(t) dt and the values phi(1 - 2^-n).

#include <cstddef>
#include <vector>

#include "dphi/numeric.hpp"

namespace dphi {

/// Rows 0..max_n of Pascal's triangle.
std::vector<std::vector<BigInt>> binomial_rows(std::size_t max_n);

/// c_0..c_N from (2k+1) 4^k c_k = sum_{h<=k} C(2k+1, 2h) c_h.
std::vector<BigRational> compute_c(std::size_t N);

/// F_k = c_k (2k+1)!! prod_{j=1..k} (4^j - 1). Throws InvariantViolation if
/// any F_k is not a positive integer.
std::vector<BigInt> extract_F(const std::vector<BigRational>& c);

/// d_0..d_N from (n+1)(2^n - 1) d_n = sum_{k<n} C(n+1, k) d_k.
std::vector<BigRational> compute_d(std::size_t N);

/// G_n = d_n (n+1)! prod_{k=1..n} (2^k - 1). Throws InvariantViolation if
/// any G_n is not a positive integer.
std::vector<BigInt> extract_G(const std::vector<BigRational>& d);

/// Immutable bundle of every sequence needed up to a given moment order.
///
/// For order M the table holds moments[0..M], d[0..M+1], G[0..M+1],
/// c[0..M/2], F[0..M/2] and phi_near_one[0..M+1], where
/// phi_near_one[n] = phi(1 - 2^-n) (so phi_near_one[0] = phi(0) = 1).
/// Construction cross-checks the two moment routes and throws
/// InvariantViolation on any mismatch.
class CoefficientTable {
 public:
  static CoefficientTable build(std::size_t order);

  std::size_t order() const { return moments_.size() - 1; }

  const std::vector<BigRational>& c() const { return c_; }
  const std::vector<BigInt>& F() const { return F_; }
  const std::vector<BigRational>& d() const { return d_; }
  const std::vector<BigInt>& G() const { return G_; }
  const std::vector<BigRational>& moments() const { return moments_; }
  const std::vector<BigRational>& phi_near_one() const { return near_one_; }

  const BigRational& moment(std::size_t n) const;
  const BigRational& near_one(std::size_t n) const;

 private:
  CoefficientTable() = default;

  std::vector<BigRational> c_;
  std::vector<BigInt> F_;
  std::vector<BigRational> d_;
  std::vector<BigInt> G_;
  std::vector<BigRational> moments_;
  std::vector<BigRational> near_one_;
};

/// int_0^1 t^n phi(t) dt, computed as d_{n+1} / (n+1).
BigRational moment(std::size_t n);

/// phi(1 - 2^-n) = m_{n-1} / ((n-1)! 2^{C(n,2)}), n >= 1.
BigRational phi_near_one(std::size_t n);

}  // namespace dphi
