#pragma once

// Double-precision evaluation of the Fourier transform of phi (infinite
// products and the power series), the cosine expansion of phi on [-1, 1], and
// the periodization / Poisson identities built on them.

#include <cstddef>
#include <vector>

namespace dphi::spectral {

inline constexpr std::size_t kDefaultMMax = 60;
inline constexpr std::size_t kDefaultTerms = 64;

/// prod_{m=1..m_max} cos(pi x / 2^m)^m
double ft_product(double x, std::size_t m_max = kDefaultMMax);

/// Bound on the neglected tail: sum_{m > m_max} m (pi x / 2^m)^2 / 2.
double ft_product_tail_bound(double x, std::size_t m_max = kDefaultMMax);

/// prod_{m=1..M} (1 - x^2/m^2)^{1 + v_2(m)}, with the remaining tail replaced
/// by exp(-x^2 S(M)) where S(M) = 2 pi^2 / 9 - sum_{m<=M} (1 + v_2(m)) / m^2.
double ft_zero_product(double x, std::size_t factors = std::size_t{1} << 16);

/// sum_{k=0..N} (-1)^k c_k / (2k)! (2 pi x)^{2k}
double ft_series(double x, std::size_t N);

/// Series for |x| <= 1, product elsewhere.
double ft(double x, std::size_t m_max = kDefaultMMax);

struct FourierCoefficients {
  std::size_t m_max = kDefaultMMax;
  /// a[k] ~ phihat((2k + 1) / 2)
  std::vector<double> a;
  double tolerance = 0.0;

  std::size_t terms() const { return a.size(); }
};

FourierCoefficients fourier_coefficients(std::size_t K = kDefaultTerms, std::size_t m_max = kDefaultMMax);

/// 1/2 + sum_k a[k] cos((2k + 1) pi t), valid for t in [-1, 1].
double phi_fourier(double t, const FourierCoefficients& fc);

/// phi_fourier extended by zero outside [-1, 1].
double phi_fourier_supported(double t, const FourierCoefficients& fc);

/// sum_k phi(t + k/n) over the lattice points in [-1, 1]; equals n.
double partition_of_unity(double t, unsigned n, const FourierCoefficients& fc);

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double difference() const;
};

/// a + 2 a phi(a) against sum_m phihat(m / a), for 1/2 <= a <= 1.
/// phi(a) comes from phi_fourier.
IdentityCheck poisson_check(double a, const FourierCoefficients& fc, std::size_t m_max = kDefaultMMax);
/// Same, with phi(a) supplied by the caller (e.g. an exact value).
IdentityCheck poisson_check_with(double a, double phi_at_a, std::size_t m_max = kDefaultMMax);

/// sum_k phi(t + u k) against (1/u) sum_k phihat(k/u) e^{2 pi i k t / u}.
IdentityCheck periodization_check(double t, double u, const FourierCoefficients& fc,
                                  std::size_t m_max = kDefaultMMax);

}  // namespace dphi::spectral
