#include "dphi/spectral.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "dphi/dyadic_eval.hpp"

namespace dphi::spectral {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kSeriesTerms = 30;
// phihat decays faster than any power; beyond this argument it is far below 1e-30.
constexpr double kTransformCutoff = 80.0;

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace

double ft_product(double x, std::size_t m_max) {
  double p = 1.0;
  double arg = kPi * x;
  for (std::size_t m = 1; m <= m_max; ++m) {
    arg *= 0.5;
    p *= std::pow(std::cos(arg), static_cast<double>(m));
  }
  return p;
}

double ft_product_tail_bound(double x, std::size_t m_max) {
  double bound = 0.0;
  double arg = kPi * x * std::ldexp(1.0, -static_cast<int>(m_max));
  for (std::size_t m = m_max + 1; m < m_max + 1100; ++m) {
    arg *= 0.5;
    const double term = static_cast<double>(m) * arg * arg / 2.0;
    bound += term;
    if (term < bound * std::numeric_limits<double>::epsilon()) break;
  }
  return bound;
}

double ft_zero_product(double x, std::size_t factors) {
  const long double x2 = static_cast<long double>(x) * x;
  long double log_sum = 0.0L;
  long double partial = 0.0L;  // sum_{m<=M} (1 + v_2(m)) / m^2
  bool negative = false;
  for (std::size_t m = 1; m <= factors; ++m) {
    const auto weight = static_cast<long double>(1 + val2(static_cast<std::uint64_t>(m)));
    const long double m2 = static_cast<long double>(m) * m;
    partial += weight / m2;
    const long double factor = 1.0L - x2 / m2;
    if (factor == 0.0L) return 0.0;
    if (factor < 0.0L && (static_cast<unsigned>(weight) & 1U)) negative = !negative;
    log_sum += weight * std::log(std::fabs(factor));
  }
  const long double total = 2.0L * std::numbers::pi_v<long double> * std::numbers::pi_v<long double> / 9.0L;
  log_sum -= x2 * (total - partial);
  const double magnitude = static_cast<double>(std::exp(log_sum));
  return negative ? -magnitude : magnitude;
}

double ft_series(double x, std::size_t N) {
  const auto table = shared_coefficients(2 * N);
  const double z2 = (2.0 * kPi * x) * (2.0 * kPi * x);
  double sum = 0.0;
  double zpow = 1.0;
  for (std::size_t k = 0; k <= N; ++k) {
    const double coeff = (table->c()[k] / BigRational(factorial(2 * k))).to_double();
    sum += (k & 1U ? -coeff : coeff) * zpow;
    zpow *= z2;
  }
  return sum;
}

double ft(double x, std::size_t m_max) {
  return std::fabs(x) <= 1.0 ? ft_series(x, kSeriesTerms) : ft_product(x, m_max);
}

FourierCoefficients fourier_coefficients(std::size_t K, std::size_t m_max) {
  if (K == 0) throw std::invalid_argument("fourier_coefficients: K must be >= 1");
  FourierCoefficients fc;
  fc.m_max = m_max;
  fc.a.reserve(K);
  for (std::size_t k = 0; k < K; ++k) {
    fc.a.push_back(ft_product((2.0 * static_cast<double>(k) + 1.0) / 2.0, m_max));
  }
  fc.tolerance = 4.0 * static_cast<double>(K + m_max) * std::numeric_limits<double>::epsilon();
  return fc;
}

double phi_fourier(double t, const FourierCoefficients& fc) {
  double s = 0.0;
  // smallest terms first
  for (std::size_t k = fc.a.size(); k-- > 0;) {
    s += fc.a[k] * std::cos((2.0 * static_cast<double>(k) + 1.0) * kPi * t);
  }
  return 0.5 + s;
}

double phi_fourier_supported(double t, const FourierCoefficients& fc) {
  if (t <= -1.0 || t >= 1.0) return 0.0;
  return phi_fourier(t, fc);
}

double partition_of_unity(double t, unsigned n, const FourierCoefficients& fc) {
  if (n == 0) throw std::invalid_argument("partition_of_unity: n must be >= 1");
  const double nd = static_cast<double>(n);
  const auto k_lo = static_cast<long>(std::ceil((-1.0 - t) * nd));
  const auto k_hi = static_cast<long>(std::floor((1.0 - t) * nd));
  double s = 0.0;
  for (long k = k_lo; k <= k_hi; ++k) {
    s += phi_fourier_supported(t + static_cast<double>(k) / nd, fc);
  }
  return s;
}

double IdentityCheck::difference() const { return std::fabs(lhs - rhs); }

IdentityCheck poisson_check_with(double a, double phi_at_a, std::size_t m_max) {
  if (!(a >= 0.5 && a <= 1.0)) throw std::domain_error("poisson_check: a must lie in [1/2, 1]");
  IdentityCheck r;
  r.lhs = a + 2.0 * a * phi_at_a;
  double tail = 0.0;
  for (long m = static_cast<long>(std::floor(kTransformCutoff * a)); m >= 1; --m) {
    tail += ft(static_cast<double>(m) / a, m_max);
  }
  r.rhs = 1.0 + 2.0 * tail;
  return r;
}

IdentityCheck poisson_check(double a, const FourierCoefficients& fc, std::size_t m_max) {
  return poisson_check_with(a, phi_fourier_supported(a, fc), m_max);
}

IdentityCheck periodization_check(double t, double u, const FourierCoefficients& fc, std::size_t m_max) {
  if (!(u > 0.0)) throw std::domain_error("periodization_check: u must be positive");
  IdentityCheck r;
  const auto k_lo = static_cast<long>(std::ceil((-1.0 - t) / u));
  const auto k_hi = static_cast<long>(std::floor((1.0 - t) / u));
  for (long k = k_lo; k <= k_hi; ++k) r.lhs += phi_fourier_supported(t + u * static_cast<double>(k), fc);

  double s = 0.0;
  for (long k = static_cast<long>(std::floor(kTransformCutoff * u)); k >= 1; --k) {
    const double kd = static_cast<double>(k);
    s += ft(kd / u, m_max) * std::cos(2.0 * kPi * kd * t / u);
  }
  r.rhs = (1.0 + 2.0 * s) / u;
  return r;
}

}  // namespace dphi::spectral
