#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dphi/dyadic_eval.hpp"
#include "dphi/spectral.hpp"

using namespace dphi;
using namespace dphi::spectral;

namespace {

const FourierCoefficients& coefficients() {
  static const FourierCoefficients fc = fourier_coefficients();
  return fc;
}

double exact(long q, unsigned n) { return phi_exact(Dyadic(BigInt(q), n)).to_double(); }

}  // namespace

TEST_CASE("transform at simple points") {
  CHECK(ft_product(0.0) == 1.0);
  CHECK(std::fabs(ft_product(1.0)) <= 1e-15);
  CHECK(std::fabs(ft(2.0)) <= 1e-15);
  CHECK(ft_series(0.0, 10) == 1.0);
  CHECK(ft_zero_product(0.0) == 1.0);
  CHECK(std::fabs(ft_zero_product(3.0)) <= 1e-15);
  CHECK(ft_product_tail_bound(1.0, 60) < 1e-30);
  CHECK(ft_product_tail_bound(1.0, 10) > ft_product_tail_bound(1.0, 20));
}

TEST_CASE("product and series agree") {
  CHECK(ft_product(0.5) == doctest::Approx(ft_series(0.5, 30)).epsilon(1e-12));
  CHECK(std::fabs(ft_series(0.25, 12) - ft_series(0.25, 13)) < 1e-15);
  for (double x = 0.0; x <= 1.0; x += 0.05) {
    CAPTURE(x);
    REQUIRE(std::fabs(ft_product(x) - ft_series(x, 30)) < 1e-12);
  }
}

TEST_CASE("functional equation of the transform") {
  // phihat(2x) = sin(2 pi x) / (2 pi x) * phihat(x)
  for (double x : {0.1, 0.5, 1.7, 3.3}) {
    const double w = 2.0 * std::numbers::pi * x;
    CAPTURE(x);
    CHECK(std::fabs(ft(2.0 * x) - std::sin(w) / w * ft(x)) < 1e-12);
  }
}

TEST_CASE("cosine product and zero product agree") {
  for (int i = 0; i <= 40; ++i) {
    const double x = 0.1 * i;
    CAPTURE(x);
    REQUIRE(std::fabs(ft_product(x) - ft_zero_product(x)) < 1e-10);
  }
}

TEST_CASE("Fourier coefficients") {
  const auto& fc = coefficients();
  REQUIRE(fc.terms() == kDefaultTerms);
  double sum = 0.0;
  for (std::size_t k = 0; k < fc.terms(); ++k) {
    if (std::fabs(fc.a[k]) > 1e-300) REQUIRE((fc.a[k] > 0) == (thue_morse_sign(k) > 0));
    sum += fc.a[k];
  }
  CHECK(std::fabs(sum - 0.5) < 1e-10);
  CHECK(fc.a[0] == doctest::Approx(ft(0.5)));
  CHECK(fc.a[3] == doctest::Approx(ft(3.5)));
  // Faster than any power: a_k (2k+1)^6 still shrinks.
  CHECK(std::fabs(fc.a[20]) * std::pow(41.0, 6) < std::fabs(fc.a[5]) * std::pow(11.0, 6));
  CHECK(fc.tolerance > 0.0);
  CHECK_THROWS_AS(fourier_coefficients(0), std::invalid_argument);
}

TEST_CASE("cosine synthesis") {
  const auto& fc = coefficients();
  CHECK(std::fabs(phi_fourier(0.0, fc) - 1.0) < 1e-10);
  CHECK(std::fabs(phi_fourier(1.0, fc)) < 1e-11);
  CHECK(std::fabs(phi_fourier(-1.0, fc)) < 1e-11);
  CHECK(std::fabs(phi_fourier(0.75, fc) - 5.0 / 72.0) < 1e-11);
  CHECK(phi_fourier_supported(1.5, fc) == 0.0);
  CHECK(phi_fourier_supported(-1.0, fc) == 0.0);
  for (long q = -64; q <= 64; ++q) {
    CAPTURE(q);
    REQUIRE(std::fabs(phi_fourier(static_cast<double>(q) / 64.0, fc) - exact(q, 6)) < 1e-10);
  }
}

TEST_CASE("partition of unity") {
  const auto& fc = coefficients();
  for (unsigned n = 1; n <= 3; ++n) {
    for (double t : {0.0, 0.13, 0.5, 0.77}) {
      CAPTURE(n);
      CAPTURE(t);
      CHECK(std::fabs(partition_of_unity(t, n, fc) - n) < 1e-10);
    }
  }
  // Exact route: t = 1/2 with step 1/2 visits -1, -1/2, 0, 1/2, 1.
  BigRational total;
  for (long q = -2; q <= 2; ++q) total += phi_exact(Dyadic(BigInt(q), 1));
  CHECK(total == BigRational(2L));
  CHECK_THROWS_AS(partition_of_unity(0.0, 0, fc), std::invalid_argument);
}

TEST_CASE("Poisson identity") {
  const auto& fc = coefficients();
  const struct {
    long q;
    unsigned n;
  } points[] = {{1, 1}, {3, 2}, {1, 0}};
  for (const auto& p : points) {
    const double a = std::ldexp(static_cast<double>(p.q), -static_cast<int>(p.n));
    CAPTURE(a);
    CHECK(std::fabs(poisson_check_with(a, exact(p.q, p.n)).difference()) < 1e-10);
    CHECK(std::fabs(poisson_check(a, fc).difference()) < 1e-10);
  }
  const IdentityCheck at_half = poisson_check_with(0.5, 0.5);
  CHECK(at_half.lhs == 1.0);
  CHECK_THROWS_AS(poisson_check_with(0.3, 0.0), std::domain_error);
  CHECK_THROWS_AS(poisson_check(1.2, fc), std::domain_error);
}

TEST_CASE("periodization") {
  const auto& fc = coefficients();
  for (double u : {1.0, 2.0}) {
    for (double t : {-0.4, 0.0, 0.25, 0.6}) {
      const IdentityCheck c = periodization_check(t, u, fc);
      CAPTURE(u);
      CAPTURE(t);
      CHECK(std::fabs(c.difference()) < 1e-10);
    }
  }
  CHECK(std::fabs(periodization_check(0.3, 1.0, fc).lhs - 1.0) < 1e-10);
  CHECK_THROWS_AS(periodization_check(0.0, 0.0, fc), std::domain_error);
}
