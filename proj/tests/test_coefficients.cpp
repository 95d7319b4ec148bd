#include <doctest.h>

#include <cmath>
#include <vector>

#include "dphi/coefficients.hpp"
#include "dphi/dyadic_eval.hpp"

using namespace dphi;

namespace {

BigRational frac(long n, long d) { return BigRational(BigInt(n), BigInt(d)); }

BigRational factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return BigRational(r);
}

}  // namespace

TEST_CASE("binomial rows") {
  const auto rows = binomial_rows(6);
  CHECK(rows[4] == std::vector<BigInt>{1, 4, 6, 4, 1});
  CHECK(rows[6][3] == 20);
}

TEST_CASE("c_k by the rearranged recurrence") {
  CHECK(compute_c(0) == std::vector<BigRational>{BigRational(1L)});
  const auto c = compute_c(2);
  CHECK(c[1] == frac(1, 9));   // 12 c_1 = 1 + 3 c_1
  CHECK(c[2] == frac(19, 675));

  // The recurrence itself, with the unknown left on the right-hand side.
  const auto big = compute_c(15);
  const auto binom = binomial_rows(31);
  for (std::size_t k = 0; k < big.size(); ++k) {
    BigRational rhs;
    for (std::size_t h = 0; h <= k; ++h) rhs += BigRational(binom[2 * k + 1][2 * h]) * big[h];
    REQUIRE(BigRational(BigInt(2 * k + 1)).mul_pow2(static_cast<long>(2 * k)) * big[k] == rhs);
    REQUIRE(big[k].sign() > 0);
  }
}

TEST_CASE("integer numerators F_k") {
  const auto F = extract_F(compute_c(4));
  CHECK(F == std::vector<BigInt>{1, 1, 19, 2915, 2788989});
  CHECK_NOTHROW(extract_F(compute_c(40)));

  auto corrupted = compute_c(3);
  corrupted[2] = frac(19, 676);
  CHECK_THROWS_AS(extract_F(corrupted), InvariantViolation);
}

TEST_CASE("d_n by the moment recurrence") {
  CHECK(compute_d(0) == std::vector<BigRational>{BigRational(1L)});
  const auto d = compute_d(3);
  CHECK(d[1] == frac(1, 2));
  CHECK(d[2] == frac(5, 18));
  CHECK(d[3] == frac(1, 6));
}

TEST_CASE("integer numerators G_n") {
  const auto G = extract_G(compute_d(3));
  CHECK(G[0] == 1);
  CHECK(G[2] == 5);
  CHECK(G[3] == 84);
  CHECK_NOTHROW(extract_G(compute_d(60)));

  auto corrupted = compute_d(3);
  corrupted[3] = frac(1, 11);
  CHECK_THROWS_AS(extract_G(corrupted), InvariantViolation);
}

TEST_CASE("series identity f(2x) = (e^x - 1)/x f(x) order by order") {
  // f(x) = sum d_n x^n / n!; (e^x - 1)/x = sum x^j / (j+1)!.
  constexpr unsigned N = 25;
  const auto d = compute_d(N);
  for (unsigned n = 0; n <= N; ++n) {
    const BigRational lhs = (d[n] / factorial(n)).mul_pow2(n);
    BigRational rhs;
    for (unsigned k = 0; k <= n; ++k) rhs += d[k] / factorial(k) / factorial(n - k + 1);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("moments") {
  CHECK(moment(0) == frac(1, 2));
  CHECK(moment(1) == frac(5, 36));
  CHECK(moment(2) == frac(1, 18));

  const auto table = CoefficientTable::build(30);
  CHECK(table.moment(2) == table.c()[1] / BigRational(2L));
  for (std::size_t m = 0; 2 * m <= 30; ++m) {
    REQUIRE(table.moment(2 * m) == table.c()[m] / BigRational(2L));
    REQUIRE(table.d()[2 * m + 1] / BigRational(BigInt(2 * m + 1)) == table.c()[m] / BigRational(2L));
  }
  for (std::size_t n = 1; n <= 30; ++n) {
    REQUIRE(table.moment(n - 1) * BigRational(BigInt(n)) == table.d()[n]);
    REQUIRE(table.moment(n).sign() > 0);
    REQUIRE(table.moment(n) < table.moment(n - 1));
  }
  CHECK_THROWS_AS(table.moment(31), std::out_of_range);
}

TEST_CASE("moments against quadrature of exact values") {
  // Trapezoid rule on exact phi(q/2^10); the end correction is about h^2/12.
  constexpr unsigned level = 10;
  constexpr long steps = 1L << level;
  std::vector<double> values;
  for (long q = 0; q <= steps; ++q) values.push_back(phi_exact(Dyadic(BigInt(q), level)).to_double());
  for (unsigned n = 0; n <= 6; ++n) {
    double sum = 0.0;
    for (long q = 0; q <= steps; ++q) {
      const double t = static_cast<double>(q) / steps;
      const double w = (q == 0 || q == steps) ? 0.5 : 1.0;
      sum += w * std::pow(t, n) * values[static_cast<std::size_t>(q)];
    }
    CHECK(sum / steps == doctest::Approx(moment(n).to_double()).epsilon(1e-5));
  }
}

TEST_CASE("phi(1 - 2^-n)") {
  CHECK(phi_near_one(1) == frac(1, 2));
  CHECK(phi_near_one(2) == frac(5, 72));
  CHECK(phi_near_one(3) == frac(1, 288));
  CHECK(phi_near_one(3) == frac(115200, 33177600));
  CHECK_THROWS_AS(phi_near_one(0), std::domain_error);

  // Odd indices against the closed form through F_n.
  const auto table = CoefficientTable::build(20);
  const auto& F = table.F();
  for (std::size_t n = 0; 2 * n + 1 <= 21 && n < F.size(); ++n) {
    BigRational closed = BigRational(F[n]) / BigRational(2L) / factorial(static_cast<unsigned>(2 * n));
    for (std::size_t j = 1; j <= 2 * n + 1; j += 2) closed /= BigRational(BigInt(j));
    for (std::size_t k = 1; k <= n; ++k) closed /= BigRational(BigInt(pow2(2 * k) - 1));
    closed = closed.mul_pow2(-static_cast<long>((2 * n + 1) * (2 * n) / 2));
    REQUIRE(table.near_one(2 * n + 1) == closed);
  }
  for (std::size_t n = 0; n <= 21; ++n) REQUIRE(table.near_one(n).sign() > 0);
  CHECK(table.near_one(0) == BigRational(1L));
}
