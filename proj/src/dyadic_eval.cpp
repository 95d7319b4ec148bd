#include "dphi/dyadic_eval.hpp"

#include <algorithm>
#include <mutex>

namespace dphi {

namespace {

unsigned long half_binom(unsigned long n) { return n * (n + 1) / 2; }  // C(n+1, 2)

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// sums[j] = sum_{h=0}^{count-1} (-1)^{s(h)} (a0 - 2h)^j for j = level, level-2, ...
std::vector<BigInt> alternating_power_sums(const BigInt& a0, std::uint64_t count, unsigned level) {
  std::vector<BigInt> sums(level + 1);
  BigInt power;
  const bool small = a0.fits_ulong_p();
  unsigned long a_small = small ? a0.get_ui() : 0;
  BigInt a_big = a0;
  for (std::uint64_t h = 0; h < count; ++h) {
    const bool negative = (digit_sum(h) & 1U) != 0;
    power = 1;
    for (unsigned j = 0; j <= level; ++j) {
      if (((level - j) & 1U) == 0) {
        if (negative) {
          sums[j] -= power;
        } else {
          sums[j] += power;
        }
      }
      if (j < level) {
        if (small) {
          mpz_mul_ui(power.get_mpz_t(), power.get_mpz_t(), a_small);
        } else {
          power *= a_big;
        }
      }
    }
    if (small) {
      a_small -= 2;
    } else {
      a_big -= 2;
    }
  }
  return sums;
}

// Closed dyadic sum for t = q/2^n, requires q <= 2^n:
// phi(t) = 2 sum_h sum_k (-1)^{s(h)} 2^{C(2k+1,2) - C(n+1,2)} / (n-2k)!
//            * (2(q-h) + 2^{n+1} - 1)^{n-2k} * phi(1 - 2^{-2k-1}).
BigRational dyadic_sum(const BigInt& q, unsigned n) {
  const BigInt count = q + pow2(n);
  if (sgn(count) <= 0) return BigRational();
  if (!count.fits_ulong_p()) throw std::length_error("phi_exact: dyadic sum range too large");

  const auto table = shared_coefficients(n);
  const BigInt a0 = 2 * q + pow2(n + 1) - 1;
  const auto sums = alternating_power_sums(a0, count.get_ui(), n);

  BigRational total;
  for (unsigned k = 0; 2 * k <= n; ++k) {
    const unsigned j = n - 2 * k;
    if (sgn(sums[j]) == 0) continue;
    BigRational term = table->near_one(2 * k + 1) / BigRational(factorial(j));
    term = term.mul_pow2(static_cast<long>(half_binom(2 * k)));
    total += term * BigRational(sums[j]);
  }
  return total.mul_pow2(1 - static_cast<long>(half_binom(n)));
}

}  // namespace

std::shared_ptr<const CoefficientTable> shared_coefficients(std::size_t order) {
  static std::mutex mutex;
  static std::shared_ptr<const CoefficientTable> current;
  std::lock_guard lock(mutex);
  if (!current || current->order() < order) {
    const std::size_t grown = current ? std::max(order, 2 * current->order()) : std::max<std::size_t>(order, 16);
    current = std::make_shared<const CoefficientTable>(CoefficientTable::build(grown));
  }
  return current;
}

BigRational phi_exact_raw(const Dyadic& t) {
  if (t > Dyadic(1)) return BigRational();
  return dyadic_sum(t.num(), static_cast<unsigned>(t.exp()));
}

BigRational phi_exact(const Dyadic& t) {
  const unsigned n = static_cast<unsigned>(t.exp());
  BigInt q = abs(t.num());
  const BigInt one = pow2(n);
  if (q >= one) return BigRational();
  // |t| in [0, 1): for |t| < 1/2 use phi(|t|) = 1 - phi(|t| - 1).
  if (2 * q < one) return BigRational(1L) - dyadic_sum(q - one, n);
  return dyadic_sum(BigInt(-q), n);
}

BigRational theta_exact(const Dyadic& t) {
  if (t.sign() <= 0) return BigRational();
  if (t.is_integer() && mpz_even_p(t.num().get_mpz_t())) return BigRational();
  const BigInt k = t.mul_pow2(-1).floor();
  const Dyadic arg = t - Dyadic(2 * k + 1, 0);
  const BigRational value = phi_exact(arg);
  return (digit_sum(k) & 1U) ? -value : value;
}

BigRational phi_derivative(unsigned k, const Dyadic& t) {
  if (t < Dyadic(-1) || t > Dyadic(1)) return BigRational();
  const Dyadic arg = (t + Dyadic(1)).mul_pow2(k);
  return theta_exact(arg).mul_pow2(static_cast<long>(half_binom(k)));
}

std::size_t TaylorPolynomial::degree() const {
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (!coeffs[k].is_zero()) return k;
  }
  return 0;
}

TaylorPolynomial taylor_at(const Dyadic& t, std::size_t max_order) {
  if (t < Dyadic(-1) || t > Dyadic(1)) throw std::domain_error("taylor_at: center outside [-1, 1]");
  TaylorPolynomial poly{t, {}};
  poly.coeffs.reserve(max_order + 1);
  BigInt fact = 1;
  for (std::size_t k = 0; k <= max_order; ++k) {
    if (k > 0) fact *= BigInt(k);
    poly.coeffs.push_back(phi_derivative(static_cast<unsigned>(k), t) / BigRational(fact));
  }
  return poly;
}

BigInt level_denominator(unsigned n) {
  // phi(t) and phi(1 - t) = 1 - phi(t) share a denominator, so half the level suffices.
  BigInt lcm = 1;
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t q = top / 2; q <= top; ++q) {
    const BigRational v = phi_exact(Dyadic(BigInt(static_cast<unsigned long>(q)), n));
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
  }
  return lcm;
}

}  // namespace dphi
