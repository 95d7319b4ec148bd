#include "dphi/approximants.hpp"

#include <functional>

namespace dphi {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::value_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

IntPolynomial IntPolynomial::compose_square() const {
  if (coeffs_.empty()) return {};
  std::vector<BigInt> out(2 * coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[2 * i] = coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial geometric_polynomial(std::size_t len) {
  return IntPolynomial(std::vector<BigInt>(len, BigInt(1)));
}

IntPolynomial poly_p(unsigned n) {
  IntPolynomial p({BigInt(1)});
  const IntPolynomial one_plus_x({BigInt(1), BigInt(1)});
  for (unsigned k = 1; k <= n; ++k) {
    IntPolynomial next = p.compose_square();
    for (unsigned i = 0; i < k; ++i) next = next * one_plus_x;
    p = std::move(next);
  }
  return p;
}

std::size_t degree_g(unsigned n) {
  std::size_t g = 0;
  for (unsigned k = 1; k <= n; ++k) g = 2 * g + k;
  return g;
}

Dyadic StepFunction::right_edge() const {
  return left_edge + Dyadic(BigInt(static_cast<unsigned long>(values.size())), level);
}

Dyadic StepFunction::plateau_left(std::size_t j) const {
  return left_edge + Dyadic(BigInt(static_cast<unsigned long>(j)), level);
}

BigRational StepFunction::integral() const {
  BigRational s;
  for (const auto& v : values) s += v;
  return s.mul_pow2(-static_cast<long>(level));
}

StepFunction step_function(unsigned n) {
  const IntPolynomial p = poly_p(n);
  const auto g = static_cast<long>(degree_g(n));
  StepFunction sf;
  sf.level = n;
  sf.left_edge = Dyadic(BigInt(-1 - g), n + 1);
  // 2^n * 2^{-C(n+1,2)}
  const long scale = static_cast<long>(n) - static_cast<long>(n) * (n + 1) / 2;
  sf.values.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) sf.values.push_back(BigRational(c).mul_pow2(scale));
  return sf;
}

namespace {

BigRational plateau(const StepFunction& sf, const BigInt& j) {
  if (sgn(j) < 0 || !j.fits_ulong_p() || j.get_ui() >= sf.values.size()) return BigRational();
  return sf.values[j.get_ui()];
}

}  // namespace

BigRational step_eval(const StepFunction& sf, const Dyadic& t, EdgeRule rule) {
  const Dyadic offset = (t - sf.left_edge).mul_pow2(sf.level);
  const BigInt j = offset.floor();
  if (rule == EdgeRule::midpoint && offset.is_integer()) {
    return (plateau(sf, j - 1) + plateau(sf, j)).mul_pow2(-1);
  }
  return plateau(sf, j);
}

BigInt restricted_partitions(unsigned m, std::size_t r) {
  BigInt count = 0;
  // parts are visited from the largest bound down so the remaining-capacity cut prunes early
  std::function<void(unsigned, std::size_t)> walk = [&](unsigned i, std::size_t remaining) {
    if (i == 0) {
      if (remaining == 0) ++count;
      return;
    }
    const std::size_t capacity_below = (std::size_t{1} << i) - 1 - i;  // sum_{k<i} (2^k - 1)
    const std::size_t bound = (std::size_t{1} << i) - 1;
    for (std::size_t s = 0; s <= bound && s <= remaining; ++s) {
      if (remaining - s > capacity_below) continue;
      walk(i - 1, remaining - s);
    }
  };
  walk(m, r);
  return count;
}

}  // namespace dphi
