#include "dphi/coefficients.hpp"

#include <string>

namespace dphi {

namespace {

BigInt factorial(std::size_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt to_positive_integer(const BigRational& v, const char* what, std::size_t index) {
  if (!v.is_integer() || v.sign() <= 0) {
    throw InvariantViolation(std::string(what) + "[" + std::to_string(index) +
                             "] is not a positive integer: " + v.to_string());
  }
  return v.num();
}

}  // namespace

std::vector<std::vector<BigInt>> binomial_rows(std::size_t max_n) {
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(max_n + 1);
  rows.push_back({BigInt(1)});
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto& prev = rows.back();
    std::vector<BigInt> row(n + 1);
    row.front() = 1;
    row.back() = 1;
    for (std::size_t k = 1; k < n; ++k) row[k] = prev[k - 1] + prev[k];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<BigRational> compute_c(std::size_t N) {
  const auto binom = binomial_rows(2 * N + 1);
  std::vector<BigRational> c;
  c.reserve(N + 1);
  c.emplace_back(1L);
  for (std::size_t k = 1; k <= N; ++k) {
    const auto& row = binom[2 * k + 1];
    BigRational rhs;
    for (std::size_t h = 0; h < k; ++h) rhs += BigRational(row[2 * h]) * c[h];
    // (2k+1) 4^k c_k - C(2k+1, 2k) c_k, and C(2k+1, 2k) = 2k+1.
    const BigInt lhs_factor = BigInt(2 * k + 1) * (pow2(2 * k) - 1);
    c.push_back(rhs / BigRational(lhs_factor));
  }
  return c;
}

std::vector<BigInt> extract_F(const std::vector<BigRational>& c) {
  std::vector<BigInt> F;
  F.reserve(c.size());
  BigInt scale = 1;  // (2k+1)!! prod_{j<=k} (4^j - 1)
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k > 0) scale *= BigInt(2 * k + 1) * (pow2(2 * k) - 1);
    F.push_back(to_positive_integer(c[k] * BigRational(scale), "F", k));
  }
  return F;
}

std::vector<BigRational> compute_d(std::size_t N) {
  const auto binom = binomial_rows(N + 1);
  std::vector<BigRational> d;
  d.reserve(N + 1);
  d.emplace_back(1L);
  for (std::size_t n = 1; n <= N; ++n) {
    const auto& row = binom[n + 1];
    BigRational rhs;
    for (std::size_t k = 0; k < n; ++k) rhs += BigRational(row[k]) * d[k];
    const BigInt lhs_factor = BigInt(n + 1) * (pow2(n) - 1);
    d.push_back(rhs / BigRational(lhs_factor));
  }
  return d;
}

std::vector<BigInt> extract_G(const std::vector<BigRational>& d) {
  std::vector<BigInt> G;
  G.reserve(d.size());
  BigInt scale = 1;  // (n+1)! prod_{k<=n} (2^k - 1)
  for (std::size_t n = 0; n < d.size(); ++n) {
    scale *= BigInt(n + 1);
    if (n > 0) scale *= pow2(n) - 1;
    G.push_back(to_positive_integer(d[n] * BigRational(scale), "G", n));
  }
  return G;
}

CoefficientTable CoefficientTable::build(std::size_t order) {
  CoefficientTable t;
  t.d_ = compute_d(order + 1);
  t.G_ = extract_G(t.d_);
  t.c_ = compute_c(order / 2);
  t.F_ = extract_F(t.c_);

  t.moments_.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    t.moments_.push_back(t.d_[n + 1] / BigRational(BigInt(n + 1)));
  }
  for (std::size_t m = 0; m < t.c_.size(); ++m) {
    if (t.moments_[2 * m] * BigRational(2L) != t.c_[m]) {
      throw InvariantViolation("moment route mismatch at order " + std::to_string(2 * m));
    }
  }

  t.near_one_.reserve(order + 2);
  t.near_one_.emplace_back(1L);
  for (std::size_t n = 1; n <= order + 1; ++n) {
    const unsigned long half_binom = n * (n - 1) / 2;
    BigRational v = t.moments_[n - 1] / BigRational(factorial(n - 1));
    t.near_one_.push_back(v.mul_pow2(-static_cast<long>(half_binom)));
  }
  return t;
}

const BigRational& CoefficientTable::moment(std::size_t n) const {
  if (n >= moments_.size()) throw std::out_of_range("CoefficientTable::moment: order too large");
  return moments_[n];
}

const BigRational& CoefficientTable::near_one(std::size_t n) const {
  if (n >= near_one_.size()) throw std::out_of_range("CoefficientTable::near_one: index too large");
  return near_one_[n];
}

BigRational moment(std::size_t n) {
  const auto d = compute_d(n + 1);
  return d[n + 1] / BigRational(BigInt(n + 1));
}

BigRational phi_near_one(std::size_t n) {
  if (n == 0) throw std::domain_error("phi_near_one: n must be >= 1");
  return CoefficientTable::build(n - 1).near_one(n);
}

}  // namespace dphi
