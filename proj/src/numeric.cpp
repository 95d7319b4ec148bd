#include "dphi/numeric.hpp"

#include <bit>
#include <cmath>
#include <utility>

namespace dphi {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

unsigned digit_sum(std::uint64_t k) noexcept { return static_cast<unsigned>(std::popcount(k)); }

unsigned digit_sum(const BigInt& k) {
  if (sgn(k) < 0) throw std::domain_error("digit_sum: negative argument");
  return static_cast<unsigned>(mpz_popcount(k.get_mpz_t()));
}

unsigned val2(std::uint64_t m) {
  if (m == 0) throw std::domain_error("val2: valuation of 0 is undefined");
  return static_cast<unsigned>(std::countr_zero(m));
}

unsigned val2(const BigInt& m) {
  if (sgn(m) == 0) throw std::domain_error("val2: valuation of 0 is undefined");
  return static_cast<unsigned>(mpz_scan1(m.get_mpz_t(), 0));
}

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_setbit(r.get_mpz_t(), e);
  return r;
}

BigInt parse_bigint(std::string_view text) {
  if (!is_decimal_integer(text)) {
    throw ParseError("not a decimal integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text), 10);
}

// --- BigRational ----------------------------------------------------------

BigRational::BigRational(const BigInt& num, const BigInt& den) : value_(num, den) {
  if (sgn(den) == 0) throw std::domain_error("BigRational: zero denominator");
  value_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  value_ /= o.value_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigRational BigRational::mul_pow2(long e) const {
  mpq_class r;
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), value_.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), value_.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return BigRational(std::move(r));
}

std::string BigRational::to_string() const {
  if (is_integer()) return num().get_str(10);
  return num().get_str(10) + "/" + den().get_str(10);
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_bigint(text));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw ParseError("negative denominator in '" + std::string(text) + "'");
  }
  const BigInt den = parse_bigint(den_text);
  if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return BigRational(parse_bigint(text.substr(0, slash)), den);
}

// --- Dyadic ---------------------------------------------------------------

Dyadic::Dyadic(BigInt num, unsigned long exp) : num_(std::move(num)), exp_(exp) {
  if (sgn(num_) == 0) {
    exp_ = 0;
    return;
  }
  const unsigned long tz = mpz_scan1(num_.get_mpz_t(), 0);
  const unsigned long shift = tz < exp_ ? tz : exp_;
  if (shift > 0) {
    mpz_tdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), shift);
    exp_ -= shift;
  }
}

BigRational Dyadic::to_rational() const { return BigRational(num_, pow2(exp_)); }

double Dyadic::to_double() const {
  long e = 0;
  const double m = mpz_get_d_2exp(&e, num_.get_mpz_t());
  return std::ldexp(m, static_cast<int>(e - static_cast<long>(exp_)));
}

BigInt Dyadic::floor() const {
  BigInt r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), num_.get_mpz_t(), exp_);
  return r;
}

BigInt Dyadic::numerator_at(unsigned long level) const {
  if (level < exp_) throw std::domain_error("Dyadic::numerator_at: level below exponent");
  BigInt r;
  mpz_mul_2exp(r.get_mpz_t(), num_.get_mpz_t(), level - exp_);
  return r;
}

std::string Dyadic::to_string() const { return num_.get_str(10) + "/2^" + std::to_string(exp_); }

Dyadic Dyadic::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Dyadic(parse_bigint(text), 0);
  const auto tail = text.substr(slash + 1);
  if (tail.size() < 3 || tail.substr(0, 2) != "2^") {
    throw ParseError("expected 'num/2^exp', got '" + std::string(text) + "'");
  }
  const auto exp_text = tail.substr(2);
  if (exp_text.front() == '-') throw ParseError("negative exponent in '" + std::string(text) + "'");
  const BigInt e = parse_bigint(exp_text);
  if (!e.fits_ulong_p()) throw ParseError("exponent too large in '" + std::string(text) + "'");
  return Dyadic(parse_bigint(text.substr(0, slash)), e.get_ui());
}

Dyadic Dyadic::mul_pow2(long e) const {
  if (e < 0) return Dyadic(num_, exp_ + static_cast<unsigned long>(-e));
  const auto up = static_cast<unsigned long>(e);
  if (up <= exp_) return Dyadic(num_, exp_ - up);
  BigInt n;
  mpz_mul_2exp(n.get_mpz_t(), num_.get_mpz_t(), up - exp_);
  return Dyadic(std::move(n), 0);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  const unsigned long e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
  return Dyadic(a.numerator_at(e) + b.numerator_at(e), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  const unsigned long e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
  return Dyadic(a.numerator_at(e) - b.numerator_at(e), e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) { return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_); }

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const unsigned long e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
  const int c = cmp(a.numerator_at(e), b.numerator_at(e));
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace dphi
