#include <doctest.h>

#include <cstdint>
#include <random>
#include <string>

#include "dphi/numeric.hpp"

using namespace dphi;

namespace {

unsigned bit_loop_digit_sum(std::uint64_t k) {
  unsigned s = 0;
  for (; k != 0; k /= 2) s += static_cast<unsigned>(k % 2);
  return s;
}

unsigned trial_division_val2(std::uint64_t m) {
  unsigned e = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++e;
  }
  return e;
}

BigInt random_bigint(std::mt19937_64& rng, int limbs) {
  BigInt r = 0;
  for (int i = 0; i < limbs; ++i) {
    r <<= 64;
    r += BigInt(std::to_string(rng()));
  }
  return (rng() & 1U) ? BigInt(-r) : r;
}

BigRational random_rational(std::mt19937_64& rng) {
  BigInt den = random_bigint(rng, 2);
  if (sgn(den) == 0) den = 1;
  return BigRational(random_bigint(rng, 3), abs(den));
}

}  // namespace

TEST_CASE("digit sum") {
  CHECK(digit_sum(std::uint64_t{0}) == 0);
  CHECK(digit_sum(std::uint64_t{3}) == 2);
  CHECK(digit_sum(std::uint64_t{19}) == bit_loop_digit_sum(19));
  CHECK(digit_sum(std::uint64_t{19}) == 3);

  for (std::uint64_t k = 0; k < 5000; ++k) {
    REQUIRE(digit_sum(k) == bit_loop_digit_sum(k));
    REQUIRE(digit_sum(2 * k) == digit_sum(k));
    REQUIRE(digit_sum(2 * k + 1) == digit_sum(k) + 1);
    REQUIRE(digit_sum(BigInt(static_cast<unsigned long>(k))) == digit_sum(k));
  }
  CHECK(digit_sum(pow2(200) - 1) == 200);
  CHECK_THROWS_AS(digit_sum(BigInt(-1)), std::domain_error);
}

TEST_CASE("Thue-Morse signs") {
  const int expected[16] = {1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1, 1, -1, -1, 1};
  for (std::uint64_t k = 0; k < 16; ++k) CHECK(thue_morse_sign(k) == expected[k]);
}

TEST_CASE("2-adic valuation") {
  CHECK(val2(std::uint64_t{1}) == 0);
  CHECK(val2(std::uint64_t{8}) == 3);
  CHECK(val2(std::uint64_t{12}) == trial_division_val2(12));
  CHECK(val2(std::uint64_t{12}) == 2);
  CHECK_THROWS_AS(val2(std::uint64_t{0}), std::domain_error);
  CHECK_THROWS_AS(val2(BigInt(0)), std::domain_error);

  for (std::uint64_t m = 1; m < 300; ++m) {
    REQUIRE(val2(m) == trial_division_val2(m));
    for (std::uint64_t n = 1; n < 300; n += 7) REQUIRE(val2(m * n) == val2(m) + val2(n));
  }
  CHECK(val2(pow2(150) * 3) == 150);
}

TEST_CASE("dyadic normalization") {
  auto check = [](long num, unsigned long exp, long want_num, unsigned long want_exp) {
    const Dyadic d = dyadic_normalize(BigInt(num), exp);
    CHECK(d.num() == want_num);
    CHECK(d.exp() == want_exp);
  };
  check(4, 2, 1, 0);
  check(6, 3, 3, 2);
  check(19, 5, 19, 5);
  check(0, 9, 0, 0);
  check(-12, 3, -3, 1);

  CHECK(Dyadic(BigInt(3), 2).to_rational() == BigRational(BigInt(3), BigInt(4)));
  CHECK(Dyadic(BigInt(-3), 2).floor() == -1);
  CHECK(Dyadic(BigInt(7), 1).floor() == 3);
  CHECK(Dyadic(BigInt(3), 2).numerator_at(5) == 24);
}

TEST_CASE("dyadic arithmetic and ordering") {
  const Dyadic a(BigInt(3), 2);   // 3/4
  const Dyadic b(BigInt(-5), 3);  // -5/8
  CHECK(a + b == Dyadic(BigInt(1), 3));
  CHECK(a - b == Dyadic(BigInt(11), 3));
  CHECK(a * b == Dyadic(BigInt(-15), 5));
  CHECK(a.mul_pow2(2) == Dyadic(3));
  CHECK(a.mul_pow2(-1) == Dyadic(BigInt(3), 3));
  CHECK(b < a);
  CHECK(Dyadic(BigInt(2), 1) == Dyadic(1));
  CHECK(-a == Dyadic(BigInt(-3), 2));
}

TEST_CASE("dyadic to rational is injective on canonical forms") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Dyadic x(BigInt(static_cast<long>(rng() % 2001) - 1000), rng() % 12);
    const Dyadic y(BigInt(static_cast<long>(rng() % 2001) - 1000), rng() % 12);
    REQUIRE((x == y) == (x.to_rational() == y.to_rational()));
  }
}

TEST_CASE("BigRational canonical form") {
  const BigRational r(BigInt(6), BigInt(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(BigRational(BigInt(0), BigInt(5)).den() == 1);
  CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(BigRational(1L) / BigRational(), std::domain_error);
  CHECK(BigRational(BigInt(3), BigInt(4)).mul_pow2(3) == BigRational(6L));
  CHECK(BigRational(BigInt(3), BigInt(4)).mul_pow2(-1) == BigRational(BigInt(3), BigInt(8)));
}

TEST_CASE("BigRational arithmetic is exact") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    const BigRational a = random_rational(rng);
    const BigRational b = random_rational(rng);
    const BigRational c = random_rational(rng);
    REQUIRE((a + b) - b == a);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) REQUIRE((a / b) * b == a);
    REQUIRE(gcd(a.num(), a.den()) == 1);
    REQUIRE(sgn(a.den()) > 0);
  }
}

TEST_CASE("serialization formats") {
  CHECK(BigRational(BigInt(-19), BigInt(33177600)).to_string() == "-19/33177600");
  CHECK(BigRational(5L).to_string() == "5");
  CHECK(BigRational::parse("2/4") == BigRational(BigInt(1), BigInt(2)));
  CHECK(BigRational::parse("-7") == BigRational(-7L));
  CHECK(Dyadic(BigInt(19), 5).to_string() == "19/2^5");
  CHECK(Dyadic(3).to_string() == "3/2^0");
  CHECK(Dyadic::parse("6/2^3") == Dyadic(BigInt(3), 2));
  CHECK(Dyadic::parse("-4") == Dyadic(-4));

  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1/-2", " 3", "3 ", "+3", "1.5", "0x10", "1//2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(BigRational::parse(bad), ParseError);
  }
  for (const char* bad : {"1/2", "1/2^", "1/3^2", "1/2^-1", "x/2^3", "1/2^3 "}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Dyadic::parse(bad), ParseError);
  }
}

TEST_CASE("serialization round-trips") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const BigRational r = random_rational(rng);
    REQUIRE(BigRational::parse(r.to_string()) == r);
    const Dyadic d(random_bigint(rng, 2), rng() % 100);
    REQUIRE(Dyadic::parse(d.to_string()) == d);
  }
}
