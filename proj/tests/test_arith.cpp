#include <random>

#include <doctest.h>

#include "fprod/arith.hpp"
#include "fprod/error.hpp"
#include "oracles.hpp"

using namespace fprod;

TEST_CASE("sigma examples") {
  CHECK(sigma(1, 3) == 1);
  CHECK(sigma(2, 3) == 9);
  CHECK(sigma(6, 1) == 12);
  CHECK(sigma(12, 0) == 6);
  CHECK_THROWS_AS(sigma(0, 1), UsageError);
}

TEST_CASE("sigma agrees with divisor scan") {
  for (std::uint64_t n = 1; n <= 300; ++n)
    for (unsigned k : {0u, 1u, 3u, 5u, 7u}) CHECK(sigma(n, k) == oracle::divisor_power_sum(n, k));
}

TEST_CASE("sigma is multiplicative on coprime arguments") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(1, 2000);
  int tested = 0;
  while (tested < 300) {
    auto m = pick(rng), n = pick(rng);
    if (std::gcd(m, n) != 1) continue;
    unsigned k = static_cast<unsigned>(rng() % 8);
    CHECK(sigma(m * n, k) == sigma(m, k) * sigma(n, k));
    ++tested;
  }
}

TEST_CASE("chi3") {
  CHECK(chi3(1) == 1);
  CHECK(chi3(3) == 0);
  CHECK(chi3(2) == -1);
  CHECK(chi3(-1) == -1);
  CHECK(chi3(-2) == 1);
  CHECK(chi3(0) == 0);
  CHECK(chi3(100) == 1);
}

TEST_CASE("bernoulli examples") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == frac(-1, 2));
  CHECK(bernoulli(2) == frac(1, 6));
  CHECK(bernoulli(4) == frac(-1, 30));
  CHECK(bernoulli(4) / 8 == frac(-1, 240));
  CHECK(bernoulli(12) == frac(-691, 2730));
}

TEST_CASE("odd bernoulli numbers vanish") {
  for (unsigned n = 3; n <= 200; n += 2) CHECK(bernoulli(n) == 0);
}

TEST_CASE("bernoulli denominators follow von Staudt-Clausen") {
  for (unsigned two_k = 2; two_k <= 100; two_k += 2) {
    CAPTURE(two_k);
    CHECK(bernoulli(two_k).get_den() == oracle::staudt_clausen_denominator(two_k));
  }
}

TEST_CASE("bernoulli agrees with Akiyama-Tanigawa") {
  for (unsigned n = 0; n <= 60; ++n) {
    if (n == 1) continue;
    CAPTURE(n);
    CHECK(bernoulli(n) == oracle::akiyama_tanigawa(n));
  }
}

TEST_CASE("j_denominator") {
  CHECK(j_denominator(2) == 12);
  CHECK(j_denominator(4) == 120);
  CHECK(j_denominator(8) == 240);
  CHECK(j_denominator(12) == 32760);
  CHECK_THROWS_AS(j_denominator(3), UsageError);
  CHECK_THROWS_AS(j_denominator(0), UsageError);
}

TEST_CASE("j_denominator prime-power divisibility") {
  for (unsigned two_k = 2; two_k <= 100; two_k += 2) {
    const Integer j = j_denominator(two_k);
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u})
      for (unsigned n = 1; n <= 6; ++n) {
        unsigned long pn1 = 1;
        for (unsigned i = 1; i < n; ++i) pn1 *= p;
        // at p = 2 the exponent is one more than that of 2k
        const bool predicted = p == 2 ? two_k % pn1 == 0 : two_k % ((p - 1) * pn1) == 0;
        const bool actual = j % (pn1 * p) == 0;
        CAPTURE(two_k);
        CAPTURE(p);
        CAPTURE(n);
        CHECK(predicted == actual);
      }
  }
}

TEST_CASE("nu") {
  CHECK(nu(2, Rational(8)) == 3);
  CHECK(nu(3, frac(1, 9)) == -2);
  CHECK(nu(5, Rational(6)) == 0);
  CHECK(nu(2, frac(-12, 5)) == 2);
  CHECK_THROWS_AS(nu(2, Rational(0)), UsageError);
}

TEST_CASE("primes") {
  CHECK(primes_up_to(20) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_divisors(Integer(360)) == std::vector<Integer>{2, 3, 5});
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("6/8") == frac(3, 4));
  CHECK(to_string(frac(-2, 4)) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
  CHECK_THROWS_AS(parse_rational("x"), UsageError);
  CHECK_THROWS_AS(parse_rational(""), UsageError);
}

TEST_CASE("Euler-Fermat congruence examples") {
  CHECK(lemma2_part_i(2, 3, 2));
  CHECK(lemma2_part_i(3, 3, 1));
  CHECK(lemma2_part_ii(3, 2, 0));
  CHECK(lemma2_check("i", 2, 3, 2));
  CHECK(lemma2_check("ii", 3, 0, 2));
  CHECK_THROWS_AS(lemma2_check("iii", 1, 2, 1), UsageError);
}

TEST_CASE("Euler-Fermat congruence sweep") {
  for (std::int64_t d = -50; d <= 50; ++d)
    for (unsigned n = 1; n <= 6; ++n) {
      for (unsigned p : {2u, 3u, 5u, 7u, 11u}) CHECK(lemma2_part_i(d, p, n));
      for (unsigned np = 0; np <= 4; ++np) CHECK(lemma2_part_ii(d, n, np));
    }
}

TEST_CASE("Euler-Fermat congruences agree with big-integer evaluation") {
  for (std::int64_t d = -6; d <= 6; ++d)
    for (unsigned p : {2u, 3u, 5u})
      for (unsigned n = 1; n <= 3; ++n) {
        Integer pn, pn1, lhs, dn;
        mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
        mpz_ui_pow_ui(pn1.get_mpz_t(), p, n - 1);
        Integer base(static_cast<long>(d));
        mpz_pow_ui(lhs.get_mpz_t(), base.get_mpz_t(), pn1.get_ui() * (p - 1));
        mpz_pow_ui(dn.get_mpz_t(), base.get_mpz_t(), n);
        lhs = (lhs - 1) * dn;
        CHECK(lemma2_part_i(d, p, n) == (lhs % pn == 0));
      }
}
