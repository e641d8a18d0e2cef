#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace fprod {

// Exact coefficient domain. mpq_class is kept canonical (lowest terms,
// positive denominator, zero as 0/1) by every arithmetic operator.
using Integer = mpz_class;
using Rational = mpq_class;

// n/d in lowest terms. Prefer this to the two-argument mpq_class
// constructor, which does not canonicalize.
inline Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x);

// Accepts "a", "-a" and "a/b". Throws UsageError on anything else or b == 0.
Rational parse_rational(std::string_view text);

// Sum of d^k over the positive divisors d of n.
Integer sigma(std::uint64_t n, unsigned k);

// The character (d/3): 0 if 3 | d, +1 if d = 1 mod 3, -1 if d = 2 mod 3.
int chi3(std::int64_t d);

// B_n with B_1 = -1/2, from sum_{j=0}^{n} C(n+1, j) B_j = 0.
// Memoized; safe to call from several threads.
Rational bernoulli(unsigned n);

// Reduced denominator of B_{2k}/(2k).
Integer j_denominator(unsigned two_k);

// p-adic valuation; x must be nonzero.
long nu(unsigned long p, const Rational& x);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);
std::vector<Integer> prime_divisors(Integer n);

// Euler-Fermat congruences, evaluated with modular exponentiation.
//   part (i):  (d^{p^{n-1}(p-1)} - 1) d^n = 0 mod p^n
//   part (ii): (d^{(2n'+1) 2^n} - 1) d^{n+2} = 0 mod 2^{n+2}
enum class Lemma2Part { I, II };

bool lemma2_part_i(std::int64_t d, unsigned p, unsigned n);
bool lemma2_part_ii(std::int64_t d, unsigned n, unsigned n_prime);

// Dispatcher keyed by the textual part tag "i" / "ii"; the third argument is
// p for part (i) and n' for part (ii).
bool lemma2_check(std::string_view part, std::int64_t d, unsigned p_or_nprime, unsigned n);

}  // namespace fprod
