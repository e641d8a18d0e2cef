#include "fprod/arith.hpp"

#include <cctype>
#include <mutex>

#include "fprod/error.hpp"

namespace fprod {

std::string to_string(const Rational& x) { return x.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
    throw UsageError("malformed rational '" + std::string(text) + "'");
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Integer sigma(std::uint64_t n, unsigned k) {
  if (n == 0) throw UsageError("sigma: n must be positive");
  Integer total = 0, term;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_ui_pow_ui(term.get_mpz_t(), d, k);
    total += term;
    std::uint64_t e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(term.get_mpz_t(), e, k);
      total += term;
    }
  }
  return total;
}

int chi3(std::int64_t d) {
  std::int64_t r = ((d % 3) + 3) % 3;
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_memo{Rational(1)};

}  // namespace

Rational bernoulli(unsigned n) {
  std::lock_guard lock(bernoulli_mutex);
  while (bernoulli_memo.size() <= n) {
    const unsigned m = static_cast<unsigned>(bernoulli_memo.size());
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
    Rational acc = 0;
    Integer binom = 1;  // C(m+1, 0)
    for (unsigned j = 0; j < m; ++j) {
      if (bernoulli_memo[j] != 0) acc += Rational(binom) * bernoulli_memo[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    Rational b = -acc / Rational(m + 1);
    b.canonicalize();
    bernoulli_memo.push_back(b);
  }
  return bernoulli_memo[n];
}

Integer j_denominator(unsigned two_k) {
  if (two_k < 2 || two_k % 2 != 0)
    throw UsageError("j_denominator: argument must be a positive even integer");
  Rational r = bernoulli(two_k) / Rational(two_k);
  r.canonicalize();
  return r.get_den();
}

long nu(unsigned long p, const Rational& x) {
  if (x == 0) throw UsageError("nu: valuation of zero is undefined");
  if (!is_prime(p)) throw UsageError("nu: p must be prime");
  Integer tmp;
  auto val = [&](const Integer& z) {
    return static_cast<long>(mpz_remove(tmp.get_mpz_t(), z.get_mpz_t(), Integer(p).get_mpz_t()));
  };
  return val(x.get_num()) - val(x.get_den());
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= bound; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

std::vector<Integer> prime_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

// (base^exponent - 1) * base^tail mod modulus == 0
bool killed(std::int64_t d, const Integer& exponent, unsigned long tail, const Integer& modulus) {
  Integer base = d, a, b;
  mpz_powm(a.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  mpz_powm_ui(b.get_mpz_t(), base.get_mpz_t(), tail, modulus.get_mpz_t());
  Integer r = (a - 1) * b;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
  return r == 0;
}

}  // namespace

bool lemma2_part_i(std::int64_t d, unsigned p, unsigned n) {
  if (!is_prime(p)) throw UsageError("lemma2 part (i): p must be prime");
  if (n < 1) throw UsageError("lemma2 part (i): n must be at least 1");
  Integer pn, exponent;
  mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
  mpz_ui_pow_ui(exponent.get_mpz_t(), p, n - 1);
  exponent *= (p - 1);
  return killed(d, exponent, n, pn);
}

bool lemma2_part_ii(std::int64_t d, unsigned n, unsigned n_prime) {
  if (n < 1) throw UsageError("lemma2 part (ii): n must be at least 1");
  Integer modulus, exponent;
  mpz_ui_pow_ui(modulus.get_mpz_t(), 2, n + 2);
  mpz_ui_pow_ui(exponent.get_mpz_t(), 2, n);
  exponent *= (2 * n_prime + 1);
  return killed(d, exponent, n + 2, modulus);
}

bool lemma2_check(std::string_view part, std::int64_t d, unsigned p_or_nprime, unsigned n) {
  if (part == "i") return lemma2_part_i(d, p_or_nprime, n);
  if (part == "ii") return lemma2_part_ii(d, n, p_or_nprime);
  throw UsageError("lemma2: unknown part '" + std::string(part) + "' (expected i or ii)");
}

}  // namespace fprod
