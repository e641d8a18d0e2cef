#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "fprod/arith.hpp"

namespace fprod {

// Truncated power series c_0 + c_1 q + ... + c_{prec-1} q^{prec-1} with
// exact coefficients. Precision is carried by value: binary operations
// return the smaller precision and never extend it.
class QSeries {
 public:
  explicit QSeries(std::size_t prec);
  explicit QSeries(std::vector<Rational> coeffs);

  static QSeries constant(const Rational& c, std::size_t prec);

  std::size_t prec() const noexcept { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  QSeries truncate(std::size_t prec) const;
  bool is_zero() const;

  QSeries& operator+=(const QSeries& rhs);
  QSeries& operator-=(const QSeries& rhs);

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a);
QSeries scale(const QSeries& a, const Rational& c);

// Truncated Cauchy product. `mul` splits the output coefficients across
// OpenMP threads; `mul_serial` is the single-threaded reference.
QSeries mul(const QSeries& a, const QSeries& b);
QSeries mul_serial(const QSeries& a, const QSeries& b);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries pow(const QSeries& a, unsigned e);

// Z with a finite set of primes inverted. Level 3 uses {3}.
struct IntegralityRing {
  std::set<unsigned long> inverted_primes;

  static IntegralityRing strict() { return {}; }
  static IntegralityRing level3() { return {{3}}; }

  friend bool operator==(const IntegralityRing&, const IntegralityRing&) = default;
};

// Removes every factor of an inverted prime from n.
Integer strip_inverted(Integer n, const IntegralityRing& ring);

bool is_integral(const Rational& x, const IntegralityRing& ring);
bool is_integral(const QSeries& a, const IntegralityRing& ring);

// lcm of the coefficient denominators with the inverted primes removed.
Integer denominator_profile(const QSeries& a, const IntegralityRing& ring);

// {"prec": P, "coeffs": ["num/den", ...]}
nlohmann::json to_json(const QSeries& a);
QSeries qseries_from_json(const nlohmann::json& j);

}  // namespace fprod
