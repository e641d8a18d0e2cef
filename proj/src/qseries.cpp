#include "fprod/qseries.hpp"

#include <algorithm>

#include "fprod/error.hpp"

namespace fprod {

QSeries::QSeries(std::size_t prec) : coeffs_(prec) {
  if (prec == 0) throw UsageError("QSeries: precision must be positive");
}

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw UsageError("QSeries: precision must be positive");
}

QSeries QSeries::constant(const Rational& c, std::size_t prec) {
  QSeries s(prec);
  s[0] = c;
  return s;
}

QSeries QSeries::truncate(std::size_t prec) const {
  if (prec == 0) throw UsageError("QSeries: precision must be positive");
  prec = std::min(prec, this->prec());
  return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(prec)));
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
  coeffs_.resize(std::min(prec(), rhs.prec()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
  coeffs_.resize(std::min(prec(), rhs.prec()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs[i];
  return *this;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries r = a;
  r += b;
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  QSeries r = a;
  r -= b;
  return r;
}

QSeries operator-(const QSeries& a) {
  QSeries r(a.prec());
  for (std::size_t i = 0; i < a.prec(); ++i) r[i] = -a[i];
  return r;
}

QSeries scale(const QSeries& a, const Rational& c) {
  QSeries r(a.prec());
  if (c == 0) return r;
  for (std::size_t i = 0; i < a.prec(); ++i) r[i] = a[i] * c;
  return r;
}

QSeries mul_serial(const QSeries& a, const QSeries& b) {
  const std::size_t prec = std::min(a.prec(), b.prec());
  QSeries r(prec);
  for (std::size_t i = 0; i < prec; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < prec; ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

QSeries mul(const QSeries& a, const QSeries& b) {
  const std::size_t prec = std::min(a.prec(), b.prec());
  QSeries r(prec);
  const auto n = static_cast<std::ptrdiff_t>(prec);
  // Output coefficients are independent; later ones carry more terms.
#pragma omp parallel for schedule(dynamic, 4) if (n >= 64)
  for (std::ptrdiff_t out = 0; out < n; ++out) {
    Rational acc = 0;
    for (std::ptrdiff_t i = 0; i <= out; ++i) {
      const Rational& x = a[static_cast<std::size_t>(i)];
      const Rational& y = b[static_cast<std::size_t>(out - i)];
      if (x != 0 && y != 0) acc += x * y;
    }
    r[static_cast<std::size_t>(out)] = std::move(acc);
  }
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }

QSeries pow(const QSeries& a, unsigned e) {
  QSeries result = QSeries::constant(1, a.prec());
  QSeries base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Integer strip_inverted(Integer n, const IntegralityRing& ring) {
  for (unsigned long p : ring.inverted_primes) {
    if (n == 0) break;
    mpz_remove(n.get_mpz_t(), n.get_mpz_t(), Integer(p).get_mpz_t());
  }
  return n;
}

bool is_integral(const Rational& x, const IntegralityRing& ring) {
  return strip_inverted(x.get_den(), ring) == 1;
}

bool is_integral(const QSeries& a, const IntegralityRing& ring) {
  return std::all_of(a.coeffs().begin(), a.coeffs().end(),
                     [&](const Rational& c) { return is_integral(c, ring); });
}

Integer denominator_profile(const QSeries& a, const IntegralityRing& ring) {
  Integer l = 1;
  for (const Rational& c : a.coeffs()) {
    Integer d = strip_inverted(c.get_den(), ring);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

nlohmann::json to_json(const QSeries& a) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rational& c : a.coeffs()) coeffs.push_back(to_string(c));
  return {{"prec", a.prec()}, {"coeffs", coeffs}};
}

QSeries qseries_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("prec") || !j.contains("coeffs"))
    throw UsageError("QSeries JSON: expected an object with 'prec' and 'coeffs'");
  const auto prec = j.at("prec").get<std::size_t>();
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || coeffs.size() != prec)
    throw UsageError("QSeries JSON: 'coeffs' must be an array of length 'prec'");
  std::vector<Rational> out;
  out.reserve(prec);
  for (const auto& c : coeffs) out.push_back(parse_rational(c.get<std::string>()));
  return QSeries(std::move(out));
}

}  // namespace fprod
