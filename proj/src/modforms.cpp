#include "fprod/modforms.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "fprod/error.hpp"

namespace fprod {

namespace {

void require_prec(std::size_t prec) {
  if (prec == 0) throw UsageError("precision must be positive");
}

using RationalMatrix = std::vector<std::vector<Rational>>;

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

RationalMatrix basis_matrix(int weight, std::size_t prec) {
  MonomialTable table(prec);
  const auto monos = basis(weight);
  RationalMatrix m(prec, std::vector<Rational>(monos.size()));
  for (std::size_t j = 0; j < monos.size(); ++j) {
    const QSeries s = table.monomial(monos[j]);
    for (std::size_t i = 0; i < prec; ++i) m[i][j] = s[i];
  }
  return m;
}

}  // namespace

ModularFormExpansion eisenstein_level1(int k, std::size_t prec) {
  require_prec(prec);
  if (k == 2) throw UsageError("E2 is not a modular form; use E1^2 for weight 2");
  if (k < 4 || k % 2 != 0) throw UsageError("Eisenstein series E" + std::to_string(k) + " requires an even weight >= 4");
  if (k > kEisensteinLimit) throw UsageError("Eisenstein weight " + std::to_string(k) + " exceeds the configured limit");
  const Rational factor = Rational(-2 * k) / bernoulli(static_cast<unsigned>(k));
  QSeries s(prec);
  s[0] = 1;
  const auto n = static_cast<std::ptrdiff_t>(prec);
#pragma omp parallel for schedule(dynamic, 8) if (n >= 128)
  for (std::ptrdiff_t i = 1; i < n; ++i)
    s[static_cast<std::size_t>(i)] = factor * Rational(sigma(static_cast<std::uint64_t>(i), static_cast<unsigned>(k - 1)));
  return {k, Level::One, std::move(s)};
}

namespace {

// 1 + scale * sum_n sum_{d|n} (d/3) d^power q^n
QSeries character_series(std::size_t prec, long scale, unsigned power) {
  require_prec(prec);
  QSeries s(prec);
  s[0] = 1;
  const auto n = static_cast<std::ptrdiff_t>(prec);
#pragma omp parallel for schedule(dynamic, 8) if (n >= 128)
  for (std::ptrdiff_t i = 1; i < n; ++i) {
    Integer acc = 0, term;
    for (std::ptrdiff_t d = 1; d <= i; ++d) {
      if (i % d != 0) continue;
      const int c = chi3(d);
      if (c == 0) continue;
      mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), power);
      acc += c * term;
    }
    s[static_cast<std::size_t>(i)] = Rational(acc * scale);
  }
  return s;
}

}  // namespace

ModularFormExpansion e1(std::size_t prec) { return {1, Level::Three, character_series(prec, 6, 0)}; }

ModularFormExpansion e3(std::size_t prec) { return {3, Level::Three, character_series(prec, -9, 2)}; }

std::vector<Monomial> basis(int weight) {
  std::vector<Monomial> out;
  for (int b = 0; 3 * b <= weight; ++b) out.push_back({weight - 3 * b, b});
  return out;
}

bool GradedComponent::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c == 0; });
}

MonomialTable::MonomialTable(std::size_t prec) : prec_(prec) {
  require_prec(prec);
  e1_powers_.push_back(QSeries::constant(1, prec));
  e3_powers_.push_back(QSeries::constant(1, prec));
}

const QSeries& MonomialTable::e1_power(int a) {
  if (e1_powers_.size() == 1 && a >= 1) e1_powers_.push_back(e1(prec_).series);
  while (static_cast<int>(e1_powers_.size()) <= a) e1_powers_.push_back(mul(e1_powers_.back(), e1_powers_[1]));
  return e1_powers_[static_cast<std::size_t>(a)];
}

const QSeries& MonomialTable::e3_power(int b) {
  if (e3_powers_.size() == 1 && b >= 1) e3_powers_.push_back(e3(prec_).series);
  while (static_cast<int>(e3_powers_.size()) <= b) e3_powers_.push_back(mul(e3_powers_.back(), e3_powers_[1]));
  return e3_powers_[static_cast<std::size_t>(b)];
}

QSeries MonomialTable::monomial(const Monomial& m) {
  if (m.e1_exp == 0) return e3_power(m.e3_exp);
  if (m.e3_exp == 0) return e1_power(m.e1_exp);
  return mul(e1_power(m.e1_exp), e3_power(m.e3_exp));
}

QSeries MonomialTable::expand(const GradedComponent& c) {
  if (c.coords.size() != dimension(c.weight))
    throw UsageError("GradedComponent: coordinate count does not match dim M_" + std::to_string(c.weight));
  QSeries out(prec_);
  const auto monos = basis(c.weight);
  for (std::size_t j = 0; j < monos.size(); ++j)
    if (c.coords[j] != 0) out += scale(monomial(monos[j]), c.coords[j]);
  return out;
}

QSeries expand_component(const GradedComponent& c, std::size_t prec) {
  MonomialTable table(prec);
  return table.expand(c);
}

std::size_t sturm_bound(int weight) {
  if (weight < 0) throw UsageError("sturm_bound: negative weight");
  constexpr int kIndex = 8;
  return static_cast<std::size_t>((weight * kIndex + 11) / 12 + 1);
}

std::size_t default_precision(int top_weight) {
  return std::max<std::size_t>(2 * sturm_bound(std::max(top_weight, 0)), 50);
}

std::size_t basis_rank(int weight, std::size_t prec) {
  auto m = basis_matrix(weight, prec);
  return row_reduce(m, dimension(weight)).size();
}

void ensure_sturm_policy() {
  static std::once_flag once;
  std::call_once(once, [] {
    for (int w = 0; w <= 24; ++w) {
      if (basis_rank(w, sturm_bound(w)) != dimension(w))
        throw InvariantViolation("Sturm precision policy fails the rank check at weight " + std::to_string(w));
    }
  });
}

GradedComponent express_in_basis(const ModularFormExpansion& f, int target_weight) {
  ensure_sturm_policy();
  if (f.weight != target_weight)
    throw UsageError("express_in_basis: form has weight " + std::to_string(f.weight) + ", requested " +
                     std::to_string(target_weight));
  const std::size_t prec = f.series.prec();
  if (prec < sturm_bound(target_weight))
    throw UsageError("express_in_basis: precision below Sturm bound");
  const std::size_t dim = dimension(target_weight);
  RationalMatrix m = basis_matrix(target_weight, prec);
  for (std::size_t i = 0; i < prec; ++i) m[i].push_back(f.series[i]);
  const auto pivots = row_reduce(m, dim + 1);
  if (!pivots.empty() && pivots.back() == dim)
    throw UsageError("express_in_basis: not a level-3 form of weight " + std::to_string(target_weight));
  if (pivots.size() < dim) throw UsageError("express_in_basis: precision below Sturm bound");
  GradedComponent out{target_weight, std::vector<Rational>(dim)};
  for (std::size_t r = 0; r < dim; ++r) out.coords[pivots[r]] = m[r][dim];
  return out;
}

const GradedComponent& eisenstein_coords(int k) {
  static std::mutex mutex;
  static std::map<int, GradedComponent> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(k); it != memo.end()) return it->second;
  }
  // Validates k before doing any work.
  auto series = eisenstein_level1(k, default_precision(k));
  GradedComponent coords = express_in_basis(series, k);
  std::lock_guard lock(mutex);
  return memo.emplace(k, std::move(coords)).first->second;
}

}  // namespace fprod
