#pragma once

#include <cstddef>
#include <vector>

#include "fprod/qseries.hpp"

namespace fprod {

// Largest Eisenstein weight the constructors accept.
inline constexpr int kEisensteinLimit = 128;
// Largest weight an inhomogeneous form may carry.
inline constexpr int kWeightLimit = 256;

enum class Level { One = 1, Three = 3 };

struct ModularFormExpansion {
  int weight = 0;
  Level level = Level::Three;
  QSeries series{1};
};

// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, k even and >= 4.
ModularFormExpansion eisenstein_level1(int k, std::size_t prec);

// Generators of the Gamma_1(3) ring:
//   E_1 = 1 + 6 sum_n sum_{d|n} (d/3) q^n
//   E_3 = 1 - 9 sum_n sum_{d|n} (d/3) d^2 q^n
ModularFormExpansion e1(std::size_t prec);
ModularFormExpansion e3(std::size_t prec);

// E_1^a E_3^b, of weight a + 3b.
struct Monomial {
  int e1_exp = 0;
  int e3_exp = 0;
  int weight() const noexcept { return e1_exp + 3 * e3_exp; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// All monomials of the given weight, by increasing E_3 exponent.
std::vector<Monomial> basis(int weight);
inline std::size_t dimension(int weight) { return weight < 0 ? 0 : static_cast<std::size_t>(weight / 3 + 1); }

// Coordinates over basis(weight): coords[b] multiplies E_1^{weight-3b} E_3^b.
struct GradedComponent {
  int weight = 0;
  std::vector<Rational> coords;

  bool is_zero() const;
  friend bool operator==(const GradedComponent&, const GradedComponent&) = default;
};

// Caches the powers of E_1 and E_3 at one precision. Not thread-safe; build
// one per task.
class MonomialTable {
 public:
  explicit MonomialTable(std::size_t prec);

  std::size_t prec() const noexcept { return prec_; }
  const QSeries& e1_power(int a);
  const QSeries& e3_power(int b);
  QSeries monomial(const Monomial& m);
  QSeries expand(const GradedComponent& c);

 private:
  std::size_t prec_;
  std::vector<QSeries> e1_powers_;
  std::vector<QSeries> e3_powers_;
};

QSeries expand_component(const GradedComponent& c, std::size_t prec);

// ceil(weight * 8 / 12) + 1.
std::size_t sturm_bound(int weight);

// max(2 * sturm_bound(top_weight), 50).
std::size_t default_precision(int top_weight);

// Solves for the coordinates of f over basis(target_weight) using all of f's
// precision. Throws UsageError when the precision is below the Sturm bound or
// when f is not a level-3 form of that weight.
GradedComponent express_in_basis(const ModularFormExpansion& f, int target_weight);

// Memoized level-3 coordinates of E_k (k even, 4 <= k <= kEisensteinLimit).
// Thread-safe.
const GradedComponent& eisenstein_coords(int k);

// Checks that the basis expansions of every weight <= 24 have full column rank
// at sturm_bound precision. Runs once; throws InvariantViolation on failure.
// Called implicitly by everything that relies on the precision policy.
void ensure_sturm_policy();

// Rank of the matrix whose columns are basis(weight) expansions truncated to prec.
std::size_t basis_rank(int weight, std::size_t prec);

}  // namespace fprod
