#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fprod/divcong.hpp"
#include "fprod/report.hpp"

namespace fprod {

enum class Family { ImJ, Mu };

// A framed-bordism generator: ImJ index k is x_{4k-1}, Mu index k is
// mu_{8k+1}. Dimension-(8k+5) classes have e = 0 and are not modelled.
struct GeneratorDescriptor {
  Family family = Family::ImJ;
  int index = 1;

  static GeneratorDescriptor imj(int k);
  static GeneratorDescriptor mu(int k);

  int dimension() const noexcept { return family == Family::ImJ ? 4 * index - 1 : 8 * index + 1; }
  int lift_weight() const noexcept { return (dimension() + 1) / 2; }
  std::string name() const;

  friend bool operator==(const GeneratorDescriptor&, const GeneratorDescriptor&) = default;
};

struct EInvariant {
  Rational value;
};

// Representatives:
//   mu_{8k+1}      -> 1/2
//   x_3            -> -1/12
//   x_7            -> 1/240
//   x_{8j+3}, j>0  -> B_{4j+2}/(4j+2)
//   x_{8j-1}, j>1  -> B_{4j}/(8j)
EInvariant e_invariant(const GeneratorDescriptor& g);

// mbar = m - e for a weight-(dim+1)/2 form m with integral mbar.
struct CanonicalLift {
  int weight = 0;
  InhomogeneousForm mbar;
};

// x_3 -> -(E1^2-1)/12, x_7 -> (E4-1)/240, mu_{8k+1} -> (E1 E4^k - 1)/2,
// other x_{4k-1} -> e (E_{2k} - 1). The integrality of mbar over Z[1/3] is
// checked to prec and violations raise InvariantViolation.
CanonicalLift canonical_lift(const GeneratorDescriptor& g, std::size_t prec);

inline int product_filtration(const GeneratorDescriptor& a, const GeneratorDescriptor& b) {
  return (a.dimension() + b.dimension() + 2) / 2;
}

// mbar(Y1) e(Y2) in Dbar_filtration.
DividedCongruenceClass product_class(const CanonicalLift& lift1, const EInvariant& e2, int filtration);

// f(Y1 x Y2) = mbar(Y1) e(Y2). Also checks that -mbar(Y2) e(Y1) gives the same
// class and raises InvariantViolation otherwise. prec == 0 selects the
// default precision for the filtration.
DividedCongruenceClass f_of_product(const GeneratorDescriptor& g1, const GeneratorDescriptor& g2, std::size_t prec = 0);

enum class TheoremItem { I, II, III, IV, V, VI };

TheoremItem parse_theorem_item(const std::string& roman);
std::string to_string(TheoremItem item);

struct TheoremParams {
  // items III, IV: k, k' in [1, kmax]; item V: k' in [1, kmax].
  int kmax = 3;
  // item V: indices k of x_{8k+3}.
  std::vector<int> v_indices{0, 1, 2};
  // item VI: pairs (k, k') of x_{4k-1} x_{4k'-1}.
  std::vector<std::pair<int, int>> pairs{{1, 3}, {2, 3}, {3, 3}, {1, 5}, {2, 4}};
};

// prec == 0 selects default_precision(filtration) per instance; an explicit
// prec below the Sturm bound of some instance is rejected.
Report verify_theorem(TheoremItem item, const TheoremParams& params = {}, std::size_t prec = 0);

// (1/2){(E1^2-1)/12 + odd (E3-1)/9} integral over Z to prec.
bool verify_lemma3(int odd_factor, std::size_t prec);
Report lemma3_report(const std::vector<int>& odd_factors, std::size_t prec);

Report verify_remark_beta(std::size_t prec = 0);

// The decomposition of (1/2)(E4-1)/16 modulo Dbar_{4k+1}; for k >= 2 also the
// rule that drops (1/2)((E1^2-1)/4)^2.
Report remark_e4_report(int k, std::size_t prec = 0);
bool verify_remark_e4_decomposition(int k, std::size_t prec = 0);

// The vanishing mechanism for x_{4k-1} x_{4k'-1}: the prime-power
// divisibilities of sigma differences and the class itself. Requires k <= k'
// and rejects k = k' in {1, 2}.
Report verify_generic_vanishing(int k, int k_prime, std::size_t prec = 0);

bool is_excluded_pair(int k, int k_prime);

}  // namespace fprod
