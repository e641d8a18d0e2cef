#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "fprod/modforms.hpp"
#include "fprod/qseries.hpp"

namespace fprod {

// An element of sum_i M_i (x) Q at level 3, stored as a polynomial in E_1, E_3
// graded by weight. Zero components are dropped, so the weight support is
// canonical.
class InhomogeneousForm {
 public:
  InhomogeneousForm() = default;
  explicit InhomogeneousForm(IntegralityRing ring) : ring_(std::move(ring)) {}

  static InhomogeneousForm constant(const Rational& c);
  static InhomogeneousForm monomial(const Monomial& m, const Rational& c = 1);
  static InhomogeneousForm from_component(const GradedComponent& c);

  InhomogeneousForm with_ring(IntegralityRing ring) const;
  const IntegralityRing& ring() const noexcept { return ring_; }

  bool is_zero() const noexcept { return components_.empty(); }
  std::optional<int> max_weight() const;
  std::vector<int> weights() const;
  const std::map<int, GradedComponent>& components() const noexcept { return components_; }
  // Zero component when the weight is absent.
  GradedComponent component(int weight) const;

  QSeries expand(std::size_t prec) const;
  QSeries expand(MonomialTable& table) const;

  InhomogeneousForm& operator+=(const InhomogeneousForm& rhs);
  InhomogeneousForm& operator-=(const InhomogeneousForm& rhs);
  InhomogeneousForm& operator*=(const Rational& c);

  friend InhomogeneousForm operator+(InhomogeneousForm a, const InhomogeneousForm& b) { return a += b; }
  friend InhomogeneousForm operator-(InhomogeneousForm a, const InhomogeneousForm& b) { return a -= b; }
  friend InhomogeneousForm operator-(const InhomogeneousForm& a);
  friend InhomogeneousForm operator*(const InhomogeneousForm& a, const InhomogeneousForm& b);
  friend InhomogeneousForm operator*(InhomogeneousForm a, const Rational& c) { return a *= c; }
  friend InhomogeneousForm operator*(const Rational& c, InhomogeneousForm a) { return a *= c; }
  friend bool operator==(const InhomogeneousForm&, const InhomogeneousForm&) = default;

 private:
  void add_component(int weight, const std::vector<Rational>& coords, const Rational& factor);
  void check_ring(const InhomogeneousForm& other) const;

  std::map<int, GradedComponent> components_;
  IntegralityRing ring_ = IntegralityRing::level3();
};

InhomogeneousForm pow(const InhomogeneousForm& f, unsigned e);

// A class in Dbar_k (x) Q/Z.
struct DividedCongruenceClass {
  InhomogeneousForm rep;
  int filtration = 1;
};

// Audit trail for a congruence verdict: on success
//   (f - g) - adjustment_weight0 - adjustment_weightk
// expands integrally (over the form's ring) to checked_precision.
struct CongruenceCertificate {
  bool verdict = false;
  int filtration = 0;
  Rational adjustment_weight0;
  GradedComponent adjustment_weightk;
  std::size_t checked_precision = 0;
  std::optional<QSeries> integral_remainder;
};

// All weights <= k and the expansion is integral to prec.
bool in_filtration(const InhomogeneousForm& f, int k, std::size_t prec);

// Decides f = g in Dbar_k (x) Q/Z, i.e. whether f - g lies in
// D_k + M_0 (x) Q + M_k (x) Q, on truncations at prec.
CongruenceCertificate equiv_mod_dbar(const InhomogeneousForm& f, const InhomogeneousForm& g, int k, std::size_t prec);

inline CongruenceCertificate equiv_mod_dbar(const DividedCongruenceClass& a, const InhomogeneousForm& g, std::size_t prec) {
  return equiv_mod_dbar(a.rep, g, a.filtration, prec);
}

// Smallest m in [1, bound] with m f = 0 in Dbar_k (x) Q/Z; nullopt when none
// exists at this precision.
std::optional<unsigned> order_in_qz(const InhomogeneousForm& f, int k, std::size_t prec, unsigned bound = 64);

nlohmann::json to_json(const GradedComponent& c);
nlohmann::json to_json(const InhomogeneousForm& f);
nlohmann::json to_json(const CongruenceCertificate& c);

}  // namespace fprod
