#include "fprod/divcong.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <tuple>

#include "fprod/error.hpp"
#include "fprod/lattice.hpp"

namespace fprod {

InhomogeneousForm InhomogeneousForm::constant(const Rational& c) {
  InhomogeneousForm f;
  f.add_component(0, {Rational(1)}, c);
  return f;
}

InhomogeneousForm InhomogeneousForm::monomial(const Monomial& m, const Rational& c) {
  if (m.e1_exp < 0 || m.e3_exp < 0) throw UsageError("monomial exponents must be nonnegative");
  InhomogeneousForm f;
  std::vector<Rational> coords(dimension(m.weight()));
  coords[static_cast<std::size_t>(m.e3_exp)] = 1;
  f.add_component(m.weight(), coords, c);
  return f;
}

InhomogeneousForm InhomogeneousForm::from_component(const GradedComponent& c) {
  if (c.coords.size() != dimension(c.weight))
    throw UsageError("GradedComponent: coordinate count does not match dim M_" + std::to_string(c.weight));
  InhomogeneousForm f;
  f.add_component(c.weight, c.coords, 1);
  return f;
}

InhomogeneousForm InhomogeneousForm::with_ring(IntegralityRing ring) const {
  InhomogeneousForm f = *this;
  f.ring_ = std::move(ring);
  return f;
}

std::optional<int> InhomogeneousForm::max_weight() const {
  if (components_.empty()) return std::nullopt;
  return components_.rbegin()->first;
}

std::vector<int> InhomogeneousForm::weights() const {
  std::vector<int> out;
  for (const auto& [w, c] : components_) out.push_back(w);
  return out;
}

GradedComponent InhomogeneousForm::component(int weight) const {
  if (auto it = components_.find(weight); it != components_.end()) return it->second;
  return {weight, std::vector<Rational>(dimension(weight))};
}

QSeries InhomogeneousForm::expand(std::size_t prec) const {
  MonomialTable table(prec);
  return expand(table);
}

QSeries InhomogeneousForm::expand(MonomialTable& table) const {
  QSeries out(table.prec());
  for (const auto& [w, c] : components_) out += table.expand(c);
  return out;
}

void InhomogeneousForm::add_component(int weight, const std::vector<Rational>& coords, const Rational& factor) {
  if (weight > kWeightLimit)
    throw UsageError("weight " + std::to_string(weight) + " exceeds the supported limit " + std::to_string(kWeightLimit));
  if (factor == 0) return;
  auto [it, inserted] = components_.try_emplace(weight, GradedComponent{weight, std::vector<Rational>(dimension(weight))});
  auto& target = it->second.coords;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) target[i] += factor * coords[i];
  if (it->second.is_zero()) components_.erase(it);
}

void InhomogeneousForm::check_ring(const InhomogeneousForm& other) const {
  if (!(ring_ == other.ring_)) throw UsageError("cannot combine forms over different integrality rings");
}

InhomogeneousForm& InhomogeneousForm::operator+=(const InhomogeneousForm& rhs) {
  check_ring(rhs);
  for (const auto& [w, c] : rhs.components_) add_component(w, c.coords, 1);
  return *this;
}

InhomogeneousForm& InhomogeneousForm::operator-=(const InhomogeneousForm& rhs) {
  check_ring(rhs);
  for (const auto& [w, c] : rhs.components_) add_component(w, c.coords, -1);
  return *this;
}

InhomogeneousForm& InhomogeneousForm::operator*=(const Rational& c) {
  if (c == 0) {
    components_.clear();
    return *this;
  }
  for (auto& [w, comp] : components_)
    for (auto& x : comp.coords) x *= c;
  return *this;
}

InhomogeneousForm operator-(const InhomogeneousForm& a) { return a * Rational(-1); }

InhomogeneousForm operator*(const InhomogeneousForm& a, const InhomogeneousForm& b) {
  a.check_ring(b);
  InhomogeneousForm out(a.ring_);
  for (const auto& [wa, ca] : a.components_)
    for (const auto& [wb, cb] : b.components_) {
      const int w = wa + wb;
      std::vector<Rational> coords(dimension(w));
      for (std::size_t i = 0; i < ca.coords.size(); ++i) {
        if (ca.coords[i] == 0) continue;
        for (std::size_t j = 0; j < cb.coords.size(); ++j)
          if (cb.coords[j] != 0) coords[i + j] += ca.coords[i] * cb.coords[j];
      }
      out.add_component(w, coords, 1);
    }
  return out;
}

InhomogeneousForm pow(const InhomogeneousForm& f, unsigned e) {
  InhomogeneousForm result = InhomogeneousForm::constant(1).with_ring(f.ring());
  InhomogeneousForm base = f;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

namespace {

void check_comparable(const InhomogeneousForm& diff, int k, std::size_t prec) {
  if (k < 0) throw UsageError("filtration index must be nonnegative");
  if (auto w = diff.max_weight(); w && *w > k)
    throw UsageError("not comparable at this filtration: weight " + std::to_string(*w) + " exceeds k = " +
                     std::to_string(k));
  if (prec < sturm_bound(k))
    throw UsageError("precision " + std::to_string(prec) + " is below the Sturm bound " +
                     std::to_string(sturm_bound(k)) + " for weight " + std::to_string(k));
}

// Lattice data for Dbar_k at one precision. Columns of B are the constant
// series followed by the basis(k) monomials; all have integer coefficients.
// With W = U^T from the column HNF of B^T, W B is zero below row `rank`, so
//   v in Z^prec + span_Q(B)  <=>  (W v)_i integral for every i >= rank
// and W is unimodular over every localisation of Z.
struct LatticeContext {
  std::size_t prec = 0;
  std::vector<QSeries> columns;
  HermiteForm form;
};

std::shared_ptr<const LatticeContext> lattice_context(int k, std::size_t prec) {
  static std::mutex mutex;
  static std::map<std::pair<int, std::size_t>, std::shared_ptr<const LatticeContext>> memo;
  const auto key = std::make_pair(k, prec);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  auto ctx = std::make_shared<LatticeContext>();
  ctx->prec = prec;
  MonomialTable table(prec);
  ctx->columns.push_back(QSeries::constant(1, prec));
  for (const auto& m : basis(k)) ctx->columns.push_back(table.monomial(m));

  IntMatrix bt(ctx->columns.size(), prec);
  for (std::size_t c = 0; c < ctx->columns.size(); ++c)
    for (std::size_t i = 0; i < prec; ++i) {
      const Rational& x = ctx->columns[c][i];
      if (x.get_den() != 1) throw InvariantViolation("basis monomial with non-integral expansion");
      bt(c, i) = x.get_num();
    }
  ctx->form = hnf(bt);

  std::lock_guard lock(mutex);
  return memo.emplace(key, std::move(ctx)).first->second;
}

}  // namespace

bool in_filtration(const InhomogeneousForm& f, int k, std::size_t prec) {
  ensure_sturm_policy();
  if (prec < sturm_bound(std::max(k, 0)))
    throw UsageError("precision " + std::to_string(prec) + " is below the Sturm bound for weight " + std::to_string(k));
  if (auto w = f.max_weight(); w && *w > k) return false;
  return is_integral(f.expand(prec), f.ring());
}

CongruenceCertificate equiv_mod_dbar(const InhomogeneousForm& f, const InhomogeneousForm& g, int k, std::size_t prec) {
  ensure_sturm_policy();
  const InhomogeneousForm diff = f - g;
  check_comparable(diff, k, prec);
  const auto ctx = lattice_context(k, prec);
  const auto& U = ctx->form.U;
  const auto& H = ctx->form.H;
  const std::size_t rank = ctx->form.rank;
  const std::size_t ncols = ctx->columns.size();
  const QSeries v = diff.expand(prec);

  // t = U^T v
  std::vector<Rational> t(prec);
  for (std::size_t i = 0; i < prec; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < prec; ++j)
      if (v[j] != 0 && U(j, i) != 0) acc += Rational(U(j, i)) * v[j];
    t[i] = std::move(acc);
  }

  CongruenceCertificate cert;
  cert.filtration = k;
  cert.checked_precision = prec;
  cert.adjustment_weightk = {k, std::vector<Rational>(dimension(k))};
  cert.verdict = true;
  for (std::size_t i = rank; i < prec; ++i)
    if (!is_integral(t[i], diff.ring())) {
      cert.verdict = false;
      break;
    }
  if (!cert.verdict) return cert;

  // Back-substitute (W B)_top y = t_top; row i has its pivot in column pivot_rows[i].
  std::vector<Rational> y(ncols);
  for (std::size_t i = rank; i-- > 0;) {
    const std::size_t p = ctx->form.pivot_rows[i];
    Rational acc = t[i];
    for (std::size_t c = p + 1; c < ncols; ++c)
      if (y[c] != 0) acc -= Rational(H(c, i)) * y[c];
    y[p] = acc / Rational(H(p, i));
  }

  QSeries remainder = v;
  for (std::size_t c = 0; c < ncols; ++c)
    if (y[c] != 0) remainder -= scale(ctx->columns[c], y[c]);
  if (!is_integral(remainder, diff.ring()))
    throw InvariantViolation("equiv_mod_dbar: witness leaves a non-integral remainder");

  cert.adjustment_weight0 = y[0];
  for (std::size_t c = 1; c < ncols; ++c) cert.adjustment_weightk.coords[c - 1] = y[c];
  cert.integral_remainder = std::move(remainder);
  return cert;
}

std::optional<unsigned> order_in_qz(const InhomogeneousForm& f, int k, std::size_t prec, unsigned bound) {
  const InhomogeneousForm zero(f.ring());
  for (unsigned m = 1; m <= bound; ++m)
    if (equiv_mod_dbar(f * Rational(m), zero, k, prec).verdict) return m;
  return std::nullopt;
}

nlohmann::json to_json(const GradedComponent& c) {
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& x : c.coords) coords.push_back(to_string(x));
  return {{"weight", c.weight}, {"coords", coords}};
}

nlohmann::json to_json(const InhomogeneousForm& f) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& [w, c] : f.components()) comps.push_back(to_json(c));
  nlohmann::json primes = nlohmann::json::array();
  for (auto p : f.ring().inverted_primes) primes.push_back(p);
  return {{"components", comps}, {"inverted_primes", primes}};
}

nlohmann::json to_json(const CongruenceCertificate& c) {
  return {{"verdict", c.verdict},
          {"filtration", c.filtration},
          {"adjustment_weight0", to_string(c.adjustment_weight0)},
          {"adjustment_weightk", to_json(c.adjustment_weightk)},
          {"checked_precision", c.checked_precision},
          {"integral_remainder", c.integral_remainder ? to_json(*c.integral_remainder) : nlohmann::json(nullptr)}};
}

}  // namespace fprod
