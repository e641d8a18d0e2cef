#include "fprod/finvariant.hpp"

#include <string>

#include "fprod/error.hpp"

namespace fprod {

namespace {

using Form = InhomogeneousForm;

Form one() { return Form::constant(1); }
Form e1_form() { return Form::monomial({1, 0}); }
Form e3_form() { return Form::monomial({0, 1}); }

Form eisenstein_form(int k) { return Form::from_component(eisenstein_coords(k)); }

// sum_n sigma_{k-1}(n) q^n = -(B_k / 2k) (E_k - 1)
Form sigma_form(int k) {
  return (eisenstein_form(k) - one()) * (-bernoulli(static_cast<unsigned>(k)) / Rational(2 * k));
}

// (E1^2 - 1)/12, integral.
Form x3_series() { return (e1_form() * e1_form() - one()) * frac(1, 12); }
// (E4 - 1)/240 = sum sigma_3(n) q^n
Form x7_series() { return (eisenstein_form(4) - one()) * frac(1, 240); }

std::size_t resolve_prec(std::size_t prec, int filtration) {
  if (prec == 0) return default_precision(filtration);
  if (prec < sturm_bound(filtration))
    throw UsageError("precision " + std::to_string(prec) + " is below the Sturm bound " +
                     std::to_string(sturm_bound(filtration)) + " for filtration " + std::to_string(filtration));
  return prec;
}

CheckTask congruence_task(std::string item, nlohmann::json params, std::string check, std::function<Form()> lhs,
                          std::function<Form()> rhs, int k, std::size_t prec) {
  prec = resolve_prec(prec, k);
  return [=] {
    return timed([&] {
      auto cert = equiv_mod_dbar(lhs(), rhs(), k, prec);
      CheckResult r{item, params, check, cert.verdict, std::nullopt, prec, 0.0};
      r.certificate = std::move(cert);
      return r;
    });
  };
}

CheckTask predicate_task(std::string item, nlohmann::json params, std::string check, std::size_t prec,
                         std::function<bool()> body) {
  return [=] { return timed([&] { return CheckResult{item, params, check, body(), std::nullopt, prec, 0.0}; }); };
}

bool sigma_difference_divisible(unsigned low, unsigned shift, const Integer& modulus, std::size_t prec) {
  for (std::uint64_t r = 1; r < prec; ++r) {
    Integer diff = sigma(r, low + shift) - sigma(r, low);
    if (!mpz_divisible_p(diff.get_mpz_t(), modulus.get_mpz_t())) return false;
  }
  return true;
}

void require_index_range(int k, int lo, const char* what) {
  if (k < lo) throw UsageError(std::string(what) + " must be at least " + std::to_string(lo));
}

}  // namespace

GeneratorDescriptor GeneratorDescriptor::imj(int k) {
  require_index_range(k, 1, "ImJ index");
  return {Family::ImJ, k};
}

GeneratorDescriptor GeneratorDescriptor::mu(int k) {
  require_index_range(k, 1, "mu index");
  return {Family::Mu, k};
}

std::string GeneratorDescriptor::name() const {
  return (family == Family::ImJ ? "x" : "mu") + std::to_string(dimension());
}

EInvariant e_invariant(const GeneratorDescriptor& g) {
  if (g.index < 1) throw UsageError("generator index must be positive");
  if (g.family == Family::Mu) return {frac(1, 2)};
  const int k = g.index;
  if (k == 1) return {frac(-1, 12)};
  if (k == 2) return {frac(1, 240)};
  // odd k: B_{2k}/(2k); even k: B_{2k}/(4k)
  const Rational b = bernoulli(static_cast<unsigned>(2 * k));
  return {k % 2 == 1 ? b / Rational(2 * k) : b / Rational(4 * k)};
}

CanonicalLift canonical_lift(const GeneratorDescriptor& g, std::size_t prec) {
  const int weight = g.lift_weight();
  Form mbar;
  if (g.family == Family::Mu) {
    if (weight > kWeightLimit) throw UsageError("mu index out of the configured weight range");
    mbar = (e1_form() * pow(eisenstein_form(4), static_cast<unsigned>(g.index)) - one()) * frac(1, 2);
  } else if (g.index == 1) {
    mbar = -x3_series();
  } else if (g.index == 2) {
    mbar = x7_series();
  } else {
    if (weight > kEisensteinLimit) throw UsageError("ImJ index out of the configured Eisenstein range");
    mbar = (eisenstein_form(weight) - one()) * e_invariant(g).value;
  }
  if (prec == 0) prec = default_precision(weight);
  if (!is_integral(mbar.expand(prec), mbar.ring()))
    throw InvariantViolation("canonical lift of " + g.name() + " does not expand integrally");
  return {weight, std::move(mbar)};
}

DividedCongruenceClass product_class(const CanonicalLift& lift1, const EInvariant& e2, int filtration) {
  return {lift1.mbar * e2.value, filtration};
}

DividedCongruenceClass f_of_product(const GeneratorDescriptor& g1, const GeneratorDescriptor& g2, std::size_t prec) {
  const int filtration = product_filtration(g1, g2);
  prec = resolve_prec(prec, filtration);
  const auto lift1 = canonical_lift(g1, prec);
  const auto lift2 = canonical_lift(g2, prec);
  auto cls = product_class(lift1, e_invariant(g2), filtration);
  const Form alt = -(lift2.mbar * e_invariant(g1).value);
  if (!equiv_mod_dbar(cls.rep, alt, filtration, prec).verdict)
    throw InvariantViolation("f(" + g1.name() + " x " + g2.name() + ") is not antisymmetric");
  return cls;
}

TheoremItem parse_theorem_item(const std::string& roman) {
  if (roman == "i") return TheoremItem::I;
  if (roman == "ii") return TheoremItem::II;
  if (roman == "iii") return TheoremItem::III;
  if (roman == "iv") return TheoremItem::IV;
  if (roman == "v") return TheoremItem::V;
  if (roman == "vi") return TheoremItem::VI;
  throw UsageError("unknown theorem item '" + roman + "' (expected i, ii, iii, iv, v or vi)");
}

std::string to_string(TheoremItem item) {
  switch (item) {
    case TheoremItem::I: return "i";
    case TheoremItem::II: return "ii";
    case TheoremItem::III: return "iii";
    case TheoremItem::IV: return "iv";
    case TheoremItem::V: return "v";
    case TheoremItem::VI: return "vi";
  }
  return "?";
}

bool is_excluded_pair(int k, int k_prime) { return k == k_prime && (k == 1 || k == 2); }

namespace {

// Kervaire cases: f(x^2) = s c with c = |e(x)| and s = (E - 1)/c integral for
// E = E1^2 or E4. Completing the square: s c + s^2/2 = (E^2 - 1) c^2 / 2, a
// weight-2w form plus a constant.
std::vector<CheckTask> kervaire_tasks(const std::string& item, const GeneratorDescriptor& x, std::function<Form()> s,
                                      std::function<Form()> top_form, std::size_t prec) {
  const int k = product_filtration(x, x);
  prec = resolve_prec(prec, k);
  const nlohmann::json params = {{"generator", x.name()}};
  auto rhs = [s] { return s() * s() * frac(1, 2); };
  std::vector<CheckTask> tasks;
  tasks.push_back(congruence_task(item, params, "class", [x, prec] { return f_of_product(x, x, prec).rep; }, rhs, k, prec));
  tasks.push_back(predicate_task(item, params, "square-completion", prec, [x, s, top_form, prec] {
    const Rational e = e_invariant(x).value;
    const Rational c = abs(e);
    const Form lhs = f_of_product(x, x, prec).rep + s() * s() * frac(1, 2);
    const Form rhs = (top_form() * top_form() - one()) * Rational(c * c / 2);
    return lhs == rhs;
  }));
  tasks.push_back(predicate_task(item, params, "order-two", prec, [rhs, k, prec] {
    const auto order = order_in_qz(rhs(), k, prec);
    return order && *order == 2;
  }));
  return tasks;
}

void check_kmax(int kmax) {
  if (kmax < 1) throw UsageError("kmax must be at least 1");
  if (4 * kmax > kEisensteinLimit) throw UsageError("kmax out of the configured Eisenstein range");
}

std::vector<CheckTask> generic_tasks(int k, int kp, std::size_t prec);

}  // namespace

Report verify_theorem(TheoremItem item, const TheoremParams& params, std::size_t prec) {
  const std::string name = "theorem:" + to_string(item);
  std::vector<CheckTask> tasks;
  switch (item) {
    case TheoremItem::I:
      tasks = kervaire_tasks(name, GeneratorDescriptor::imj(1), x3_series, [] { return e1_form() * e1_form(); }, prec);
      break;
    case TheoremItem::II:
      tasks = kervaire_tasks(name, GeneratorDescriptor::imj(2), x7_series, [] { return eisenstein_form(4); }, prec);
      break;
    case TheoremItem::III:
      check_kmax(params.kmax);
      for (int k = 1; k <= params.kmax; ++k)
        for (int kp = 1; kp <= params.kmax; ++kp) {
          const auto a = GeneratorDescriptor::mu(k), b = GeneratorDescriptor::mu(kp);
          const int filt = product_filtration(a, b);
          const std::size_t p = resolve_prec(prec, filt);
          const nlohmann::json js = {{"k", k}, {"k'", kp}};
          tasks.push_back(congruence_task(name, js, "class", [a, b, p] { return f_of_product(a, b, p).rep; },
                                          [] { return (e1_form() - one()) * frac(1, 4); }, filt, p));
          tasks.push_back(predicate_task(name, js, "witness-integral", p, [k, p] {
            const Form w = (pow(eisenstein_form(4), static_cast<unsigned>(k)) - one()) * frac(1, 4) * e1_form();
            return is_integral(w.expand(p), IntegralityRing::strict());
          }));
        }
      break;
    case TheoremItem::IV:
      check_kmax(params.kmax);
      for (int k = 1; k <= params.kmax; ++k)
        for (int kp = 1; kp <= params.kmax; ++kp) {
          const auto a = GeneratorDescriptor::mu(k), b = GeneratorDescriptor::imj(2 * kp);
          const int filt = product_filtration(a, b);
          const std::size_t p = resolve_prec(prec, filt);
          const nlohmann::json js = {{"k", k}, {"k'", kp}};
          tasks.push_back(congruence_task(name, js, "class", [a, b, p] { return f_of_product(a, b, p).rep; },
                                          [] { return x7_series() * frac(1, 2); }, filt, p));
          tasks.push_back(predicate_task(name, js, "sigma-parity", p, [kp, p] {
            return sigma_difference_divisible(3, static_cast<unsigned>(4 * kp - 4), Integer(2), p);
          }));
        }
      break;
    case TheoremItem::V:
      check_kmax(params.kmax);
      for (int k : params.v_indices) {
        require_index_range(k, 0, "index k of x_{8k+3}");
        if (8 * k + 4 > kEisensteinLimit) throw UsageError("index k of x_{8k+3} out of the configured Eisenstein range");
        for (int kp = 1; kp <= params.kmax; ++kp) {
          const auto a = GeneratorDescriptor::mu(kp), b = GeneratorDescriptor::imj(2 * k + 1);
          const int filt = product_filtration(a, b);
          const std::size_t p = resolve_prec(prec, filt);
          const nlohmann::json js = {{"k", k}, {"k'", kp}};
          tasks.push_back(congruence_task(name, js, "class", [a, b, p] { return f_of_product(a, b, p).rep; },
                                          [] { return Form(); }, filt, p));
          if (k == 0) {
            auto half_x3 = [] { return x3_series() * frac(1, 2); };
            auto padded = [kp] {
              return (x3_series() + e3_form() * pow(eisenstein_form(4), static_cast<unsigned>(kp)) - one()) *
                     frac(1, 2);
            };
            auto reduced = [] { return (x3_series() + e3_form() - one()) * frac(1, 2); };
            tasks.push_back(congruence_task(name, js, "chain-pad", half_x3, padded, filt, p));
            tasks.push_back(congruence_task(name, js, "chain-reduce", padded, reduced, filt, p));
            tasks.push_back(predicate_task(name, js, "lemma3-integral", p, [reduced, p] {
              return is_integral(reduced().expand(p), IntegralityRing::strict());
            }));
          } else {
            tasks.push_back(predicate_task(name, js, "sigma-integral", p, [k, p] {
              const int w = 4 * k + 2;
              const Form f = (one() - eisenstein_form(w)) * (bernoulli(static_cast<unsigned>(w)) / Rational(2 * w));
              const QSeries s = f.expand(p);
              for (std::size_t n = 1; n < p; ++n)
                if (s[n] != Rational(sigma(n, static_cast<unsigned>(w - 1)))) return false;
              return s[0] == 0 && is_integral(s, IntegralityRing::strict());
            }));
          }
        }
      }
      break;
    case TheoremItem::VI:
      for (const auto& [k, kp] : params.pairs) {
        auto more = generic_tasks(k, kp, prec);
        for (auto& t : more) tasks.push_back(std::move(t));
      }
      break;
  }
  for (auto& t : tasks) {
    // Relabel generic-vanishing tasks as theorem:vi.
    if (item == TheoremItem::VI)
      t = [inner = std::move(t), name] {
        auto r = inner();
        r.item = name;
        return r;
      };
  }
  return run_tasks(tasks);
}

namespace {

Form lemma3_form(int odd_factor) {
  return (x3_series() + (e3_form() - one()) * frac(odd_factor, 9)) * frac(1, 2);
}

void check_odd(int odd_factor) {
  if (odd_factor <= 0 || odd_factor % 2 == 0)
    throw UsageError("lemma3: factor must be an odd positive integer, got " + std::to_string(odd_factor));
}

}  // namespace

bool verify_lemma3(int odd_factor, std::size_t prec) {
  check_odd(odd_factor);
  if (prec == 0) throw UsageError("precision must be positive");
  return is_integral(lemma3_form(odd_factor).expand(prec), IntegralityRing::strict());
}

Report lemma3_report(const std::vector<int>& odd_factors, std::size_t prec) {
  std::vector<CheckTask> tasks;
  for (int f : odd_factors) {
    check_odd(f);
    tasks.push_back(predicate_task("lemma3", {{"odd", f}}, "integral", prec, [f, prec] { return verify_lemma3(f, prec); }));
  }
  return run_tasks(tasks);
}

Report verify_remark_beta(std::size_t prec) {
  constexpr int k = 8;
  prec = resolve_prec(prec, k);
  const std::string item = "remark-beta";
  auto s2 = [] { return (e1_form() * e1_form() - one()) * frac(1, 4); };
  auto s4 = [] { return (eisenstein_form(4) - one()) * frac(1, 16); };
  auto a = [] { return (pow(e1_form(), 4) - one()) * frac(1, 8); };
  auto b = [] { return pow(e1_form(), 4) - e1_form() * e3_form(); };
  auto e1e3 = [] { return e1_form() * e3_form(); };
  auto target = [s2] { return pow(s2(), 4) * frac(1, 2) + pow(s2(), 3) * frac(1, 2); };

  std::vector<std::function<Form()>> main_chain = {
      [s4] { return s4() * s4() * frac(1, 2); },
      [a, b] {
        const Form inner = a() * frac(1, 2) + b() * frac(1, 2);
        return inner * inner * frac(1, 2);
      },
      [a, b] {
        return (a() * a() * frac(1, 4) + a() * b() * frac(1, 2) + b() * b() * frac(1, 4)) * frac(1, 2);
      },
      [e1e3, target, s2] { return e1e3() * frac(1, 32) + target() + s2() * s2() * frac(1, 8); },
      [s2, target, a] { return s2() * frac(1, 16) + target() + a() * frac(1, 16) - s2() * frac(1, 16); },
      target,
  };
  std::vector<std::function<Form()>> aux_chain = {
      [e1e3] { return e1e3() * frac(-1, 32); },
      [s4, e1e3] { return s4() * e1e3() * frac(1, 2); },
      [s4] { return s4() * e3_form() * frac(1, 2); },
      [s4] { return s4() * (e3_form() - one()) * frac(1, 2); },
      [s2, s4] { return s2() * s4() * frac(1, 2); },
      [s2] { return (eisenstein_form(6) - one()) * frac(1, 8) * s2() * frac(1, 2); },
      [s2] { return s2() * frac(-1, 16); },
  };

  std::vector<CheckTask> tasks;
  tasks.push_back(congruence_task(item, {{"step", "identity"}}, "congruence", main_chain.front(), target, k, prec));
  for (std::size_t i = 0; i + 1 < main_chain.size(); ++i) {
    const nlohmann::json js = {{"chain", "main"}, {"step", i + 1}};
    if (i < 2)
      tasks.push_back(predicate_task(item, js, "equality", prec,
                                     [lhs = main_chain[i], rhs = main_chain[i + 1]] { return lhs() == rhs(); }));
    else
      tasks.push_back(congruence_task(item, js, "congruence", main_chain[i], main_chain[i + 1], k, prec));
  }
  for (std::size_t i = 0; i + 1 < aux_chain.size(); ++i)
    tasks.push_back(
        congruence_task(item, {{"chain", "e1e3"}, {"step", i + 1}}, "congruence", aux_chain[i], aux_chain[i + 1], k, prec));
  tasks.push_back(predicate_task(item, {{"step", "e4-basis"}}, "equality", prec, [] {
    return eisenstein_coords(4).coords == std::vector<Rational>{9, -8};
  }));
  tasks.push_back(congruence_task(item, {{"step", "reflexive"}}, "congruence", s4, s4, k, prec));
  return run_tasks(tasks);
}

Report remark_e4_report(int k, std::size_t prec) {
  require_index_range(k, 1, "remark-e4 index k");
  const int filt = 4 * k + 1;
  prec = resolve_prec(prec, filt);
  const std::string item = "remark-e4";
  auto s2 = [] { return (e1_form() * e1_form() - one()) * frac(1, 4); };
  auto b = [] { return pow(e1_form(), 4) - e1_form() * e3_form(); };
  auto bracket = [s2] { return (s2() * frac(1, 2) - (e3_form() - one()) * frac(1, 2)) * frac(1, 2); };
  auto square = [s2] { return s2() * s2() * frac(1, 2); };
  std::vector<std::function<Form()>> chain = {
      [] { return (eisenstein_form(4) - one()) * frac(1, 32); },
      [s2, b] { return (s2() * s2() + s2() * frac(1, 2) + b() * frac(1, 2)) * frac(1, 2); },
      [square, bracket] {
        return square() + bracket() - (e1_form() - one()) * frac(1, 4) * e3_form() +
               (pow(e1_form(), 4) - one()) * frac(1, 4);
      },
      [square, bracket, s2] { return square() + bracket() + (e1_form() - one()) * frac(1, 4) * s2(); },
  };

  std::vector<CheckTask> tasks;
  const nlohmann::json base = {{"k", k}};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    nlohmann::json js = base;
    js["step"] = i + 1;
    if (i < 2)
      tasks.push_back(
          predicate_task(item, js, "equality", prec, [lhs = chain[i], rhs = chain[i + 1]] { return lhs() == rhs(); }));
    else
      tasks.push_back(congruence_task(item, js, "congruence", chain[i], chain[i + 1], filt, prec));
  }
  nlohmann::json whole = base;
  whole["step"] = "decomposition";
  tasks.push_back(congruence_task(item, whole, "congruence", chain.front(), chain.back(), filt, prec));

  if (k >= 2) {
    std::vector<std::function<Form()>> drop = {
        square,
        [] { return (e3_form() - one()) * (e3_form() - one()) * frac(1, 2); },
        [] { return e3_form() * e3_form() * frac(1, 2); },
        [k] { return pow(e1_form(), static_cast<unsigned>(4 * k - 5)) * e3_form() * e3_form() * frac(1, 2); },
        [] { return Form(); },
    };
    for (std::size_t i = 0; i + 1 < drop.size(); ++i) {
      nlohmann::json js = base;
      js["drop_step"] = i + 1;
      tasks.push_back(congruence_task(item, js, "congruence", drop[i], drop[i + 1], filt, prec));
    }
    nlohmann::json dropped = base;
    dropped["step"] = "dropped-decomposition";
    auto last = chain.back();
    tasks.push_back(congruence_task(item, dropped, "congruence", chain.front(),
                                    [last, square] { return last() - square(); }, filt, prec));
  }
  return run_tasks(tasks);
}

bool verify_remark_e4_decomposition(int k, std::size_t prec) { return remark_e4_report(k, prec).all_pass(); }

namespace {

std::vector<CheckTask> generic_tasks(int k, int kp, std::size_t prec) {
  require_index_range(k, 1, "k");
  if (k > kp) throw UsageError("generic vanishing expects k <= k', got " + std::to_string(k) + ":" + std::to_string(kp));
  if (is_excluded_pair(k, kp))
    throw UsageError("pair " + std::to_string(k) + ":" + std::to_string(kp) +
                     " is excluded: x3^2 and x7^2 are the product-type Kervaire classes (items i and ii)");
  if (2 * kp > kEisensteinLimit) throw UsageError("k' out of the configured Eisenstein range");
  const int filt = 2 * (k + kp);
  prec = resolve_prec(prec, filt);
  const std::string item = "generic";
  const nlohmann::json base = {{"k", k}, {"k'", kp}};
  const unsigned low = static_cast<unsigned>(2 * kp - 1);
  const unsigned shift = static_cast<unsigned>(2 * k);
  std::vector<CheckTask> tasks;

  for (std::uint64_t p : primes_up_to(shift + 1)) {
    Integer order = p - 1;  // (p-1) p^{n-1}
    for (unsigned n = 1; shift % order == 0; ++n, order *= p) {
      Integer pn;
      mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
      nlohmann::json js = base;
      js["p"] = p;
      js["n"] = n;
      tasks.push_back(predicate_task(item, js, "prime-power", prec, [=] {
        const bool sharp = mpz_divisible_p(j_denominator(shift).get_mpz_t(), pn.get_mpz_t()) != 0;
        return sharp && sigma_difference_divisible(low, shift, pn, prec);
      }));
    }
  }
  if (k % 2 == 0) {
    // k = (2n'+1) 2^{m+1}: one more power of two than the odd-prime argument.
    const unsigned m = static_cast<unsigned>(nu(2, Rational(k)) - 1);
    Integer modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), 2, m + 4);
    nlohmann::json js = base;
    js["m"] = m;
    tasks.push_back(predicate_task(item, js, "two-adic", prec, [=] {
      const Integer twice_j = 2 * j_denominator(shift);
      return mpz_divisible_p(twice_j.get_mpz_t(), modulus.get_mpz_t()) != 0 &&
             sigma_difference_divisible(low, shift, modulus, prec);
    }));
  }
  auto eps = [](int j) { return j % 2 == 0 ? 1 : 2; };
  tasks.push_back(congruence_task(
      item, base, "class-formula",
      [=] {
        return sigma_form(2 * kp) *
               (Rational(eps(kp) * eps(k)) * bernoulli(static_cast<unsigned>(2 * k)) / Rational(4 * k));
      },
      [] { return Form(); }, filt, prec));
  const auto a = GeneratorDescriptor::imj(k), b = GeneratorDescriptor::imj(kp);
  tasks.push_back(
      congruence_task(item, base, "class", [a, b, prec] { return f_of_product(a, b, prec).rep; },
                      [] { return Form(); }, filt, prec));
  return tasks;
}

}  // namespace

Report verify_generic_vanishing(int k, int k_prime, std::size_t prec) {
  return run_tasks(generic_tasks(k, k_prime, prec));
}

}  // namespace fprod
