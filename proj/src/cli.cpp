#include "fprod/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "fprod/divcong.hpp"
#include "fprod/error.hpp"
#include "fprod/expr.hpp"
#include "fprod/finvariant.hpp"

namespace fprod::cli {

namespace {

struct Settings {
  bool json = false;
  int level = 3;
  std::size_t prec = 0;
  // check
  std::string lhs, rhs;
  int k = -1;
  // expand
  std::string expression;
  // verify
  std::string suite;
  int kmax = 3;
  std::string pairs = "1:3,2:3,3:3,1:5,2:4";
  std::string odd = "1,3,5,7,9";
  std::string v_indices = "0,1,2";
  int jobs = 0;
  // lemma2
  bool sweep = false;
  std::string part;
  long long d = 0;
  unsigned p = 0, n = 0, nprime = 0;
  // bernoulli
  unsigned bern_n = 0;
  bool jden = false;
};

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": expected a comma-separated list of integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string(flag) + ": empty list");
  return out;
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("--pairs: expected k:k' entries, got '" + item + "'");
    const auto a = parse_int_list(item.substr(0, colon), "--pairs");
    const auto b = parse_int_list(item.substr(colon + 1), "--pairs");
    if (a.size() != 1 || b.size() != 1) throw UsageError("--pairs: expected k:k' entries, got '" + item + "'");
    out.emplace_back(a[0], b[0]);
  }
  if (out.empty()) throw UsageError("--pairs: empty list");
  return out;
}

std::size_t checked_prec(std::size_t requested, int weight) {
  if (requested == 0) return default_precision(weight);
  if (requested < sturm_bound(weight))
    throw UsageError("--prec " + std::to_string(requested) + " is below the Sturm bound " +
                     std::to_string(sturm_bound(weight)) + " for weight " + std::to_string(weight));
  return requested;
}

std::string verdict_word(bool v, const Options& o) {
  if (!o.color) return v ? "PASS" : "FAIL";
  return v ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

void print_series(std::ostream& out, const QSeries& s) {
  for (std::size_t i = 0; i < s.prec(); ++i) out << (i ? ", " : "") << to_string(s[i]);
  out << '\n';
}

int cmd_expand(const Settings& s, std::ostream& out) {
  const auto tree = expr::parse(s.expression);
  // E_k conversion uses its own precision; the form itself is exact.
  const InhomogeneousForm f = expr::evaluate(*tree, default_precision(0));
  const std::size_t prec = s.prec ? s.prec : default_precision(f.max_weight().value_or(0));
  const QSeries series = f.expand(prec);
  if (s.json)
    out << to_json(series).dump() << '\n';
  else
    print_series(out, series);
  return kSuccess;
}

int cmd_check(const Settings& s, std::ostream& out, const Options& o) {
  if (s.k < 0) throw UsageError("check: --k must be nonnegative");
  const std::size_t prec = checked_prec(s.prec, s.k);
  const auto f = expr::evaluate(s.lhs, prec);
  const auto g = expr::evaluate(s.rhs, prec);
  const auto cert = equiv_mod_dbar(f, g, s.k, prec);
  if (s.json) {
    nlohmann::json j = {{"schema", kReportSchema}, {"command", "check"}, {"lhs", s.lhs},
                        {"rhs", s.rhs},            {"k", s.k},            {"certificate", to_json(cert)}};
    out << j.dump(2) << '\n';
  } else {
    out << verdict_word(cert.verdict, o) << "  " << s.lhs << "  ==  " << s.rhs << "  mod Dbar_" << s.k
        << "  (checked to q^" << cert.checked_precision << ")\n";
    if (cert.verdict) {
      out << "  weight-0 adjustment: " << to_string(cert.adjustment_weight0) << '\n';
      out << "  weight-" << s.k << " adjustment:";
      const auto monos = basis(s.k);
      for (std::size_t i = 0; i < monos.size(); ++i)
        out << ' ' << to_string(cert.adjustment_weightk.coords[i]) << "*E1^" << monos[i].e1_exp << "E3^"
            << monos[i].e3_exp;
      out << '\n';
    }
  }
  return cert.verdict ? kSuccess : kVerdictFalse;
}

Report run_suite(const Settings& s) {
  const std::string& suite = s.suite;
  if (suite.rfind("theorem:", 0) == 0) {
    TheoremParams params;
    params.kmax = s.kmax;
    params.pairs = parse_pairs(s.pairs);
    params.v_indices = parse_int_list(s.v_indices, "--v-indices");
    return verify_theorem(parse_theorem_item(suite.substr(8)), params, s.prec);
  }
  if (suite == "lemma3") return lemma3_report(parse_int_list(s.odd, "--odd"), s.prec ? s.prec : default_precision(0));
  if (suite == "remark-beta") return verify_remark_beta(s.prec);
  if (suite == "remark-e4") {
    if (s.kmax < 1) throw UsageError("--kmax must be at least 1");
    Report r;
    for (int k = 1; k <= s.kmax; ++k) r.append(remark_e4_report(k, s.prec));
    return r;
  }
  if (suite == "generic") {
    Report r;
    for (const auto& [k, kp] : parse_pairs(s.pairs)) r.append(verify_generic_vanishing(k, kp, s.prec));
    return r;
  }
  if (suite == "all") {
    Settings sub = s;
    Report r;
    for (const char* name : {"theorem:i", "theorem:ii", "theorem:iii", "theorem:iv", "theorem:v", "theorem:vi",
                             "lemma3", "remark-beta", "remark-e4"}) {
      sub.suite = name;
      r.append(run_suite(sub));
    }
    return r;
  }
  throw UsageError("unknown suite '" + suite +
                   "' (expected theorem:i..vi, lemma3, remark-beta, remark-e4, generic or all)");
}

int cmd_verify(const Settings& s, std::ostream& out, const Options& o) {
  if (s.jobs < 0) throw UsageError("--jobs must be nonnegative");
  if (s.jobs > 0) omp_set_num_threads(s.jobs);
  const Report report = run_suite(s);
  if (s.json) {
    nlohmann::json j = to_json(report);
    j["suite"] = s.suite;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : report.results) {
      out << verdict_word(r.verdict, o) << "  " << std::left << std::setw(12) << r.item << ' ' << std::setw(34)
          << r.params.dump() << ' ' << std::setw(18) << r.check << " q^" << r.precision << "  " << std::fixed
          << std::setprecision(1) << r.wall_time_ms << " ms\n";
    }
    std::size_t passed = 0;
    for (const auto& r : report.results) passed += r.verdict;
    out << passed << "/" << report.results.size() << " checks passed\n";
  }
  return report.all_pass() ? kSuccess : kVerdictFalse;
}

int cmd_lemma2(const Settings& s, std::ostream& out) {
  if (s.sweep) {
    std::size_t total = 0, ok = 0;
    for (long long d = -50; d <= 50; ++d) {
      for (unsigned p : {2U, 3U, 5U, 7U, 11U})
        for (unsigned n = 1; n <= 6; ++n, ++total) ok += lemma2_part_i(d, p, n);
      for (unsigned n = 1; n <= 6; ++n)
        for (unsigned np = 0; np <= 4; ++np, ++total) ok += lemma2_part_ii(d, n, np);
    }
    if (s.json)
      out << nlohmann::json{{"schema", kReportSchema}, {"command", "lemma2"}, {"checked", total}, {"true", ok}}.dump()
          << '\n';
    else
      out << ok << "/" << total << " instances hold\n";
    return ok == total ? kSuccess : kVerdictFalse;
  }
  if (s.part.empty()) throw UsageError("lemma2: pass --sweep or --part i|ii with --d and --n");
  if (s.part == "i" && s.p == 0) throw UsageError("lemma2 part (i) requires --p");
  const bool holds = lemma2_check(s.part, s.d, s.part == "i" ? s.p : s.nprime, s.n);
  if (s.json)
    out << nlohmann::json{{"schema", kReportSchema}, {"command", "lemma2"}, {"part", s.part}, {"holds", holds}}.dump()
        << '\n';
  else
    out << (holds ? "true" : "false") << '\n';
  return holds ? kSuccess : kVerdictFalse;
}

int cmd_bernoulli(const Settings& s, std::ostream& out) {
  const Rational b = bernoulli(s.bern_n);
  std::string jd;
  if (s.jden) jd = j_denominator(s.bern_n).get_str();
  if (s.json) {
    nlohmann::json j = {{"schema", kReportSchema}, {"command", "bernoulli"}, {"n", s.bern_n}, {"value", to_string(b)}};
    if (s.jden) j["j_denominator"] = jd;
    out << j.dump() << '\n';
  } else {
    out << to_string(b) << '\n';
    if (s.jden) out << "j_" << s.bern_n << " = " << jd << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Options& options) {
  Settings s;
  CLI::App app{"Exact q-expansions and divided-congruence checks for f-invariants of products"};
  app.require_subcommand(1, 1);
  app.add_flag("--json", s.json, "Emit JSON instead of text");
  app.add_option("--level", s.level, "Level of the congruence subgroup (only 3 is supported)");

  auto* expand = app.add_subcommand("expand", "Print the q-expansion of an expression");
  expand->add_option("expr", s.expression, "Expression, e.g. \"(E1^2-1)/12\"")->required();
  expand->add_option("--prec", s.prec, "Number of coefficients");

  auto* check = app.add_subcommand("check", "Decide LHS == RHS modulo Dbar_k");
  check->add_option("lhs", s.lhs)->required();
  check->add_option("rhs", s.rhs)->required();
  check->add_option("--k", s.k, "Filtration index")->required();
  check->add_option("--prec", s.prec, "Working precision (at least the Sturm bound of k)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", s.suite, "theorem:i..vi, lemma3, remark-beta, remark-e4, generic or all")->required();
  verify->add_option("--kmax", s.kmax, "Upper end of the k, k' sweep");
  verify->add_option("--pairs", s.pairs, "Comma-separated k:k' pairs for theorem:vi and generic");
  verify->add_option("--odd", s.odd, "Odd factors for lemma3");
  verify->add_option("--v-indices", s.v_indices, "Indices k of x_{8k+3} for theorem:v");
  verify->add_option("--prec", s.prec, "Working precision (default: per-instance policy)");
  verify->add_option("--jobs", s.jobs, "Worker threads (default: OpenMP default)");

  auto* lemma2 = app.add_subcommand("lemma2", "Check the Euler-Fermat congruences");
  lemma2->add_flag("--sweep", s.sweep, "Exhaustive sweep over d in [-50,50], p <= 11, n <= 6, n' <= 4");
  lemma2->add_option("--part", s.part, "i or ii");
  lemma2->add_option("--d", s.d);
  lemma2->add_option("--p", s.p, "Prime (part i)");
  lemma2->add_option("--n", s.n);
  lemma2->add_option("--nprime", s.nprime, "n' (part ii)");

  auto* bern = app.add_subcommand("bernoulli", "Print B_n");
  bern->add_option("n", s.bern_n)->required();
  bern->add_flag("--j-denominator", s.jden, "Also print the denominator of B_n/n");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (s.level != 3)
      throw UsageError("--level " + std::to_string(s.level) +
                       " is not supported: only Gamma_1(3) is implemented (see 'Scope' in README.md)");
    if (expand->parsed()) return cmd_expand(s, out);
    if (check->parsed()) return cmd_check(s, out, options);
    if (verify->parsed()) return cmd_verify(s, out, options);
    if (lemma2->parsed()) return cmd_lemma2(s, out);
    if (bern->parsed()) return cmd_bernoulli(s, out);
  } catch (const ParseError& e) {
    err << "error: parse error " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace fprod::cli
