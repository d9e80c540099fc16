#include "cli.hpp"

#include "tepperlab/identities.hpp"
#include "tepperlab/numtheory.hpp"
#include "tepperlab/occupancy.hpp"
#include "tepperlab/parser.hpp"
#include "tepperlab/report_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>

namespace tepperlab::cli {

namespace {

// Exact routes compute C(p-1, k) as big integers; keep them desk-sized.
constexpr std::uint64_t kExactRouteLimit = 20'000;

struct Options {
  std::string format = "text";
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;

  std::uint64_t n = 0;
  std::optional<std::string> x;
  std::optional<std::string> mode;
  std::string poly;
  std::uint64_t l = 1;

  std::uint64_t max_degree = 0;
  std::uint64_t max_step = 1;
  std::uint64_t trials = 1;
  std::uint64_t seed = SweepOptions{}.seed;

  std::uint64_t wagons = 0;
  std::uint64_t passengers = 0;
  std::uint64_t occupied = 0;
  bool oracle = false;

  std::uint64_t p = 0;
  std::optional<std::uint64_t> wilson_p;
  std::optional<std::uint64_t> upto;
  std::string route = "naive";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Emitter {
 public:
  Emitter(std::ostream& out, bool json) : out_(out), json_(json) {}

  int emit(const IdentityReport& r) {
    tally_.add(r);
    out_ << (json_ ? to_json(r).dump() : to_text(r)) << '\n';
    if (r.is_input_error()) return kExitInputError;
    return r.passed() ? kExitOk : kExitViolation;
  }

  int emit(const CommandReport& r) {
    tally_.add(r);
    out_ << (json_ ? to_json(r).dump() : to_text(r)) << '\n';
    return (r.passed && !*r.passed) ? kExitViolation : kExitOk;
  }

  void summary() { out_ << (json_ ? to_json(tally_).dump() : to_text(tally_)) << '\n'; }

 private:
  std::ostream& out_;
  bool json_;
  Tally tally_;
};

// Input errors dominate violations, which dominate success.
int combine(int a, int b) {
  auto rank = [](int c) { return c == kExitInputError ? 3 : c == kExitBudget ? 2 : c == kExitViolation ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

Rational parse_rational(const std::string& text, const char* flag) {
  try {
    return Rational::from_string(text);
  } catch (const DomainError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

Evaluation resolve_evaluation(const Options& o) {
  std::string mode = o.mode.value_or(o.x ? "numeric" : "symbolic");
  if (mode == "symbolic") return Evaluation::symbolic();
  return Evaluation::numeric_at(o.x ? parse_rational(*o.x, "--x") : Rational(0));
}

Polynomial parse_poly(const std::string& source) {
  try {
    return parse_polynomial(source);
  } catch (const ParseError& e) {
    throw UsageError("--poly: " + std::string(e.what()));
  }
}

std::uint64_t resolve_budget(const Options& o) {
  if (o.budget) return *o.budget;
  if (const char* env = std::getenv("TEPPERLAB_BUDGET")) {
    try {
      return Natural::from_string(env).to_uint64();
    } catch (const DomainError&) {
      throw UsageError("TEPPERLAB_BUDGET must be a natural number");
    }
  }
  return kDefaultEnumerationBudget;
}

int run_wilson(const Options& o, Emitter& emit, std::ostream& err) {
  if (o.wilson_p.has_value() == o.upto.has_value()) throw UsageError("wilson needs exactly one of --p or --upto");
  const std::uint64_t largest = o.wilson_p ? *o.wilson_p : *o.upto;
  const std::uint64_t limit = o.route == "naive" ? kDefaultWilsonLimit : kExactRouteLimit;
  if (largest > limit) {
    err << "BUDGET-EXCEEDED wilson route=" << o.route << " input " << largest << " exceeds the limit " << limit
        << '\n';
    return kExitBudget;
  }

  auto check = [&](std::uint64_t p) -> ModularCheck {
    if (o.route == "tepper") return factorial_mod_tepper(p);
    if (o.route == "fermat") {
      if (!is_prime_trial_division(p)) throw UsageError("--route fermat needs a prime p, got " + std::to_string(p));
      return factorial_mod_fermat_route(p);
    }
    return {p, factorial_mod_naive(p - 1, p), p - 1, WilsonRoute::naive_factorial};
  };

  if (o.wilson_p) {
    if (*o.wilson_p < 2) throw UsageError("--p must be at least 2");
    return emit.emit(to_command_report(check(*o.wilson_p)));
  }
  int code = kExitOk;
  for (std::uint64_t p = 2; p <= *o.upto; ++p) {
    if (is_prime_trial_division(p)) code = combine(code, emit.emit(to_command_report(check(p))));
  }
  emit.summary();
  return code;
}

int dispatch(const CLI::App& app, const Options& o, std::ostream& out, std::ostream& err) {
  Emitter emit(out, o.format == "json");
  auto used = [&](const char* name) { return app.got_subcommand(name); };

  if (used("tepper")) return emit.emit(verify_tepper(o.n, resolve_evaluation(o)));
  if (used("lemma")) return emit.emit(verify_lemma(parse_poly(o.poly), o.n, resolve_evaluation(o)));
  if (used("general")) return emit.emit(verify_generalized(parse_poly(o.poly), resolve_evaluation(o)));
  if (used("conjecture")) return emit.emit(verify_conjecture(parse_poly(o.poly), o.l, resolve_evaluation(o)));
  if (used("expansion")) {
    if (!o.x) throw UsageError("expansion needs --x");
    return emit.emit(verify_via_expansion(o.n, parse_rational(*o.x, "--x")).report);
  }
  if (used("sweep")) {
    SweepOptions so{o.max_degree, o.max_step, o.trials, o.seed, o.threads};
    int code = kExitOk;
    for (const auto& r : sweep_conjecture(so)) code = combine(code, emit.emit(r));
    emit.summary();
    return code;
  }
  if (used("occupancy")) {
    if (o.occupied > o.wagons) throw UsageError("--occupied must not exceed --wagons");
    const OccupancyParams params(o.wagons, o.passengers, o.occupied);
    const OccupancyResult result = occupancy(params, o.oracle, resolve_budget(o));
    CommandReport report = to_command_report(params, result);
    if (o.oracle && !result.oracle) {
      report.text_status = "BUDGET-EXCEEDED";
      report.note += " (enumeration budget exhausted)";
      emit.emit(report);
      return kExitBudget;
    }
    return emit.emit(report);
  }
  if (used("powersum")) {
    if (o.p == 0) throw UsageError("--p must be at least 1");
    if (auto r = verify_power_sum(o.n, o.p)) return emit.emit(*r);
    CommandReport info;
    info.command = "powersum";
    info.parameters = "n=" + std::to_string(o.n) + " p=" + std::to_string(o.p);
    info.computed = alternating_power_sum(o.n, o.p).to_string();
    info.note = "computed=" + *info.computed + " (no closed form claimed for p > n)";
    return emit.emit(info);
  }
  if (used("wilson")) return run_wilson(o, emit, err);
  throw UsageError("no command given");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of alternating binomial sum identities", "tepperlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  const auto modes = CLI::IsMember({"numeric", "symbolic"});
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--x", o.x, "Evaluation point (rational, e.g. 5 or -7/3)");
    sub->add_option("--mode", o.mode, "numeric or symbolic (default symbolic, numeric when --x is given)")
        ->check(modes);
  };

  auto* tepper = app.add_subcommand("tepper", "sum (-1)^k C(n,k) (x-k)^n = n!");
  tepper->add_option("--n", o.n)->required();
  add_mode(tepper);

  auto* lemma = app.add_subcommand("lemma", "sum (-1)^k C(n,k) P(x-k) = 0 for deg P < n");
  lemma->add_option("--poly", o.poly)->required();
  lemma->add_option("--n", o.n)->required();
  add_mode(lemma);

  auto* general = app.add_subcommand("general", "sum (-1)^k C(n,k) P(x-k) = a_n n!, n = deg P");
  general->add_option("--poly", o.poly)->required();
  add_mode(general);

  auto* conjecture = app.add_subcommand("conjecture", "sum (-1)^k C(n,k) P(x-lk) = a_n l^n n!");
  conjecture->add_option("--poly", o.poly)->required();
  conjecture->add_option("--l", o.l)->required();
  add_mode(conjecture);

  auto* sweep = app.add_subcommand("sweep", "Randomized conjecture campaign over degrees and steps");
  sweep->add_option("--max-degree", o.max_degree)->required();
  sweep->add_option("--max-step", o.max_step)->required();
  sweep->add_option("--trials", o.trials)->required();
  sweep->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  sweep->add_option("--threads", o.threads, "Worker threads; output order is unaffected")->capture_default_str();

  auto* expansion = app.add_subcommand("expansion", "Tepper's identity via exchanged summation order");
  expansion->add_option("--n", o.n)->required();
  expansion->add_option("--x", o.x)->required();

  auto* occ = app.add_subcommand("occupancy", "Assignments of passengers to wagons occupying exactly r wagons");
  occ->add_option("--wagons", o.wagons)->required();
  occ->add_option("--passengers", o.passengers)->required();
  occ->add_option("--occupied", o.occupied)->required();
  occ->add_flag("--oracle", o.oracle, "Cross-check by exhaustive enumeration");
  occ->add_option("--budget", o.budget, "Maximum number of enumerated assignments (env TEPPERLAB_BUDGET)");

  auto* powersum = app.add_subcommand("powersum", "C(n,1)1^p - C(n,2)2^p + ... + (-1)^(n-1) C(n,n) n^p");
  powersum->add_option("--n", o.n)->required();
  powersum->add_option("--p", o.p)->required();

  auto* wilson = app.add_subcommand("wilson", "(p-1)! = -1 (mod p) by several routes");
  auto* wp = wilson->add_option("--p", o.wilson_p);
  auto* upto = wilson->add_option("--upto", o.upto, "Check every prime up to N");
  wp->excludes(upto);
  wilson->add_option("--route", o.route)->check(CLI::IsMember({"naive", "tepper", "fermat"}))->capture_default_str();

  std::vector<std::string> argv_storage{"tepperlab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    return dispatch(app, o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace tepperlab::cli
