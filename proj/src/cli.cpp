#include "platkit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include <CLI11.hpp>

#include "platkit/classify.hpp"
#include "platkit/contfrac.hpp"
#include "platkit/invariants.hpp"
#include "platkit/report.hpp"
#include "platkit/sweep.hpp"
#include "platkit/twobridge.hpp"

namespace platkit {

namespace {

int cmd_invariants(std::int64_t p, std::int64_t q, bool json, std::ostream& out) {
  const KnotReport r = make_report(PlatNormalForm(p, q));
  if (json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << render_text(r);
  }
  return kExitOk;
}

int cmd_table(std::int64_t max_p, const std::string& format, std::ostream& out) {
  const auto rows = table_reports(max_p);
  if (format == "csv") {
    out << render_table_csv(rows);
  } else if (format == "json") {
    out << render_table_json(rows).dump(2) << "\n";
  } else {
    out << render_table_text(rows);
  }
  return kExitOk;
}

int cmd_sweep_monic(std::int64_t max_p, int jobs, bool reference, bool json, std::ostream& out) {
  if (max_p < 3) throw std::invalid_argument("sweep-monic: --max-p must be at least 3");
  const auto start = std::chrono::steady_clock::now();
  const MonicSweep result = reference ? sweep_monic_reference(max_p) : sweep_monic_parallel(max_p, jobs);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const int workers = reference ? 1 : (jobs > 0 ? jobs : default_parallelism());
  if (json) {
    nlohmann::json monic = nlohmann::json::array();
    for (const auto& nf : result.monic) monic.push_back({{"p", nf.p()}, {"q", nf.q()}});
    out << nlohmann::json{{"max_p", max_p}, {"checked", result.checked}, {"monic", monic},
                          {"workers", workers}, {"seconds", seconds}}
               .dump(2)
        << "\n";
  } else {
    out << "checked " << result.checked << " normal forms F(p,q) with 1 < p <= " << max_p
        << ", q even in (0,p)\n";
    out << "monic: " << result.monic.size() << "\n";
    for (const auto& nf : result.monic) out << "  F(" << nf.p() << "," << nf.q() << ")\n";
    out << "workers: " << workers << ", seconds: " << seconds << "\n";
  }
  return result.monic.empty() ? kExitOk : kExitPropertyViolated;
}

int cmd_classify(std::int64_t p, std::int64_t q, std::int64_t p2, std::int64_t q2, std::ostream& out) {
  const bool same = plat_equivalent(p, q, p2, q2);
  const auto a = canonical_class_rep(PlatNormalForm(p, q));
  const auto b = canonical_class_rep(PlatNormalForm(p2, q2));
  const auto tau_a = tau_closed_form(a.p(), a.q());
  const auto tau_b = tau_closed_form(b.p(), b.q());
  if (same) {
    out << "equivalent: det " << p << ", tau " << tau_a << " (class representative F(" << a.p() << "," << a.q()
        << "))\n";
  } else if (p != p2) {
    out << "distinct: det " << p << " vs " << p2 << "\n";
  } else {
    out << "distinct: tau " << tau_a << " vs " << tau_b << "\n";
  }
  return kExitOk;
}

int cmd_cf(const std::string& mode, const std::string& arg, std::ostream& out) {
  if (mode == "expand") {
    out << to_string(canonical_expand(parse_rational(arg))) << "\n";
  } else if (mode == "eval") {
    out << to_string(eval(parse_contfrac(arg))) << "\n";
  } else {
    const ContFrac rev = reverse(parse_contfrac(arg));
    out << to_string(rev) << " (eval " << to_string(eval(rev)) << ")\n";
  }
  return kExitOk;
}

int cmd_bridge(std::int64_t p, std::int64_t q, bool json, std::ostream& out) {
  const LaurentPoly delta = bridge_alexander(p, q);
  const GroupPresentation group = knot_group(p, q);
  const TauResult tr = a_and_tau(delta);
  if (json) {
    out << nlohmann::json{{"p", p},
                          {"q", q},
                          {"alexander_normalized", to_tuple_string(normalize(delta))},
                          {"reciprocal", is_reciprocal(delta)},
                          {"determinant", to_int64(determinant(delta)).value_or(-1)},
                          {"tau", to_int64(tr.tau).value_or(-1)},
                          {"generators", {"x", "y"}},
                          {"exponents", group.exponents()}}
               .dump(2)
        << "\n";
  } else {
    out << "K(" << p << "," << q << ")\n"
        << "alexander_normalized: " << to_tuple_string(normalize(delta)) << "\n"
        << "reciprocal: " << (is_reciprocal(delta) ? "true" : "false") << "\n"
        << "determinant: " << determinant(delta) << "\n"
        << "tau: " << tr.tau << "\n"
        << "group: " << to_string(group) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"platkit: invariants and classification of oriented 2-plat 2-knots F(p,q)", "platkit"};
  app.require_subcommand(1);

  std::int64_t p = 0;
  std::int64_t q = 0;
  bool json = false;
  auto* invariants = app.add_subcommand("invariants", "Invariant report for F(p,q)");
  invariants->add_option("-p", p, "odd positive p")->required();
  invariants->add_option("-q", q, "q coprime to p")->required();
  invariants->add_flag("--json", json, "JSON output");

  std::int64_t max_p = 19;
  std::string format = "text";
  auto* table = app.add_subcommand("table", "Table of F(q/p) with q even in (0,p), p <= max-p");
  table->add_option("--max-p", max_p, "largest p")->capture_default_str();
  table->add_option("--format", format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  std::int64_t sweep_max_p = 2000;
  int jobs = 0;
  bool reference = false;
  bool sweep_json = false;
  auto* sweep = app.add_subcommand("sweep-monic", "Search for monic Alexander polynomials among F(p,q)");
  sweep->add_option("--max-p", sweep_max_p, "largest p")->capture_default_str();
  sweep->add_option("--jobs", jobs, "worker threads (default: available parallelism)");
  sweep->add_flag("--reference", reference, "use the serial sparse-polynomial reference path");
  sweep->add_flag("--json", sweep_json, "JSON output");

  std::vector<std::int64_t> pair_args;
  auto* classify = app.add_subcommand("classify", "Decide whether F(P,Q) and F(P2,Q2) are equivalent");
  classify->add_option("values", pair_args, "P Q P2 Q2")->expected(4)->required();

  std::string cf_mode;
  std::string cf_arg;
  auto* cf = app.add_subcommand("cf", "Continued fractions [c1,...,cm] = 1/(c1 + [c2,...,cm])");
  cf->add_option("mode", cf_mode, "expand, eval or reverse")
      ->check(CLI::IsMember({"expand", "eval", "reverse"}))
      ->required();
  cf->add_option("value", cf_arg, "q/p for expand, c1,c2,... otherwise")->required();

  std::int64_t bp = 0;
  std::int64_t bq = 0;
  bool bridge_json = false;
  auto* bridge = app.add_subcommand("bridge", "Alexander polynomial and group of the 2-bridge knot K(p,q)");
  bridge->add_option("-p", bp, "odd positive p")->required();
  bridge->add_option("-q", bq, "odd q with 0 < |q| < p")->required();
  bridge->add_flag("--json", bridge_json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (invariants->parsed()) return cmd_invariants(p, q, json, out);
    if (table->parsed()) return cmd_table(max_p, format, out);
    if (sweep->parsed()) return cmd_sweep_monic(sweep_max_p, jobs, reference, sweep_json, out);
    if (classify->parsed()) return cmd_classify(pair_args[0], pair_args[1], pair_args[2], pair_args[3], out);
    if (cf->parsed()) return cmd_cf(cf_mode, cf_arg, out);
    if (bridge->parsed()) return cmd_bridge(bp, bq, bridge_json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace platkit
