// SPDX-License-Identifier: Apache-2.0
#include "altgraph/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "altgraph/cayley.hpp"
#include "altgraph/cheeger.hpp"
#include "altgraph/error.hpp"
#include "altgraph/partition.hpp"
#include "altgraph/report_io.hpp"
#include "altgraph/spectra.hpp"
#include "altgraph/verify.hpp"

namespace altgraph::cli {

namespace {

using json = nlohmann::ordered_json;

struct Settings {
  std::string family;
  std::string gens;
  int n = 0;
  double tol = 1e-8;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "text";
  std::optional<std::size_t> max_order;
  int max_n = kDefaultMaxBuildPoints;
  int block = 1;
  std::string export_edges;
  std::string partition_path;
  std::string subset_path;
  bool iterative = false;
  bool timing = false;
  bool verbose = false;
};

// Everything derived from the flags before any graph is built.
struct Plan {
  std::string verb;
  Family family = Family::Custom;
  std::optional<GeneratingSet> gens;
  Format format = Format::Text;
  Settings s;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

void emit_json(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

void emit_fields(std::ostream& out, Format format, const json& j) {
  if (format == Format::Json) {
    emit_json(out, j);
    return;
  }
  if (format == Format::Csv) out << "field,value\n";
  for (const auto& [key, value] : j.items()) {
    const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    if (format == Format::Csv) out << key << ',' << (text.find(',') != std::string::npos ? "\"" + text + "\"" : text) << '\n';
    else out << key << ": " << text << '\n';
  }
}

int emit_report(std::ostream& out, const Plan& plan, const VerificationReport& report) {
  const EmitOptions options{plan.s.timing};
  switch (plan.format) {
    case Format::Json: emit_json(out, to_json(report, options)); break;
    case Format::Csv: write_csv(out, report); break;
    case Format::Text: write_text(out, report, options); break;
  }
  return report.overall() ? kSuccess : kCheckFailed;
}

Plan validate(const std::string& verb, const Settings& s) {
  Plan plan;
  plan.verb = verb;
  plan.s = s;
  plan.format = parse_format(s.format);
  if (!s.family.empty() && !s.gens.empty())
    throw InvalidArgument("--family and --gens are mutually exclusive");
  if (s.family.empty() && s.gens.empty()) throw InvalidArgument("--family or --gens is required");
  const bool needs_family = verb == "decompose" || verb == "verify" ||
                            (verb == "divisor" && s.partition_path.empty()) ||
                            (verb == "cut" && s.subset_path.empty());
  if (needs_family && s.family.empty()) throw InvalidArgument("--family is required for " + verb);
  if (s.n < 3) throw InvalidArgument("--n must be at least 3");
  if (s.max_n < 3 || s.max_n > kMaxEnumeratePoints)
    throw InvalidArgument("--max-n must lie in [3, " + std::to_string(kMaxEnumeratePoints) + "]");
  if (s.n > s.max_n)
    throw InvalidArgument("--n " + std::to_string(s.n) + " exceeds the build cap " +
                          std::to_string(s.max_n) + " (raise it with --max-n)");
  if (!(s.tol > 0) || s.tol >= 1) throw InvalidArgument("--tol must lie in (0, 1)");
  if (!s.family.empty()) plan.family = parse_family(s.family);
  if (!s.gens.empty()) plan.gens = custom_generating_set(s.n, parse_permutation_list(s.n, s.gens));
  else if (!s.family.empty()) plan.gens = generating_set(plan.family, s.n);
  if (s.block < 1 || s.block > s.n) throw InvalidArgument("--block must lie in [1, n]");
  if ((verb == "divisor" || verb == "cut") && plan.family == Family::AG && s.n < 4 &&
      s.partition_path.empty() && s.subset_path.empty())
    throw InvalidArgument("AG block partitions need n >= 4");
  if (verb == "decompose" && s.n < 4) throw InvalidArgument("decompose needs n >= 4");
  return plan;
}

CayleyGraph build(const Plan& plan, std::ostream& err) {
  if (plan.s.verbose) err << "building Cayley graph on A_" << plan.s.n << '\n';
  return build_cayley(*plan.gens, {plan.s.max_n});
}

int do_build(const Plan& plan, std::ostream& out, std::ostream& err) {
  const CayleyGraph g = build(plan, err);
  if (!plan.s.export_edges.empty()) {
    std::ofstream file(plan.s.export_edges, std::ios::binary);
    if (!file) throw InvalidArgument("cannot write '" + plan.s.export_edges + "'");
    write_edge_list(file, g);
  }
  emit_fields(out, plan.format,
              json{{"family", to_string(g.family())},
                   {"n", g.n()},
                   {"order", g.order()},
                   {"degree", g.cayley_degree()},
                   {"edges", g.edge_count()},
                   {"connected", is_connected(g)}});
  return kSuccess;
}

constexpr std::size_t kSlowDenseOrder = 1000;

int do_spectrum(const Plan& plan, std::ostream& out, std::ostream& err) {
  const CayleyGraph g = build(plan, err);
  const std::size_t cap = plan.s.max_order.value_or(kDefaultDenseMaxOrder);
  const bool dense = !plan.s.iterative && g.order() <= cap;
  if (plan.s.verbose) err << (dense ? "dense" : "iterative") << " solve, order " << g.order() << '\n';
  if (dense && g.order() > kSlowDenseOrder)
    err << "note: dense solve of order " << g.order()
        << " can take many minutes; --iterative computes lambda2 only\n";
  const SpectrumReport r = dense ? dense_spectrum(g, plan.s.tol)
                                 : iterative_spectrum(g, plan.s.tol, {plan.s.seed, kDefaultMaxIterations});
  if (plan.format == Format::Text) write_text(out, r);
  else emit_fields(out, plan.format, to_json(r));
  return kSuccess;
}

int do_gap(const Plan& plan, std::ostream& out, std::ostream& err) {
  const CayleyGraph g = build(plan, err);
  const SpectrumReport r = iterative_spectrum(g, plan.s.tol, {plan.s.seed, kDefaultMaxIterations});
  if (plan.format == Format::Text) out << format12(r.gap) << '\n';
  else emit_fields(out, plan.format, to_json(r));
  return kSuccess;
}

int do_divisor(const Plan& plan, std::ostream& out, std::ostream& err) {
  const CayleyGraph g = build(plan, err);
  VertexPartition partition;
  std::optional<DivisorMatrix> closed;
  if (!plan.s.partition_path.empty()) {
    partition = partition_from_json(read_json_file(plan.s.partition_path));
  } else {
    partition = family_partition(plan.family, plan.s.n, plan.s.block);
    closed = divisor_closed_form(plan.family, plan.s.n);
  }
  const EquitableResult result = check_equitable(g, partition);
  json j{{"family", to_string(g.family())}, {"n", g.n()}, {"labels", partition.labels}};
  if (const auto* counter = std::get_if<EquitableCounterexample>(&result)) {
    j["equitable"] = false;
    j["counterexample"] = describe(*counter);
    emit_fields(out, plan.format, j);
    return kCheckFailed;
  }
  const DivisorMatrix& b = std::get<DivisorMatrix>(result);
  json rows = json::array();
  for (Eigen::Index r = 0; r < b.k(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < b.k(); ++c) row.push_back(b.entries(r, c));
    rows.push_back(std::move(row));
  }
  j["equitable"] = true;
  j["matrix"] = std::move(rows);
  json values = json::array();
  for (double x : divisor_spectrum(b)) values.push_back(round12(x));
  j["eigenvalues"] = std::move(values);
  bool ok = true;
  if (closed) {
    ok = *closed == b;
    j["matches_closed_form"] = ok;
  }
  emit_fields(out, plan.format, j);
  return ok ? kSuccess : kCheckFailed;
}

int do_cut(const Plan& plan, std::ostream& out, std::ostream& err) {
  const CayleyGraph g = build(plan, err);
  CutReport cut;
  json j;
  if (!plan.s.subset_path.empty()) {
    const auto subset = subset_from_json(read_json_file(plan.s.subset_path));
    cut = cut_ratio(g, subset, plan.s.subset_path);
    j = to_json(cut);
  } else {
    cut = canonical_cut(g, plan.s.block);
    j = to_json(cut);
    const auto [lower, upper] = corollary_bounds(plan.family, plan.s.n);
    j["corollary_lower"] = round12(lower.value());
    j["corollary_upper"] = round12(upper.value());
    j["attains_upper"] = cut.ratio == upper;
  }
  emit_fields(out, plan.format, j);
  return kSuccess;
}

int do_hmin(const Plan& plan, std::ostream& out, std::ostream& err) {
  const CayleyGraph g = build(plan, err);
  const std::size_t cap = plan.s.max_order.value_or(kDefaultBruteForceMaxOrder);
  if (g.order() > cap)
    throw CapExceeded("order " + std::to_string(g.order()) + " above the brute-force cap " +
                      std::to_string(cap));
  const IsoperimetricResult h = brute_force_h(g, cap);
  const SpectrumReport spec = dense_spectrum(g, plan.s.tol);
  const CheegerBounds bounds = cheeger_bounds(spec.gap, static_cast<double>(g.max_degree()));
  json j{{"family", to_string(g.family())},
         {"n", g.n()},
         {"order", g.order()},
         {"h", round12(h.h.value())},
         {"h_exact", h.h.str()},
         {"witness", h.witness},
         {"mu", round12(spec.gap)},
         {"cheeger_lower", round12(bounds.lower)},
         {"cheeger_upper", round12(bounds.upper)}};
  emit_fields(out, plan.format, j);
  return kSuccess;
}

int do_decompose(const Plan& plan, std::ostream& out, std::ostream& err) {
  if (plan.s.verbose) err << "structural checks for " << to_string(plan.family) << "_" << plan.s.n << '\n';
  VerificationReport report;
  report.family = plan.family;
  report.n = plan.s.n;
  report.mode = "structural";
  VerifyOptions options;
  options.tol = plan.s.tol;
  options.seed = plan.s.seed;
  options.max_points = plan.s.max_n;
  if (plan.s.max_order) options.dense_max_order = *plan.s.max_order;
  if (plan.family == Family::AG) {
    report.checks.push_back(check_matchings(plan.s.n, plan.s.block));
  } else {
    report.checks.push_back(check_edge_decomposition(plan.family, plan.s.n));
    report.checks.push_back(check_decomposition_bound(plan.family, plan.s.n, options));
  }
  report.checks.push_back(check_subgraph_isomorphism(plan.family, plan.s.n, plan.s.block));
  return emit_report(out, plan, report);
}

int do_verify(const Plan& plan, std::ostream& out, std::ostream& err) {
  if (plan.s.verbose) err << "verifying " << to_string(plan.family) << "_" << plan.s.n << '\n';
  VerifyOptions options;
  options.tol = plan.s.tol;
  options.seed = plan.s.seed;
  options.max_points = plan.s.max_n;
  if (plan.s.max_order) options.dense_max_order = *plan.s.max_order;
  return emit_report(out, plan, verify_family(plan.family, plan.s.n, options));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley graphs on alternating groups: construction, spectra, cuts and verification",
               "altgraph"};
  app.require_subcommand(1);
  Settings s;

  auto add_common = [&](CLI::App* sub, bool with_gens) {
    sub->add_option("--family", s.family, "AG, EAG or CAG");
    if (with_gens) sub->add_option("--gens", s.gens, "custom generating set, e.g. \"(1,2,3);(1,3,2)\"");
    sub->add_option("--n", s.n, "number of points")->required();
    sub->add_option("--tol", s.tol, "solver tolerance")->capture_default_str();
    sub->add_option("--seed", s.seed, "iterative solver seed")->capture_default_str();
    sub->add_option("--format", s.format, "json, csv or text")->capture_default_str();
    sub->add_option("--max-order", s.max_order, "dense / brute-force order cap");
    sub->add_option("--max-n", s.max_n, "largest n to build")->capture_default_str();
    sub->add_flag("--verbose", s.verbose, "progress on stderr");
  };

  auto* build_cmd = app.add_subcommand("build", "build a graph and optionally export its edges");
  add_common(build_cmd, true);
  build_cmd->add_option("--export-edges", s.export_edges, "edge-list output path");
  auto* spectrum_cmd = app.add_subcommand("spectrum", "adjacency spectrum");
  add_common(spectrum_cmd, true);
  spectrum_cmd->add_flag("--iterative", s.iterative, "force the iterative solver");
  auto* gap_cmd = app.add_subcommand("gap", "adjacency spectral gap (iterative)");
  add_common(gap_cmd, true);
  auto* divisor_cmd = app.add_subcommand("divisor", "equitable partition and divisor matrix");
  add_common(divisor_cmd, true);
  divisor_cmd->add_option("--block", s.block, "block value i")->capture_default_str();
  divisor_cmd->add_option("--partition", s.partition_path, "JSON partition file");
  auto* cut_cmd = app.add_subcommand("cut", "edge boundary of the canonical block or a subset");
  add_common(cut_cmd, true);
  cut_cmd->add_option("--block", s.block, "block value i")->capture_default_str();
  cut_cmd->add_option("--subset", s.subset_path, "JSON subset file");
  auto* hmin_cmd = app.add_subcommand("hmin", "exact isoperimetric number by exhaustion");
  add_common(hmin_cmd, true);
  auto* decompose_cmd = app.add_subcommand("decompose", "matchings, edge decompositions, isomorphisms");
  add_common(decompose_cmd, false);
  decompose_cmd->add_option("--block", s.block, "block value i")->capture_default_str();
  auto* verify_cmd = app.add_subcommand("verify", "run every check for one family and n");
  add_common(verify_cmd, false);
  verify_cmd->add_flag("--timing", s.timing, "report per-check timings");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  Plan plan;
  try {
    plan = validate(verb, s);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    std::ostringstream report;
    int code = kSuccess;
    if (verb == "build") code = do_build(plan, report, err);
    else if (verb == "spectrum") code = do_spectrum(plan, report, err);
    else if (verb == "gap") code = do_gap(plan, report, err);
    else if (verb == "divisor") code = do_divisor(plan, report, err);
    else if (verb == "cut") code = do_cut(plan, report, err);
    else if (verb == "hmin") code = do_hmin(plan, report, err);
    else if (verb == "decompose") code = do_decompose(plan, report, err);
    else code = do_verify(plan, report, err);
    out << report.str();
    return code;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kComputationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kComputationFailed;
  }
}

}  // namespace altgraph::cli
