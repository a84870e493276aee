// SPDX-License-Identifier: Apache-2.0
#include "altgraph/report_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <ostream>

#include "altgraph/error.hpp"

namespace altgraph {

namespace {

using json = nlohmann::ordered_json;

json numbers(const std::vector<double>& xs) {
  json out = json::array();
  for (double x : xs) out.push_back(round12(x));
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

SolverKind parse_solver(const std::string& s) {
  if (s == "dense") return SolverKind::Dense;
  if (s == "iterative") return SolverKind::Iterative;
  throw InvalidArgument("unknown solver '" + s + "'");
}

Family family_from_json(const std::string& s) {
  return s == "custom" ? Family::Custom : parse_family(s);
}

}  // namespace

Format parse_format(std::string_view name) {
  std::string lower;
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "json") return Format::Json;
  if (lower == "csv") return Format::Csv;
  if (lower == "text") return Format::Text;
  throw InvalidArgument("unknown format '" + std::string(name) + "' (expected json, csv or text)");
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

std::string format12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", round12(x));
  return buf;
}

json to_json(const SpectrumReport& r) {
  const bool dense = r.solver == SolverKind::Dense;
  return json{{"family", to_string(r.family)},
              {"n", r.n},
              {"order", r.order},
              {"degree", r.degree},
              {"solver", to_string(r.solver)},
              {"tolerance", round12(r.tolerance)},
              {"seed", r.seed},
              {"eigenvalues", numbers(dense ? r.distinct : r.eigenvalues)},
              {"multiplicities", dense ? json(r.multiplicities) : json::array()},
              {"lambda1", round12(r.lambda1)},
              {"lambda2", round12(r.lambda2)},
              {"gap", round12(r.gap)}};
}

SpectrumReport spectrum_report_from_json(const json& j) {
  SpectrumReport r;
  r.family = family_from_json(j.at("family").get<std::string>());
  r.n = j.at("n").get<int>();
  r.order = j.at("order").get<std::size_t>();
  r.degree = j.at("degree").get<std::size_t>();
  r.solver = parse_solver(j.at("solver").get<std::string>());
  r.tolerance = j.at("tolerance").get<double>();
  r.seed = j.at("seed").get<std::uint64_t>();
  const auto values = j.at("eigenvalues").get<std::vector<double>>();
  r.multiplicities = j.at("multiplicities").get<std::vector<int>>();
  if (r.solver == SolverKind::Dense) {
    r.distinct = values;
    for (std::size_t k = 0; k < values.size() && k < r.multiplicities.size(); ++k)
      r.eigenvalues.insert(r.eigenvalues.end(), static_cast<std::size_t>(r.multiplicities[k]), values[k]);
  } else {
    r.eigenvalues = values;
  }
  r.lambda1 = j.at("lambda1").get<double>();
  r.lambda2 = j.at("lambda2").get<double>();
  r.gap = j.at("gap").get<double>();
  r.algebraic_connectivity = r.gap;
  return r;
}

json to_json(const VerificationReport& r, const EmitOptions& options) {
  json checks = json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"paper_ref", c.claim},
                      {"predicted", round12(c.predicted)},
                      {"observed", round12(c.observed)},
                      {"tolerance", round12(c.tolerance)},
                      {"pass", c.pass},
                      {"millis", options.timing ? round12(c.millis) : 0.0}});
  return json{{"family", to_string(r.family)},
              {"n", r.n},
              {"mode", r.mode},
              {"checks", std::move(checks)},
              {"overall", r.overall()}};
}

VerificationReport verification_report_from_json(const json& j) {
  VerificationReport r;
  r.family = family_from_json(j.at("family").get<std::string>());
  r.n = j.at("n").get<int>();
  r.mode = j.value("mode", std::string{});
  for (const json& c : j.at("checks")) {
    CheckResult check;
    check.name = c.at("name").get<std::string>();
    check.claim = c.at("paper_ref").get<std::string>();
    check.predicted = c.at("predicted").get<double>();
    check.observed = c.at("observed").get<double>();
    check.tolerance = c.at("tolerance").get<double>();
    check.pass = c.at("pass").get<bool>();
    check.millis = c.at("millis").get<double>();
    r.checks.push_back(std::move(check));
  }
  if (j.at("overall").get<bool>() != r.overall())
    throw InvalidArgument("report 'overall' disagrees with its checks");
  return r;
}

json to_json(const CutReport& r) {
  return json{{"description", r.description},
              {"subset_size", r.subset_size},
              {"complement_size", r.complement_size},
              {"boundary", r.boundary},
              {"ratio", round12(r.ratio.value())},
              {"ratio_exact", r.ratio.str()}};
}

json to_json(const VertexPartition& p) {
  return json{{"blocks", p.blocks}, {"labels", p.labels}};
}

VertexPartition partition_from_json(const json& j) {
  VertexPartition p;
  if (j.is_array()) {
    p.blocks = j.get<std::vector<std::vector<Vertex>>>();
  } else {
    p.blocks = j.at("blocks").get<std::vector<std::vector<Vertex>>>();
    if (j.contains("labels")) p.labels = j.at("labels").get<std::vector<std::string>>();
  }
  for (auto& block : p.blocks) std::sort(block.begin(), block.end());
  return p;
}

std::vector<Vertex> subset_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("subset must be a JSON array of vertex indices");
  std::vector<Vertex> out;
  for (const json& v : j) {
    if (!v.is_number_unsigned()) throw InvalidArgument("subset entries must be nonnegative integers");
    out.push_back(v.get<Vertex>());
  }
  return out;
}

void write_csv(std::ostream& out, const VerificationReport& r) {
  out << "name,predicted,observed,tolerance,pass\n";
  for (const CheckResult& c : r.checks)
    out << csv_field(c.name) << ',' << format12(c.predicted) << ',' << format12(c.observed) << ','
        << format12(c.tolerance) << ',' << (c.pass ? "true" : "false") << '\n';
}

void write_text(std::ostream& out, const VerificationReport& r, const EmitOptions& options) {
  std::size_t width = 5;
  for (const CheckResult& c : r.checks) width = std::max(width, c.name.size());
  out << to_string(r.family) << "_" << r.n << " verification (" << r.mode << ")\n";
  out << std::left << std::setw(static_cast<int>(width)) << "check" << "  " << std::right
      << std::setw(16) << "predicted" << "  " << std::setw(16) << "observed" << "  "
      << std::setw(10) << "tolerance" << "  result";
  if (options.timing) out << "  millis";
  out << '\n';
  for (const CheckResult& c : r.checks) {
    out << std::left << std::setw(static_cast<int>(width)) << c.name << "  " << std::right
        << std::setw(16) << format12(c.predicted) << "  " << std::setw(16) << format12(c.observed)
        << "  " << std::setw(10) << format12(c.tolerance) << "  " << (c.pass ? "PASS" : "FAIL");
    if (options.timing) out << "  " << format12(c.millis);
    if (!c.detail.empty()) out << "  (" << c.detail << ')';
    out << '\n';
  }
  for (const std::string& note : r.notes) out << "note: " << note << '\n';
  out << "overall: " << (r.overall() ? "PASS" : "FAIL") << '\n';
}

void write_text(std::ostream& out, const SpectrumReport& r) {
  out << to_string(r.family) << "_" << r.n << " order=" << r.order << " degree=" << r.degree
      << " solver=" << to_string(r.solver) << '\n';
  if (r.solver == SolverKind::Dense) {
    out << std::setw(20) << "eigenvalue" << "  multiplicity\n";
    for (std::size_t k = 0; k < r.distinct.size(); ++k)
      out << std::setw(20) << format12(r.distinct[k]) << "  " << r.multiplicities[k] << '\n';
  }
  out << "lambda1=" << format12(r.lambda1) << " lambda2=" << format12(r.lambda2)
      << " gap=" << format12(r.gap) << '\n';
}

}  // namespace altgraph
