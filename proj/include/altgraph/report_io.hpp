// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "altgraph/cheeger.hpp"
#include "altgraph/partition.hpp"
#include "altgraph/spectra.hpp"
#include "altgraph/verify.hpp"

namespace altgraph {

enum class Format { Json, Csv, Text };
Format parse_format(std::string_view name);

/// x rounded to 12 significant digits; every number written by the report
/// emitters goes through this so output is stable across platforms.
double round12(double x);
/// %.12g.
std::string format12(double x);

struct EmitOptions {
  // Emit measured check timings; otherwise "millis" is 0 so that reports
  // are byte-identical across runs.
  bool timing = false;
};

nlohmann::ordered_json to_json(const SpectrumReport& r);
SpectrumReport spectrum_report_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const VerificationReport& r, const EmitOptions& options = {});
VerificationReport verification_report_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const CutReport& r);

/// {"blocks": [[...], ...], "labels": [...]}.
nlohmann::ordered_json to_json(const VertexPartition& p);
VertexPartition partition_from_json(const nlohmann::ordered_json& j);

/// A plain JSON array of vertex indices.
std::vector<Vertex> subset_from_json(const nlohmann::ordered_json& j);

/// Header "name,predicted,observed,tolerance,pass", one row per check.
void write_csv(std::ostream& out, const VerificationReport& r);
/// Aligned table with a summary line.
void write_text(std::ostream& out, const VerificationReport& r, const EmitOptions& options = {});
void write_text(std::ostream& out, const SpectrumReport& r);

}  // namespace altgraph
