#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seshadri/comparative.hpp"
#include "seshadri/surface.hpp"
#include "seshadri/wps.hpp"

#ifndef SESHADRI_VERSION
#define SESHADRI_VERSION "0.0.0"
#endif

namespace seshadri {

// Every scalar leaves the tool in both forms: the exact symbolic expression
// and a correctly rounded decimal at the requested precision.
struct ScalarRendering {
  std::string symbolic;
  std::string decimal;
  bool operator==(const ScalarRendering&) const = default;
};

ScalarRendering render_scalar(const ExactScalar& x, int digits);

struct CertificateRow {
  std::string source;
  std::string scope;
  ScalarRendering value;
  bool sharp = false;
  int rank = 0;  // 1-based among all-points rows; exact ties share a rank
  std::vector<std::string> assumptions;
  std::optional<long long> witness_p, witness_m;
  bool operator==(const CertificateRow&) const = default;
};

struct FindingRow {
  std::string chain;
  std::optional<long long> k2, r, l2, p;
  ScalarRendering lhs, rhs;
  std::string verdict;
  std::string note;
  bool operator==(const FindingRow&) const = default;
};

struct ViolationRow {
  std::string id, message, source;
  bool operator==(const ViolationRow&) const = default;
};

struct WpsReport {
  std::vector<long long> weights;
  long long degree = 0;
  long long canonical_coefficient = 0;
  ScalarRendering k2;
  std::string pg;
  bool integrality_warning = false;
  bool picard_rank_one = false;
  std::vector<std::string> steenbrink_reasons;
  bool operator==(const WpsReport&) const = default;
};

struct ExampleReport {
  WpsReport wps;
  ScalarRendering bound;
  bool sharp = false;
  ScalarRendering theorem_value;
  ScalarRendering challenge_value;
  bool operator==(const ExampleReport&) const = default;
};

struct ReportDocument {
  std::string tool = "seshadri";
  std::string version = SESHADRI_VERSION;
  std::string command;
  std::vector<std::pair<std::string, std::string>> input;  // ordered echo
  std::string status = "ok";  // "ok" or "validation-failed"
  std::vector<ViolationRow> violations;
  std::vector<CertificateRow> certificates;
  std::vector<FindingRow> findings;
  std::map<std::string, long long> summary;
  std::optional<WpsReport> wps;
  std::optional<ExampleReport> example;
  bool operator==(const ReportDocument&) const = default;
};

// builders
ReportDocument build_bound_report(const PolarizedSurface& s, long long p_max, int digits);
ReportDocument build_audit_report(const AuditRanges& ranges, int digits);
ReportDocument build_wps_report(const WeightedHypersurface& h, int digits);
ReportDocument build_example_report(int digits);

// serialization; render_json(parse_json(text)) reproduces text byte for byte
std::string render_json(const ReportDocument& doc);
ReportDocument parse_json(const std::string& text);
std::string render_markdown(const ReportDocument& doc);
std::string render_csv(const ReportDocument& doc);

}  // namespace seshadri
