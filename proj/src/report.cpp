#include "seshadri/report.hpp"

#include <json.hpp>

#include <sstream>

namespace seshadri {

using ordered_json = nlohmann::ordered_json;

ScalarRendering render_scalar(const ExactScalar& x, int digits) {
  return {x.to_string(), to_decimal(x, digits)};
}

ReportDocument build_bound_report(const PolarizedSurface& s, long long p_max, int digits) {
  ReportDocument doc;
  doc.command = "bound";
  doc.input = {{"class", to_string(s.surface_class)},
               {"l2", std::to_string(s.l2)},
               {"r", std::to_string(s.r)}};
  if (s.pg) doc.input.emplace_back("pg", std::to_string(*s.pg));
  if (s.q) doc.input.emplace_back("q", std::to_string(*s.q));
  doc.input.emplace_back("p_max", std::to_string(p_max));
  doc.input.emplace_back("digits", std::to_string(digits));

  ValidationReport val = validate(s);
  if (!val.ok()) {
    doc.status = "validation-failed";
    for (const Violation& v : val.violations) {
      doc.violations.push_back({v.id, v.message, v.source});
    }
    return doc;
  }

  std::vector<BoundCertificate> certs = bound_comparison(s, p_max);
  int rank = 0;
  const ExactScalar* prev = nullptr;
  int emitted = 0;
  for (const BoundCertificate& c : certs) {
    CertificateRow row;
    row.source = to_string(c.source);
    row.scope = to_string(c.scope);
    row.value = render_scalar(c.value, digits);
    row.sharp = c.sharp;
    ++emitted;
    if (prev == nullptr || compare(*prev, c.value) != Ordering::Equal) rank = emitted;
    row.rank = rank;
    prev = &c.value;
    row.assumptions = c.assumptions;
    if (c.witness) {
      row.witness_p = c.witness->p;
      row.witness_m = c.witness->m;
    }
    doc.certificates.push_back(std::move(row));
  }
  return doc;
}

ReportDocument build_audit_report(const AuditRanges& ranges, int digits) {
  ReportDocument doc;
  doc.command = "audit";
  doc.input = {{"k2_max", std::to_string(ranges.k2_max)},
               {"r_max", std::to_string(ranges.r_max)},
               {"l2_max", std::to_string(ranges.l2_max)},
               {"digits", std::to_string(digits)}};
  for (const AuditFinding& f : audit_chain(ranges)) {
    FindingRow row;
    row.chain = to_string(f.chain);
    row.k2 = f.at.k2;
    row.r = f.at.r;
    row.l2 = f.at.l2;
    row.p = f.at.p;
    row.lhs = render_scalar(f.lhs, digits);
    row.rhs = render_scalar(f.rhs, digits);
    row.verdict = to_string(f.verdict);
    row.note = f.note;
    doc.summary[row.chain + "-" + row.verdict] += 1;
    doc.findings.push_back(std::move(row));
  }
  return doc;
}

namespace {

WpsReport wps_report_for(const WeightedHypersurface& h, int digits) {
  HypersurfaceInvariants inv = hypersurface_invariants(h);
  WpsReport rep;
  rep.weights.assign(h.weights.begin(), h.weights.end());
  rep.degree = h.degree;
  rep.canonical_coefficient = inv.canonical_coefficient;
  rep.k2 = render_scalar(ExactScalar(inv.k2), digits);
  rep.pg = inv.pg.str();
  rep.integrality_warning = inv.integrality_warning;
  SteenbrinkResult st = steenbrink_check(h);
  rep.picard_rank_one = st.picard_rank_one;
  rep.steenbrink_reasons = st.reasons;
  return rep;
}

}  // namespace

ReportDocument build_wps_report(const WeightedHypersurface& h, int digits) {
  ReportDocument doc;
  doc.command = "wps";
  std::string w = std::to_string(h.weights[0]);
  for (int i = 1; i < 4; ++i) w += "," + std::to_string(h.weights[i]);
  doc.input = {{"weights", w},
               {"degree", std::to_string(h.degree)},
               {"digits", std::to_string(digits)}};
  doc.wps = wps_report_for(h, digits);
  return doc;
}

ReportDocument build_example_report(int digits) {
  ReportDocument doc;
  doc.command = "example";
  doc.input = {{"digits", std::to_string(digits)}};
  SharpnessExample ex = sharpness_example();
  ExampleReport rep;
  rep.wps = wps_report_for(ex.surface, digits);
  rep.bound = render_scalar(ex.bound, digits);
  rep.sharp = ex.sharp;
  rep.theorem_value = render_scalar(ex.theorem_value, digits);
  rep.challenge_value = render_scalar(ex.challenge_value, digits);
  doc.example = rep;
  return doc;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

ordered_json scalar_json(const ScalarRendering& s) {
  return ordered_json{{"symbolic", s.symbolic}, {"decimal", s.decimal}};
}

ScalarRendering scalar_from(const ordered_json& j) {
  return {j.at("symbolic").get<std::string>(), j.at("decimal").get<std::string>()};
}

ordered_json wps_json(const WpsReport& w) {
  ordered_json j;
  j["weights"] = w.weights;
  j["degree"] = w.degree;
  j["canonical_coefficient"] = w.canonical_coefficient;
  j["k2"] = scalar_json(w.k2);
  j["pg"] = w.pg;
  j["integrality_warning"] = w.integrality_warning;
  j["picard_rank_one"] = w.picard_rank_one;
  j["steenbrink_reasons"] = w.steenbrink_reasons;
  return j;
}

WpsReport wps_from(const ordered_json& j) {
  WpsReport w;
  w.weights = j.at("weights").get<std::vector<long long>>();
  w.degree = j.at("degree").get<long long>();
  w.canonical_coefficient = j.at("canonical_coefficient").get<long long>();
  w.k2 = scalar_from(j.at("k2"));
  w.pg = j.at("pg").get<std::string>();
  w.integrality_warning = j.at("integrality_warning").get<bool>();
  w.picard_rank_one = j.at("picard_rank_one").get<bool>();
  w.steenbrink_reasons = j.at("steenbrink_reasons").get<std::vector<std::string>>();
  return w;
}

}  // namespace

std::string render_json(const ReportDocument& doc) {
  ordered_json j;
  j["tool"] = doc.tool;
  j["version"] = doc.version;
  j["command"] = doc.command;
  ordered_json input = ordered_json::object();
  for (const auto& [k, v] : doc.input) input[k] = v;
  j["input"] = input;
  j["status"] = doc.status;
  if (!doc.violations.empty()) {
    ordered_json arr = ordered_json::array();
    for (const ViolationRow& v : doc.violations) {
      arr.push_back(ordered_json{{"id", v.id}, {"message", v.message}, {"source", v.source}});
    }
    j["violations"] = arr;
  }
  if (!doc.certificates.empty()) {
    ordered_json arr = ordered_json::array();
    for (const CertificateRow& c : doc.certificates) {
      ordered_json row;
      row["source"] = c.source;
      row["scope"] = c.scope;
      row["value"] = scalar_json(c.value);
      row["sharp"] = c.sharp;
      row["rank"] = c.rank;
      row["assumptions"] = c.assumptions;
      if (c.witness_p) {
        row["witness"] = ordered_json{{"p", *c.witness_p}, {"m", *c.witness_m}};
      }
      arr.push_back(std::move(row));
    }
    j["certificates"] = arr;
  }
  if (!doc.findings.empty()) {
    ordered_json arr = ordered_json::array();
    for (const FindingRow& f : doc.findings) {
      ordered_json row;
      row["chain"] = f.chain;
      if (f.k2) row["k2"] = *f.k2;
      if (f.r) row["r"] = *f.r;
      if (f.l2) row["l2"] = *f.l2;
      if (f.p) row["p"] = *f.p;
      row["lhs"] = scalar_json(f.lhs);
      row["rhs"] = scalar_json(f.rhs);
      row["verdict"] = f.verdict;
      if (!f.note.empty()) row["note"] = f.note;
      arr.push_back(std::move(row));
    }
    j["findings"] = arr;
    ordered_json sum = ordered_json::object();
    for (const auto& [k, v] : doc.summary) sum[k] = v;
    j["summary"] = sum;
  }
  if (doc.wps) j["wps"] = wps_json(*doc.wps);
  if (doc.example) {
    ordered_json ex;
    ex["wps"] = wps_json(doc.example->wps);
    ex["bound"] = scalar_json(doc.example->bound);
    ex["sharp"] = doc.example->sharp;
    ex["theorem_value"] = scalar_json(doc.example->theorem_value);
    ex["challenge_value"] = scalar_json(doc.example->challenge_value);
    j["example"] = ex;
  }
  return j.dump(2) + "\n";
}

ReportDocument parse_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  ReportDocument doc;
  doc.tool = j.at("tool").get<std::string>();
  doc.version = j.at("version").get<std::string>();
  doc.command = j.at("command").get<std::string>();
  doc.input.clear();
  for (const auto& [k, v] : j.at("input").items()) {
    doc.input.emplace_back(k, v.get<std::string>());
  }
  doc.status = j.at("status").get<std::string>();
  if (j.contains("violations")) {
    for (const auto& row : j["violations"]) {
      doc.violations.push_back({row.at("id").get<std::string>(),
                                row.at("message").get<std::string>(),
                                row.at("source").get<std::string>()});
    }
  }
  if (j.contains("certificates")) {
    for (const auto& row : j["certificates"]) {
      CertificateRow c;
      c.source = row.at("source").get<std::string>();
      c.scope = row.at("scope").get<std::string>();
      c.value = scalar_from(row.at("value"));
      c.sharp = row.at("sharp").get<bool>();
      c.rank = row.at("rank").get<int>();
      c.assumptions = row.at("assumptions").get<std::vector<std::string>>();
      if (row.contains("witness")) {
        c.witness_p = row["witness"].at("p").get<long long>();
        c.witness_m = row["witness"].at("m").get<long long>();
      }
      doc.certificates.push_back(std::move(c));
    }
  }
  if (j.contains("findings")) {
    for (const auto& row : j["findings"]) {
      FindingRow f;
      f.chain = row.at("chain").get<std::string>();
      if (row.contains("k2")) f.k2 = row["k2"].get<long long>();
      if (row.contains("r")) f.r = row["r"].get<long long>();
      if (row.contains("l2")) f.l2 = row["l2"].get<long long>();
      if (row.contains("p")) f.p = row["p"].get<long long>();
      f.lhs = scalar_from(row.at("lhs"));
      f.rhs = scalar_from(row.at("rhs"));
      f.verdict = row.at("verdict").get<std::string>();
      if (row.contains("note")) f.note = row["note"].get<std::string>();
      doc.findings.push_back(std::move(f));
    }
    if (j.contains("summary")) {
      for (const auto& [k, v] : j["summary"].items()) doc.summary[k] = v.get<long long>();
    }
  }
  if (j.contains("wps")) doc.wps = wps_from(j["wps"]);
  if (j.contains("example")) {
    ExampleReport ex;
    ex.wps = wps_from(j["example"].at("wps"));
    ex.bound = scalar_from(j["example"].at("bound"));
    ex.sharp = j["example"].at("sharp").get<bool>();
    ex.theorem_value = scalar_from(j["example"].at("theorem_value"));
    ex.challenge_value = scalar_from(j["example"].at("challenge_value"));
    doc.example = ex;
  }
  return doc;
}

// ---------------------------------------------------------------------------
// markdown and CSV
// ---------------------------------------------------------------------------

namespace {

std::string opt_str(const std::optional<long long>& v) {
  return v ? std::to_string(*v) : "";
}

void render_wps_md(std::ostringstream& os, const WpsReport& w) {
  os << "| invariant | value |\n|---|---|\n";
  std::string ws = std::to_string(w.weights[0]);
  for (std::size_t i = 1; i < w.weights.size(); ++i) ws += "," + std::to_string(w.weights[i]);
  os << "| weights | (" << ws << ") |\n";
  os << "| degree | " << w.degree << " |\n";
  os << "| canonical coefficient d - sum(w) | " << w.canonical_coefficient << " |\n";
  os << "| K^2 | " << w.k2.symbolic << (w.integrality_warning ? " (non-integral!)" : "")
     << " |\n";
  os << "| pg | " << w.pg << " |\n";
  os << "| Picard number 1 (general member) | " << (w.picard_rank_one ? "yes" : "no")
     << " |\n";
  for (const std::string& r : w.steenbrink_reasons) os << "| criterion failure | " << r << " |\n";
}

}  // namespace

std::string render_markdown(const ReportDocument& doc) {
  std::ostringstream os;
  os << "# " << doc.tool << " " << doc.command << " (v" << doc.version << ")\n\n";
  os << "input:";
  for (const auto& [k, v] : doc.input) os << " " << k << "=" << v;
  os << "\n\n";
  if (doc.status != "ok") {
    os << "status: " << doc.status << "\n\n";
    os << "| rule | message | encodes |\n|---|---|---|\n";
    for (const ViolationRow& v : doc.violations) {
      os << "| " << v.id << " | " << v.message << " | " << v.source << " |\n";
    }
    return os.str();
  }
  if (!doc.certificates.empty()) {
    os << "| rank | source | scope | bound | decimal | sharp | witness |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (const CertificateRow& c : doc.certificates) {
      os << "| " << c.rank << " | " << c.source << " | " << c.scope << " | "
         << c.value.symbolic << " | " << c.value.decimal << " | "
         << (c.sharp ? "yes" : "") << " | ";
      if (c.witness_p) os << "p=" << *c.witness_p << " m=" << *c.witness_m;
      os << " |\n";
    }
    os << "\nassumptions:\n";
    for (const CertificateRow& c : doc.certificates) {
      os << "- " << c.source << ":\n";
      for (const std::string& a : c.assumptions) os << "  - " << a << "\n";
    }
  }
  if (!doc.findings.empty()) {
    os << "| chain | k2 | r | l2 | p | lhs | rhs | verdict |\n";
    os << "|---|---|---|---|---|---|---|---|\n";
    for (const FindingRow& f : doc.findings) {
      os << "| " << f.chain << " | " << opt_str(f.k2) << " | " << opt_str(f.r) << " | "
         << opt_str(f.l2) << " | " << opt_str(f.p) << " | " << f.lhs.decimal << " | "
         << f.rhs.decimal << " | " << f.verdict << " |\n";
    }
    os << "\nsummary:";
    for (const auto& [k, v] : doc.summary) os << " " << k << "=" << v;
    os << "\n";
    bool noted = false;
    for (const FindingRow& f : doc.findings) {
      if (!f.note.empty()) {
        if (!noted) os << "\nnotes:\n";
        noted = true;
        os << "- " << f.chain << " at k2=" << opt_str(f.k2);
        if (f.r) os << " r=" << *f.r;
        os << ": " << f.note << "\n";
      }
    }
  }
  if (doc.wps) render_wps_md(os, *doc.wps);
  if (doc.example) {
    render_wps_md(os, doc.example->wps);
    os << "| eps(K_S) lower bound | " << doc.example->bound.symbolic << " = "
       << doc.example->bound.decimal << " |\n";
    os << "| sharp | " << (doc.example->sharp ? "yes" : "no") << " |\n";
    os << "| closed-form bound at K^2=1 | " << doc.example->theorem_value.symbolic
       << " = " << doc.example->theorem_value.decimal << " |\n";
    os << "| question threshold at K^2=1 | " << doc.example->challenge_value.symbolic
       << " = " << doc.example->challenge_value.decimal << " |\n";
  }
  return os.str();
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string render_csv(const ReportDocument& doc) {
  std::ostringstream os;
  if (doc.command == "audit") {
    os << "chain,k2,r,l2,lhs,rhs,verdict\n";
    for (const FindingRow& f : doc.findings) {
      os << f.chain << "," << opt_str(f.k2) << "," << opt_str(f.r) << ","
         << opt_str(f.l2) << "," << f.lhs.decimal << "," << f.rhs.decimal << ","
         << f.verdict << "\n";
    }
    return os.str();
  }
  if (doc.command == "bound") {
    if (doc.status != "ok") {
      os << "rule,message,encodes\n";
      for (const ViolationRow& v : doc.violations) {
        os << csv_escape(v.id) << "," << csv_escape(v.message) << ","
           << csv_escape(v.source) << "\n";
      }
      return os.str();
    }
    os << "rank,source,scope,value,decimal,sharp,witness_p,witness_m\n";
    for (const CertificateRow& c : doc.certificates) {
      os << c.rank << "," << c.source << "," << c.scope << ","
         << csv_escape(c.value.symbolic) << "," << c.value.decimal << ","
         << (c.sharp ? "true" : "false") << "," << opt_str(c.witness_p) << ","
         << opt_str(c.witness_m) << "\n";
    }
    return os.str();
  }
  // wps / example: key,value pairs
  os << "key,value\n";
  auto emit_wps = [&os](const WpsReport& w) {
    std::string ws = std::to_string(w.weights[0]);
    for (std::size_t i = 1; i < w.weights.size(); ++i) ws += " " + std::to_string(w.weights[i]);
    os << "weights," << csv_escape(ws) << "\n";
    os << "degree," << w.degree << "\n";
    os << "canonical_coefficient," << w.canonical_coefficient << "\n";
    os << "k2," << csv_escape(w.k2.symbolic) << "\n";
    os << "pg," << w.pg << "\n";
    os << "integrality_warning," << (w.integrality_warning ? "true" : "false") << "\n";
    os << "picard_rank_one," << (w.picard_rank_one ? "true" : "false") << "\n";
  };
  if (doc.wps) emit_wps(*doc.wps);
  if (doc.example) {
    emit_wps(doc.example->wps);
    os << "bound," << csv_escape(doc.example->bound.symbolic) << "\n";
    os << "bound_decimal," << doc.example->bound.decimal << "\n";
    os << "sharp," << (doc.example->sharp ? "true" : "false") << "\n";
  }
  return os.str();
}

}  // namespace seshadri
