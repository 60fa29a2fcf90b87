#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "seshadri/report.hpp"

namespace {

using namespace seshadri;

int emit(const ReportDocument& doc, const std::string& format) {
  if (format == "json") {
    std::cout << render_json(doc);
  } else if (format == "csv") {
    std::cout << render_csv(doc);
  } else {
    std::cout << render_markdown(doc);
  }
  return doc.status == "ok" ? 0 : 2;
}

// precedence: --p-max flag > SESHADRI_PMAX environment variable > 100
long long resolve_p_max(long long flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("SESHADRI_PMAX")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw std::invalid_argument("SESHADRI_PMAX must be a positive integer");
  }
  return 100;
}

WeightedHypersurface parse_weights(const std::string& text, long long degree) {
  WeightedHypersurface h;
  h.degree = degree;
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    std::size_t next = text.find(',', pos);
    std::string part = next == std::string::npos ? text.substr(pos) : text.substr(pos, next - pos);
    if (part.empty()) throw std::invalid_argument("weights must be w0,w1,w2,w3");
    char* end = nullptr;
    long long w = std::strtoll(part.c_str(), &end, 10);
    if (!end || *end != '\0' || w < 1) {
      throw std::invalid_argument("invalid weight '" + part + "'");
    }
    h.weights[static_cast<std::size_t>(i)] = w;
    if (i < 3) {
      if (next == std::string::npos) throw std::invalid_argument("weights must be w0,w1,w2,w3");
      pos = next + 1;
    } else if (next != std::string::npos) {
      throw std::invalid_argument("weights must be exactly four integers");
    }
  }
  return h;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lower-bound certificates for Seshadri constants on surfaces with Picard number 1"};
  app.require_subcommand(1);
  app.fallthrough();  // accept --format/--digits after the subcommand too

  std::string format = "md";
  int digits = 6;
  app.add_option("--format", format, "output format: md, json or csv")
      ->check(CLI::IsMember({"md", "json", "csv"}));
  app.add_option("--digits", digits, "decimal digits in renderings")->check(CLI::Range(1, 200));

  auto* bound = app.add_subcommand(
      "bound", "bound table for a surface given as class=<gt|p2|abelian|k3> l2=<int> r=<int> [pg=..] [q=..]");
  std::vector<std::string> surface_tokens;
  long long p_max_flag = 0;
  bound->add_option("spec", surface_tokens, "surface spec tokens")->required();
  bound->add_option("--p-max", p_max_flag, "oracle truncation degree (overrides SESHADRI_PMAX)");

  auto* audit = app.add_subcommand("audit", "exact audit of the inequality chains");
  AuditRanges ranges;
  audit->add_option("--k2-max", ranges.k2_max, "K^2 range for chain A")->check(CLI::PositiveNumber);
  audit->add_option("--r-max", ranges.r_max, "r range for chains B, C, D")->check(CLI::PositiveNumber);
  audit->add_option("--l2-max", ranges.l2_max, "L^2 range for chains C, D")->check(CLI::PositiveNumber);

  auto* wps = app.add_subcommand("wps", "invariants of a weighted hypersurface: wps w0,w1,w2,w3 d");
  std::string weights_arg;
  long long degree_arg = 0;
  wps->add_option("weights", weights_arg, "four comma-separated weights")->required();
  wps->add_option("degree", degree_arg, "weighted degree")->required();

  auto* example = app.add_subcommand("example", "the sharpness example: degree 10 in P(1,1,2,5)");
  (void)example;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  try {
    if (bound->parsed()) {
      PolarizedSurface s = parse_surface_spec(surface_tokens);
      return emit(build_bound_report(s, resolve_p_max(p_max_flag), digits), format);
    }
    if (audit->parsed()) {
      return emit(build_audit_report(ranges, digits), format);
    }
    if (wps->parsed()) {
      return emit(build_wps_report(parse_weights(weights_arg, degree_arg), digits), format);
    }
    return emit(build_example_report(digits), format);
  } catch (const PrecisionCutoff& e) {
    std::cerr << "arithmetic diagnostic: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
