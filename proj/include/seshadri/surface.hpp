#pragma once

#include <optional>
#include <string>
#include <vector>

namespace seshadri {

// The Enriques-Kodaira classes a smooth projective surface with Picard
// number 1 can belong to. Kodaira dimension 1 is impossible there, so the
// enum has no properly-elliptic member.
enum class SurfaceClass { ProjectivePlane, Abelian, K3, GeneralType };

std::string to_string(SurfaceClass c);

// Numerical model of a polarized surface: L is the ample generator,
// l2 = L^2 > 0 and K_S = r*L. pg/q are optional; rules that need them fire
// only when they are supplied.
struct PolarizedSurface {
  SurfaceClass surface_class = SurfaceClass::GeneralType;
  long long l2 = 1;
  long long r = 1;
  std::optional<long long> pg;
  std::optional<long long> q;

  static PolarizedSurface projective_plane();
  static PolarizedSurface abelian(long long l2);
  static PolarizedSurface k3(long long l2);
  static PolarizedSurface general_type(long long l2, long long r,
                                       std::optional<long long> pg = std::nullopt,
                                       std::optional<long long> q = std::nullopt);
};

/// K_S^2 = r^2 * L^2.
long long canonical_degree(const PolarizedSurface& s);

struct Violation {
  std::string id;       // stable rule identifier
  std::string message;  // human-readable description
  std::string source;   // the classical fact the rule encodes
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the numerical consistency rules; violations are data, not errors.
ValidationReport validate(const PolarizedSurface& s);

/// For general type with K^2 <= 4 the canonical bundle must be primitive,
/// so r = 1 is forced. Throws std::invalid_argument outside that range.
long long primitive_canonical_rule(long long k2);

/// Parses the CLI surface format:
///   class=<gt|p2|abelian|k3> l2=<int> r=<int> [pg=<int>] [q=<int>]
/// Throws std::invalid_argument on malformed input.
PolarizedSurface parse_surface_spec(const std::vector<std::string>& tokens);

}  // namespace seshadri
