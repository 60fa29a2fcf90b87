#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seshadri/exact_scalar.hpp"
#include "seshadri/surface.hpp"

namespace seshadri {

// A numerical curve candidate: C in |pL| with a point of multiplicity m.
struct CurveClass {
  long long p = 1;
  long long m = 1;
  bool operator==(const CurveClass&) const = default;
};

enum class Source {
  TheoremS,
  TheoremG,
  GenusPerP,
  GenusOracle,
  ReiderRule,
  LemmaLow,
  PencilK2One,
  Steffens,
  FdBLiteral,
  FdBRederived,
  NaiveScaling,
  ChallengeThreshold,
};

std::string to_string(Source s);

// Where a bound applies: at every point, only at a general point, or listed
// for context without being a certified bound.
enum class Scope { AllPoints, GeneralPoint, Context };

std::string to_string(Scope s);

// A lower bound for eps(L,x) together with its provenance.
struct BoundCertificate {
  ExactScalar value;
  Source source = Source::GenusOracle;
  Scope scope = Scope::AllPoints;
  bool sharp = false;
  std::vector<std::string> assumptions;
  std::optional<CurveClass> witness;  // present for curve-class derived values
};

/// p_a(C) = 1 + p(p+r)L^2/2 for C in |pL|; throws on parity failure
/// (which signals an invalid surface).
long long arithmetic_genus(long long p, const PolarizedSurface& s);

/// Largest m with m(m-1) <= 2 + p(p+r)L^2, i.e. the multiplicity a point of
/// an irreducible curve in |pL| can have.
long long max_multiplicity(long long p, const PolarizedSurface& s);

/// Whether (p, m) is numerically admissible on s.
bool curve_class_admissible(const CurveClass& c, const PolarizedSurface& s);

/// p*L^2 / max_multiplicity(p): the sharpest degree-p bound with the integer cap.
ExactScalar per_p_bound_integer(long long p, const PolarizedSurface& s);

/// 2pL^2 / (1 + sqrt(9 + 4p(p+r)L^2)): the real-valued degree-p bound.
ExactScalar per_p_bound_real(long long p, const PolarizedSurface& s);

// Minimum of p*L^2/m over all admissible classes with p <= p_max, with the
// minimizing witness. This certifies a lower bound for eps(L,x): no numerical
// curve class can give a smaller Seshadri quotient. Whether curves attaining
// it exist is not knowable from the invariants alone.
BoundCertificate oracle_infimum(const PolarizedSurface& s, long long p_max);

/// The closed-form bound: 1 away from general type, 1/(1 + (K^2)^(1/4)) for
/// general type.
BoundCertificate theorem_bound(const PolarizedSurface& s);

/// The general-type closed form as a function of K^2 alone.
ExactScalar general_type_theorem_value(long long k2);

struct MonotonicityResult {
  bool nondecreasing = true;
  std::optional<long long> first_violation;  // smallest p with f(p) > f(p+1)
};

/// Exact check that per_p_bound_real is nondecreasing on [p_from, p_to].
MonotonicityResult monotonicity_check(const PolarizedSurface& s, long long p_from,
                                      long long p_to);

}  // namespace seshadri
