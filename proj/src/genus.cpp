#include "seshadri/genus.hpp"

#include <cmath>
#include <stdexcept>

namespace seshadri {

std::string to_string(Source s) {
  switch (s) {
    case Source::TheoremS: return "theorem-not-general-type";
    case Source::TheoremG: return "theorem-general-type";
    case Source::GenusPerP: return "genus-per-degree";
    case Source::GenusOracle: return "genus-oracle";
    case Source::ReiderRule: return "reider-bicanonical";
    case Source::LemmaLow: return "lemma-low-k2";
    case Source::PencilK2One: return "pencil-k2-one";
    case Source::Steffens: return "steffens-general-point";
    case Source::FdBLiteral: return "fdb-corollary-literal";
    case Source::FdBRederived: return "fdb-corollary-rederived";
    case Source::NaiveScaling: return "canonical-scaling";
    case Source::ChallengeThreshold: return "challenge-threshold";
  }
  return "?";
}

std::string to_string(Scope s) {
  switch (s) {
    case Scope::AllPoints: return "all-points";
    case Scope::GeneralPoint: return "general-point";
    case Scope::Context: return "context";
  }
  return "?";
}

namespace {

long long multiplicity_budget(long long p, const PolarizedSurface& s) {
  return 2 + p * (p + s.r) * s.l2;
}

}  // namespace

long long arithmetic_genus(long long p, const PolarizedSurface& s) {
  if (p < 1) throw std::invalid_argument("p must be positive");
  long long twice = p * (p + s.r) * s.l2;
  if (twice % 2 != 0) {
    throw std::invalid_argument("p(p+r)L^2 is odd; the surface violates the parity rule");
  }
  long long genus = 1 + twice / 2;
  if (genus < 0) throw std::invalid_argument("negative arithmetic genus; invalid surface");
  return genus;
}

long long max_multiplicity(long long p, const PolarizedSurface& s) {
  if (p < 1) throw std::invalid_argument("p must be positive");
  long long budget = multiplicity_budget(p, s);
  if (budget < 0) throw std::invalid_argument("no admissible multiplicity; invalid surface");
  // largest m with m(m-1) <= budget, i.e. floor((1 + sqrt(9+4p(p+r)L^2))/2)
  long long m = static_cast<long long>((1.0 + std::sqrt(1.0 + 4.0 * static_cast<double>(budget))) / 2.0);
  while (m * (m - 1) > budget) --m;
  while ((m + 1) * m <= budget) ++m;
  return m < 1 ? 1 : m;
}

bool curve_class_admissible(const CurveClass& c, const PolarizedSurface& s) {
  if (c.p < 1 || c.m < 1) return false;
  return c.m * (c.m - 1) <= multiplicity_budget(c.p, s);
}

ExactScalar per_p_bound_integer(long long p, const PolarizedSurface& s) {
  return make_rational(p * s.l2, max_multiplicity(p, s));
}

ExactScalar per_p_bound_real(long long p, const PolarizedSurface& s) {
  ExactScalar one(1);
  ExactScalar num(2 * p * s.l2);
  ExactScalar rad(9 + 4 * p * (p + s.r) * s.l2);
  return num / (one + sqrt(rad));
}

BoundCertificate oracle_infimum(const PolarizedSurface& s, long long p_max) {
  if (p_max < 1) throw std::invalid_argument("p_max must be positive");
  Rational best;
  CurveClass best_class;
  bool have = false;
  for (long long p = 1; p <= p_max; ++p) {
    long long m = max_multiplicity(p, s);
    Rational quotient = Rational(p * s.l2) / Rational(m);
    if (!have || quotient < best) {
      best = quotient;
      best_class = {p, m};
      have = true;
    } else if (s.r >= 0) {
      // For r >= 0 the real-valued cap bound is nondecreasing in p
      // (monotonicity_check verifies this exactly), and the integer bound
      // dominates it, so once the real bound at degree p is above the current
      // best no later degree can dip below it. For r < 0 (the plane) the full
      // range is scanned.
      ExactScalar floor_now = per_p_bound_real(p, s);
      if (compare(floor_now, ExactScalar(best)) == Ordering::Greater) break;
    }
  }
  BoundCertificate cert;
  cert.value = ExactScalar(best);
  cert.source = Source::GenusOracle;
  cert.witness = best_class;
  cert.assumptions = {
      "minimum of p*L^2/m over numerically admissible classes (p <= " +
          std::to_string(p_max) + ")",
      "certifies a lower bound for eps(L,x); existence of attaining curves is not checked",
  };
  return cert;
}

ExactScalar general_type_theorem_value(long long k2) {
  if (k2 < 1) throw std::invalid_argument("K^2 must be positive for general type");
  ExactScalar one(1);
  return one / (one + fourth_root(ExactScalar(k2)));
}

BoundCertificate theorem_bound(const PolarizedSurface& s) {
  BoundCertificate cert;
  if (s.surface_class == SurfaceClass::GeneralType) {
    cert.value = general_type_theorem_value(canonical_degree(s));
    cert.source = Source::TheoremG;
    cert.assumptions = {"rho(S) = 1, S of general type; bound 1/(1 + (K^2)^(1/4))"};
    return cert;
  }
  cert.value = ExactScalar(1);
  cert.source = Source::TheoremS;
  switch (s.surface_class) {
    case SurfaceClass::ProjectivePlane:
      cert.assumptions = {"eps(O(1), x) = 1 at every point of the plane"};
      cert.sharp = true;
      break;
    case SurfaceClass::Abelian:
      cert.assumptions = {
          "homogeneity: eps(L,x) does not depend on x",
          "eps >= 1 away from at most countably many points (Ein-Lazarsfeld), hence everywhere",
      };
      break;
    case SurfaceClass::K3:
      cert.assumptions = {
          "a K3 with Picard number 1 has no (-2)-curves, so |L| defines a finite morphism"};
      break;
    default:
      break;
  }
  return cert;
}

MonotonicityResult monotonicity_check(const PolarizedSurface& s, long long p_from,
                                      long long p_to) {
  if (p_from < 1 || p_to < p_from) throw std::invalid_argument("empty degree range");
  MonotonicityResult res;
  ExactScalar prev = per_p_bound_real(p_from, s);
  for (long long p = p_from + 1; p <= p_to; ++p) {
    ExactScalar cur = per_p_bound_real(p, s);
    if (compare(prev, cur) == Ordering::Greater) {
      res.nondecreasing = false;
      res.first_violation = p - 1;
      return res;
    }
    prev = cur;
  }
  return res;
}

}  // namespace seshadri
