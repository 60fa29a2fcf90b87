#include "seshadri/canonical.hpp"

#include <stdexcept>

namespace seshadri {

std::string to_string(CanonicalCase c) {
  switch (c) {
    case CanonicalCase::ReiderK2ge5: return "reider-k2-ge-5";
    case CanonicalCase::LemmaLowK2eq2: return "lemma-low-k2-2";
    case CanonicalCase::LemmaLowK2eq3or4: return "lemma-low-k2-3-4";
    case CanonicalCase::K2OnePgLow: return "k2-1-pg-le-1";
    case CanonicalCase::K2OnePgTwo: return "k2-1-pg-2";
  }
  return "?";
}

BoundCertificate reider_rule(long long k2) {
  if (k2 <= 4) {
    throw std::invalid_argument("the bicanonical base-point-free rule needs K^2 >= 5");
  }
  BoundCertificate cert;
  cert.value = make_rational(1, 2);
  cert.source = Source::ReiderRule;
  cert.assumptions = {
      "K_S ample with K^2 >= 5 makes |2K_S| base point free (Reider)",
      "|2K_S| base point free => eps(2K_S, x) >= 1 => eps(K_S, x) >= 1/2",
  };
  return cert;
}

std::vector<std::pair<long long, long long>> lemma_low_enumerate(long long k2_max,
                                                                 long long p_max) {
  if (k2_max < 1 || p_max < 1) throw std::invalid_argument("bounds must be >= 1");
  std::vector<std::pair<long long, long long>> out;
  for (long long k2 = 1; k2 <= k2_max; ++k2) {
    for (long long p = 1; p <= p_max; ++p) {
      if (p * p * k2 * k2 <= 2 + p * p * k2) out.emplace_back(k2, p);
    }
  }
  return out;
}

BoundCertificate k2_two_bound() {
  BoundCertificate cert;
  cert.value = make_rational(2, 3);
  cert.source = Source::LemmaLow;
  cert.sharp = true;
  cert.witness = CurveClass{1, 3};
  cert.assumptions = {
      "a point with eps(K_S,x) < 1 forces a canonical curve with a triple point",
      "the Seshadri quotient there is K_S.C/m = 2/3 exactly",
      "at the remaining points eps(K_S,x) >= 1",
  };
  return cert;
}

BoundCertificate k2_one_bound(long long pg) {
  if (pg < 0) throw std::invalid_argument("pg must be nonnegative");
  if (pg > 2) {
    throw std::invalid_argument("K^2 = 1 forces pg <= 2 by the Noether inequality");
  }
  BoundCertificate cert;
  cert.value = make_rational(1, 2);
  cert.source = Source::PencilK2One;
  if (pg == 2) {
    cert.sharp = true;
    cert.witness = CurveClass{1, 2};
    cert.assumptions = {
        "the canonical pencil consists of genus-2 curves through one transversal base point",
        "curves outside the pencil have Seshadri quotient >= 1",
        "not every pencil member is smooth, so some canonical curve has a double point",
        "at such a point eps(K_S,x) = K_S.D/2 = 1/2 exactly",
    };
  } else {
    cert.assumptions = {
        "Riemann-Roch gives at least a pencil of bicanonical divisors through any point",
        "2K_S.C >= mult_x C for every curve C, so eps(K_S,x) >= 1/2",
        "the bicanonical member itself has arithmetic genus 4, hence at most a triple point",
    };
  }
  return cert;
}

CanonicalCaseTrace canonical_seshadri_lower(const PolarizedSurface& s) {
  if (s.surface_class != SurfaceClass::GeneralType || s.r != 1) {
    throw std::invalid_argument("the canonical dispatch needs general type with K_S = L");
  }
  if (!validate(s).ok()) throw std::invalid_argument("invalid surface invariants");
  long long k2 = canonical_degree(s);
  CanonicalCaseTrace trace;
  if (k2 >= 5) {
    trace.case_id = CanonicalCase::ReiderK2ge5;
    trace.bound = reider_rule(k2).value;
    trace.narrative =
        "K^2 >= 5: |2K_S| is base point free, so eps(K_S,x) >= 1/2 at every point";
    return trace;
  }
  if (k2 == 2) {
    BoundCertificate cert = k2_two_bound();
    trace.case_id = CanonicalCase::LemmaLowK2eq2;
    trace.bound = cert.value;
    trace.sharp = true;
    trace.narrative =
        "K^2 = 2: points with eps < 1 have eps = 2/3 exactly; the minimum over all "
        "points is 2/3";
    return trace;
  }
  if (k2 == 3 || k2 == 4) {
    trace.case_id = CanonicalCase::LemmaLowK2eq3or4;
    trace.bound = ExactScalar(1);
    trace.narrative =
        "K^2 = 3 or 4: eps(K_S,x) < 1 would force K^2 in {1,2}, so eps(K_S,x) >= 1 "
        "at every point";
    return trace;
  }
  // k2 == 1 (r = 1, l2 = 1)
  long long pg = s.pg.value_or(-1);
  BoundCertificate cert = k2_one_bound(pg < 0 ? 0 : pg);
  trace.bound = cert.value;
  if (pg == 2) {
    trace.case_id = CanonicalCase::K2OnePgTwo;
    trace.sharp = true;
    trace.narrative =
        "K^2 = 1, pg = 2: the canonical pencil contains a singular genus-2 curve, so "
        "some point has eps(K_S,x) = 1/2 exactly";
  } else {
    trace.case_id = CanonicalCase::K2OnePgLow;
    trace.narrative = pg < 0
        ? "K^2 = 1, pg unspecified: eps(K_S,x) >= 1/2 for every admissible pg in "
          "{0,1,2}; the bound is attained only when pg = 2"
        : "K^2 = 1, pg <= 1: the bicanonical pencil gives eps(K_S,x) >= 1/2 at every "
          "point";
  }
  return trace;
}

ExactScalar epsilon_scaling(const ExactScalar& canonical_bound, long long r) {
  if (r < 1) throw std::invalid_argument("r must be a positive integer");
  return canonical_bound / ExactScalar(r);
}

}  // namespace seshadri
