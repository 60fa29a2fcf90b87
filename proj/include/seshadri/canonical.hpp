#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seshadri/genus.hpp"

namespace seshadri {

// Dispatch cases for eps(K_S, x) lower bounds on general-type surfaces with
// rho = 1 and a primitive canonical bundle.
enum class CanonicalCase {
  ReiderK2ge5,
  LemmaLowK2eq2,
  LemmaLowK2eq3or4,
  K2OnePgLow,
  K2OnePgTwo,
};

std::string to_string(CanonicalCase c);

struct CanonicalCaseTrace {
  CanonicalCase case_id;
  ExactScalar bound;
  bool sharp = false;
  std::string narrative;
};

/// K^2 >= 5: |2K_S| is base point free, so eps(K_S,x) >= 1/2 at every point.
/// Throws std::invalid_argument for K^2 <= 4 where the rule does not apply.
BoundCertificate reider_rule(long long k2);

/// All pairs (k2, p) with 1 <= k2 <= k2_max, 1 <= p <= p_max satisfying
/// p^2 k2^2 <= 2 + p^2 k2 — the numerical condition a curve in |pK_S| with a
/// genus-killing multiple point must satisfy.
std::vector<std::pair<long long, long long>> lemma_low_enumerate(long long k2_max,
                                                                 long long p_max);

/// K^2 = 2: a point with eps < 1 has eps = 2/3 exactly (canonical curve with
/// a triple point); the bound over all points is 2/3 and it is attained.
BoundCertificate k2_two_bound();

/// K^2 = 1, q = 0, pg in {0,1,2}: eps(K_S,x) >= 1/2; sharp when pg = 2.
/// Throws std::invalid_argument for pg > 2 (Noether violation).
BoundCertificate k2_one_bound(long long pg);

/// Full dispatch for eps(K_S, x) with r = 1; requires a valid surface.
CanonicalCaseTrace canonical_seshadri_lower(const PolarizedSurface& s);

/// eps(L,x) = eps(K_S,x)/r when K_S = rL; throws for r < 1.
ExactScalar epsilon_scaling(const ExactScalar& canonical_bound, long long r);

}  // namespace seshadri
