#pragma once

#include <array>
#include <string>
#include <vector>

#include "seshadri/exact_scalar.hpp"

namespace seshadri {

// A hypersurface of weighted degree d in P(w0, w1, w2, w3).
struct WeightedHypersurface {
  std::array<long long, 4> weights{1, 1, 1, 1};
  long long degree = 1;
};

// Formal numerical invariants from adjunction; quasi-smoothness and
// well-formedness are not checked, a non-integral K^2 only raises the flag.
struct HypersurfaceInvariants {
  long long canonical_coefficient = 0;  // d - sum of weights
  Rational k2;                          // (d - sum w)^2 * d / prod w
  Integer pg;                           // monomial count in the canonical degree
  bool integrality_warning = false;
};

/// Number of monomials x0^a x1^b x2^c x3^e of weighted degree `degree`,
/// by dynamic programming over the weights.
Integer count_monomials(const std::array<long long, 4>& weights, long long degree);

HypersurfaceInvariants hypersurface_invariants(const WeightedHypersurface& h);

struct SteenbrinkResult {
  bool picard_rank_one = false;
  std::vector<std::string> reasons;  // each failed condition
};

/// For weights (1,1,a,b): a general hypersurface of degree d >= 2+a+b with
/// gcd(a,b) = 1 has Picard number 1. Throws if the shape is not (1,1,a,b).
SteenbrinkResult steenbrink_check(const WeightedHypersurface& h);

// The degree-10 hypersurface in P(1,1,2,5): K^2 = 1, pg = 2, Picard number 1,
// and the canonical Seshadri bound 1/2 is attained on it.
struct SharpnessExample {
  WeightedHypersurface surface;
  long long k2 = 0;
  Integer pg;
  bool picard_rank_one = false;
  ExactScalar bound;
  bool sharp = false;
  ExactScalar theorem_value;    // closed-form bound at K^2 = 1
  ExactScalar challenge_value;  // question threshold at K^2 = 1
};

/// Builds the example and cross-checks every claimed invariant; throws
/// std::logic_error if any sub-assertion fails.
SharpnessExample sharpness_example();

}  // namespace seshadri
