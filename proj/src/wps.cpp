#include "seshadri/wps.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "seshadri/canonical.hpp"
#include "seshadri/comparative.hpp"
#include "seshadri/genus.hpp"

namespace seshadri {

Integer count_monomials(const std::array<long long, 4>& weights, long long degree) {
  for (long long w : weights) {
    if (w < 1) throw std::invalid_argument("weights must be positive");
  }
  if (degree < 0) return 0;
  std::vector<Integer> ways(static_cast<std::size_t>(degree) + 1, Integer(0));
  ways[0] = 1;
  for (long long w : weights) {
    for (long long d = w; d <= degree; ++d) {
      ways[static_cast<std::size_t>(d)] += ways[static_cast<std::size_t>(d - w)];
    }
  }
  return ways[static_cast<std::size_t>(degree)];
}

HypersurfaceInvariants hypersurface_invariants(const WeightedHypersurface& h) {
  if (h.degree < 1) throw std::invalid_argument("degree must be positive");
  long long wsum = 0;
  long long wprod = 1;
  for (long long w : h.weights) {
    if (w < 1) throw std::invalid_argument("weights must be positive");
    wsum += w;
    wprod *= w;
  }
  HypersurfaceInvariants inv;
  inv.canonical_coefficient = h.degree - wsum;
  // adjunction: K_S = O(d - sum w)|_S, so K^2 = (d - sum w)^2 * d / prod w
  Rational c(inv.canonical_coefficient);
  inv.k2 = c * c * Rational(h.degree) / Rational(wprod);
  inv.integrality_warning = denominator(inv.k2) != 1;
  inv.pg = inv.canonical_coefficient >= 0
               ? count_monomials(h.weights, inv.canonical_coefficient)
               : Integer(0);
  return inv;
}

SteenbrinkResult steenbrink_check(const WeightedHypersurface& h) {
  if (h.weights[0] != 1 || h.weights[1] != 1) {
    throw std::invalid_argument("the criterion needs weights of shape (1,1,a,b)");
  }
  long long a = h.weights[2], b = h.weights[3];
  SteenbrinkResult res;
  if (std::gcd(a, b) != 1) {
    res.reasons.push_back("gcd(" + std::to_string(a) + "," + std::to_string(b) +
                          ") = " + std::to_string(std::gcd(a, b)) + " != 1");
  }
  if (h.degree < 2 + a + b) {
    res.reasons.push_back("degree " + std::to_string(h.degree) + " < 2+a+b = " +
                          std::to_string(2 + a + b));
  }
  res.picard_rank_one = res.reasons.empty();
  return res;
}

SharpnessExample sharpness_example() {
  SharpnessExample ex;
  ex.surface = WeightedHypersurface{{1, 1, 2, 5}, 10};
  HypersurfaceInvariants inv = hypersurface_invariants(ex.surface);
  if (inv.integrality_warning || inv.k2 != 1) {
    throw std::logic_error("expected K^2 = 1 for degree 10 in P(1,1,2,5)");
  }
  if (inv.pg != 2) throw std::logic_error("expected pg = 2");
  ex.k2 = 1;
  ex.pg = inv.pg;
  ex.picard_rank_one = steenbrink_check(ex.surface).picard_rank_one;
  if (!ex.picard_rank_one) throw std::logic_error("expected Picard number 1");

  BoundCertificate cert = k2_one_bound(2);
  ex.bound = cert.value;
  ex.sharp = cert.sharp;
  ex.theorem_value = general_type_theorem_value(1);
  if (compare(ex.bound, ex.theorem_value) != Ordering::Equal) {
    throw std::logic_error("the attained value must equal the closed-form bound at K^2 = 1");
  }
  if (!ex.sharp) throw std::logic_error("the pg = 2 case must be flagged sharp");
  ex.challenge_value = challenge_threshold(1);
  if (compare(ex.challenge_value, ex.bound) != Ordering::Less) {
    throw std::logic_error("the question threshold must stay below the attained bound");
  }
  return ex;
}

}  // namespace seshadri
