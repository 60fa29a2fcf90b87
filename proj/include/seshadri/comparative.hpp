#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seshadri/canonical.hpp"
#include "seshadri/genus.hpp"

namespace seshadri {

/// floor(sqrt(L^2)): the general-point bound on rho = 1 surfaces.
long long steffens_general_point(const PolarizedSurface& s);

/// Smallest integer m strictly greater than (b+1)^2/(2a) - 1, exactly.
/// mL is globally generated (hence eps(mL,x) >= 1) from that m on.
long long matsusaka_threshold(long long a, long long b);

/// The literal corollary value 2L^2 / (1 + (r+4)^2 (L^2)^2 + 2(r+3)L^2).
ExactScalar fdb_corollary_literal(const PolarizedSurface& s);

/// The corollary re-derived from the stated theorem with a = L^2 and
/// b = (K_S + L).L = (r+1)L^2: eps(L,x) >= 1 / matsusaka_threshold(a, b).
ExactScalar fdb_corollary_rederived(const PolarizedSurface& s);

/// 1 / (2 + |K^2|^(1/4)): the threshold of the closing question.
ExactScalar challenge_threshold(long long k2);

/// 2 / (1 + sqrt(13 + sqrt(K^2))): the intermediate bound as printed.
ExactScalar intermediate_bound_literal(long long k2);

/// 2 / (1 + sqrt(13 + 4r)): what substituting L^2 = 1, p = 1 into the
/// per-degree bound actually yields (K^2 = r^2 there).
ExactScalar intermediate_bound_substituted(long long r);

// The audited inequality chains:
//   A: intermediate_bound_literal(k2)    >= theorem value at k2
//   B: intermediate_bound_substituted(r) >= theorem value at r^2*l2, l2 = 1
//   C: fdb_corollary_literal             <  theorem value (strictly)
//   D: per_p_bound_real(1)               <= per_p_bound_integer(1)
enum class Chain { A, B, C, D };

std::string to_string(Chain c);

// Verdicts: Holds / Fails record whether the chain's claim is satisfied;
// Equal is emitted only when the claim is strict and the comparison ties.
enum class Verdict { Holds, Fails, Equal };

std::string to_string(Verdict v);

struct GridPoint {
  std::optional<long long> k2, r, l2, p;
};

struct AuditFinding {
  Chain chain;
  GridPoint at;
  ExactScalar lhs, rhs;
  Verdict verdict;
  std::string note;
};

struct AuditRanges {
  long long k2_max = 100;
  long long r_max = 10;
  long long l2_max = 10;
};

/// Exact verdicts for every chain over the (parity-filtered) grid, ordered by
/// (chain, k2, r, l2).
std::vector<AuditFinding> audit_chain(const AuditRanges& ranges);

/// Every applicable certificate for the surface, sorted descending by value
/// with exact tie detection; general-point and context rows keep their scope
/// markers.
std::vector<BoundCertificate> bound_comparison(const PolarizedSurface& s, long long p_max);

}  // namespace seshadri
