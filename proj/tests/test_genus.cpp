#include <doctest.h>

#include "seshadri/genus.hpp"

using namespace seshadri;

namespace {

// independent oracle: smallest quotient over an explicit double loop on all
// admissible (p, m)
struct BruteResult {
  Rational value;
  CurveClass at;
};

BruteResult brute_force_infimum(const PolarizedSurface& s, long long p_max) {
  BruteResult best{Rational(0), {0, 0}};
  bool have = false;
  for (long long p = 1; p <= p_max; ++p) {
    for (long long m = 1;; ++m) {
      if (!curve_class_admissible({p, m}, s)) break;
      Rational q = Rational(p * s.l2) / Rational(m);
      if (!have || q < best.value) {
        best = {q, {p, m}};
        have = true;
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("arithmetic genus matches the adjunction formula") {
  CHECK(arithmetic_genus(2, PolarizedSurface::general_type(1, 1)) == 4);
  CHECK(arithmetic_genus(1, PolarizedSurface::general_type(1, 1)) == 2);
  CHECK(arithmetic_genus(1, PolarizedSurface::general_type(2, 1)) == 3);
  CHECK(arithmetic_genus(1, PolarizedSurface::projective_plane()) == 0);
  // parity failure signals an invalid surface
  CHECK_THROWS_AS(arithmetic_genus(1, PolarizedSurface::general_type(1, 2)),
                  std::invalid_argument);
}

TEST_CASE("max multiplicity saturates the genus budget") {
  CHECK(max_multiplicity(1, PolarizedSurface::general_type(2, 1)) == 3);
  CHECK(max_multiplicity(1, PolarizedSurface::general_type(1, 1)) == 2);
  CHECK(max_multiplicity(2, PolarizedSurface::general_type(1, 1)) == 3);
  CHECK(max_multiplicity(1, PolarizedSurface::projective_plane()) == 1);

  // admissibility is exactly the genus drop rule: C(m,2) <= p_a
  for (long long r : {0LL, 1LL, 3LL}) {
    for (long long l2 = 1; l2 <= 6; ++l2) {
      if ((l2 * (1 + r)) % 2 != 0) continue;
      PolarizedSurface s{r == 0 ? SurfaceClass::K3 : SurfaceClass::GeneralType, l2, r, {}, {}};
      for (long long p = 1; p <= 10; ++p) {
        long long genus = arithmetic_genus(p, s);
        for (long long m = 1; m <= 20; ++m) {
          bool by_budget = curve_class_admissible({p, m}, s);
          bool by_genus = m * (m - 1) / 2 <= genus;
          CHECK(by_budget == by_genus);
        }
        CHECK(curve_class_admissible({p, max_multiplicity(p, s)}, s));
        CHECK(!curve_class_admissible({p, max_multiplicity(p, s) + 1}, s));
      }
    }
  }
}

TEST_CASE("per-degree bounds") {
  CHECK(per_p_bound_integer(1, PolarizedSurface::general_type(2, 1)) == make_rational(2, 3));
  CHECK(per_p_bound_integer(1, PolarizedSurface::general_type(1, 1)) == make_rational(1, 2));
  CHECK(per_p_bound_integer(1, PolarizedSurface::general_type(1, 3)) == make_rational(1, 3));

  ExactScalar one(1);
  CHECK(per_p_bound_real(1, PolarizedSurface::general_type(1, 1)) ==
        ExactScalar(2) / (one + sqrt(ExactScalar(17))));
  CHECK(per_p_bound_real(1, PolarizedSurface::general_type(2, 1)) == make_rational(2, 3));
  CHECK(per_p_bound_real(1, PolarizedSurface::general_type(1, 3)) == make_rational(1, 3));

  // dominance: the integer cap can only tighten
  for (long long p = 1; p <= 30; ++p) {
    PolarizedSurface s = PolarizedSurface::general_type(3, 2);
    CHECK(compare(per_p_bound_integer(p, s), per_p_bound_real(p, s)) != Ordering::Less);
  }
}

TEST_CASE("oracle infimum agrees with brute force") {
  struct Case {
    PolarizedSurface s;
    Rational expect;
    CurveClass witness;
  };
  const Case cases[] = {
      {PolarizedSurface::general_type(1, 1), Rational(1) / Rational(2), {1, 2}},
      {PolarizedSurface::general_type(2, 1), Rational(2) / Rational(3), {1, 3}},
      {PolarizedSurface::projective_plane(), Rational(1), {1, 1}},
  };
  for (const Case& c : cases) {
    BruteResult brute = brute_force_infimum(c.s, 50);
    CHECK(brute.value == c.expect);
    CHECK(brute.at == c.witness);
    BoundCertificate cert = oracle_infimum(c.s, 50);
    CHECK(*cert.value.as_rational() == c.expect);
    CHECK(cert.witness == c.witness);
  }
}

TEST_CASE("oracle is stable under the truncation degree for K^2 = 1") {
  PolarizedSurface s = PolarizedSurface::general_type(1, 1);
  for (long long p_max = 1; p_max <= 1000; ++p_max) {
    BoundCertificate cert = oracle_infimum(s, p_max);
    CHECK(*cert.value.as_rational() == Rational(1) / Rational(2));
    CHECK(cert.witness == CurveClass{1, 2});
  }
}

TEST_CASE("theorem bound dispatch") {
  CHECK(theorem_bound(PolarizedSurface::projective_plane()).value == ExactScalar(1));
  CHECK(theorem_bound(PolarizedSurface::abelian(2)).value == ExactScalar(1));
  CHECK(theorem_bound(PolarizedSurface::k3(4)).value == ExactScalar(1));
  CHECK(theorem_bound(PolarizedSurface::general_type(1, 1)).value == make_rational(1, 2));
  CHECK(theorem_bound(PolarizedSurface::general_type(1, 4)).value == make_rational(1, 3));
  CHECK(general_type_theorem_value(16) == make_rational(1, 3));
  CHECK(theorem_bound(PolarizedSurface::general_type(1, 1)).source == Source::TheoremG);
  CHECK(theorem_bound(PolarizedSurface::abelian(2)).source == Source::TheoremS);
}

TEST_CASE("per-degree real bound grows with p") {
  for (long long r : {1LL, 3LL}) {
    MonotonicityResult res = monotonicity_check(PolarizedSurface::general_type(1, r), 1, 100);
    CHECK(res.nondecreasing);
  }
  MonotonicityResult res = monotonicity_check(PolarizedSurface::general_type(4, 1), 1, 100);
  CHECK(res.nondecreasing);
  // the plane is the known exception: the bound dips after p = 2
  MonotonicityResult plane = monotonicity_check(PolarizedSurface::projective_plane(), 1, 10);
  CHECK(!plane.nondecreasing);
  CHECK(plane.first_violation == 2);
}
