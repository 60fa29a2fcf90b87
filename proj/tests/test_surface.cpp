#include <doctest.h>

#include <stdexcept>

#include "seshadri/surface.hpp"

using namespace seshadri;

namespace {

bool has_violation(const ValidationReport& rep, const std::string& id) {
  for (const Violation& v : rep.violations) {
    if (v.id == id) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("canonical_degree squares the canonical multiple") {
  CHECK(canonical_degree(PolarizedSurface::general_type(2, 1)) == 2);
  CHECK(canonical_degree(PolarizedSurface::projective_plane()) == 9);
  CHECK(canonical_degree(PolarizedSurface::general_type(1, 3)) == 9);
  // invariant under the sign of r
  for (long long r = -4; r <= 4; ++r) {
    PolarizedSurface plus{SurfaceClass::GeneralType, 3, r, {}, {}};
    PolarizedSurface minus{SurfaceClass::GeneralType, 3, -r, {}, {}};
    CHECK(canonical_degree(plus) == canonical_degree(minus));
  }
}

TEST_CASE("validate flags the documented failures") {
  CHECK(has_violation(validate(PolarizedSurface::general_type(1, 2)), "parity"));
  CHECK(has_violation(validate(PolarizedSurface::general_type(1, 1, 3)), "noether"));
  CHECK(has_violation(validate(PolarizedSurface::general_type(1, 1, 2, 1)), "bombieri-q"));
  CHECK(has_violation(validate(PolarizedSurface::general_type(1, 0)), "class-consistency"));
  PolarizedSurface bad_abelian{SurfaceClass::Abelian, 2, 1, {}, {}};
  CHECK(has_violation(validate(bad_abelian), "class-consistency"));
  CHECK(has_violation(validate(PolarizedSurface::k3(3)), "parity"));
}

TEST_CASE("validate passes the four exemplars") {
  CHECK(validate(PolarizedSurface::projective_plane()).ok());
  CHECK(validate(PolarizedSurface::k3(4)).ok());
  CHECK(validate(PolarizedSurface::general_type(1, 1, 2, 0)).ok());
  CHECK(validate(PolarizedSurface::general_type(2, 1)).ok());
}

TEST_CASE("primitive canonical rule") {
  CHECK(primitive_canonical_rule(1) == 1);
  CHECK(primitive_canonical_rule(3) == 1);
  CHECK(primitive_canonical_rule(4) == 1);
  CHECK_THROWS_AS(primitive_canonical_rule(5), std::invalid_argument);
  CHECK_THROWS_AS(primitive_canonical_rule(0), std::invalid_argument);
}

TEST_CASE("surface spec parsing") {
  PolarizedSurface s = parse_surface_spec({"class=gt", "l2=1", "r=1", "pg=2"});
  CHECK(s.surface_class == SurfaceClass::GeneralType);
  CHECK(s.l2 == 1);
  CHECK(s.r == 1);
  CHECK(s.pg == 2);
  CHECK(!s.q.has_value());

  PolarizedSurface p2 = parse_surface_spec({"class=p2"});
  CHECK(p2.l2 == 1);
  CHECK(p2.r == -3);

  PolarizedSurface k3 = parse_surface_spec({"class=k3", "l2=4"});
  CHECK(k3.r == 0);

  CHECK_THROWS_AS(parse_surface_spec({"class=gt", "l2=1"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_surface_spec({"l2=1", "r=1"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_surface_spec({"class=weird"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_surface_spec({"class=gt", "l2=zero", "r=1"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_surface_spec({"class=gt", "l2=-2", "r=1"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_surface_spec({"class=gt", "l2=1", "r=1", "bogus=3"}),
                  std::invalid_argument);
}
