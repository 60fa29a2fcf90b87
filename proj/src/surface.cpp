#include "seshadri/surface.hpp"

#include <charconv>
#include <stdexcept>

namespace seshadri {

std::string to_string(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::ProjectivePlane: return "p2";
    case SurfaceClass::Abelian: return "abelian";
    case SurfaceClass::K3: return "k3";
    case SurfaceClass::GeneralType: return "gt";
  }
  return "?";
}

PolarizedSurface PolarizedSurface::projective_plane() {
  return {SurfaceClass::ProjectivePlane, 1, -3, std::nullopt, std::nullopt};
}

PolarizedSurface PolarizedSurface::abelian(long long l2) {
  return {SurfaceClass::Abelian, l2, 0, std::nullopt, std::nullopt};
}

PolarizedSurface PolarizedSurface::k3(long long l2) {
  return {SurfaceClass::K3, l2, 0, std::nullopt, std::nullopt};
}

PolarizedSurface PolarizedSurface::general_type(long long l2, long long r,
                                                std::optional<long long> pg,
                                                std::optional<long long> q) {
  return {SurfaceClass::GeneralType, l2, r, pg, q};
}

long long canonical_degree(const PolarizedSurface& s) { return s.r * s.r * s.l2; }

ValidationReport validate(const PolarizedSurface& s) {
  ValidationReport rep;
  auto add = [&rep](std::string id, std::string message, std::string source) {
    rep.violations.push_back({std::move(id), std::move(message), std::move(source)});
  };

  if (s.l2 < 1) {
    add("positive-degree", "L^2 = " + std::to_string(s.l2) + " must be positive for an ample generator",
        "ampleness");
  }
  switch (s.surface_class) {
    case SurfaceClass::ProjectivePlane:
      if (s.l2 != 1 || s.r != -3) {
        add("class-consistency", "the projective plane has L = O(1), so l2 = 1 and r = -3",
            "K_{P^2} = O(-3)");
      }
      break;
    case SurfaceClass::Abelian:
    case SurfaceClass::K3:
      if (s.r != 0) {
        add("class-consistency", "Kodaira dimension 0 with Picard number 1 forces K_S = 0, so r = 0",
            "triviality of K_S");
      }
      break;
    case SurfaceClass::GeneralType:
      if (s.r < 1) {
        add("class-consistency", "general type with Picard number 1 makes K_S ample, so r >= 1",
            "ampleness of K_S");
      }
      break;
  }
  // Chi(L) must be an integer, which by Riemann-Roch forces L.(L+K) = (1+r)*L^2
  // to be even. The source text never states this parity rule explicitly; it is
  // inferred from the remark that K_S = 2L with L^2 = 1 contradicts Riemann-Roch.
  if ((s.l2 * (1 + s.r)) % 2 != 0) {
    add("parity", "l2*(1+r) = " + std::to_string(s.l2 * (1 + s.r)) +
            " is odd, contradicting Riemann-Roch integrality of chi(L)",
        "Riemann-Roch");
  }
  if (s.surface_class == SurfaceClass::GeneralType && s.pg) {
    // pg <= K^2/2 + 2 for minimal surfaces of general type
    long long k2 = canonical_degree(s);
    if (2 * *s.pg > k2 + 4) {
      add("noether", "pg = " + std::to_string(*s.pg) + " exceeds K^2/2 + 2 = " +
              std::to_string(k2) + "/2 + 2",
          "Noether inequality");
    }
  }
  if (s.surface_class == SurfaceClass::GeneralType && s.q &&
      canonical_degree(s) == 1 && *s.q != 0) {
    add("bombieri-q", "K^2 = 1 forces q = 0 on a minimal surface of general type",
        "Bombieri");
  }
  return rep;
}

long long primitive_canonical_rule(long long k2) {
  if (k2 < 1 || k2 > 4) {
    throw std::invalid_argument("the primitivity rule is only claimed for 1 <= K^2 <= 4");
  }
  // K_S = 2L would force L^2 = 1 and K^2 = 4, which the parity rule excludes,
  // so the canonical bundle is primitive and r = 1.
  return 1;
}

namespace {

long long parse_int(const std::string& text, const std::string& key) {
  long long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("invalid integer for " + key + ": '" + text + "'");
  }
  return value;
}

}  // namespace

PolarizedSurface parse_surface_spec(const std::vector<std::string>& tokens) {
  std::optional<SurfaceClass> cls;
  std::optional<long long> l2, r, pg, q;
  for (const std::string& tok : tokens) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("expected key=value, got '" + tok + "'");
    }
    std::string key = tok.substr(0, eq);
    std::string val = tok.substr(eq + 1);
    if (key == "class") {
      if (val == "gt") cls = SurfaceClass::GeneralType;
      else if (val == "p2") cls = SurfaceClass::ProjectivePlane;
      else if (val == "abelian") cls = SurfaceClass::Abelian;
      else if (val == "k3") cls = SurfaceClass::K3;
      else throw std::invalid_argument("unknown surface class '" + val + "'");
    } else if (key == "l2") {
      l2 = parse_int(val, key);
    } else if (key == "r") {
      r = parse_int(val, key);
    } else if (key == "pg") {
      pg = parse_int(val, key);
      if (*pg < 0) throw std::invalid_argument("pg must be nonnegative");
    } else if (key == "q") {
      q = parse_int(val, key);
      if (*q < 0) throw std::invalid_argument("q must be nonnegative");
    } else {
      throw std::invalid_argument("unknown key '" + key + "'");
    }
  }
  if (!cls) throw std::invalid_argument("missing class=<gt|p2|abelian|k3>");

  PolarizedSurface s;
  s.surface_class = *cls;
  s.pg = pg;
  s.q = q;
  switch (*cls) {
    case SurfaceClass::ProjectivePlane:
      s.l2 = l2.value_or(1);
      s.r = r.value_or(-3);
      break;
    case SurfaceClass::Abelian:
    case SurfaceClass::K3:
      if (!l2) throw std::invalid_argument("missing l2=<int>");
      s.l2 = *l2;
      s.r = r.value_or(0);
      break;
    case SurfaceClass::GeneralType:
      if (!l2) throw std::invalid_argument("missing l2=<int>");
      if (!r) throw std::invalid_argument("missing r=<int>");
      s.l2 = *l2;
      s.r = *r;
      break;
  }
  if (s.l2 < 1) throw std::invalid_argument("l2 must be positive");
  return s;
}

}  // namespace seshadri
