#include "seshadri/exact_scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

namespace seshadri {

namespace {

using Mask = std::uint32_t;

// coefficients of a multiquadratic field element, keyed by the monomial mask
// over the inner generator list (bit i set <=> factor sqrt(inner[i]))
using InnerElem = std::map<Mask, Rational>;
// element of the outer extension, keyed by the monomial mask over the outer
// generator list; coefficients live in the inner field
using OuterElem = std::map<Mask, InnerElem>;

constexpr std::size_t kMaxGenerators = 24;
constexpr long kCutoffBits = 256;  // interval-width cutoff 2^-256

Rational make_rat(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num) / Rational(den);
}

Integer isqrt_floor(const Integer& n) { return boost::multiprecision::sqrt(n); }

bool perfect_square(const Integer& n, Integer& root) {
  if (n < 0) return false;
  root = isqrt_floor(n);
  return root * root == n;
}

bool rational_square_root(const Rational& q, Rational& root) {
  if (q < 0) return false;
  Integer rn, rd;
  if (!perfect_square(numerator(q), rn)) return false;
  if (!perfect_square(denominator(q), rd)) return false;
  root = make_rat(rn, rd);
  return true;
}

// pulls small square factors out of a radicand: c = out^2 * c'
void extract_square_factor(Integer& c, Integer& out) {
  out = 1;
  if (c <= 3) return;
  for (std::uint64_t d = 2; d <= 1000 && Integer(d) * d <= c; ++d) {
    Integer dd = Integer(d) * d;
    while (c % dd == 0) {
      c /= dd;
      out *= d;
    }
  }
}

// ---------------------------------------------------------------------------
// inner-field element arithmetic
// ---------------------------------------------------------------------------

void ie_add_term(InnerElem& e, Mask m, const Rational& q) {
  if (q == 0) return;
  auto it = e.find(m);
  if (it == e.end()) {
    e.emplace(m, q);
  } else {
    it->second += q;
    if (it->second == 0) e.erase(it);
  }
}

InnerElem ie_rat(const Rational& q) {
  InnerElem e;
  ie_add_term(e, 0, q);
  return e;
}

const InnerElem& ie_one() {
  static const InnerElem one = ie_rat(Rational(1));
  return one;
}

InnerElem ie_add(const InnerElem& a, const InnerElem& b) {
  InnerElem r = a;
  for (const auto& [m, q] : b) ie_add_term(r, m, q);
  return r;
}

InnerElem ie_neg(const InnerElem& a) {
  InnerElem r;
  for (const auto& [m, q] : a) r.emplace(m, -q);
  return r;
}

InnerElem ie_sub(const InnerElem& a, const InnerElem& b) { return ie_add(a, ie_neg(b)); }

InnerElem ie_scale(const InnerElem& a, const Rational& q) {
  InnerElem r;
  if (q == 0) return r;
  for (const auto& [m, c] : a) r.emplace(m, c * q);
  return r;
}

InnerElem ie_mul(const InnerElem& a, const InnerElem& b, const std::vector<Integer>& gens) {
  InnerElem r;
  for (const auto& [ma, qa] : a) {
    for (const auto& [mb, qb] : b) {
      Rational q = qa * qb;
      Mask common = ma & mb;
      for (std::size_t i = 0; common != 0; ++i, common >>= 1) {
        if (common & 1u) q *= Rational(gens[i]);
      }
      ie_add_term(r, ma ^ mb, q);
    }
  }
  return r;
}

bool ie_is_rational(const InnerElem& a) {
  return a.empty() || (a.size() == 1 && a.begin()->first == 0);
}

Rational ie_rational_value(const InnerElem& a) {
  if (a.empty()) return Rational(0);
  return a.begin()->second;
}

// splits a = lo + hi * sqrt(gens[level]) with lo, hi over generators < level
void ie_split(const InnerElem& a, std::size_t level, InnerElem& lo, InnerElem& hi) {
  Mask bit = Mask(1) << level;
  lo.clear();
  hi.clear();
  for (const auto& [m, q] : a) {
    if (m & bit) {
      hi.emplace(m ^ bit, q);
    } else {
      lo.emplace(m, q);
    }
  }
}

InnerElem ie_shift(const InnerElem& a, std::size_t level) {
  Mask bit = Mask(1) << level;
  InnerElem r;
  for (const auto& [m, q] : a) r.emplace(m | bit, q);
  return r;
}

InnerElem ie_inv(const InnerElem& a, const std::vector<Integer>& gens, std::size_t ngens) {
  if (a.empty()) throw std::invalid_argument("division by zero");
  if (ngens == 0) return ie_rat(Rational(1) / ie_rational_value(a));
  InnerElem lo, hi;
  ie_split(a, ngens - 1, lo, hi);
  if (hi.empty()) return ie_inv(lo, gens, ngens - 1);
  // 1/(A + B sqrt(c)) = (A - B sqrt(c)) / (A^2 - c B^2); the norm is nonzero
  // because sqrt(c) is irrational over the subfield
  InnerElem norm = ie_sub(ie_mul(lo, lo, gens), ie_scale(ie_mul(hi, hi, gens), Rational(gens[ngens - 1])));
  InnerElem ninv = ie_inv(norm, gens, ngens - 1);
  InnerElem r = ie_mul(lo, ninv, gens);
  InnerElem s = ie_mul(ie_neg(hi), ninv, gens);
  for (const auto& [m, q] : s) ie_add_term(r, m | (Mask(1) << (ngens - 1)), q);
  return r;
}

// ---------------------------------------------------------------------------
// dyadic interval arithmetic (endpoints rounded to multiples of 2^-prec)
// ---------------------------------------------------------------------------

struct RatInterval {
  Rational lo, hi;
};

Rational dyadic_floor(const Rational& x, long prec) {
  Integer num = numerator(x) * (Integer(1) << prec);
  const Integer den = denominator(x);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return Rational(q) / Rational(Integer(1) << prec);
}

Rational dyadic_ceil(const Rational& x, long prec) { return -dyadic_floor(-x, prec); }

RatInterval qi_round(const RatInterval& a, long prec) {
  return {dyadic_floor(a.lo, prec), dyadic_ceil(a.hi, prec)};
}

RatInterval qi_exact(const Rational& q) { return {q, q}; }

RatInterval qi_add(const RatInterval& a, const RatInterval& b, long prec) {
  return qi_round({a.lo + b.lo, a.hi + b.hi}, prec);
}

RatInterval qi_mul(const RatInterval& a, const RatInterval& b, long prec) {
  Rational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
  Rational lo = std::min(std::min(c1, c2), std::min(c3, c4));
  Rational hi = std::max(std::max(c1, c2), std::max(c3, c4));
  return qi_round({lo, hi}, prec);
}

RatInterval qi_scale(const RatInterval& a, const Rational& q, long prec) {
  if (q >= 0) return qi_round({a.lo * q, a.hi * q}, prec);
  return qi_round({a.hi * q, a.lo * q}, prec);
}

// floor(sqrt(x) * 2^prec) / 2^prec for x >= 0
Rational sqrt_lower(const Rational& x, long prec) {
  Integer scaled = (numerator(x) * (Integer(1) << (2 * prec))) / denominator(x);
  return Rational(isqrt_floor(scaled)) / Rational(Integer(1) << prec);
}

Rational sqrt_upper(const Rational& x, long prec) {
  Integer scaled = (numerator(x) * (Integer(1) << (2 * prec))) / denominator(x) + 1;
  Integer r = isqrt_floor(scaled);
  if (r * r < scaled) r += 1;
  return Rational(r) / Rational(Integer(1) << prec);
}

RatInterval qi_sqrt(const RatInterval& a, long prec) {
  Rational lo = a.lo < 0 ? Rational(0) : a.lo;  // radicands are >= 0 by construction
  Rational hi = a.hi < 0 ? Rational(0) : a.hi;
  return {sqrt_lower(lo, prec), sqrt_upper(hi, prec)};
}

}  // namespace

// ---------------------------------------------------------------------------
// canonical representation
// ---------------------------------------------------------------------------

struct ExactScalar::Impl {
  // F = Q(sqrt(inner[0]), ..., sqrt(inner[m-1])): integer radicands >= 2 with
  // no nonempty subset product a perfect square.
  std::vector<Integer> inner;
  // K = F(sqrt(outer[0]), ...): radicands are positive elements of F, with no
  // nonempty subset product a square in F.
  std::vector<InnerElem> outer;
  // the value, as an F-linear combination of outer monomials
  OuterElem coords;
};

namespace {

using Impl = ExactScalar::Impl;

bool oe_is_zero(const OuterElem& v) { return v.empty(); }

void oe_add_term(OuterElem& v, Mask m, const InnerElem& e) {
  if (e.empty()) return;
  auto it = v.find(m);
  if (it == v.end()) {
    v.emplace(m, e);
  } else {
    it->second = ie_add(it->second, e);
    if (it->second.empty()) v.erase(it);
  }
}

OuterElem oe_add(const OuterElem& a, const OuterElem& b) {
  OuterElem r = a;
  for (const auto& [m, e] : b) oe_add_term(r, m, e);
  return r;
}

OuterElem oe_neg(const OuterElem& a) {
  OuterElem r;
  for (const auto& [m, e] : a) r.emplace(m, ie_neg(e));
  return r;
}

OuterElem oe_mul(const OuterElem& a, const OuterElem& b, const Impl& t) {
  OuterElem r;
  for (const auto& [ma, ea] : a) {
    for (const auto& [mb, eb] : b) {
      InnerElem e = ie_mul(ea, eb, t.inner);
      Mask common = ma & mb;
      for (std::size_t j = 0; common != 0; ++j, common >>= 1) {
        if (common & 1u) e = ie_mul(e, t.outer[j], t.inner);
      }
      oe_add_term(r, ma ^ mb, e);
    }
  }
  return r;
}

void oe_split(const OuterElem& a, std::size_t level, OuterElem& lo, OuterElem& hi) {
  Mask bit = Mask(1) << level;
  lo.clear();
  hi.clear();
  for (const auto& [m, e] : a) {
    if (m & bit) {
      hi.emplace(m ^ bit, e);
    } else {
      lo.emplace(m, e);
    }
  }
}

OuterElem oe_inv(const OuterElem& a, const Impl& t, std::size_t ngens) {
  if (a.empty()) throw std::invalid_argument("division by zero");
  if (ngens == 0) {
    OuterElem r;
    r.emplace(0, ie_inv(a.at(0), t.inner, t.inner.size()));
    return r;
  }
  OuterElem lo, hi;
  oe_split(a, ngens - 1, lo, hi);
  if (hi.empty()) return oe_inv(lo, t, ngens - 1);
  OuterElem rad;
  rad.emplace(0, t.outer[ngens - 1]);
  OuterElem norm = oe_add(oe_mul(lo, lo, t), oe_neg(oe_mul(oe_mul(hi, hi, t), rad, t)));
  OuterElem ninv = oe_inv(norm, t, ngens - 1);
  OuterElem r = oe_mul(lo, ninv, t);
  OuterElem s = oe_mul(oe_neg(hi), ninv, t);
  for (const auto& [m, e] : s) oe_add_term(r, m | (Mask(1) << (ngens - 1)), e);
  return r;
}

// ---------------------------------------------------------------------------
// interval evaluation
// ---------------------------------------------------------------------------

struct AtomIntervals {
  std::vector<RatInterval> inner, outer;
};

AtomIntervals eval_atoms(const Impl& t, long prec) {
  AtomIntervals a;
  a.inner.reserve(t.inner.size());
  for (const Integer& c : t.inner) a.inner.push_back(qi_sqrt(qi_exact(Rational(c)), prec));
  a.outer.reserve(t.outer.size());
  for (const InnerElem& g : t.outer) {
    RatInterval rad = {Rational(0), Rational(0)};
    bool first = true;
    for (const auto& [m, q] : g) {
      RatInterval mono = qi_exact(Rational(1));
      Mask mm = m;
      for (std::size_t i = 0; mm != 0; ++i, mm >>= 1) {
        if (mm & 1u) mono = qi_mul(mono, a.inner[i], prec);
      }
      mono = qi_scale(mono, q, prec);
      rad = first ? mono : qi_add(rad, mono, prec);
      first = false;
    }
    a.outer.push_back(qi_sqrt(rad, prec));
  }
  return a;
}

RatInterval eval_inner(const InnerElem& e, const AtomIntervals& at, long prec) {
  RatInterval acc = {Rational(0), Rational(0)};
  bool first = true;
  for (const auto& [m, q] : e) {
    RatInterval mono = qi_exact(Rational(1));
    Mask mm = m;
    for (std::size_t i = 0; mm != 0; ++i, mm >>= 1) {
      if (mm & 1u) mono = qi_mul(mono, at.inner[i], prec);
    }
    mono = qi_scale(mono, q, prec);
    acc = first ? mono : qi_add(acc, mono, prec);
    first = false;
  }
  return acc;
}

RatInterval eval_value(const Impl& t, const OuterElem& v, long prec) {
  AtomIntervals at = eval_atoms(t, prec);
  RatInterval acc = {Rational(0), Rational(0)};
  bool first = true;
  for (const auto& [m, e] : v) {
    RatInterval mono = eval_inner(e, at, prec);
    Mask mm = m;
    for (std::size_t j = 0; mm != 0; ++j, mm >>= 1) {
      if (mm & 1u) mono = qi_mul(mono, at.outer[j], prec);
    }
    acc = first ? mono : qi_add(acc, mono, prec);
    first = false;
  }
  return acc;
}

// sign of a provably nonzero value; raises PrecisionCutoff per the documented
// refinement policy
int sign_by_refinement(const Impl& t, const OuterElem& v) {
  const Rational cutoff = Rational(1) / Rational(Integer(1) << kCutoffBits);
  for (long prec = 64;; prec *= 2) {
    RatInterval iv = eval_value(t, v, prec);
    if (iv.lo > 0) return 1;
    if (iv.hi < 0) return -1;
    if (iv.hi - iv.lo < cutoff) {
      throw PrecisionCutoff(
          "interval width fell below 2^-256 without separating two values "
          "whose canonical forms differ");
    }
    if (prec > (1L << 22)) {
      throw PrecisionCutoff("refinement failed to converge");  // unreachable
    }
  }
}

int ie_sign(const InnerElem& e, const std::vector<Integer>& gens) {
  if (e.empty()) return 0;
  if (ie_is_rational(e)) {
    Rational q = ie_rational_value(e);
    return q > 0 ? 1 : (q < 0 ? -1 : 0);
  }
  if (e.size() == 1) {
    // a single monomial q * sqrt(...) has the sign of q
    return e.begin()->second > 0 ? 1 : -1;
  }
  Impl t;
  t.inner = gens;
  OuterElem v;
  v.emplace(0, e);
  return sign_by_refinement(t, v);
}

// ---------------------------------------------------------------------------
// square detection inside the inner field
// ---------------------------------------------------------------------------

bool ie_is_square(const InnerElem& a, const std::vector<Integer>& gens, std::size_t ngens,
                  InnerElem& root) {
  if (a.empty()) {
    root.clear();
    return true;
  }
  if (ngens == 0) {
    Rational r;
    if (!rational_square_root(ie_rational_value(a), r)) return false;
    root = ie_rat(r);
    return true;
  }
  const Integer& c = gens[ngens - 1];
  InnerElem lo, hi;
  ie_split(a, ngens - 1, lo, hi);
  if (hi.empty()) {
    if (ie_is_square(lo, gens, ngens - 1, root)) return true;
    // the root may be v*sqrt(c): v^2 = a / c
    InnerElem v;
    if (ie_is_square(ie_scale(lo, Rational(1) / Rational(c)), gens, ngens - 1, v)) {
      root = ie_shift(v, ngens - 1);
      return true;
    }
    return false;
  }
  // a = A + B sqrt(c), B != 0: a = (u + v sqrt(c))^2 forces
  // u^2 + v^2 c = A, 2uv = B, and the norm A^2 - c B^2 = (u^2 - v^2 c)^2.
  InnerElem norm =
      ie_sub(ie_mul(lo, lo, gens), ie_scale(ie_mul(hi, hi, gens), Rational(c)));
  InnerElem d;
  if (!ie_is_square(norm, gens, ngens - 1, d)) return false;
  if (ie_sign(d, gens) < 0) d = ie_neg(d);
  for (int attempt = 0; attempt < 2; ++attempt) {
    InnerElem cand = attempt == 0 ? ie_add(lo, d) : ie_sub(lo, d);
    InnerElem u2 = ie_scale(cand, make_rat(1, 2));
    if (u2.empty()) continue;
    InnerElem u;
    if (!ie_is_square(u2, gens, ngens - 1, u) || u.empty()) continue;
    InnerElem v = ie_mul(hi, ie_inv(ie_scale(u, Rational(2)), gens, ngens - 1), gens);
    InnerElem sigma = ie_add(u, ie_shift(v, ngens - 1));
    if (ie_mul(sigma, sigma, gens) == a) {
      root = sigma;
      return true;
    }
  }
  return false;
}

bool ie_is_square(const InnerElem& a, const std::vector<Integer>& gens, InnerElem& root) {
  if (!ie_is_square(a, gens, gens.size(), root)) return false;
  if (ie_sign(root, gens) < 0) root = ie_neg(root);
  return true;
}

// ---------------------------------------------------------------------------
// tower construction
// ---------------------------------------------------------------------------

// representation of sqrt(c) for a positive integer c, reduced against the
// existing generators; may extend the generator list
InnerElem insert_inner_radicand(Impl& t, Integer c) {
  Integer root;
  if (perfect_square(c, root)) return ie_rat(Rational(root));
  Integer outside;
  extract_square_factor(c, outside);
  const std::size_t m = t.inner.size();
  for (Mask mask = 0; mask < (Mask(1) << m); ++mask) {
    Integer prod = c;
    Mask mm = mask;
    for (std::size_t i = 0; mm != 0; ++i, mm >>= 1) {
      if (mm & 1u) prod *= t.inner[i];
    }
    if (perfect_square(prod, root)) {
      // sqrt(c) = root * monomial(mask) / prod(mask)
      Integer denom = 1;
      mm = mask;
      for (std::size_t i = 0; mm != 0; ++i, mm >>= 1) {
        if (mm & 1u) denom *= t.inner[i];
      }
      InnerElem e;
      ie_add_term(e, mask, Rational(outside) * make_rat(root, denom));
      return e;
    }
  }
  if (m >= kMaxGenerators) throw std::invalid_argument("radical tower too large");
  t.inner.push_back(c);
  InnerElem e;
  ie_add_term(e, Mask(1) << m, Rational(outside));
  return e;
}

// representation of sqrt(g) for a positive non-square g in F, reduced against
// the existing outer generators; may extend the generator list
OuterElem insert_outer_radicand(Impl& t, const InnerElem& g) {
  const std::size_t n = t.outer.size();
  for (Mask mask = 1; mask < (Mask(1) << n); ++mask) {
    InnerElem prod = g;
    InnerElem denom = ie_one();
    Mask mm = mask;
    for (std::size_t j = 0; mm != 0; ++j, mm >>= 1) {
      if (mm & 1u) {
        prod = ie_mul(prod, t.outer[j], t.inner);
        denom = ie_mul(denom, t.outer[j], t.inner);
      }
    }
    InnerElem sigma;
    if (ie_is_square(prod, t.inner, sigma)) {
      // sqrt(g) = sigma / denom * monomial(mask)
      OuterElem r;
      r.emplace(mask, ie_mul(sigma, ie_inv(denom, t.inner, t.inner.size()), t.inner));
      return r;
    }
  }
  if (n >= kMaxGenerators) throw std::invalid_argument("radical tower too large");
  t.outer.push_back(g);
  OuterElem r;
  r.emplace(Mask(1) << n, ie_one());
  return r;
}

// drops generators no value term refers to and compacts the masks
void prune(Impl& t) {
  Mask outer_used = 0;
  for (const auto& [m, e] : t.coords) outer_used |= m;
  Mask inner_used = 0;
  for (const auto& [m, e] : t.coords) {
    for (const auto& [im, q] : e) inner_used |= im;
  }
  std::vector<InnerElem> outer_kept;
  std::vector<int> outer_map(t.outer.size(), -1);
  for (std::size_t j = 0; j < t.outer.size(); ++j) {
    if (outer_used & (Mask(1) << j)) {
      outer_map[j] = static_cast<int>(outer_kept.size());
      outer_kept.push_back(t.outer[j]);
      for (const auto& [im, q] : t.outer[j]) inner_used |= im;
    }
  }
  std::vector<Integer> inner_kept;
  std::vector<int> inner_map(t.inner.size(), -1);
  for (std::size_t i = 0; i < t.inner.size(); ++i) {
    if (inner_used & (Mask(1) << i)) {
      inner_map[i] = static_cast<int>(inner_kept.size());
      inner_kept.push_back(t.inner[i]);
    }
  }
  if (inner_kept.size() == t.inner.size() && outer_kept.size() == t.outer.size()) return;

  auto remap_mask = [](Mask m, const std::vector<int>& map) {
    Mask r = 0;
    for (std::size_t i = 0; m != 0; ++i, m >>= 1) {
      if (m & 1u) r |= Mask(1) << map[i];
    }
    return r;
  };
  auto remap_inner = [&](const InnerElem& e) {
    InnerElem r;
    for (const auto& [m, q] : e) r.emplace(remap_mask(m, inner_map), q);
    return r;
  };
  for (auto& g : outer_kept) g = remap_inner(g);
  OuterElem coords;
  for (const auto& [m, e] : t.coords) coords.emplace(remap_mask(m, outer_map), remap_inner(e));
  t.inner = std::move(inner_kept);
  t.outer = std::move(outer_kept);
  t.coords = std::move(coords);
}

std::shared_ptr<const Impl> make_impl(Impl t) {
  prune(t);
  return std::make_shared<const Impl>(std::move(t));
}

std::shared_ptr<const Impl> rational_impl(const Rational& q) {
  Impl t;
  if (q != 0) t.coords.emplace(0, ie_rat(q));
  return make_impl(std::move(t));
}

// ---------------------------------------------------------------------------
// merging two towers
// ---------------------------------------------------------------------------

InnerElem translate_inner(const InnerElem& e, const std::vector<InnerElem>& gen_rep,
                          const std::vector<Integer>& gens) {
  InnerElem r;
  for (const auto& [m, q] : e) {
    InnerElem mono = ie_rat(q);
    Mask mm = m;
    for (std::size_t i = 0; mm != 0; ++i, mm >>= 1) {
      if (mm & 1u) mono = ie_mul(mono, gen_rep[i], gens);
    }
    r = ie_add(r, mono);
  }
  return r;
}

struct Merged {
  Impl tower;  // coords unused
  OuterElem a, b;
};

Merged merge(const Impl& A, const Impl& B) {
  Merged m;
  m.tower.inner = A.inner;
  m.tower.outer = A.outer;
  m.a = A.coords;

  std::vector<InnerElem> inner_rep;
  inner_rep.reserve(B.inner.size());
  for (const Integer& c : B.inner) inner_rep.push_back(insert_inner_radicand(m.tower, c));

  std::vector<OuterElem> outer_rep;
  outer_rep.reserve(B.outer.size());
  for (const InnerElem& g : B.outer) {
    InnerElem g2 = translate_inner(g, inner_rep, m.tower.inner);
    InnerElem sigma;
    if (ie_is_square(g2, m.tower.inner, sigma)) {
      OuterElem v;
      v.emplace(0, sigma);
      outer_rep.push_back(std::move(v));
    } else {
      outer_rep.push_back(insert_outer_radicand(m.tower, g2));
    }
  }

  for (const auto& [om, e] : B.coords) {
    OuterElem mono;
    mono.emplace(0, translate_inner(e, inner_rep, m.tower.inner));
    Mask mm = om;
    for (std::size_t j = 0; mm != 0; ++j, mm >>= 1) {
      if (mm & 1u) mono = oe_mul(mono, outer_rep[j], m.tower);
    }
    m.b = oe_add(m.b, mono);
  }
  return m;
}

int sign_of(const Impl& t, const OuterElem& v) {
  if (oe_is_zero(v)) return 0;
  if (v.size() == 1) {
    // outer monomials are positive, so a single term has its coefficient's sign
    return ie_sign(v.begin()->second, t.inner);
  }
  return sign_by_refinement(t, v);
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

std::string rat_str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string inner_elem_str(const InnerElem& e, const std::vector<Integer>& gens);

std::string inner_mono_str(Mask m, const Rational& q, const std::vector<Integer>& gens,
                           bool& negative) {
  negative = q < 0;
  Rational aq = negative ? Rational(-q) : q;
  std::vector<std::string> factors;
  if (aq != 1 || m == 0) factors.push_back(rat_str(aq));
  for (std::size_t i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1u) factors.push_back("sqrt(" + gens[i].str() + ")");
  }
  std::string s = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) s += "*" + factors[i];
  return s;
}

std::string join_terms(const std::vector<std::pair<std::string, bool>>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [body, neg] = terms[i];
    if (i == 0) {
      out += neg ? "-" + body : body;
    } else {
      out += neg ? " - " + body : " + " + body;
    }
  }
  return out.empty() ? "0" : out;
}

std::string inner_elem_str(const InnerElem& e, const std::vector<Integer>& gens) {
  std::vector<std::pair<std::string, bool>> terms;
  for (const auto& [m, q] : e) {
    bool neg = false;
    terms.emplace_back(inner_mono_str(m, q, gens, neg), neg);
  }
  return join_terms(terms);
}

std::string value_str(const Impl& t) {
  std::vector<std::pair<std::string, bool>> terms;
  for (const auto& [om, e] : t.coords) {
    std::string outer_part;
    Mask mm = om;
    for (std::size_t j = 0; mm != 0; ++j, mm >>= 1) {
      if (mm & 1u) {
        if (!outer_part.empty()) outer_part += "*";
        outer_part += "sqrt(" + inner_elem_str(t.outer[j], t.inner) + ")";
      }
    }
    if (om == 0) {
      for (const auto& [im, q] : e) {
        bool neg = false;
        terms.emplace_back(inner_mono_str(im, q, t.inner, neg), neg);
      }
      continue;
    }
    if (e.size() == 1) {
      const auto& [im, q] = *e.begin();
      bool neg = false;
      std::string coef = inner_mono_str(im, q, t.inner, neg);
      if (coef == "1") {
        terms.emplace_back(outer_part, neg);
      } else {
        terms.emplace_back(coef + "*" + outer_part, neg);
      }
    } else {
      terms.emplace_back("(" + inner_elem_str(e, t.inner) + ")*" + outer_part, false);
    }
  }
  return join_terms(terms);
}

}  // namespace

// ---------------------------------------------------------------------------
// public interface
// ---------------------------------------------------------------------------

ExactScalar::ExactScalar() : impl_(rational_impl(Rational(0))) {}
ExactScalar::ExactScalar(long long value) : impl_(rational_impl(Rational(value))) {}
ExactScalar::ExactScalar(const Integer& value) : impl_(rational_impl(Rational(value))) {}
ExactScalar::ExactScalar(const Rational& value) : impl_(rational_impl(value)) {}
ExactScalar::ExactScalar(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

ExactScalar ExactScalar::rational(const Integer& num, const Integer& den) {
  return ExactScalar(make_rat(num, den));
}

ExactScalar make_rational(long long num, long long den) {
  return ExactScalar::rational(Integer(num), Integer(den));
}

int ExactScalar::sign() const { return sign_of(*impl_, impl_->coords); }

bool ExactScalar::is_rational() const {
  return impl_->coords.empty() ||
         (impl_->coords.size() == 1 && impl_->coords.begin()->first == 0 &&
          ie_is_rational(impl_->coords.begin()->second));
}

std::optional<Rational> ExactScalar::as_rational() const {
  if (!is_rational()) return std::nullopt;
  if (impl_->coords.empty()) return Rational(0);
  return ie_rational_value(impl_->coords.begin()->second);
}

int ExactScalar::radical_depth() const {
  int depth = 0;
  for (const auto& [m, e] : impl_->coords) {
    if (m != 0) return 2;
    if (!ie_is_rational(e)) depth = 1;
  }
  return depth;
}

std::string ExactScalar::to_string() const { return value_str(*impl_); }

ExactScalar ExactScalar::operator-() const {
  Impl t = *impl_;
  t.coords = oe_neg(t.coords);
  return ExactScalar(make_impl(std::move(t)));
}

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
  Merged m = merge(*a.impl_, *b.impl_);
  m.tower.coords = oe_add(m.a, m.b);
  return ExactScalar(make_impl(std::move(m.tower)));
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) { return a + (-b); }

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  Merged m = merge(*a.impl_, *b.impl_);
  m.tower.coords = oe_mul(m.a, m.b, m.tower);
  return ExactScalar(make_impl(std::move(m.tower)));
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
  if (b.impl_->coords.empty()) throw std::invalid_argument("division by zero");
  Merged m = merge(*a.impl_, *b.impl_);
  m.tower.coords = oe_mul(m.a, oe_inv(m.b, m.tower, m.tower.outer.size()), m.tower);
  return ExactScalar(make_impl(std::move(m.tower)));
}

ExactScalar sqrt(const ExactScalar& x) {
  int sg = x.sign();
  if (sg < 0) throw std::invalid_argument("sqrt of a negative value");
  if (sg == 0) return ExactScalar();
  if (x.radical_depth() >= 2) {
    throw std::invalid_argument("sqrt would nest radicals deeper than two levels");
  }
  Impl t = *x.impl_;
  InnerElem v = t.coords.at(0);
  t.coords.clear();
  if (ie_is_rational(v)) {
    Rational q = ie_rational_value(v);
    Rational root;
    if (rational_square_root(q, root)) return ExactScalar(root);
    // sqrt(n/d) = sqrt(n*d) / d
    InnerElem rep = insert_inner_radicand(t, numerator(q) * denominator(q));
    t.coords.emplace(0, ie_scale(rep, make_rat(1, denominator(q))));
    return ExactScalar(make_impl(std::move(t)));
  }
  InnerElem sigma;
  if (ie_is_square(v, t.inner, sigma)) {
    t.coords.emplace(0, std::move(sigma));
    return ExactScalar(make_impl(std::move(t)));
  }
  t.coords = insert_outer_radicand(t, v);
  return ExactScalar(make_impl(std::move(t)));
}

ExactScalar fourth_root(const ExactScalar& x) { return sqrt(sqrt(x)); }

Ordering compare(const ExactScalar& a, const ExactScalar& b) {
  if (a.impl_ == b.impl_) return Ordering::Equal;
  if (a.is_rational() && b.is_rational()) {
    Rational qa = *a.as_rational(), qb = *b.as_rational();
    if (qa < qb) return Ordering::Less;
    if (qa > qb) return Ordering::Greater;
    return Ordering::Equal;
  }
  // cheap screen before the symbolic merge
  RatInterval ia = eval_value(*a.impl_, a.impl_->coords, 64);
  RatInterval ib = eval_value(*b.impl_, b.impl_->coords, 64);
  if (ia.hi < ib.lo) return Ordering::Less;
  if (ib.hi < ia.lo) return Ordering::Greater;
  Merged m = merge(*a.impl_, *b.impl_);
  OuterElem diff = oe_add(m.a, oe_neg(m.b));
  int s = sign_of(m.tower, diff);
  if (s == 0) return Ordering::Equal;
  return s < 0 ? Ordering::Less : Ordering::Greater;
}

std::string to_decimal(const ExactScalar& x, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be >= 1");
  const Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(digits));
  Integer rounded;
  if (auto q = x.as_rational()) {
    // ties round away from zero
    Rational v = *q * Rational(scale);
    bool neg = v < 0;
    if (neg) v = -v;
    Integer fl = numerator(v) / denominator(v);
    if (Rational(v - Rational(fl)) * 2 >= 1) fl += 1;
    rounded = neg ? Integer(-fl) : fl;
  } else {
    // an irrational value never lands on a rounding tie, so the interval
    // eventually pins the rounded integer
    int sg = x.sign();
    for (long prec = std::max(64, digits * 4);; prec *= 2) {
      RatInterval iv = eval_value(*x.impl_, x.impl_->coords, prec);
      if (sg < 0) iv = {Rational(-iv.hi), Rational(-iv.lo)};
      auto floor_rat = [](const Rational& v) {
        Integer q = numerator(v) / denominator(v);
        if (v < 0 && Rational(q) != v) q -= 1;
        return q;
      };
      auto floor_half = [](Integer n) {
        if (n >= 0) return Integer(n / 2);
        return Integer((n - 1) / 2);
      };
      Integer nlo = floor_half(floor_rat(iv.lo * Rational(scale) * 2 + 1));
      Integer nhi = floor_half(floor_rat(iv.hi * Rational(scale) * 2 + 1));
      if (nlo == nhi) {
        rounded = sg < 0 ? Integer(-nlo) : nlo;
        break;
      }
      if (prec > (1L << 22)) throw PrecisionCutoff("decimal refinement failed to converge");
    }
  }
  bool neg = rounded < 0;
  std::string s = (neg ? Integer(-rounded) : rounded).str();
  if (s.size() <= static_cast<std::size_t>(digits)) {
    s = std::string(static_cast<std::size_t>(digits) + 1 - s.size(), '0') + s;
  }
  std::string out = neg ? "-" : "";
  out += s.substr(0, s.size() - digits);
  out += ".";
  out += s.substr(s.size() - digits);
  return out;
}

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

}  // namespace seshadri
