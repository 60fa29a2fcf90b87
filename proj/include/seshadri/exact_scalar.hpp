#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace seshadri {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Ordering { Less, Equal, Greater };

std::string to_string(Ordering o);

/// Raised when interval refinement reaches the 2^-256 width cutoff without
/// separating two values whose canonical forms are already known to differ.
class PrecisionCutoff : public std::runtime_error {
 public:
  explicit PrecisionCutoff(const std::string& what) : std::runtime_error(what) {}
};

// An exact real number from the restricted radical grammar: rationals closed
// under +, -, *, / and square roots nested at most twice (which covers fourth
// roots). Internally kept in a canonical form over a small tower of real
// quadratic extensions, so equality is decided symbolically and ordering by
// dyadic interval refinement. Values are immutable and cheap to copy.
class ExactScalar {
 public:
  ExactScalar();  // zero
  explicit ExactScalar(long long value);
  explicit ExactScalar(const Integer& value);
  explicit ExactScalar(const Rational& value);

  /// Canonical reduced rational; throws std::invalid_argument if den == 0.
  static ExactScalar rational(const Integer& num, const Integer& den);

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  /// 0 = rational, 1 = unnested radicals only, 2 = one nested radical level.
  int radical_depth() const;

  /// Deterministic symbolic rendering of the canonical form.
  std::string to_string() const;

  ExactScalar operator-() const;
  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);

  /// Exact square root. Throws std::invalid_argument on negative operands and
  /// when the result would nest radicals deeper than two levels.
  friend ExactScalar sqrt(const ExactScalar& x);

  /// Exact ordering of the real values. Terminates for every depth-<=2
  /// expression; throws PrecisionCutoff on the documented refinement cutoff.
  friend Ordering compare(const ExactScalar& a, const ExactScalar& b);

  /// Correctly rounded decimal expansion with `digits` fractional digits
  /// (exact rational ties round away from zero).
  friend std::string to_decimal(const ExactScalar& x, int digits);

  bool operator==(const ExactScalar& o) const { return compare(*this, o) == Ordering::Equal; }
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }
  bool operator<(const ExactScalar& o) const { return compare(*this, o) == Ordering::Less; }
  bool operator>(const ExactScalar& o) const { return compare(*this, o) == Ordering::Greater; }
  bool operator<=(const ExactScalar& o) const { return compare(*this, o) != Ordering::Greater; }
  bool operator>=(const ExactScalar& o) const { return compare(*this, o) != Ordering::Less; }

  struct Impl;  // canonical form; defined in the implementation file

 private:
  explicit ExactScalar(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

ExactScalar make_rational(long long num, long long den);
ExactScalar fourth_root(const ExactScalar& x);

}  // namespace seshadri
