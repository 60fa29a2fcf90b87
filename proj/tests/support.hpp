#pragma once

#include <random>
#include <string>

#include "seshadri/exact_scalar.hpp"

namespace testsupport {

using seshadri::ExactScalar;
using seshadri::Integer;
using seshadri::Rational;

// random expression over the grammar {constant, add, multiply, sqrt} with at
// most `sqrt_depth` nested square roots
inline ExactScalar random_expr(std::mt19937_64& rng, int sqrt_depth, int size) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  if (size <= 1) {
    return seshadri::make_rational(num(rng), den(rng));
  }
  std::uniform_int_distribution<int> kind(0, sqrt_depth > 0 ? 3 : 2);
  switch (kind(rng)) {
    case 0:
      return seshadri::make_rational(num(rng), den(rng));
    case 1: {
      int left = 1 + static_cast<int>(rng() % static_cast<unsigned>(size - 1));
      return random_expr(rng, sqrt_depth, left) + random_expr(rng, sqrt_depth, size - left);
    }
    case 2: {
      int left = 1 + static_cast<int>(rng() % static_cast<unsigned>(size - 1));
      return random_expr(rng, sqrt_depth, left) * random_expr(rng, sqrt_depth, size - left);
    }
    default: {
      ExactScalar inner = random_expr(rng, sqrt_depth - 1, size - 1);
      if (inner.sign() < 0) inner = -inner;
      return sqrt(inner);
    }
  }
}

// parses the output of to_decimal back into an exact rational
inline Rational decimal_to_rational(const std::string& text) {
  bool neg = !text.empty() && text[0] == '-';
  std::string body = neg ? text.substr(1) : text;
  auto dot = body.find('.');
  std::string digits = body.substr(0, dot) + body.substr(dot + 1);
  Integer value = 0;  // digit by digit; a leading '0' would read as octal
  for (char c : digits) value = value * 10 + (c - '0');
  Integer scale = 1;
  for (std::size_t i = dot + 1; i < body.size(); ++i) scale *= 10;
  Rational v = Rational(value) / Rational(scale);
  return neg ? Rational(-v) : v;
}

}  // namespace testsupport
