#pragma once

#include <cstdint>
#include <numeric>
#include <span>

#include "semiglue/errors.hpp"

namespace semiglue {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw ResourceError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("integer overflow in multiplication");
  return r;
}

inline Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

}  // namespace semiglue
