// SPDX-License-Identifier: Apache-2.0
//
// Exact 64-bit integer primitives: integer square root, perfect-square
// test, the 4^s(8t+7) forbidden-form test, and decomposition into three
// squares. Everything here is pure and overflow-checked.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace floorsq {

using Natural = std::uint64_t;

// Internal contract violation (a should-be-impossible state). Kept
// distinct from std::logic_error so callers can tell it from argument
// validation.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline Natural checked_add(Natural a, Natural b) {
  Natural r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("floorsq: 64-bit addition overflow");
  return r;
}

inline Natural checked_mul(Natural a, Natural b) {
  Natural r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("floorsq: 64-bit multiplication overflow");
  return r;
}

// floor(sqrt(n)), exact over the full 64-bit range. Integer Newton
// iteration with a final correction step; no floating point anywhere.
Natural isqrt(Natural n);

bool is_perfect_square(Natural n);

// True iff n = 4^s(8t+7) for some s, t >= 0; these are exactly the
// naturals with no three-square decomposition.
bool is_forbidden_form(Natural n);

// Ordered triple of square roots, x >= y >= z.
struct SquareTriple {
  Natural x = 0;
  Natural y = 0;
  Natural z = 0;

  bool ordered() const { return x >= y && y >= z; }
  Natural sum_of_squares() const {
    return checked_add(checked_mul(x, x),
                       checked_add(checked_mul(y, y), checked_mul(z, z)));
  }
  bool operator==(const SquareTriple&) const = default;
};

// Decomposes n into x^2 + y^2 + z^2 with x >= y >= z, or nullopt exactly
// when n is of forbidden form. Deterministic: x descends from isqrt(n),
// then y descends from min(x, isqrt(n - x^2)); the first hit wins, so x
// is maximal and then y is maximal.
std::optional<SquareTriple> three_square_decompose(Natural n);

}  // namespace floorsq
