// SPDX-License-Identifier: Apache-2.0
#include "core/arith.hpp"

#include <bit>

namespace floorsq {

Natural isqrt(Natural n) {
  if (n < 2) return n;
  // Start from a power of two >= sqrt(n) so the Newton sequence is
  // monotonically decreasing and lands exactly.
  unsigned bits = std::bit_width(n);
  Natural x = Natural{1} << ((bits + 1) / 2);
  while (true) {
    Natural next = (x + n / x) / 2;
    if (next >= x) break;
    x = next;
  }
  // x is now floor(sqrt(n)) or one above for a few edge inputs.
  while (x > 0 && x > n / x) --x;
  return x;
}

bool is_perfect_square(Natural n) {
  Natural m = isqrt(n);
  return m * m == n;
}

bool is_forbidden_form(Natural n) {
  if (n == 0) return false;
  while ((n & 3) == 0) n >>= 2;
  return (n & 7) == 7;
}

std::optional<SquareTriple> three_square_decompose(Natural n) {
  Natural x = isqrt(n);
  while (true) {
    Natural rem = n - x * x;
    Natural y = isqrt(rem);
    if (y > x) y = x;
    while (true) {
      Natural rem2 = rem - y * y;
      Natural z = isqrt(rem2);
      // z grows as y shrinks, so once z passes y no smaller y can work.
      if (z > y) break;
      if (z * z == rem2) return SquareTriple{x, y, z};
      if (y == 0) break;
      --y;
    }
    if (x == 0) break;
    --x;
  }
  // Exhausted: n admits no three-square decomposition, which by
  // Legendre's theorem happens exactly on forbidden-form inputs.
  return std::nullopt;
}

}  // namespace floorsq
