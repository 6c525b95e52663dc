// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdint>
#include <vector>

#include "core/arith.hpp"
#include "doctest.h"

using floorsq::Natural;
using floorsq::SquareTriple;

namespace {

// Independent oracle: every 4^s(8t+7) up to the limit, by enumeration.
std::vector<bool> forbidden_table(Natural limit) {
  std::vector<bool> table(limit + 1, false);
  for (Natural pow4 = 1; pow4 <= limit; pow4 *= 4) {
    for (Natural t = 0;; ++t) {
      Natural value = pow4 * (8 * t + 7);
      if (value > limit) break;
      table[value] = true;
    }
    if (pow4 > limit / 4) break;
  }
  return table;
}

// Independent oracle: is n a sum of three squares? Plain triple loop.
bool sum_of_three_squares_exists(Natural n) {
  for (Natural x = 0; x * x <= n; ++x)
    for (Natural y = x; x * x + y * y <= n; ++y) {
      Natural rest = n - x * x - y * y;
      Natural z = floorsq::isqrt(rest);
      if (z * z == rest && z >= y) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("isqrt on the stated examples") {
  CHECK(floorsq::isqrt(0) == 0);
  CHECK(floorsq::isqrt(16) == 4);
  CHECK(floorsq::isqrt(17) == 4);
}

TEST_CASE("isqrt satisfies m^2 <= n < (m+1)^2 across a sweep") {
  for (Natural n = 0; n <= 200000; ++n) {
    Natural m = floorsq::isqrt(n);
    CHECK(m * m <= n);
    CHECK((m + 1) * (m + 1) > n);
  }
}

TEST_CASE("isqrt is exact at the 64-bit extremes") {
  // Values where a double-precision shortcut misclassifies.
  const Natural big = 0xFFFFFFFFull;  // 2^32 - 1
  CHECK(floorsq::isqrt(big * big) == big);
  CHECK(floorsq::isqrt(big * big - 1) == big - 1);
  CHECK(floorsq::isqrt(big * big + 1) == big);
  CHECK(floorsq::isqrt(UINT64_MAX) == big);  // UINT64_MAX = (big+1)^2 - 1
  CHECK_FALSE(floorsq::is_perfect_square(UINT64_MAX));
  CHECK(floorsq::is_perfect_square(big * big));
}

TEST_CASE("perfect squares are exactly the isqrt fixed points") {
  CHECK(floorsq::is_perfect_square(0));
  CHECK(floorsq::is_perfect_square(9));
  CHECK_FALSE(floorsq::is_perfect_square(10));
  for (Natural n = 0; n <= 100000; ++n) {
    Natural m = floorsq::isqrt(n);
    CHECK(floorsq::is_perfect_square(n) == (m * m == n));
  }
}

TEST_CASE("forbidden form on the stated examples") {
  CHECK(floorsq::is_forbidden_form(7));
  CHECK(floorsq::is_forbidden_form(28));
  CHECK_FALSE(floorsq::is_forbidden_form(0));
  CHECK_FALSE(floorsq::is_forbidden_form(11));
}

TEST_CASE("forbidden form agrees with direct enumeration up to 10^6") {
  const Natural limit = 1000000;
  std::vector<bool> oracle = forbidden_table(limit);
  for (Natural n = 0; n <= limit; ++n)
    CHECK(floorsq::is_forbidden_form(n) == oracle[n]);
}

TEST_CASE("three-square decomposition on the stated examples") {
  auto zero = floorsq::three_square_decompose(0);
  REQUIRE(zero.has_value());
  CHECK(*zero == SquareTriple{0, 0, 0});

  auto eleven = floorsq::three_square_decompose(11);
  REQUIRE(eleven.has_value());
  CHECK(*eleven == SquareTriple{3, 1, 1});

  CHECK_FALSE(floorsq::three_square_decompose(7).has_value());

  auto four = floorsq::three_square_decompose(4);
  REQUIRE(four.has_value());
  CHECK(*four == SquareTriple{2, 0, 0});
}

TEST_CASE("decomposition agrees with the exhaustive oracle on small n") {
  for (Natural n = 0; n <= 1500; ++n) {
    auto triple = floorsq::three_square_decompose(n);
    CHECK(triple.has_value() == sum_of_three_squares_exists(n));
    if (triple) {
      CHECK(triple->sum_of_squares() == n);
      CHECK(triple->ordered());
    }
  }
}

TEST_CASE("decomposition absence matches the forbidden form on a sweep") {
  for (Natural n = 0; n <= 20000; ++n) {
    auto triple = floorsq::three_square_decompose(n);
    CHECK(triple.has_value() == !floorsq::is_forbidden_form(n));
    if (triple) CHECK(triple->sum_of_squares() == n);
  }
}

TEST_CASE("decomposition is deterministic: maximal x, then maximal y") {
  // 50 = 49+1+0 = 25+25+0 = 16+25+9; the search must take x = 7 first.
  auto fifty = floorsq::three_square_decompose(50);
  REQUIRE(fifty.has_value());
  CHECK(*fifty == SquareTriple{7, 1, 0});
  // 54 = 49+4+1 = 36+9+9 = 25+25+4; x = 7 wins, then maximal y = 2.
  auto f54 = floorsq::three_square_decompose(54);
  REQUIRE(f54.has_value());
  CHECK(*f54 == SquareTriple{7, 2, 1});
}

TEST_CASE("checked arithmetic rejects 64-bit wraparound") {
  CHECK(floorsq::checked_add(2, 3) == 5);
  CHECK(floorsq::checked_mul(6, 7) == 42);
  CHECK_THROWS_AS(floorsq::checked_add(UINT64_MAX, 1), std::overflow_error);
  CHECK_THROWS_AS(floorsq::checked_mul(UINT64_MAX / 2, 3),
                  std::overflow_error);
}
