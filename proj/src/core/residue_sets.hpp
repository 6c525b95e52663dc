// SPDX-License-Identifier: Apache-2.0
//
// The three set families attached to a modulus a:
//   Q_a  quadratic residues 0 < q < a,
//   A_a  sums of three elements of Q_a ∪ {0},
//   R_a  elements of A_a alone in their residue class mod a.
#pragma once

#include <vector>

#include "core/arith.hpp"

namespace floorsq {

enum class SetKind : char {
  quadratic_residues = 'q',
  triple_sums = 'a',
  unique_representatives = 'r',
};

struct ResidueSet {
  Natural modulus = 0;
  SetKind kind = SetKind::quadratic_residues;
  std::vector<Natural> elements;  // strictly ascending

  bool contains(Natural value) const;
};

// Enumeration guard: Q/A/R cost grows ~ a^2/64, so cap well inside the
// range where x^2 and 3(a-1) stay in 64 bits and runs finish promptly.
inline constexpr Natural kMaxEnumerableModulus = Natural{1} << 20;

// Q_a = {q : 0 < q < a, q ≡ x^2 (mod a) for some x}. Note 0 is excluded
// by definition even though it is a square residue. Throws
// std::invalid_argument for a = 0 or a beyond the enumeration cap.
ResidueSet quadratic_residues(Natural a);

// A_a: all sums x+y+z with x, y, z in Q_a ∪ {0} (repetition allowed);
// a subset of [0, 3(a-1)] that always contains 0.
ResidueSet triple_sums(Natural a);

// R_a: members of A_a whose residue class mod a contains no other member
// of A_a.
ResidueSet unique_representatives(Natural a);

}  // namespace floorsq
