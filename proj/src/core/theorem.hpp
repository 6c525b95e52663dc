// SPDX-License-Identifier: Apache-2.0
//
// The constructive machinery: the mod-8 witness check certifying that
// a*k + r avoids the forbidden form 4^s(8t+7) uniformly in k, extraction
// of explicit representations N = floor(A^2/a) + floor(B^2/a) +
// floor(C^2/a) from a three-square decomposition of a*N + r, square
// scaling of representations, an exhaustive oracle, and a range verifier.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "core/arith.hpp"
#include "core/residue_sets.hpp"

namespace floorsq {

// Chosen r per residue class k mod 8. Valid tables satisfy
// (a*k + r) mod 8 ∉ {0, 4, 7} for every class, which rules out the
// forbidden form for every k in that class.
struct WitnessTable {
  Natural modulus = 0;
  std::array<Natural, 8> r_for_class{};

  bool operator==(const WitnessTable&) const = default;
};

struct HypothesisVerdict {
  enum class Outcome { pass, fail, empty_r };

  Natural modulus = 0;
  Outcome outcome = Outcome::fail;
  std::optional<WitnessTable> witness;  // engaged iff pass
  int blocking_class = -1;              // least blocked class iff fail

  bool passed() const { return outcome == Outcome::pass; }
};

// For each k class picks the smallest r in R_a with (a*k + r) mod 8
// outside {0, 4, 7}. r_set must be the R-set of a.
HypothesisVerdict mod8_witness_check(Natural a, const ResidueSet& r_set);

// Smallest r in R_a making a*n + r escape the forbidden form. This is a
// per-instance test, strictly weaker a requirement than the uniform
// mod-8 witness, so it can succeed for moduli the witness check rejects.
std::optional<Natural> select_r(Natural a, Natural n, const ResidueSet& r_set);

struct Representation {
  Natural modulus = 0;
  Natural target = 0;  // the N being represented
  Natural r = 0;       // chosen class representative, a*N + r = sum of squares
  SquareTriple triple;

  std::array<Natural, 3> floor_terms() const;
  std::array<Natural, 3> residue_terms() const;  // X^2 mod a per component
};

// Checks the defining identities of a Representation:
//   a*N + r = x^2 + y^2 + z^2,
//   r = (x^2 mod a) + (y^2 mod a) + (z^2 mod a) exactly (no reduction),
//   N = sum of the floor terms, and the triple ordering.
// Throws internal_error naming the first violated identity.
void validate_representation(const Representation& rep);

// Constructive route of the main theorem. Returns nullopt when no r in
// R_a is admissible for this n (a legitimate outcome); throws
// internal_error if the decomposition or any identity fails afterwards,
// which would mean a bug, not mathematics.
std::optional<Representation> construct_representation(Natural a, Natural n);
// Same, with the caller-provided R-set (hot loops compute it once).
std::optional<Representation> construct_representation(
    Natural a, Natural n, const ResidueSet& r_set);

// Exhaustive oracle independent of the residue-set machinery: scans
// x >= y >= z with x <= search_bound for floor-term sum n, descending in
// x (then ascending y, z), so the first hit has maximal x. The default
// bound isqrt(a*(n+1)) + 1 is past the last x whose single term can
// still equal n; larger explicit bounds are clamped to it.
std::optional<SquareTriple> brute_force_represent(
    Natural a, Natural n, std::optional<Natural> search_bound = std::nullopt);

// Same representation at modulus a*k^2: triple scaled by k, r by k^2,
// target unchanged. Re-validates every identity at the new modulus.
Representation scale_by_square(const Representation& rep, Natural k);

struct VerifyReport {
  Natural modulus = 0;
  Natural n_max = 0;
  Natural verified = 0;            // count of n with a valid representation
  std::vector<Natural> failures;   // ascending n where no r was admissible
};

// Runs construct_representation for every n in [0, n_max], collecting
// all failures rather than stopping at the first. threads = 0 picks a
// default; the merged report is deterministic regardless of the count.
VerifyReport verify_range(Natural a, Natural n_max, unsigned threads = 0);

}  // namespace floorsq
