// SPDX-License-Identifier: Apache-2.0
//
// Range classification of moduli by the mod-8 witness check, and the
// square closure {base * k^2} over a seed set with provenance tracking.
#pragma once

#include <optional>
#include <vector>

#include "core/residue_sets.hpp"
#include "core/theorem.hpp"

namespace floorsq {

enum class ModulusStatus {
  method_pass,      // mod-8 witness check passes
  method_fail,      // some residue class has no admissible r (or R empty)
  assumed,          // supplied on external authority, not certified here
  closure_derived,  // base * k^2 for a passing or assumed base
};

struct ScanEntry {
  Natural modulus = 0;
  ModulusStatus status = ModulusStatus::method_fail;
  int blocking_class = -1;  // method_fail only
  bool empty_r = false;     // method_fail with an empty R-set
  Natural base = 0;         // closure provenance (smallest base, then k)
  Natural k = 0;
  ResidueSet r_set;
  std::optional<WitnessTable> witness;  // method_pass only
};

struct ScanReport {
  Natural a_min = 0;  // scanned range; 0/0 for pure closure reports
  Natural a_max = 0;
  Natural bound = 0;  // closure bound; 0 for pure range scans
  std::vector<ScanEntry> entries;  // ascending modulus, one per modulus
};

// Classifies every a in [a_min, a_max]. Entries carry R_a and, for
// passes, the witness table. Deterministic regardless of thread count.
ScanReport scan_moduli(Natural a_min, Natural a_max, unsigned threads = 0);

struct ClosureSeed {
  Natural modulus = 0;
  ModulusStatus status = ModulusStatus::assumed;  // method_pass or assumed
};

// Square closure {seed * k^2 <= bound : k >= 1}. Each value appears once
// with the strongest status (method_pass > closure_derived > assumed);
// closure_derived entries record the smallest base and then smallest k
// among their factorizations over the seeds.
ScanReport closure_list(std::vector<ClosureSeed> seeds, Natural bound);

}  // namespace floorsq
