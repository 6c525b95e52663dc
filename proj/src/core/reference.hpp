// SPDX-License-Identifier: Apache-2.0
//
// Embedded reference data: the R-set table for the nine certified
// moduli, their witness tables, and the 27-value square-closure list up
// to 120 (seeded by the method passes plus the externally established
// a = 3). The reproduce command recomputes all three artifacts and
// diffs them against these values.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/scanner.hpp"

namespace floorsq {

struct ReferenceRow {
  Natural modulus = 0;
  std::vector<Natural> r_set;
};

struct ClosureRef {
  Natural modulus = 0;
  ModulusStatus status = ModulusStatus::assumed;
  Natural base = 0;  // closure_derived only
  Natural k = 0;
};

// The nine moduli certified by the mod-8 witness table shipped here.
const std::vector<Natural>& reference_moduli();
const std::vector<ReferenceRow>& reference_r_table();
const std::vector<WitnessTable>& reference_witness_tables();
// The 27 values up to 120 with status and provenance.
const std::vector<ClosureRef>& reference_closure();

struct ReproduceBundle {
  std::vector<ReferenceRow> r_table;
  std::vector<WitnessTable> witnesses;
  std::vector<ClosureRef> closure;
};

// Fresh computation of all three artifacts.
ReproduceBundle computed_bundle();
// The embedded values above, as a bundle.
ReproduceBundle embedded_bundle();

// Name of the first divergent row ("R_24", "witness_9", "closure_112",
// or a size mismatch), or nullopt when the bundles agree.
std::optional<std::string> first_divergence(const ReproduceBundle& computed,
                                            const ReproduceBundle& reference);

}  // namespace floorsq
