// SPDX-License-Identifier: Apache-2.0
//
// Command-level computation plus output formatting. Every renderer
// produces both the plain-text block and the canonical JSON envelope
// (schema_version 1, sorted keys, integers only) for one invocation, so
// the two modes agree by construction.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/residue_sets.hpp"

namespace floorsq {

enum class EnvelopeStatus { ok, fail, error };
enum class FaultKind { none, invalid_argument, overflow, internal };

struct Rendered {
  EnvelopeStatus status = EnvelopeStatus::ok;
  FaultKind fault = FaultKind::none;
  std::string text;     // result text; empty on faults
  std::string json;     // one-line canonical envelope (also on faults)
  std::string message;  // fault diagnostic, empty otherwise
};

Rendered render_residues(Natural a, SetKind kind);
Rendered render_check(Natural a);
Rendered render_represent(Natural a, Natural n, bool with_oracle);
Rendered render_scan(Natural a_min, Natural a_max,
                     std::vector<Natural> assume,
                     std::optional<Natural> closure_bound, unsigned threads);
Rendered render_verify(Natural a, Natural n_max, unsigned threads);
Rendered render_reproduce();

}  // namespace floorsq
