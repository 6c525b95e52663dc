// SPDX-License-Identifier: Apache-2.0
#include "core/reference.hpp"

#include <algorithm>

namespace floorsq {

const std::vector<Natural>& reference_moduli() {
  static const std::vector<Natural> moduli{4, 7, 8, 9, 20, 24, 40, 104, 120};
  return moduli;
}

const std::vector<ReferenceRow>& reference_r_table() {
  static const std::vector<ReferenceRow> table{
      {4, {0, 1, 2, 3}},
      {7, {4, 6}},
      {8, {2, 3, 5, 6}},
      {9, {1, 4, 7, 8}},
      {20, {11, 15, 18, 19}},
      {24, {11, 14, 18, 19, 21, 22}},
      {40, {27, 38}},
      {104, {99}},
      {120, {107}},
  };
  return table;
}

const std::vector<WitnessTable>& reference_witness_tables() {
  static const std::vector<WitnessTable> tables{
      {4, {1, 1, 1, 1, 1, 1, 1, 1}},
      {7, {6, 4, 4, 4, 6, 6, 4, 4}},
      {8, {2, 2, 2, 2, 2, 2, 2, 2}},
      {9, {1, 1, 1, 7, 1, 1, 4, 4}},
      {20, {11, 15, 11, 15, 11, 15, 11, 15}},
      {24, {11, 11, 11, 11, 11, 11, 11, 11}},
      {40, {27, 27, 27, 27, 27, 27, 27, 27}},
      {104, {99, 99, 99, 99, 99, 99, 99, 99}},
      {120, {107, 107, 107, 107, 107, 107, 107, 107}},
  };
  return tables;
}

const std::vector<ClosureRef>& reference_closure() {
  using S = ModulusStatus;
  static const std::vector<ClosureRef> closure{
      {3, S::assumed, 0, 0},          {4, S::method_pass, 0, 0},
      {7, S::method_pass, 0, 0},      {8, S::method_pass, 0, 0},
      {9, S::method_pass, 0, 0},      {12, S::method_pass, 0, 0},
      {16, S::method_pass, 0, 0},     {20, S::method_pass, 0, 0},
      {24, S::method_pass, 0, 0},     {27, S::method_pass, 0, 0},
      {28, S::closure_derived, 7, 2}, {32, S::method_pass, 0, 0},
      {36, S::method_pass, 0, 0},     {40, S::method_pass, 0, 0},
      {48, S::method_pass, 0, 0},     {63, S::method_pass, 0, 0},
      {64, S::method_pass, 0, 0},     {72, S::method_pass, 0, 0},
      {75, S::closure_derived, 3, 5}, {80, S::method_pass, 0, 0},
      {81, S::closure_derived, 9, 3}, {96, S::method_pass, 0, 0},
      {100, S::closure_derived, 4, 5}, {104, S::method_pass, 0, 0},
      {108, S::closure_derived, 3, 6}, {112, S::closure_derived, 7, 4},
      {120, S::method_pass, 0, 0},
  };
  return closure;
}

ReproduceBundle computed_bundle() {
  ReproduceBundle bundle;
  for (Natural a : reference_moduli()) {
    ResidueSet r_set = unique_representatives(a);
    bundle.r_table.push_back(ReferenceRow{a, r_set.elements});
    HypothesisVerdict verdict = mod8_witness_check(a, r_set);
    bundle.witnesses.push_back(verdict.witness ? *verdict.witness
                                               : WitnessTable{a, {}});
  }
  ScanReport scan = scan_moduli(1, 120);
  std::vector<ClosureSeed> seeds{{3, ModulusStatus::assumed}};
  for (const ScanEntry& entry : scan.entries)
    if (entry.status == ModulusStatus::method_pass)
      seeds.push_back({entry.modulus, ModulusStatus::method_pass});
  ScanReport closure = closure_list(std::move(seeds), 120);
  for (const ScanEntry& entry : closure.entries)
    bundle.closure.push_back(
        ClosureRef{entry.modulus, entry.status, entry.base, entry.k});
  return bundle;
}

ReproduceBundle embedded_bundle() {
  return ReproduceBundle{reference_r_table(), reference_witness_tables(),
                         reference_closure()};
}

std::optional<std::string> first_divergence(const ReproduceBundle& computed,
                                            const ReproduceBundle& reference) {
  if (computed.r_table.size() != reference.r_table.size())
    return "R table size";
  for (std::size_t i = 0; i < reference.r_table.size(); ++i) {
    const ReferenceRow& lhs = computed.r_table[i];
    const ReferenceRow& rhs = reference.r_table[i];
    if (lhs.modulus != rhs.modulus || lhs.r_set != rhs.r_set)
      return "R_" + std::to_string(rhs.modulus);
  }
  if (computed.witnesses.size() != reference.witnesses.size())
    return "witness table size";
  for (std::size_t i = 0; i < reference.witnesses.size(); ++i) {
    if (!(computed.witnesses[i] == reference.witnesses[i]))
      return "witness_" + std::to_string(reference.witnesses[i].modulus);
  }
  if (computed.closure.size() != reference.closure.size())
    return "closure size";
  for (std::size_t i = 0; i < reference.closure.size(); ++i) {
    const ClosureRef& lhs = computed.closure[i];
    const ClosureRef& rhs = reference.closure[i];
    if (lhs.modulus != rhs.modulus || lhs.status != rhs.status ||
        lhs.base != rhs.base || lhs.k != rhs.k)
      return "closure_" + std::to_string(rhs.modulus);
  }
  return std::nullopt;
}

}  // namespace floorsq
