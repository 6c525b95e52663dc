// SPDX-License-Identifier: Apache-2.0
#include "core/residue_sets.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace floorsq {
namespace {

void require_modulus(Natural a) {
  if (a == 0) throw std::invalid_argument("floorsq: modulus must be >= 1");
  if (a > kMaxEnumerableModulus)
    throw std::invalid_argument(
        "floorsq: modulus too large for set enumeration (max " +
        std::to_string(kMaxEnumerableModulus) + ")");
}

// Plain bit array over [0, bits).
struct BitSet {
  explicit BitSet(Natural bits)
      : nbits(bits), words((bits + 63) / 64, 0) {}

  void set(Natural i) { words[i >> 6] |= Natural{1} << (i & 63); }
  bool test(Natural i) const {
    return (words[i >> 6] >> (i & 63)) & 1;
  }

  // *this |= other << shift, truncated to nbits.
  void or_shifted(const BitSet& other, Natural shift) {
    const Natural word_shift = shift >> 6;
    const unsigned bit_shift = shift & 63;
    for (std::size_t w = other.words.size(); w-- > 0;) {
      Natural v = other.words[w];
      if (v == 0) continue;
      std::size_t dst = w + word_shift;
      if (dst < words.size()) words[dst] |= v << bit_shift;
      if (bit_shift != 0 && dst + 1 < words.size())
        words[dst + 1] |= v >> (64 - bit_shift);
    }
    // Mask stray bits above nbits.
    if (Natural tail = nbits & 63; tail != 0 && !words.empty())
      words.back() &= (Natural{1} << tail) - 1;
  }

  std::vector<Natural> to_elements() const {
    std::vector<Natural> out;
    for (std::size_t w = 0; w < words.size(); ++w) {
      Natural v = words[w];
      while (v != 0) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(v));
        out.push_back(Natural{64} * w + b);
        v &= v - 1;
      }
    }
    return out;
  }

  Natural nbits;
  std::vector<Natural> words;
};

// Q_a ∪ {0} as a bit array over [0, a).
BitSet square_residue_bits(Natural a) {
  BitSet bits(a);
  for (Natural x = 0; x < a; ++x) bits.set((x * x) % a);
  return bits;
}

// A_a as a bit array over [0, 3(a-1)], by two boolean convolutions of
// the base set with itself.
BitSet triple_sum_bits(Natural a) {
  BitSet base = square_residue_bits(a);
  std::vector<Natural> base_elems = base.to_elements();
  BitSet two(2 * (a - 1) + 1);
  for (Natural e : base_elems) two.or_shifted(base, e);
  BitSet three(3 * (a - 1) + 1);
  for (Natural e : base_elems) three.or_shifted(two, e);
  return three;
}

}  // namespace

bool ResidueSet::contains(Natural value) const {
  return std::binary_search(elements.begin(), elements.end(), value);
}

ResidueSet quadratic_residues(Natural a) {
  require_modulus(a);
  BitSet bits = square_residue_bits(a);
  std::vector<Natural> elems = bits.to_elements();
  // Drop 0; Definition keeps only 0 < q < a.
  if (!elems.empty() && elems.front() == 0) elems.erase(elems.begin());
  return ResidueSet{a, SetKind::quadratic_residues, std::move(elems)};
}

ResidueSet triple_sums(Natural a) {
  require_modulus(a);
  return ResidueSet{a, SetKind::triple_sums, triple_sum_bits(a).to_elements()};
}

ResidueSet unique_representatives(Natural a) {
  require_modulus(a);
  BitSet sums = triple_sum_bits(a);
  // The class of c within [0, 3(a-1)] is {c, c+a, c+2a}; keep classes
  // with exactly one member present.
  std::vector<Natural> out;
  const Natural limit = 3 * (a - 1);
  for (Natural c = 0; c < a; ++c) {
    Natural found = 0;
    Natural member = 0;
    for (Natural v = c; v <= limit; v += a) {
      if (sums.test(v)) {
        ++found;
        member = v;
      }
    }
    if (found == 1) out.push_back(member);
  }
  std::sort(out.begin(), out.end());
  return ResidueSet{a, SetKind::unique_representatives, std::move(out)};
}

}  // namespace floorsq
