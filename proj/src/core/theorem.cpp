// SPDX-License-Identifier: Apache-2.0
#include "core/theorem.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

namespace floorsq {
namespace {

constexpr bool mod8_blocked(Natural value) {
  Natural m = value & 7;
  return m == 0 || m == 4 || m == 7;
}

void require_r_set(Natural a, const ResidueSet& r_set) {
  if (r_set.modulus != a || r_set.kind != SetKind::unique_representatives)
    throw std::invalid_argument(
        "floorsq: expected the R-set of modulus " + std::to_string(a));
}

unsigned default_thread_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return std::min(hw, 8u);
}

}  // namespace

HypothesisVerdict mod8_witness_check(Natural a, const ResidueSet& r_set) {
  require_r_set(a, r_set);
  HypothesisVerdict verdict;
  verdict.modulus = a;
  if (r_set.elements.empty()) {
    verdict.outcome = HypothesisVerdict::Outcome::empty_r;
    return verdict;
  }
  WitnessTable table;
  table.modulus = a;
  for (int k = 0; k < 8; ++k) {
    bool found = false;
    for (Natural r : r_set.elements) {
      // Only the residues mod 8 matter, so reduce before multiplying.
      if (!mod8_blocked((a % 8) * static_cast<Natural>(k) + (r % 8))) {
        table.r_for_class[static_cast<std::size_t>(k)] = r;
        found = true;
        break;
      }
    }
    if (!found) {
      verdict.outcome = HypothesisVerdict::Outcome::fail;
      verdict.blocking_class = k;
      return verdict;
    }
  }
  verdict.outcome = HypothesisVerdict::Outcome::pass;
  verdict.witness = table;
  return verdict;
}

std::optional<Natural> select_r(Natural a, Natural n,
                                const ResidueSet& r_set) {
  require_r_set(a, r_set);
  for (Natural r : r_set.elements) {
    Natural candidate = checked_add(checked_mul(a, n), r);
    if (!is_forbidden_form(candidate)) return r;
  }
  return std::nullopt;
}

std::array<Natural, 3> Representation::floor_terms() const {
  return {triple.x * triple.x / modulus, triple.y * triple.y / modulus,
          triple.z * triple.z / modulus};
}

std::array<Natural, 3> Representation::residue_terms() const {
  return {triple.x * triple.x % modulus, triple.y * triple.y % modulus,
          triple.z * triple.z % modulus};
}

void validate_representation(const Representation& rep) {
  if (rep.modulus == 0)
    throw internal_error("floorsq: representation with modulus 0");
  if (!rep.triple.ordered())
    throw internal_error("floorsq: triple not in descending order");
  Natural lhs = checked_add(checked_mul(rep.modulus, rep.target), rep.r);
  if (rep.triple.sum_of_squares() != lhs)
    throw internal_error("floorsq: a*N + r != sum of three squares");
  auto residues = rep.residue_terms();
  if (residues[0] + residues[1] + residues[2] != rep.r)
    throw internal_error(
        "floorsq: r != exact sum of the three residues mod a");
  auto floors = rep.floor_terms();
  if (floors[0] + floors[1] + floors[2] != rep.target)
    throw internal_error("floorsq: floor terms do not sum to the target");
}

std::optional<Representation> construct_representation(
    Natural a, Natural n, const ResidueSet& r_set) {
  std::optional<Natural> r = select_r(a, n, r_set);
  if (!r) return std::nullopt;
  Natural sum = checked_add(checked_mul(a, n), *r);
  std::optional<SquareTriple> triple = three_square_decompose(sum);
  if (!triple)
    throw internal_error(
        "floorsq: no three-square decomposition of the non-forbidden value " +
        std::to_string(sum));
  Representation rep{a, n, *r, *triple};
  validate_representation(rep);
  return rep;
}

std::optional<Representation> construct_representation(Natural a, Natural n) {
  return construct_representation(a, n, unique_representatives(a));
}

std::optional<SquareTriple> brute_force_represent(
    Natural a, Natural n, std::optional<Natural> search_bound) {
  if (a == 0) throw std::invalid_argument("floorsq: modulus must be >= 1");
  if (n == 0) return SquareTriple{0, 0, 0};
  // Past this x even the single term floor(x^2/a) exceeds n.
  Natural default_bound =
      checked_add(isqrt(checked_mul(a, checked_add(n, 1))), 1);
  Natural bound = search_bound ? std::min(*search_bound, default_bound)
                               : default_bound;
  // Any x whose square leaves 64 bits has floor(x^2/a) > n already, so
  // clamping keeps x*x exact without changing the result.
  bound = std::min(bound, Natural{0xFFFFFFFF});
  for (Natural x = bound;; --x) {
    Natural tx = x * x / a;
    if (tx <= n) {
      for (Natural y = 0; y <= x; ++y) {
        Natural ty = y * y / a;
        if (tx + ty > n) break;
        Natural tz = n - tx - ty;
        // Smallest z with floor(z^2/a) = tz, if any, is the first hit.
        Natural z = tz == 0 ? 0 : isqrt(a * tz - 1) + 1;
        if (z <= y && z * z / a == tz) return SquareTriple{x, y, z};
      }
    }
    if (x == 0) break;
  }
  return std::nullopt;
}

Representation scale_by_square(const Representation& rep, Natural k) {
  if (k == 0)
    throw std::invalid_argument("floorsq: scale factor must be >= 1");
  Natural k2 = checked_mul(k, k);
  Representation scaled{checked_mul(rep.modulus, k2), rep.target,
                        checked_mul(rep.r, k2),
                        SquareTriple{checked_mul(rep.triple.x, k),
                                     checked_mul(rep.triple.y, k),
                                     checked_mul(rep.triple.z, k)}};
  // The scaled r is generally not a member of R_{a*k^2}; the identities
  // below are what carries over, and they are re-checked in full.
  validate_representation(scaled);
  return scaled;
}

VerifyReport verify_range(Natural a, Natural n_max, unsigned threads) {
  ResidueSet r_set = unique_representatives(a);
  VerifyReport report;
  report.modulus = a;
  report.n_max = n_max;

  unsigned workers = threads == 0 ? default_thread_count() : threads;
  Natural total = checked_add(n_max, 1);
  if (Natural{workers} > total) workers = static_cast<unsigned>(total);

  std::vector<std::vector<Natural>> failures(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run_slice = [&](unsigned w) {
    try {
      // Static contiguous partition keeps the merged output deterministic.
      Natural begin = total / workers * w + std::min<Natural>(w, total % workers);
      Natural end = begin + total / workers + (w < total % workers ? 1 : 0);
      for (Natural n = begin; n < end; ++n) {
        if (!construct_representation(a, n, r_set))
          failures[w].push_back(n);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers <= 1) {
    run_slice(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(run_slice, w);
    for (auto& t : pool) t.join();
  }
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);

  for (auto& part : failures)
    report.failures.insert(report.failures.end(), part.begin(), part.end());
  report.verified = total - report.failures.size();
  return report;
}

}  // namespace floorsq
