// SPDX-License-Identifier: Apache-2.0
#include "core/scanner.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

namespace floorsq {
namespace {

ScanEntry classify(Natural a) {
  ScanEntry entry;
  entry.modulus = a;
  entry.r_set = unique_representatives(a);
  HypothesisVerdict verdict = mod8_witness_check(a, entry.r_set);
  switch (verdict.outcome) {
    case HypothesisVerdict::Outcome::pass:
      entry.status = ModulusStatus::method_pass;
      entry.witness = verdict.witness;
      break;
    case HypothesisVerdict::Outcome::fail:
      entry.status = ModulusStatus::method_fail;
      entry.blocking_class = verdict.blocking_class;
      break;
    case HypothesisVerdict::Outcome::empty_r:
      // The report's status vocabulary folds the empty-R case into
      // method_fail; every class is trivially blocked, so class 0.
      entry.status = ModulusStatus::method_fail;
      entry.blocking_class = 0;
      entry.empty_r = true;
      break;
  }
  return entry;
}

int status_rank(ModulusStatus s) {
  switch (s) {
    case ModulusStatus::method_pass: return 3;
    case ModulusStatus::closure_derived: return 2;
    case ModulusStatus::assumed: return 1;
    case ModulusStatus::method_fail: return 0;
  }
  return 0;
}

}  // namespace

ScanReport scan_moduli(Natural a_min, Natural a_max, unsigned threads) {
  if (a_min == 0 || a_min > a_max)
    throw std::invalid_argument("floorsq: need 1 <= a_min <= a_max");
  ScanReport report;
  report.a_min = a_min;
  report.a_max = a_max;
  Natural count = a_max - a_min + 1;
  report.entries.resize(count);

  unsigned hw = std::thread::hardware_concurrency();
  unsigned workers = threads == 0 ? std::min(hw == 0 ? 1u : hw, 8u) : threads;
  if (Natural{workers} > count) workers = static_cast<unsigned>(count);

  std::vector<std::exception_ptr> errors(workers);
  auto run_slice = [&](unsigned w) {
    try {
      Natural begin = count / workers * w + std::min<Natural>(w, count % workers);
      Natural end = begin + count / workers + (w < count % workers ? 1 : 0);
      for (Natural i = begin; i < end; ++i)
        report.entries[i] = classify(a_min + i);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers <= 1) {
    run_slice(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_slice, w);
    for (auto& t : pool) t.join();
  }
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
  return report;
}

ScanReport closure_list(std::vector<ClosureSeed> seeds, Natural bound) {
  for (const ClosureSeed& seed : seeds) {
    if (seed.modulus == 0)
      throw std::invalid_argument("floorsq: seed modulus must be >= 1");
    if (seed.modulus > bound)
      throw std::invalid_argument("floorsq: seed modulus exceeds the bound");
    if (seed.status != ModulusStatus::method_pass &&
        seed.status != ModulusStatus::assumed)
      throw std::invalid_argument(
          "floorsq: closure seeds must be method_pass or assumed");
  }
  // Ascending bases with ascending k: the first candidate of a given
  // strength automatically carries the smallest (base, k) provenance.
  std::sort(seeds.begin(), seeds.end(),
            [](const ClosureSeed& a, const ClosureSeed& b) {
              return a.modulus < b.modulus;
            });

  struct Candidate {
    ModulusStatus status;
    int blocking_class;
    bool empty_r;
    Natural base, k;
  };
  std::map<Natural, Candidate> values;
  for (const ClosureSeed& seed : seeds) {
    for (Natural k = 1;; ++k) {
      Natural k2 = checked_mul(k, k);
      if (k2 > bound / seed.modulus) break;
      Natural value = seed.modulus * k2;
      Candidate cand{k == 1 ? seed.status : ModulusStatus::closure_derived,
                     -1, false, k == 1 ? 0 : seed.modulus, k == 1 ? 0 : k};
      auto [it, inserted] = values.emplace(value, cand);
      if (!inserted && status_rank(cand.status) > status_rank(it->second.status))
        it->second = cand;
    }
  }

  ScanReport report;
  report.bound = bound;
  report.entries.reserve(values.size());
  for (const auto& [value, cand] : values) {
    ScanEntry entry;
    entry.modulus = value;
    entry.status = cand.status;
    entry.base = cand.base;
    entry.k = cand.k;
    entry.r_set = unique_representatives(value);
    if (cand.status == ModulusStatus::method_pass)
      entry.witness = mod8_witness_check(value, entry.r_set).witness;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace floorsq
