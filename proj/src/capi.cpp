// SPDX-License-Identifier: Apache-2.0
//
// extern "C" surface of the shared library. Opaque handles own plain
// core values; exceptions are mapped to fsq_status codes and the message
// is kept in a thread-local slot for fsq_last_error.
#include "floorsq.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "core/arith.hpp"
#include "core/reference.hpp"
#include "core/render.hpp"
#include "core/residue_sets.hpp"
#include "core/scanner.hpp"
#include "core/theorem.hpp"

struct fsq_set {
  floorsq::ResidueSet impl;
};
struct fsq_check {
  floorsq::HypothesisVerdict impl;
};
struct fsq_rep {
  floorsq::Representation impl;
};
struct fsq_verify {
  floorsq::VerifyReport impl;
};
struct fsq_scan {
  floorsq::ScanReport impl;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
fsq_status guarded(Fn&& fn) noexcept {
  try {
    g_last_error.clear();
    return fn();
  } catch (const floorsq::internal_error& e) {
    g_last_error = e.what();
    return FSQ_ERR_INTERNAL;
  } catch (const std::overflow_error& e) {
    g_last_error = e.what();
    return FSQ_ERR_OVERFLOW;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return FSQ_ERR_INVALID;
  } catch (const std::bad_alloc&) {
    g_last_error = "floorsq: out of memory";
    return FSQ_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FSQ_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fsq_status finish_render(const floorsq::Rendered& rendered, int as_json,
                         char** out) {
  if (out == nullptr) return FSQ_ERR_INVALID;
  *out = nullptr;
  fsq_status status;
  switch (rendered.status) {
    case floorsq::EnvelopeStatus::ok:
      status = FSQ_OK;
      break;
    case floorsq::EnvelopeStatus::fail:
      status = FSQ_FAIL;
      break;
    default:
      g_last_error = rendered.message;
      switch (rendered.fault) {
        case floorsq::FaultKind::overflow: status = FSQ_ERR_OVERFLOW; break;
        case floorsq::FaultKind::internal: status = FSQ_ERR_INTERNAL; break;
        default: status = FSQ_ERR_INVALID; break;
      }
      break;
  }
  const std::string& body = as_json ? rendered.json : rendered.text;
  if (!body.empty()) {
    *out = dup_string(body);
    if (*out == nullptr) {
      g_last_error = "floorsq: out of memory";
      return FSQ_ERR_INTERNAL;
    }
  }
  return status;
}

bool parse_kind(char kind, floorsq::SetKind* out) {
  switch (kind) {
    case 'q': *out = floorsq::SetKind::quadratic_residues; return true;
    case 'a': *out = floorsq::SetKind::triple_sums; return true;
    case 'r': *out = floorsq::SetKind::unique_representatives; return true;
    default: return false;
  }
}

}  // namespace

extern "C" {

const char* fsq_last_error(void) { return g_last_error.c_str(); }

const char* fsq_version(void) { return "1.0.0"; }

uint64_t fsq_isqrt(uint64_t n) { return floorsq::isqrt(n); }

int fsq_is_perfect_square(uint64_t n) {
  return floorsq::is_perfect_square(n) ? 1 : 0;
}

int fsq_is_forbidden_form(uint64_t n) {
  return floorsq::is_forbidden_form(n) ? 1 : 0;
}

fsq_status fsq_three_square_decompose(uint64_t n, uint64_t out[3],
                                      int* found) {
  if (out == nullptr || found == nullptr) return FSQ_ERR_INVALID;
  return guarded([&]() -> fsq_status {
    std::optional<floorsq::SquareTriple> triple =
        floorsq::three_square_decompose(n);
    *found = triple.has_value() ? 1 : 0;
    if (triple) {
      out[0] = triple->x;
      out[1] = triple->y;
      out[2] = triple->z;
    }
    return FSQ_OK;
  });
}

fsq_status fsq_set_compute(uint64_t a, char kind, fsq_set** out) {
  if (out == nullptr) return FSQ_ERR_INVALID;
  *out = nullptr;
  floorsq::SetKind parsed;
  if (!parse_kind(kind, &parsed)) {
    g_last_error = "floorsq: kind must be 'q', 'a' or 'r'";
    return FSQ_ERR_INVALID;
  }
  return guarded([&]() -> fsq_status {
    floorsq::ResidueSet set =
        parsed == floorsq::SetKind::quadratic_residues
            ? floorsq::quadratic_residues(a)
        : parsed == floorsq::SetKind::triple_sums
            ? floorsq::triple_sums(a)
            : floorsq::unique_representatives(a);
    *out = new fsq_set{std::move(set)};
    return FSQ_OK;
  });
}

void fsq_set_free(fsq_set* set) { delete set; }

uint64_t fsq_set_modulus(const fsq_set* set) { return set->impl.modulus; }

char fsq_set_kind(const fsq_set* set) {
  return static_cast<char>(set->impl.kind);
}

size_t fsq_set_size(const fsq_set* set) { return set->impl.elements.size(); }

int fsq_set_contains(const fsq_set* set, uint64_t value) {
  return set->impl.contains(value) ? 1 : 0;
}

size_t fsq_set_copy_elements(const fsq_set* set, uint64_t* buf, size_t cap) {
  size_t n = set->impl.elements.size();
  if (n > cap) n = cap;
  for (size_t i = 0; i < n; ++i) buf[i] = set->impl.elements[i];
  return n;
}

fsq_status fsq_check_run(uint64_t a, fsq_check** out) {
  if (out == nullptr) return FSQ_ERR_INVALID;
  *out = nullptr;
  return guarded([&]() -> fsq_status {
    floorsq::ResidueSet r_set = floorsq::unique_representatives(a);
    floorsq::HypothesisVerdict verdict = floorsq::mod8_witness_check(a, r_set);
    *out = new fsq_check{std::move(verdict)};
    return (*out)->impl.passed() ? FSQ_OK : FSQ_FAIL;
  });
}

void fsq_check_free(fsq_check* chk) { delete chk; }

fsq_check_outcome fsq_check_get_outcome(const fsq_check* chk) {
  switch (chk->impl.outcome) {
    case floorsq::HypothesisVerdict::Outcome::pass: return FSQ_CHECK_PASS;
    case floorsq::HypothesisVerdict::Outcome::fail: return FSQ_CHECK_FAIL;
    default: return FSQ_CHECK_EMPTY_R;
  }
}

int fsq_check_blocking_class(const fsq_check* chk) {
  return chk->impl.blocking_class;
}

fsq_status fsq_check_witness(const fsq_check* chk, uint64_t out_r[8]) {
  if (out_r == nullptr) return FSQ_ERR_INVALID;
  if (!chk->impl.witness) return FSQ_FAIL;
  for (size_t k = 0; k < 8; ++k)
    out_r[k] = chk->impl.witness->r_for_class[k];
  return FSQ_OK;
}

fsq_status fsq_rep_construct(uint64_t a, uint64_t n, fsq_rep** out) {
  if (out == nullptr) return FSQ_ERR_INVALID;
  *out = nullptr;
  return guarded([&]() -> fsq_status {
    std::optional<floorsq::Representation> rep =
        floorsq::construct_representation(a, n);
    if (!rep) return FSQ_FAIL;
    *out = new fsq_rep{*rep};
    return FSQ_OK;
  });
}

void fsq_rep_free(fsq_rep* rep) { delete rep; }

uint64_t fsq_rep_modulus(const fsq_rep* rep) { return rep->impl.modulus; }
uint64_t fsq_rep_target(const fsq_rep* rep) { return rep->impl.target; }
uint64_t fsq_rep_r(const fsq_rep* rep) { return rep->impl.r; }

void fsq_rep_triple(const fsq_rep* rep, uint64_t out[3]) {
  out[0] = rep->impl.triple.x;
  out[1] = rep->impl.triple.y;
  out[2] = rep->impl.triple.z;
}

void fsq_rep_floor_terms(const fsq_rep* rep, uint64_t out[3]) {
  auto terms = rep->impl.floor_terms();
  out[0] = terms[0];
  out[1] = terms[1];
  out[2] = terms[2];
}

fsq_status fsq_rep_scale(const fsq_rep* rep, uint64_t k, fsq_rep** out) {
  if (out == nullptr) return FSQ_ERR_INVALID;
  *out = nullptr;
  return guarded([&]() -> fsq_status {
    *out = new fsq_rep{floorsq::scale_by_square(rep->impl, k)};
    return FSQ_OK;
  });
}

fsq_status fsq_brute_force_represent(uint64_t a, uint64_t n,
                                     uint64_t search_bound, uint64_t out[3],
                                     int* found) {
  if (out == nullptr || found == nullptr) return FSQ_ERR_INVALID;
  return guarded([&]() -> fsq_status {
    std::optional<uint64_t> bound;
    if (search_bound != FSQ_BOUND_AUTO) bound = search_bound;
    std::optional<floorsq::SquareTriple> triple =
        floorsq::brute_force_represent(a, n, bound);
    *found = triple.has_value() ? 1 : 0;
    if (triple) {
      out[0] = triple->x;
      out[1] = triple->y;
      out[2] = triple->z;
    }
    return triple ? FSQ_OK : FSQ_FAIL;
  });
}

fsq_status fsq_verify_range(uint64_t a, uint64_t n_max, unsigned threads,
                            fsq_verify** out) {
  if (out == nullptr) return FSQ_ERR_INVALID;
  *out = nullptr;
  return guarded([&]() -> fsq_status {
    floorsq::VerifyReport report = floorsq::verify_range(a, n_max, threads);
    bool clean = report.failures.empty();
    *out = new fsq_verify{std::move(report)};
    return clean ? FSQ_OK : FSQ_FAIL;
  });
}

void fsq_verify_free(fsq_verify* rep) { delete rep; }

uint64_t fsq_verify_verified(const fsq_verify* rep) {
  return rep->impl.verified;
}

size_t fsq_verify_failure_count(const fsq_verify* rep) {
  return rep->impl.failures.size();
}

size_t fsq_verify_copy_failures(const fsq_verify* rep, uint64_t* buf,
                                size_t cap) {
  size_t n = rep->impl.failures.size();
  if (n > cap) n = cap;
  for (size_t i = 0; i < n; ++i) buf[i] = rep->impl.failures[i];
  return n;
}

fsq_status fsq_scan_moduli(uint64_t a_min, uint64_t a_max, unsigned threads,
                           fsq_scan** out) {
  if (out == nullptr) return FSQ_ERR_INVALID;
  *out = nullptr;
  return guarded([&]() -> fsq_status {
    *out = new fsq_scan{floorsq::scan_moduli(a_min, a_max, threads)};
    return FSQ_OK;
  });
}

fsq_status fsq_closure_list(const uint64_t* seeds,
                            const fsq_mod_status* seed_status, size_t n_seeds,
                            uint64_t bound, fsq_scan** out) {
  if (out == nullptr || (n_seeds > 0 && (seeds == nullptr ||
                                         seed_status == nullptr)))
    return FSQ_ERR_INVALID;
  *out = nullptr;
  return guarded([&]() -> fsq_status {
    std::vector<floorsq::ClosureSeed> parsed;
    parsed.reserve(n_seeds);
    for (size_t i = 0; i < n_seeds; ++i) {
      floorsq::ModulusStatus status;
      switch (seed_status[i]) {
        case FSQ_MOD_METHOD_PASS:
          status = floorsq::ModulusStatus::method_pass;
          break;
        case FSQ_MOD_ASSUMED:
          status = floorsq::ModulusStatus::assumed;
          break;
        default:
          throw std::invalid_argument(
              "floorsq: closure seeds must be method_pass or assumed");
      }
      parsed.push_back({seeds[i], status});
    }
    *out = new fsq_scan{floorsq::closure_list(std::move(parsed), bound)};
    return FSQ_OK;
  });
}

void fsq_scan_free(fsq_scan* scan) { delete scan; }

size_t fsq_scan_entry_count(const fsq_scan* scan) {
  return scan->impl.entries.size();
}

fsq_status fsq_scan_entry(const fsq_scan* scan, size_t index,
                          fsq_scan_entry_info* out) {
  if (out == nullptr || index >= scan->impl.entries.size())
    return FSQ_ERR_INVALID;
  const floorsq::ScanEntry& entry = scan->impl.entries[index];
  out->modulus = entry.modulus;
  switch (entry.status) {
    case floorsq::ModulusStatus::method_pass:
      out->status = FSQ_MOD_METHOD_PASS;
      break;
    case floorsq::ModulusStatus::method_fail:
      out->status = FSQ_MOD_METHOD_FAIL;
      break;
    case floorsq::ModulusStatus::assumed:
      out->status = FSQ_MOD_ASSUMED;
      break;
    case floorsq::ModulusStatus::closure_derived:
      out->status = FSQ_MOD_CLOSURE_DERIVED;
      break;
  }
  out->blocking_class = entry.blocking_class;
  out->empty_r = entry.empty_r ? 1 : 0;
  out->base = entry.base;
  out->k = entry.k;
  return FSQ_OK;
}

fsq_status fsq_scan_entry_r_set(const fsq_scan* scan, size_t index,
                                fsq_set** out) {
  if (out == nullptr || index >= scan->impl.entries.size())
    return FSQ_ERR_INVALID;
  return guarded([&]() -> fsq_status {
    *out = new fsq_set{scan->impl.entries[index].r_set};
    return FSQ_OK;
  });
}

fsq_status fsq_render_residues(uint64_t a, char kind, int as_json,
                               char** out) {
  floorsq::SetKind parsed;
  if (!parse_kind(kind, &parsed)) {
    if (out != nullptr) *out = nullptr;
    g_last_error = "floorsq: kind must be 'q', 'a' or 'r'";
    return FSQ_ERR_INVALID;
  }
  return finish_render(floorsq::render_residues(a, parsed), as_json, out);
}

fsq_status fsq_render_check(uint64_t a, int as_json, char** out) {
  return finish_render(floorsq::render_check(a), as_json, out);
}

fsq_status fsq_render_represent(uint64_t a, uint64_t n, int with_oracle,
                                int as_json, char** out) {
  return finish_render(floorsq::render_represent(a, n, with_oracle != 0),
                       as_json, out);
}

fsq_status fsq_render_scan(uint64_t a_min, uint64_t a_max,
                           const uint64_t* assume, size_t n_assume,
                           const uint64_t* closure_bound, unsigned threads,
                           int as_json, char** out) {
  if (n_assume > 0 && assume == nullptr) {
    if (out != nullptr) *out = nullptr;
    g_last_error = "floorsq: assume list is null";
    return FSQ_ERR_INVALID;
  }
  std::vector<uint64_t> assume_vec(assume, assume + n_assume);
  std::optional<uint64_t> bound;
  if (closure_bound != nullptr) bound = *closure_bound;
  return finish_render(
      floorsq::render_scan(a_min, a_max, std::move(assume_vec), bound,
                           threads),
      as_json, out);
}

fsq_status fsq_render_verify(uint64_t a, uint64_t n_max, unsigned threads,
                             int as_json, char** out) {
  return finish_render(floorsq::render_verify(a, n_max, threads), as_json,
                       out);
}

fsq_status fsq_render_reproduce(int as_json, char** out) {
  return finish_render(floorsq::render_reproduce(), as_json, out);
}

void fsq_string_free(char* s) { std::free(s); }

}  // extern "C"
