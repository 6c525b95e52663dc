// SPDX-License-Identifier: Apache-2.0
#include "core/render.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "core/reference.hpp"
#include "core/scanner.hpp"
#include "core/theorem.hpp"
#include "json.hpp"

namespace floorsq {
namespace {

using nlohmann::json;  // std::map-backed: keys serialize sorted

std::string set_notation(const std::vector<Natural>& elements) {
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(elements[i]);
  }
  return out + "}";
}

std::string joined(const std::vector<Natural>& values,
                   const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

char kind_letter(SetKind kind) { return static_cast<char>(kind); }

std::string set_line(char kind_upper, Natural a,
                     const std::vector<Natural>& elements) {
  return std::string(1, kind_upper) + "_" + std::to_string(a) + " = " +
         set_notation(elements);
}

const char* status_name(ModulusStatus s) {
  switch (s) {
    case ModulusStatus::method_pass: return "method_pass";
    case ModulusStatus::method_fail: return "method_fail";
    case ModulusStatus::assumed: return "assumed";
    case ModulusStatus::closure_derived: return "closure_derived";
  }
  return "?";
}

std::string envelope(const char* command, const json& parameters,
                     const json& result, EnvelopeStatus status) {
  json env;
  env["schema_version"] = "1";
  env["command"] = command;
  env["parameters"] = parameters;
  env["result"] = result;
  env["status"] = status == EnvelopeStatus::ok     ? "ok"
                  : status == EnvelopeStatus::fail ? "fail"
                                                   : "error";
  return env.dump();
}

// Runs the command body, routing exceptions into an "error" envelope so
// the caller still gets well-formed JSON plus a diagnostic.
Rendered run(const char* command, const json& parameters,
             const std::function<void(Rendered&, json&)>& body) {
  Rendered out;
  json result;
  try {
    body(out, result);
  } catch (const std::exception& e) {
    out.status = EnvelopeStatus::error;
    if (dynamic_cast<const internal_error*>(&e) != nullptr)
      out.fault = FaultKind::internal;
    else if (dynamic_cast<const std::overflow_error*>(&e) != nullptr)
      out.fault = FaultKind::overflow;
    else if (dynamic_cast<const std::invalid_argument*>(&e) != nullptr)
      out.fault = FaultKind::invalid_argument;
    else
      out.fault = FaultKind::internal;
    out.text.clear();
    out.message = e.what();
    result = json{{"message", out.message}};
  }
  out.json = envelope(command, parameters, result, out.status);
  return out;
}

json witness_json(const WitnessTable& table) {
  json arr = json::array();
  for (Natural r : table.r_for_class) arr.push_back(r);
  return arr;
}

std::string witness_text(const WitnessTable& table) {
  std::string out = "witness (k mod 8 -> r): ";
  for (int k = 0; k < 8; ++k) {
    if (k > 0) out += ", ";
    out += std::to_string(k) + " -> " +
           std::to_string(table.r_for_class[static_cast<std::size_t>(k)]);
  }
  return out;
}

json entry_json(const ScanEntry& entry) {
  json e;
  e["a"] = entry.modulus;
  e["status"] = status_name(entry.status);
  e["r_set"] = entry.r_set.elements;
  if (entry.status == ModulusStatus::method_fail) {
    e["blocking_class"] = entry.blocking_class;
    if (entry.empty_r) e["empty_r"] = true;
  }
  if (entry.status == ModulusStatus::closure_derived) {
    e["base"] = entry.base;
    e["k"] = entry.k;
  }
  if (entry.witness) e["witness"] = witness_json(*entry.witness);
  return e;
}

std::string entry_text(const ScanEntry& entry) {
  std::string line = "a = " + std::to_string(entry.modulus) + ": ";
  switch (entry.status) {
    case ModulusStatus::method_pass:
      line += "PASS";
      break;
    case ModulusStatus::method_fail:
      line += entry.empty_r
                  ? "FAIL (R_" + std::to_string(entry.modulus) + " is empty)"
                  : "FAIL (blocking class k = " +
                        std::to_string(entry.blocking_class) + ")";
      break;
    case ModulusStatus::assumed:
      line += "assumed";
      break;
    case ModulusStatus::closure_derived:
      line += "closure " + std::to_string(entry.base) + " * " +
              std::to_string(entry.k) + "^2";
      break;
  }
  if (entry.status == ModulusStatus::method_pass ||
      entry.status == ModulusStatus::method_fail)
    line += ", " + set_line('R', entry.modulus, entry.r_set.elements);
  return line;
}

json triple_json(const SquareTriple& t) {
  return json::array({t.x, t.y, t.z});
}

std::string power_sum(const SquareTriple& t) {
  return std::to_string(t.x) + "^2 + " + std::to_string(t.y) + "^2 + " +
         std::to_string(t.z) + "^2";
}

}  // namespace

Rendered render_residues(Natural a, SetKind kind) {
  json parameters{{"a", a}, {"kind", std::string(1, kind_letter(kind))}};
  return run("residues", parameters, [&](Rendered& out, json& result) {
    ResidueSet set = kind == SetKind::quadratic_residues
                         ? quadratic_residues(a)
                     : kind == SetKind::triple_sums
                         ? triple_sums(a)
                         : unique_representatives(a);
    char upper = static_cast<char>(kind_letter(kind) - 'a' + 'A');
    out.text = set_line(upper, a, set.elements) + "\n";
    result["modulus"] = a;
    result["kind"] = std::string(1, kind_letter(kind));
    result["elements"] = set.elements;
    out.status = EnvelopeStatus::ok;
  });
}

Rendered render_check(Natural a) {
  json parameters{{"a", a}};
  return run("check", parameters, [&](Rendered& out, json& result) {
    ResidueSet r_set = unique_representatives(a);
    HypothesisVerdict verdict = mod8_witness_check(a, r_set);
    result["modulus"] = a;
    result["r_set"] = r_set.elements;
    std::string r_line = set_line('R', a, r_set.elements);
    switch (verdict.outcome) {
      case HypothesisVerdict::Outcome::pass:
        result["outcome"] = "pass";
        result["witness"] = witness_json(*verdict.witness);
        out.text = "a = " + std::to_string(a) + ": PASS\n" + r_line + "\n" +
                   witness_text(*verdict.witness) + "\n";
        out.status = EnvelopeStatus::ok;
        break;
      case HypothesisVerdict::Outcome::fail:
        result["outcome"] = "fail";
        result["blocking_class"] = verdict.blocking_class;
        out.text = "a = " + std::to_string(a) + ": FAIL (blocking class k = " +
                   std::to_string(verdict.blocking_class) + ")\n" + r_line +
                   "\n";
        out.status = EnvelopeStatus::fail;
        break;
      case HypothesisVerdict::Outcome::empty_r:
        result["outcome"] = "empty_r";
        out.text = "a = " + std::to_string(a) + ": FAIL (R_" +
                   std::to_string(a) + " is empty)\n" + r_line + "\n";
        out.status = EnvelopeStatus::fail;
        break;
    }
  });
}

Rendered render_represent(Natural a, Natural n, bool with_oracle) {
  json parameters{{"a", a}, {"n", n}, {"oracle", with_oracle}};
  return run("represent", parameters, [&](Rendered& out, json& result) {
    ResidueSet r_set = unique_representatives(a);
    std::optional<Representation> rep = construct_representation(a, n, r_set);
    result["modulus"] = a;
    result["n"] = n;

    std::optional<SquareTriple> oracle;
    if (with_oracle) oracle = brute_force_represent(a, n);

    if (rep) {
      auto floors = rep->floor_terms();
      result["r"] = rep->r;
      result["sum_of_squares"] = rep->triple.sum_of_squares();
      result["triple"] = triple_json(rep->triple);
      result["floors"] = json::array({floors[0], floors[1], floors[2]});
      const SquareTriple& t = rep->triple;
      std::string as = std::to_string(a);
      out.text = "a = " + as + ", n = " + std::to_string(n) + "\n" +
                 "r = " + std::to_string(rep->r) + ": " + as + "*" +
                 std::to_string(n) + " + " + std::to_string(rep->r) + " = " +
                 std::to_string(t.sum_of_squares()) + " = " + power_sum(t) +
                 "\n" + "n = floor(" + std::to_string(t.x) + "^2/" + as +
                 ") + floor(" + std::to_string(t.y) + "^2/" + as +
                 ") + floor(" + std::to_string(t.z) + "^2/" + as + ") = " +
                 std::to_string(floors[0]) + " + " + std::to_string(floors[1]) +
                 " + " + std::to_string(floors[2]) + " = " +
                 std::to_string(n) + "\n";
      out.status = EnvelopeStatus::ok;
    } else {
      result["r_set"] = r_set.elements;
      out.text = "a = " + std::to_string(a) + ", n = " + std::to_string(n) +
                 ": no admissible r in " +
                 set_line('R', a, r_set.elements) + "\n";
      out.status = EnvelopeStatus::fail;
    }

    if (with_oracle) {
      if (oracle) {
        std::array<Natural, 3> of{oracle->x * oracle->x / a,
                                  oracle->y * oracle->y / a,
                                  oracle->z * oracle->z / a};
        result["oracle"] = {{"triple", triple_json(*oracle)},
                            {"floors", json::array({of[0], of[1], of[2]})}};
        out.text += "oracle: triple (" + std::to_string(oracle->x) + ", " +
                    std::to_string(oracle->y) + ", " +
                    std::to_string(oracle->z) + "), floor terms " +
                    std::to_string(of[0]) + " + " + std::to_string(of[1]) +
                    " + " + std::to_string(of[2]) + " = " +
                    std::to_string(n) + "\n";
      } else {
        result["oracle"] = nullptr;
        out.text += "oracle: no triple within the search bound\n";
      }
    }
  });
}

Rendered render_scan(Natural a_min, Natural a_max,
                     std::vector<Natural> assume,
                     std::optional<Natural> closure_bound, unsigned threads) {
  json parameters{{"a_min", a_min}, {"a_max", a_max}, {"assume", assume}};
  if (closure_bound) parameters["closure_bound"] = *closure_bound;
  return run("scan", parameters, [&](Rendered& out, json& result) {
    ScanReport scan = scan_moduli(a_min, a_max, threads);
    result["a_min"] = a_min;
    result["a_max"] = a_max;

    std::ostringstream text;
    text << "scan a = " << a_min << ".." << a_max << "\n";
    bool all_pass = true;
    std::vector<Natural> passes;
    std::vector<Natural> beyond_reference;
    const std::vector<Natural>& reference = reference_moduli();
    json entries = json::array();
    for (const ScanEntry& entry : scan.entries) {
      entries.push_back(entry_json(entry));
      text << entry_text(entry) << "\n";
      if (entry.status == ModulusStatus::method_pass) {
        passes.push_back(entry.modulus);
        if (!std::binary_search(reference.begin(), reference.end(),
                                entry.modulus))
          beyond_reference.push_back(entry.modulus);
      } else {
        all_pass = false;
      }
    }
    result["entries"] = entries;
    result["beyond_reference"] = beyond_reference;
    text << "method passes: " << joined(passes) << "\n";
    if (!beyond_reference.empty())
      text << "method passes outside the reference table: "
           << joined(beyond_reference) << "\n";

    if (closure_bound) {
      std::vector<ClosureSeed> seeds;
      for (Natural v : assume) seeds.push_back({v, ModulusStatus::assumed});
      for (Natural v : passes) seeds.push_back({v, ModulusStatus::method_pass});
      ScanReport closure = closure_list(std::move(seeds), *closure_bound);
      json closure_json;
      closure_json["bound"] = *closure_bound;
      json closure_entries = json::array();
      std::vector<Natural> values;
      text << "closure (bound = " << *closure_bound << "):\n";
      for (const ScanEntry& entry : closure.entries) {
        values.push_back(entry.modulus);
        json e;
        e["a"] = entry.modulus;
        e["status"] = status_name(entry.status);
        if (entry.status == ModulusStatus::closure_derived) {
          e["base"] = entry.base;
          e["k"] = entry.k;
        }
        closure_entries.push_back(e);
        switch (entry.status) {
          case ModulusStatus::method_pass:
            text << "a = " << entry.modulus << ": method pass\n";
            break;
          case ModulusStatus::assumed:
            text << "a = " << entry.modulus << ": assumed\n";
            break;
          case ModulusStatus::closure_derived:
            text << "a = " << entry.modulus << ": closure " << entry.base
                 << " * " << entry.k << "^2\n";
            break;
          case ModulusStatus::method_fail:
            break;  // closure reports never contain fails
        }
      }
      closure_json["entries"] = closure_entries;
      closure_json["values"] = values;
      result["closure"] = closure_json;
      text << "values (" << values.size() << "): " << joined(values) << "\n";
    }

    out.text = text.str();
    out.status = all_pass ? EnvelopeStatus::ok : EnvelopeStatus::fail;
  });
}

Rendered render_verify(Natural a, Natural n_max, unsigned threads) {
  json parameters{{"a", a}, {"n_max", n_max}};
  return run("verify", parameters, [&](Rendered& out, json& result) {
    VerifyReport report = verify_range(a, n_max, threads);
    result["modulus"] = a;
    result["n_max"] = n_max;
    result["verified"] = report.verified;
    result["failures"] = report.failures;
    Natural total = n_max + 1;
    out.text = "a = " + std::to_string(a) + ": " +
               std::to_string(report.verified) + "/" + std::to_string(total) +
               " verified\n";
    if (report.failures.empty()) {
      out.status = EnvelopeStatus::ok;
    } else {
      out.text += "failures (" + std::to_string(report.failures.size()) +
                  "): " + joined(report.failures) + "\n";
      out.status = EnvelopeStatus::fail;
    }
  });
}

Rendered render_reproduce() {
  return run("reproduce", json::object(), [&](Rendered& out, json& result) {
    ReproduceBundle computed = computed_bundle();
    ReproduceBundle reference = embedded_bundle();
    std::optional<std::string> divergence =
        first_divergence(computed, reference);

    std::ostringstream text;
    json r_table = json::array();
    text << "R table:\n";
    for (const ReferenceRow& row : computed.r_table) {
      r_table.push_back({{"a", row.modulus}, {"r_set", row.r_set}});
      text << "a = " << row.modulus << ": " << set_notation(row.r_set) << "\n";
    }
    json witnesses = json::array();
    text << "witness tables (k mod 8 -> r):\n";
    for (const WitnessTable& table : computed.witnesses) {
      witnesses.push_back(
          {{"a", table.modulus}, {"witness", witness_json(table)}});
      std::vector<Natural> values(table.r_for_class.begin(),
                                  table.r_for_class.end());
      text << "a = " << table.modulus << ": " << joined(values) << "\n";
    }
    json closure = json::array();
    text << "closure up to 120 (" << computed.closure.size() << " values):\n";
    for (const ClosureRef& ref : computed.closure) {
      json e{{"a", ref.modulus}, {"status", status_name(ref.status)}};
      if (ref.status == ModulusStatus::closure_derived) {
        e["base"] = ref.base;
        e["k"] = ref.k;
        text << "a = " << ref.modulus << ": closure " << ref.base << " * "
             << ref.k << "^2\n";
      } else {
        text << "a = " << ref.modulus << ": "
             << (ref.status == ModulusStatus::assumed ? "assumed"
                                                      : "method pass")
             << "\n";
      }
      closure.push_back(e);
    }

    result["r_table"] = r_table;
    result["witnesses"] = witnesses;
    result["closure"] = closure;
    result["match"] = !divergence.has_value();
    if (divergence) {
      result["divergence"] = *divergence;
      text << "reproduce: MISMATCH at " << *divergence << "\n";
      out.status = EnvelopeStatus::fail;
    } else {
      text << "reproduce: all artifacts match the embedded reference data\n";
      out.status = EnvelopeStatus::ok;
    }
    out.text = text.str();
  });
}

}  // namespace floorsq
