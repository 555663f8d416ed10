#pragma once

#include "hyperconv/constructions.hpp"
#include "hyperconv/ramsey.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace hyperconv {

// Construction specs are JSON objects {"builtin": name, "params": {...}};
// parameters may also sit at the top level. Every failure is a SpecError
// or the builder's own error.
HypergroupDescriptor descriptor_from_spec(const nlohmann::json& spec);

// "Z", "ZxZ", "Z+", "NxN", "ZxN+", "ZxNmax", "max", "S3", "V4", "C4",
// "S_3", or {"names": [...], "table": [[...]], "identity": i | null}.
CarrierAlgebra algebra_from_spec(const nlohmann::json& spec);

// {"action": "sign" | "klein" | "swap" | "reflect" | "trivial", "carrier": algebra}
FiniteAction action_from_spec(const nlohmann::json& spec);

// Elements as in element_from_json; strings name elements of a finite table.
Element element_from_spec(const CarrierAlgebra& a, const nlohmann::json& j);

Coloring coloring_from_spec(const nlohmann::json& spec);
Criterion criterion_from_spec(const nlohmann::json& spec);
Recurrence recurrence_from_spec(const nlohmann::json& spec);

// Descriptor summary; finite carriers carry their full convolution table,
// infinite ones the table on window(radius).
nlohmann::json descriptor_to_json(const HypergroupDescriptor& k, int radius);

struct ExperimentSpec {
  nlohmann::json hypergroup;
  Coloring coloring;
  Criterion criterion;
  int depth;
  int window;  // search window {1..window} (or window(radius) for labelled carriers)
};

// {"hypergroup": spec, "coloring": {...}, "criterion": {...}, "depth": d, "window": w}
ExperimentSpec experiment_from_spec(const nlohmann::json& spec);

// Runs the search an experiment spec describes. Semigroup specs without an
// identity ({"builtin": "semigroup", ...} on S_k) use the FP search.
ExperimentReport run_experiment(const ExperimentSpec& spec);

std::uint64_t fnv1a64(std::string_view bytes);
// 16 hex digits of fnv1a64 over the canonical (sorted-key, compact) dump.
std::string spec_hash(const nlohmann::json& spec);

}  // namespace hyperconv
