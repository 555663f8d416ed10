#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hyperconv {

struct Reproduction {
  std::string name;
  bool passed = false;
  nlohmann::json details;  // every exact value, as "num/den" strings
  std::string summary;     // one line
};

// cp2-mod3, cp2-alpha, orbit-cp1, quotient-table, linearization-match,
// recurrent, orbit-bound.
const std::vector<std::string>& reproduction_names();

// Throws SpecError for an unknown name. `seed` drives the randomized
// scenarios (recurrent, orbit-bound) and is recorded in the details.
Reproduction reproduce(const std::string& name, std::uint64_t seed);

std::string to_markdown(const Reproduction& r);

}  // namespace hyperconv
