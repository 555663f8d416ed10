#pragma once

#include "hyperconv/measure.hpp"
#include "hyperconv/rational.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

#ifndef HYPERCONV_GOLDEN
#error "HYPERCONV_GOLDEN must name tests/golden/golden.json"
#endif

namespace testing_support {

// Frozen values from tests/oracle/generate_golden.py.
inline const nlohmann::json& golden() {
  static const nlohmann::json data = [] {
    std::ifstream in(HYPERCONV_GOLDEN);
    if (!in) throw std::runtime_error("cannot open " HYPERCONV_GOLDEN);
    return nlohmann::json::parse(in);
  }();
  return data;
}

inline hyperconv::Rational q(const std::string& s) { return hyperconv::parse_rational(s); }

inline hyperconv::FiniteMeasure m(const nlohmann::json& j) { return hyperconv::measure_from_json(j); }

}  // namespace testing_support
