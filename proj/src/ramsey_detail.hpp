#pragma once

#include "hyperconv/ramsey.hpp"

namespace hyperconv::detail {

std::vector<Rational> class_masses(const FiniteMeasure& mu, const Coloring& coloring);

// Shared by check_criterion and the searches: all F of size <= depth over xs.
ExperimentReport evaluate(const std::string& name, const ConvolutionRule& rule, const Elements& xs,
                          const Coloring& coloring, int depth, const Criterion& criterion);

}  // namespace hyperconv::detail
