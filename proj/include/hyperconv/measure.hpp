#pragma once

#include "hyperconv/element.hpp"
#include "hyperconv/rational.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <set>

namespace hyperconv {

// A finitely supported probability measure with exact weights. Zero weights
// are stripped on construction; the remaining weights must be positive and
// sum to exactly 1, otherwise construction throws MeasureError.
class FiniteMeasure {
 public:
  using Weights = std::map<Element, Rational>;

  explicit FiniteMeasure(Weights weights);

  static FiniteMeasure point(Element x);

  const Weights& weights() const { return weights_; }
  Rational weight(const Element& x) const;
  std::size_t size() const { return weights_.size(); }
  bool is_point_mass() const { return weights_.size() == 1; }

  friend bool operator==(const FiniteMeasure&, const FiniteMeasure&) = default;

 private:
  Weights weights_;
};

using ConvolutionRule = std::function<FiniteMeasure(const Element&, const Element&)>;

FiniteMeasure point_mass(Element x);

// Bilinear extension of `rule`: sum over x, y of mu(x) nu(y) rule(x, y).
FiniteMeasure convolve_measures(const FiniteMeasure& mu, const FiniteMeasure& nu, const ConvolutionRule& rule);

// Convex combination a*mu + (1-a)*nu, a in [0, 1].
FiniteMeasure mix(const Rational& a, const FiniteMeasure& mu, const FiniteMeasure& nu);

Rational mass(const FiniteMeasure& mu, const std::set<Element>& s);
Rational mass_if(const FiniteMeasure& mu, const std::function<bool(const Element&)>& pred);

std::set<Element> support(const FiniteMeasure& mu);

std::string to_string(const FiniteMeasure& mu);
std::ostream& operator<<(std::ostream& os, const FiniteMeasure& mu);

// {"weights": [{"elem": ..., "num": int, "den": int}, ...]} in canonical order.
nlohmann::json to_json(const FiniteMeasure& mu);
FiniteMeasure measure_from_json(const nlohmann::json& j);

}  // namespace hyperconv
