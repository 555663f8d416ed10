#include "hyperconv/measure.hpp"

#include "hyperconv/errors.hpp"

#include <ostream>

namespace hyperconv {

FiniteMeasure::FiniteMeasure(Weights weights) {
  Rational total(0);
  for (auto it = weights.begin(); it != weights.end();) {
    if (sgn(it->second) == 0) {
      it = weights.erase(it);
      continue;
    }
    if (sgn(it->second) < 0)
      throw MeasureError("negative weight " + to_fraction_string(it->second) + " at " + to_string(it->first));
    it->second.canonicalize();
    total += it->second;
    ++it;
  }
  if (total != 1) throw MeasureError("weights sum to " + to_fraction_string(total) + ", not 1");
  weights_ = std::move(weights);
}

FiniteMeasure FiniteMeasure::point(Element x) { return FiniteMeasure(Weights{{std::move(x), Rational(1)}}); }

Rational FiniteMeasure::weight(const Element& x) const {
  auto it = weights_.find(x);
  return it == weights_.end() ? Rational(0) : it->second;
}

FiniteMeasure point_mass(Element x) { return FiniteMeasure::point(std::move(x)); }

FiniteMeasure convolve_measures(const FiniteMeasure& mu, const FiniteMeasure& nu, const ConvolutionRule& rule) {
  FiniteMeasure::Weights acc;
  Rational product;
  for (const auto& [x, wx] : mu.weights()) {
    for (const auto& [y, wy] : nu.weights()) {
      const FiniteMeasure xy = rule(x, y);
      for (const auto& [z, wz] : xy.weights()) {
        product = wx * wy * wz;
        acc[z] += product;
      }
    }
  }
  return FiniteMeasure(std::move(acc));
}

FiniteMeasure mix(const Rational& a, const FiniteMeasure& mu, const FiniteMeasure& nu) {
  if (a < 0 || a > 1) throw MeasureError("mixing coefficient outside [0,1]: " + to_fraction_string(a));
  FiniteMeasure::Weights acc;
  for (const auto& [x, w] : mu.weights()) acc[x] += a * w;
  const Rational b = 1 - a;
  for (const auto& [x, w] : nu.weights()) acc[x] += b * w;
  return FiniteMeasure(std::move(acc));
}

Rational mass(const FiniteMeasure& mu, const std::set<Element>& s) {
  Rational total(0);
  for (const auto& [x, w] : mu.weights())
    if (s.contains(x)) total += w;
  return total;
}

Rational mass_if(const FiniteMeasure& mu, const std::function<bool(const Element&)>& pred) {
  Rational total(0);
  for (const auto& [x, w] : mu.weights())
    if (pred(x)) total += w;
  return total;
}

std::set<Element> support(const FiniteMeasure& mu) {
  std::set<Element> out;
  for (const auto& [x, w] : mu.weights()) out.insert(out.end(), x);
  return out;
}

std::string to_string(const FiniteMeasure& mu) {
  std::string out;
  for (const auto& [x, w] : mu.weights()) {
    if (!out.empty()) out += " + ";
    out += to_fraction_string(w) + " d" + to_string(x);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const FiniteMeasure& mu) { return os << to_string(mu); }

namespace {

// Integers that fit in 64 bits serialize as JSON numbers; larger ones as
// decimal strings so no precision is lost.
nlohmann::json json_integer(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return integer_string(z);
}

mpz_class integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(j.dump());
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    if (r.get_den() != 1) throw SpecError("expected an integer, got " + j.dump());
    return r.get_num();
  }
  throw SpecError("expected an integer, got " + j.dump());
}

}  // namespace

nlohmann::json to_json(const FiniteMeasure& mu) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [x, w] : mu.weights()) {
    entries.push_back({{"elem", to_json(x)},
                       {"num", json_integer(w.get_num())},
                       {"den", json_integer(w.get_den())}});
  }
  return {{"weights", entries}};
}

FiniteMeasure measure_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("weights")) throw SpecError("measure JSON needs a 'weights' array");
  FiniteMeasure::Weights weights;
  for (const auto& entry : j.at("weights")) {
    const Element x = element_from_json(entry.at("elem"));
    const mpz_class num = integer_from_json(entry.at("num"));
    const mpz_class den = integer_from_json(entry.at("den"));
    if (den <= 0) throw SpecError("measure weight with non-positive denominator");
    Rational w(num, den);
    w.canonicalize();
    if (weights.contains(x)) throw SpecError("duplicate element in measure JSON: " + to_string(x));
    weights.emplace(x, w);
  }
  try {
    return FiniteMeasure(std::move(weights));
  } catch (const MeasureError& e) {
    throw SpecError(e.what());
  }
}

}  // namespace hyperconv
