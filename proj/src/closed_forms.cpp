#include "hyperconv/constructions.hpp"
#include "hyperconv/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace hyperconv {

namespace {

HypergroupDescriptor::Parts hermitian_on_nonneg(std::string name) {
  HypergroupDescriptor::Parts parts;
  parts.name = std::move(name);
  parts.carrier = "Z+";
  parts.identity = nn(0);
  parts.involution = [](const Element& x) { return x; };
  parts.involution_kind = "identity";
  parts.claims = {Claim::Hermitian, Claim::Hypergroup};
  parts.contains = [](const Element& x) { return x.kind() == Element::Kind::NonNeg; };
  return parts;
}

}  // namespace

HypergroupDescriptor cp1() {
  auto parts = hermitian_on_nonneg("cp1");
  parts.rule = [](const Element& a, const Element& b) {
    const std::int64_t m = a.as_nonneg();
    const std::int64_t n = b.as_nonneg();
    if (m == 0 || n == 0) return point_mass(nn(m + n));
    const Rational half = make_rational(1, 2);
    return FiniteMeasure({{nn(std::llabs(n - m)), half}, {nn(n + m), half}});
  };
  parts.polynomial = true;
  parts.spec = {{"builtin", "cp1"}};
  return HypergroupDescriptor(std::move(parts));
}

HypergroupDescriptor cp2() {
  auto parts = hermitian_on_nonneg("cp2");
  parts.rule = [](const Element& a, const Element& b) {
    const std::int64_t m = a.as_nonneg();
    const std::int64_t n = b.as_nonneg();
    const std::int64_t diff = std::llabs(m - n);
    const Rational denom = make_rational((m + 1) * (n + 1));
    FiniteMeasure::Weights w;
    for (std::int64_t k = 0; k <= std::min(m, n); ++k)
      w.emplace_hint(w.end(), nn(diff + 2 * k), Rational(make_rational(diff + 2 * k + 1) / denom));
    return FiniteMeasure(std::move(w));
  };
  parts.polynomial = true;
  parts.spec = {{"builtin", "cp2"}};
  return HypergroupDescriptor(std::move(parts));
}

HypergroupDescriptor polynomial_hypergroup(const Recurrence& rec, int n_max) {
  auto table = std::make_shared<const LinearizationTable>(linearize(rec, n_max));
  auto parts = hermitian_on_nonneg("polynomial:" + rec.name);
  parts.rule = [table](const Element& a, const Element& b) {
    const auto& row = table->row(static_cast<int>(a.as_nonneg()), static_cast<int>(b.as_nonneg()));
    FiniteMeasure::Weights w;
    for (std::size_t i = 0; i < row.g.size(); ++i)
      if (sgn(row.g[i]) != 0) w.emplace_hint(w.end(), nn(row.k_lo + static_cast<std::int64_t>(i)), row.g[i]);
    return FiniteMeasure(std::move(w));
  };
  parts.contains = [n_max](const Element& x) {
    return x.kind() == Element::Kind::NonNeg && x.as_nonneg() <= n_max;
  };
  parts.polynomial = true;
  parts.linearization = table;
  parts.spec = {{"builtin", "polynomial"}, {"params", {{"family", rec.name}, {"n_max", n_max}}}};
  return HypergroupDescriptor(std::move(parts));
}

HypergroupDescriptor dunkl_ramirez(const Rational& a) {
  if (a <= 0 || a > make_rational(1, 2))
    throw ParamRange("dunkl_ramirez needs 0 < a <= 1/2, got " + to_fraction_string(a));
  auto parts = hermitian_on_nonneg("dunkl_ramirez(" + to_fraction_string(a) + ")");
  parts.rule = [a](const Element& x, const Element& y) {
    const std::int64_t m = x.as_nonneg();
    const std::int64_t n = y.as_nonneg();
    if (m != n || n == 0) return point_mass(nn(std::max(m, n)));
    const Rational one_minus_a = 1 - a;
    FiniteMeasure::Weights w;
    w.emplace(nn(0), Rational(pow(a, static_cast<unsigned>(n)) / one_minus_a));
    for (std::int64_t k = 1; k < n; ++k) w.emplace_hint(w.end(), nn(k), pow(a, static_cast<unsigned>(n - k)));
    w.emplace_hint(w.end(), nn(n), Rational((1 - 2 * a) / one_minus_a));
    return FiniteMeasure(std::move(w));
  };
  parts.spec = {{"builtin", "dunkl_ramirez"}, {"params", {{"a", to_fraction_string(a)}}}};
  return HypergroupDescriptor(std::move(parts));
}

}  // namespace hyperconv
