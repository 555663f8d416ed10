#include "hyperconv/constructions.hpp"
#include "hyperconv/errors.hpp"

#include <algorithm>

namespace hyperconv {

namespace {

Element translate(const HypergroupDescriptor& k, const Element& x, const Element& z) {
  const FiniteMeasure xz = k.convolve(x, z);
  if (!xz.is_point_mass())
    throw NotCentral(to_string(x) + " * " + to_string(z) + " = " + to_string(xz) + " is not a point mass");
  return xz.weights().begin()->first;
}

FiniteMeasure push_forward(const HypergroupDescriptor& k, const Elements& h, const FiniteMeasure& mu) {
  FiniteMeasure::Weights w;
  for (const auto& [x, weight] : mu.weights()) w[quotient_class(k, h, x)] += weight;
  return FiniteMeasure(std::move(w));
}

}  // namespace

Element quotient_class(const HypergroupDescriptor& k, const Elements& h, const Element& x) {
  Elements members;
  members.reserve(h.size());
  for (const auto& z : h) members.push_back(translate(k, x, z));
  return Element::coset(std::move(members));
}

HypergroupDescriptor ross_quotient(const HypergroupDescriptor& k, const Elements& h, const Window& window) {
  if (h.empty()) throw NotSubgroup("subgroup is empty");
  const AxiomReport comm = check_commutativity(k, window);
  if (!comm.passed()) {
    const auto& cx = comm.checks.front().counterexample;
    throw NotCommutative(k.name() + " is not commutative on " + window.describe() +
                         (cx ? ": " + cx->detail + " at " + to_string(cx->elements[0]) + "," + to_string(cx->elements[1])
                             : std::string()));
  }
  if (std::find(h.begin(), h.end(), k.identity()) == h.end())
    throw NotSubgroup("subgroup misses the identity " + to_string(k.identity()));

  Elements probe = window.elements();
  for (const auto& z : h)
    if (!window.contains(z)) probe.push_back(z);
  const std::set<Element> z_k = center(k, Window(probe));
  for (const auto& z : h)
    if (!z_k.contains(z)) throw NotCentral(to_string(z) + " is not in the center on " + window.describe());
  for (const auto& a : h) {
    for (const auto& b : h) {
      const Element ab = translate(k, a, b);
      if (std::find(h.begin(), h.end(), ab) == h.end())
        throw NotSubgroup(to_string(a) + " * " + to_string(b) + " = " + to_string(ab) + " leaves the subgroup");
    }
    if (k.has_involution() && std::find(h.begin(), h.end(), k.involute(a)) == h.end())
      throw NotSubgroup("involution of " + to_string(a) + " leaves the subgroup");
  }

  HypergroupDescriptor::Parts parts;
  parts.name = "ross_quotient(" + k.name() + ")";
  parts.carrier = k.carrier() + "//H";
  parts.identity = quotient_class(k, h, k.identity());
  parts.contains = [k, h](const Element& x) {
    if (x.kind() != Element::Kind::Coset) return false;
    const Elements& members = x.members();
    if (members.empty() || !k.contains(members.front())) return false;
    return quotient_class(k, h, members.front()) == x;
  };
  parts.window = [k, h](int radius) {
    Elements out;
    for (const auto& x : k.window(radius)) out.push_back(quotient_class(k, h, x));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  if (k.is_finite()) parts.finite_carrier = parts.window(0);
  parts.rule = [k, h](const Element& x, const Element& y) {
    const FiniteMeasure result = push_forward(k, h, k.convolve(x.representative(), y.representative()));
    for (const auto& xs : x.members())
      for (const auto& yt : y.members()) {
        const FiniteMeasure other = push_forward(k, h, k.convolve(xs, yt));
        if (other != result)
          throw RepresentativeDependence("pushed-forward " + to_string(xs) + " * " + to_string(yt) + " = " +
                                         to_string(other) + " differs from " + to_string(result));
      }
    return result;
  };
  if (k.has_involution()) {
    parts.involution = [k, h](const Element& x) { return quotient_class(k, h, k.involute(x.representative())); };
    parts.involution_kind = k.involution_kind();
  }
  parts.claims = k.claims();
  parts.claims.insert(Claim::Commutative);
  nlohmann::json subgroup = nlohmann::json::array();
  for (const auto& z : h) subgroup.push_back(to_json(z));
  parts.spec = {{"builtin", "ross_quotient"}, {"params", {{"base", k.spec()}, {"subgroup", subgroup}}}};
  return HypergroupDescriptor(std::move(parts));
}

}  // namespace hyperconv
