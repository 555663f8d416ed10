#include "hyperconv/constructions.hpp"
#include "hyperconv/errors.hpp"

#include <algorithm>
#include <set>

namespace hyperconv {

namespace {

constexpr int kActionCheckRadius = 3;

Elements dedupe(Elements xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

FiniteMeasure averaged(const std::map<Element, int>& counts, int total) {
  FiniteMeasure::Weights w;
  for (const auto& [x, count] : counts) w.emplace_hint(w.end(), x, make_rational(count, total));
  return FiniteMeasure(std::move(w));
}

// Membership for orbit labels of an action: every member is in the carrier
// and the label is the full orbit of its representative.
std::function<bool(const Element&)> orbit_membership(const FiniteAction& action) {
  return [action](const Element& x) {
    if (x.kind() != Element::Kind::Orbit) return false;
    const Elements& members = x.members();
    if (members.empty() || !action.carrier().contains(members.front())) return false;
    return action.orbit_members(members.front()) == members;
  };
}

std::function<Elements(int)> orbit_window(const FiniteAction& action) {
  return [action](int radius) {
    Elements out;
    for (const auto& x : action.carrier().sample(radius)) out.push_back(action.orbit_of(x));
    return dedupe(std::move(out));
  };
}

std::shared_ptr<const OrbitStructure> orbit_structure(const FiniteAction& action, OrbitStructure::Mode mode) {
  return std::make_shared<const OrbitStructure>(
      OrbitStructure{mode, action.order(), action.carrier(), [action](const Element& x) { return action.orbit_of(x); }});
}

HypergroupDescriptor::Parts orbit_parts(const FiniteAction& action, const std::string& builtin) {
  const CarrierAlgebra& g = action.carrier();
  if (!g.identity()) throw NoIdentity(g.name() + " has no identity");
  action.verify_action(g.sample(kActionCheckRadius));
  HypergroupDescriptor::Parts parts;
  parts.name = builtin + "(" + g.name() + "/" + action.name() + ")";
  parts.carrier = g.name() + "^H";
  parts.identity = action.orbit_of(*g.identity());
  parts.contains = orbit_membership(action);
  parts.window = orbit_window(action);
  if (g.is_finite()) {
    Elements all;
    for (const auto& x : g.elements()) all.push_back(action.orbit_of(x));
    parts.finite_carrier = dedupe(std::move(all));
  }
  parts.spec = {{"builtin", builtin}, {"params", {{"carrier", g.name()}, {"action", action.name()}}}};
  return parts;
}

void check_finite_subgroup(const CarrierAlgebra& g, const Elements& h) {
  if (h.empty()) throw NotSubgroup("subgroup is empty");
  if (!g.identity()) throw NoIdentity(g.name() + " has no identity");
  if (!g.has_inverse()) throw NotSubgroup(g.name() + " is not a group");
  verify_subgroup(g, h);
}

Element left_coset(const CarrierAlgebra& g, const Elements& h, const Element& x) {
  Elements members;
  for (const auto& z : h) members.push_back(g.multiply(x, z));
  return Element::coset(std::move(members));
}

Element double_coset(const CarrierAlgebra& g, const Elements& h, const Element& x) {
  Elements members;
  for (const auto& a : h)
    for (const auto& b : h) members.push_back(g.multiply(g.multiply(a, x), b));
  return Element::coset(std::move(members));
}

nlohmann::json names_json(const CarrierAlgebra& g, const Elements& h) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : h) out.push_back(g.is_finite() ? nlohmann::json(g.element_name(x)) : to_json(x));
  return out;
}

HypergroupDescriptor::Parts coset_parts(const CarrierAlgebra& g, const Elements& h, const std::string& builtin,
                                        std::function<Element(const Element&)> label) {
  check_finite_subgroup(g, h);
  HypergroupDescriptor::Parts parts;
  parts.name = builtin + "(" + g.name() + ")";
  parts.carrier = builtin == "coset" ? g.name() + "/H" : g.name() + "//H";
  parts.identity = label(*g.identity());
  parts.contains = [g, label](const Element& x) {
    if (x.kind() != Element::Kind::Coset) return false;
    const Elements& members = x.members();
    if (members.empty() || !g.contains(members.front())) return false;
    return label(members.front()) == x;
  };
  parts.window = [g, label](int radius) {
    Elements out;
    for (const auto& x : g.sample(radius)) out.push_back(label(x));
    return dedupe(std::move(out));
  };
  if (g.is_finite()) {
    Elements all;
    for (const auto& x : g.elements()) all.push_back(label(x));
    parts.finite_carrier = dedupe(std::move(all));
  }
  parts.spec = {{"builtin", builtin}, {"params", {{"group", g.name()}, {"subgroup", names_json(g, h)}}}};
  return parts;
}

}  // namespace

HypergroupDescriptor orbit_semiconvo(const FiniteAction& action) {
  auto parts = orbit_parts(action, "orbit");
  const CarrierAlgebra& g = action.carrier();
  const int c = action.order();
  parts.claims = {Claim::SemiconvoOnly};
  if (g.commutative()) parts.claims.insert(Claim::Commutative);
  parts.rule = [action, c](const Element& x, const Element& y) {
    const Element& rx = x.representative();
    const Element& ry = y.representative();
    std::map<Element, int> counts;
    for (int s = 0; s < c; ++s)
      for (int t = 0; t < c; ++t)
        ++counts[action.orbit_of(action.carrier().multiply(action.apply(s, rx), action.apply(t, ry)))];
    return averaged(counts, c * c);
  };
  parts.orbit = orbit_structure(action, OrbitStructure::Mode::Affine);
  return HypergroupDescriptor(std::move(parts));
}

HypergroupDescriptor coset_semiconvo(const CarrierAlgebra& g, const Elements& h) {
  auto label = [g, h](const Element& x) { return left_coset(g, h, x); };
  auto parts = coset_parts(g, h, "coset", label);
  parts.claims = {Claim::SemiconvoOnly};
  if (g.commutative()) parts.claims.insert(Claim::Commutative);
  const int c = static_cast<int>(h.size());
  parts.rule = [g, h, c, label](const Element& x, const Element& y) {
    const Element& rx = x.representative();
    const Element& ry = y.representative();
    std::map<Element, int> counts;
    for (const auto& s : h) ++counts[label(g.multiply(g.multiply(rx, s), ry))];
    return averaged(counts, c);
  };
  return HypergroupDescriptor(std::move(parts));
}

HypergroupDescriptor double_coset_hypergroup(const CarrierAlgebra& g, const Elements& h) {
  auto label = [g, h](const Element& x) { return double_coset(g, h, x); };
  auto parts = coset_parts(g, h, "double_coset", label);
  const int c = static_cast<int>(h.size());
  parts.rule = [g, h, c, label](const Element& x, const Element& y) {
    const Element& rx = x.representative();
    const Element& ry = y.representative();
    std::map<Element, int> counts;
    for (const auto& t : h) ++counts[label(g.multiply(g.multiply(rx, t), ry))];
    return averaged(counts, c);
  };
  parts.involution = [g, label](const Element& x) { return label(g.inverse(x.representative())); };
  parts.involution_kind = "inverse";
  parts.claims = {Claim::Hypergroup};

  // Commutativity and hermitian-ness are claimed only when they hold on the
  // finite carrier (or on a small window otherwise).
  const Elements tested = parts.finite_carrier ? *parts.finite_carrier : parts.window(kActionCheckRadius);
  bool commutative = true;
  bool hermitian = true;
  for (const auto& x : tested) {
    if ((*parts.involution)(x) != x) hermitian = false;
    for (const auto& y : tested)
      if (commutative && parts.rule(x, y) != parts.rule(y, x)) commutative = false;
  }
  if (commutative) parts.claims.insert(Claim::Commutative);
  if (hermitian) parts.claims.insert(Claim::Hermitian);
  return HypergroupDescriptor(std::move(parts));
}

HypergroupDescriptor automorphism_orbit_hypergroup(const FiniteAction& action) {
  const CarrierAlgebra& g = action.carrier();
  if (!g.has_inverse()) throw SpecError(g.name() + " is not a group");
  auto parts = orbit_parts(action, "automorphism_orbit");
  const Elements tested = g.sample(kActionCheckRadius);
  action.verify_automorphisms(tested);
  const int c = action.order();
  parts.rule = [action, c](const Element& x, const Element& y) {
    const Element& rx = x.representative();
    const Element& ry = y.representative();
    std::map<Element, int> counts;
    for (int s = 0; s < c; ++s) ++counts[action.orbit_of(action.carrier().multiply(action.apply(s, rx), ry))];
    return averaged(counts, c);
  };
  parts.involution = [action](const Element& x) {
    return action.orbit_of(action.carrier().inverse(x.representative()));
  };
  parts.involution_kind = "inverse";
  parts.claims = {Claim::Hypergroup};
  if (g.commutative()) parts.claims.insert(Claim::Commutative);
  const bool hermitian = std::all_of(tested.begin(), tested.end(), [&](const Element& x) {
    const Elements orbit = action.orbit_members(x);
    return std::binary_search(orbit.begin(), orbit.end(), g.inverse(x));
  });
  if (hermitian) parts.claims.insert(Claim::Hermitian);
  parts.orbit = orbit_structure(action, OrbitStructure::Mode::Automorphism);
  return HypergroupDescriptor(std::move(parts));
}

HypergroupDescriptor semigroup_orbit_semiconvo(const FiniteAction& action) {
  const CarrierAlgebra& s = action.carrier();
  auto parts = orbit_parts(action, "semigroup_orbit");
  action.verify_automorphisms(s.sample(kActionCheckRadius));
  const int c = action.order();
  parts.rule = [action, c](const Element& x, const Element& y) {
    const Element& rx = x.representative();
    const Element& ry = y.representative();
    std::map<Element, int> counts;
    for (int a = 0; a < c; ++a) ++counts[action.orbit_of(action.carrier().multiply(action.apply(a, rx), ry))];
    return averaged(counts, c);
  };
  parts.claims = {Claim::SemiconvoOnly};
  if (s.commutative()) parts.claims.insert(Claim::Commutative);
  parts.orbit = orbit_structure(action, OrbitStructure::Mode::SemigroupAutomorphism);
  return HypergroupDescriptor(std::move(parts));
}

}  // namespace hyperconv
