#include "hyperconv/algebra.hpp"

#include "hyperconv/errors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace hyperconv {

CarrierAlgebra::CarrierAlgebra(Parts parts) : parts_(std::make_shared<const Parts>(std::move(parts))) {}

Element CarrierAlgebra::multiply(const Element& a, const Element& b) const {
  if (!contains(a) || !contains(b))
    throw RuleDomainError(name() + ": product of " + to_string(a) + " and " + to_string(b) + " outside carrier");
  return parts_->op(a, b);
}

Element CarrierAlgebra::inverse(const Element& a) const {
  if (!parts_->inverse) throw RuleDomainError(name() + " has no inverse map");
  if (!contains(a)) throw RuleDomainError(name() + ": " + to_string(a) + " outside carrier");
  return (*parts_->inverse)(a);
}

const Elements& CarrierAlgebra::elements() const {
  if (!parts_->finite_elements) throw RuleDomainError(name() + " is not finite");
  return *parts_->finite_elements;
}

std::string CarrierAlgebra::element_name(const Element& a) const {
  if (!parts_->element_names.empty() && a.kind() == Element::Kind::Table) {
    const auto i = static_cast<std::size_t>(a.as_table());
    if (i < parts_->element_names.size()) return parts_->element_names[i];
  }
  return to_string(a);
}

Elements CarrierAlgebra::sample(int radius) const {
  if (parts_->finite_elements) return *parts_->finite_elements;
  return parts_->sample(radius);
}

CarrierAlgebra finite_table(std::string name, std::vector<std::string> element_names,
                            std::vector<std::vector<int>> table, std::optional<int> identity) {
  const int n = static_cast<int>(element_names.size());
  if (n == 0) throw TableError(name + ": empty table");
  if (static_cast<int>(table.size()) != n) throw TableError(name + ": table has wrong number of rows");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw TableError(name + ": table row has wrong length");
    for (int v : row)
      if (v < 0 || v >= n) throw TableError(name + ": product index " + std::to_string(v) + " not closed");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw TableError(name + ": not associative at (" + element_names[a] + "," + element_names[b] + "," +
                           element_names[c] + ")");
  if (identity) {
    const int e = *identity;
    if (e < 0 || e >= n) throw TableError(name + ": identity index out of range");
    for (int a = 0; a < n; ++a)
      if (table[e][a] != a || table[a][e] != a)
        throw TableError(name + ": " + element_names[e] + " is not an identity for " + element_names[a]);
  }
  bool commutative = true;
  for (int a = 0; a < n && commutative; ++a)
    for (int b = 0; b < n; ++b)
      if (table[a][b] != table[b][a]) {
        commutative = false;
        break;
      }

  std::optional<std::vector<int>> inverses;
  if (identity) {
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (table[a][b] == *identity && table[b][a] == *identity) inv[a] = b;
    if (std::all_of(inv.begin(), inv.end(), [](int v) { return v >= 0; })) inverses = inv;
  }

  Elements elements;
  for (int i = 0; i < n; ++i) elements.push_back(Element::table(i));

  auto shared_table = std::make_shared<const std::vector<std::vector<int>>>(std::move(table));
  CarrierAlgebra::Parts parts;
  parts.name = std::move(name);
  parts.kind = CarrierAlgebra::Kind::FiniteTable;
  parts.op = [shared_table](const Element& a, const Element& b) {
    return Element::table((*shared_table)[a.as_table()][b.as_table()]);
  };
  if (identity) parts.identity = Element::table(*identity);
  if (inverses) {
    parts.inverse = [inv = *inverses](const Element& a) { return Element::table(inv[a.as_table()]); };
  }
  parts.contains = [n](const Element& a) {
    return a.kind() == Element::Kind::Table && a.as_table() >= 0 && a.as_table() < n;
  };
  parts.commutative = commutative;
  parts.finite_elements = std::move(elements);
  parts.element_names = std::move(element_names);
  return CarrierAlgebra(std::move(parts));
}

CarrierAlgebra integers() {
  CarrierAlgebra::Parts parts;
  parts.name = "Z";
  parts.kind = CarrierAlgebra::Kind::Integers;
  parts.op = [](const Element& a, const Element& b) { return Element::integer(a.as_int() + b.as_int()); };
  parts.identity = Element::integer(0);
  parts.inverse = [](const Element& a) { return Element::integer(-a.as_int()); };
  parts.contains = [](const Element& a) { return a.kind() == Element::Kind::Int; };
  parts.commutative = true;
  parts.sample = [](int r) {
    Elements out;
    for (int x = -r; x <= r; ++x) out.push_back(Element::integer(x));
    return out;
  };
  return CarrierAlgebra(std::move(parts));
}

namespace {

Elements pair_box(int x_lo, int x_hi, int y_lo, int y_hi) {
  Elements out;
  for (int x = x_lo; x <= x_hi; ++x)
    for (int y = y_lo; y <= y_hi; ++y) out.push_back(Element::pair(x, y));
  return out;
}

}  // namespace

CarrierAlgebra integer_pairs() {
  CarrierAlgebra::Parts parts;
  parts.name = "ZxZ";
  parts.kind = CarrierAlgebra::Kind::IntegerPairs;
  parts.op = [](const Element& a, const Element& b) {
    return Element::pair(a.as_pair().first + b.as_pair().first, a.as_pair().second + b.as_pair().second);
  };
  parts.identity = Element::pair(0, 0);
  parts.inverse = [](const Element& a) { return Element::pair(-a.as_pair().first, -a.as_pair().second); };
  parts.contains = [](const Element& a) { return a.kind() == Element::Kind::IntPair; };
  parts.commutative = true;
  parts.sample = [](int r) { return pair_box(-r, r, -r, r); };
  return CarrierAlgebra(std::move(parts));
}

CarrierAlgebra nonneg_integers() {
  CarrierAlgebra::Parts parts;
  parts.name = "Z+";
  parts.kind = CarrierAlgebra::Kind::NonNeg;
  parts.op = [](const Element& a, const Element& b) { return nn(a.as_nonneg() + b.as_nonneg()); };
  parts.identity = nn(0);
  parts.contains = [](const Element& a) { return a.kind() == Element::Kind::NonNeg; };
  parts.commutative = true;
  parts.sample = [](int r) {
    Elements out;
    for (int x = 0; x <= r; ++x) out.push_back(nn(x));
    return out;
  };
  return CarrierAlgebra(std::move(parts));
}

CarrierAlgebra natural_pairs() {
  CarrierAlgebra::Parts parts;
  parts.name = "NxN";
  parts.kind = CarrierAlgebra::Kind::NaturalPairs;
  parts.op = [](const Element& a, const Element& b) {
    return Element::pair(a.as_pair().first + b.as_pair().first, a.as_pair().second + b.as_pair().second);
  };
  parts.identity = Element::pair(0, 0);
  parts.contains = [](const Element& a) {
    return a.kind() == Element::Kind::IntPair && a.as_pair().first >= 0 && a.as_pair().second >= 0;
  };
  parts.commutative = true;
  parts.sample = [](int r) { return pair_box(0, r, 0, r); };
  return CarrierAlgebra(std::move(parts));
}

namespace {

CarrierAlgebra::Parts zxn_parts(std::string name) {
  CarrierAlgebra::Parts parts;
  parts.name = std::move(name);
  parts.kind = CarrierAlgebra::Kind::ZxNAdjoined;
  parts.identity = Element::pair(0, 0);
  parts.contains = [](const Element& a) {
    if (a.kind() != Element::Kind::IntPair) return false;
    const auto& p = a.as_pair();
    return p.second >= 1 || (p.first == 0 && p.second == 0);
  };
  parts.commutative = true;
  parts.sample = [](int r) {
    Elements out{Element::pair(0, 0)};
    for (auto& p : pair_box(-r, r, 1, r)) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
  };
  return parts;
}

}  // namespace

CarrierAlgebra zxn_adjoined_additive() {
  auto parts = zxn_parts("(ZxN)u{(0,0)},+");
  parts.op = [](const Element& a, const Element& b) {
    return Element::pair(a.as_pair().first + b.as_pair().first, a.as_pair().second + b.as_pair().second);
  };
  return CarrierAlgebra(std::move(parts));
}

CarrierAlgebra zxn_adjoined_mixed() {
  auto parts = zxn_parts("(ZxN)u{(0,0)},(+,max)");
  parts.op = [](const Element& a, const Element& b) {
    return Element::pair(a.as_pair().first + b.as_pair().first, std::max(a.as_pair().second, b.as_pair().second));
  };
  return CarrierAlgebra(std::move(parts));
}

CarrierAlgebra max_semigroup() {
  CarrierAlgebra::Parts parts;
  parts.name = "(Z+,max)";
  parts.kind = CarrierAlgebra::Kind::MaxSemigroup;
  parts.op = [](const Element& a, const Element& b) { return nn(std::max(a.as_nonneg(), b.as_nonneg())); };
  parts.identity = nn(0);
  parts.contains = [](const Element& a) { return a.kind() == Element::Kind::NonNeg; };
  parts.commutative = true;
  parts.sample = [](int r) {
    Elements out;
    for (int x = 0; x <= r; ++x) out.push_back(nn(x));
    return out;
  };
  return CarrierAlgebra(std::move(parts));
}

CarrierAlgebra symmetric_group_s3() {
  // Permutations of {0,1,2} as images; product is composition (p*q)(x) = p(q(x)).
  const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return finite_table("S3", names, std::move(table), 0);
}

CarrierAlgebra cyclic_group(int order) {
  if (order < 1) throw ParamRange("cyclic group order must be >= 1");
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b < order; ++b) table[a][b] = (a + b) % order;
  }
  return finite_table("C" + std::to_string(order), names, std::move(table), 0);
}

CarrierAlgebra klein_four_group() {
  // id, alpha, beta, gamma with bit encoding: alpha = 1, beta = 2, gamma = 3.
  std::vector<std::vector<int>> table(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) table[a][b] = a ^ b;
  return finite_table("V4", {"id", "alpha", "beta", "gamma"}, std::move(table), 0);
}

CarrierAlgebra sk_semigroup(int k) {
  if (k < 2) throw ParamRange("S_k needs k >= 2");
  CarrierAlgebra::Parts parts;
  parts.name = "S_" + std::to_string(k);
  parts.kind = CarrierAlgebra::Kind::ModK;
  const auto member = [k](std::int64_t s) { return (s >= 0 && s < k) || (s > k && s % k == 1); };
  parts.op = [k](const Element& a, const Element& b) { return nn((a.as_nonneg() + b.as_nonneg()) % k); };
  parts.contains = [member](const Element& a) { return a.kind() == Element::Kind::NonNeg && member(a.as_nonneg()); };
  parts.commutative = true;
  parts.sample = [member](int r) {
    Elements out;
    for (int s = 0; s <= r; ++s)
      if (member(s)) out.push_back(nn(s));
    return out;
  };
  return CarrierAlgebra(std::move(parts));
}

void verify_subgroup(const CarrierAlgebra& group, const Elements& subgroup) {
  if (subgroup.empty()) throw NotSubgroup("empty subset");
  const std::set<Element> members(subgroup.begin(), subgroup.end());
  if (members.size() != subgroup.size()) throw NotSubgroup("subset lists an element twice");
  for (const auto& h : members)
    if (!group.contains(h)) throw NotSubgroup(to_string(h) + " is not in " + group.name());
  if (!group.identity() || !members.contains(*group.identity()))
    throw NotSubgroup("subset does not contain the identity of " + group.name());
  for (const auto& a : members) {
    for (const auto& b : members) {
      const Element ab = group.multiply(a, b);
      if (!members.contains(ab))
        throw NotSubgroup("not closed: " + group.element_name(a) + "*" + group.element_name(b) + " = " +
                          group.element_name(ab));
    }
    if (group.has_inverse() && !members.contains(group.inverse(a)))
      throw NotSubgroup("not closed under inverse at " + group.element_name(a));
  }
}

CarrierAlgebra subgroup_table(const CarrierAlgebra& group, const std::vector<int>& indices) {
  Elements members;
  for (int i : indices) members.push_back(Element::table(i));
  verify_subgroup(group, members);
  std::vector<std::string> names;
  std::map<int, int> position;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    position[indices[i]] = static_cast<int>(i);
    names.push_back(group.element_name(Element::table(indices[i])));
  }
  std::vector<std::vector<int>> table(indices.size(), std::vector<int>(indices.size()));
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < indices.size(); ++b)
      table[a][b] = position.at(group.multiply(members[a], members[b]).as_table());
  return finite_table(group.name() + "-sub", std::move(names), std::move(table),
                      position.at(group.identity()->as_table()));
}

ElementOrder element_order(const CarrierAlgebra& s, const Element& x, int bound) {
  if (bound < 1) throw ParamRange("element_order bound must be >= 1");
  Element power = x;
  for (int j = 1; j <= bound; ++j) {
    if (s.is_idempotent(power)) return {ElementOrder::Kind::IdempotentPowerAt, j};
    if (j < bound) power = s.multiply(power, x);
  }
  return {ElementOrder::Kind::InfiniteUpTo, bound};
}

FiniteAction::FiniteAction(std::string name, CarrierAlgebra group, CarrierAlgebra carrier, Act act, bool automorphic)
    : name_(std::move(name)),
      group_(std::move(group)),
      carrier_(std::move(carrier)),
      act_(std::move(act)),
      automorphic_(automorphic) {
  if (!group_.is_finite() || !group_.identity() || !group_.has_inverse())
    throw ActionInvalid(name_ + ": acting group must be a finite group table");
}

Elements FiniteAction::orbit_members(const Element& x) const {
  if (!carrier_.contains(x)) throw RuleDomainError(name_ + ": " + to_string(x) + " outside " + carrier_.name());
  Elements out;
  out.reserve(group_.elements().size());
  for (const auto& s : group_.elements()) out.push_back(act_(s.as_table(), x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void FiniteAction::verify_action(const Elements& tested) const {
  const int e = group_.identity()->as_table();
  for (const auto& x : tested) {
    if (act_(e, x) != x) throw ActionInvalid(name_ + ": identity moves " + to_string(x));
    for (const auto& s : group_.elements()) {
      const Element xs = act_(s.as_table(), x);
      if (!carrier_.contains(xs)) throw ActionInvalid(name_ + ": action leaves the carrier at " + to_string(x));
      for (const auto& t : group_.elements()) {
        const int st = group_.multiply(s, t).as_table();
        if (act_(st, x) != act_(t.as_table(), xs))
          throw ActionInvalid(name_ + ": x^(st) != (x^s)^t at x=" + to_string(x) + ", s=" + group_.element_name(s) +
                              ", t=" + group_.element_name(t));
      }
    }
  }
}

void FiniteAction::verify_automorphisms(const Elements& tested) const {
  for (const auto& s : group_.elements()) {
    const int si = s.as_table();
    std::set<Element> images;
    for (const auto& x : tested) {
      images.insert(act_(si, x));
      for (const auto& y : tested) {
        const Element lhs = act_(si, carrier_.multiply(x, y));
        const Element rhs = carrier_.multiply(act_(si, x), act_(si, y));
        if (lhs != rhs)
          throw NotAutomorphism(name_ + ": " + group_.element_name(s) + " is not a homomorphism at (" + to_string(x) +
                                "," + to_string(y) + ")");
      }
    }
    if (images.size() != tested.size())
      throw NotAutomorphism(name_ + ": " + group_.element_name(s) + " is not injective on the tested elements");
  }
}

FiniteAction sign_action() {
  return FiniteAction(
      "sign", cyclic_group(2), integers(),
      [](int s, const Element& x) { return s == 0 ? x : Element::integer(-x.as_int()); }, true);
}

FiniteAction klein_sign_action() {
  return FiniteAction(
      "klein", klein_four_group(), integer_pairs(),
      [](int s, const Element& x) {
        const auto& p = x.as_pair();
        return Element::pair((s & 1) ? -p.first : p.first, (s & 2) ? -p.second : p.second);
      },
      true);
}

FiniteAction swap_action(const CarrierAlgebra& pairs) {
  return FiniteAction(
      "swap", cyclic_group(2), pairs,
      [](int s, const Element& x) {
        const auto& p = x.as_pair();
        return s == 0 ? x : Element::pair(p.second, p.first);
      },
      true);
}

FiniteAction reflection_action(const CarrierAlgebra& pairs) {
  return FiniteAction(
      "reflect", cyclic_group(2), pairs,
      [](int s, const Element& x) {
        const auto& p = x.as_pair();
        return s == 0 ? x : Element::pair(-p.first, p.second);
      },
      true);
}

FiniteAction trivial_action(const CarrierAlgebra& g) {
  return FiniteAction(
      "trivial", cyclic_group(1), g, [](int, const Element& x) { return x; }, true);
}

}  // namespace hyperconv
