#include "hyperconv/element.hpp"

#include "hyperconv/errors.hpp"

#include <algorithm>
#include <ostream>

namespace hyperconv {

namespace {

std::vector<Element> canonical_members(std::vector<Element> members) {
  if (members.empty()) throw RuleDomainError("orbit/coset label with no members");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

std::strong_ordering compare_member_lists(const std::vector<Element>& a, const std::vector<Element>& b) {
  // Representative first, then the remaining members.
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

const char* kind_name(Element::Kind k) {
  switch (k) {
    case Element::Kind::NonNeg: return "nonneg";
    case Element::Kind::Int: return "int";
    case Element::Kind::IntPair: return "pair";
    case Element::Kind::Orbit: return "orbit";
    case Element::Kind::Coset: return "coset";
    case Element::Kind::Table: return "table";
  }
  return "?";
}

[[noreturn]] void kind_mismatch(const Element& x, Element::Kind wanted) {
  throw RuleDomainError("expected " + std::string(kind_name(wanted)) + " element, got " + to_string(x));
}

}  // namespace

std::strong_ordering operator<=>(const OrbitLabel& a, const OrbitLabel& b) {
  return compare_member_lists(a.members, b.members);
}
bool operator==(const OrbitLabel& a, const OrbitLabel& b) { return a.members == b.members; }
std::strong_ordering operator<=>(const CosetLabel& a, const CosetLabel& b) {
  return compare_member_lists(a.members, b.members);
}
bool operator==(const CosetLabel& a, const CosetLabel& b) { return a.members == b.members; }

Element::Element(OrbitLabel v) : value_(OrbitLabel{canonical_members(std::move(v.members))}) {}
Element::Element(CosetLabel v) : value_(CosetLabel{canonical_members(std::move(v.members))}) {}

Element Element::nonneg(std::int64_t n) {
  if (n < 0) throw RuleDomainError("negative value " + std::to_string(n) + " for a nonneg element");
  return Element(NonNeg{n});
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (a.value_.index() != b.value_.index()) return a.value_.index() <=> b.value_.index();
  return std::visit(
      [&](const auto& lhs) -> std::strong_ordering {
        using T = std::decay_t<decltype(lhs)>;
        return lhs <=> std::get<T>(b.value_);
      },
      a.value_);
}

std::int64_t Element::as_nonneg() const {
  if (auto* p = std::get_if<NonNeg>(&value_)) return p->value;
  kind_mismatch(*this, Kind::NonNeg);
}

std::int64_t Element::as_int() const {
  if (auto* p = std::get_if<Int>(&value_)) return p->value;
  kind_mismatch(*this, Kind::Int);
}

const IntPair& Element::as_pair() const {
  if (auto* p = std::get_if<IntPair>(&value_)) return *p;
  kind_mismatch(*this, Kind::IntPair);
}

std::int32_t Element::as_table() const {
  if (auto* p = std::get_if<TableIndex>(&value_)) return p->index;
  kind_mismatch(*this, Kind::Table);
}

const std::vector<Element>& Element::members() const {
  if (auto* p = std::get_if<OrbitLabel>(&value_)) return p->members;
  if (auto* p = std::get_if<CosetLabel>(&value_)) return p->members;
  kind_mismatch(*this, Kind::Orbit);
}

const Element& Element::representative() const { return members().front(); }

namespace {

std::string join(const std::vector<Element>& xs, const char* open, const char* close) {
  std::string out = open;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += to_string(xs[i]);
  }
  return out + close;
}

}  // namespace

std::string to_string(const Element& x) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NonNeg> || std::is_same_v<T, Int>) {
          return std::to_string(v.value);
        } else if constexpr (std::is_same_v<T, IntPair>) {
          return "(" + std::to_string(v.first) + "," + std::to_string(v.second) + ")";
        } else if constexpr (std::is_same_v<T, TableIndex>) {
          return "#" + std::to_string(v.index);
        } else if constexpr (std::is_same_v<T, OrbitLabel>) {
          return join(v.members, "{", "}");
        } else {
          return join(v.members, "[", "]");
        }
      },
      x.value());
}

std::string to_string(const Elements& xs) { return join(xs, "[", "]"); }

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << to_string(x); }

nlohmann::json to_json(const Element& x) {
  using nlohmann::json;
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NonNeg>) {
          return v.value;
        } else if constexpr (std::is_same_v<T, Int>) {
          return json{{"int", v.value}};
        } else if constexpr (std::is_same_v<T, IntPair>) {
          return json{{"pair", json::array({v.first, v.second})}};
        } else if constexpr (std::is_same_v<T, TableIndex>) {
          return json{{"table", v.index}};
        } else {
          json members = json::array();
          for (const auto& m : v.members) members.push_back(to_json(m));
          return json{{std::is_same_v<T, OrbitLabel> ? "orbit" : "coset", members}};
        }
      },
      x.value());
}

Element element_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Element::nonneg(j.get<std::int64_t>());
  if (!j.is_object() || j.size() != 1) throw SpecError("malformed element JSON: " + j.dump());
  const std::string key = j.begin().key();
  const nlohmann::json& val = j.begin().value();
  try {
    if (key == "int") return Element::integer(val.get<std::int64_t>());
    if (key == "pair") {
      if (!val.is_array() || val.size() != 2) throw SpecError("pair needs two entries");
      return Element::pair(val[0].get<std::int64_t>(), val[1].get<std::int64_t>());
    }
    if (key == "table") return Element::table(val.get<std::int32_t>());
    if (key == "orbit" || key == "coset") {
      std::vector<Element> members;
      for (const auto& m : val) members.push_back(element_from_json(m));
      return key == "orbit" ? Element::orbit(std::move(members)) : Element::coset(std::move(members));
    }
  } catch (const nlohmann::json::exception& e) {
    throw SpecError("malformed element JSON " + j.dump() + ": " + e.what());
  }
  throw SpecError("unknown element tag '" + key + "'");
}

}  // namespace hyperconv
