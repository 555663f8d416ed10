#pragma once

#include <json.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace hyperconv {

class Element;

struct NonNeg {
  std::int64_t value = 0;
  friend auto operator<=>(const NonNeg&, const NonNeg&) = default;
};

struct Int {
  std::int64_t value = 0;
  friend auto operator<=>(const Int&, const Int&) = default;
};

struct IntPair {
  std::int64_t first = 0;
  std::int64_t second = 0;
  friend auto operator<=>(const IntPair&, const IntPair&) = default;
};

struct TableIndex {
  std::int32_t index = 0;
  friend auto operator<=>(const TableIndex&, const TableIndex&) = default;
};

// Orbit and coset labels hold their full member set, sorted ascending and
// deduplicated; the representative is the first (minimum) member.
struct OrbitLabel {
  std::vector<Element> members;
};

struct CosetLabel {
  std::vector<Element> members;
};

std::strong_ordering operator<=>(const OrbitLabel& a, const OrbitLabel& b);
bool operator==(const OrbitLabel& a, const OrbitLabel& b);
std::strong_ordering operator<=>(const CosetLabel& a, const CosetLabel& b);
bool operator==(const CosetLabel& a, const CosetLabel& b);

class Element {
 public:
  using Value = std::variant<NonNeg, Int, IntPair, OrbitLabel, CosetLabel, TableIndex>;

  enum class Kind { NonNeg, Int, IntPair, Orbit, Coset, Table };

  Element() = default;
  Element(NonNeg v) : value_(v) {}
  Element(Int v) : value_(v) {}
  Element(IntPair v) : value_(v) {}
  Element(TableIndex v) : value_(v) {}
  Element(OrbitLabel v);
  Element(CosetLabel v);

  static Element nonneg(std::int64_t n);
  static Element integer(std::int64_t n) { return Element(Int{n}); }
  static Element pair(std::int64_t a, std::int64_t b) { return Element(IntPair{a, b}); }
  static Element table(std::int32_t i) { return Element(TableIndex{i}); }
  static Element orbit(std::vector<Element> members) { return Element(OrbitLabel{std::move(members)}); }
  static Element coset(std::vector<Element> members) { return Element(CosetLabel{std::move(members)}); }

  Kind kind() const { return static_cast<Kind>(value_.index()); }
  const Value& value() const { return value_; }

  // Typed accessors; throw RuleDomainError on a kind mismatch.
  std::int64_t as_nonneg() const;
  std::int64_t as_int() const;
  const IntPair& as_pair() const;
  std::int32_t as_table() const;
  const std::vector<Element>& members() const;  // orbit or coset
  const Element& representative() const;

  friend std::strong_ordering operator<=>(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) { return a.value_ == b.value_; }

 private:
  Value value_{NonNeg{0}};
};

using Elements = std::vector<Element>;

inline Element nn(std::int64_t n) { return Element::nonneg(n); }

std::string to_string(const Element& x);
std::string to_string(const Elements& xs);
std::ostream& operator<<(std::ostream& os, const Element& x);

nlohmann::json to_json(const Element& x);
Element element_from_json(const nlohmann::json& j);

}  // namespace hyperconv
