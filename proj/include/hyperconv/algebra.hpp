#pragma once

#include "hyperconv/element.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hyperconv {

// A semigroup or group presentation: raw material for deformations and
// orbit constructions. Builtin infinite carriers compute lazily; finite
// tables are validated exhaustively on construction.
class CarrierAlgebra {
 public:
  using Op = std::function<Element(const Element&, const Element&)>;
  using UnaryOp = std::function<Element(const Element&)>;
  using Predicate = std::function<bool(const Element&)>;

  enum class Kind {
    Integers,        // (Z, +)
    IntegerPairs,    // (Z x Z, +)
    NonNeg,          // (Z+, +)
    NaturalPairs,    // (Z+ x Z+, +)
    ZxNAdjoined,     // (Z x N) u {(0,0)}, + or mixed product
    MaxSemigroup,    // (Z+, max)
    ModK,            // S_k = {0..k-1} u (kN+1), addition modulo k
    FiniteTable,
  };

  struct Parts {
    std::string name;
    Kind kind;
    Op op;
    std::optional<Element> identity;
    std::optional<UnaryOp> inverse;
    Predicate contains;
    bool commutative = false;
    std::optional<Elements> finite_elements;
    std::vector<std::string> element_names;  // finite tables only
    std::function<Elements(int)> sample;     // see CarrierAlgebra::sample
  };

  explicit CarrierAlgebra(Parts parts);

  const std::string& name() const { return parts_->name; }
  Kind kind() const { return parts_->kind; }
  Element multiply(const Element& a, const Element& b) const;
  const std::optional<Element>& identity() const { return parts_->identity; }
  bool has_inverse() const { return parts_->inverse.has_value(); }
  Element inverse(const Element& a) const;
  bool contains(const Element& a) const { return parts_->contains(a); }
  bool commutative() const { return parts_->commutative; }
  bool is_idempotent(const Element& a) const { return multiply(a, a) == a; }
  bool is_finite() const { return parts_->finite_elements.has_value(); }
  const Elements& elements() const;  // finite carriers only
  const std::vector<std::string>& element_names() const { return parts_->element_names; }
  std::string element_name(const Element& a) const;

  // Finite carriers return every element; infinite ones every element whose
  // coordinates are bounded by `radius` in absolute value, sorted.
  Elements sample(int radius) const;

 private:
  std::shared_ptr<const Parts> parts_;
};

// Finite table given row-major: table[i][j] = index of element_i * element_j.
// Validates closure and associativity exhaustively and the identity law.
CarrierAlgebra finite_table(std::string name, std::vector<std::string> element_names,
                            std::vector<std::vector<int>> table, std::optional<int> identity);

CarrierAlgebra integers();
CarrierAlgebra integer_pairs();
CarrierAlgebra nonneg_integers();
CarrierAlgebra natural_pairs();
CarrierAlgebra zxn_adjoined_additive();
CarrierAlgebra zxn_adjoined_mixed();  // (x,y)(x',y') = (x+x', max{y,y'})
CarrierAlgebra max_semigroup();

// Symmetric group on three letters, elements e,(12),(13),(23),(123),(132).
CarrierAlgebra symmetric_group_s3();
CarrierAlgebra cyclic_group(int order);
CarrierAlgebra klein_four_group();

// S_k = {0,1,...,k-1} u (kN+1) with s*t = (s+t) mod k. Only 0 is idempotent
// and S_k has no two-sided identity (0 is neutral on the residues only).
CarrierAlgebra sk_semigroup(int k);

// Subgroup given by element indices of a finite group table.
CarrierAlgebra subgroup_table(const CarrierAlgebra& group, const std::vector<int>& indices);

// Checks: closed, contains identity, closed under inverses. Throws NotSubgroup.
void verify_subgroup(const CarrierAlgebra& group, const Elements& subgroup);

struct ElementOrder {
  enum class Kind { InfiniteUpTo, IdempotentPowerAt };
  Kind kind;
  int value;  // the bound, or the least j with x^j idempotent
  friend bool operator==(const ElementOrder&, const ElementOrder&) = default;
};

ElementOrder element_order(const CarrierAlgebra& s, const Element& x, int bound);

// Action of a finite group H (a table) on a carrier G, right action
// x^(st) = (x^s)^t. `automorphic` declares that every x -> x^s is an
// automorphism of G; otherwise the action is only declared affine.
class FiniteAction {
 public:
  using Act = std::function<Element(int, const Element&)>;

  FiniteAction(std::string name, CarrierAlgebra group, CarrierAlgebra carrier, Act act, bool automorphic);

  const std::string& name() const { return name_; }
  const CarrierAlgebra& group() const { return group_; }
  const CarrierAlgebra& carrier() const { return carrier_; }
  int order() const { return static_cast<int>(group_.elements().size()); }
  bool automorphic() const { return automorphic_; }

  Element apply(int s, const Element& x) const { return act_(s, x); }

  // Sorted member list of x^H.
  Elements orbit_members(const Element& x) const;
  Element orbit_of(const Element& x) const { return Element::orbit(orbit_members(x)); }

  // Identity and compatibility on the given elements; throws ActionInvalid.
  void verify_action(const Elements& tested) const;
  // Each x -> x^s is a bijective homomorphism on the tested elements;
  // throws NotAutomorphism.
  void verify_automorphisms(const Elements& tested) const;

 private:
  std::string name_;
  CarrierAlgebra group_;
  CarrierAlgebra carrier_;
  Act act_;
  bool automorphic_;
};

FiniteAction sign_action();           // {+-1} on Z by multiplication
FiniteAction klein_sign_action();     // {id, a, b, g} on Z x Z
FiniteAction swap_action(const CarrierAlgebra& pairs);       // (x,y) -> (y,x)
FiniteAction reflection_action(const CarrierAlgebra& pairs); // (x,y) -> (-x,y)
FiniteAction trivial_action(const CarrierAlgebra& g);

}  // namespace hyperconv
