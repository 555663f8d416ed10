#pragma once

#include "hyperconv/algebra.hpp"
#include "hyperconv/measure.hpp"

#include <json.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hyperconv {

enum class Claim { Commutative, Hermitian, Hypergroup, SemiconvoOnly };

std::string to_string(Claim c);

using Involution = std::function<Element(const Element&)>;

// Orbit-space descriptors remember how they were built so that products of
// lifts can be compared with convolutions of orbits.
struct OrbitStructure {
  enum class Mode { Affine, Automorphism, SemigroupAutomorphism };
  Mode mode;
  int group_size;
  CarrierAlgebra underlying;
  std::function<Element(const Element&)> orbit_of;
};

class LinearizationTable;

// A carrier plus convolution rule, identity and optional involution.
// Immutable once built; copies share one memo cache of rule evaluations.
class HypergroupDescriptor {
 public:
  struct Parts {
    std::string name;
    std::string carrier;
    ConvolutionRule rule;
    Element identity;
    std::optional<Involution> involution;
    std::string involution_kind = "none";  // "identity", "inverse", ...
    std::set<Claim> claims;
    nlohmann::json spec = nlohmann::json::object();  // construction spec
    std::function<bool(const Element&)> contains;    // carrier membership
    std::function<Elements(int)> window;             // canonical window of radius n
    std::optional<Elements> finite_carrier;
    bool polynomial = false;
    std::shared_ptr<const LinearizationTable> linearization;
    std::shared_ptr<const OrbitStructure> orbit;
  };

  explicit HypergroupDescriptor(Parts parts);

  const std::string& name() const { return parts_->name; }
  const std::string& carrier() const { return parts_->carrier; }
  const Element& identity() const { return parts_->identity; }
  bool has_involution() const { return parts_->involution.has_value(); }
  Element involute(const Element& x) const;
  const std::string& involution_kind() const { return parts_->involution_kind; }
  const std::set<Claim>& claims() const { return parts_->claims; }
  bool claims(Claim c) const { return parts_->claims.contains(c); }
  const nlohmann::json& spec() const { return parts_->spec; }
  bool contains(const Element& x) const { return parts_->contains(x); }
  bool is_finite() const { return parts_->finite_carrier.has_value(); }
  const Elements& finite_carrier() const;
  bool polynomial() const { return parts_->polynomial; }
  const LinearizationTable* linearization() const { return parts_->linearization.get(); }
  const OrbitStructure* orbit() const { return parts_->orbit.get(); }

  // delta_m * delta_n; memoized. Throws RuleDomainError outside the carrier.
  FiniteMeasure convolve(const Element& m, const Element& n) const;
  FiniteMeasure convolve(const FiniteMeasure& mu, const FiniteMeasure& nu) const;
  ConvolutionRule rule() const;

  // The canonical window {first `radius`+1 elements}; finite carriers
  // return the whole carrier.
  Elements window(int radius) const;

  std::size_t cache_size() const;

 private:
  struct Cache;
  std::shared_ptr<const Parts> parts_;
  std::shared_ptr<Cache> cache_;
};

// Finite, duplicate-free list of carrier elements on which axioms are checked.
class Window {
 public:
  explicit Window(Elements elements);
  static Window range(std::int64_t lo, std::int64_t hi);  // nonneg lo..hi

  const Elements& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Element& x) const;
  std::string describe() const;

 private:
  Elements elements_;
};

struct Counterexample {
  Elements elements;
  std::vector<FiniteMeasure> measures;
  std::string detail;
};

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  std::size_t cases = 0;
  std::optional<Counterexample> counterexample;
};

struct AxiomReport {
  std::string descriptor;
  std::string window;
  std::vector<AxiomCheck> checks;

  bool passed() const;
  void merge(const AxiomReport& other);
};

nlohmann::json to_json(const AxiomReport& r);

FiniteMeasure convolve(const HypergroupDescriptor& k, const Element& m, const Element& n);

// Left-to-right fold delta_{x1} * delta_{x2} * ... in the order given.
FiniteMeasure convolve_sequence(const HypergroupDescriptor& k, const Elements& xs);

AxiomReport check_associativity(const HypergroupDescriptor& k, const Window& w);
AxiomReport check_identity(const HypergroupDescriptor& k, const Window& w);
// Throws NoInvolution when the descriptor has none.
AxiomReport check_involution(const HypergroupDescriptor& k, const Window& w);
AxiomReport check_commutativity(const HypergroupDescriptor& k, const Window& w);

// Associativity + identity, plus involution when present.
AxiomReport check_axioms(const HypergroupDescriptor& k, const Window& w);

// Window-relative center: x in w with |spt(x*y)| = 1 for every y in w.
// Elements failing against some y outside w can still appear.
std::set<Element> center(const HypergroupDescriptor& k, const Window& w);

// A hypergroup whose convolution is the point mass at the product of `s`.
// Groups get the inverse as involution.
HypergroupDescriptor semigroup_descriptor(const CarrierAlgebra& s);

}  // namespace hyperconv
