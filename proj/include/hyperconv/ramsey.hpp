#pragma once

#include "hyperconv/algebra.hpp"
#include "hyperconv/hypergroup.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hyperconv {

// Integer used by the arithmetic colorings: the value of a NonNeg or Int,
// the first coordinate of a pair, the index of a table element, and the
// label of the representative for orbits and cosets.
std::int64_t integer_label(const Element& x);

// A finite coloring with classes 1..arity.
class Coloring {
 public:
  enum class Kind { ModK, Mod4k, TriangularTwo, Table, Pullback };

  static Coloring mod_k(int k);  // class (label mod k) + 1; mod_k(1) is the one-class coloring
  static Coloring mod_4k(int k); // class (label mod 4^k) + 1
  // Blocks 0 | 1 | 2 3 | 4 5 6 | 7 8 9 10 | ... alternating classes 1 and 2.
  static Coloring triangular_two();
  static Coloring table(std::map<Element, int> classes, int arity);
  // x -> base(project(x)), e.g. a coloring of K//H pulled back to K.
  static Coloring pullback(const Coloring& base, std::function<Element(const Element&)> project, std::string via);

  Kind kind() const { return kind_; }
  int arity() const { return arity_; }
  // Throws ColoringDomainError outside the coloring's domain.
  int classify(const Element& x) const;
  std::string describe() const;
  nlohmann::json to_json() const;

 private:
  Coloring(Kind kind, int arity, std::int64_t parameter, std::function<int(const Element&)> classify,
           std::string description, nlohmann::json spec);

  Kind kind_;
  int arity_;
  std::int64_t parameter_;
  std::function<int(const Element&)> classify_;
  std::string description_;
  nlohmann::json spec_;
};

// Which triangular block holds n >= 0 (block 0 = {0}, block 1 = {1}, ...).
std::int64_t triangular_block(std::int64_t n);

// Throws InvalidSequence unless the terms are pairwise distinct and avoid
// `excluded` (the identity, or any idempotent for semigroup searches).
void validate_sequence(const Elements& terms, const std::function<bool(const Element&)>& excluded);

class Criterion {
 public:
  enum class Kind { Mono, AlphaMass, AlmostMono };

  static Criterion mono();
  // 0 <= alpha < 1, otherwise ParamRange.
  static Criterion alpha_mass(const Rational& alpha);
  // Every F whose largest index is <= budget is exempt.
  static Criterion almost_mono(int budget = 2);

  Kind kind() const { return kind_; }
  const Rational& alpha() const { return alpha_; }
  int budget() const { return budget_; }

  bool accepts(const Rational& class_mass) const;
  bool exempt(const std::vector<int>& indices) const;
  std::string describe() const;
  nlohmann::json to_json() const;

 private:
  Criterion(Kind kind, Rational alpha, int budget) : kind_(kind), alpha_(std::move(alpha)), budget_(budget) {}
  Kind kind_;
  Rational alpha_;
  int budget_;
};

// delta_F for an index set F (1-based, increasing).
struct FamilyEntry {
  std::vector<int> indices;
  FiniteMeasure measure;
  std::set<Element> support;
};

// Products over index subsets of size <= depth, factors in increasing
// index order.
std::set<Element> fs_fp_set(const CarrierAlgebra& s, const Elements& xs, int depth);

// Every non-empty F with |F| <= depth, ordered by size then lexicographically.
std::vector<FamilyEntry> sfc(const HypergroupDescriptor& k, const Elements& xs, int depth);
std::vector<FamilyEntry> sfc(const ConvolutionRule& rule, const Elements& xs, int depth);

struct FamilyRow {
  std::vector<int> indices;
  std::set<Element> support;
  std::vector<Rational> class_masses;  // index c-1 holds the mass of class c
  bool exempt = false;
};

enum class Verdict { Witness, Refuted, Exhausted };
std::string to_string(Verdict v);

struct ExperimentReport {
  std::string descriptor;
  std::string coloring;
  int arity = 0;
  nlohmann::json criterion;
  std::string window;
  int depth = 0;
  Verdict verdict = Verdict::Exhausted;
  int color = 0;  // witness class, 0 when none
  Elements sequence;
  std::vector<FamilyRow> rows;
  // For a refuted sequence: per class, the first non-exempt F failing it.
  std::vector<std::pair<int, std::vector<int>>> refutations;
  std::uint64_t nodes = 0;  // search nodes visited
  std::string note;

  bool found() const { return verdict == Verdict::Witness; }
};

nlohmann::json to_json(const ExperimentReport& r);
std::string to_markdown(const ExperimentReport& r);
// One line per (F, class): F;support;class;mass_num;mass_den
std::string to_csv(const ExperimentReport& r);

ExperimentReport check_criterion(const HypergroupDescriptor& k, const Elements& xs, const Coloring& coloring,
                                 int depth, const Criterion& criterion);

// Depth-first search over injective sequences of length `depth` drawn from
// the window in its order, skipping the identity; a prefix that already
// fails the criterion for every class is never extended. Subtrees of the
// first term may be searched concurrently (HYPERCONV_THREADS caps the
// worker count); the lexicographically first witness is reported either way.
ExperimentReport search_sequence(const HypergroupDescriptor& k, const Coloring& coloring, int depth,
                                 const Window& window, const Criterion& criterion);

// The same search for the point-mass convolution of a semigroup, skipping
// idempotents. Window elements outside the carrier are dropped.
ExperimentReport search_fp(const CarrierAlgebra& s, const Coloring& coloring, int depth, const Window& window,
                           const Criterion& criterion);

struct PairClassViolation {
  std::int64_t m;
  std::int64_t n;
  std::set<Element> support;
};

struct Cp2Mod3Report {
  int window_max = 0;
  std::uint64_t pairs = 0;
  std::vector<PairClassViolation> violations;  // supports inside a single class
  bool passed() const { return violations.empty(); }
};

// For every 1 <= m < n <= window_max, spt(n * m) in CP2 meets at least two
// classes of the mod-3 coloring.
Cp2Mod3Report verify_cp2_mod3(int window_max);

struct AlphaInstance {
  int k, i;
  std::int64_t m, n, l0, l1;
  Rational lhs;          // brute-force mass of class i
  Rational closed_form;  // (2 l0 + 1)/(m + 1)
  Rational residue_form;  // (2(m-i+1) + 4^k)/(4^k (m+1))
  Rational bound;        // (2 l0 + 1)(l0 + l1 + 2)/(l0 l1 4^k)
  bool match() const { return lhs == closed_form && lhs == residue_form; }
  bool below_bound() const { return lhs < bound; }
};

// Throws PreconditionViolated naming the failing inequality.
AlphaInstance verify_cp2_alpha(int k, int i, std::int64_t m, std::int64_t n);

struct RecurrenceRow {
  std::vector<int> indices;
  std::int64_t s_f;
  bool in_support;
};

struct RecurrenceReport {
  std::string descriptor;
  Elements sequence;
  std::vector<RecurrenceRow> rows;
  bool passed() const;
};

// s_F = sum of the terms of F lies in spt(delta_F) for every |F| <= depth.
RecurrenceReport recurrent_witness(const HypergroupDescriptor& k, const Elements& xs, int depth);

struct OrbitMassBound {
  Element tau_f;
  Rational mass_at_tau_f;
  Rational bound;
  bool holds() const { return mass_at_tau_f >= bound; }
};

// `lift` holds elements of the underlying (semi)group; F selects 1-based
// indices. The bound is 1/c^(m-1) for automorphism orbits and 1/c^m for
// affine orbit semiconvos, m = |F|. Throws LiftMissing when `k` is not an
// orbit descriptor or the lift leaves the underlying carrier.
OrbitMassBound orbit_mass_bound(const HypergroupDescriptor& k, const Elements& lift, const std::vector<int>& indices);

struct PushforwardCheck {
  Rational quotient_side;  // (delta_[x1] * ... * delta_[xm])(E)
  Rational base_side;      // (delta_x1 * ... * delta_xm)(pi^-1(E))
  bool equal() const { return quotient_side == base_side; }
};

PushforwardCheck quotient_pushforward_identity(const HypergroupDescriptor& k, const Elements& h,
                                               const HypergroupDescriptor& quotient, const Elements& xs,
                                               const std::set<Element>& cosets);
PushforwardCheck quotient_pushforward_identity(const HypergroupDescriptor& k, const Elements& h, const Elements& xs,
                                               const std::set<Element>& cosets, const Window& window);

struct ClosureResult {
  bool closed = false;
  std::set<Element> elements;      // the closure, or what was reached before escaping
  std::optional<Element> escape;   // first support element outside the window
  std::optional<bool> plus_closed; // polynomial hypergroups only, when closed
};

ClosureResult subalgebra_closure(const HypergroupDescriptor& k, const std::set<Element>& gens, const Window& window);

}  // namespace hyperconv
