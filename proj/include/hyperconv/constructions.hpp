#pragma once

#include "hyperconv/algebra.hpp"
#include "hyperconv/hypergroup.hpp"
#include "hyperconv/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hyperconv {

// Chebyshev hypergroup of the first kind on Z+:
// m * n = 1/2 delta_|n-m| + 1/2 delta_(n+m).
HypergroupDescriptor cp1();

// Chebyshev hypergroup of the second kind on Z+:
// m * n = sum_{k=0}^{min} (|m-n|+2k+1)/((m+1)(n+1)) delta_(|m-n|+2k).
HypergroupDescriptor cp2();

// Hermitian hypergroup on Z+ from the linearization of a recurrence; the
// rule is defined for n, m <= n_max.
HypergroupDescriptor polynomial_hypergroup(const Recurrence& rec, int n_max);

// 0 < a <= 1/2, otherwise ParamRange.
HypergroupDescriptor dunkl_ramirez(const Rational& a);

// Weights v_n with v_0 = 1 parametrizing deformations of (Z+, max).
class DeformationWeights {
 public:
  DeformationWeights(std::string description, std::function<Rational(int)> v);

  static DeformationWeights power(const Rational& base);          // v_n = b^n
  static DeformationWeights shifted_power(const Rational& base);  // v_0 = 1, v_n = b^(n-1)
  static DeformationWeights constant(const Rational& value);      // v_0 = 1, v_n = value
  static DeformationWeights dunkl_ramirez(const Rational& a);     // v_0 = 1, v_n = (1-a)/a^n
  static DeformationWeights explicit_list(std::vector<Rational> values);

  // "2^n", "3^(n-1)", "1", "dr:1/3" or a JSON-style list handled by callers.
  static DeformationWeights parse(const std::string& text);

  const std::string& description() const { return description_; }
  Rational operator()(int n) const { return v_(n); }

  // Throws ParamRange if v_0 != 1 or some v_n <= 0 and
  // WeightConditionViolated(n) at the first n <= n_max with
  // sum_{k<n} v_k > v_n.
  void validate(int n_max) const;

 private:
  std::string description_;
  std::function<Rational(int)> v_;
};

// q_n = sum_{m<n} v_m/v_n delta_m + (1 - sum_{m<n} v_m/v_n) delta_n for
// 1 <= n <= n_max, dropping a zero coefficient at n.
std::map<Element, FiniteMeasure> deformation_measures(const DeformationWeights& v, int n_max);

// (Z+, max) deformed on the diagonal by the q_n above; diagonal defined for
// n <= n_max.
HypergroupDescriptor max_deformation(const DeformationWeights& v, int n_max);

struct ConditionCheck {
  std::string condition;
  bool passed = true;
  std::string witness;
};

struct ConditionReport {
  std::string scope;  // "finite carrier" or the window description
  bool window_relative = false;
  std::vector<ConditionCheck> checks;

  bool passed() const;
  const ConditionCheck* first_failure() const;
};

nlohmann::json to_json(const ConditionReport& r);

using IdempotentMeasures = std::map<Element, FiniteMeasure>;

// Conditions (i)-(vi) for deforming a commutative semigroup with identity at
// its idempotent diagonal, plus the action-free hypothesis. Finite tables
// are checked exhaustively; infinite carriers need `window` and the verdict
// is window-relative. Throws NotCommutative / NoIdentity.
ConditionReport check_idempotent_deformation(const CarrierAlgebra& s, const IdempotentMeasures& q,
                                             const std::optional<Elements>& window = std::nullopt);

// m * n = delta_(mn) off the idempotent diagonal, q_n on it. Claims
// Hypergroup iff S = E(S). Throws ConditionsNotVerified naming the first
// failed condition.
HypergroupDescriptor deform(const CarrierAlgebra& s, const IdempotentMeasures& q,
                            const std::optional<Elements>& window = std::nullopt);

// x^H * y^H = 1/c^2 sum_{s,t} delta_(x^s y^t)^H for an affine action.
HypergroupDescriptor orbit_semiconvo(const FiniteAction& action);

// xH * yH = 1/c sum_s delta_(x s y H). Throws NotSubgroup.
HypergroupDescriptor coset_semiconvo(const CarrierAlgebra& g, const Elements& h);

// HxH * HyH = 1/c sum_t delta_(H x t y H), involution HxH -> Hx^-1H.
HypergroupDescriptor double_coset_hypergroup(const CarrierAlgebra& g, const Elements& h);

// x^H * y^H = 1/c sum_s delta_(x^s y)^H, involution x^H -> (x^-1)^H.
HypergroupDescriptor automorphism_orbit_hypergroup(const FiniteAction& action);

// s^H * t^H = 1/c sum_alpha delta_(alpha(s) t)^H on a semigroup with identity.
HypergroupDescriptor semigroup_orbit_semiconvo(const FiniteAction& action);

// K//H for commutative K and a finite subgroup H of the window-relative
// center; convolution is the push-forward along x -> xH. Throws NotCentral,
// NotSubgroup, NotCommutative.
HypergroupDescriptor ross_quotient(const HypergroupDescriptor& k, const Elements& h, const Window& window);

// The coset xH = {xz : z in H} of the quotient above.
Element quotient_class(const HypergroupDescriptor& k, const Elements& h, const Element& x);

}  // namespace hyperconv
