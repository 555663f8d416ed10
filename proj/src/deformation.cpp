#include "hyperconv/constructions.hpp"
#include "hyperconv/errors.hpp"

#include <algorithm>
#include <regex>
#include <set>

namespace hyperconv {

namespace {

std::string compact(const Rational& r) {
  return r.get_den() == 1 ? integer_string(r.get_num()) : to_fraction_string(r);
}

}  // namespace

DeformationWeights::DeformationWeights(std::string description, std::function<Rational(int)> v)
    : description_(std::move(description)), v_(std::move(v)) {}

DeformationWeights DeformationWeights::power(const Rational& base) {
  return {compact(base) + "^n", [base](int n) { return pow(base, static_cast<unsigned>(n)); }};
}

DeformationWeights DeformationWeights::shifted_power(const Rational& base) {
  return {compact(base) + "^(n-1)",
          [base](int n) { return n == 0 ? Rational(1) : pow(base, static_cast<unsigned>(n - 1)); }};
}

DeformationWeights DeformationWeights::constant(const Rational& value) {
  return {compact(value), [value](int n) { return n == 0 ? Rational(1) : value; }};
}

DeformationWeights DeformationWeights::dunkl_ramirez(const Rational& a) {
  if (a <= 0 || a >= 1) throw ParamRange("dunkl_ramirez weights need 0 < a < 1");
  return {"dr:" + compact(a), [a](int n) {
            return n == 0 ? Rational(1) : Rational((1 - a) / pow(a, static_cast<unsigned>(n)));
          }};
}

DeformationWeights DeformationWeights::explicit_list(std::vector<Rational> values) {
  std::string desc = "[";
  for (std::size_t i = 0; i < values.size(); ++i) desc += (i ? "," : "") + compact(values[i]);
  desc += "]";
  auto shared = std::make_shared<const std::vector<Rational>>(std::move(values));
  return {desc, [shared](int n) {
            if (n < 0 || n >= static_cast<int>(shared->size()))
              throw RuleDomainError("deformation weight v_" + std::to_string(n) + " not listed");
            return (*shared)[n];
          }};
}

DeformationWeights DeformationWeights::parse(const std::string& text) {
  static const std::regex power_re(R"(^\s*([0-9]+(?:/[0-9]+)?)\s*\^\s*n\s*$)");
  static const std::regex shifted_re(R"(^\s*([0-9]+(?:/[0-9]+)?)\s*\^\s*\(\s*n\s*-\s*1\s*\)\s*$)");
  static const std::regex constant_re(R"(^\s*([0-9]+(?:/[0-9]+)?)\s*$)");
  static const std::regex dr_re(R"(^\s*dr\s*:\s*([0-9]+/[0-9]+)\s*$)");
  std::smatch match;
  if (std::regex_match(text, match, power_re)) return power(parse_rational(match[1].str()));
  if (std::regex_match(text, match, shifted_re)) return shifted_power(parse_rational(match[1].str()));
  if (std::regex_match(text, match, constant_re)) return constant(parse_rational(match[1].str()));
  if (std::regex_match(text, match, dr_re)) return dunkl_ramirez(parse_rational(match[1].str()));
  throw SpecError("unrecognized deformation weights '" + text + "'");
}

void DeformationWeights::validate(int n_max) const {
  if (v_(0) != 1) throw ParamRange("deformation weights need v_0 = 1, got " + compact(v_(0)));
  Rational partial(0);
  for (int n = 0; n <= n_max; ++n) {
    const Rational vn = v_(n);
    if (vn <= 0) throw ParamRange("deformation weight v_" + std::to_string(n) + " is not positive");
    if (n >= 1 && partial > vn)
      throw WeightConditionViolated("n=" + std::to_string(n) + ": sum_{k<n} v_k = " + compact(partial) + " > v_n = " + compact(vn));
    partial += vn;
  }
}

std::map<Element, FiniteMeasure> deformation_measures(const DeformationWeights& v, int n_max) {
  v.validate(n_max);
  std::map<Element, FiniteMeasure> q;
  for (int n = 1; n <= n_max; ++n) {
    const Rational vn = v(n);
    FiniteMeasure::Weights w;
    Rational below(0);
    for (int m = 0; m < n; ++m) {
      Rational coeff = v(m) / vn;
      below += coeff;
      w.emplace_hint(w.end(), nn(m), std::move(coeff));
    }
    w.emplace_hint(w.end(), nn(n), Rational(1 - below));
    q.emplace(nn(n), FiniteMeasure(std::move(w)));
  }
  return q;
}

HypergroupDescriptor max_deformation(const DeformationWeights& v, int n_max) {
  auto q = std::make_shared<const std::map<Element, FiniteMeasure>>(deformation_measures(v, n_max));
  HypergroupDescriptor::Parts parts;
  parts.name = "max_deformation(" + v.description() + ")";
  parts.carrier = "Z+";
  parts.identity = nn(0);
  parts.involution = [](const Element& x) { return x; };
  parts.involution_kind = "identity";
  parts.claims = {Claim::Hermitian, Claim::Hypergroup};
  parts.contains = [](const Element& x) { return x.kind() == Element::Kind::NonNeg; };
  parts.rule = [q, n_max](const Element& a, const Element& b) {
    const std::int64_t m = a.as_nonneg();
    const std::int64_t n = b.as_nonneg();
    if (m != n || n == 0) return point_mass(nn(std::max(m, n)));
    if (n > n_max)
      throw RuleDomainError("max_deformation: diagonal at " + std::to_string(n) + " beyond n_max " +
                            std::to_string(n_max));
    return q->at(a);
  };
  parts.spec = {{"builtin", "max_deformation"}, {"params", {{"v", v.description()}, {"n_max", n_max}}}};
  return HypergroupDescriptor(std::move(parts));
}

bool ConditionReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ConditionCheck& c) { return c.passed; });
}

const ConditionCheck* ConditionReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

nlohmann::json to_json(const ConditionReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json entry = {{"condition", c.condition}, {"passed", c.passed}};
    if (!c.witness.empty()) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  return {{"scope", r.scope}, {"window_relative", r.window_relative}, {"passed", r.passed()}, {"checks", checks}};
}

namespace {

struct IdempotentStructure {
  Elements carrier;
  Elements idempotents;      // E(S), sorted
  Elements non_idempotents;  // S~
  Element identity;
};

// m < n iff mn = n != m on E(S).
bool precedes(const CarrierAlgebra& s, const Element& m, const Element& n) {
  return m != n && s.multiply(m, n) == n;
}

void record(ConditionReport& report, std::string name, bool passed, std::string witness = {}) {
  report.checks.push_back({std::move(name), passed, passed ? std::string() : std::move(witness)});
}

}  // namespace

ConditionReport check_idempotent_deformation(const CarrierAlgebra& s, const IdempotentMeasures& q,
                                             const std::optional<Elements>& window) {
  if (!s.identity()) throw NoIdentity(s.name() + " has no identity");
  ConditionReport report;
  Elements carrier;
  if (s.is_finite()) {
    carrier = s.elements();
    report.scope = "finite carrier";
  } else {
    if (!window) throw SpecError(s.name() + " is infinite; a window is required");
    carrier = *window;
    report.window_relative = true;
    report.scope = "window " + Window(carrier).describe();
  }
  const Element e = *s.identity();
  if (std::find(carrier.begin(), carrier.end(), e) == carrier.end()) carrier.insert(carrier.begin(), e);

  for (const auto& a : carrier)
    for (const auto& b : carrier)
      if (s.multiply(a, b) != s.multiply(b, a))
        throw NotCommutative(s.name() + ": " + to_string(a) + "*" + to_string(b) + " != " + to_string(b) + "*" +
                             to_string(a));

  Elements idem, tilde, idem0;
  for (const auto& x : carrier) (s.is_idempotent(x) ? idem : tilde).push_back(x);
  for (const auto& x : idem)
    if (x != e) idem0.push_back(x);

  // Action-free: no unit other than e fixes every non-identity idempotent.
  {
    std::string witness;
    for (const auto& g : carrier) {
      if (g == e) continue;
      const bool unit = std::any_of(carrier.begin(), carrier.end(),
                                    [&](const Element& h) { return s.multiply(g, h) == e && s.multiply(h, g) == e; });
      if (!unit) continue;
      const bool fixes = std::all_of(idem0.begin(), idem0.end(), [&](const Element& m) { return s.multiply(g, m) == m; });
      if (fixes) {
        witness = "unit " + s.element_name(g) + " fixes E_0(S)";
        break;
      }
    }
    record(report, "action-free", witness.empty(), witness);
  }

  // (i) E(S) finite or a copy of (Z+, <, max): on a window, E(S) must be a chain.
  {
    std::string witness;
    for (std::size_t i = 0; i < idem.size() && witness.empty(); ++i)
      for (std::size_t j = i + 1; j < idem.size(); ++j) {
        const Element mn = s.multiply(idem[i], idem[j]);
        if (!s.is_finite() && mn != idem[i] && mn != idem[j]) {
          witness = to_string(idem[i]) + " and " + to_string(idem[j]) + " are incomparable";
          break;
        }
      }
    record(report, "(i) E(S) finite or order-isomorphic to (Z+,max)", witness.empty(), witness);
  }

  // (ii) S~ is an ideal.
  {
    std::string witness;
    for (const auto& t : tilde) {
      for (const auto& x : carrier) {
        const Element tx = s.multiply(t, x);
        if (s.is_idempotent(tx)) {
          witness = s.element_name(t) + "*" + s.element_name(x) + " = " + s.element_name(tx) + " is idempotent";
          break;
        }
      }
      if (!witness.empty()) break;
    }
    record(report, "(ii) S~ is an ideal", witness.empty(), witness);
  }

  std::string missing;
  for (const auto& n : idem0)
    if (!q.contains(n)) {
      missing = "no measure q_n for n = " + s.element_name(n);
      break;
    }
  record(report, "q_n supplied for every n in E_0(S)", missing.empty(), missing);
  if (!missing.empty()) return report;

  // (iii) Q_n subset of E(S).
  {
    std::string witness;
    for (const auto& n : idem0)
      for (const auto& [j, w] : q.at(n).weights())
        if (witness.empty() && !s.is_idempotent(j))
          witness = "Q_" + s.element_name(n) + " contains non-idempotent " + s.element_name(j);
    record(report, "(iii) Q_n within E(S)", witness.empty(), witness);
  }

  // (iv) Q_n m = {nm} for m in S~.
  {
    std::string witness;
    for (const auto& n : idem0)
      for (const auto& m : tilde) {
        const Element nm = s.multiply(n, m);
        for (const auto& [j, w] : q.at(n).weights())
          if (witness.empty() && s.multiply(j, m) != nm)
            witness = "Q_" + s.element_name(n) + "*" + s.element_name(m) + " contains " +
                      s.element_name(s.multiply(j, m)) + " != " + s.element_name(nm);
      }
    record(report, "(iv) Q_n m = {nm} for m in S~", witness.empty(), witness);
  }

  // (v) L_n within Q_n within L_n u {n}.
  auto lower = [&](const Element& n) {
    std::set<Element> l;
    for (const auto& j : idem)
      if (precedes(s, j, n)) l.insert(j);
    return l;
  };
  {
    std::string witness;
    for (const auto& n : idem0) {
      if (!witness.empty()) break;
      const std::set<Element> l = lower(n);
      const std::set<Element> qn = support(q.at(n));
      for (const auto& j : l)
        if (!qn.contains(j)) {
          witness = "L_" + s.element_name(n) + " element " + s.element_name(j) + " missing from Q_n";
          break;
        }
      for (const auto& j : qn)
        if (witness.empty() && j != n && !l.contains(j))
          witness = "Q_" + s.element_name(n) + " element " + s.element_name(j) + " outside L_n u {n}";
    }
    record(report, "(v) L_n within Q_n within L_n u {n}", witness.empty(), witness);
  }

  // (vi) weight identities when #E(S) > 2.
  {
    std::string alpha_witness, beta_witness;
    if (idem.size() > 2) {
      for (const auto& n : idem0) {
        const FiniteMeasure& qn = q.at(n);
        for (const auto& m : idem0) {
          if (!precedes(s, m, n) || !alpha_witness.empty()) continue;
          if (qn.weight(e) != qn.weight(m) * q.at(m).weight(e))
            alpha_witness = "q_" + s.element_name(n) + "(e) != q_n(" + s.element_name(m) + ") q_m(e)";
        }
        Rational sum(1);
        for (const auto& k : lower(n)) {
          if (k == e) continue;
          const Rational qk = q.at(k).weight(e);
          if (sgn(qk) == 0) {
            beta_witness = "q_" + s.element_name(k) + "(e) = 0";
            break;
          }
          sum += 1 / qk;
        }
        if (beta_witness.empty() && qn.weight(e) * sum > 1)
          beta_witness = "q_" + s.element_name(n) + "(e)(1 + sum 1/q_k(e)) = " + to_fraction_string(qn.weight(e) * sum) +
                         " > 1";
      }
    }
    record(report, "(vi)(alpha) q_n(e) = q_n(m) q_m(e)", alpha_witness.empty(), alpha_witness);
    record(report, "(vi)(beta) q_n(e)(1 + sum_k 1/q_k(e)) <= 1", beta_witness.empty(), beta_witness);
  }
  return report;
}

HypergroupDescriptor deform(const CarrierAlgebra& s, const IdempotentMeasures& q, const std::optional<Elements>& window) {
  const ConditionReport report = check_idempotent_deformation(s, q, window);
  if (const ConditionCheck* failed = report.first_failure())
    throw ConditionsNotVerified(failed->condition + (failed->witness.empty() ? "" : ": " + failed->witness));

  const Elements carrier = s.is_finite() ? s.elements() : *window;
  const bool all_idempotent =
      std::all_of(carrier.begin(), carrier.end(), [&](const Element& x) { return s.is_idempotent(x); });

  auto measures = std::make_shared<const IdempotentMeasures>(q);
  const Element e = *s.identity();
  HypergroupDescriptor::Parts parts;
  parts.name = "deform(" + s.name() + ")";
  parts.carrier = s.name();
  parts.identity = e;
  parts.contains = [s](const Element& x) { return s.contains(x); };
  parts.window = [s](int r) { return s.sample(r); };
  if (s.is_finite()) parts.finite_carrier = s.elements();
  parts.rule = [s, measures, e](const Element& m, const Element& n) {
    if (m == n && m != e && s.is_idempotent(m)) {
      auto it = measures->find(m);
      if (it == measures->end()) throw RuleDomainError("no deformation measure at " + to_string(m));
      return it->second;
    }
    return point_mass(s.multiply(m, n));
  };
  if (all_idempotent) {
    parts.claims = {Claim::Hermitian, Claim::Hypergroup};
    parts.involution = [](const Element& x) { return x; };
    parts.involution_kind = "identity";
  } else {
    parts.claims = {Claim::Commutative, Claim::SemiconvoOnly};
  }
  parts.spec = {{"builtin", "deformation"}, {"params", {{"semigroup", s.name()}}}};
  return HypergroupDescriptor(std::move(parts));
}

}  // namespace hyperconv
