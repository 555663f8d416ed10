#include "hyperconv/hypergroup.hpp"

#include "hyperconv/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace hyperconv {

std::string to_string(Claim c) {
  switch (c) {
    case Claim::Commutative: return "Commutative";
    case Claim::Hermitian: return "Hermitian";
    case Claim::Hypergroup: return "Hypergroup";
    case Claim::SemiconvoOnly: return "SemiconvoOnly";
  }
  return "?";
}

// Readers never see a half-written entry: inserts happen under the unique
// lock after the measure is fully built. Two threads may compute the same
// pair; the first insert wins.
struct HypergroupDescriptor::Cache {
  static constexpr std::size_t kCapacity = 200000;
  mutable std::shared_mutex mutex;
  std::map<std::pair<Element, Element>, FiniteMeasure> entries;
};

HypergroupDescriptor::HypergroupDescriptor(Parts parts)
    : parts_(std::make_shared<const Parts>(std::move(parts))), cache_(std::make_shared<Cache>()) {
  if (!parts_->rule) throw SpecError("descriptor '" + parts_->name + "' has no rule");
  if (!parts_->contains) throw SpecError("descriptor '" + parts_->name + "' has no membership predicate");
}

Element HypergroupDescriptor::involute(const Element& x) const {
  if (!parts_->involution) throw NoInvolution(name() + " has no involution");
  return (*parts_->involution)(x);
}

const Elements& HypergroupDescriptor::finite_carrier() const {
  if (!parts_->finite_carrier) throw RuleDomainError(name() + " has an infinite carrier");
  return *parts_->finite_carrier;
}

FiniteMeasure HypergroupDescriptor::convolve(const Element& m, const Element& n) const {
  auto key = std::make_pair(m, n);
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->entries.find(key);
    if (it != cache_->entries.end()) return it->second;
  }
  if (!contains(m) || !contains(n))
    throw RuleDomainError(name() + ": (" + to_string(m) + "," + to_string(n) + ") outside the carrier");
  FiniteMeasure result = parts_->rule(m, n);
  std::unique_lock lock(cache_->mutex);
  if (cache_->entries.size() < Cache::kCapacity) cache_->entries.try_emplace(std::move(key), result);
  return result;
}

FiniteMeasure HypergroupDescriptor::convolve(const FiniteMeasure& mu, const FiniteMeasure& nu) const {
  return convolve_measures(mu, nu, [this](const Element& a, const Element& b) { return convolve(a, b); });
}

ConvolutionRule HypergroupDescriptor::rule() const {
  return [parts = parts_](const Element& m, const Element& n) {
    if (!parts->contains(m) || !parts->contains(n))
      throw RuleDomainError(parts->name + ": (" + to_string(m) + "," + to_string(n) + ") outside the carrier");
    return parts->rule(m, n);
  };
}

Elements HypergroupDescriptor::window(int radius) const {
  if (parts_->finite_carrier) return *parts_->finite_carrier;
  if (parts_->window) return parts_->window(radius);
  Elements out;
  for (int i = 0; i <= radius; ++i) out.push_back(nn(i));
  return out;
}

std::size_t HypergroupDescriptor::cache_size() const {
  std::shared_lock lock(cache_->mutex);
  return cache_->entries.size();
}

Window::Window(Elements elements) : elements_(std::move(elements)) {
  std::set<Element> seen;
  for (const auto& x : elements_)
    if (!seen.insert(x).second) throw SpecError("window lists " + to_string(x) + " twice");
}

Window Window::range(std::int64_t lo, std::int64_t hi) {
  Elements xs;
  for (std::int64_t i = lo; i <= hi; ++i) xs.push_back(nn(i));
  return Window(std::move(xs));
}

bool Window::contains(const Element& x) const {
  return std::find(elements_.begin(), elements_.end(), x) != elements_.end();
}

std::string Window::describe() const {
  if (elements_.empty()) return "{}";
  if (elements_.size() <= 4) {
    std::string out = to_string(elements_);
    out.front() = '{';
    out.back() = '}';
    return out;
  }
  return "{" + to_string(elements_.front()) + ", ..., " + to_string(elements_.back()) + "} (" +
         std::to_string(elements_.size()) + " elements)";
}

bool AxiomReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

void AxiomReport::merge(const AxiomReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

nlohmann::json to_json(const AxiomReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json entry = {{"axiom", c.axiom}, {"passed", c.passed}, {"cases", c.cases}};
    if (c.counterexample) {
      nlohmann::json elems = nlohmann::json::array();
      for (const auto& x : c.counterexample->elements) elems.push_back(to_json(x));
      nlohmann::json measures = nlohmann::json::array();
      for (const auto& m : c.counterexample->measures) measures.push_back(to_json(m));
      entry["counterexample"] = {{"elements", elems}, {"measures", measures}, {"detail", c.counterexample->detail}};
    }
    checks.push_back(std::move(entry));
  }
  return {{"descriptor", r.descriptor}, {"window", r.window}, {"passed", r.passed()}, {"checks", checks}};
}

FiniteMeasure convolve(const HypergroupDescriptor& k, const Element& m, const Element& n) { return k.convolve(m, n); }

FiniteMeasure convolve_sequence(const HypergroupDescriptor& k, const Elements& xs) {
  if (xs.empty()) throw InvalidSequence("convolve_sequence needs at least one factor");
  if (!k.contains(xs.front())) throw RuleDomainError(k.name() + ": " + to_string(xs.front()) + " outside the carrier");
  FiniteMeasure acc = point_mass(xs.front());
  for (std::size_t i = 1; i < xs.size(); ++i) acc = k.convolve(acc, point_mass(xs[i]));
  return acc;
}

namespace {

AxiomReport make_report(const HypergroupDescriptor& k, const Window& w) {
  return AxiomReport{k.name(), w.describe(), {}};
}

void fail(AxiomCheck& check, Counterexample cx) {
  if (check.passed) check.counterexample = std::move(cx);
  check.passed = false;
}

// Runs `body`, turning an undefined rule evaluation into a failure entry.
template <typename Body>
void guarded(AxiomCheck& check, const Elements& at, Body&& body) {
  try {
    body();
  } catch (const RuleDomainError& e) {
    fail(check, Counterexample{at, {}, std::string("rule undefined: ") + e.what()});
  }
}

FiniteMeasure involute_measure(const HypergroupDescriptor& k, const FiniteMeasure& mu) {
  FiniteMeasure::Weights w;
  for (const auto& [x, p] : mu.weights()) w[k.involute(x)] += p;
  return FiniteMeasure(std::move(w));
}

}  // namespace

AxiomReport check_associativity(const HypergroupDescriptor& k, const Window& w) {
  AxiomReport report = make_report(k, w);
  AxiomCheck check{"associativity"};
  for (const auto& m : w.elements())
    for (const auto& n : w.elements())
      for (const auto& p : w.elements()) {
        ++check.cases;
        guarded(check, {m, n, p}, [&] {
          const FiniteMeasure lhs = k.convolve(k.convolve(m, n), point_mass(p));
          const FiniteMeasure rhs = k.convolve(point_mass(m), k.convolve(n, p));
          if (lhs != rhs) fail(check, Counterexample{{m, n, p}, {lhs, rhs}, "(m*n)*k != m*(n*k)"});
        });
      }
  report.checks.push_back(std::move(check));
  return report;
}

AxiomReport check_identity(const HypergroupDescriptor& k, const Window& w) {
  AxiomReport report = make_report(k, w);
  const Element& e = k.identity();
  if (!k.contains(e) || !w.contains(e)) {
    AxiomCheck missing{"IdentityMissing", false, 1,
                       Counterexample{{e}, {}, "identity " + to_string(e) + " is not in the carrier window"}};
    report.checks.push_back(std::move(missing));
    return report;
  }
  AxiomCheck check{"identity"};
  for (const auto& x : w.elements()) {
    ++check.cases;
    guarded(check, {x}, [&] {
      const FiniteMeasure left = k.convolve(e, x);
      const FiniteMeasure right = k.convolve(x, e);
      const FiniteMeasure dx = point_mass(x);
      if (left != dx || right != dx) fail(check, Counterexample{{x}, {left, right}, "e*x or x*e differs from delta_x"});
    });
  }
  report.checks.push_back(std::move(check));
  return report;
}

AxiomReport check_involution(const HypergroupDescriptor& k, const Window& w) {
  if (!k.has_involution()) throw NoInvolution(k.name() + " has no involution");
  AxiomReport report = make_report(k, w);
  const Element& e = k.identity();

  AxiomCheck self_inverse{"involution self-inverse"};
  for (const auto& m : w.elements()) {
    ++self_inverse.cases;
    guarded(self_inverse, {m}, [&] {
      const Element once = k.involute(m);
      if (!k.contains(once) || k.involute(once) != m)
        fail(self_inverse, Counterexample{{m, once}, {}, "involution is not a self-inverse bijection"});
    });
  }

  AxiomCheck anti{"involution anti-homomorphism"};
  AxiomCheck identity_criterion{"identity in spt(m * n~) iff m = n"};
  const bool bijective = self_inverse.passed;
  for (const auto& m : w.elements())
    for (const auto& n : w.elements()) {
      if (!bijective) break;
      ++anti.cases;
      ++identity_criterion.cases;
      guarded(anti, {m, n}, [&] {
        const FiniteMeasure lhs = involute_measure(k, k.convolve(m, n));
        const FiniteMeasure rhs = k.convolve(k.involute(n), k.involute(m));
        if (lhs != rhs) fail(anti, Counterexample{{m, n}, {lhs, rhs}, "(m*n)~ != n~ * m~"});
      });
      guarded(identity_criterion, {m, n}, [&] {
        const FiniteMeasure mn = k.convolve(m, k.involute(n));
        const bool has_e = mn.weight(e) > 0;
        if (has_e != (m == n))
          fail(identity_criterion, Counterexample{{m, n}, {mn}, has_e ? "e in support with m != n" : "e missing for m = n"});
      });
    }
  report.checks.push_back(std::move(self_inverse));
  report.checks.push_back(std::move(anti));
  report.checks.push_back(std::move(identity_criterion));
  return report;
}

AxiomReport check_commutativity(const HypergroupDescriptor& k, const Window& w) {
  AxiomReport report = make_report(k, w);
  AxiomCheck check{"commutativity"};
  for (const auto& m : w.elements())
    for (const auto& n : w.elements()) {
      ++check.cases;
      guarded(check, {m, n}, [&] {
        const FiniteMeasure mn = k.convolve(m, n);
        const FiniteMeasure nm = k.convolve(n, m);
        if (mn != nm) fail(check, Counterexample{{m, n}, {mn, nm}, "m*n != n*m"});
      });
    }
  report.checks.push_back(std::move(check));
  return report;
}

AxiomReport check_axioms(const HypergroupDescriptor& k, const Window& w) {
  AxiomReport report = check_identity(k, w);
  report.merge(check_associativity(k, w));
  if (k.has_involution()) report.merge(check_involution(k, w));
  return report;
}

std::set<Element> center(const HypergroupDescriptor& k, const Window& w) {
  std::set<Element> out;
  for (const auto& x : w.elements()) {
    bool singleton = true;
    for (const auto& y : w.elements()) {
      if (!k.convolve(x, y).is_point_mass()) {
        singleton = false;
        break;
      }
    }
    if (singleton) out.insert(x);
  }
  return out;
}

HypergroupDescriptor semigroup_descriptor(const CarrierAlgebra& s) {
  if (!s.identity()) throw NoIdentity(s.name() + " has no identity element");
  HypergroupDescriptor::Parts parts;
  parts.name = s.name();
  parts.carrier = s.name();
  parts.rule = [s](const Element& a, const Element& b) { return point_mass(s.multiply(a, b)); };
  parts.identity = *s.identity();
  parts.contains = [s](const Element& a) { return s.contains(a); };
  parts.window = [s](int r) { return s.sample(r); };
  if (s.is_finite()) parts.finite_carrier = s.elements();
  if (s.has_inverse()) {
    parts.involution = [s](const Element& a) { return s.inverse(a); };
    parts.involution_kind = "inverse";
    parts.claims.insert(Claim::Hypergroup);
  } else {
    parts.claims.insert(Claim::SemiconvoOnly);
  }
  if (s.commutative()) parts.claims.insert(Claim::Commutative);
  parts.spec = {{"builtin", "semigroup"}, {"params", {{"algebra", s.name()}}}};
  return HypergroupDescriptor(std::move(parts));
}

}  // namespace hyperconv
