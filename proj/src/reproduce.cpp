#include "hyperconv/reproduce.hpp"

#include "hyperconv/constructions.hpp"
#include "hyperconv/errors.hpp"
#include "hyperconv/ramsey.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

namespace hyperconv {

namespace {

using nlohmann::json;

std::string frac(const Rational& r) { return to_fraction_string(r); }

json elements_json(const Elements& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

Elements nonneg_range(std::int64_t lo, std::int64_t hi) {
  Elements out;
  for (std::int64_t i = lo; i <= hi; ++i) out.push_back(nn(i));
  return out;
}

// `count` distinct values drawn from lo..hi in draw order.
std::vector<std::int64_t> distinct_draws(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, int count) {
  std::vector<std::int64_t> pool;
  for (std::int64_t v = lo; v <= hi; ++v) pool.push_back(v);
  std::vector<std::int64_t> out;
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
    out.push_back(pool[i]);
  }
  return out;
}

Reproduction cp2_mod3() {
  Reproduction r{"cp2-mod3", false, json::object(), ""};
  const Cp2Mod3Report pairs = verify_cp2_mod3(200);
  const ExperimentReport search =
      search_sequence(cp2(), Coloring::mod_k(3), 2, Window(nonneg_range(1, 60)), Criterion::mono());
  json violations = json::array();
  for (const auto& v : pairs.violations) violations.push_back({{"m", v.m}, {"n", v.n}});
  const FiniteMeasure sample = cp2().convolve(nn(2), nn(1));
  r.details = {{"window_max", pairs.window_max},
               {"pairs_checked", pairs.pairs},
               {"violations", violations},
               {"sample_pair", {{"m", 1}, {"n", 2}, {"product", to_json(sample)}}},
               {"search", to_json(search)}};
  r.passed = pairs.passed() && search.verdict == Verdict::Exhausted;
  r.summary = std::to_string(pairs.pairs) + " pairs meet two mod-3 classes; depth-2 mono search on {1..60} " +
              to_string(search.verdict) + " after " + std::to_string(search.nodes) + " nodes";
  return r;
}

json alpha_json(const AlphaInstance& a) {
  return {{"k", a.k},
          {"i", a.i},
          {"m", a.m},
          {"n", a.n},
          {"l0", a.l0},
          {"l1", a.l1},
          {"lhs", frac(a.lhs)},
          {"closed_form", frac(a.closed_form)},
          {"residue_form", frac(a.residue_form)},
          {"bound", frac(a.bound)},
          {"match", a.match()},
          {"below_bound", a.below_bound()}};
}

Reproduction cp2_alpha() {
  Reproduction r{"cp2-alpha", true, json::object(), ""};
  const AlphaInstance canonical = verify_cp2_alpha(2, 1, 32, 112);
  r.passed = canonical.match() && canonical.below_bound();
  json extra = json::array();
  int count = 0;
  for (int k = 2; k <= 3; ++k) {
    const std::int64_t q = std::int64_t{1} << (2 * k);
    for (int i = 1; i <= 5; i += 2)
      for (std::int64_t l0 = 1; l0 <= 3; ++l0)
        for (std::int64_t l1 = 3 * l0 + 1; l1 <= 3 * l0 + 4; ++l1) {
          const std::int64_t m = l0 * q + i - 1;
          const std::int64_t n = l1 * q + i - 1;
          if (!(q < m) || !(2 * m < n - m) || (m == 32 && n == 112 && k == 2 && i == 1)) continue;
          const AlphaInstance a = verify_cp2_alpha(k, i, m, n);
          r.passed = r.passed && a.match() && a.below_bound();
          extra.push_back(alpha_json(a));
          ++count;
        }
  }
  r.details = {{"canonical", alpha_json(canonical)}, {"additional", extra}};
  r.summary = "k=2 i=1 m=32 n=112: lhs " + frac(canonical.lhs) + " = closed form " + frac(canonical.closed_form) +
              " < bound " + frac(canonical.bound) + "; " + std::to_string(count) + " further instances checked";
  return r;
}

Reproduction orbit_cp1() {
  Reproduction r{"orbit-cp1", true, json::object(), ""};
  const FiniteAction sign = sign_action();
  const HypergroupDescriptor orbits = automorphism_orbit_hypergroup(sign);
  const HypergroupDescriptor k = cp1();
  auto lift = [&](std::int64_t n) { return sign.orbit_of(Element::integer(n)); };
  auto project = [](const Element& orbit) { return nn(-orbit.representative().as_int()); };
  json mismatches = json::array();
  std::uint64_t compared = 0;
  for (std::int64_t m = 0; m <= 50; ++m)
    for (std::int64_t n = 0; n <= 50; ++n) {
      const FiniteMeasure product = orbits.convolve(lift(m), lift(n));
      FiniteMeasure::Weights mapped;
      for (const auto& [x, w] : product.weights()) mapped[project(x)] += w;
      const FiniteMeasure expected = k.convolve(nn(m), nn(n));
      ++compared;
      if (FiniteMeasure(std::move(mapped)) != expected) {
        r.passed = false;
        mismatches.push_back({{"m", m}, {"n", n}});
      }
    }
  r.details = {{"window", "0..50"}, {"pairs", compared}, {"mismatches", mismatches}, {"bijection", "{-n,n} -> n"}};
  r.summary = std::to_string(compared) + " products of Z/{+-1} compared with CP1, " +
              std::to_string(mismatches.size()) + " mismatches";
  return r;
}

Reproduction quotient_table() {
  Reproduction r{"quotient-table", true, json::object(), ""};
  const DeformationWeights v = DeformationWeights::shifted_power(3);
  const HypergroupDescriptor k = max_deformation(v, 20);
  const Elements h = {nn(0), nn(1)};
  const HypergroupDescriptor q = ross_quotient(k, h, Window(k.window(12)));
  const auto qs = deformation_measures(v, 20);
  json rows = json::array();
  for (std::int64_t m = 2; m <= 12; ++m) {
    const Element cls = quotient_class(k, h, nn(m));
    const FiniteMeasure got = q.convolve(cls, cls);
    const FiniteMeasure& qm = qs.at(nn(m));
    FiniteMeasure::Weights w;
    w[quotient_class(k, h, nn(0))] = qm.weight(nn(0)) + qm.weight(nn(1));
    for (std::int64_t j = 2; j <= m; ++j) w[quotient_class(k, h, nn(j))] = qm.weight(nn(j));
    const FiniteMeasure expected{std::move(w)};
    const bool ok = got == expected;
    r.passed = r.passed && ok;
    rows.push_back({{"m", m},
                    {"product", to_json(got)},
                    {"q_m(0)+q_m(1)", frac(qm.weight(nn(0)) + qm.weight(nn(1)))},
                    {"matches", ok}});
  }
  const AxiomReport axioms = check_axioms(q, Window(q.window(12)));
  r.passed = r.passed && axioms.passed();
  r.details = {{"weights", v.description()}, {"subgroup", elements_json(h)}, {"rows", rows}, {"axioms", to_json(axioms)}};
  r.summary = "{m}*{m} = (q_m(0)+q_m(1)) {0,1} + sum_k q_m(k) {k} for m = 2..12, axioms " +
              std::string(axioms.passed() ? "pass" : "fail");
  return r;
}

Reproduction linearization_match() {
  Reproduction r{"linearization-match", true, json::object(), ""};
  const int n_max = 30;
  struct Case {
    Recurrence rec;
    HypergroupDescriptor closed;
  };
  const std::vector<Case> cases = {{Recurrence::chebyshev_first(), cp1()},
                                   {Recurrence::chebyshev_second_normalized(), cp2()}};
  json out = json::array();
  for (const auto& c : cases) {
    const LinearizationTable table = linearize(c.rec, n_max);
    const HypergroupDescriptor built = polynomial_hypergroup(c.rec, n_max);
    std::uint64_t mismatches = 0, nonpositive = 0;
    for (int n = 0; n <= n_max; ++n)
      for (int m = 0; m <= n_max; ++m) {
        if (built.convolve(nn(n), nn(m)) != c.closed.convolve(nn(n), nn(m))) ++mismatches;
        if (table.g(n, m, std::abs(n - m)) <= 0 || table.g(n, m, n + m) <= 0) ++nonpositive;
      }
    r.passed = r.passed && mismatches == 0 && nonpositive == 0;
    out.push_back({{"family", c.rec.name},
                   {"against", c.closed.name()},
                   {"n_max", n_max},
                   {"mismatches", mismatches},
                   {"nonpositive_extremes", nonpositive},
                   {"g(2,3;1)", frac(table.g(2, 3, 1))},
                   {"g(2,3;5)", frac(table.g(2, 3, 5))}});
  }
  r.details = {{"cases", out}};
  r.summary = "linearization of T_n and U_n/(n+1) reproduces CP1 and CP2 for n,m <= 30";
  return r;
}

Reproduction recurrent(std::uint64_t seed) {
  Reproduction r{"recurrent", true, json::object(), ""};
  std::mt19937_64 rng(seed);
  struct Case {
    HypergroupDescriptor k;
    std::int64_t max_term;
  };
  const std::vector<Case> cases = {{cp1(), 30},
                                   {cp2(), 30},
                                   {polynomial_hypergroup(Recurrence::gegenbauer_normalized(make_rational(1, 2)), 60),
                                    12}};
  json out = json::array();
  for (const auto& c : cases) {
    std::uint64_t subsets = 0, missing = 0;
    json first_failure;
    for (int trial = 0; trial < 100; ++trial) {
      Elements xs;
      for (auto v : distinct_draws(rng, 1, c.max_term, 5)) xs.push_back(nn(v));
      const RecurrenceReport rep = recurrent_witness(c.k, xs, 5);
      for (const auto& row : rep.rows) {
        ++subsets;
        if (!row.in_support) {
          ++missing;
          if (first_failure.is_null()) first_failure = {{"sequence", elements_json(xs)}, {"F", row.indices}};
        }
      }
    }
    r.passed = r.passed && missing == 0;
    json entry = {{"descriptor", c.k.name()}, {"sequences", 100}, {"subsets", subsets}, {"missing", missing}};
    if (!first_failure.is_null()) entry["first_failure"] = first_failure;
    out.push_back(entry);
  }
  r.details = {{"seed", seed}, {"cases", out}};
  r.summary = "s_F in spt(delta_F) for 100 seeded sequences of length 5 in CP1, CP2 and the Legendre hypergroup";
  return r;
}

Reproduction orbit_bound(std::uint64_t seed) {
  Reproduction r{"orbit-bound", true, json::object(), ""};
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  struct Case {
    std::string label;
    FiniteAction action;
    bool pairs;
  };
  const std::vector<Case> cases = {{"Z/{+-1}", sign_action(), false}, {"ZxZ/V4", klein_sign_action(), true}};
  const Coloring mod3 = Coloring::mod_k(3);
  json out = json::array();
  for (const auto& c : cases) {
    const std::vector<std::pair<std::string, HypergroupDescriptor>> modes = {
        {"automorphism", automorphism_orbit_hypergroup(c.action)}, {"affine", orbit_semiconvo(c.action)}};
    for (const auto& [mode, k] : modes) {
      std::uint64_t checked = 0, failures = 0;
      std::optional<Rational> worst_margin;
      for (int m = 1; m <= 4; ++m)
        for (int trial = 0; trial < 10; ++trial) {
          // Lifts with first coordinate divisible by 3: every finite product
          // lands in the orbit class of label 0 mod 3.
          Elements lift;
          const auto firsts = distinct_draws(rng, 1, 12, m);
          for (int j = 0; j < m; ++j) {
            const std::int64_t x = 3 * firsts[j] * (coin(rng) ? 1 : -1);
            lift.push_back(c.pairs ? Element::pair(x, std::uniform_int_distribution<int>(-4, 4)(rng))
                                   : Element::integer(x));
          }
          const std::set<Element> fp = fs_fp_set(c.action.carrier(), lift, m);
          for (const auto& u : fp)
            if (mod3.classify(c.action.orbit_of(u)) != 1) throw PreconditionViolated("lift is not monochromatic");
          std::vector<int> all(m);
          for (int j = 0; j < m; ++j) all[j] = j + 1;
          const OrbitMassBound b = orbit_mass_bound(k, lift, all);
          ++checked;
          if (!b.holds()) ++failures;
          const Rational margin = b.mass_at_tau_f - b.bound;
          if (!worst_margin || margin < *worst_margin) worst_margin = margin;
        }
      r.passed = r.passed && failures == 0;
      out.push_back({{"carrier", c.label},
                     {"mode", mode},
                     {"c", c.action.order()},
                     {"checked", checked},
                     {"failures", failures},
                     {"min_mass_minus_bound", frac(*worst_margin)}});
    }
  }
  const OrbitMassBound sample = orbit_mass_bound(automorphism_orbit_hypergroup(sign_action()),
                                                 {Element::integer(1), Element::integer(3), Element::integer(9)},
                                                 {1, 2, 3});
  r.details = {{"seed", seed},
               {"cases", out},
               {"sample", {{"lift", "[1,3,9]"},
                           {"tau_F", to_json(sample.tau_f)},
                           {"mass", frac(sample.mass_at_tau_f)},
                           {"bound", frac(sample.bound)}}}};
  r.summary = "delta_F'({tau_F}) >= 1/c^(m-1) (automorphism) and >= 1/c^m (affine) for lifted sequences, m <= 4";
  return r;
}

}  // namespace

const std::vector<std::string>& reproduction_names() {
  static const std::vector<std::string> names = {"cp2-mod3",           "cp2-alpha", "orbit-cp1",  "quotient-table",
                                                 "linearization-match", "recurrent", "orbit-bound"};
  return names;
}

Reproduction reproduce(const std::string& name, std::uint64_t seed) {
  if (name == "cp2-mod3") return cp2_mod3();
  if (name == "cp2-alpha") return cp2_alpha();
  if (name == "orbit-cp1") return orbit_cp1();
  if (name == "quotient-table") return quotient_table();
  if (name == "linearization-match") return linearization_match();
  if (name == "recurrent") return recurrent(seed);
  if (name == "orbit-bound") return orbit_bound(seed);
  throw SpecError("unknown reproduction '" + name + "'");
}

std::string to_markdown(const Reproduction& r) {
  std::ostringstream out;
  out << "## reproduce " << r.name << "\n\n";
  out << "- result: " << (r.passed ? "PASS" : "FAIL") << "\n";
  out << "- " << r.summary << "\n\n";
  out << "```json\n" << r.details.dump(2) << "\n```\n";
  return out.str();
}

}  // namespace hyperconv
