// End-to-end acceptance checks. Each criterion recomputes its expected values
// from closed forms or brute-force enumeration written out here, compares
// exactly, and must finish inside its time budget. One PASS/FAIL line each.

#include "hyperconv/constructions.hpp"
#include "hyperconv/ramsey.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace hyperconv;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

#define REQUIRE(cond, msg)                                  \
  do {                                                      \
    if (!(cond)) {                                          \
      std::ostringstream _s;                                \
      _s << msg;                                            \
      return Outcome{false, _s.str()};                      \
    }                                                       \
  } while (0)

FiniteMeasure cp1_formula(std::int64_t m, std::int64_t n) {
  FiniteMeasure::Weights w;
  w[nn(std::abs(n - m))] += make_rational(1, 2);
  w[nn(n + m)] += make_rational(1, 2);
  return FiniteMeasure(w);
}

FiniteMeasure cp2_formula(std::int64_t m, std::int64_t n) {
  FiniteMeasure::Weights w;
  const std::int64_t d = std::abs(m - n);
  for (std::int64_t k = 0; k <= std::min(m, n); ++k) w[nn(d + 2 * k)] += make_rational(d + 2 * k + 1, (m + 1) * (n + 1));
  return FiniteMeasure(w);
}

Outcome closed_form_tables() {
  const auto k1 = cp1(), k2 = cp2();
  for (int m = 0; m <= 30; ++m)
    for (int n = 0; n <= 30; ++n) {
      REQUIRE(k1.convolve(nn(m), nn(n)) == cp1_formula(m, n), "cp1 " << m << "*" << n);
      REQUIRE(k2.convolve(nn(m), nn(n)) == cp2_formula(m, n), "cp2 " << m << "*" << n);
    }
  return {true, "961 pairs each for cp1 and cp2"};
}

Outcome linearization_oracle() {
  const auto t = polynomial_hypergroup(Recurrence::chebyshev_first(), 30);
  const auto u = polynomial_hypergroup(Recurrence::chebyshev_second_normalized(), 30);
  std::uint64_t positive = 0;
  for (const auto* k : {&t, &u}) {
    const LinearizationTable* g = k->linearization();
    REQUIRE(g != nullptr, k->name() << " has no linearization table");
    for (int n = 0; n <= 30; ++n)
      for (int m = 0; m <= 30; ++m) {
        const auto expected = k == &t ? cp1_formula(m, n) : cp2_formula(m, n);
        REQUIRE(k->convolve(nn(m), nn(n)) == expected, k->name() << " " << m << "*" << n);
        REQUIRE(g->g(n, m, std::abs(n - m)) > 0, "g(" << n << "," << m << ";|n-m|) not positive");
        REQUIRE(g->g(n, m, n + m) > 0, "g(" << n << "," << m << ";n+m) not positive");
        positive += 2;
      }
  }
  return {true, std::to_string(positive) + " extreme coefficients strictly positive"};
}

Element zo(std::int64_t n) { return Element::orbit({Element::integer(-n), Element::integer(n)}); }

Outcome orbit_equivalence() {
  const auto orbits = automorphism_orbit_hypergroup(sign_action());
  const auto k = cp1();
  for (int m = 0; m <= 50; ++m)
    for (int n = 0; n <= 50; ++n) {
      FiniteMeasure::Weights mapped;
      const FiniteMeasure base = k.convolve(nn(m), nn(n));
      for (const auto& [x, w] : base.weights()) mapped[zo(x.as_nonneg())] += w;
      REQUIRE(orbits.convolve(zo(m), zo(n)) == FiniteMeasure(mapped), "orbit " << m << "*" << n);
    }
  REQUIRE(orbits.identity() == zo(0), "identity");
  return {true, "2601 pairs on {0..50}"};
}

Outcome axiom_sweeps() {
  const auto v3 = DeformationWeights::shifted_power(3);
  const auto base = max_deformation(v3, 20);
  const auto dc = double_coset_hypergroup(symmetric_group_s3(), {Element::table(0), Element::table(1)});
  const auto quotient = ross_quotient(base, {nn(0), nn(1)}, Window(base.window(12)));
  const std::vector<std::pair<HypergroupDescriptor, Window>> cases = {
      {dunkl_ramirez(make_rational(1, 3)), Window::range(0, 10)},
      {max_deformation(DeformationWeights::power(2), 20), Window::range(0, 12)},
      {dc, Window(dc.finite_carrier())},
      {quotient, Window(quotient.window(12))},
  };
  std::ostringstream sizes;
  for (const auto& [k, w] : cases) {
    REQUIRE(k.has_involution(), k.name() << " has no involution");
    for (const auto& r : {check_associativity(k, w), check_identity(k, w), check_involution(k, w)})
      REQUIRE(r.passed(), k.name() << ": " << to_json(r).dump());
    sizes << k.name() << "=" << w.size() << " ";
  }
  return {true, sizes.str()};
}

Outcome cp2_mod3() {
  const auto k = cp2();
  std::uint64_t pairs = 0;
  for (std::int64_t m = 1; m <= 200; ++m)
    for (std::int64_t n = m + 1; n <= 200; ++n) {
      std::set<int> residues;
      for (std::int64_t j = 0; j <= m; ++j) residues.insert(static_cast<int>((n - m + 2 * j) % 3));
      REQUIRE(residues.size() >= 2, "closed form support of " << n << "*" << m << " in one class");
      std::set<int> got;
      const FiniteMeasure mu = k.convolve(nn(n), nn(m));
      for (const auto& [x, w] : mu.weights()) got.insert(static_cast<int>(x.as_nonneg() % 3));
      REQUIRE(got == residues, "support classes of " << n << "*" << m);
      ++pairs;
    }
  REQUIRE(verify_cp2_mod3(200).passed(), "library check disagrees");
  const auto r = search_sequence(k, Coloring::mod_k(3), 2, Window::range(1, 60), Criterion::mono());
  REQUIRE(r.verdict == Verdict::Exhausted, "depth-2 search found " << to_string(r.sequence));
  return {true, std::to_string(pairs) + " pairs; search exhausted after " + std::to_string(r.nodes) + " nodes"};
}

Outcome cp2_alpha() {
  struct Inst {
    int k, i;
    std::int64_t m, n;
  };
  std::vector<Inst> instances = {{2, 1, 32, 112}};
  for (int k = 2; k <= 3; ++k) {
    const std::int64_t q = std::int64_t{1} << (2 * k);
    for (int i = 1; i <= 7; i += 2)
      for (std::int64_t l0 = 1; l0 <= 3; ++l0)
        for (std::int64_t l1 = 3 * l0 + 1; l1 <= 3 * l0 + 3; ++l1) {
          const std::int64_t m = i - 1 + l0 * q, n = i - 1 + l1 * q;
          if (q < m && 2 * m < n - m && !(k == 2 && i == 1 && m == 32 && n == 112)) instances.push_back({k, i, m, n});
        }
  }
  REQUIRE(instances.size() >= 21, "only " << instances.size() << " instances");
  const auto k2 = cp2();
  for (const auto& in : instances) {
    const std::int64_t q = std::int64_t{1} << (2 * in.k);
    const std::int64_t l0 = (in.m - in.i + 1) / q, l1 = (in.n - in.i + 1) / q;
    Rational brute(0);
    const FiniteMeasure mu = k2.convolve(nn(in.n), nn(in.m));
    for (const auto& [x, w] : mu.weights())
      if (x.as_nonneg() % q == in.i - 1) brute += w;
    const Rational closed = make_rational(2 * l0 + 1, in.m + 1);
    const Rational residue = make_rational(2 * (in.m - in.i + 1) + q, q * (in.m + 1));
    const Rational bound = make_rational((2 * l0 + 1) * (l0 + l1 + 2), l0 * l1 * q);
    const auto a = verify_cp2_alpha(in.k, in.i, in.m, in.n);
    REQUIRE(brute == closed && brute == residue, "closed forms at m=" << in.m << " n=" << in.n);
    REQUIRE(a.lhs == brute && a.bound == bound, "library values at m=" << in.m << " n=" << in.n);
    REQUIRE(brute < bound, "bound at m=" << in.m << " n=" << in.n);
  }
  return {true, "canonical lhs 5/33 plus " + std::to_string(instances.size() - 1) + " instances"};
}

Outcome recurrence() {
  std::mt19937_64 rng(7);
  const auto legendre = polynomial_hypergroup(Recurrence::gegenbauer_normalized(make_rational(1, 2)), 60);
  const std::vector<std::pair<HypergroupDescriptor, int>> cases = {{cp1(), 30}, {cp2(), 30}, {legendre, 12}};
  std::uint64_t checked = 0;
  for (const auto& [k, hi] : cases)
    for (int trial = 0; trial < 100; ++trial) {
      std::set<int> seen;
      Elements xs;
      while (xs.size() < 5) {
        const int x = std::uniform_int_distribution<int>(1, hi)(rng);
        if (seen.insert(x).second) xs.push_back(nn(x));
      }
      for (unsigned mask = 1; mask < 32; ++mask) {
        Elements f;
        std::int64_t s = 0;
        for (int j = 0; j < 5; ++j)
          if (mask & (1u << j)) {
            f.push_back(xs[j]);
            s += xs[j].as_nonneg();
          }
        REQUIRE(convolve_sequence(k, f).weight(nn(s)) > 0, k.name() << ": s_F=" << s << " missing for " << to_string(f));
        ++checked;
      }
      REQUIRE(recurrent_witness(k, xs, 5).passed(), k.name() << " " << to_string(xs));
    }
  return {true, std::to_string(checked) + " families"};
}

Outcome pushforward() {
  const auto k = max_deformation(DeformationWeights::shifted_power(3), 20);
  const Elements h = {nn(0), nn(1)};
  const auto kq = ross_quotient(k, h, Window(k.window(12)));
  const Elements cosets = kq.window(12);
  REQUIRE(cosets.size() == 12, "quotient window has " << cosets.size() << " classes");
  std::vector<Elements> seqs;
  for (int len = 1; len <= 3; ++len) {
    std::vector<int> digits(len, 2);
    while (true) {
      Elements xs;
      for (int d : digits) xs.push_back(nn(d));
      seqs.push_back(xs);
      int p = len - 1;
      while (p >= 0 && digits[p] == 8) digits[p--] = 2;
      if (p < 0) break;
      ++digits[p];
    }
  }
  const std::size_t subsets = std::size_t{1} << cosets.size();
  std::vector<Rational> lhs(subsets), rhs(subsets);
  std::uint64_t compared = 0;
  for (const auto& xs : seqs) {
    Elements classes;
    for (const auto& x : xs) classes.push_back(quotient_class(k, h, x));
    const FiniteMeasure top = convolve_sequence(kq, classes);
    const FiniteMeasure bottom = convolve_sequence(k, xs);
    std::vector<Rational> per_top(cosets.size()), per_bottom(cosets.size());
    for (std::size_t c = 0; c < cosets.size(); ++c) {
      per_top[c] = top.weight(cosets[c]);
      const auto& members = cosets[c].members();
      for (const auto& x : members) per_bottom[c] += bottom.weight(x);
    }
    lhs[0] = rhs[0] = 0;
    for (std::size_t e = 1; e < subsets; ++e) {
      const int low = __builtin_ctzll(e);
      lhs[e] = lhs[e & (e - 1)] + per_top[low];
      rhs[e] = rhs[e & (e - 1)] + per_bottom[low];
      REQUIRE(lhs[e] == rhs[e], "xs=" << to_string(xs) << " E mask " << e);
      ++compared;
    }
    REQUIRE(lhs[subsets - 1] == 1, "quotient mass escapes the window for " << to_string(xs));
    const std::set<Element> sample = {cosets[0], cosets.back()};
    REQUIRE(quotient_pushforward_identity(k, h, kq, xs, sample).equal(), "library identity " << to_string(xs));
  }
  return {true, std::to_string(seqs.size()) + " sequences x " + std::to_string(subsets - 1) + " coset sets"};
}

// (sum over alpha in H^m of [ (sum_k alpha_k(x_k))^H == tau ]) / c^m
Rational brute_orbit_mass(const FiniteAction& act, const Elements& lift) {
  const int c = act.order();
  const int m = static_cast<int>(lift.size());
  const Element tau = [&] {
    Element s = lift[0];
    for (int j = 1; j < m; ++j) s = act.carrier().multiply(s, lift[j]);
    return act.orbit_of(s);
  }();
  std::int64_t hits = 0, total = 0;
  std::vector<int> alpha(m, 0);
  while (true) {
    Element s = act.apply(alpha[0], lift[0]);
    for (int j = 1; j < m; ++j) s = act.carrier().multiply(s, act.apply(alpha[j], lift[j]));
    hits += act.orbit_of(s) == tau;
    ++total;
    int p = 0;
    while (p < m && ++alpha[p] == c) alpha[p++] = 0;
    if (p == m) break;
  }
  return make_rational(hits, total);
}

Outcome orbit_bounds() {
  std::mt19937_64 rng(11);
  const Coloring mod3 = Coloring::mod_k(3);
  std::uint64_t checked = 0;
  for (const bool pairs : {false, true}) {
    const FiniteAction act = pairs ? klein_sign_action() : sign_action();
    const int c = act.order();
    const auto automorphic = automorphism_orbit_hypergroup(act);
    const auto affine = orbit_semiconvo(act);
    for (int m = 1; m <= 4; ++m)
      for (int trial = 0; trial < 10; ++trial) {
        Elements lift;
        std::set<std::int64_t> used;
        while (static_cast<int>(lift.size()) < m) {
          const std::int64_t a = std::uniform_int_distribution<int>(1, 15)(rng);
          if (!used.insert(a).second) continue;
          const std::int64_t x = 3 * a * (rng() % 2 ? 1 : -1);
          lift.push_back(pairs ? Element::pair(x, std::uniform_int_distribution<int>(-3, 3)(rng)) : Element::integer(x));
        }
        // Products of the lift stay in one class of the pulled-back coloring.
        std::set<int> classes;
        for (const auto& s : fs_fp_set(act.carrier(), lift, m)) classes.insert(mod3.classify(act.orbit_of(s)));
        REQUIRE(classes.size() == 1, "lift products not monochromatic");
        std::vector<int> all(m);
        for (int j = 0; j < m; ++j) all[j] = j + 1;
        const Rational expected = brute_orbit_mass(act, lift);
        const auto a = orbit_mass_bound(automorphic, lift, all);
        const auto b = orbit_mass_bound(affine, lift, all);
        REQUIRE(a.mass_at_tau_f == expected && b.mass_at_tau_f == expected, "mass for " << to_string(lift));
        REQUIRE(a.bound == pow(make_rational(1, c), m - 1), "automorphism bound");
        REQUIRE(b.bound == pow(make_rational(1, c), m), "affine bound");
        REQUIRE(expected >= a.bound && expected >= b.bound, "bound fails for " << to_string(lift));
        checked += 2;
      }
  }
  return {true, std::to_string(checked) + " bounds"};
}

Outcome property_suite() {
  std::mt19937_64 rng(20240917);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto measure = [&](int hi) {
    FiniteMeasure::Weights w;
    const int size = uni(1, 4);
    std::vector<std::pair<int, int>> raw;
    int total = 0;
    for (int i = 0; i < size; ++i) {
      raw.emplace_back(uni(0, hi), uni(1, 7));
      total += raw.back().second;
    }
    for (const auto& [x, c] : raw) w[nn(x)] += make_rational(c, total);
    return FiniteMeasure(w);
  };
  auto frac = [&] {
    const int d = uni(1, 10);
    return make_rational(uni(0, d), d);
  };
  const std::vector<HypergroupDescriptor> family = {cp1(), cp2(), dunkl_ramirez(make_rational(1, 4)),
                                                    max_deformation(DeformationWeights::power(3), 40)};
  int cases = 0;
  for (int c = 0; c < 120; ++c, ++cases) {
    const auto& k = family[c % family.size()];
    const FiniteMeasure a = measure(8), b = measure(8), d = measure(8);
    const Rational t = frac();
    Rational total(0);
    const FiniteMeasure ab = k.convolve(a, b);
    for (const auto& [x, w] : ab.weights()) total += w;
    REQUIRE(total == 1, "normalization " << k.name());
    REQUIRE(k.convolve(mix(t, a, b), d) == mix(t, k.convolve(a, d), k.convolve(b, d)), "bilinearity " << k.name());
    REQUIRE(k.convolve(ab, d) == k.convolve(a, k.convolve(b, d)), "bracketing " << k.name());
  }
  for (int c = 0; c < 200; ++c, ++cases) {
    const auto& k = family[c % family.size()];
    const Element x = nn(uni(0, 30)), y = nn(uni(0, 30));
    REQUIRE(!k.claims(Claim::Hermitian) || k.convolve(x, y) == k.convolve(y, x), "hermitian " << k.name());
  }
  for (int c = 0; c < 200; ++c, ++cases) {
    const auto& k = family[c % family.size()];
    std::set<int> seen;
    Elements xs;
    while (xs.size() < 3) {
      const int x = uni(1, 10);
      if (seen.insert(x).second) xs.push_back(nn(x));
    }
    const Coloring col = c % 2 ? Coloring::mod_k(uni(1, 3)) : Coloring::triangular_two();
    Rational lo = frac(), hi = frac();
    if (lo > hi) std::swap(lo, hi);
    if (hi == 1) hi = make_rational(9, 10);
    if (lo > hi) lo = hi;
    const bool mono = check_criterion(k, xs, col, 3, Criterion::mono()).found();
    const bool at_hi = check_criterion(k, xs, col, 3, Criterion::alpha_mass(hi)).found();
    const bool at_lo = check_criterion(k, xs, col, 3, Criterion::alpha_mass(lo)).found();
    REQUIRE(!mono || at_hi, "Mono without AlphaMass " << k.name() << " " << to_string(xs));
    REQUIRE(!at_hi || at_lo, "AlphaMass not monotone " << k.name() << " " << to_string(xs));
  }
  REQUIRE(cases >= 500, "only " << cases << " cases");
  return {true, std::to_string(cases) + " seeded cases"};
}

}  // namespace

int main() {
  struct Criterion_ {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion_> criteria = {
      {"closed-form golden tables", 1, closed_form_tables},
      {"linearization oracle", 10, linearization_oracle},
      {"orbit equivalence", 1, orbit_equivalence},
      {"axiom sweeps", 30, axiom_sweeps},
      {"cp2 mod-3 obstruction", 30, cp2_mod3},
      {"cp2 alpha counterexample", 10, cp2_alpha},
      {"recurrence", 30, recurrence},
      {"push-forward identity", 10, pushforward},
      {"orbit mass bounds", 10, orbit_bounds},
      {"property suite", 60, property_suite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs > criteria[i].budget_s) {
      out.ok = false;
      out.detail += " (over the " + std::to_string(static_cast<int>(criteria[i].budget_s)) + " s budget)";
    }
    failures += !out.ok;
    std::printf("%s %2zu %-26s %7.3f s  %s\n", out.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                out.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
