#include "hyperconv/constructions.hpp"
#include "hyperconv/errors.hpp"
#include "hyperconv/ramsey.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace hyperconv;
using testing_support::golden;
using testing_support::m;
using testing_support::q;

namespace {

Elements nns(std::initializer_list<std::int64_t> xs) {
  Elements out;
  for (auto x : xs) out.push_back(nn(x));
  return out;
}

std::vector<int> indices_of(const nlohmann::json& j) { return j.get<std::vector<int>>(); }

struct ThreadsEnv {
  explicit ThreadsEnv(const char* n) { setenv("HYPERCONV_THREADS", n, 1); }
  ~ThreadsEnv() { unsetenv("HYPERCONV_THREADS"); }
};

}  // namespace

TEST(Coloring, Arithmetic) {
  const auto c = Coloring::mod_k(3);
  EXPECT_EQ(c.arity(), 3);
  EXPECT_EQ(c.classify(nn(7)), 2);
  EXPECT_EQ(c.classify(Element::integer(-1)), 3);
  EXPECT_EQ(Coloring::mod_4k(2).arity(), 16);
  EXPECT_EQ(Coloring::mod_4k(2).classify(nn(33)), 2);
  EXPECT_EQ(Coloring::mod_k(1).classify(nn(12345)), 1);
  EXPECT_THROW(Coloring::mod_k(0), ParamRange);
}

TEST(Coloring, TriangularBlocks) {
  const auto c = Coloring::triangular_two();
  std::vector<int> got;
  for (int i = 0; i <= 10; ++i) got.push_back(c.classify(nn(i)));
  EXPECT_EQ(got, (std::vector<int>{1, 2, 1, 1, 2, 2, 2, 1, 1, 1, 1}));
  EXPECT_EQ(triangular_block(0), 0);
  EXPECT_EQ(triangular_block(6), 3);
  EXPECT_EQ(triangular_block(7), 4);
}

TEST(Coloring, TableAndPullback) {
  const auto base = Coloring::table({{Element::coset({nn(0), nn(1)}), 1}, {Element::coset({nn(2)}), 2}}, 2);
  EXPECT_THROW(base.classify(Element::coset({nn(3)})), ColoringDomainError);
  const auto k = max_deformation(DeformationWeights::shifted_power(3), 20);
  const Elements h = {nn(0), nn(1)};
  const auto pulled = Coloring::pullback(
      base, [&](const Element& x) { return quotient_class(k, h, x); }, "x -> xH");
  EXPECT_EQ(pulled.classify(nn(1)), 1);
  EXPECT_EQ(pulled.classify(nn(2)), 2);
  EXPECT_EQ(Coloring::table({{nn(0), 1}}, 1).to_json().at("kind"), "table");
}

TEST(Criterion, Acceptance) {
  EXPECT_TRUE(Criterion::mono().accepts(1));
  EXPECT_FALSE(Criterion::mono().accepts(make_rational(99, 100)));
  const auto a = Criterion::alpha_mass(make_rational(1, 2));
  EXPECT_TRUE(a.accepts(make_rational(2, 3)));
  EXPECT_FALSE(a.accepts(make_rational(1, 2)));
  EXPECT_TRUE(Criterion::alpha_mass(0).accepts(make_rational(1, 1000)));
  EXPECT_THROW(Criterion::alpha_mass(1), ParamRange);
  EXPECT_THROW(Criterion::alpha_mass(-1), ParamRange);
  const auto almost = Criterion::almost_mono(2);
  EXPECT_TRUE(almost.exempt({1, 2}));
  EXPECT_FALSE(almost.exempt({1, 3}));
  EXPECT_FALSE(Criterion::mono().exempt({1}));
}

TEST(Sequences, Validation) {
  const auto is_zero = [](const Element& x) { return x == nn(0); };
  EXPECT_NO_THROW(validate_sequence(nns({1, 2, 3}), is_zero));
  EXPECT_THROW(validate_sequence(nns({1, 2, 1}), is_zero), InvalidSequence);
  EXPECT_THROW(validate_sequence(nns({1, 0}), is_zero), InvalidSequence);
}

TEST(FiniteProducts, SumsAndMax) {
  EXPECT_EQ(fs_fp_set(nonneg_integers(), nns({1, 2, 4}), 3), (std::set<Element>{nn(1), nn(2), nn(3), nn(4), nn(5), nn(6), nn(7)}));
  EXPECT_EQ(fs_fp_set(max_semigroup(), nns({3, 5, 9}), 3), (std::set<Element>{nn(3), nn(5), nn(9)}));
  EXPECT_EQ(fs_fp_set(nonneg_integers(), nns({1, 2, 4}), 1), (std::set<Element>{nn(1), nn(2), nn(4)}));
}

TEST(FiniteProducts, SkSemigroup) {
  const auto s = sk_semigroup(3);
  EXPECT_EQ(s.multiply(nn(4), nn(7)), nn(2));
  EXPECT_TRUE(s.contains(nn(10)));
  EXPECT_FALSE(s.contains(nn(5)));
  EXPECT_TRUE(s.is_idempotent(nn(0)));
  EXPECT_FALSE(s.is_idempotent(nn(4)));
  // A sequence inside 3N+1 cannot be monochromatic for the mod-3 coloring:
  // 4 is in class 2 and 4*7 = 2 in class 3.
  const auto r = search_fp(s, Coloring::mod_k(3), 2, Window::range(0, 90), Criterion::mono());
  EXPECT_EQ(r.verdict, Verdict::Exhausted);
  EXPECT_GT(r.nodes, 0u);
}

TEST(Family, SfcMatchesOracle) {
  const auto check = [](const HypergroupDescriptor& k, const Elements& xs, int depth, const nlohmann::json& rows) {
    const auto got = sfc(k, xs, depth);
    ASSERT_EQ(got.size(), rows.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].indices, indices_of(rows[i].at("F")));
      EXPECT_EQ(got[i].measure, m(rows[i].at("measure")));
      EXPECT_EQ(got[i].support, support(got[i].measure));
    }
  };
  check(cp1(), nns({1, 2}), 2, golden().at("sfc_cp1_1_2"));
  check(cp2(), nns({2, 5, 11}), 3, golden().at("sfc_cp2_2_5_11"));
}

TEST(Family, IncreasingIndexOrderForNoncommutativeRules) {
  const auto s3 = symmetric_group_s3();
  const auto k = semigroup_descriptor(s3);
  const Elements xs = {Element::table(1), Element::table(2)};
  const auto rows = sfc(k, xs, 2);
  EXPECT_EQ(rows.back().measure, point_mass(s3.multiply(xs[0], xs[1])));
}

TEST(Criterion, CheckOnGivenSequence) {
  // Even numbers under CP1 stay even: class 1 of the mod-2 coloring.
  const auto r = check_criterion(cp1(), nns({2, 4, 8}), Coloring::mod_k(2), 3, Criterion::mono());
  EXPECT_TRUE(r.found());
  EXPECT_EQ(r.color, 1);
  EXPECT_EQ(r.rows.size(), 7u);
  const auto bad = check_criterion(cp1(), nns({1, 2}), Coloring::mod_k(2), 2, Criterion::mono());
  EXPECT_EQ(bad.verdict, Verdict::Refuted);
  EXPECT_EQ(bad.refutations.size(), 2u);
}

TEST(Criterion, SubstructureWitnessLifts) {
  // A witness found inside 2Z+ is a witness in CP1 itself.
  const auto closure = subalgebra_closure(cp1(), {nn(2)}, Window::range(0, 64));
  Elements evens;
  for (const auto& x : closure.elements)
    if (x != nn(0)) evens.push_back(x);
  ASSERT_GE(evens.size(), 5u);
  const auto r = search_sequence(cp1(), Coloring::mod_k(2), 3, Window(evens), Criterion::mono());
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(check_criterion(cp1(), r.sequence, Coloring::mod_k(2), 3, Criterion::mono()).found());
}

TEST(Search, MaxDeformationWitness) {
  const auto k = max_deformation(DeformationWeights::power(2), 40);
  const auto r = search_sequence(k, Coloring::mod_k(2), 4, Window::range(0, 40), Criterion::mono());
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.sequence, nns({1, 3, 5, 7}));
  EXPECT_EQ(r.color, 2);
  const auto again = check_criterion(k, r.sequence, Coloring::mod_k(2), 4, Criterion::mono());
  EXPECT_EQ(to_json(again).at("rows"), to_json(r).at("rows"));
}

TEST(Search, OneClassColoringIsImmediate) {
  const auto r = search_sequence(cp2(), Coloring::mod_k(1), 3, Window::range(0, 20), Criterion::mono());
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.sequence, nns({1, 2, 3}));
}

TEST(Search, DeterministicAcrossThreadCounts) {
  const auto run = [] {
    return to_json(search_sequence(cp1(), Coloring::triangular_two(), 3, Window::range(0, 30), Criterion::alpha_mass(make_rational(1, 3))));
  };
  nlohmann::json one, four;
  {
    ThreadsEnv env("1");
    one = run();
  }
  {
    ThreadsEnv env("4");
    four = run();
  }
  EXPECT_EQ(one.dump(), four.dump());
}

TEST(Search, Cp2Mod3Exhausts) {
  const auto r = search_sequence(cp2(), Coloring::mod_k(3), 2, Window::range(1, 60), Criterion::mono());
  EXPECT_EQ(r.verdict, Verdict::Exhausted);
  EXPECT_FALSE(r.note.empty());
  const auto pairs = verify_cp2_mod3(60);
  EXPECT_TRUE(pairs.passed());
  EXPECT_EQ(pairs.pairs, 60u * 59 / 2);
}

TEST(Search, AlmostMonoExemptsEarlyFamilies) {
  // The exempt families {1}, {2}, {1,2} may miss the class; later ones may not.
  const auto k = max_deformation(DeformationWeights::power(2), 30);
  const auto r = check_criterion(k, nns({2, 1, 3, 5}), Coloring::mod_k(2), 2, Criterion::almost_mono(2));
  EXPECT_TRUE(r.found()) << to_markdown(r);
  EXPECT_FALSE(check_criterion(k, nns({2, 1, 3, 5}), Coloring::mod_k(2), 2, Criterion::mono()).found());
}

TEST(Reports, Formats) {
  const auto r = check_criterion(cp1(), nns({2, 4}), Coloring::mod_k(2), 2, Criterion::mono());
  const std::string csv = to_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "F;support;class;mass_num;mass_den");
  EXPECT_NE(to_markdown(r).find("| F |"), std::string::npos);
  EXPECT_EQ(to_json(r).at("verdict"), "witness");
}

TEST(Lab, AlphaCanonicalInstance) {
  const auto a = verify_cp2_alpha(2, 1, 32, 112);
  EXPECT_EQ(a.l0, 2);
  EXPECT_EQ(a.l1, 7);
  EXPECT_EQ(a.lhs, make_rational(5, 33));
  EXPECT_EQ(a.bound, make_rational(55, 224));
  EXPECT_TRUE(a.match());
  EXPECT_TRUE(a.below_bound());
}

TEST(Lab, AlphaInstancesMatchOracle) {
  for (const auto& row : golden().at("alpha_instances")) {
    const auto a = verify_cp2_alpha(row.at("k"), row.at("i"), row.at("m"), row.at("n"));
    EXPECT_EQ(a.lhs, q(row.at("lhs")));
    EXPECT_EQ(a.bound, q(row.at("bound")));
    EXPECT_EQ(a.l0, row.at("l0").get<std::int64_t>());
    EXPECT_TRUE(a.match() && a.below_bound());
  }
}

TEST(Lab, AlphaPreconditions) {
  const auto message = [](int k, int i, std::int64_t m, std::int64_t n) {
    try {
      verify_cp2_alpha(k, i, m, n);
    } catch (const PreconditionViolated& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(1, 1, 32, 112).find("k >= 2"), std::string::npos);
  EXPECT_NE(message(2, 2, 33, 113).find("i-1 even"), std::string::npos);
  EXPECT_NE(message(2, 1, 16, 112).find("4^k < m"), std::string::npos);
  EXPECT_NE(message(2, 1, 32, 96).find("2m < n-m"), std::string::npos);
  EXPECT_NE(message(2, 1, 33, 113).find("m = i-1"), std::string::npos);
}

TEST(Lab, RecurrentExamples) {
  const auto check = [](const HypergroupDescriptor& k, const Elements& xs, const nlohmann::json& rows) {
    const auto r = recurrent_witness(k, xs, static_cast<int>(xs.size()));
    ASSERT_EQ(r.rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      EXPECT_EQ(r.rows[i].indices, indices_of(rows[i].at("F")));
      EXPECT_EQ(r.rows[i].s_f, rows[i].at("s_F").get<std::int64_t>());
      EXPECT_EQ(r.rows[i].in_support, rows[i].at("in_support").get<bool>());
    }
    EXPECT_TRUE(r.passed());
  };
  check(cp1(), nns({1, 2, 3}), golden().at("recurrent_cp1_1_2_3"));
  check(cp2(), nns({2, 5, 11}), golden().at("recurrent_cp2_2_5_11"));
  EXPECT_THROW(recurrent_witness(cp1(), nns({0, 1}), 2), InvalidSequence);
}

TEST(Lab, OrbitMassBoundsMatchOracle) {
  for (const auto& row : golden().at("orbit_mass_bounds")) {
    const bool pairs = row.at("action") == "klein";
    const FiniteAction act = pairs ? klein_sign_action() : sign_action();
    const auto k = row.at("affine").get<bool>() ? orbit_semiconvo(act) : automorphism_orbit_hypergroup(act);
    Elements lift;
    for (const auto& x : row.at("lift"))
      lift.push_back(pairs ? Element::pair(x[0], x[1]) : Element::integer(x.get<std::int64_t>()));
    std::vector<int> all(lift.size());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = static_cast<int>(j) + 1;
    const auto b = orbit_mass_bound(k, lift, all);
    EXPECT_EQ(b.mass_at_tau_f, q(row.at("mass"))) << row.dump();
    EXPECT_EQ(b.bound, q(row.at("bound"))) << row.dump();
    EXPECT_TRUE(b.holds());
  }
}

TEST(Lab, OrbitMassBoundExamples) {
  const auto k = automorphism_orbit_hypergroup(sign_action());
  const auto b = orbit_mass_bound(k, {Element::integer(1), Element::integer(3), Element::integer(9)}, {1, 2, 3});
  EXPECT_EQ(b.tau_f, Element::orbit({Element::integer(-13), Element::integer(13)}));
  EXPECT_EQ(b.mass_at_tau_f, make_rational(1, 4));
  EXPECT_EQ(b.bound, make_rational(1, 4));
  const auto trivial = automorphism_orbit_hypergroup(trivial_action(integers()));
  EXPECT_EQ(orbit_mass_bound(trivial, {Element::integer(2), Element::integer(5)}, {1, 2}).mass_at_tau_f, 1);
  EXPECT_THROW(orbit_mass_bound(cp1(), {nn(1)}, {1}), LiftMissing);
  EXPECT_THROW(orbit_mass_bound(k, {Element::integer(1)}, {2}), LiftMissing);
}

TEST(Lab, PushforwardMatchesOracle) {
  const auto k = max_deformation(DeformationWeights::shifted_power(3), 20);
  const Elements h = {nn(0), nn(1)};
  const auto kq = ross_quotient(k, h, Window(k.window(12)));
  for (const auto& row : golden().at("pushforward")) {
    Elements xs;
    for (const auto& x : row.at("xs")) xs.push_back(nn(x.get<std::int64_t>()));
    std::set<Element> cosets;
    for (const auto& c : row.at("cosets")) cosets.insert(element_from_json(c));
    const auto p = quotient_pushforward_identity(k, h, kq, xs, cosets);
    EXPECT_EQ(p.base_side, q(row.at("mass"))) << row.dump();
    EXPECT_TRUE(p.equal());
  }
  std::set<Element> whole;
  for (const auto& c : kq.window(12)) whole.insert(c);
  EXPECT_EQ(quotient_pushforward_identity(k, h, kq, nns({5, 5, 2}), whole).quotient_side, 1);
}

TEST(Lab, SubalgebraClosure) {
  const auto even = subalgebra_closure(cp1(), {nn(2)}, Window::range(0, 64));
  EXPECT_FALSE(even.closed);
  ASSERT_TRUE(even.escape.has_value());
  for (const auto& x : even.elements) EXPECT_EQ(x.as_nonneg() % 2, 0);
  const auto zero = subalgebra_closure(cp1(), {nn(0)}, Window::range(0, 10));
  EXPECT_TRUE(zero.closed);
  EXPECT_EQ(zero.elements, std::set<Element>{nn(0)});
  ASSERT_TRUE(zero.plus_closed.has_value());
  EXPECT_TRUE(*zero.plus_closed);
  const auto cp2_even = subalgebra_closure(cp2(), {nn(2)}, Window::range(0, 40));
  for (const auto& x : cp2_even.elements) EXPECT_EQ(x.as_nonneg() % 2, 0);
  const auto sub = subalgebra_closure(semigroup_descriptor(cyclic_group(6)), {Element::table(2)},
                                      Window(cyclic_group(6).elements()));
  EXPECT_TRUE(sub.closed);
  EXPECT_EQ(sub.elements.size(), 3u);
}
