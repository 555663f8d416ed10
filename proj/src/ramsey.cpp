#include "hyperconv/ramsey.hpp"

#include "hyperconv/errors.hpp"
#include "ramsey_detail.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace hyperconv {

std::int64_t integer_label(const Element& x) {
  switch (x.kind()) {
    case Element::Kind::NonNeg: return x.as_nonneg();
    case Element::Kind::Int: return x.as_int();
    case Element::Kind::IntPair: return x.as_pair().first;
    case Element::Kind::Table: return x.as_table();
    case Element::Kind::Orbit:
    case Element::Kind::Coset: return integer_label(x.representative());
  }
  throw ColoringDomainError("unlabelled element " + to_string(x));
}

std::int64_t triangular_block(std::int64_t n) {
  if (n < 0) throw ColoringDomainError("triangular blocks cover Z+ only, got " + std::to_string(n));
  if (n == 0) return 0;
  // least b with b(b+1)/2 >= n
  auto b = static_cast<std::int64_t>((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
  while (b * (b + 1) / 2 < n) ++b;
  while (b > 1 && (b - 1) * b / 2 >= n) --b;
  return b;
}

Coloring::Coloring(Kind kind, int arity, std::int64_t parameter, std::function<int(const Element&)> classify,
                   std::string description, nlohmann::json spec)
    : kind_(kind),
      arity_(arity),
      parameter_(parameter),
      classify_(std::move(classify)),
      description_(std::move(description)),
      spec_(std::move(spec)) {}

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t k) { return ((a % k) + k) % k; }

}  // namespace

Coloring Coloring::mod_k(int k) {
  if (k < 1) throw ParamRange("mod_k coloring needs k >= 1");
  return {Kind::ModK, k, k, [k](const Element& x) { return static_cast<int>(floor_mod(integer_label(x), k)) + 1; },
          "mod " + std::to_string(k), {{"kind", "mod_k"}, {"k", k}}};
}

Coloring Coloring::mod_4k(int k) {
  if (k < 1 || k > 7) throw ParamRange("mod_4k coloring needs 1 <= k <= 7");
  const std::int64_t modulus = std::int64_t{1} << (2 * k);
  return {Kind::Mod4k, static_cast<int>(modulus), k,
          [modulus](const Element& x) { return static_cast<int>(floor_mod(integer_label(x), modulus)) + 1; },
          "mod 4^" + std::to_string(k), {{"kind", "mod_4k"}, {"k", k}}};
}

Coloring Coloring::triangular_two() {
  return {Kind::TriangularTwo, 2, 0,
          [](const Element& x) { return triangular_block(integer_label(x)) % 2 == 0 ? 1 : 2; }, "triangular blocks",
          {{"kind", "triangular2"}}};
}

Coloring Coloring::table(std::map<Element, int> classes, int arity) {
  if (arity < 1) throw ParamRange("table coloring needs arity >= 1");
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [x, c] : classes) {
    if (c < 1 || c > arity)
      throw ParamRange("class " + std::to_string(c) + " of " + to_string(x) + " outside 1.." + std::to_string(arity));
    entries.push_back({{"elem", hyperconv::to_json(x)}, {"class", c}});
  }
  auto shared = std::make_shared<const std::map<Element, int>>(std::move(classes));
  return {Kind::Table, arity, 0,
          [shared](const Element& x) {
            auto it = shared->find(x);
            if (it == shared->end()) throw ColoringDomainError("table coloring does not cover " + to_string(x));
            return it->second;
          },
          "table", {{"kind", "table"}, {"arity", arity}, {"classes", entries}}};
}

Coloring Coloring::pullback(const Coloring& base, std::function<Element(const Element&)> project, std::string via) {
  return {Kind::Pullback, base.arity_, 0,
          [base, project = std::move(project)](const Element& x) { return base.classify(project(x)); },
          base.describe() + " along " + via, {{"kind", "pullback"}, {"via", via}, {"base", base.to_json()}}};
}

int Coloring::classify(const Element& x) const { return classify_(x); }
std::string Coloring::describe() const { return description_; }
nlohmann::json Coloring::to_json() const { return spec_; }

void validate_sequence(const Elements& terms, const std::function<bool(const Element&)>& excluded) {
  std::set<Element> seen;
  for (const auto& x : terms) {
    if (excluded(x)) throw InvalidSequence("sequence contains excluded element " + to_string(x));
    if (!seen.insert(x).second) throw InvalidSequence("sequence repeats " + to_string(x));
  }
}

Criterion Criterion::mono() { return {Kind::Mono, Rational(0), 0}; }

Criterion Criterion::alpha_mass(const Rational& alpha) {
  if (alpha < 0 || alpha >= 1) throw ParamRange("alpha must lie in [0, 1), got " + to_fraction_string(alpha));
  return {Kind::AlphaMass, alpha, 0};
}

Criterion Criterion::almost_mono(int budget) {
  if (budget < 0) throw ParamRange("almost-mono budget must be >= 0");
  return {Kind::AlmostMono, Rational(0), budget};
}

bool Criterion::accepts(const Rational& class_mass) const {
  return kind_ == Kind::AlphaMass ? class_mass > alpha_ : class_mass == 1;
}

bool Criterion::exempt(const std::vector<int>& indices) const {
  return kind_ == Kind::AlmostMono && !indices.empty() && indices.back() <= budget_;
}

std::string Criterion::describe() const {
  switch (kind_) {
    case Kind::Mono: return "mono";
    case Kind::AlphaMass: return "alpha > " + to_fraction_string(alpha_);
    case Kind::AlmostMono: return "almost-mono (budget " + std::to_string(budget_) + ")";
  }
  return "?";
}

nlohmann::json Criterion::to_json() const {
  switch (kind_) {
    case Kind::Mono: return {{"kind", "mono"}};
    case Kind::AlphaMass: return {{"kind", "alpha"}, {"alpha", to_fraction_string(alpha_)}};
    case Kind::AlmostMono: return {{"kind", "almost"}, {"budget", budget_}};
  }
  return {};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Witness: return "witness";
    case Verdict::Refuted: return "refuted";
    case Verdict::Exhausted: return "exhausted";
  }
  return "?";
}

namespace {

std::vector<std::vector<int>> index_subsets(int n, int depth) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > depth) continue;
    std::vector<int> f;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) f.push_back(i + 1);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace

std::set<Element> fs_fp_set(const CarrierAlgebra& s, const Elements& xs, int depth) {
  if (xs.size() > 20) throw InvalidSequence("at most 20 terms are supported");
  std::set<Element> out;
  for (const auto& f : index_subsets(static_cast<int>(xs.size()), depth)) {
    Element product = xs[f.front() - 1];
    for (std::size_t j = 1; j < f.size(); ++j) product = s.multiply(product, xs[f[j] - 1]);
    out.insert(product);
  }
  return out;
}

std::vector<FamilyEntry> sfc(const ConvolutionRule& rule, const Elements& xs, int depth) {
  if (depth < 1) throw InvalidSequence("depth must be >= 1");
  if (xs.size() > 20) throw InvalidSequence("at most 20 terms are supported");
  const int n = static_cast<int>(xs.size());
  // delta_F built from delta_{F minus its last index}, memoized by bitmask.
  std::map<std::uint32_t, FiniteMeasure> by_mask;
  std::vector<FamilyEntry> out;
  for (const auto& f : index_subsets(n, depth)) {
    std::uint32_t mask = 0;
    for (int i : f) mask |= 1u << (i - 1);
    const std::uint32_t last = 1u << (f.back() - 1);
    const FiniteMeasure& dx = point_mass(xs[f.back() - 1]);
    FiniteMeasure mu = mask == last ? dx : convolve_measures(by_mask.at(mask & ~last), dx, rule);
    by_mask.emplace(mask, mu);
    out.push_back({f, mu, support(mu)});
  }
  return out;
}

std::vector<FamilyEntry> sfc(const HypergroupDescriptor& k, const Elements& xs, int depth) {
  return sfc([&k](const Element& a, const Element& b) { return k.convolve(a, b); }, xs, depth);
}

namespace detail {

std::vector<Rational> class_masses(const FiniteMeasure& mu, const Coloring& coloring) {
  std::vector<Rational> masses(coloring.arity(), Rational(0));
  for (const auto& [x, w] : mu.weights()) masses[coloring.classify(x) - 1] += w;
  return masses;
}

ExperimentReport evaluate(const std::string& name, const ConvolutionRule& rule, const Elements& xs,
                          const Coloring& coloring, int depth, const Criterion& criterion) {
  ExperimentReport report;
  report.descriptor = name;
  report.coloring = coloring.describe();
  report.arity = coloring.arity();
  report.criterion = criterion.to_json();
  report.depth = depth;
  report.sequence = xs;
  std::vector<std::optional<std::vector<int>>> first_failure(coloring.arity());
  for (auto& entry : sfc(rule, xs, depth)) {
    FamilyRow row{entry.indices, std::move(entry.support), class_masses(entry.measure, coloring),
                  criterion.exempt(entry.indices)};
    if (!row.exempt)
      for (int c = 0; c < coloring.arity(); ++c)
        if (!first_failure[c] && !criterion.accepts(row.class_masses[c])) first_failure[c] = row.indices;
    report.rows.push_back(std::move(row));
  }
  for (int c = 0; c < coloring.arity(); ++c) {
    if (!first_failure[c]) {
      report.verdict = Verdict::Witness;
      report.color = c + 1;
      report.refutations.clear();
      return report;
    }
    report.refutations.emplace_back(c + 1, *first_failure[c]);
  }
  report.verdict = Verdict::Refuted;
  return report;
}

}  // namespace detail

ExperimentReport check_criterion(const HypergroupDescriptor& k, const Elements& xs, const Coloring& coloring,
                                 int depth, const Criterion& criterion) {
  validate_sequence(xs, [&k](const Element& x) { return x == k.identity(); });
  for (const auto& x : xs)
    if (!k.contains(x)) throw InvalidSequence(to_string(x) + " is outside " + k.name());
  auto report = detail::evaluate(
      k.name(), [&k](const Element& a, const Element& b) { return k.convolve(a, b); }, xs, coloring, depth,
      criterion);
  report.window = "sequence";
  return report;
}

namespace {

std::string indices_string(const std::vector<int>& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + std::to_string(f[i]);
  return out + "}";
}

std::string support_string(const std::set<Element>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : s) {
    out += (first ? "" : ",") + to_string(x);
    first = false;
  }
  return out + "}";
}

nlohmann::json elements_json(const Elements& xs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

}  // namespace

nlohmann::json to_json(const ExperimentReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json masses = nlohmann::json::array();
    for (const auto& m : row.class_masses) masses.push_back(to_fraction_string(m));
    nlohmann::json spt = nlohmann::json::array();
    for (const auto& x : row.support) spt.push_back(to_json(x));
    rows.push_back({{"F", row.indices}, {"support", spt}, {"class_masses", masses}, {"exempt", row.exempt}});
  }
  nlohmann::json refutations = nlohmann::json::array();
  for (const auto& [c, f] : r.refutations) refutations.push_back({{"class", c}, {"F", f}});
  nlohmann::json out = {{"descriptor", r.descriptor},
                        {"coloring", r.coloring},
                        {"arity", r.arity},
                        {"criterion", r.criterion},
                        {"window", r.window},
                        {"depth", r.depth},
                        {"verdict", to_string(r.verdict)},
                        {"color", r.color},
                        {"sequence", elements_json(r.sequence)},
                        {"rows", rows},
                        {"refutations", refutations},
                        {"nodes", r.nodes}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

std::string to_markdown(const ExperimentReport& r) {
  std::ostringstream out;
  out << "## " << r.descriptor << "\n\n";
  out << "- coloring: " << r.coloring << " (" << r.arity << " classes)\n";
  out << "- criterion: " << r.criterion.dump() << "\n";
  out << "- window: " << r.window << ", depth " << r.depth << "\n";
  out << "- verdict: " << to_string(r.verdict);
  if (r.color) out << " (class " << r.color << ")";
  out << "\n- nodes: " << r.nodes << "\n";
  if (!r.note.empty()) out << "- note: " << r.note << "\n";
  if (r.rows.empty()) return out.str();
  out << "- sequence: ";
  for (std::size_t i = 0; i < r.sequence.size(); ++i) out << (i ? ", " : "") << to_string(r.sequence[i]);
  out << "\n\n| F | support |";
  for (int c = 1; c <= r.arity; ++c) out << " C" << c << " |";
  out << "\n|---|---|";
  for (int c = 1; c <= r.arity; ++c) out << "---|";
  out << "\n";
  for (const auto& row : r.rows) {
    out << "| " << indices_string(row.indices) << (row.exempt ? "*" : "") << " | " << support_string(row.support)
        << " |";
    for (const auto& m : row.class_masses) out << " " << to_fraction_string(m) << " |";
    out << "\n";
  }
  return out.str();
}

std::string to_csv(const ExperimentReport& r) {
  std::ostringstream out;
  out << "F;support;class;mass_num;mass_den\n";
  for (const auto& row : r.rows)
    for (int c = 0; c < r.arity; ++c) {
      const Rational& m = row.class_masses[c];
      out << indices_string(row.indices) << ';' << support_string(row.support) << ';' << (c + 1) << ';'
          << integer_string(m.get_num()) << ';' << integer_string(m.get_den()) << '\n';
    }
  return out.str();
}

}  // namespace hyperconv
