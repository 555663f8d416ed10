#include "hyperconv/constructions.hpp"
#include "hyperconv/errors.hpp"
#include "hyperconv/ramsey.hpp"

#include <algorithm>

namespace hyperconv {

Cp2Mod3Report verify_cp2_mod3(int window_max) {
  if (window_max < 2) throw PreconditionViolated("window_max >= 2");
  const ConvolutionRule rule = cp2().rule();
  const Coloring mod3 = Coloring::mod_k(3);
  Cp2Mod3Report report;
  report.window_max = window_max;
  for (std::int64_t m = 1; m <= window_max; ++m)
    for (std::int64_t n = m + 1; n <= window_max; ++n) {
      ++report.pairs;
      const FiniteMeasure mu = rule(nn(n), nn(m));
      std::set<int> classes;
      for (const auto& [x, w] : mu.weights()) classes.insert(mod3.classify(x));
      if (classes.size() < 2) report.violations.push_back({m, n, support(mu)});
    }
  return report;
}

AlphaInstance verify_cp2_alpha(int k, int i, std::int64_t m, std::int64_t n) {
  if (k < 2) throw PreconditionViolated("k >= 2");
  if (k > 7) throw PreconditionViolated("k <= 7");
  const std::int64_t q = std::int64_t{1} << (2 * k);
  if (i < 1 || i > q) throw PreconditionViolated("1 <= i <= 4^k");
  if ((i - 1) % 2 != 0) throw PreconditionViolated("i-1 even");
  if (((m - (i - 1)) % q + q) % q != 0) throw PreconditionViolated("m = i-1 (mod 4^k)");
  if (((n - (i - 1)) % q + q) % q != 0) throw PreconditionViolated("n = i-1 (mod 4^k)");
  if (!(q < m)) throw PreconditionViolated("4^k < m");
  if (!(2 * m < n - m)) throw PreconditionViolated("2m < n-m");

  AlphaInstance out{k, i, m, n, (m - i + 1) / q, (n - i + 1) / q, 0, 0, 0, 0};
  const Coloring coloring = Coloring::mod_4k(k);
  const FiniteMeasure mu = cp2().rule()(nn(n), nn(m));
  out.lhs = mass_if(mu, [&](const Element& x) { return coloring.classify(x) == i; });
  out.closed_form = make_rational(2 * out.l0 + 1, m + 1);
  out.residue_form = Rational(2 * (m - i + 1) + q) / (Rational(q) * (m + 1));
  out.residue_form.canonicalize();
  out.bound = Rational((2 * out.l0 + 1) * (out.l0 + out.l1 + 2)) / (Rational(out.l0) * out.l1 * q);
  out.bound.canonicalize();
  return out;
}

bool RecurrenceReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const RecurrenceRow& r) { return r.in_support; });
}

RecurrenceReport recurrent_witness(const HypergroupDescriptor& k, const Elements& xs, int depth) {
  validate_sequence(xs, [&k](const Element& x) { return x == k.identity(); });
  RecurrenceReport report{k.name(), xs, {}};
  for (const auto& entry : sfc(k, xs, depth)) {
    std::int64_t s = 0;
    for (int i : entry.indices) s += xs[i - 1].as_nonneg();
    report.rows.push_back({entry.indices, s, entry.support.contains(nn(s))});
  }
  return report;
}

OrbitMassBound orbit_mass_bound(const HypergroupDescriptor& k, const Elements& lift, const std::vector<int>& indices) {
  const OrbitStructure* orbit = k.orbit();
  if (!orbit) throw LiftMissing(k.name() + " is not an orbit descriptor");
  if (indices.empty()) throw InvalidSequence("F is empty");
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] < 1 || indices[j] > static_cast<int>(lift.size()))
      throw LiftMissing("index " + std::to_string(indices[j]) + " has no lifted term");
    if (j && indices[j] <= indices[j - 1]) throw InvalidSequence("F must be strictly increasing");
  }
  for (const auto& x : lift)
    if (!orbit->underlying.contains(x)) throw LiftMissing(to_string(x) + " is outside " + orbit->underlying.name());

  Elements taus;
  Element sigma = lift[indices.front() - 1];
  for (std::size_t j = 0; j < indices.size(); ++j) {
    const Element& x = lift[indices[j] - 1];
    if (j) sigma = orbit->underlying.multiply(sigma, x);
    taus.push_back(orbit->orbit_of(x));
  }
  validate_sequence(taus, [&k](const Element& t) { return t == k.identity(); });

  OrbitMassBound out{orbit->orbit_of(sigma), 0, 0};
  out.mass_at_tau_f = convolve_sequence(k, taus).weight(out.tau_f);
  const auto m = static_cast<unsigned>(indices.size());
  const unsigned exponent = orbit->mode == OrbitStructure::Mode::Affine ? m : m - 1;
  out.bound = 1 / pow(Rational(orbit->group_size), exponent);
  return out;
}

PushforwardCheck quotient_pushforward_identity(const HypergroupDescriptor& k, const Elements& h,
                                               const HypergroupDescriptor& quotient, const Elements& xs,
                                               const std::set<Element>& cosets) {
  if (xs.empty()) throw InvalidSequence("sequence is empty");
  Elements classes;
  for (const auto& x : xs) classes.push_back(quotient_class(k, h, x));
  PushforwardCheck out;
  out.quotient_side = mass(convolve_sequence(quotient, classes), cosets);
  out.base_side = mass_if(convolve_sequence(k, xs),
                          [&](const Element& u) { return cosets.contains(quotient_class(k, h, u)); });
  return out;
}

PushforwardCheck quotient_pushforward_identity(const HypergroupDescriptor& k, const Elements& h, const Elements& xs,
                                               const std::set<Element>& cosets, const Window& window) {
  return quotient_pushforward_identity(k, h, ross_quotient(k, h, window), xs, cosets);
}

ClosureResult subalgebra_closure(const HypergroupDescriptor& k, const std::set<Element>& gens, const Window& window) {
  ClosureResult out;
  out.elements = gens;
  for (const auto& g : gens)
    if (!window.contains(g)) {
      out.escape = g;
      return out;
    }
  bool grew = true;
  while (grew) {
    grew = false;
    const Elements current(out.elements.begin(), out.elements.end());
    for (const auto& a : current)
      for (const auto& b : current) {
        const FiniteMeasure ab = k.convolve(a, b);
        for (const auto& [u, w] : ab.weights()) {
          if (!window.contains(u)) {
            out.escape = u;
            return out;
          }
          if (out.elements.insert(u).second) grew = true;
        }
      }
  }
  out.closed = true;
  if (k.polynomial()) {
    bool plus = true;
    for (const auto& a : out.elements)
      for (const auto& b : out.elements) {
        const Element sum = nn(a.as_nonneg() + b.as_nonneg());
        if (window.contains(sum) && !out.elements.contains(sum)) plus = false;
      }
    out.plus_closed = plus;
  }
  return out;
}

}  // namespace hyperconv
