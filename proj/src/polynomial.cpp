#include "hyperconv/polynomial.hpp"

#include "hyperconv/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace hyperconv {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

Rational Polynomial::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : Rational(0);
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> out = p.coeffs_;
  for (auto& c : out) c *= s;
  return Polynomial(std::move(out));
}

Recurrence Recurrence::chebyshev_first() {
  const Rational half = make_rational(1, 2);
  return {"chebyshev_t", [half](int) { return half; }, [](int) { return Rational(0); },
          [half](int) { return half; }, Polynomial::x()};
}

Recurrence Recurrence::chebyshev_second_normalized() { return gegenbauer_normalized(Rational(1)); }

Recurrence Recurrence::gegenbauer_normalized(const Rational& lambda) {
  if (lambda <= 0) throw ParamRange("gegenbauer lambda must be > 0");
  // x R_n = (n+2l)/(2(n+l)) R_{n+1} + n/(2(n+l)) R_{n-1}
  auto a = [lambda](int n) { return Rational((n + 2 * lambda) / (2 * (n + lambda))); };
  auto c = [lambda](int n) { return Rational(n / (2 * (n + lambda))); };
  std::string name = lambda == 1                 ? "chebyshev_u"
                     : lambda == make_rational(1, 2) ? "legendre"
                                                     : "gegenbauer(" + to_fraction_string(lambda) + ")";
  return {name, a, [](int) { return Rational(0); }, c, Polynomial::x()};
}

std::vector<Polynomial> generate_polynomials(const Recurrence& rec, int count) {
  std::vector<Polynomial> p;
  if (count <= 0) return p;
  p.push_back(Polynomial::constant(Rational(1)));
  if (count == 1) return p;
  p.push_back(rec.p1);
  for (int n = 1; n + 1 < count; ++n) {
    const Rational an = rec.a(n);
    if (sgn(an) == 0) throw ParamRange(rec.name + ": a_" + std::to_string(n) + " = 0");
    const Polynomial next = (Polynomial::x() - Polynomial::constant(rec.b(n))) * p[n] - rec.c(n) * p[n - 1];
    p.push_back(Rational(1 / an) * next);
  }
  return p;
}

const LinearizationTable::Row& LinearizationTable::row(int n, int m) const {
  if (n < 0 || m < 0 || n > n_max_ || m > n_max_)
    throw RuleDomainError("linearization index (" + std::to_string(n) + "," + std::to_string(m) + ") beyond n_max " +
                          std::to_string(n_max_));
  return rows_[static_cast<std::size_t>(n) * (n_max_ + 1) + m];
}

Rational LinearizationTable::g(int n, int m, int k) const {
  const Row& r = row(n, m);
  const int idx = k - r.k_lo;
  return (idx >= 0 && idx < static_cast<int>(r.g.size())) ? r.g[idx] : Rational(0);
}

LinearizationTable linearize(const Recurrence& rec, int n_max) {
  if (n_max < 0) throw ParamRange("n_max must be >= 0");
  const std::vector<Polynomial> p = generate_polynomials(rec, 2 * n_max + 1);
  for (int n = 0; n < static_cast<int>(p.size()); ++n) {
    if (p[n].degree() != n) throw NormalizationError(rec.name + ": P_" + std::to_string(n) + " has wrong degree");
    const Rational at_one = p[n].evaluate(Rational(1));
    if (at_one != 1)
      throw NormalizationError(rec.name + ": P_" + std::to_string(n) + "(1) = " + to_fraction_string(at_one));
  }

  const int side = n_max + 1;
  std::vector<LinearizationTable::Row> rows(static_cast<std::size_t>(side) * side);
  for (int n = 0; n <= n_max; ++n) {
    for (int m = n; m <= n_max; ++m) {
      // Peel off leading terms against P_d, P_{d-1}, ...; P_k has degree k.
      std::vector<Rational> rest = (p[n] * p[m]).coeffs();
      const int d = n + m;
      std::vector<Rational> g(d + 1);
      for (int k = d; k >= 0; --k) {
        if (sgn(rest[k]) == 0) continue;
        g[k] = rest[k] / p[k].leading();
        const auto& pk = p[k].coeffs();
        for (int i = 0; i <= k; ++i) rest[i] -= g[k] * pk[i];
      }
      const int lo = m - n;
      Rational total(0);
      for (int k = 0; k <= d; ++k) {
        if (k < lo && sgn(g[k]) != 0)
          throw LinearizationSupportError(rec.name + ": g(" + std::to_string(n) + "," + std::to_string(m) + ";" +
                                          std::to_string(k) + ") != 0 below |n-m|");
        if (sgn(g[k]) < 0)
          throw NegativeLinearization(rec.name + ": g(" + std::to_string(n) + "," + std::to_string(m) + ";" +
                                      std::to_string(k) + ") = " + to_fraction_string(g[k]));
        total += g[k];
      }
      if (total != 1)
        throw NormalizationError(rec.name + ": row (" + std::to_string(n) + "," + std::to_string(m) + ") sums to " +
                                 to_fraction_string(total));
      LinearizationTable::Row row{lo, std::vector<Rational>(g.begin() + lo, g.end())};
      rows[static_cast<std::size_t>(m) * side + n] = row;
      rows[static_cast<std::size_t>(n) * side + m] = std::move(row);
    }
  }
  return LinearizationTable(n_max, std::move(rows));
}

}  // namespace hyperconv
