#pragma once

#include "hyperconv/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hyperconv {

// Dense polynomial over Q in the monomial basis; coeffs[i] multiplies x^i.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial x();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational evaluate(const Rational& at) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// x P_n = a_n P_{n+1} + b_n P_n + c_n P_{n-1} for n >= 1, with P_0 = 1 and
// P_1 given explicitly.
struct Recurrence {
  std::string name;
  std::function<Rational(int)> a;
  std::function<Rational(int)> b;
  std::function<Rational(int)> c;
  Polynomial p1;

  static Recurrence chebyshev_first();
  // R_n = U_n / (n+1), so R_n(1) = 1.
  static Recurrence chebyshev_second_normalized();
  // C_n^lambda / C_n^lambda(1); lambda = 1/2 gives the Legendre polynomials.
  static Recurrence gegenbauer_normalized(const Rational& lambda);
};

// P_0 .. P_{count-1}. Throws ParamRange if some a_n used is zero.
std::vector<Polynomial> generate_polynomials(const Recurrence& rec, int count);

// Coefficients g(n,m;k) of P_n P_m = sum_k g(n,m;k) P_k for n,m <= n_max,
// stored densely for |n-m| <= k <= n+m.
class LinearizationTable {
 public:
  struct Row {
    int k_lo = 0;
    std::vector<Rational> g;  // g[k - k_lo]
  };

  LinearizationTable(int n_max, std::vector<Row> rows) : n_max_(n_max), rows_(std::move(rows)) {}

  int n_max() const { return n_max_; }
  const Row& row(int n, int m) const;
  Rational g(int n, int m, int k) const;

 private:
  int n_max_;
  std::vector<Row> rows_;  // row-major (n, m)
};

// Exact change of basis from the monomial basis into {P_k}. Asserts
// P_n(1) = 1 for n <= 2 n_max (NormalizationError), the support bounds
// (LinearizationSupportError) and g >= 0 (NegativeLinearization).
LinearizationTable linearize(const Recurrence& rec, int n_max);

}  // namespace hyperconv
