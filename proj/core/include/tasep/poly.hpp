#pragma once

// Sparse multivariate polynomials over the rationals in q_1..q_n, with
// constant-coefficient differential operators and integration over the
// ordered simplex.

#include "tasep/core.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tasep::poly {

using Exponents = std::vector<int>;

/// Variables are numbered 1..nvars in the public interface.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational& c);
  /// q_i
  static MultiPoly variable(int nvars, int i);
  static MultiPoly monomial(const Rational& c, Exponents e);

  int nvars() const { return nvars_; }
  /// Terms in increasing lexicographic order of exponent vectors.
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(const Exponents& e) const;

  /// Adds c * q^e; zero results are erased.
  void add_term(const Exponents& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void check_arity(const MultiPoly& o) const;

  int nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

MultiPoly pow(const MultiPoly& p, int k);

/// Terms of total degree exactly d.
MultiPoly homogeneous_part(const MultiPoly& p, int d);

Rational evaluate(const MultiPoly& p, const std::vector<Rational>& point);

/// Replaces q_i by images[i-1] (all images share one arity).
MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images);

/// prod_{k<l} (q_l - q_k), expanded.
MultiPoly vandermonde(int n);

/// d^order / dq_var^order.
MultiPoly partial_derivative(const MultiPoly& p, int var, int order = 1);

MultiPoly laplacian(const MultiPoly& p);

/// The q-Laplacian written in gap coordinates L_0..L_n (nvars = n + 1),
/// L_0 = q_1, L_i = q_{i+1} - q_i, L_n = 1 - q_n. Since d/dq_i acts as
/// D_{i-1} - D_i, this is sum_{i=1..n} (D_{i-1} - D_i)^2.
MultiPoly gap_laplacian(const MultiPoly& p);

/// Determinant of a square matrix of polynomials by Laplace expansion.
MultiPoly det_symbolic(const std::vector<std::vector<MultiPoly>>& m);

/// sum_t coef_t * prod_i d^{e_ti}/dq_i^{e_ti}. The empty exponent vector
/// (or all zeros) is the identity.
struct OperatorExpr {
  struct Term {
    Rational coef;
    Exponents exps;
  };
  std::vector<Term> terms;
};

/// Parses e.g. "1 - 1/6*d2d3d4 - d4 + 1/6*d2d3d4^2" or
/// "-1 - d1 - 1/2*d1^2". Variables are 1-based.
OperatorExpr parse_operator(std::string_view text);
std::string to_string(const OperatorExpr& op);

MultiPoly apply_operator(const OperatorExpr& op, const MultiPoly& p);

/// Integral over 0 < q_1 < ... < q_n < 1, by integrating q_1 from 0 to q_2,
/// then q_2 from 0 to q_3, and so on.
Rational integrate_ordered_simplex(const MultiPoly& p);

/// Closed form per monomial: prod_k 1 / (e_1 + ... + e_k + k).
Rational integrate_ordered_simplex_closed(const MultiPoly& p);

/// Integral of a univariate polynomial over [lo, hi].
Rational integrate_interval(const MultiPoly& p, const Rational& lo, const Rational& hi);

/// Human readable, e.g. "2*q1*q2^2 - 1/3*q3".
std::string to_string(const MultiPoly& p);

}  // namespace tasep::poly
