#include "doctest.h"

#include "tasep/poly.hpp"

#include <random>

using namespace tasep;
using namespace tasep::poly;

namespace {

MultiPoly random_poly(int nvars, int degree, std::mt19937& rng) {
  std::uniform_int_distribution<int> e(0, degree), c(-5, 5);
  MultiPoly p(nvars);
  for (int t = 0; t < 6; ++t) {
    Exponents ex(static_cast<std::size_t>(nvars));
    for (auto& x : ex) x = e(rng);
    p.add_term(ex, make_rational(c(rng), 1 + e(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("arithmetic and printing") {
  const auto q1 = MultiPoly::variable(2, 1), q2 = MultiPoly::variable(2, 2);
  const auto p = (q1 + q2) * (q1 - q2);
  CHECK(to_string(p) == "q1^2 - q2^2");
  CHECK(p.degree() == 2);
  CHECK((p - p).is_zero());
  CHECK(MultiPoly(2).degree() == -1);
  CHECK(to_string(vandermonde(2)) == "-q1 + q2");
  CHECK(pow(q1 + MultiPoly::constant(2, Rational(1)), 3).coefficient({2, 0}) == 3);
  CHECK(homogeneous_part(p + q1, 1) == q1);
  CHECK_THROWS(q1 + MultiPoly::variable(3, 1));
}

TEST_CASE("evaluation and substitution") {
  const auto v = vandermonde(3);
  CHECK(evaluate(v, {Rational(0), Rational(1), Rational(3)}) == 1 * 3 * 2);
  // q_i -> q_i + 1 leaves the Vandermonde product unchanged
  std::vector<MultiPoly> shift;
  for (int i = 1; i <= 3; ++i) shift.push_back(MultiPoly::variable(3, i) + MultiPoly::constant(3, Rational(1)));
  CHECK(substitute(v, shift) == v);
}

TEST_CASE("derivatives and the Laplacian") {
  const auto q1 = MultiPoly::variable(2, 1);
  CHECK(partial_derivative(pow(q1, 3), 1, 2) == 6 * q1);
  CHECK(partial_derivative(pow(q1, 3), 2).is_zero());
  for (int n = 2; n <= 5; ++n) CHECK(laplacian(vandermonde(n)).is_zero());
  CHECK_FALSE(laplacian(pow(q1, 2)).is_zero());
}

TEST_CASE("gap Laplacian matches the Laplacian after pulling back") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 3;
    const auto p = random_poly(n + 1, 3, rng);
    std::vector<MultiPoly> gaps;
    gaps.push_back(MultiPoly::variable(n, 1));
    for (int i = 1; i < n; ++i) gaps.push_back(MultiPoly::variable(n, i + 1) - MultiPoly::variable(n, i));
    gaps.push_back(MultiPoly::constant(n, Rational(1)) - MultiPoly::variable(n, n));
    CHECK(substitute(gap_laplacian(p), gaps) == laplacian(substitute(p, gaps)));
  }
}

TEST_CASE("simplex integrals: iterated and closed form agree") {
  CHECK(integrate_ordered_simplex(MultiPoly::constant(3, Rational(1))) == make_rational(1, 6));
  CHECK(integrate_ordered_simplex(MultiPoly::variable(2, 2)) == make_rational(1, 3));
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_poly(1 + trial % 4, 4, rng);
    CHECK(integrate_ordered_simplex(p) == integrate_ordered_simplex_closed(p));
  }
  CHECK(integrate_interval(pow(MultiPoly::variable(1, 1), 2), Rational(0), Rational(3)) == 9);
}

TEST_CASE("operators parse, print and apply") {
  const auto op = parse_operator("1/2*d3d4 - 1");
  CHECK(to_string(op) == "1/2*d3d4 - 1");
  CHECK(to_string(parse_operator("-1 - d1 - 1/2*d1^2")) == "-1 - d1 - 1/2*d1^2");
  const auto q1 = MultiPoly::variable(1, 1);
  CHECK(apply_operator(parse_operator("d1^2 + 2"), pow(q1, 2)) == 2 * pow(q1, 2) + MultiPoly::constant(1, Rational(2)));
  CHECK_THROWS(parse_operator("d0"));
  CHECK_THROWS(parse_operator("1 +"));
}

TEST_CASE("symbolic determinant") {
  const auto x = MultiPoly::variable(2, 1), y = MultiPoly::variable(2, 2);
  const auto one = MultiPoly::constant(2, Rational(1));
  CHECK(det_symbolic({{one, one}, {x, y}}) == vandermonde(2));
}
