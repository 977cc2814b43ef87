#include "doctest.h"

#include "tasep/continuum.hpp"

using namespace tasep;
using namespace tasep::continuum;

TEST_CASE("arrangement counts") {
  CHECK(box_count(4) == 10);
  CHECK(arrangement_count(3) == 60);
  CHECK(arrangement_count(5) == 37837800);
  long visited = 0;
  for_each_arrangement(3, [&](const mlq::Arrangement&) { ++visited; });
  CHECK(visited == 60);
  CHECK_THROWS_AS(for_each_arrangement(5, [](const mlq::Arrangement&) {}, 1000), CapExceeded);
}

TEST_CASE("allocation-free labelling agrees with the reference labelling") {
  for_each_arrangement(4, [](const mlq::Arrangement& a) {
    int labels[4];
    label_bottom(a.order().data(), 4, labels);
    const auto ref = mlq::label_arrangement(a);
    for (int i = 0; i < 4; ++i) REQUIRE(labels[i] == ref[i]);
  });
}

TEST_CASE("n = 3 permutation probabilities") {
  const auto d = p_exact(3);
  CHECK(d.total() == 1);
  CHECK(d.p.at(parse_permutation("123")) == make_rational(5, 12));
  CHECK(d.p.at(parse_permutation("321")) == make_rational(1, 30));
  for (int n = 2; n <= 4; ++n) CHECK(p_exact(n).p.at(Permutation::reverse(n)) == p_w0_formula(n));
  CHECK(p_w0_formula(4) == make_rational(1, 1050));
}

TEST_CASE("densities") {
  for (int n = 2; n <= 4; ++n) CHECK(g_poly(Permutation::reverse(n)) == Rational(factorial(n)) * poly::vandermonde(n));
  const auto d = p_exact(3);
  Rational total = 0;
  for (const auto& pi : all_permutations(3)) {
    const Rational i = poly::integrate_ordered_simplex(g_poly(pi));
    CHECK(i == d.p.at(pi));
    total += i;
  }
  CHECK(total == 1);
  CHECK(substitute(g_poly_gaps(parse_permutation("12")), gaps_in_q(2)) == g_poly(parse_permutation("12")));
}

TEST_CASE("operator identities at n = 3 and 4") {
  const auto r = check_operator_identity(parse_permutation("4312"), one_away_operator(1, 4), Permutation::reverse(4));
  CHECK(r.equal);
  CHECK(is_harmonic(parse_permutation("4312")));
  CHECK(rotation_class_representatives(4).size() == 6);
}

TEST_CASE("correlations") {
  const auto c = correlations_exact(3);
  CHECK(c.at(1, 2) == make_rational(4, 5));
  CHECK(c.at(2, 1) == make_rational(1, 5));
  for (int n = 2; n <= 4; ++n) {
    const auto t = correlations_exact(n);
    for (int i = 1; i <= n; ++i) {
      Rational row = 0;
      for (int j = 1; j <= n; ++j) {
        row += t.at(i, j);
        if (i != j) CHECK(t.at(i, j) == conj_correlation(i, j, n));
      }
      CHECK(row == 1);
    }
  }
  for (int n = 3; n <= 4; ++n) {
    const auto t = correlations_exact(n);
    CHECK(t.at(2, 1) == prop_c21(n));
    CHECK(t.at(1, 2) == prop_c12(n));
    CHECK(t.at(n, n - 1) == prop_cn_nminus1(n));
    CHECK(prop_c21(n) == c21_integral(n));
  }
  CHECK(c_n_nminus1_syt(6) == make_rational(1, 33));
  CHECK(c_n_nminus1_syt(5) == prop_cn_nminus1(5));
}

TEST_CASE("offset correlations average to the cyclic correlations") {
  const int n = 3;
  const auto c = correlations_exact(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Rational sum = 0;
      for (int a = 1; a <= n; ++a) sum += correlations_at_offset(n, a).at(i, j);
      CHECK(sum / n == c.at(i, j));
    }
}

TEST_CASE("Monte Carlo correlations do not depend on the thread count") {
  const auto a = correlations_mc(4, 20000, 5, 1);
  const auto b = correlations_mc(4, 20000, 5, 3);
  CHECK(a.estimate == b.estimate);
  CHECK(a.stderr_ == b.stderr_);
  const auto exact = correlations_exact(4);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (i != j) CHECK(std::abs(a.estimate[i - 1][j - 1] - exact.at(i, j).get_d()) < 5 * a.stderr_[i - 1][j - 1] + 1e-3);
}
