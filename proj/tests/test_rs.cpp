#include "doctest.h"

#include "tasep/rs.hpp"

#include <set>

using namespace tasep;
using namespace tasep::rs;

TEST_CASE("linking patterns are validated") {
  CHECK(is_valid({2, 1, 4, 3}));
  CHECK_FALSE(is_valid({3, 4, 1, 2}));  // crossing
  CHECK_FALSE(is_valid({1, 2}));        // fixed points
  CHECK_FALSE(is_valid({2, 3, 1}));
  CHECK_THROWS(LinkingPattern({3, 4, 1, 2}));
  const auto l = parse_pattern("(1,4)(2,3)(5,6)");
  CHECK(l.n() == 3);
  CHECK(l(4) == 1);
  CHECK(to_string(l) == "(1,4)(2,3)(5,6)");
  CHECK(l.nesting() == 1);
  CHECK(LinkingPattern::from_pairs(3, {{5, 6}, {2, 3}, {1, 4}}) == l);
  CHECK_THROWS(parse_pattern("(1,2)(2,3)"));
}

TEST_CASE("patterns are counted by Catalan numbers") {
  const std::vector<std::size_t> catalan{1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) CHECK(enumerate_patterns(n).size() == catalan[n - 1]);
  const auto p = enumerate_patterns(4);
  CHECK(std::is_sorted(p.begin(), p.end()));
}

TEST_CASE("generator action") {
  const auto l = parse_pattern("(1,4)(2,3)(5,6)");
  CHECK(to_string(apply_e(l, 4)) == "(1,6)(2,3)(4,5)");
  CHECK(apply_e(l, 2) == l);
  CHECK(to_string(apply_e(l, 6)) == "(1,6)(2,3)(4,5)");
  CHECK(apply_word(l, {4, 4}) == apply_e(l, 4));
}

TEST_CASE("e_S firing order") {
  CHECK(firing_order(3, {1, 2, 3, 4, 5, 6}) == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(firing_order(3, {1, 6}) == std::vector<int>{6, 1});
  CHECK(firing_order(3, {2, 4, 5}) == std::vector<int>{2, 4, 5});
  for (const auto& l : enumerate_patterns(3))
    for (const auto& order : admissible_orders(3, {1, 2, 6})) CHECK(apply_word(l, order) == apply_eS(l, {1, 2, 6}));
}

TEST_CASE("Temperley-Lieb relations") {
  for (int n = 1; n <= 4; ++n) CHECK(check_relations(n, n <= 3).ok());
}

TEST_CASE("stationary laws of the k-RS chain") {
  const auto s1 = rs_stationary(3, 1);
  REQUIRE(s1.unique);
  const auto ext = extremes(s1);
  CHECK(ext.max_prob == make_rational(2, 7));
  CHECK(ext.min_prob == make_rational(1, 7));
  CHECK(ext.argmax.size() == 2);
  for (int k = 2; k < 6; ++k) CHECK(rs_stationary(3, k).prob == s1.prob);
  const auto s4 = rs_stationary(4, 1);
  CHECK(s4.states.size() == 14);
  CHECK(extremes(s4).max_prob == make_rational(1, 6));
  CHECK(extremes(s4).min_prob == make_rational(1, 42));
  CHECK(is_row_stochastic(rs_transition_matrix(2, 3).matrix));
}
