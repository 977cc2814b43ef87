#include "doctest.h"

#include "tasep/markov.hpp"

using namespace tasep;
using namespace tasep::markov;

TEST_CASE("single jumps: vacancy, overtaking and blocking") {
  const RingWord w = parse_ring_word("21.3");
  CHECK(to_string(tasep_step(w, 0)) == "31.2");
  CHECK(to_string(tasep_step(w, 1)) == "12.3");
  CHECK(to_string(tasep_step(w, 3)) == "213.");
  CHECK(to_string(tasep_step(parse_ring_word("12"), 1)) == "12");
  CHECK_THROWS(tasep_step(w, 2));
}

TEST_CASE("state spaces") {
  const auto s = state_space(TypeVector({1, 1}, 3));
  CHECK(s.size() == 6);
  CHECK(s.states[s.at(parse_ring_word("2.1"))] == parse_ring_word("2.1"));
  CHECK_THROWS_AS(state_space(TypeVector::ones(6, 8), 100), CapExceeded);
  CHECK(is_row_stochastic(transition_matrix(s)));
}

TEST_CASE("two-species stationary law on three sites") {
  const auto d = stationary_exact(TypeVector({1, 1}, 3));
  CHECK(d.at(parse_ring_word("12.")) == make_rational(2, 9));
  CHECK(d.at(parse_ring_word("1.2")) == make_rational(1, 9));
  CHECK(d.total() == 1);
}

TEST_CASE("rotation-lumped solver agrees with the full solver") {
  for (const auto& t : {TypeVector({1, 1}, 4), TypeVector({2, 1}, 5), TypeVector({1, 1, 1}, 5), TypeVector({1, 2, 1}, 5)})
    CHECK(stationary_by_rotation(t).prob == stationary_exact(t).prob);
}

TEST_CASE("single-class TASEP is uniform") {
  const auto d = stationary_exact(TypeVector({2}, 5));
  for (const auto& [w, p] : d.prob) CHECK(p == make_rational(1, 10));
}

TEST_CASE("k-subset steps") {
  const RingWord w = parse_ring_word("21.3");
  CHECK(k_tasep_step(w, {1}) == tasep_step(w, 1));
  // site 0 rings before site 1
  CHECK(to_string(k_tasep_step(w, {0, 1})) == "13.2");
  const auto s = state_space(TypeVector({1, 1}, 4));
  for (int k = 1; k <= 4; ++k) CHECK(is_row_stochastic(k_tasep_matrix(s, k)));
  // k = 1 rings a uniform site, so vacant sites give lazy steps; same stationary law
  CHECK(stationary_exact(s, k_tasep_matrix(s, 1)).prob == stationary_exact(s, transition_matrix(s)).prob);
}

TEST_CASE("last-row matrix is stochastic and fixes the stationary law") {
  const auto s = state_space(TypeVector({1, 1}, 4));
  const auto m = last_row_matrix(s);
  CHECK(is_row_stochastic(m));
  const auto pi = stationary_exact(s, transition_matrix(s));
  RationalVec v;
  for (const auto& w : s.states) v.push_back(pi.at(w));
  CHECK(left_multiply(v, m) == v);
}

TEST_CASE("Monte Carlo is reproducible and close to the exact law") {
  const TypeVector t({1, 1}, 3);
  McOptions o;
  o.samples = 40000;
  o.burn_in = 1000;
  o.seed = 5;
  const auto a = mc_stationary(t, o);
  o.jobs = 2;
  const auto b = mc_stationary(t, o);
  CHECK(a.frequency == b.frequency);
  const auto exact = stationary_exact(t);
  for (const auto& [w, f] : a.frequency) CHECK(std::abs(f - exact.at(w).get_d()) < 5 * a.standard_error.at(w) + 1e-3);
}
