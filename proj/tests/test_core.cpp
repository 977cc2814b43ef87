#include "doctest.h"

#include "tasep/core.hpp"
#include "tasep/linalg.hpp"
#include "tasep/parallel.hpp"

#include <random>
#include <set>

using namespace tasep;

TEST_CASE("binomial handles negative and out-of-range arguments") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(-1, 2) == 1);
  CHECK(binomial(-2, 3) == -4);
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(multinomial({1, 2, 3}) == 60);
}

TEST_CASE("rationals print in lowest terms and parse back") {
  const Rational r = make_rational(6, -4);
  CHECK(to_string(r) == "-3/2");
  CHECK(parse_rational("-3/2") == r);
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("type vectors") {
  const TypeVector t({2, 1, 3}, 8);
  CHECK(t.classes() == 3);
  CHECK(t.cumulative(0) == 0);
  CHECK(t.cumulative(2) == 3);
  CHECK(t.particles() == 6);
  CHECK_THROWS(TypeVector({3, 3}, 5));
  CHECK(TypeVector::ones(3, 4).counts() == std::vector<int>{1, 1, 1});
}

TEST_CASE("ring words: text form, rotation and canonical rotation") {
  const RingWord w = parse_ring_word("21.3");
  CHECK(w.size() == 4);
  CHECK(w[2] == kVacant);
  CHECK(w[-1] == 3);
  CHECK(to_string(w) == "21.3");
  CHECK(to_string(w.rotated(1)) == "1.32");
  const auto c = cyclic_canonical(w);
  CHECK(to_string(c.word) == "1.32");
  CHECK(w.rotated(c.offset) == c.word);
  CHECK(w.label_counts() == std::vector<int>{1, 1, 1});
  CHECK(to_string(RingWord({10, 2, kVacant})) == "10,2,.");
}

TEST_CASE("permutations") {
  const Permutation p = parse_permutation("4312");
  CHECK(p.inversions() == 5);
  CHECK(to_string(p.swap_values(1)) == "4321");
  CHECK(Permutation::reverse(4) == parse_permutation("4321"));
  CHECK(all_permutations(4).size() == 24);
  CHECK_THROWS(parse_permutation("122"));
  CHECK(parse_int_list("1, 2,3") == std::vector<int>{1, 2, 3});
}

TEST_CASE("sweep results keep a bounded witness list") {
  SweepResult s;
  for (int i = 0; i < 20; ++i) s.record(i % 2 == 0, "case " + std::to_string(i));
  CHECK(s.checked == 20);
  CHECK(s.mismatches == 10);
  CHECK_FALSE(s.ok());
  CHECK(s.witnesses.front() == "case 1");
  CHECK(s.witnesses.size() <= 10);
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion on random matrices") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 5;
    IntegerMatrix m(n, n);
    RationalMatrix q(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        m(i, j) = d(rng);
        q(i, j) = Rational(m(i, j));
      }
    CHECK(Rational(det_bareiss(m)) == det_cofactor(q));
    CHECK(det_fraction_free(q) == det_cofactor(q));
  }
  CHECK(det_bareiss(IntegerMatrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("stationary vector of a small chain") {
  RationalMatrix p{{make_rational(1, 2), make_rational(1, 2)}, {make_rational(1, 3), make_rational(2, 3)}};
  CHECK(is_row_stochastic(p));
  const auto v = stationary_vector(p);
  CHECK(v[0] == make_rational(2, 5));
  CHECK(v[1] == make_rational(3, 5));
  CHECK(left_multiply(v, p) == v);
  RationalMatrix id{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  CHECK_THROWS_AS(stationary_vector(id), ReducibleChain);
}

TEST_CASE("seed splitting gives distinct streams and parallel_for covers every index") {
  std::set<std::uint64_t> seeds;
  for (int s = 0; s < 64; ++s) seeds.insert(split_seed(7, s));
  CHECK(seeds.size() == 64);
  CHECK(split_seed(7, 3) == split_seed(7, 3));
  std::vector<int> hit(100, 0);
  parallel_for(100, 4, [&](int i) { hit[i] += 1; });
  for (int h : hit) CHECK(h == 1);
  CHECK_THROWS(parallel_for(10, 3, [](int i) {
    if (i == 5) throw std::runtime_error("boom");
  }));
}
