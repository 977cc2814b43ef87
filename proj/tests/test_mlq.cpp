#include "doctest.h"

#include "tasep/mlq.hpp"

#include <map>

using namespace tasep;
using namespace tasep::mlq;

TEST_CASE("a box claims the first free box weakly to its right") {
  const DiscreteMLQ q(TypeVector({1, 1}, 3), {{1}, {0, 2}});
  const auto l = label_mlq(q);
  CHECK(l.labels[1] == std::vector<Label>{2, 1});
  CHECK(to_string(bottom_word(l)) == "2.1");
  REQUIRE(l.paths.size() == 2);
  CHECK(l.paths[0].label == 1);
  CHECK_FALSE(l.paths[0].wraps);
}

TEST_CASE("claims wrap around the ring") {
  const DiscreteMLQ q(TypeVector({1, 1}, 4), {{3}, {0, 2}});
  const auto l = label_mlq(q);
  CHECK(to_string(bottom_word(l)) == "1.2.");
  CHECK(l.paths[0].wraps);
}

TEST_CASE("equal labels: leftmost first by default") {
  // two class-1 boxes competing for boxes to their right
  std::vector<int> claimed;
  const auto lower = label_next_row(5, {0, 1}, {1, 1}, {1, 3, 4}, 2, TieOrder::kLeftmostFirst, &claimed);
  CHECK(lower == std::vector<Label>{1, 1, 2});
  CHECK(claimed == std::vector<int>{0, 1, -1});
  const auto other = label_next_row(5, {0, 1}, {1, 1}, {1, 3, 4}, 2, TieOrder::kRightmostFirst, &claimed);
  CHECK(other == std::vector<Label>{1, 1, 2});
  CHECK(claimed == std::vector<int>{1, 0, -1});
}

TEST_CASE("invalid multiline queues are rejected") {
  CHECK_THROWS(DiscreteMLQ(TypeVector({1, 1}, 3), {{1}}));
  CHECK_THROWS(DiscreteMLQ(TypeVector({1, 1}, 3), {{1}, {2, 0}}));
  CHECK_THROWS(DiscreteMLQ(TypeVector({1, 1}, 3), {{3}, {0, 2}}));
}

TEST_CASE("last-row step") {
  CHECK(to_string(last_row_step(parse_ring_word("1.2."), {1, 2, 3})) == ".123");
  CHECK(to_string(last_row_step(parse_ring_word("1.2."), {0, 2})) == "1.2.");
  CHECK(to_string(last_row_step(parse_ring_word("2..1"), {0, 1})) == "12..");
}

TEST_CASE("enumeration visits prod C(N, M_i) queues") {
  for (const auto& t : {TypeVector({1, 1}, 4), TypeVector({2, 1}, 5), TypeVector({1, 1, 1}, 4)}) {
    long visits = 0;
    for_each_labeled_mlq(t, [&](const auto&, const auto&) { ++visits; });
    CHECK(Integer(visits) == mlq_total(t));
  }
  CHECK(mlq_total(TypeVector({1, 1, 1}, 5)) == 5 * 10 * 10);
  CHECK_THROWS_AS(for_each_labeled_mlq(TypeVector({1, 1, 1}, 5), [](const auto&, const auto&) {}, std::nullopt, 10),
                  CapExceeded);
}

TEST_CASE("fixed bottom restricts the enumeration") {
  const TypeVector t({1, 1}, 4);
  long all = 0, fixed = 0;
  for_each_labeled_mlq(t, [&](const auto& rows, const auto&) { all += rows.back() == std::vector<int>{0, 2}; });
  for_each_labeled_mlq(t, [&](const auto&, const auto&) { ++fixed; }, std::vector<int>{0, 2});
  CHECK(all == fixed);
}

TEST_CASE("continuous arrangements") {
  const Arrangement a({2, 1, 2});
  CHECK(a.rows() == 2);
  CHECK(a.boxes() == 3);
  CHECK(label_arrangement(a) == parse_permutation("21"));
  CHECK(label_arrangement(a.rotated(1)) == parse_permutation("12"));
  CHECK_THROWS(Arrangement({1, 1, 2}));
  const auto q = materialize(a);
  CHECK(q.ring_size() == 3);
  CHECK(q.row(1) == std::vector<int>{0, 2});

  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto s = sample_arrangement(4, rng);
    CHECK(s.boxes() == 10);
    CHECK(s.row_sizes() == std::vector<int>{1, 2, 3, 4});
  }
}

TEST_CASE("subsets are produced in lexicographic order") {
  std::vector<std::vector<int>> seen;
  for_each_subset(4, 2, [&](const std::vector<int>& s) { seen.push_back(s); });
  CHECK(seen.size() == 6);
  CHECK(seen.front() == std::vector<int>{0, 1});
  CHECK(seen.back() == std::vector<int>{2, 3});
  CHECK(std::is_sorted(seen.begin(), seen.end()));
}
