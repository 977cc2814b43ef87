#include "doctest.h"

#include "tasep/count.hpp"
#include "tasep/markov.hpp"

using namespace tasep;
using namespace tasep::count;

TEST_CASE("position vectors are validated") {
  CHECK_NOTHROW(validate({{0, 2, 3}, 6}));
  CHECK_THROWS(validate({{0, 0, 3}, 6}));
  CHECK_THROWS(validate({{0, 6}, 6}));
}

TEST_CASE("bottom counts partition all queues") {
  for (const auto& t : {TypeVector({1, 1}, 3), TypeVector({2, 1}, 4), TypeVector({1, 1, 1}, 4)}) {
    Integer sum = 0;
    for (const auto& [w, c] : bottom_counts(t)) sum += c;
    CHECK(sum == count_all_mlqs(t));
    CHECK(count_all_mlqs_explicit(t) == count_all_mlqs(t));
  }
  CHECK(bottom_counts(TypeVector({1, 1}, 3), 2) == bottom_counts(TypeVector({1, 1}, 3), 1));
}

TEST_CASE("stationary law equals normalised bottom counts") {
  CHECK(check_ferrari_martin(TypeVector({1, 1}, 4)).ok());
  CHECK(check_ferrari_martin(TypeVector({2, 1}, 5)).ok());
  CHECK(check_ferrari_martin(TypeVector({1, 1, 1}, 4)).ok());
}

TEST_CASE("reverse permutation counts") {
  const PositionVector pos{{0, 2, 3}, 6};
  CHECK(G_w0_det(pos) == 3);
  CHECK(G_w0_product(pos) == 3);
  CHECK(G_pi_brute(Permutation::reverse(3), pos) == 3);
  CHECK(G_w0_formula({{0, 1, 2, 3}, 5}) == 1);
  CHECK(lgv_count(w0_path_family(pos)) == 3);
  CHECK(lgv_brute(w0_path_family(pos)) == 3);
  CHECK(check_w0(3, 6).ok());
}

TEST_CASE("lattice paths") {
  CHECK(lattice_paths({0, 0}, {2, 2}) == 6);
  CHECK(lattice_paths({0, 0}, {0, 3}) == 1);
  CHECK(lattice_paths({1, 0}, {0, 3}) == 0);
  const PathFamilySpec crossing{{{0, 0}, {0, 1}}, {{1, 0}, {0, 2}}};
  CHECK(lgv_count(crossing) == lgv_brute(crossing));
}

TEST_CASE("reflections of the reverse permutation") {
  CHECK(admissible({3, 1}, 4));
  CHECK_FALSE(admissible({2, 1}, 4));
  CHECK_FALSE(admissible({4}, 4));
  CHECK(reflected_w0({3, 1}, 4) == parse_permutation("3412"));
  CHECK(reflected_w0({1}, 3) == parse_permutation("312"));
}

TEST_CASE("one-away and two-away formulas against enumeration") {
  CHECK(check_skw0(1, 3, 6).ok());
  CHECK(check_skw0(2, 3, 6).ok());
  CHECK(check_Sw0({3, 1}, 4, 6).ok());
  const PositionVector pos{{0, 2, 3, 5}, 7};
  CHECK(G_Sw0_formula({2}, pos) == G_skw0_formula(2, pos));
  CHECK(G_skw0_formula(1, pos) == G_pi_brute(reflected_w0({1}, 4), pos));
}
