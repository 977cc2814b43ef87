#pragma once

// Exact enumeration of discrete multiline queues by bottom row, the
// determinant formulas for reverse-like permutations, and a
// Lindström-Gessel-Viennot oracle.

#include "tasep/core.hpp"
#include "tasep/linalg.hpp"

#include <map>
#include <vector>

namespace tasep::count {

/// Strictly increasing sites b_1 < ... < b_n on a ring of N sites.
struct PositionVector {
  std::vector<int> b;
  int N = 0;

  int size() const { return static_cast<int>(b.size()); }
};

/// Throws std::invalid_argument unless b is strictly increasing in [0, N).
void validate(const PositionVector& pos);

/// prod_i C(N, M_i).
Integer count_all_mlqs(const TypeVector& type);
/// The same number obtained by visiting every MLQ.
Integer count_all_mlqs_explicit(const TypeVector& type, double cap = 2e8);

/// Number of MLQs per labelled bottom row, over all MLQs of the type. The
/// enumeration is split over choices of the top row.
std::map<RingWord, Integer> bottom_counts(const TypeVector& type, int jobs = 1, double cap = 2e8);

/// Bottom word of the all-ones type with pi(i) placed at b_i.
RingWord word_at(const Permutation& pi, const PositionVector& pos);

/// Number of MLQs of type (1,...,1) whose bottom row carries pi at b.
Integer G_pi_brute(const Permutation& pi, const PositionVector& pos, double cap = 2e8);

/// det C(b_i + j - 1, j - 1).
Integer G_w0_det(const PositionVector& pos);
/// prod_{k<l} (b_l - b_k) / prod_{d<n} d!.
Integer G_w0_product(const PositionVector& pos);
/// Both routes; throws std::logic_error if they disagree.
Integer G_w0_formula(const PositionVector& pos);

/// C(N,k) det A_k - G_w0.
Integer G_skw0_formula(int k, const PositionVector& pos);

/// n > k_1 > k_2 + 1 > ... > k_r + r - 1 > r - 1.
bool admissible(const std::vector<int>& kvec, int n);

/// s_{k_1} ... s_{k_r} w_0 (the reflections commute for admissible k).
Permutation reflected_w0(const std::vector<int>& kvec, int n);

/// Row i (1-based) of A_S uses shift k(S)'_{n+1-i}, the conjugate of the
/// partition formed by the parts indexed by S.
IntegerMatrix A_S(const std::vector<int>& kvec, unsigned subset_mask, const PositionVector& pos);

/// sum over S of (-1)^{r-|S|} prod_{i in S} C(N, k_i) det A_S. With this
/// sign the r = 1 case is C(N,k) det A_k - G_w0.
Integer G_Sw0_formula(const std::vector<int>& kvec, const PositionVector& pos);

/// Lattice point (row, col); paths step right (col + 1) or down (row + 1).
struct Point {
  int row = 0;
  int col = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct PathFamilySpec {
  std::vector<Point> starts;
  std::vector<Point> ends;
};

Integer lattice_paths(Point from, Point to);

/// det of the start/end path-count matrix.
Integer lgv_count(const PathFamilySpec& spec);
/// Signed count over pairings sigma of vertex-disjoint path families
/// start_i -> end_sigma(i), by explicit enumeration of paths. Equals the
/// number of disjoint families when only the identity pairing admits any.
Integer lgv_brute(const PathFamilySpec& spec);

/// The start/end points used to count MLQs with bottom row w0 at b.
PathFamilySpec w0_path_family(const PositionVector& pos);

/// Exhaustive comparisons against brute-force counts: every b with
/// n <= N <= max_N. Each checked b is one case.
SweepResult check_w0(int n, int max_N, int jobs = 1);
SweepResult check_skw0(int k, int n, int max_N, int jobs = 1);
SweepResult check_Sw0(const std::vector<int>& kvec, int n, int max_N, int jobs = 1);
/// Ferrari-Martin: exact stationary law equals bottom counts / Z.
SweepResult check_ferrari_martin(const TypeVector& type);

}  // namespace tasep::count
