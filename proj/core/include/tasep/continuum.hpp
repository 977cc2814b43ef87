#pragma once

// The continuous-ring limit: arrangements of continuous multiline queues,
// permutation probabilities p_pi, densities g_pi and two-point correlations.

#include "tasep/core.hpp"
#include "tasep/mlq.hpp"
#include "tasep/poly.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <vector>

namespace tasep::continuum {

/// B = C(n+1, 2) boxes.
int box_count(int n);
/// B! / (1! 2! ... n!).
Integer arrangement_count(int n);

inline constexpr double kArrangementCap = 5e7;

/// Every interleaving of {1 x 1, ..., n x n}, lexicographically. Throws
/// CapExceeded beyond `cap` arrangements.
void for_each_arrangement(int n, const std::function<void(const mlq::Arrangement&)>& fn,
                          double cap = kArrangementCap);

/// Bottom labels of an all-ones arrangement given as a row sequence,
/// computed without allocation. `order` has box_count(n) entries; the
/// result holds the n labels read from the origin. n <= 8.
void label_bottom(const int* order, int n, int* labels);

/// Counts of arrangements by (bottom permutation, set of bottom slots).
/// Permutations are indexed lexicographically; slot sets by colex rank.
struct Census {
  int n = 0;
  int boxes = 0;
  Integer total;
  std::vector<Permutation> perms;
  std::vector<std::vector<int>> bottom_sets;  // increasing slot lists
  /// counts[p * bottom_sets.size() + s]
  std::vector<std::int64_t> counts;
  std::vector<Integer> perm_counts;

  int perm_index(const Permutation& p) const;
  std::int64_t count(int perm, int set) const { return counts[static_cast<std::size_t>(perm) * bottom_sets.size() + set]; }
};

/// Exhaustive census, memoised per n. Rows are placed top-down into the
/// free slots and labelled as they are placed; work is split over the
/// choices of the first rows.
std::shared_ptr<const Census> census(int n, int jobs = 1, double cap = kArrangementCap);

struct PermDist {
  int n = 0;
  std::map<Permutation, Rational> p;

  Rational total() const;
};

/// p_pi: the fraction of arrangements whose bottom row, read from the
/// origin, is pi. (Averaging over all B origins gives the same numbers.)
PermDist p_exact(int n, int jobs = 1);

/// 1 / prod_{k=1}^{n-1} C(2k+1, k+1).
Rational p_w0_formula(int n);

/// Density of the bottom positions 0 < q_1 < ... < q_n < 1 jointly with the
/// bottom permutation pi, in the gap variables L_0 = q_1, L_i = q_{i+1} -
/// q_i, L_n = 1 - q_n (polynomial in n + 1 variables).
poly::MultiPoly g_poly_gaps(const Permutation& pi, int jobs = 1);

/// g_pi in q_1..q_n. Normalised so that g_{w0} = n! prod (q_l - q_k) and
/// the integrals over the ordered simplex sum to 1.
poly::MultiPoly g_poly(const Permutation& pi, int jobs = 1);

/// q_i images of the gap variables: L_0 = q_1, ..., L_n = 1 - q_n.
std::vector<poly::MultiPoly> gaps_in_q(int n);

struct OperatorCheck {
  bool equal = false;
  poly::MultiPoly expected;  // g(target)
  poly::MultiPoly actual;    // op applied to g(base)
};

OperatorCheck check_operator_identity(const Permutation& target, const poly::OperatorExpr& op,
                                      const Permutation& base);

/// (1/k!) d^k/dq_{n-k+1}...dq_n - 1.
poly::OperatorExpr one_away_operator(int k, int n);

/// Harmonicity of g_pi; the gap form is used and pulled back to q.
bool is_harmonic(const Permutation& pi, int jobs = 1);

/// Smallest rotation of each cyclic class of permutations of size n.
std::vector<Permutation> rotation_class_representatives(int n);

/// Row-stochastic correlation table, entries c[i-1][j-1].
struct CorrTable {
  int n = 0;
  std::vector<std::vector<Rational>> c;

  const Rational& at(int i, int j) const { return c[i - 1][j - 1]; }
};

/// c_{i,j}: probability that the cyclic successor of label i is j.
CorrTable correlations_exact(int n, int jobs = 1);

/// n P(w_a = i, w_{a+1} = j) for the a-th and (a+1)-th (cyclically) particles
/// counted from the origin, a in 1..n.
CorrTable correlations_at_offset(int n, int a, int jobs = 1);

struct CorrEstimate {
  int n = 0;
  long samples = 0;
  std::vector<std::vector<double>> estimate;
  std::vector<std::vector<double>> stderr_;
};

/// Uniform arrangements sampled in a fixed number of independent streams
/// (split from `seed`), so the result does not depend on `jobs`.
CorrEstimate correlations_mc(int n, long samples, std::uint64_t seed, int jobs = 1);

/// The conjectured closed form for c_{i,j}(n).
Rational conj_correlation(int i, int j, int n);

/// Closed forms for c_{2,1}, c_{1,2} and c_{n,n-1}.
Rational prop_c21(int n);
Rational prop_c12(int n);
Rational prop_cn_nminus1(int n);

/// Integral of 2n (1-y)^2 y^{n-1} over [0, 1].
Rational c21_integral(int n);

/// (n-2, n-2, i)-column SYT count used for c_{n,n-1}:
/// (2n-4+i)! (n-i)(n-i-1) / (i! n! (n-1)!).
Integer syt_columns_formula(int n, int i);

/// (3n-3) sum_i SYT / multinomial(3n-3; n, n-1, n-2).
Rational c_n_nminus1_syt(int n);

}  // namespace tasep::continuum
