#pragma once

// Partitions and Young tableaux: hook-content and Jacobi-Trudi counts,
// brute-force enumeration, the bijection between multiline queues with a
// descending prefix and semistandard tableaux, probabilities of an initial
// decreasing word and Gelfand-Tsetlin pattern counts.

#include "tasep/core.hpp"
#include "tasep/mlq.hpp"

#include <vector>

namespace tasep::tab {

class Partition {
 public:
  Partition() = default;
  /// Weakly decreasing; zero parts are dropped.
  explicit Partition(std::vector<int> parts);
  static Partition from_conjugate(const std::vector<int>& columns);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  /// lambda_i, 1-based; 0 beyond the length.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  Partition conjugate() const;
  bool contains(const Partition& other) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);

/// All partitions fitting in a rows x cols box, including the empty one.
std::vector<Partition> partitions_in_box(int rows, int cols);

/// Content j - i and hook length of cell (i, j), both 1-based.
int content(int i, int j);
int hook_length(const Partition& lam, int i, int j);

struct Tableau {
  /// Row i holds lambda_i entries.
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  /// Rows weakly increase, columns strictly increase, entries >= 1.
  bool is_semistandard() const;
  /// Semistandard and uses each of 1..|lambda| once.
  bool is_standard() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

/// Rows separated by '/', e.g. "1125/2368/359/57/6/9" (entries > 9 are
/// comma separated inside a row).
std::string to_string(const Tableau& t);

/// prod (t + c(r)) / h(r) over the cells of lambda.
Integer ssyt_count_hook_content(const Partition& lam, int t);
/// det C(t, lambda'_i - i + j).
Integer ssyt_count_jacobi_trudi(const Partition& lam, int t);
/// det C(t + j - 1, lambda'_i - i + j).
Integer ssyt_count_jacobi_trudi_shifted(const Partition& lam, int t);
/// All three; throws std::logic_error if any two disagree.
Integer ssyt_count(const Partition& lam, int t);

/// Every SSYT of the shape with entries in [t], in lexicographic order of
/// the row-major reading. Throws CapExceeded beyond `cap` tableaux.
std::vector<Tableau> ssyt_brute(const Partition& lam, int t, double cap = 1e7);
Integer ssyt_count_brute(const Partition& lam, int t, double cap = 1e7);

/// |lambda|! / prod h(r).
Integer syt_count_hook(const Partition& lam);
/// Counts standard fillings by removing corners recursively.
Integer syt_count_brute(const Partition& lam);

/// Probability that a stationary word of the (1,...,1)-TASEP on N sites
/// starts with x_n x_{n-1} ... x_2, given in that (decreasing) order:
/// det C(x_{i+1}, j-1) / prod_{i<n} C(N, i).
Rational f_pi_initial(const std::vector<int>& xs, int N);

/// The same probability read off an exact stationary distribution.
Rational prefix_probability(const std::vector<int>& xs, int N);

/// Number of MLQs of type m (sum m_i = N) whose bottom row starts
/// n (n-1) ... 2, site 0 first.
struct FwCount {
  Integer route_sum;      // f_pi_initial summed over the blocks, times prod C(N, M_i)
  Integer route_tableau;  // hook-content count of SSYT of shape lambda
  Integer route_product;  // prod (M_i+1)/(N+1-i) det C(N+1-j, M_i+2-j)
  Partition shape;        // lambda, with lambda'_i = M_{n-i} - (n-i-1)
  int t = 0;              // N - n + 1

  bool agree() const { return route_sum == route_tableau && route_tableau == route_product; }
};

FwCount F_w_count(const TypeVector& m);
Integer F_w_brute(const TypeVector& m, double cap = 2e8);

/// Right-distances of the non-forced boxes of a multiline queue whose bottom
/// row starts n (n-1) ... 2. Column i of the tableau lists row n-i read
/// from the right. A full last row, if present, is ignored. Throws
/// std::invalid_argument when the bottom row does not start with the
/// descending word or a bully path wraps.
Tableau mlq_to_ssyt(const mlq::LabeledMLQ& l);

/// Inverse of mlq_to_ssyt: the n - 1 rows on N sites (the last class is
/// vacancies), with the forced triangle restored.
mlq::DiscreteMLQ ssyt_to_mlq(const Tableau& t, int N, int n);

/// Count of interlacing triangular arrays: brute force over linear
/// extensions, and the closed form C(n+1,2)! prod_{i<n} i! / prod_{i<n} (2i+1)!.
struct GtCount {
  Integer brute;
  Integer formula;
  bool agree() const { return brute == formula; }
};
GtCount gt_pattern_count(int n);

/// Both sides of the row-addition identity for the hook-content formula:
/// prod_lambda (N-n+1+c)/h and
/// prod_i (lambda'_i+n-i)/(N+1-i) prod_mu (N-n+2+c)/h with mu'_i = lambda'_i + 1.
struct RowAdditionCheck {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};
/// lambda' must have n - 1 columns.
RowAdditionCheck hook_content_row_addition_check(const Partition& lam, int N, int n);
/// lambda from a type m with sum N.
RowAdditionCheck hook_content_row_addition_check(const TypeVector& m);

/// lambda'_i = M_{n-i} - (n-i-1), i = 1..n-1.
Partition fw_shape(const TypeVector& m);

}  // namespace tasep::tab
