#pragma once

// Discrete and continuous multiline queues, the queue labelling procedure,
// bully paths and the single-row "last row" map.

#include "tasep/core.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace tasep::mlq {

using Rng = std::mt19937_64;

/// Rows of box positions on a ring. Row r (0-based, top first) holds
/// M_{r+1} strictly increasing positions in [0, N).
class DiscreteMLQ {
 public:
  DiscreteMLQ(TypeVector type, std::vector<std::vector<int>> rows);

  const TypeVector& type() const { return type_; }
  int ring_size() const { return type_.ring_size(); }
  int rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& row(int r) const { return rows_.at(r); }
  const std::vector<std::vector<int>>& all_rows() const { return rows_; }

  friend bool operator==(const DiscreteMLQ&, const DiscreteMLQ&) = default;

 private:
  TypeVector type_;
  std::vector<std::vector<int>> rows_;
};

struct Cell {
  int row = 0;
  int pos = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Trajectory of one class-k label from the box where it first appears
/// (row k-1, 0-based) down to the bottom row: straight down, then
/// cyclically right along the next row to the claimed box.
struct BullyPath {
  Label label = 0;
  std::vector<Cell> cells;
  bool wraps = false;  // crosses from position N-1 to 0 somewhere
};

struct LabeledMLQ {
  DiscreteMLQ base;
  /// labels[r][j] is the class of the j-th box of row r.
  std::vector<std::vector<Label>> labels;
  std::vector<BullyPath> paths;
};

/// Order in which boxes of equal label are processed.
enum class TieOrder { kLeftmostFirst, kRightmostFirst };

/// One step of the labelling procedure. `upper_positions`/`upper_labels`
/// describe the labelled row; every upper box claims the first unclaimed
/// lower box weakly to its right (cyclically), in increasing label order.
/// Unclaimed lower boxes get `fresh_label`. When `claimed_by` is given, it
/// receives for every lower box the index of the upper box that claimed it
/// (or -1).
std::vector<Label> label_next_row(int ring_size, const std::vector<int>& upper_positions,
                                  const std::vector<Label>& upper_labels,
                                  const std::vector<int>& lower_positions, Label fresh_label,
                                  TieOrder order = TieOrder::kLeftmostFirst,
                                  std::vector<int>* claimed_by = nullptr);

LabeledMLQ label_mlq(const DiscreteMLQ& q, TieOrder order = TieOrder::kLeftmostFirst);

/// Labels of the bottom row placed on the ring; other sites vacant.
RingWord bottom_word(const LabeledMLQ& l);

/// Relative order of the boxes of a continuous MLQ read around the circle
/// from a fixed origin: entry p is the (1-based) row of the p-th box.
class Arrangement {
 public:
  /// Row i must appear M_i times for the given class counts (default: all
  /// ones, i.e. row i appears i times).
  explicit Arrangement(std::vector<int> order, std::optional<std::vector<int>> class_counts = std::nullopt);

  int rows() const { return static_cast<int>(row_sizes_.size()); }
  int boxes() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  const std::vector<int>& row_sizes() const { return row_sizes_; }

  Arrangement rotated(int offset) const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::vector<int> order_;
  std::vector<int> row_sizes_;
};

/// The arrangement realised on a ring of N = boxes() sites, one box per site.
DiscreteMLQ materialize(const Arrangement& a);

/// Bottom-row labels read left to right from the origin.
std::vector<Label> label_arrangement_word(const Arrangement& a);

/// As label_arrangement_word, for the all-ones type where the bottom row is
/// a permutation.
Permutation label_arrangement(const Arrangement& a);

/// Uniformly random interleaving of {1 x 1, 2 x 2, ..., n x n}.
Arrangement sample_arrangement(int n, Rng& rng);

/// The labelling procedure applied once: `u` is the labelled row above and
/// `boxes` the increasing positions of the new row. Boxes not claimed by a
/// particle of `u` get the label (largest label of u) + 1.
RingWord last_row_step(const RingWord& u, const std::vector<int>& boxes);

/// Lexicographically ordered k-subsets of {0..n-1}.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn);

/// Visits every MLQ of the given type with its labelling. Rows are labelled
/// incrementally, so shared prefixes are labelled once. When
/// `fixed_bottom` is set only MLQs with that bottom row are visited.
/// Throws CapExceeded when the number of MLQs to visit exceeds `cap`.
using MlqVisitor = std::function<void(const std::vector<std::vector<int>>& rows,
                                      const std::vector<std::vector<Label>>& labels)>;
void for_each_labeled_mlq(const TypeVector& type, const MlqVisitor& visit,
                          const std::optional<std::vector<int>>& fixed_bottom = std::nullopt,
                          double cap = 2e8);

/// Number of MLQs of a type, prod_i C(N, M_i).
Integer mlq_total(const TypeVector& type);

}  // namespace tasep::mlq
