#pragma once

// Linking patterns, Temperley-Lieb generators acting on them and the
// k-subset Razumov-Stroganov chain.

#include "tasep/core.hpp"
#include "tasep/linalg.hpp"

#include <string>
#include <vector>

namespace tasep::rs {

/// Fixed-point-free non-crossing involution of {1..2n}.
class LinkingPattern {
 public:
  LinkingPattern() = default;
  /// partner[i-1] = L(i); validated.
  explicit LinkingPattern(std::vector<int> partner);
  /// From arcs (a, b), each point used once.
  static LinkingPattern from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  int n() const { return static_cast<int>(partner_.size()) / 2; }
  int points() const { return static_cast<int>(partner_.size()); }
  /// L(i), i in 1..2n.
  int operator()(int i) const { return partner_.at(i - 1); }
  const std::vector<int>& partner() const { return partner_; }
  /// Arcs (i, L(i)) with i < L(i), sorted.
  std::vector<std::pair<int, int>> pairs() const;
  /// Pairs of arcs (a, b), (c, d) with a < c < d < b.
  int nesting() const;

  friend bool operator==(const LinkingPattern&, const LinkingPattern&) = default;
  friend auto operator<=>(const LinkingPattern&, const LinkingPattern&) = default;

 private:
  std::vector<int> partner_;
};

/// "(1,4)(2,3)(5,6)"
std::string to_string(const LinkingPattern& l);
LinkingPattern parse_pattern(std::string_view text);

/// Fixed-point-free, involutive and non-crossing.
bool is_valid(const std::vector<int>& partner);

/// All linking patterns on [2n] in increasing order of the partner vector.
std::vector<LinkingPattern> enumerate_patterns(int n);

/// e_i L: joins i with i+1 and L(i) with L(i+1); indices mod 2n, i in 1..2n.
LinkingPattern apply_e(const LinkingPattern& l, int i);

/// Applies generators in order (first element first).
LinkingPattern apply_word(const LinkingPattern& l, const std::vector<int>& order);

/// Order in which e_S fires its generators: e_i before e_{i+1} whenever both
/// are in S (cyclically, 2n before 1). Realised by repeatedly taking the
/// lowest pending index whose predecessor is absent or has fired; S = [2n]
/// is cut at 1.
std::vector<int> firing_order(int n, const std::vector<int>& subset);

LinkingPattern apply_eS(const LinkingPattern& l, const std::vector<int>& subset);

/// Every order of S compatible with the adjacency constraint.
std::vector<std::vector<int>> admissible_orders(int n, const std::vector<int>& subset);

struct RsChain {
  int n = 0;
  int k = 0;
  std::vector<LinkingPattern> states;
  RationalMatrix matrix;
};

/// L -> e_S L with S uniform among the k-subsets of [2n].
RsChain rs_transition_matrix(int n, int k);

struct RsStationary {
  int n = 0;
  int k = 0;
  std::vector<LinkingPattern> states;
  RationalVec prob;
  /// False when the chain has no unique stationary vector.
  bool unique = true;
};

RsStationary rs_stationary(int n, int k);

struct RelationReport {
  SweepResult idempotent;   // e_i e_i = e_i
  SweepResult braid_like;   // e_i e_{i+-1} e_i = e_i
  SweepResult commuting;    // e_i e_j = e_j e_i, i, j non-adjacent
  SweepResult closure;      // e_i L is a valid pattern
  SweepResult order_free;   // all admissible orders of S agree

  bool ok() const {
    return idempotent.ok() && braid_like.ok() && commuting.ok() && closure.ok() && order_free.ok();
  }
};

/// Exhaustive over patterns of size n; `order_free` runs over every S
/// when `with_orders` is set (exponential in 2n).
RelationReport check_relations(int n, bool with_orders);

/// Largest and smallest stationary entries and the patterns attaining them.
struct ExtremesReport {
  Rational max_prob, min_prob;
  std::vector<LinkingPattern> argmax, argmin;
};
ExtremesReport extremes(const RsStationary& s);

}  // namespace tasep::rs
