#pragma once

// The multi-type TASEP on a ring: single-particle and k-subset dynamics,
// exact transition matrices and stationary distributions, Monte Carlo.

#include "tasep/core.hpp"
#include "tasep/linalg.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace tasep::markov {

/// The particle at `site` tries to jump left: it moves into a vacancy, swaps
/// with a strictly larger label, and is blocked otherwise.
RingWord tasep_step(const RingWord& w, int site);

/// All words of a type, lexicographic on site sequences (vacancy last).
struct StateSpace {
  TypeVector type;
  std::vector<RingWord> states;
  std::map<RingWord, int> index;

  int size() const { return static_cast<int>(states.size()); }
  int at(const RingWord& w) const;
};

inline constexpr double kDefaultStateCap = 5000;

/// Throws CapExceeded when the multinomial state count exceeds `cap`.
StateSpace state_space(const TypeVector& type, double cap = kDefaultStateCap);

/// One uniformly chosen particle attempts a jump.
RationalMatrix transition_matrix(const StateSpace& space);

struct StationaryDist {
  std::map<RingWord, Rational> prob;

  const Rational& at(const RingWord& w) const { return prob.at(w); }
  Rational total() const;
};

/// Exact solution of pi P = pi, sum(pi) = 1. Throws ReducibleChain if the
/// solution is not unique.
StationaryDist stationary_exact(const StateSpace& space, const RationalMatrix& p);
StationaryDist stationary_exact(const TypeVector& type);

/// Stationary distribution via the chain lumped over rotation classes.
/// The TASEP commutes with rotation, so the unique stationary law is
/// rotation invariant; class masses are split evenly over class members.
StationaryDist stationary_by_rotation(const TypeVector& type, double cap = 5e5);

/// Rings the TASEP bell at every site of `subset` (sorted, distinct),
/// left neighbour before right neighbour. When the subset is the whole ring
/// the cycle of constraints is cut before site `cut`.
RingWord k_tasep_step(const RingWord& w, const std::vector<int>& subset, int cut = 0);

/// Uniform k-subset of sites per step. For k = N the cut point is uniform.
RationalMatrix k_tasep_matrix(const StateSpace& space, int k);

/// The process of the last row on words of `space`'s type: a uniformly
/// random set of particles() boxes is labelled from the current word.
RationalMatrix last_row_matrix(const StateSpace& space);

struct EmpiricalDist {
  std::map<RingWord, double> frequency;
  std::map<RingWord, double> standard_error;
  long samples = 0;
};

struct McOptions {
  long burn_in = 10000;
  long samples = 100000;
  std::uint64_t seed = 1;
  int chains = 4;
  int jobs = 1;
  int batches_per_chain = 25;
};

/// Empirical occupation frequencies of the TASEP chain after burn-in.
/// Standard errors use batch means over all chains.
EmpiricalDist mc_stationary(const TypeVector& type, const McOptions& options);

}  // namespace tasep::markov
