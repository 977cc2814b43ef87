#pragma once

// Exact-arithmetic primitives and ring/permutation value types shared by
// every tasepkit module.

#include <gmpxx.h>

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tasep {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an exhaustive computation would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generalised binomial coefficient. Zero for b < 0; for b >= 0 it is the
/// falling factorial a(a-1)...(a-b+1)/b!, so negative a is allowed and
/// b > a >= 0 gives zero.
Integer binomial(long a, long b);
Integer factorial(long n);
/// (a1+...+ak)! / (a1!...ak!)
Integer multinomial(const std::vector<long>& parts);

/// Build a rational in lowest terms.
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& r);
/// Inverse of to_string; accepts "p", "p/q" and "-p/q".
Rational parse_rational(std::string_view text);

/// Particle counts m_1..m_n on a ring of N sites.
class TypeVector {
 public:
  TypeVector() = default;
  TypeVector(std::vector<int> m, int ring_size);

  /// The all-ones type (1,...,1) of length n.
  static TypeVector ones(int n, int ring_size);

  int classes() const { return static_cast<int>(m_.size()); }
  int ring_size() const { return ring_size_; }
  const std::vector<int>& counts() const { return m_; }
  int count(int label) const { return m_.at(label - 1); }
  /// M_i = m_1 + ... + m_i, with M_0 = 0.
  int cumulative(int i) const;
  int particles() const { return cumulative(classes()); }

  friend bool operator==(const TypeVector&, const TypeVector&) = default;

 private:
  std::vector<int> m_;
  int ring_size_ = 0;
};

/// Site content. Labels are 1..n; vacancy is a sentinel that orders after
/// every label.
using Label = int;
inline constexpr Label kVacant = std::numeric_limits<Label>::max();

/// Outcome of checking an identity over a family of parameters. Witnesses
/// are human-readable descriptions of the first few failing cases.
struct SweepResult {
  long checked = 0;
  long mismatches = 0;
  std::vector<std::string> witnesses;

  bool ok() const { return mismatches == 0; }
  void record(bool match, const std::string& witness);
  void merge(const SweepResult& other);
};

/// A labelled particle configuration on a ring; indices are cyclic.
class RingWord {
 public:
  RingWord() = default;
  explicit RingWord(std::vector<Label> sites) : sites_(std::move(sites)) {}

  static RingWord vacant(int ring_size);

  int size() const { return static_cast<int>(sites_.size()); }
  Label operator[](int site) const { return sites_[wrap(site)]; }
  Label& operator[](int site) { return sites_[wrap(site)]; }
  bool occupied(int site) const { return (*this)[site] != kVacant; }
  const std::vector<Label>& sites() const { return sites_; }

  /// Sites 0..N-1 read starting from `offset`.
  RingWord rotated(int offset) const;
  /// Multiset of labels as counts m_1..m_n (n = largest label present).
  std::vector<int> label_counts() const;
  bool has_type(const TypeVector& t) const;

  friend bool operator==(const RingWord&, const RingWord&) = default;
  friend auto operator<=>(const RingWord&, const RingWord&) = default;

 private:
  int wrap(int site) const {
    const int n = size();
    return ((site % n) + n) % n;
  }
  std::vector<Label> sites_;
};

/// Compact text form: digits with '.' for vacancies when every label is a
/// single digit, otherwise comma separated.
std::string to_string(const RingWord& w);
RingWord parse_ring_word(std::string_view text);

struct CanonicalRotation {
  RingWord word;
  int offset = 0;
};

/// Lexicographically smallest rotation (vacancy sorts last) and the smallest
/// offset achieving it, so that word == w.rotated(offset).
CanonicalRotation cyclic_canonical(const RingWord& w);

/// A bijection on {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);
  /// The reverse permutation n(n-1)...1.
  static Permutation reverse(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

  /// s_k * this: swaps the values k and k+1.
  Permutation swap_values(int k) const;
  int inversions() const;
  Permutation rotated(int offset) const;
  RingWord as_word() const { return RingWord(entries_); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

/// "4312" for n <= 9, comma separated otherwise.
std::string to_string(const Permutation& p);
Permutation parse_permutation(std::string_view text);

/// All permutations of size n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Parse "1,2,3" into integers.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace tasep
