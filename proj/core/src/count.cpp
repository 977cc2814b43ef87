#include "tasep/count.hpp"

#include "tasep/markov.hpp"
#include "tasep/mlq.hpp"
#include "tasep/parallel.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <mutex>
#include <numeric>

namespace tasep::count {

namespace {

std::string describe(const PositionVector& pos) {
  std::string s = "N=" + std::to_string(pos.N) + " b=";
  for (std::size_t i = 0; i < pos.b.size(); ++i) s += (i ? "," : "") + std::to_string(pos.b[i]);
  return s;
}

// Calls fn for every strictly increasing b of length n in [0, N).
void for_each_position(int n, int N, const std::function<void(const PositionVector&)>& fn) {
  mlq::for_each_subset(N, n, [&](const std::vector<int>& b) { fn(PositionVector{b, N}); });
}

}  // namespace

void validate(const PositionVector& pos) {
  for (int i = 0; i < pos.size(); ++i) {
    if (pos.b[i] < 0 || pos.b[i] >= pos.N) throw std::invalid_argument("position outside [0, N): " + describe(pos));
    if (i > 0 && pos.b[i] <= pos.b[i - 1]) throw std::invalid_argument("positions must increase: " + describe(pos));
  }
}

Integer count_all_mlqs(const TypeVector& type) { return mlq::mlq_total(type); }

Integer count_all_mlqs_explicit(const TypeVector& type, double cap) {
  Integer total = 0;
  mlq::for_each_labeled_mlq(
      type, [&](const auto&, const auto&) { ++total; }, std::nullopt, cap);
  return total;
}

std::map<RingWord, Integer> bottom_counts(const TypeVector& type, int jobs, double cap) {
  if (mlq::mlq_total(type).get_d() > cap) {
    throw CapExceeded("MLQ enumeration of " + mlq::mlq_total(type).get_str() + " queues exceeds the cap");
  }
  const int n = type.ring_size();
  std::vector<std::vector<int>> tops;
  mlq::for_each_subset(n, type.cumulative(1), [&](const std::vector<int>& s) { tops.push_back(s); });

  std::vector<std::map<RingWord, long>> partial(tops.size());
  parallel_for(static_cast<int>(tops.size()), jobs, [&](int t) {
    const int rows = type.classes();
    std::vector<std::vector<int>> pos(rows);
    std::vector<std::vector<Label>> lab(rows);
    pos[0] = tops[t];
    lab[0].assign(pos[0].size(), 1);
    auto& out = partial[t];
    std::function<void(int)> descend = [&](int r) {
      if (r == rows) {
        RingWord w = RingWord::vacant(n);
        for (std::size_t j = 0; j < pos[r - 1].size(); ++j) w[pos[r - 1][j]] = lab[r - 1][j];
        ++out[w];
        return;
      }
      mlq::for_each_subset(n, type.cumulative(r + 1), [&](const std::vector<int>& s) {
        pos[r] = s;
        lab[r] = mlq::label_next_row(n, pos[r - 1], lab[r - 1], s, r + 1);
        descend(r + 1);
      });
    };
    descend(1);
  });

  std::map<RingWord, Integer> merged;
  for (const auto& m : partial)
    for (const auto& [w, c] : m) merged[w] += c;
  return merged;
}

RingWord word_at(const Permutation& pi, const PositionVector& pos) {
  if (pi.size() != pos.size()) throw std::invalid_argument("permutation and positions differ in length");
  validate(pos);
  RingWord w = RingWord::vacant(pos.N);
  for (int i = 0; i < pi.size(); ++i) w[pos.b[i]] = pi[i];
  return w;
}

Integer G_pi_brute(const Permutation& pi, const PositionVector& pos, double cap) {
  word_at(pi, pos);  // validates
  const int n = pi.size();
  Integer hits = 0;
  const std::vector<Label> want(pi.entries().begin(), pi.entries().end());
  mlq::for_each_labeled_mlq(
      TypeVector::ones(n, pos.N),
      [&](const auto&, const std::vector<std::vector<Label>>& labels) {
        if (labels.back() == want) ++hits;
      },
      pos.b, cap);
  return hits;
}

Integer G_w0_det(const PositionVector& pos) {
  validate(pos);
  const int n = pos.size();
  IntegerMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= n; ++j) a(i, j - 1) = binomial(pos.b[i] + j - 1, j - 1);
  return det_bareiss(a);
}

Integer G_w0_product(const PositionVector& pos) {
  validate(pos);
  const int n = pos.size();
  Integer num = 1;
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) num *= pos.b[l] - pos.b[k];
  Integer den = 1;
  for (int d = 1; d < n; ++d) den *= factorial(d);
  if (num % den != 0) throw std::logic_error("Vandermonde product not divisible by superfactorial at " + describe(pos));
  return num / den;
}

Integer G_w0_formula(const PositionVector& pos) {
  const Integer d = G_w0_det(pos);
  const Integer p = G_w0_product(pos);
  if (d != p) throw std::logic_error("determinant and product routes disagree at " + describe(pos));
  return d;
}

Integer G_skw0_formula(int k, const PositionVector& pos) {
  const int n = pos.size();
  if (k < 1 || k >= n) throw std::invalid_argument("need 1 <= k < n");
  return binomial(pos.N, k) * det_bareiss(A_S({k}, 1u, pos)) - G_w0_formula(pos);
}

bool admissible(const std::vector<int>& kvec, int n) {
  if (kvec.empty()) return false;
  // n > k_1 > k_2 + 1 > ... > k_r + r - 1 > r - 1, i.e. k_i + i - 1 strictly
  // decreasing, bounded by n above and r - 1 below.
  const int r = static_cast<int>(kvec.size());
  int prev = n;
  for (int i = 0; i < r; ++i) {
    const int v = kvec[i] + i;
    if (v >= prev) return false;
    prev = v;
  }
  return prev > r - 1;
}

Permutation reflected_w0(const std::vector<int>& kvec, int n) {
  Permutation p = Permutation::reverse(n);
  for (auto it = kvec.rbegin(); it != kvec.rend(); ++it) p = p.swap_values(*it);
  return p;
}

IntegerMatrix A_S(const std::vector<int>& kvec, unsigned subset_mask, const PositionVector& pos) {
  validate(pos);
  const int n = pos.size();
  IntegerMatrix a(n, n);
  for (int i = 1; i <= n; ++i) {
    // conjugate part k(S)'_m: number of parts of k(S) that are >= m.
    const int m = n + 1 - i;
    int shift = 0;
    for (std::size_t s = 0; s < kvec.size(); ++s) {
      if ((subset_mask >> s & 1u) && kvec[s] >= m) ++shift;
    }
    for (int j = 1; j <= n; ++j) a(i - 1, j - 1) = binomial(pos.b[i - 1] + j - 1 - shift, j - 1 - shift);
  }
  return a;
}

Integer G_Sw0_formula(const std::vector<int>& kvec, const PositionVector& pos) {
  const int n = pos.size();
  if (!admissible(kvec, n)) throw std::invalid_argument("k vector is not admissible for n = " + std::to_string(n));
  const int r = static_cast<int>(kvec.size());
  Integer total = 0;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    Integer term = det_bareiss(A_S(kvec, mask, pos));
    for (int s = 0; s < r; ++s) {
      if (mask >> s & 1u) term *= binomial(pos.N, kvec[s]);
    }
    const int size = std::popcount(mask);
    total += (r - size) % 2 == 0 ? term : Integer(-term);
  }
  return total;
}

Integer lattice_paths(Point from, Point to) {
  const int down = to.row - from.row;
  const int right = to.col - from.col;
  if (down < 0 || right < 0) return 0;
  return binomial(down + right, down);
}

Integer lgv_count(const PathFamilySpec& spec) {
  const int k = static_cast<int>(spec.starts.size());
  if (static_cast<int>(spec.ends.size()) != k) throw std::invalid_argument("starts and ends differ in number");
  IntegerMatrix m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m(i, j) = lattice_paths(spec.starts[i], spec.ends[j]);
  return det_bareiss(m);
}

namespace {

using Path = std::vector<Point>;

void all_paths(Point at, Point to, Path& cur, std::vector<Path>& out) {
  cur.push_back(at);
  if (at == to) {
    out.push_back(cur);
  } else {
    if (at.row < to.row) all_paths({at.row + 1, at.col}, to, cur, out);
    if (at.col < to.col) all_paths({at.row, at.col + 1}, to, cur, out);
  }
  cur.pop_back();
}

bool touches(const Path& a, const Path& b) {
  for (const auto& p : a)
    if (std::find(b.begin(), b.end(), p) != b.end()) return true;
  return false;
}

}  // namespace

Integer lgv_brute(const PathFamilySpec& spec) {
  const int k = static_cast<int>(spec.starts.size());
  if (static_cast<int>(spec.ends.size()) != k) throw std::invalid_argument("starts and ends differ in number");
  std::vector<int> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  Integer total = 0;
  do {
    std::vector<std::vector<Path>> options(k);
    bool empty = false;
    for (int i = 0; i < k; ++i) {
      Path cur;
      if (spec.starts[i].row <= spec.ends[sigma[i]].row && spec.starts[i].col <= spec.ends[sigma[i]].col) {
        all_paths(spec.starts[i], spec.ends[sigma[i]], cur, options[i]);
      }
      empty |= options[i].empty();
    }
    if (empty) continue;
    long families = 0;
    std::vector<const Path*> chosen(k);
    std::function<void(int)> pick = [&](int i) {
      if (i == k) {
        ++families;
        return;
      }
      for (const auto& p : options[i]) {
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) ok = !touches(p, *chosen[j]);
        if (!ok) continue;
        chosen[i] = &p;
        pick(i + 1);
      }
    };
    pick(0);
    int inv = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) inv += sigma[a] > sigma[b];
    total += inv % 2 == 0 ? families : -families;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

PathFamilySpec w0_path_family(const PositionVector& pos) {
  validate(pos);
  const int n = pos.size();
  PathFamilySpec spec;
  // Class r enters at the start of row r; the label n+1-i ends at b_i.
  for (int r = n; r >= 1; --r) spec.starts.push_back({r, 0});
  for (int i = 0; i < n; ++i) spec.ends.push_back({n, pos.b[i]});
  return spec;
}

namespace {

template <typename Formula>
SweepResult sweep(const Permutation& pi, int max_N, int jobs, Formula formula) {
  const int n = pi.size();
  SweepResult out;
  std::mutex mu;
  std::vector<int> sizes;
  for (int N = n; N <= max_N; ++N) sizes.push_back(N);
  parallel_for(static_cast<int>(sizes.size()), jobs, [&](int idx) {
    const int N = sizes[idx];
    const auto counts = bottom_counts(TypeVector::ones(n, N));
    SweepResult local;
    for_each_position(n, N, [&](const PositionVector& pos) {
      const auto it = counts.find(word_at(pi, pos));
      const Integer brute = it == counts.end() ? Integer(0) : it->second;
      const Integer f = formula(pos);
      local.record(f == brute, describe(pos) + ": formula " + f.get_str() + ", brute " + brute.get_str());
    });
    std::lock_guard lock(mu);
    out.merge(local);
  });
  return out;
}

}  // namespace

SweepResult check_w0(int n, int max_N, int jobs) {
  return sweep(Permutation::reverse(n), max_N, jobs, [](const PositionVector& p) { return G_w0_formula(p); });
}

SweepResult check_skw0(int k, int n, int max_N, int jobs) {
  return sweep(Permutation::reverse(n).swap_values(k), max_N, jobs,
               [k](const PositionVector& p) { return G_skw0_formula(k, p); });
}

SweepResult check_Sw0(const std::vector<int>& kvec, int n, int max_N, int jobs) {
  return sweep(reflected_w0(kvec, n), max_N, jobs,
               [&kvec](const PositionVector& p) { return G_Sw0_formula(kvec, p); });
}

SweepResult check_ferrari_martin(const TypeVector& type) {
  const auto dist = markov::stationary_exact(type);
  const auto counts = bottom_counts(type);
  const Rational z(count_all_mlqs(type));
  SweepResult out;
  for (const auto& [w, p] : dist.prob) {
    const auto it = counts.find(w);
    const Rational predicted = it == counts.end() ? Rational(0) : Rational(it->second) / z;
    out.record(predicted == p, to_string(w) + ": stationary " + to_string(p) + ", MLQ " + to_string(predicted));
  }
  return out;
}

}  // namespace tasep::count
