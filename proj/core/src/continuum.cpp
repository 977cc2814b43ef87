#include "tasep/continuum.hpp"

#include "tasep/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numeric>
#include <random>

namespace tasep::continuum {

namespace {

constexpr int kMaxN = 8;

// Labels the r + 1 boxes of a row from the r labelled boxes above. Slots
// are distinct, so "weakly to the right" never ties.
void label_down(const int* up_pos, const int* up_lab, int r, const int* lo_pos, int* lo_lab) {
  std::array<int, kMaxN> where{};
  for (int k = 0; k < r; ++k) where[up_lab[k] - 1] = up_pos[k];
  std::array<bool, kMaxN + 1> claimed{};
  const int m = r + 1;
  for (int l = 1; l <= r; ++l) {
    const int p = where[l - 1];
    int j = 0;
    while (j < m && lo_pos[j] < p) ++j;
    if (j == m) j = 0;
    while (claimed[j]) j = j + 1 == m ? 0 : j + 1;
    claimed[j] = true;
    lo_lab[j] = l;
  }
  for (int j = 0; j < m; ++j) {
    if (!claimed[j]) lo_lab[j] = m;
  }
}

int perm_rank(const int* labels, int n) {
  // Lexicographic rank via the Lehmer code.
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += labels[j] < labels[i];
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

std::mutex census_mutex;
std::map<int, std::shared_ptr<const Census>> census_memo;
// held while a census is built so concurrent callers wait instead of repeating it
std::mutex census_build_mutex;

}  // namespace

int box_count(int n) { return n * (n + 1) / 2; }

Integer arrangement_count(int n) {
  std::vector<long> parts;
  for (int r = 1; r <= n; ++r) parts.push_back(r);
  return multinomial(parts);
}

void for_each_arrangement(int n, const std::function<void(const mlq::Arrangement&)>& fn, double cap) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  const Integer total = arrangement_count(n);
  if (total.get_d() > cap) throw CapExceeded(total.get_str() + " arrangements exceed the cap");
  std::vector<int> order;
  for (int r = 1; r <= n; ++r) order.insert(order.end(), r, r);
  do {
    fn(mlq::Arrangement(order));
  } while (std::next_permutation(order.begin(), order.end()));
}

void label_bottom(const int* order, int n, int* labels) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("label_bottom supports 1 <= n <= 8");
  std::array<std::array<int, kMaxN>, kMaxN> pos{};
  std::array<int, kMaxN> fill{};
  const int b = box_count(n);
  for (int s = 0; s < b; ++s) {
    const int r = order[s] - 1;
    pos[r][fill[r]++] = s;
  }
  std::array<int, kMaxN> cur{}, next{};
  cur[0] = 1;
  for (int r = 1; r < n; ++r) {
    label_down(pos[r - 1].data(), cur.data(), r, pos[r].data(), next.data());
    std::swap(cur, next);
  }
  std::copy(cur.begin(), cur.begin() + n, labels);
}

int Census::perm_index(const Permutation& p) const {
  if (p.size() != n) throw std::invalid_argument("permutation size differs from the census");
  return perm_rank(p.entries().data(), n);
}

std::shared_ptr<const Census> census(int n, int jobs, double cap) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("census supports 1 <= n <= 8");
  std::lock_guard build(census_build_mutex);
  {
    std::lock_guard lock(census_mutex);
    if (auto it = census_memo.find(n); it != census_memo.end()) return it->second;
  }
  const Integer total = arrangement_count(n);
  if (total.get_d() > cap) {
    throw CapExceeded("census of " + total.get_str() + " arrangements exceeds the cap");
  }
  auto out = std::make_shared<Census>();
  out->n = n;
  out->boxes = box_count(n);
  out->total = total;
  out->perms = all_permutations(n);
  const int b = out->boxes;
  mlq::for_each_subset(b, n, [&](const std::vector<int>& s) { out->bottom_sets.push_back(s); });
  // colex rank of a slot set = sum C(s_i, i + 1); map to the lexicographic
  // position in bottom_sets.
  std::vector<std::vector<long>> choose(b + 1, std::vector<long>(n + 2, 0));
  for (int x = 0; x <= b; ++x) {
    choose[x][0] = 1;
    for (int k = 1; k <= std::min(x, n + 1); ++k) choose[x][k] = choose[x - 1][k - 1] + choose[x - 1][k];
  }
  const std::size_t sets = out->bottom_sets.size();
  std::vector<int> colex_to_lex(sets);
  for (std::size_t i = 0; i < sets; ++i) {
    long rank = 0;
    for (int k = 0; k < n; ++k) rank += choose[out->bottom_sets[i][k]][k + 1];
    colex_to_lex[rank] = static_cast<int>(i);
  }

  // Tasks: choices of the first `split` rows.
  const int split = std::min(2, n - 1);
  std::vector<std::vector<std::vector<int>>> tasks;
  {
    std::vector<std::vector<int>> rows;
    std::function<void(int, std::uint64_t)> gen = [&](int r, std::uint64_t used) {
      if (r == split) {
        tasks.push_back(rows);
        return;
      }
      std::vector<int> freeslots;
      for (int s = 0; s < b; ++s)
        if (!(used >> s & 1u)) freeslots.push_back(s);
      mlq::for_each_subset(static_cast<int>(freeslots.size()), r + 1, [&](const std::vector<int>& idx) {
        std::vector<int> row;
        std::uint64_t u = used;
        for (int i : idx) {
          row.push_back(freeslots[i]);
          u |= std::uint64_t{1} << freeslots[i];
        }
        rows.push_back(row);
        gen(r + 1, u);
        rows.pop_back();
      });
    };
    gen(0, 0);
  }

  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  const std::size_t cells = out->perms.size() * sets;
  std::vector<std::vector<std::int64_t>> partial(workers);
  parallel_for(workers, workers, [&](int w) {
    auto& acc = partial[w];
    acc.assign(cells, 0);
    std::array<std::array<int, kMaxN>, kMaxN> pos{};
    std::array<std::array<int, kMaxN>, kMaxN> lab{};
    lab[0][0] = 1;
    // Place row r (0-based, r + 1 boxes) into the free slots.
    std::function<void(int, std::uint64_t)> place = [&](int r, std::uint64_t used) {
      if (r == n - 1) {
        int k = 0;
        long rank = 0;
        for (int s = 0; s < b; ++s) {
          if (used >> s & 1u) continue;
          pos[r][k] = s;
          rank += choose[s][k + 1];
          ++k;
        }
        if (r > 0) label_down(pos[r - 1].data(), lab[r - 1].data(), r, pos[r].data(), lab[r].data());
        ++acc[static_cast<std::size_t>(perm_rank(lab[r].data(), n)) * sets + colex_to_lex[rank]];
        return;
      }
      std::array<int, 64> freeslots{};
      int nf = 0;
      for (int s = 0; s < b; ++s)
        if (!(used >> s & 1u)) freeslots[nf++] = s;
      const int k = r + 1;
      std::array<int, kMaxN> c{};
      std::iota(c.begin(), c.begin() + k, 0);
      while (true) {
        std::uint64_t u = used;
        for (int i = 0; i < k; ++i) {
          pos[r][i] = freeslots[c[i]];
          u |= std::uint64_t{1} << freeslots[c[i]];
        }
        if (r > 0) label_down(pos[r - 1].data(), lab[r - 1].data(), r, pos[r].data(), lab[r].data());
        place(r + 1, u);
        int i = k - 1;
        while (i >= 0 && c[i] == nf - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      }
    };
    for (std::size_t t = w; t < tasks.size(); t += workers) {
      std::uint64_t used = 0;
      for (int r = 0; r < split; ++r) {
        for (int i = 0; i <= r; ++i) {
          pos[r][i] = tasks[t][r][i];
          used |= std::uint64_t{1} << tasks[t][r][i];
        }
        if (r > 0) label_down(pos[r - 1].data(), lab[r - 1].data(), r, pos[r].data(), lab[r].data());
      }
      place(split, used);
    }
  });

  out->counts.assign(cells, 0);
  for (const auto& acc : partial)
    for (std::size_t i = 0; i < cells; ++i) out->counts[i] += acc[i];
  out->perm_counts.assign(out->perms.size(), 0);
  for (std::size_t p = 0; p < out->perms.size(); ++p) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < sets; ++j) s += out->counts[p * sets + j];
    out->perm_counts[p] = Integer(static_cast<long>(s));
  }
  Integer check = 0;
  for (const auto& c : out->perm_counts) check += c;
  if (check != out->total) throw std::logic_error("census total does not match the arrangement count");

  std::lock_guard lock(census_mutex);
  return census_memo.emplace(n, std::move(out)).first->second;
}

Rational PermDist::total() const {
  Rational s = 0;
  for (const auto& [pi, x] : p) s += x;
  return s;
}

PermDist p_exact(int n, int jobs) {
  const auto c = census(n, jobs);
  PermDist d{n, {}};
  for (std::size_t i = 0; i < c->perms.size(); ++i) d.p.emplace(c->perms[i], Rational(c->perm_counts[i]) / Rational(c->total));
  return d;
}

Rational p_w0_formula(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  Integer den = 1;
  for (int k = 1; k < n; ++k) den *= binomial(2 * k + 1, k + 1);
  return Rational(1) / Rational(den);
}

poly::MultiPoly g_poly_gaps(const Permutation& pi, int jobs) {
  const int n = pi.size();
  const auto c = census(n, jobs);
  const int p = c->perm_index(pi);
  // n! prod_{r<n} r! times the ordered-placement volume of the upper boxes.
  Integer scale = factorial(n);
  for (int r = 1; r < n; ++r) scale *= factorial(r);
  poly::MultiPoly g(n + 1);
  for (std::size_t s = 0; s < c->bottom_sets.size(); ++s) {
    const std::int64_t k = c->count(p, static_cast<int>(s));
    if (k == 0) continue;
    const auto& set = c->bottom_sets[s];
    poly::Exponents e(static_cast<std::size_t>(n) + 1);
    e[0] = set[0];
    for (int i = 1; i < n; ++i) e[i] = set[i] - set[i - 1] - 1;
    e[n] = c->boxes - 1 - set[n - 1];
    Integer den = 1;
    for (int x : e) den *= factorial(x);
    g.add_term(e, Rational(scale * Integer(static_cast<long>(k))) / Rational(den));
  }
  return g;
}

std::vector<poly::MultiPoly> gaps_in_q(int n) {
  using poly::MultiPoly;
  std::vector<MultiPoly> images;
  images.push_back(MultiPoly::variable(n, 1));
  for (int i = 1; i < n; ++i) images.push_back(MultiPoly::variable(n, i + 1) - MultiPoly::variable(n, i));
  images.push_back(MultiPoly::constant(n, 1) - MultiPoly::variable(n, n));
  return images;
}

poly::MultiPoly g_poly(const Permutation& pi, int jobs) {
  return poly::substitute(g_poly_gaps(pi, jobs), gaps_in_q(pi.size()));
}

OperatorCheck check_operator_identity(const Permutation& target, const poly::OperatorExpr& op,
                                      const Permutation& base) {
  OperatorCheck out;
  out.expected = g_poly(target);
  out.actual = poly::apply_operator(op, g_poly(base));
  out.equal = out.expected == out.actual;
  return out;
}

poly::OperatorExpr one_away_operator(int k, int n) {
  if (k < 1 || k >= n) throw std::invalid_argument("need 1 <= k < n");
  poly::OperatorExpr op;
  poly::Exponents e(static_cast<std::size_t>(n), 0);
  for (int v = n - k; v < n; ++v) e[v] = 1;
  op.terms.push_back({Rational(1) / Rational(factorial(k)), e});
  op.terms.push_back({Rational(-1), {}});
  return op;
}

bool is_harmonic(const Permutation& pi, int jobs) {
  const auto lap = poly::gap_laplacian(g_poly_gaps(pi, jobs));
  if (lap.is_zero()) return true;
  return poly::substitute(lap, gaps_in_q(pi.size())).is_zero();
}

std::vector<Permutation> rotation_class_representatives(int n) {
  std::vector<Permutation> reps;
  for (const auto& p : all_permutations(n)) {
    bool smallest = true;
    for (int r = 1; r < n && smallest; ++r) smallest = !(p.rotated(r) < p);
    if (smallest) reps.push_back(p);
  }
  return reps;
}

namespace {

CorrTable empty_table(int n) {
  return CorrTable{n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0)))};
}

}  // namespace

CorrTable correlations_exact(int n, int jobs) {
  if (n < 2) throw std::invalid_argument("correlations need n >= 2");
  const auto c = census(n, jobs);
  CorrTable t = empty_table(n);
  for (std::size_t p = 0; p < c->perms.size(); ++p) {
    const auto& pi = c->perms[p];
    for (int a = 0; a < n; ++a) t.c[pi[a] - 1][pi[(a + 1) % n] - 1] += Rational(c->perm_counts[p]);
  }
  for (auto& row : t.c)
    for (auto& x : row) x /= Rational(c->total);
  return t;
}

CorrTable correlations_at_offset(int n, int a, int jobs) {
  if (a < 1 || a > n) throw std::invalid_argument("offset must lie in 1..n");
  const auto c = census(n, jobs);
  CorrTable t = empty_table(n);
  for (std::size_t p = 0; p < c->perms.size(); ++p) {
    const auto& pi = c->perms[p];
    t.c[pi[a - 1] - 1][pi[a % n] - 1] += Rational(c->perm_counts[p]);
  }
  for (auto& row : t.c)
    for (auto& x : row) x *= Rational(n) / Rational(c->total);
  return t;
}

CorrEstimate correlations_mc(int n, long samples, std::uint64_t seed, int jobs) {
  if (n < 2 || n > kMaxN) throw std::invalid_argument("correlations_mc supports 2 <= n <= 8");
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  constexpr int kStreams = 64;
  std::vector<std::vector<std::int64_t>> hits(kStreams, std::vector<std::int64_t>(n * n, 0));
  parallel_for(kStreams, jobs, [&](int s) {
    const long begin = samples * s / kStreams;
    const long end = samples * (s + 1) / kStreams;
    mlq::Rng rng(split_seed(seed, static_cast<std::uint64_t>(s)));
    std::vector<int> order;
    for (int r = 1; r <= n; ++r) order.insert(order.end(), r, r);
    std::array<int, kMaxN> labels{};
    auto& h = hits[s];
    for (long t = begin; t < end; ++t) {
      std::shuffle(order.begin(), order.end(), rng);
      label_bottom(order.data(), n, labels.data());
      for (int a = 0; a < n; ++a) ++h[(labels[a] - 1) * n + labels[(a + 1) % n] - 1];
    }
  });
  CorrEstimate out;
  out.n = n;
  out.samples = samples;
  out.estimate.assign(n, std::vector<double>(n, 0.0));
  out.stderr_.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::int64_t k = 0;
      for (const auto& h : hits) k += h[i * n + j];
      const double p = static_cast<double>(k) / static_cast<double>(samples);
      out.estimate[i][j] = p;
      // One Bernoulli indicator per sample and entry.
      out.stderr_[i][j] = std::sqrt(p * (1 - p) / static_cast<double>(samples));
    }
  }
  return out;
}

Rational conj_correlation(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("labels must lie in 1..n");
  if (i == j) throw std::invalid_argument("correlation needs i != j");
  auto term = [n](long num, long top) -> Rational { return Rational(num) / Rational(binomial(top, 2)); };
  if (i + 1 < j) return term(n, n + j);
  if (i + 1 == j) return term(n, n + j) + term(static_cast<long>(n) * i, n + i);
  if (i < n) return term(n, n + j) - term(n, n + i);
  return term(static_cast<long>(n) * (j + 1), n + j) - term(static_cast<long>(n) * (j - 1), n + j - 1) -
         term(n, 2 * n);
}

Rational prop_c21(int n) { return Rational(4) / Rational((n + 1) * (n + 2)); }
Rational prop_c12(int n) { return make_rational(4, n + 2); }
Rational prop_cn_nminus1(int n) { return Rational(3) / Rational((2 * n - 1) * (2 * n - 3)); }

Rational c21_integral(int n) {
  using poly::MultiPoly;
  const MultiPoly y = MultiPoly::variable(1, 1);
  const MultiPoly one_minus = MultiPoly::constant(1, 1) - y;
  const MultiPoly f = Rational(2 * n) * (one_minus * one_minus) * poly::pow(y, n - 1);
  return poly::integrate_interval(f, 0, 1);
}

Integer syt_columns_formula(int n, int i) {
  const Integer num = factorial(2 * n - 4 + i) * (n - i) * (n - i - 1);
  const Integer den = factorial(i) * factorial(n) * factorial(n - 1);
  if (num % den != 0) throw std::logic_error("SYT formula is not an integer");
  return num / den;
}

Rational c_n_nminus1_syt(int n) {
  if (n < 3) throw std::invalid_argument("c_n_nminus1_syt needs n >= 3");
  Integer sum = 0;
  for (int i = 0; i <= n - 2; ++i) sum += syt_columns_formula(n, i);
  return Rational(Integer(3 * n - 3) * sum) / Rational(multinomial({n, n - 1, n - 2}));
}

}  // namespace tasep::continuum
