#include "tasep/tableaux.hpp"

#include "tasep/linalg.hpp"
#include "tasep/markov.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace tasep::tab {

Partition::Partition(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("negative part");
    if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("parts must weakly decrease");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  parts_ = std::move(parts);
}

Partition Partition::from_conjugate(const std::vector<int>& columns) {
  return Partition(columns).conjugate();
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 1; i <= other.length(); ++i)
    if (other.part(i) > part(i)) return false;
  return true;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (int i = 0; i < p.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.parts()[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int bound) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int p = 1; p <= bound; ++p) {
      cur.push_back(p);
      rec(p);
      cur.pop_back();
    }
  };
  rec(cols);
  std::sort(out.begin(), out.end());
  return out;
}

int content(int i, int j) { return j - i; }

int hook_length(const Partition& lam, int i, int j) {
  const Partition conj = lam.conjugate();
  return lam.part(i) + conj.part(j) - i - j + 1;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(parts);
}

bool Tableau::is_semistandard() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] < 1) return false;
      if (j > 0 && rows[i][j] < rows[i][j - 1]) return false;
      if (i > 0 && rows[i][j] <= rows[i - 1][j]) return false;
    }
  }
  return true;
}

bool Tableau::is_standard() const {
  if (!is_semistandard()) return false;
  std::vector<int> seen;
  for (const auto& r : rows) seen.insert(seen.end(), r.begin(), r.end());
  std::sort(seen.begin(), seen.end());
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (seen[k] != static_cast<int>(k) + 1) return false;
  return true;
}

std::string to_string(const Tableau& t) {
  bool small = true;
  for (const auto& r : t.rows)
    for (int v : r) small = small && v >= 0 && v <= 9;
  std::string s;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i) s += '/';
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      if (!small && j) s += ',';
      s += std::to_string(t.rows[i][j]);
    }
  }
  return s;
}

namespace {

Integer exact_integer(const Rational& r, const char* what) {
  if (r.get_den() != 1) throw std::logic_error(std::string(what) + " is not an integer");
  return r.get_num();
}

Integer jacobi_trudi(const Partition& lam, int t, bool shifted) {
  if (t < 0) throw std::invalid_argument("t must be non-negative");
  const std::vector<int> cols = lam.conjugate().parts();
  const int k = static_cast<int>(cols.size());
  if (k == 0) return 1;
  IntegerMatrix m(k, k);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) m(i - 1, j - 1) = binomial(shifted ? t + j - 1 : t, cols[i - 1] - i + j);
  return det_bareiss(m);
}

}  // namespace

Integer ssyt_count_hook_content(const Partition& lam, int t) {
  if (t < 0) throw std::invalid_argument("t must be non-negative");
  const Partition conj = lam.conjugate();
  Rational r = 1;
  for (int i = 1; i <= lam.length(); ++i)
    for (int j = 1; j <= lam.part(i); ++j)
      r *= make_rational(t + content(i, j), lam.part(i) + conj.part(j) - i - j + 1);
  r.canonicalize();
  return exact_integer(r, "hook-content product");
}

Integer ssyt_count_jacobi_trudi(const Partition& lam, int t) { return jacobi_trudi(lam, t, false); }

Integer ssyt_count_jacobi_trudi_shifted(const Partition& lam, int t) { return jacobi_trudi(lam, t, true); }

Integer ssyt_count(const Partition& lam, int t) {
  const Integer a = ssyt_count_hook_content(lam, t);
  const Integer b = ssyt_count_jacobi_trudi(lam, t);
  const Integer c = ssyt_count_jacobi_trudi_shifted(lam, t);
  if (a != b || b != c)
    throw std::logic_error("SSYT counts disagree for " + to_string(lam) + ", t=" + std::to_string(t));
  return a;
}

std::vector<Tableau> ssyt_brute(const Partition& lam, int t, double cap) {
  std::vector<Tableau> out;
  Tableau cur;
  for (int p : lam.parts()) cur.rows.emplace_back(p, 0);
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < lam.length(); ++i)
    for (int j = 0; j < lam.part(i + 1); ++j) cells.emplace_back(i, j);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      if (static_cast<double>(out.size()) >= cap) throw CapExceeded("ssyt_brute: too many tableaux");
      out.push_back(cur);
      return;
    }
    const auto [i, j] = cells[k];
    int lo = 1;
    if (j > 0) lo = std::max(lo, cur.rows[i][j - 1]);
    if (i > 0) lo = std::max(lo, cur.rows[i - 1][j] + 1);
    for (int v = lo; v <= t; ++v) {
      cur.rows[i][j] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

Integer ssyt_count_brute(const Partition& lam, int t, double cap) {
  return static_cast<unsigned long>(ssyt_brute(lam, t, cap).size());
}

Integer syt_count_hook(const Partition& lam) {
  const Partition conj = lam.conjugate();
  Integer hooks = 1;
  for (int i = 1; i <= lam.length(); ++i)
    for (int j = 1; j <= lam.part(i); ++j) hooks *= lam.part(i) + conj.part(j) - i - j + 1;
  const Integer total = factorial(lam.size());
  if (total % hooks != 0) throw std::logic_error("hook length quotient is not an integer");
  return total / hooks;
}

Integer syt_count_brute(const Partition& lam) {
  std::map<Partition, Integer> memo;
  std::function<Integer(const Partition&)> rec = [&](const Partition& p) -> Integer {
    if (p.size() == 0) return 1;
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    Integer total = 0;
    // the largest entry sits in a corner
    for (int i = 1; i <= p.length(); ++i) {
      if (p.part(i) > p.part(i + 1)) {
        std::vector<int> parts = p.parts();
        --parts[i - 1];
        total += rec(Partition(parts));
      }
    }
    memo.emplace(p, total);
    return total;
  };
  return rec(lam);
}

Rational f_pi_initial(const std::vector<int>& xs, int N) {
  const int k = static_cast<int>(xs.size());
  for (int i = 0; i < k; ++i) {
    if (xs[i] < 1 || xs[i] > N) throw std::invalid_argument("prefix entries must lie in [1, N]");
    if (i > 0 && xs[i] >= xs[i - 1]) throw std::invalid_argument("prefix must be strictly decreasing");
  }
  IntegerMatrix m(k, k);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) m(i - 1, j - 1) = binomial(xs[k - i], j - 1);
  Integer den = 1;
  for (int i = 1; i <= k; ++i) den *= binomial(N, i);
  return make_rational(k == 0 ? Integer(1) : det_bareiss(m), den);
}

Rational prefix_probability(const std::vector<int>& xs, int N) {
  static std::mutex mutex;
  static std::map<int, markov::StationaryDist> memo;
  const markov::StationaryDist* dist = nullptr;
  {
    std::lock_guard lock(mutex);
    auto it = memo.find(N);
    if (it == memo.end()) it = memo.emplace(N, markov::stationary_by_rotation(TypeVector::ones(N, N))).first;
    dist = &it->second;
  }
  Rational total = 0;
  for (const auto& [w, p] : dist->prob) {
    bool match = true;
    for (std::size_t s = 0; s < xs.size() && match; ++s) match = w[static_cast<int>(s)] == xs[s];
    if (match) total += p;
  }
  return total;
}

Partition fw_shape(const TypeVector& m) {
  const int n = m.classes();
  std::vector<int> cols;
  for (int i = 1; i <= n - 1; ++i) cols.push_back(m.cumulative(n - i) - (n - i - 1));
  return Partition::from_conjugate(cols);
}

namespace {

void require_full(const TypeVector& m) {
  if (m.particles() != m.ring_size()) throw std::invalid_argument("type must fill the ring (sum m_i = N)");
  for (int c : m.counts())
    if (c < 1) throw std::invalid_argument("every class must be present");
}

}  // namespace

FwCount F_w_count(const TypeVector& m) {
  require_full(m);
  const int n = m.classes();
  const int N = m.ring_size();
  FwCount out;
  out.shape = fw_shape(m);
  out.t = N - n + 1;

  // f_pi summed over x_{i} in (M_{i-1}, M_i], i = 2..n
  Rational sum = 0;
  std::vector<int> xs(static_cast<std::size_t>(std::max(0, n - 1)));
  std::function<void(int)> rec = [&](int idx) {
    if (idx == n - 1) {
      sum += f_pi_initial(xs, N);
      return;
    }
    const int block = n - idx;  // xs[idx] = x_block
    for (int x = m.cumulative(block - 1) + 1; x <= m.cumulative(block); ++x) {
      xs[idx] = x;
      rec(idx + 1);
    }
  };
  rec(0);
  Integer boxes = 1;
  for (int i = 1; i <= n; ++i) boxes *= binomial(N, m.cumulative(i));
  Rational a = sum * Rational(boxes);
  a.canonicalize();
  out.route_sum = exact_integer(a, "summed prefix count");

  out.route_tableau = ssyt_count_hook_content(out.shape, out.t);

  Rational pre = 1;
  IntegerMatrix d(n - 1, n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    pre *= make_rational(m.cumulative(i) + 1, N + 1 - i);
    for (int j = 1; j <= n - 1; ++j) d(i - 1, j - 1) = binomial(N + 1 - j, m.cumulative(i) + 2 - j);
  }
  Rational c = pre * Rational(n > 1 ? det_bareiss(d) : Integer(1));
  c.canonicalize();
  out.route_product = exact_integer(c, "product count");
  return out;
}

Integer F_w_brute(const TypeVector& m, double cap) {
  require_full(m);
  const int n = m.classes();
  const int N = m.ring_size();
  if (n == 1) return 1;
  // the full last row is forced; its vacancies-as-class-n view is enough
  std::vector<int> upper(m.counts().begin(), m.counts().end() - 1);
  const TypeVector reduced(upper, N);
  Integer total = 0;
  std::vector<Label> site(static_cast<std::size_t>(N));
  mlq::for_each_labeled_mlq(
      reduced,
      [&](const std::vector<std::vector<int>>& rows, const std::vector<std::vector<Label>>& labels) {
        std::fill(site.begin(), site.end(), n);
        for (std::size_t j = 0; j < rows.back().size(); ++j) site[rows.back()[j]] = labels.back()[j];
        for (int s = 0; s < n - 1; ++s)
          if (site[s] != n - s) return;
        ++total;
      },
      std::nullopt, cap);
  return total;
}

Tableau mlq_to_ssyt(const mlq::LabeledMLQ& l) {
  const int N = l.base.ring_size();
  int rows = l.base.rows();
  if (rows > 0 && static_cast<int>(l.base.row(rows - 1).size()) == N) --rows;
  const int n = rows + 1;
  if (rows == 0) return Tableau{};

  std::vector<Label> site(static_cast<std::size_t>(N), n);
  for (std::size_t j = 0; j < l.base.row(rows - 1).size(); ++j) {
    const Label lab = l.labels[rows - 1][j];
    site[l.base.row(rows - 1)[j]] = lab == kVacant ? n : lab;
  }
  if (N < n - 1) throw std::invalid_argument("ring too short for the descending prefix");
  for (int s = 0; s < n - 1; ++s)
    if (site[s] != n - s) throw std::invalid_argument("bottom row does not start with n (n-1) ... 2");
  for (const auto& path : l.paths)
    if (path.wraps) throw std::invalid_argument("a bully path wraps around the ring");

  std::vector<std::vector<int>> columns(static_cast<std::size_t>(n - 1));
  for (int rho = 1; rho <= n - 1; ++rho) {
    const std::vector<int>& pos = l.base.row(rho - 1);
    std::vector<int> rest;
    for (int p = n - rho; p <= n - 2; ++p)
      if (!std::binary_search(pos.begin(), pos.end(), p))
        throw std::invalid_argument("forced triangle box missing");
    for (int p : pos)
      if (p < n - rho || p > n - 2) rest.push_back(N - p);
    std::sort(rest.begin(), rest.end());
    columns[n - rho - 1] = std::move(rest);
  }
  Tableau t;
  for (std::size_t i = 0; i < columns.size(); ++i)
    for (std::size_t r = 0; r < columns[i].size(); ++r) {
      if (t.rows.size() <= r) t.rows.resize(r + 1);
      if (t.rows[r].size() != i) throw std::logic_error("tableau columns are not weakly decreasing");
      t.rows[r].push_back(columns[i][r]);
    }
  if (!t.is_semistandard()) throw std::logic_error("right-distances do not form an SSYT");
  return t;
}

mlq::DiscreteMLQ ssyt_to_mlq(const Tableau& t, int N, int n) {
  if (!t.is_semistandard()) throw std::invalid_argument("not a semistandard tableau");
  const Partition conj = t.shape().conjugate();
  if (conj.length() > n - 1) throw std::invalid_argument("tableau has more than n - 1 columns");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n - 1));
  std::vector<int> m;
  int prev = 0;
  for (int rho = 1; rho <= n - 1; ++rho) {
    const int col = n - rho;
    std::vector<int>& row = rows[rho - 1];
    for (int p = n - rho; p <= n - 2; ++p) row.push_back(p);
    for (int r = 0; r < conj.part(col); ++r) {
      const int z = t.rows[r][col - 1];
      if (z > N - n + 1) throw std::invalid_argument("entry exceeds N - n + 1");
      row.push_back(N - z);
    }
    std::sort(row.begin(), row.end());
    m.push_back(static_cast<int>(row.size()) - prev);
    prev = static_cast<int>(row.size());
  }
  return mlq::DiscreteMLQ(TypeVector(m, N), rows);
}

GtCount gt_pattern_count(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > 6) throw CapExceeded("gt_pattern_count: brute force limited to n <= 6");
  // element (i, j), 1 <= j <= i <= n, with x_{i+1,j} < x_{i,j} < x_{i+1,j+1}
  std::vector<std::pair<int, int>> elems;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) elems.emplace_back(i, j);
  auto index = [&](int i, int j) { return (i - 1) * i / 2 + (j - 1); };
  const int B = static_cast<int>(elems.size());
  std::vector<std::uint32_t> below(static_cast<std::size_t>(B), 0);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= i; ++j) {
      below[index(i, j)] |= 1u << index(i + 1, j);
      below[index(i + 1, j + 1)] |= 1u << index(i, j);
    }
  std::vector<std::uint64_t> ways(std::size_t{1} << B, 0);
  ways[0] = 1;
  for (std::uint32_t mask = 0; mask < (1u << B); ++mask) {
    if (!ways[mask]) continue;
    for (int e = 0; e < B; ++e)
      if (!(mask >> e & 1) && (below[e] & mask) == below[e]) ways[mask | 1u << e] += ways[mask];
  }
  GtCount out;
  out.brute = static_cast<unsigned long>(ways.back());
  Integer num = factorial(static_cast<long>(n) * (n + 1) / 2);
  Integer den = 1;
  for (int i = 1; i <= n - 1; ++i) {
    num *= factorial(i);
    den *= factorial(2 * i + 1);
  }
  out.formula = num / den;
  if (num % den != 0) out.formula = -1;
  return out;
}

RowAdditionCheck hook_content_row_addition_check(const Partition& lam, int N, int n) {
  std::vector<int> cols = lam.conjugate().parts();
  if (static_cast<int>(cols.size()) > n - 1) throw std::invalid_argument("lambda has more than n - 1 columns");
  cols.resize(static_cast<std::size_t>(n - 1), 0);
  auto product = [](const Partition& p, int t) -> Rational {
    const Partition conj = p.conjugate();
    Rational r = 1;
    for (int i = 1; i <= p.length(); ++i)
      for (int j = 1; j <= p.part(i); ++j)
        r *= make_rational(t + content(i, j), p.part(i) + conj.part(j) - i - j + 1);
    r.canonicalize();
    return r;
  };
  RowAdditionCheck out;
  out.lhs = product(lam, N - n + 1);
  std::vector<int> mu_cols;
  Rational pre = 1;
  for (int i = 1; i <= n - 1; ++i) {
    pre *= make_rational(cols[i - 1] + n - i, N + 1 - i);
    mu_cols.push_back(cols[i - 1] + 1);
  }
  pre.canonicalize();
  out.rhs = pre * product(Partition::from_conjugate(mu_cols), N - n + 2);
  out.rhs.canonicalize();
  return out;
}

RowAdditionCheck hook_content_row_addition_check(const TypeVector& m) {
  require_full(m);
  return hook_content_row_addition_check(fw_shape(m), m.ring_size(), m.classes());
}

}  // namespace tasep::tab
