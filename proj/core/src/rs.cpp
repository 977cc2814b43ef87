#include "tasep/rs.hpp"

#include "tasep/mlq.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace tasep::rs {

bool is_valid(const std::vector<int>& partner) {
  const int m = static_cast<int>(partner.size());
  if (m % 2 != 0) return false;
  for (int i = 1; i <= m; ++i) {
    const int j = partner[i - 1];
    if (j < 1 || j > m || j == i || partner[j - 1] != i) return false;
  }
  // a < b < L(a) < L(b) is a crossing
  for (int a = 1; a <= m; ++a) {
    const int la = partner[a - 1];
    if (la < a) continue;
    for (int b = a + 1; b < la; ++b)
      if (partner[b - 1] > la) return false;
  }
  return true;
}

LinkingPattern::LinkingPattern(std::vector<int> partner) : partner_(std::move(partner)) {
  if (!is_valid(partner_)) throw std::invalid_argument("not a linking pattern");
}

LinkingPattern LinkingPattern::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> partner(static_cast<std::size_t>(2 * n), 0);
  for (const auto& [a, b] : pairs) {
    if (a < 1 || b < 1 || a > 2 * n || b > 2 * n || partner[a - 1] || partner[b - 1])
      throw std::invalid_argument("bad arc list");
    partner[a - 1] = b;
    partner[b - 1] = a;
  }
  return LinkingPattern(std::move(partner));
}

std::vector<std::pair<int, int>> LinkingPattern::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= points(); ++i)
    if (i < (*this)(i)) out.emplace_back(i, (*this)(i));
  return out;
}

int LinkingPattern::nesting() const {
  const auto arcs = pairs();
  int count = 0;
  for (const auto& [a, b] : arcs)
    for (const auto& [c, d] : arcs) count += a < c && d < b;
  return count;
}

std::string to_string(const LinkingPattern& l) {
  std::string s;
  for (const auto& [a, b] : l.pairs()) s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return s;
}

LinkingPattern parse_pattern(std::string_view text) {
  std::vector<std::pair<int, int>> arcs;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto number = [&]() -> int {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (start == pos) throw std::invalid_argument("expected a number in pattern");
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) throw std::invalid_argument(std::string("expected '") + c + "' in pattern");
    ++pos;
  };
  skip();
  while (pos < text.size()) {
    expect('(');
    const int a = number();
    expect(',');
    const int b = number();
    expect(')');
    arcs.emplace_back(a, b);
    skip();
  }
  return LinkingPattern::from_pairs(static_cast<int>(arcs.size()), arcs);
}

std::vector<LinkingPattern> enumerate_patterns(int n) {
  if (n < 0 || n > 8) throw CapExceeded("enumerate_patterns: n must be in 0..8");
  std::vector<LinkingPattern> out;
  std::vector<int> partner(static_cast<std::size_t>(2 * n), 0);
  std::function<void()> rec = [&] {
    int first = 0;
    while (first < 2 * n && partner[first]) ++first;
    if (first == 2 * n) {
      out.emplace_back(partner);
      return;
    }
    // the partner of `first` closes an even block of free points
    for (int j = first + 1; j < 2 * n; ++j) {
      if (partner[j]) break;
      if ((j - first) % 2 == 0) continue;
      partner[first] = j + 1;
      partner[j] = first + 1;
      rec();
      partner[first] = partner[j] = 0;
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

LinkingPattern apply_e(const LinkingPattern& l, int i) {
  const int m = l.points();
  if (i < 1 || i > m) throw std::invalid_argument("generator index out of range");
  const int j = i % m + 1;
  if (l(i) == j) return l;
  std::vector<int> p = l.partner();
  const int a = l(i);
  const int b = l(j);
  p[i - 1] = j;
  p[j - 1] = i;
  p[a - 1] = b;
  p[b - 1] = a;
  return LinkingPattern(std::move(p));
}

LinkingPattern apply_word(const LinkingPattern& l, const std::vector<int>& order) {
  LinkingPattern cur = l;
  for (int i : order) cur = apply_e(cur, i);
  return cur;
}

std::vector<int> firing_order(int n, const std::vector<int>& subset) {
  const int m = 2 * n;
  std::vector<char> in(static_cast<std::size_t>(m + 1), 0);
  for (int i : subset) {
    if (i < 1 || i > m) throw std::invalid_argument("subset index out of range");
    if (in[i]) throw std::invalid_argument("subset has repeated indices");
    in[i] = 1;
  }
  const int size = static_cast<int>(subset.size());
  std::vector<int> order;
  if (size == m) {
    for (int i = 1; i <= m; ++i) order.push_back(i);
    return order;
  }
  std::vector<char> fired(static_cast<std::size_t>(m + 1), 0);
  while (static_cast<int>(order.size()) < size) {
    for (int i = 1; i <= m; ++i) {
      if (!in[i] || fired[i]) continue;
      const int pred = i == 1 ? m : i - 1;
      if (in[pred] && !fired[pred]) continue;
      fired[i] = 1;
      order.push_back(i);
      break;
    }
  }
  return order;
}

LinkingPattern apply_eS(const LinkingPattern& l, const std::vector<int>& subset) {
  return apply_word(l, firing_order(l.n(), subset));
}

std::vector<std::vector<int>> admissible_orders(int n, const std::vector<int>& subset) {
  const int m = 2 * n;
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  const bool full = static_cast<int>(s.size()) == m;
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> when(static_cast<std::size_t>(m + 1), -1);
    for (std::size_t k = 0; k < s.size(); ++k) when[s[k]] = static_cast<int>(k);
    bool ok = true;
    for (int i : s) {
      if (full && i == 1) continue;
      const int pred = i == 1 ? m : i - 1;
      if (when[pred] >= 0 && when[pred] > when[i]) ok = false;
    }
    if (ok) out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

RsChain rs_transition_matrix(int n, int k) {
  const int m = 2 * n;
  if (k < 1 || k > m) throw std::invalid_argument("k must lie in 1..2n");
  RsChain chain;
  chain.n = n;
  chain.k = k;
  chain.states = enumerate_patterns(n);
  std::map<LinkingPattern, int> index;
  for (std::size_t s = 0; s < chain.states.size(); ++s) index.emplace(chain.states[s], static_cast<int>(s));
  const int size = static_cast<int>(chain.states.size());
  chain.matrix = RationalMatrix(size, size);
  const Rational weight = make_rational(1, binomial(m, k));
  std::vector<std::vector<int>> orders;
  mlq::for_each_subset(m, k, [&](const std::vector<int>& sub) {
    std::vector<int> s;
    for (int i : sub) s.push_back(i + 1);
    orders.push_back(firing_order(n, s));
  });
  for (int from = 0; from < size; ++from)
    for (const auto& order : orders) {
      const int to = index.at(apply_word(chain.states[from], order));
      chain.matrix(from, to) += weight;
    }
  return chain;
}

RsStationary rs_stationary(int n, int k) {
  RsChain chain = rs_transition_matrix(n, k);
  RsStationary out;
  out.n = n;
  out.k = k;
  out.states = std::move(chain.states);
  try {
    out.prob = stationary_vector(chain.matrix);
  } catch (const ReducibleChain&) {
    out.unique = false;
  }
  return out;
}

RelationReport check_relations(int n, bool with_orders) {
  const int m = 2 * n;
  RelationReport r;
  auto wrap = [m](int i) { return ((i - 1) % m + m) % m + 1; };
  for (const auto& l : enumerate_patterns(n)) {
    const std::string ls = to_string(l);
    for (int i = 1; i <= m; ++i) {
      const LinkingPattern ei = apply_e(l, i);
      r.closure.record(is_valid(ei.partner()), ls + " e" + std::to_string(i));
      r.idempotent.record(apply_e(ei, i) == ei, ls + " e" + std::to_string(i) + "^2");
      for (int d : {1, -1}) {
        const int j = wrap(i + d);
        r.braid_like.record(apply_word(l, {i, j, i}) == ei,
                            ls + " e" + std::to_string(i) + "e" + std::to_string(j) + "e" + std::to_string(i));
      }
      for (int j = 1; j <= m; ++j) {
        if (j == i || j == wrap(i + 1) || j == wrap(i - 1)) continue;
        r.commuting.record(apply_word(l, {i, j}) == apply_word(l, {j, i}),
                           ls + " e" + std::to_string(i) + "e" + std::to_string(j));
      }
    }
    if (!with_orders) continue;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1) s.push_back(i + 1);
      const LinkingPattern expected = apply_eS(l, s);
      for (const auto& order : admissible_orders(n, s)) {
        std::string w = ls + " order";
        for (int i : order) w += " " + std::to_string(i);
        r.order_free.record(apply_word(l, order) == expected, w);
      }
    }
  }
  return r;
}

ExtremesReport extremes(const RsStationary& s) {
  if (!s.unique || s.prob.empty()) throw std::invalid_argument("no stationary vector to report");
  ExtremesReport e;
  e.max_prob = *std::max_element(s.prob.begin(), s.prob.end());
  e.min_prob = *std::min_element(s.prob.begin(), s.prob.end());
  for (std::size_t i = 0; i < s.prob.size(); ++i) {
    if (s.prob[i] == e.max_prob) e.argmax.push_back(s.states[i]);
    if (s.prob[i] == e.min_prob) e.argmin.push_back(s.states[i]);
  }
  return e;
}

}  // namespace tasep::rs
