#include "tasep/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace tasep {

Integer binomial(long a, long b) {
  if (b < 0) return 0;
  Integer result;
  const Integer top(a);
  mpz_bin_ui(result.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(b));
  return result;
}

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer multinomial(const std::vector<long>& parts) {
  long total = 0;
  Integer den = 1;
  for (long p : parts) {
    if (p < 0) return 0;
    total += p;
    den *= factorial(p);
  }
  return factorial(total) / den;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
    Integer num(std::string(text.substr(0, slash)));
    Integer den(std::string(text.substr(slash + 1)));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
}

void SweepResult::record(bool match, const std::string& witness) {
  ++checked;
  if (match) return;
  ++mismatches;
  if (witnesses.size() < 8) witnesses.push_back(witness);
}

void SweepResult::merge(const SweepResult& other) {
  checked += other.checked;
  mismatches += other.mismatches;
  for (const auto& w : other.witnesses) {
    if (witnesses.size() < 8) witnesses.push_back(w);
  }
}

TypeVector::TypeVector(std::vector<int> m, int ring_size) : m_(std::move(m)), ring_size_(ring_size) {
  if (m_.empty()) throw std::invalid_argument("type vector must have at least one class");
  for (int mi : m_) {
    if (mi < 1) throw std::invalid_argument("type vector entries must be positive");
  }
  if (ring_size_ < particles()) {
    throw std::invalid_argument("ring size " + std::to_string(ring_size_) +
                                " smaller than the number of particles");
  }
}

TypeVector TypeVector::ones(int n, int ring_size) {
  return TypeVector(std::vector<int>(static_cast<std::size_t>(n), 1), ring_size);
}

int TypeVector::cumulative(int i) const {
  if (i < 0 || i > classes()) throw std::out_of_range("cumulative index");
  return std::accumulate(m_.begin(), m_.begin() + i, 0);
}

RingWord RingWord::vacant(int ring_size) {
  return RingWord(std::vector<Label>(static_cast<std::size_t>(ring_size), kVacant));
}

RingWord RingWord::rotated(int offset) const {
  const int n = size();
  std::vector<Label> out(sites_.size());
  for (int i = 0; i < n; ++i) out[i] = (*this)[i + offset];
  return RingWord(std::move(out));
}

std::vector<int> RingWord::label_counts() const {
  std::vector<int> counts;
  for (Label x : sites_) {
    if (x == kVacant) continue;
    if (x < 1) throw std::invalid_argument("labels must be positive");
    if (static_cast<int>(counts.size()) < x) counts.resize(x, 0);
    ++counts[x - 1];
  }
  return counts;
}

bool RingWord::has_type(const TypeVector& t) const {
  return size() == t.ring_size() && label_counts() == t.counts();
}

std::string to_string(const RingWord& w) {
  const bool compact = std::all_of(w.sites().begin(), w.sites().end(),
                                   [](Label x) { return x == kVacant || x <= 9; });
  std::string out;
  for (int i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ',';
    if (w[i] == kVacant) {
      out += '.';
    } else {
      out += std::to_string(w[i]);
    }
  }
  return out;
}

RingWord parse_ring_word(std::string_view text) {
  std::vector<Label> sites;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c == '.') {
        sites.push_back(kVacant);
      } else if (c >= '1' && c <= '9') {
        sites.push_back(c - '0');
      } else {
        throw std::invalid_argument("bad ring word '" + std::string(text) + "'");
      }
    }
    return RingWord(std::move(sites));
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto item = text.substr(start, end - start);
    if (item == ".") {
      sites.push_back(kVacant);
    } else {
      sites.push_back(parse_int_list(item).at(0));
    }
    start = end + 1;
  }
  return RingWord(std::move(sites));
}

CanonicalRotation cyclic_canonical(const RingWord& w) {
  const int n = w.size();
  if (n == 0) return {w, 0};
  const auto& s = w.sites();
  int best = 0;
  for (int cand = 1; cand < n; ++cand) {
    for (int i = 0; i < n; ++i) {
      const Label a = s[(cand + i) % n];
      const Label b = s[(best + i) % n];
      if (a != b) {
        if (a < b) best = cand;
        break;
      }
    }
  }
  return {w.rotated(best), best};
}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  std::vector<char> seen(entries_.size() + 1, 0);
  for (int v : entries_) {
    if (v < 1 || v > size() || seen[v]) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::reverse(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[i] = n - i;
  return Permutation(std::move(e));
}

Permutation Permutation::swap_values(int k) const {
  if (k < 1 || k >= size()) throw std::invalid_argument("s_k needs 1 <= k < n");
  auto e = entries_;
  for (int& v : e) {
    if (v == k) {
      v = k + 1;
    } else if (v == k + 1) {
      v = k;
    }
  }
  return Permutation(std::move(e));
}

int Permutation::inversions() const {
  int count = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (entries_[i] > entries_[j]) ++count;
  return count;
}

Permutation Permutation::rotated(int offset) const {
  const int n = size();
  std::vector<int> e(entries_.size());
  for (int i = 0; i < n; ++i) e[i] = entries_[(((i + offset) % n) + n) % n];
  return Permutation(std::move(e));
}

std::string to_string(const Permutation& p) {
  std::string out;
  const bool compact = p.size() <= 9;
  for (int i = 0; i < p.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  if (text.find(',') != std::string_view::npos) return Permutation(parse_int_list(text));
  std::vector<int> e;
  for (char c : text) {
    if (c < '1' || c > '9') throw std::invalid_argument("bad permutation '" + std::string(text) + "'");
    e.push_back(c - '0');
  }
  return Permutation(std::move(e));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("not an integer list: '" + std::string(text) + "'");
    }
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

}  // namespace tasep
