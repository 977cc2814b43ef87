#include "tasep/markov.hpp"

#include "tasep/mlq.hpp"
#include "tasep/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace tasep::markov {

RingWord tasep_step(const RingWord& w, int site) {
  if (!w.occupied(site)) throw std::invalid_argument("tasep_step: site " + std::to_string(site) + " is vacant");
  RingWord out = w;
  const Label mover = w[site];
  const Label left = w[site - 1];
  if (left == kVacant || left > mover) {
    out[site - 1] = mover;
    out[site] = left;
  }
  return out;
}

int StateSpace::at(const RingWord& w) const {
  const auto it = index.find(w);
  if (it == index.end()) throw std::out_of_range("word " + to_string(w) + " not in the state space");
  return it->second;
}

StateSpace state_space(const TypeVector& type, double cap) {
  std::vector<long> parts(type.counts().begin(), type.counts().end());
  parts.push_back(type.ring_size() - type.particles());
  const Integer count = multinomial(parts);
  if (count.get_d() > cap) {
    throw CapExceeded("state space of " + count.get_str() + " words exceeds the cap");
  }
  std::vector<Label> word;
  for (int label = 1; label <= type.classes(); ++label) word.insert(word.end(), type.count(label), label);
  word.insert(word.end(), type.ring_size() - type.particles(), kVacant);
  StateSpace space{type, {}, {}};
  do {
    space.index.emplace(RingWord(word), space.size());
    space.states.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return space;
}

RationalMatrix transition_matrix(const StateSpace& space) {
  const int n = space.size();
  const Rational weight(1, space.type.particles());
  RationalMatrix p(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& w = space.states[i];
    for (int s = 0; s < w.size(); ++s) {
      if (!w.occupied(s)) continue;
      p(i, space.at(tasep_step(w, s))) += weight;
    }
  }
  return p;
}

Rational StationaryDist::total() const {
  Rational sum = 0;
  for (const auto& [w, x] : prob) sum += x;
  return sum;
}

StationaryDist stationary_exact(const StateSpace& space, const RationalMatrix& p) {
  const auto pi = stationary_vector(p);
  StationaryDist out;
  for (int i = 0; i < space.size(); ++i) {
    if (pi[i] <= 0) throw ReducibleChain("stationary vector has a non-positive entry: chain is not irreducible");
    out.prob.emplace(space.states[i], pi[i]);
  }
  return out;
}

StationaryDist stationary_exact(const TypeVector& type) {
  const auto space = state_space(type);
  return stationary_exact(space, transition_matrix(space));
}

StationaryDist stationary_by_rotation(const TypeVector& type, double cap) {
  const auto space = state_space(type, cap);
  std::map<RingWord, int> class_of;
  std::vector<RingWord> reps;
  std::vector<int> class_size;
  for (const auto& w : space.states) {
    const auto canon = cyclic_canonical(w).word;
    auto [it, inserted] = class_of.emplace(canon, static_cast<int>(reps.size()));
    if (inserted) {
      reps.push_back(canon);
      class_size.push_back(0);
    }
    ++class_size[it->second];
  }
  const int c = static_cast<int>(reps.size());
  const Rational weight(1, type.particles());
  RationalMatrix p(c, c);
  for (int i = 0; i < c; ++i) {
    const auto& w = reps[i];
    for (int s = 0; s < w.size(); ++s) {
      if (!w.occupied(s)) continue;
      p(i, class_of.at(cyclic_canonical(tasep_step(w, s)).word)) += weight;
    }
  }
  const auto lumped = stationary_vector(p);
  StationaryDist out;
  for (const auto& w : space.states) {
    const int k = class_of.at(cyclic_canonical(w).word);
    if (lumped[k] <= 0) throw ReducibleChain("lumped chain is not irreducible");
    out.prob.emplace(w, lumped[k] / class_size[k]);
  }
  return out;
}

RingWord k_tasep_step(const RingWord& w, const std::vector<int>& subset, int cut) {
  const int n = w.size();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int s : subset) {
    if (s < 0 || s >= n || in[s]) throw std::invalid_argument("k_tasep_step: subset must be distinct sites");
    in[s] = 1;
  }
  RingWord out = w;
  auto ring = [&](int s) {
    if (out.occupied(s)) out = tasep_step(out, s);
  };
  if (static_cast<int>(subset.size()) == n) {
    for (int i = 0; i < n; ++i) ring(cut + i);
    return out;
  }
  // Each maximal cyclic run fires from its left end; distinct runs commute.
  for (int s = 0; s < n; ++s) {
    if (!in[s] || in[(s - 1 + n) % n]) continue;
    for (int t = s; in[t % n]; ++t) ring(t % n);
  }
  return out;
}

RationalMatrix k_tasep_matrix(const StateSpace& space, int k) {
  const int n = space.type.ring_size();
  if (k < 1 || k > n) throw std::invalid_argument("k must lie in 1..N");
  const int m = space.size();
  RationalMatrix p(m, m);
  const Rational subset_weight = Rational(1) / Rational(binomial(n, k));
  for (int i = 0; i < m; ++i) {
    const auto& w = space.states[i];
    mlq::for_each_subset(n, k, [&](const std::vector<int>& subset) {
      if (k == n) {
        const Rational w_cut = subset_weight / n;
        for (int cut = 0; cut < n; ++cut) p(i, space.at(k_tasep_step(w, subset, cut))) += w_cut;
      } else {
        p(i, space.at(k_tasep_step(w, subset))) += subset_weight;
      }
    });
  }
  return p;
}

RationalMatrix last_row_matrix(const StateSpace& space) {
  const int n = space.type.ring_size();
  const int boxes = space.type.particles();
  const int m = space.size();
  RationalMatrix p(m, m);
  const Rational weight = Rational(1) / Rational(binomial(n, boxes));
  for (int i = 0; i < m; ++i) {
    mlq::for_each_subset(n, boxes, [&](const std::vector<int>& subset) {
      p(i, space.at(mlq::last_row_step(space.states[i], subset))) += weight;
    });
  }
  return p;
}

EmpiricalDist mc_stationary(const TypeVector& type, const McOptions& options) {
  if (options.samples < 1) throw std::invalid_argument("mc_stationary needs samples >= 1");
  const int chains = std::max(1, options.chains);
  const int batches = std::max(1, options.batches_per_chain);
  const long per_chain = std::max<long>(1, options.samples / chains);

  // counts[chain][batch][word]
  std::vector<std::vector<std::map<RingWord, long>>> counts(
      static_cast<std::size_t>(chains), std::vector<std::map<RingWord, long>>(static_cast<std::size_t>(batches)));
  std::vector<std::vector<long>> batch_len(static_cast<std::size_t>(chains), std::vector<long>(batches, 0));

  parallel_for(chains, options.jobs, [&](int c) {
    std::mt19937_64 rng(split_seed(options.seed, static_cast<std::uint64_t>(c)));
    std::vector<Label> sites;
    for (int label = 1; label <= type.classes(); ++label) sites.insert(sites.end(), type.count(label), label);
    sites.insert(sites.end(), type.ring_size() - type.particles(), kVacant);
    RingWord w(sites);
    std::vector<int> where;  // positions of particles
    for (int s = 0; s < w.size(); ++s)
      if (w.occupied(s)) where.push_back(s);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(where.size()) - 1);
    const int n = w.size();
    auto step = [&] {
      const int k = pick(rng);
      const int s = where[k];
      const int left = (s - 1 + n) % n;
      const Label mover = w[s];
      const Label other = w[left];
      if (other == kVacant) {
        w[left] = mover;
        w[s] = kVacant;
        where[k] = left;
      } else if (other > mover) {
        w[left] = mover;
        w[s] = other;
        const auto it = std::find(where.begin(), where.end(), left);
        *it = s;
        where[k] = left;
      }
    };
    for (long t = 0; t < options.burn_in; ++t) step();
    for (long t = 0; t < per_chain; ++t) {
      step();
      const int b = static_cast<int>((t * batches) / per_chain);
      ++counts[c][b][w];
      ++batch_len[c][b];
    }
  });

  EmpiricalDist out;
  out.samples = per_chain * chains;
  std::map<RingWord, long> totals;
  for (const auto& chain : counts)
    for (const auto& batch : chain)
      for (const auto& [w, k] : batch) totals[w] += k;
  const double nb = static_cast<double>(chains) * batches;
  for (const auto& [w, k] : totals) {
    const double mean = static_cast<double>(k) / static_cast<double>(out.samples);
    double ss = 0;
    for (int c = 0; c < chains; ++c) {
      for (int b = 0; b < batches; ++b) {
        const auto it = counts[c][b].find(w);
        const double f = it == counts[c][b].end() ? 0.0 : static_cast<double>(it->second) / batch_len[c][b];
        ss += (f - mean) * (f - mean);
      }
    }
    out.frequency[w] = mean;
    out.standard_error[w] = nb > 1 ? std::sqrt(ss / (nb - 1) / nb) : 0.0;
  }
  return out;
}

}  // namespace tasep::markov
