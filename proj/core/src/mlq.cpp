#include "tasep/mlq.hpp"

#include <algorithm>
#include <numeric>

namespace tasep::mlq {

DiscreteMLQ::DiscreteMLQ(TypeVector type, std::vector<std::vector<int>> box_rows)
    : type_(std::move(type)), rows_(std::move(box_rows)) {
  if (static_cast<int>(rows_.size()) != type_.classes()) {
    throw std::invalid_argument("MLQ must have one row per class");
  }
  const int n = type_.ring_size();
  for (int r = 0; r < rows(); ++r) {
    const auto& row = rows_[r];
    if (static_cast<int>(row.size()) != type_.cumulative(r + 1)) {
      throw std::invalid_argument("row " + std::to_string(r + 1) + " must hold " +
                                  std::to_string(type_.cumulative(r + 1)) + " boxes");
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 0 || row[j] >= n) throw std::invalid_argument("box position outside the ring");
      if (j > 0 && row[j] <= row[j - 1]) throw std::invalid_argument("row positions must be strictly increasing");
    }
  }
}

std::vector<Label> label_next_row(int ring_size, const std::vector<int>& upper_positions,
                                  const std::vector<Label>& upper_labels,
                                  const std::vector<int>& lower_positions, Label fresh_label, TieOrder order,
                                  std::vector<int>* claimed_by) {
  if (upper_positions.size() != upper_labels.size()) throw std::invalid_argument("label/position size mismatch");
  if (lower_positions.size() < upper_positions.size()) {
    throw std::invalid_argument("lower row has fewer boxes than the labelled row above");
  }
  // slot[p] = index of the lower box at site p, or -1.
  std::vector<int> slot(static_cast<std::size_t>(ring_size), -1);
  for (std::size_t j = 0; j < lower_positions.size(); ++j) slot[lower_positions[j]] = static_cast<int>(j);

  std::vector<int> sequence(upper_positions.size());
  std::iota(sequence.begin(), sequence.end(), 0);
  std::stable_sort(sequence.begin(), sequence.end(), [&](int a, int b) {
    if (upper_labels[a] != upper_labels[b]) return upper_labels[a] < upper_labels[b];
    return order == TieOrder::kLeftmostFirst ? upper_positions[a] < upper_positions[b]
                                             : upper_positions[a] > upper_positions[b];
  });

  std::vector<Label> lower(lower_positions.size(), 0);
  if (claimed_by) claimed_by->assign(lower_positions.size(), -1);
  for (int idx : sequence) {
    int p = upper_positions[idx];
    for (int step = 0; step < ring_size; ++step, p = (p + 1 == ring_size ? 0 : p + 1)) {
      const int j = slot[p];
      if (j >= 0 && lower[j] == 0) {
        lower[j] = upper_labels[idx];
        if (claimed_by) (*claimed_by)[j] = idx;
        break;
      }
    }
  }
  for (auto& x : lower) {
    if (x == 0) x = fresh_label;
  }
  return lower;
}

LabeledMLQ label_mlq(const DiscreteMLQ& q, TieOrder order) {
  const int n = q.ring_size();
  LabeledMLQ out{q, {}, {}};
  out.labels.resize(q.rows());
  out.labels[0].assign(q.row(0).size(), 1);

  // path_of[r][j]: index into out.paths of the path occupying box j of row r.
  std::vector<std::vector<int>> path_of(q.rows());
  for (std::size_t j = 0; j < q.row(0).size(); ++j) {
    out.paths.push_back({1, {{0, q.row(0)[j]}}, false});
    path_of[0].push_back(static_cast<int>(j));
  }

  for (int r = 0; r + 1 < q.rows(); ++r) {
    std::vector<int> claimed_by;
    out.labels[r + 1] = label_next_row(n, q.row(r), out.labels[r], q.row(r + 1), r + 2, order, &claimed_by);
    path_of[r + 1].assign(q.row(r + 1).size(), -1);
    for (std::size_t j = 0; j < q.row(r + 1).size(); ++j) {
      const int target = q.row(r + 1)[j];
      if (claimed_by[j] < 0) {
        path_of[r + 1][j] = static_cast<int>(out.paths.size());
        out.paths.push_back({r + 2, {{r + 1, target}}, false});
        continue;
      }
      const int pid = path_of[r][claimed_by[j]];
      auto& path = out.paths[pid];
      int p = q.row(r)[claimed_by[j]];
      path.cells.push_back({r + 1, p});
      while (p != target) {
        p = (p + 1) % n;
        if (p == 0) path.wraps = true;
        path.cells.push_back({r + 1, p});
      }
      path_of[r + 1][j] = pid;
    }
  }
  return out;
}

RingWord bottom_word(const LabeledMLQ& l) {
  RingWord w = RingWord::vacant(l.base.ring_size());
  const int last = l.base.rows() - 1;
  const auto& pos = l.base.row(last);
  for (std::size_t j = 0; j < pos.size(); ++j) w[pos[j]] = l.labels[last][j];
  return w;
}

Arrangement::Arrangement(std::vector<int> order, std::optional<std::vector<int>> class_counts)
    : order_(std::move(order)) {
  int max_row = 0;
  for (int r : order_) {
    if (r < 1) throw std::invalid_argument("arrangement rows are 1-based");
    max_row = std::max(max_row, r);
  }
  std::vector<int> m = class_counts.value_or(std::vector<int>(static_cast<std::size_t>(max_row), 1));
  row_sizes_.resize(m.size());
  std::partial_sum(m.begin(), m.end(), row_sizes_.begin());
  std::vector<int> seen(m.size(), 0);
  for (int r : order_) {
    if (r > static_cast<int>(m.size())) throw std::invalid_argument("arrangement row out of range");
    ++seen[r - 1];
  }
  if (seen != row_sizes_) throw std::invalid_argument("arrangement row multiplicities do not match the type");
}

Arrangement Arrangement::rotated(int offset) const {
  const int b = boxes();
  std::vector<int> out(order_.size());
  for (int i = 0; i < b; ++i) out[i] = order_[(((i + offset) % b) + b) % b];
  std::vector<int> m(row_sizes_.size());
  std::adjacent_difference(row_sizes_.begin(), row_sizes_.end(), m.begin());
  return Arrangement(std::move(out), m);
}

DiscreteMLQ materialize(const Arrangement& a) {
  std::vector<int> m(a.row_sizes().size());
  std::adjacent_difference(a.row_sizes().begin(), a.row_sizes().end(), m.begin());
  std::vector<std::vector<int>> rows(a.rows());
  for (int p = 0; p < a.boxes(); ++p) rows[a.order()[p] - 1].push_back(p);
  return DiscreteMLQ(TypeVector(std::move(m), a.boxes()), std::move(rows));
}

std::vector<Label> label_arrangement_word(const Arrangement& a) {
  const auto q = materialize(a);
  const int b = q.ring_size();
  std::vector<Label> labels(q.row(0).size(), 1);
  for (int r = 0; r + 1 < q.rows(); ++r) {
    labels = label_next_row(b, q.row(r), labels, q.row(r + 1), r + 2);
  }
  return labels;
}

Permutation label_arrangement(const Arrangement& a) {
  for (std::size_t i = 1; i < a.row_sizes().size(); ++i) {
    if (a.row_sizes()[i] != a.row_sizes()[i - 1] + 1) {
      throw std::invalid_argument("label_arrangement needs the all-ones type");
    }
  }
  return Permutation(label_arrangement_word(a));
}

Arrangement sample_arrangement(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_arrangement needs n >= 1");
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int r = 1; r <= n; ++r) order.insert(order.end(), r, r);
  std::shuffle(order.begin(), order.end(), rng);
  return Arrangement(std::move(order));
}

RingWord last_row_step(const RingWord& u, const std::vector<int>& boxes) {
  std::vector<int> pos;
  std::vector<Label> lab;
  Label top = 0;
  for (int s = 0; s < u.size(); ++s) {
    if (!u.occupied(s)) continue;
    pos.push_back(s);
    lab.push_back(u[s]);
    top = std::max(top, u[s]);
  }
  if (boxes.size() < pos.size()) {
    throw std::invalid_argument("last_row_step: " + std::to_string(boxes.size()) + " boxes cannot absorb " +
                                std::to_string(pos.size()) + " particles");
  }
  for (std::size_t j = 0; j < boxes.size(); ++j) {
    if (boxes[j] < 0 || boxes[j] >= u.size() || (j > 0 && boxes[j] <= boxes[j - 1])) {
      throw std::invalid_argument("last_row_step: boxes must be increasing positions on the ring");
    }
  }
  const auto lower = label_next_row(u.size(), pos, lab, boxes, top + 1);
  RingWord out = RingWord::vacant(u.size());
  for (std::size_t j = 0; j < boxes.size(); ++j) out[boxes[j]] = lower[j];
  return out;
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    fn(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

Integer mlq_total(const TypeVector& type) {
  Integer total = 1;
  for (int i = 1; i <= type.classes(); ++i) total *= binomial(type.ring_size(), type.cumulative(i));
  return total;
}

namespace {

struct Walker {
  const TypeVector& type;
  const MlqVisitor& visit;
  const std::optional<std::vector<int>>& fixed_bottom;
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<Label>> labels;

  void descend(int r) {
    const int n = type.ring_size();
    const bool last = r + 1 == type.classes();
    auto place = [&](const std::vector<int>& subset) {
      rows[r] = subset;
      if (r == 0) {
        labels[0].assign(subset.size(), 1);
      } else {
        labels[r] = label_next_row(n, rows[r - 1], labels[r - 1], subset, r + 1);
      }
      if (last) {
        visit(rows, labels);
      } else {
        descend(r + 1);
      }
    };
    if (last && fixed_bottom) {
      place(*fixed_bottom);
    } else {
      for_each_subset(n, type.cumulative(r + 1), place);
    }
  }
};

}  // namespace

void for_each_labeled_mlq(const TypeVector& type, const MlqVisitor& visit,
                          const std::optional<std::vector<int>>& fixed_bottom, double cap) {
  Integer work = 1;
  const int rows = type.classes();
  for (int i = 1; i <= rows; ++i) {
    if (i == rows && fixed_bottom) break;
    work *= binomial(type.ring_size(), type.cumulative(i));
  }
  if (work.get_d() > cap) {
    throw CapExceeded("MLQ enumeration of " + work.get_str() + " queues exceeds the cap");
  }
  if (fixed_bottom) {
    if (static_cast<int>(fixed_bottom->size()) != type.particles()) {
      throw std::invalid_argument("fixed bottom row has the wrong number of boxes");
    }
    for (std::size_t j = 0; j < fixed_bottom->size(); ++j) {
      const int p = (*fixed_bottom)[j];
      if (p < 0 || p >= type.ring_size() || (j > 0 && p <= (*fixed_bottom)[j - 1])) {
        throw std::invalid_argument("fixed bottom row must be increasing positions on the ring");
      }
    }
  }
  Walker w{type, visit, fixed_bottom, std::vector<std::vector<int>>(rows), std::vector<std::vector<Label>>(rows)};
  w.descend(0);
}

}  // namespace tasep::mlq
