#include "tasep/linalg.hpp"

#include <numeric>
#include <utility>

namespace tasep {

Integer det_bareiss(IntegerMatrix m) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    int pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rational det_fraction_free(const RationalMatrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  IntegerMatrix scaled(n, n);
  Integer scale = 1;
  for (int r = 0; r < n; ++r) {
    Integer lcm = 1;
    for (int c = 0; c < n; ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (int c = 0; c < n; ++c) {
      scaled(r, c) = m(r, c).get_num() * (lcm / m(r, c).get_den());
    }
    scale *= lcm;
  }
  return make_rational(det_bareiss(std::move(scaled)), scale);
}

Rational det_cofactor(const RationalMatrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (int c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    RationalMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int k = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, cc++) = m(r, k);
      }
    }
    const Rational term = m(0, c) * det_cofactor(minor);
    if (c % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

namespace {

void normalise_row(std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& x : row) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& x : row) {
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
}

}  // namespace

RationalVec stationary_vector(const RationalMatrix& p) {
  const int n = p.rows();
  if (n != p.cols() || n == 0) throw std::invalid_argument("stationary_vector needs a non-empty square matrix");

  // Rows of the augmented system [A | b]: row 0 is the normalisation sum(pi) = 1,
  // row j > 0 is sum_i pi_i (P_ij - delta_ij) = 0, scaled to integers.
  std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n + 1));
  for (int i = 0; i < n; ++i) rows[0][i] = 1;
  rows[0][n] = 1;
  for (int j = 1; j < n; ++j) {
    Integer lcm = 1;
    for (int i = 0; i < n; ++i) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p(i, j).get_den_mpz_t());
    for (int i = 0; i < n; ++i) {
      Rational a = p(i, j);
      if (i == j) a -= 1;
      rows[j][i] = a.get_num() * (lcm / a.get_den());
    }
    rows[j][n] = 0;
  }

  for (int k = 0; k < n; ++k) {
    int pivot = k;
    while (pivot < n && rows[pivot][k] == 0) ++pivot;
    if (pivot == n) throw ReducibleChain("stationary equations are singular: chain is reducible");
    if (pivot != k) std::swap(rows[pivot], rows[k]);
    const auto& prow = rows[k];
    std::vector<int> support;
    for (int c = k; c <= n; ++c)
      if (prow[c] != 0) support.push_back(c);
    for (int i = k + 1; i < n; ++i) {
      auto& row = rows[i];
      if (row[k] == 0) continue;
      const Integer factor = row[k];
      for (int c = k; c <= n; ++c) {
        if (row[c] != 0) row[c] *= prow[k];
      }
      for (int c : support) row[c] -= factor * prow[c];
      normalise_row(row);
    }
  }

  RationalVec x(n);
  for (int k = n - 1; k >= 0; --k) {
    Rational acc(rows[k][n]);
    for (int c = k + 1; c < n; ++c) {
      if (rows[k][c] != 0) acc -= Rational(rows[k][c]) * x[c];
    }
    x[k] = acc / Rational(rows[k][k]);
  }
  return x;
}

RationalVec left_multiply(const RationalVec& v, const RationalMatrix& m) {
  if (static_cast<int>(v.size()) != m.rows()) throw std::invalid_argument("dimension mismatch");
  RationalVec out(m.cols(), Rational(0));
  for (int i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) out[j] += v[i] * m(i, j);
    }
  }
  return out;
}

bool is_row_stochastic(const RationalMatrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    Rational sum = 0;
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j) < 0) return false;
      sum += m(i, j);
    }
    if (sum != 1) return false;
  }
  return true;
}

}  // namespace tasep
