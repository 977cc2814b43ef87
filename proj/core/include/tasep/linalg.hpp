#pragma once

// Dense exact matrices and fraction-free elimination.

#include "tasep/core.hpp"

#include <vector>

namespace tasep {

template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  DenseMatrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(init.begin()->size());
    for (const auto& row : init) {
      if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = DenseMatrix<Integer>;
using RationalMatrix = DenseMatrix<Rational>;
using RationalVec = std::vector<Rational>;

/// Bareiss elimination; the first nonzero entry in the pivot column is used.
Integer det_bareiss(IntegerMatrix m);

/// Exact determinant of a rational matrix: rows are cleared of denominators
/// and the integer determinant is taken fraction-free.
Rational det_fraction_free(const RationalMatrix& m);

/// Determinant by Laplace expansion along the first row. Exponential; used
/// only as an independent oracle on small matrices.
Rational det_cofactor(const RationalMatrix& m);

/// Thrown when the stationary equations do not have a unique solution.
class ReducibleChain : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solve pi P = pi, sum(pi) = 1 for a row-stochastic P. Works on the integer
/// system obtained by clearing denominators, eliminating with integer row
/// operations and gcd-normalised rows so that sparse rows are skipped.
RationalVec stationary_vector(const RationalMatrix& p);

/// Row vector times matrix.
RationalVec left_multiply(const RationalVec& v, const RationalMatrix& m);

bool is_row_stochastic(const RationalMatrix& m);

}  // namespace tasep
