#pragma once

#include "magflow/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace magflow {

using RatVec = std::vector<Rational>;

// Dense row-major matrix of exact rationals. Small (n <= ~15 rows/cols in
// this codebase), so plain Gaussian elimination with exact arithmetic is
// both simplest and fast enough; cpp_rational keeps entries reduced.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMat identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  void append_row(const RatVec& row);

  bool operator==(const RatMat& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  RatVec data_;
};

// Reduced row echelon form; optionally reports pivot column indices.
RatMat rref(RatMat m, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank(const RatMat& m);

// Canonical basis of {x : m x = 0}: one vector per free column of rref(m),
// with a 1 in the free slot, ordered by free column index.
std::vector<RatVec> null_space(const RatMat& m);

// Nonzero rows of rref(m): canonical basis of the row space.
std::vector<RatVec> row_space_basis(const RatMat& m);

// nullopt when singular.
std::optional<RatMat> inverse(const RatMat& m);

RatVec mat_vec(const RatMat& m, const RatVec& v);

// Reduces v against the rref basis rows (each row's leading entry is a
// pivot 1). Returns the residual; zero residual means v is in the span.
RatVec reduce_against(const std::vector<RatVec>& rref_rows, RatVec v);

bool is_zero(const RatVec& v);

}  // namespace magflow
