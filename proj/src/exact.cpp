#include "magflow/exact.hpp"

#include <cassert>
#include <stdexcept>

namespace magflow {

void RatMat::append_row(const RatVec& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_)
    throw std::invalid_argument("RatMat::append_row: width mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RatMat rref(RatMat m, std::vector<std::size_t>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = c; j < m.cols(); ++j)
        std::swap(m.at(p, j), m.at(r, j));
    Rational inv = m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) /= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(r, j);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return m;
}

std::size_t rank(const RatMat& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::vector<RatVec> null_space(const RatMat& m) {
  std::vector<std::size_t> piv;
  RatMat r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : piv) is_pivot[c] = true;

  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols(), Rational(0));
    v[f] = 1;
    // pivot row i has its leading 1 in column piv[i]
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatVec> row_space_basis(const RatMat& m) {
  std::vector<std::size_t> piv;
  RatMat r = rref(m, &piv);
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < piv.size(); ++i) {
    RatVec row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = r.at(i, j);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<RatMat> inverse(const RatMat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  RatMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  RatMat r = rref(std::move(aug), &piv);
  if (piv.size() != n || piv[n - 1] != n - 1) return std::nullopt;
  RatMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
  assert(v.size() == m.cols());
  RatVec out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0 && v[j] != 0) out[i] += m.at(i, j) * v[j];
  return out;
}

RatVec reduce_against(const std::vector<RatVec>& rref_rows, RatVec v) {
  for (const RatVec& row : rref_rows) {
    std::size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    if (lead == row.size()) continue;
    if (v[lead] == 0) continue;
    Rational f = v[lead];  // row[lead] == 1 in rref
    for (std::size_t j = lead; j < v.size(); ++j) v[j] -= f * row[j];
  }
  return v;
}

bool is_zero(const RatVec& v) {
  for (const Rational& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace magflow
