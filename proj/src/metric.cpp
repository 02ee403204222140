#include "magflow/metric.hpp"

#include "magflow/errors.hpp"

namespace magflow {

Metric Metric::identity(int n) { return Metric(RatMat::identity(n)); }

Metric::Metric(RatMat G) : G_(std::move(G)) {
  std::size_t n = G_.rows();
  if (n == 0 || G_.cols() != n) throw ParseError("metric must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (G_.at(i, j) != G_.at(j, i))
        throw ParseError("metric must be symmetric");

  // Sylvester criterion on leading principal minors, exact. Minor via the
  // rank/rref machinery would lose the determinant, so expand directly;
  // n <= 5 in practice.
  for (std::size_t k = 1; k <= n; ++k) {
    RatMat m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m.at(i, j) = G_.at(i, j);
    // determinant by fraction-free elimination on the copy
    Rational det = 1;
    bool singular = false;
    for (std::size_t c = 0; c < k && !singular; ++c) {
      std::size_t p = c;
      while (p < k && m.at(p, c) == 0) ++p;
      if (p == k) {
        singular = true;
        break;
      }
      if (p != c) {
        for (std::size_t j = 0; j < k; ++j) std::swap(m.at(p, j), m.at(c, j));
        det = -det;
      }
      det *= m.at(c, c);
      for (std::size_t i = c + 1; i < k; ++i) {
        if (m.at(i, c) == 0) continue;
        Rational f = m.at(i, c) / m.at(c, c);
        for (std::size_t j = c; j < k; ++j) m.at(i, j) -= f * m.at(c, j);
      }
    }
    if (singular || det <= 0)
      throw ParseError("metric must be positive definite");
  }

  auto inv = inverse(G_);
  Ginv_ = *inv;  // nonsingular: guaranteed by positive-definiteness

  Ginv_d_.assign(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      Ginv_d_[i][j] = to_double(Ginv_.at(i, j));
}

}  // namespace magflow
