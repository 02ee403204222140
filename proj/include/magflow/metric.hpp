#pragma once

#include "magflow/exact.hpp"

#include <vector>

namespace magflow {

// Inner product on the algebra in the chosen basis: exact symmetric
// positive-definite matrix G_ab, inverted exactly once; double copies are
// cached for the numeric flows.
class Metric {
 public:
  static Metric identity(int n);
  explicit Metric(RatMat G);  // validates symmetry and positive-definiteness

  int dim() const { return static_cast<int>(G_.rows()); }
  const RatMat& G() const { return G_; }
  const RatMat& G_inv() const { return Ginv_; }
  const std::vector<std::vector<double>>& G_inv_d() const { return Ginv_d_; }

 private:
  RatMat G_, Ginv_;
  std::vector<std::vector<double>> Ginv_d_;
};

}  // namespace magflow
