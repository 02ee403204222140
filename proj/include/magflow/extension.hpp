#pragma once

#include "magflow/cohomology.hpp"

#include <functional>
#include <string>

namespace magflow {

// One-dimensional central extension determined by a closed 2-cochain:
//   [x, y]_F = [x, y] + F(x, y) z,   z central.
// The extended algebra is 0-based with the center at index 0 and the base
// algebra occupying indices 1..n unchanged.
struct CentralExtension {
  LieAlgebra base;
  TwoCochain cocycle;
  LieAlgebra extended;
};

// Throws NotACocycle (with the first violating triple) when F is not
// closed; the Jacobi identity of the extended bracket is equivalent to
// closedness, so the gate is what keeps the result a Lie algebra.
CentralExtension central_extension(const LieAlgebra& g, const TwoCochain& F);

// Inverse direction: strip the center (index 0) off a 0-based algebra,
// recovering the base structure constants and the cocycle. Validates that
// index 0 is actually central.
std::pair<LieAlgebra, TwoCochain> split_extension(const LieAlgebra& extended);

// Annihilator dimension of a generic covector on the extended algebra,
// i.e. its index. Exposed separately because it is the quantity the
// integrability count is phrased in: for a class-maximal representative
// it equals (index twisted by F) + 1.
IndexReport extended_annihilator_dim(const CentralExtension& ext,
                                     const IndexOptions& opts = {});

// Scalar function on the extended dual space (coordinates f_0 .. f_n, the
// center first) with an analytic gradient.
struct DualFunction {
  std::string name;
  std::string domain_note;  // human-readable restriction, e.g. "f4 > 0"
  std::function<bool(const std::vector<double>&)> in_domain;  // null = all
  std::function<double(const std::vector<double>&)> value;
  std::function<std::vector<double>(const std::vector<double>&)> gradient;
};

struct CasimirAudit {
  // max over sample points and basis directions a of
  // |sum_{b,c} Ctilde^c_ab f_c dK/df_b|, the pairing of dK against the
  // Lie-Poisson structure; zero (to rounding) certifies a Casimir.
  double max_residual = 0.0;
  // analytic gradient vs. central differences, relative
  double max_gradient_error = 0.0;
  int points = 0;
};

CasimirAudit verify_casimir(const LieAlgebra& extended, const DualFunction& K,
                            int points, std::uint64_t seed);

}  // namespace magflow
