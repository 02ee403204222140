#pragma once

#include "magflow/algebra.hpp"

#include <map>
#include <utility>
#include <vector>

namespace magflow {

// Skew bilinear form on a (1-based) Lie algebra: F(e_a, e_b) stored for
// a < b, missing entries zero.
struct TwoCochain {
  int dim = 0;
  std::map<std::pair<int, int>, Rational> entries;

  TwoCochain() = default;
  explicit TwoCochain(int dim) : dim(dim) {}

  // Antisymmetric accessor, any order of (a, b).
  Rational operator()(int a, int b) const;
  void set(int a, int b, Rational v);  // requires a != b, normalizes to a < b

  RatMat matrix() const;  // dense 0-indexed skew matrix
  bool operator==(const TwoCochain& o) const = default;
};

// Flattened coordinates on the space of 2-cochains: slots enumerate basis
// pairs (a, b), a < b, in lexicographic order.
int wedge_count(int dim);
int wedge_slot(int dim, int a, int b);
std::pair<int, int> wedge_pair(int dim, int slot);
RatVec cochain_to_vec(const TwoCochain& F);
TwoCochain vec_to_cochain(int dim, const RatVec& v);

struct CocycleViolation {
  int a, b, c;
  Rational residual;  // sum_cyclic sum_d C^d_ab F(c, d), should vanish
};

// Closedness residuals over all basis triples; empty = cocycle.
std::vector<CocycleViolation> cocycle_violations(const LieAlgebra& g,
                                                 const TwoCochain& F);
bool is_cocycle(const LieAlgebra& g, const TwoCochain& F);

// Canonical (reduced-echelon, lexicographic slots) basis of the space of
// closed 2-cochains.
std::vector<TwoCochain> cocycle_basis(const LieAlgebra& g);

// Image of lambda -> delta(lambda), (delta lambda)_ab = sum_c C^c_ab lambda_c;
// canonical basis. Note delta(lambda) equals the Kirillov form A(lambda).
std::vector<TwoCochain> coboundary_basis(const LieAlgebra& g);
TwoCochain trivial_cocycle(const LieAlgebra& g, const Covector& lambda);

struct CohomologyReport {
  int dim = 0;  // algebra dimension
  int dim_Z2 = 0, dim_B2 = 0, dim_H2 = 0;
  std::vector<TwoCochain> Z2_basis;
  std::vector<TwoCochain> B2_basis;
  // Closed cochains spanning a complement of the coboundaries: canonical
  // representatives of the second cohomology.
  std::vector<TwoCochain> H2_representatives;
};

CohomologyReport cohomology(const LieAlgebra& g);

struct KernelReport {
  std::vector<RatVec> basis;  // null space of the form's matrix
  bool closed_under_bracket = false;
  // set when not closed: offending pair of basis vectors (indices into basis)
  std::pair<int, int> violation{-1, -1};
};

// Kernel subspace of F with an explicit check that it is a subalgebra
// (automatic for cocycles, audited rather than assumed).
KernelReport cocycle_kernel(const LieAlgebra& g, const TwoCochain& F);

// index twisted by F: dim g - max_lambda rank(F + A(lambda)).
IndexReport cohomology_index(const LieAlgebra& g, const TwoCochain& F,
                             const IndexOptions& opts = {});

struct IntegrabilityVerdict {
  int dim = 0;
  IndexReport index_report;
  // (dim - index)/2, the number of independent commuting quadratures still
  // needed beyond the guaranteed family; the flow is integrable in the
  // noncommutative sense when this is < 2.
  Rational lhs;
  bool integrable = false;
};

IntegrabilityVerdict is_integrable(const LieAlgebra& g, const TwoCochain& F,
                                   const IndexOptions& opts = {});

}  // namespace magflow
