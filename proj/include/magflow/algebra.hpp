#pragma once

#include "magflow/exact.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace magflow {

// Element of the dual space, components against the dual basis. Slot k
// corresponds to basis index base_index + k of the algebra it pairs with.
struct Covector {
  std::vector<Rational> components;
};

struct BracketTerm {
  int c;
  Rational v;
};

// Finite-dimensional Lie algebra presented by structure constants
//   [e_a, e_b] = sum_c C^c_ab e_c,  stored sparsely for a < b.
//
// Basis indices run base_index() .. max_index(). Ordinary algebras are
// 1-based; a centrally extended algebra is 0-based with the center at
// index 0.
class LieAlgebra {
 public:
  LieAlgebra(std::string name, int dim, int base_index = 1);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  int base_index() const { return base_; }
  int max_index() const { return base_ + dim_ - 1; }

  // Requires a < b, all indices in range. Zero terms are dropped.
  void set_bracket(int a, int b, std::vector<BracketTerm> terms);

  // C^c_ab, antisymmetric in (a, b).
  Rational structure_constant(int a, int b, int c) const;

  struct Entry {
    int a, b;
    std::vector<BracketTerm> terms;  // sorted by c
  };
  // Stored brackets with a < b, sorted by (a, b), zero entries omitted.
  std::vector<Entry> entries() const;

 private:
  std::string name_;
  int dim_;
  int base_;
  std::map<std::pair<int, int>, std::map<int, Rational>> brackets_;
};

struct JacobiViolation {
  int a, b, c;        // offending basis triple
  int e;              // basis component of the cyclic residual
  Rational residual;  // coefficient of e_e in [[a,b],c]+[[b,c],a]+[[c,a],b]
};

// Exhaustive Jacobi check over all basis triples. Empty result = valid.
std::vector<JacobiViolation> validate_algebra(const LieAlgebra& g);

// A(lambda)_ab = sum_c C^c_ab lambda_c: the skew pairing
// (x, y) -> lambda([x, y]) in the chosen basis. 0-indexed matrix.
RatMat kirillov_form(const LieAlgebra& g, const Covector& lambda);

// Canonical basis of the annihilator {x : lambda([x, y]) = 0 for all y}.
std::vector<RatVec> annihilator(const LieAlgebra& g, const Covector& lambda);

struct IndexOptions {
  std::uint64_t seed = 42;
  int trials = 8;
  long range = 1000000;  // covector entries drawn uniformly from [-range, range]
  bool certify = false;  // additionally run the exact grid certificate (dim <= 6)
};

struct IndexReport {
  int index = 0;     // dim - max_rank
  int max_rank = 0;
  int dim = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  // log2 of the Schwartz-Zippel bound on the probability that every trial
  // missed the true maximal rank.
  double log2_failure_bound = 0.0;
  bool certified = false;
};

// index = dim g - max_lambda rank A(lambda), computed by randomized
// evaluation (exact arithmetic at random integer covectors). A rank
// deficit can only be overstated, never understated, and the report
// carries the probability bound. With opts.certify (dim <= 6) the max is
// also certified exactly: every rank value is witnessed by a 2r x 2r
// principal Pfaffian minor of per-variable degree <= r <= floor(dim/2),
// and a polynomial of per-variable degree <= d that vanishes on the full
// grid {0..d}^n is identically zero, so scanning that grid attains the
// true maximum.
IndexReport algebra_index(const LieAlgebra& g, const IndexOptions& opts = {});

namespace detail {
// Shared core: max over lambda of rank(S + A(lambda)) for a fixed skew
// matrix S (zero for the plain index; a cocycle matrix for the twisted
// one). Grid certification included when opts.certify.
IndexReport max_shifted_rank(const LieAlgebra& g, const RatMat& S,
                             const IndexOptions& opts);
}  // namespace detail

}  // namespace magflow
