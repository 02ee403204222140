#include "magflow/cohomology.hpp"

#include "magflow/errors.hpp"

#include <stdexcept>

namespace magflow {

Rational TwoCochain::operator()(int a, int b) const {
  if (a == b) return 0;
  bool flip = a > b;
  if (flip) std::swap(a, b);
  auto it = entries.find({a, b});
  if (it == entries.end()) return 0;
  return flip ? Rational(-it->second) : it->second;
}

void TwoCochain::set(int a, int b, Rational v) {
  if (a == b) throw ParseError("cochain entry requires a != b");
  if (a < 1 || b < 1 || a > dim || b > dim)
    throw ParseError("cochain index out of range: (" + std::to_string(a) +
                     "," + std::to_string(b) + ")");
  if (a > b) {
    std::swap(a, b);
    v = -v;
  }
  if (v == 0)
    entries.erase({a, b});
  else
    entries[{a, b}] = std::move(v);
}

RatMat TwoCochain::matrix() const {
  RatMat m(dim, dim);
  for (const auto& [key, v] : entries) {
    m.at(key.first - 1, key.second - 1) = v;
    m.at(key.second - 1, key.first - 1) = -v;
  }
  return m;
}

int wedge_count(int dim) { return dim * (dim - 1) / 2; }

int wedge_slot(int dim, int a, int b) {
  if (!(1 <= a && a < b && b <= dim))
    throw std::invalid_argument("wedge_slot requires 1 <= a < b <= dim");
  // pairs (1,2), (1,3), ..., (1,n), (2,3), ...
  return (a - 1) * dim - a * (a + 1) / 2 + b - 1;
}

std::pair<int, int> wedge_pair(int dim, int slot) {
  for (int a = 1; a < dim; ++a) {
    int row = dim - a;  // pairs with first index a
    if (slot < row) return {a, a + 1 + slot};
    slot -= row;
  }
  throw std::invalid_argument("wedge_pair: slot out of range");
}

RatVec cochain_to_vec(const TwoCochain& F) {
  RatVec v(wedge_count(F.dim), Rational(0));
  for (const auto& [key, val] : F.entries)
    v[wedge_slot(F.dim, key.first, key.second)] = val;
  return v;
}

TwoCochain vec_to_cochain(int dim, const RatVec& v) {
  if (static_cast<int>(v.size()) != wedge_count(dim))
    throw std::invalid_argument("vec_to_cochain: size mismatch");
  TwoCochain F;
  F.dim = dim;
  for (int s = 0; s < static_cast<int>(v.size()); ++s)
    if (v[s] != 0) {
      auto [a, b] = wedge_pair(dim, s);
      F.entries[{a, b}] = v[s];
    }
  return F;
}

std::vector<CocycleViolation> cocycle_violations(const LieAlgebra& g,
                                                 const TwoCochain& F) {
  if (g.base_index() != 1)
    throw std::invalid_argument("cochains are defined on 1-based algebras");
  if (F.dim != g.dim())
    throw ParseError("cochain dimension does not match algebra");
  int n = g.dim();
  std::vector<CocycleViolation> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        Rational r = 0;
        for (int d = 1; d <= n; ++d) {
          r += g.structure_constant(a, b, d) * F(c, d);
          r += g.structure_constant(b, c, d) * F(a, d);
          r += g.structure_constant(c, a, d) * F(b, d);
        }
        if (r != 0) out.push_back({a, b, c, r});
      }
  return out;
}

bool is_cocycle(const LieAlgebra& g, const TwoCochain& F) {
  return cocycle_violations(g, F).empty();
}

namespace {

// Rows of the closedness condition as a linear system over wedge slots.
RatMat cocycle_constraint_matrix(const LieAlgebra& g) {
  int n = g.dim();
  int cols = wedge_count(n);
  RatMat m(0, 0);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        RatVec row(cols, Rational(0));
        auto add = [&](int p, int q, const Rational& coef) {
          // coefficient of F(p, q) with p, q arbitrary order
          if (coef == 0 || p == q) return;
          if (p < q)
            row[wedge_slot(n, p, q)] += coef;
          else
            row[wedge_slot(n, q, p)] -= coef;
        };
        for (int d = 1; d <= n; ++d) {
          add(c, d, g.structure_constant(a, b, d));
          add(a, d, g.structure_constant(b, c, d));
          add(b, d, g.structure_constant(c, a, d));
        }
        if (!is_zero(row)) m.append_row(row);
      }
  if (m.rows() == 0) m = RatMat(1, cols);  // all-zero row, full null space
  return m;
}

}  // namespace

std::vector<TwoCochain> cocycle_basis(const LieAlgebra& g) {
  RatMat constraints = cocycle_constraint_matrix(g);
  // null_space is already canonical, but re-echelonize so basis vectors are
  // reduced rows (leading coefficient 1, lexicographically ordered slots).
  RatMat stack(0, 0);
  for (const RatVec& v : null_space(constraints)) stack.append_row(v);
  std::vector<TwoCochain> out;
  if (stack.rows() == 0) return out;
  for (const RatVec& row : row_space_basis(stack))
    out.push_back(vec_to_cochain(g.dim(), row));
  return out;
}

std::vector<TwoCochain> coboundary_basis(const LieAlgebra& g) {
  int n = g.dim();
  RatMat images(0, 0);
  for (int k = 0; k < n; ++k) {
    Covector lambda{RatVec(n, Rational(0))};
    lambda.components[k] = 1;
    images.append_row(cochain_to_vec(trivial_cocycle(g, lambda)));
  }
  std::vector<TwoCochain> out;
  for (const RatVec& row : row_space_basis(images))
    out.push_back(vec_to_cochain(n, row));
  return out;
}

TwoCochain trivial_cocycle(const LieAlgebra& g, const Covector& lambda) {
  if (g.base_index() != 1)
    throw std::invalid_argument("cochains are defined on 1-based algebras");
  RatMat A = kirillov_form(g, lambda);
  TwoCochain F;
  F.dim = g.dim();
  for (int a = 1; a <= g.dim(); ++a)
    for (int b = a + 1; b <= g.dim(); ++b)
      if (A.at(a - 1, b - 1) != 0) F.entries[{a, b}] = A.at(a - 1, b - 1);
  return F;
}

CohomologyReport cohomology(const LieAlgebra& g) {
  CohomologyReport rep;
  rep.dim = g.dim();
  rep.Z2_basis = cocycle_basis(g);
  rep.B2_basis = coboundary_basis(g);
  rep.dim_Z2 = static_cast<int>(rep.Z2_basis.size());
  rep.dim_B2 = static_cast<int>(rep.B2_basis.size());
  rep.dim_H2 = rep.dim_Z2 - rep.dim_B2;

  // Representatives: reduce each closed basis vector against the
  // coboundary span; the nonzero residues, re-echelonized, give a
  // canonical complement.
  std::vector<RatVec> b2_rows;
  for (const TwoCochain& F : rep.B2_basis) b2_rows.push_back(cochain_to_vec(F));
  RatMat residues(0, 0);
  for (const TwoCochain& F : rep.Z2_basis) {
    RatVec r = reduce_against(b2_rows, cochain_to_vec(F));
    if (!is_zero(r)) residues.append_row(r);
  }
  if (residues.rows() > 0)
    for (const RatVec& row : row_space_basis(residues))
      rep.H2_representatives.push_back(vec_to_cochain(g.dim(), row));

  if (static_cast<int>(rep.H2_representatives.size()) != rep.dim_H2)
    throw std::logic_error("cohomology dimension bookkeeping failed");
  return rep;
}

KernelReport cocycle_kernel(const LieAlgebra& g, const TwoCochain& F) {
  if (g.base_index() != 1)
    throw std::invalid_argument("cochains are defined on 1-based algebras");
  if (F.dim != g.dim())
    throw ParseError("cochain dimension does not match algebra");
  KernelReport rep;
  rep.basis = null_space(F.matrix());

  // [x, y]^k = sum_ab x_a y_b C^k_ab; closedness of the kernel under the
  // bracket holds for every cocycle, but is checked, not assumed.
  auto bracket = [&](const RatVec& x, const RatVec& y) {
    int n = g.dim();
    RatVec z(n, Rational(0));
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        if (x[a - 1] == 0 || y[b - 1] == 0) continue;
        for (int k = 1; k <= n; ++k) {
          Rational c = g.structure_constant(a, b, k);
          if (c != 0) z[k - 1] += x[a - 1] * y[b - 1] * c;
        }
      }
    return z;
  };

  std::vector<RatVec> kernel_rref;
  {
    RatMat stack(0, 0);
    for (const RatVec& v : rep.basis) stack.append_row(v);
    if (stack.rows() > 0) kernel_rref = row_space_basis(stack);
  }

  rep.closed_under_bracket = true;
  for (std::size_t i = 0; i < rep.basis.size(); ++i)
    for (std::size_t j = i + 1; j < rep.basis.size(); ++j) {
      RatVec z = bracket(rep.basis[i], rep.basis[j]);
      if (!is_zero(reduce_against(kernel_rref, z))) {
        rep.closed_under_bracket = false;
        rep.violation = {static_cast<int>(i), static_cast<int>(j)};
        return rep;
      }
    }
  return rep;
}

IndexReport cohomology_index(const LieAlgebra& g, const TwoCochain& F,
                             const IndexOptions& opts) {
  if (F.dim != g.dim())
    throw ParseError("cochain dimension does not match algebra");
  return detail::max_shifted_rank(g, F.matrix(), opts);
}

IntegrabilityVerdict is_integrable(const LieAlgebra& g, const TwoCochain& F,
                                   const IndexOptions& opts) {
  IntegrabilityVerdict v;
  v.dim = g.dim();
  v.index_report = cohomology_index(g, F, opts);
  v.lhs = Rational(v.dim - v.index_report.index, 2);
  v.integrable = v.lhs < 2;
  return v;
}

}  // namespace magflow
