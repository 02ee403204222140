#include <doctest.h>

#include "magflow/algebra.hpp"
#include "magflow/catalog.hpp"
#include "magflow/models.hpp"

using namespace magflow;

namespace {

LieAlgebra catalog_algebra(const std::string& id, const ParamMap& params = {}) {
  for (const auto& e : catalog_entries())
    if (e.id == id) return e.build(params);
  throw std::runtime_error("no catalog entry " + id);
}

}  // namespace

TEST_CASE("structure constants: antisymmetry and setter semantics") {
  LieAlgebra g("t", 3);
  g.set_bracket(1, 2, {{3, Rational(2)}});
  CHECK(g.structure_constant(1, 2, 3) == Rational(2));
  CHECK(g.structure_constant(2, 1, 3) == Rational(-2));
  CHECK(g.structure_constant(1, 2, 1) == Rational(0));
  CHECK(g.structure_constant(1, 1, 3) == Rational(0));

  // a second call replaces the stored bracket
  g.set_bracket(1, 2, {{3, Rational(5)}});
  CHECK(g.structure_constant(1, 2, 3) == Rational(5));

  // terms within one call accumulate; a zero total erases the entry
  g.set_bracket(1, 2, {{3, Rational(2)}, {3, Rational(-2)}});
  CHECK(g.structure_constant(1, 2, 3) == Rational(0));
  CHECK(g.entries().empty());

  CHECK_THROWS(g.set_bracket(2, 2, {{3, Rational(1)}}));
  CHECK_THROWS(g.set_bracket(2, 1, {{3, Rational(1)}}));
  CHECK_THROWS(g.set_bracket(1, 2, {{5, Rational(1)}}));
}

TEST_CASE("Jacobi identity: valid algebras pass, a corrupted table fails") {
  CHECK(validate_algebra(g7_algebra()).empty());
  CHECK(validate_algebra(torus_algebra()).empty());
  for (const char* id : {"g0", "g2", "g4", "g5", "g6", "g8", "g9", "g14", "g15"})
    CHECK(validate_algebra(catalog_algebra(id)).empty());
  for (const char* a : {"-2", "-1", "0", "1/2", "1", "2"}) {
    ParamMap p{{"a", *parse_rational(a)}};
    CHECK(validate_algebra(catalog_algebra("g1", p)).empty());
    CHECK(validate_algebra(catalog_algebra("g3", p)).empty());
    CHECK(validate_algebra(catalog_algebra("g10", p)).empty());
  }

  // [e1,e2] = e4, [e1,e4] = e3, [e2,e4] = e4 breaks Jacobi on (1,2,4):
  // [[1,2],4] + [[2,4],1] + [[4,1],2] = [e4,e4] + [e4,e1] + [-e3,e2] = -e3.
  LieAlgebra bad("bad", 4);
  bad.set_bracket(1, 2, {{4, Rational(1)}});
  bad.set_bracket(1, 4, {{3, Rational(1)}});
  bad.set_bracket(2, 4, {{4, Rational(1)}});
  auto viols = validate_algebra(bad);
  REQUIRE(viols.size() == 1);
  CHECK(viols[0].a == 1);
  CHECK(viols[0].b == 2);
  CHECK(viols[0].c == 4);
  CHECK(viols[0].e == 3);
  CHECK(viols[0].residual == Rational(-1));
}

TEST_CASE("Kirillov form and annihilator on the 2-step solvable example") {
  LieAlgebra g = g7_algebra();
  Covector lam{{1, 0, 0, 1}};  // lambda = e^1 + e^4
  RatMat A = kirillov_form(g, lam);
  // A_ab = sum_c C^c_ab lambda_c: only [e1,e4] = e4, [e2,e4] = e4 contribute.
  RatMat expected(4, 4);
  expected.at(0, 3) = 1;
  expected.at(3, 0) = -1;
  expected.at(1, 3) = 1;
  expected.at(3, 1) = -1;
  CHECK(A == expected);

  auto ann = annihilator(g, lam);
  REQUIRE(ann.size() == 2);  // x4 = 0, x1 = -x2
  for (const auto& v : ann) CHECK(is_zero(mat_vec(A, v)));
  CHECK(ann[0] == RatVec{-1, 1, 0, 0});
  CHECK(ann[1] == RatVec{0, 0, 1, 0});
}

TEST_CASE("algebra index: frozen values across the catalog") {
  IndexOptions certified;
  certified.certify = true;

  auto idx = [&](const LieAlgebra& g) {
    IndexReport r = algebra_index(g, certified);
    CHECK(r.certified);
    CHECK((r.dim - r.index) % 2 == 0);  // coadjoint orbits are symplectic
    CHECK(r.log2_failure_bound < -40.0);
    return r.index;
  };

  CHECK(idx(LieAlgebra("ab4", 4)) == 4);   // abelian: every covector central
  CHECK(idx(g7_algebra()) == 2);
  CHECK(idx(torus_algebra()) == 2);
  CHECK(idx(catalog_algebra("g14")) == 2);  // sl(2) Casimir + central e4
  CHECK(idx(catalog_algebra("g15")) == 2);  // so(3) Casimir + central e4

  LieAlgebra so3("so3", 3);
  so3.set_bracket(1, 2, {{3, Rational(1)}});
  so3.set_bracket(1, 3, {{2, Rational(-1)}});
  so3.set_bracket(2, 3, {{1, Rational(1)}});
  CHECK(idx(so3) == 1);

  // generic diagonal action has full-rank form: index 0
  CHECK(idx(catalog_algebra("g1", {{"a", Rational(2)}})) == 0);
}

TEST_CASE("randomized and certified index agree at default settings") {
  IndexOptions rand_only;  // seed 42, 8 trials
  IndexOptions certified = rand_only;
  certified.certify = true;
  for (const char* id : {"g0", "g2", "g4", "g5", "g6", "g7", "g8", "g9",
                         "g14", "g15"}) {
    LieAlgebra g = catalog_algebra(id);
    CHECK(algebra_index(g, rand_only).index ==
          algebra_index(g, certified).index);
  }
}

TEST_CASE("certification refuses dimensions above the grid bound") {
  LieAlgebra big("big", 7);
  IndexOptions opts;
  opts.certify = true;
  CHECK_THROWS(algebra_index(big, opts));
}
