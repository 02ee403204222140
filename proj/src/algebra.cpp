#include "magflow/algebra.hpp"

#include "magflow/errors.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace magflow {

LieAlgebra::LieAlgebra(std::string name, int dim, int base_index)
    : name_(std::move(name)), dim_(dim), base_(base_index) {
  if (dim < 1) throw ParseError("algebra dimension must be positive");
  if (base_ != 0 && base_ != 1)
    throw ParseError("algebra base index must be 0 or 1");
}

void LieAlgebra::set_bracket(int a, int b, std::vector<BracketTerm> terms) {
  if (a >= b)
    throw ParseError("bracket entry requires a < b, got (" +
                     std::to_string(a) + "," + std::to_string(b) + ")");
  if (a < base_ || b > max_index())
    throw ParseError("bracket index out of range: (" + std::to_string(a) +
                     "," + std::to_string(b) + ")");
  std::map<int, Rational> acc;
  for (const BracketTerm& t : terms) {
    if (t.c < base_ || t.c > max_index())
      throw ParseError("bracket target index out of range: " +
                       std::to_string(t.c));
    if (t.v != 0) acc[t.c] += t.v;
  }
  for (auto it = acc.begin(); it != acc.end();)
    it = (it->second == 0) ? acc.erase(it) : std::next(it);
  if (acc.empty())
    brackets_.erase({a, b});
  else
    brackets_[{a, b}] = std::move(acc);
}

Rational LieAlgebra::structure_constant(int a, int b, int c) const {
  if (a == b) return 0;
  bool flip = a > b;
  if (flip) std::swap(a, b);
  auto it = brackets_.find({a, b});
  if (it == brackets_.end()) return 0;
  auto jt = it->second.find(c);
  if (jt == it->second.end()) return 0;
  return flip ? Rational(-jt->second) : jt->second;
}

std::vector<LieAlgebra::Entry> LieAlgebra::entries() const {
  std::vector<Entry> out;
  for (const auto& [key, terms] : brackets_) {
    Entry e{key.first, key.second, {}};
    for (const auto& [c, v] : terms) e.terms.push_back({c, v});
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<JacobiViolation> validate_algebra(const LieAlgebra& g) {
  std::vector<JacobiViolation> out;
  int lo = g.base_index(), hi = g.max_index();
  for (int a = lo; a <= hi; ++a)
    for (int b = a + 1; b <= hi; ++b)
      for (int c = b + 1; c <= hi; ++c)
        for (int e = lo; e <= hi; ++e) {
          Rational r = 0;
          for (int d = lo; d <= hi; ++d) {
            r += g.structure_constant(a, b, d) * g.structure_constant(d, c, e);
            r += g.structure_constant(b, c, d) * g.structure_constant(d, a, e);
            r += g.structure_constant(c, a, d) * g.structure_constant(d, b, e);
          }
          if (r != 0) out.push_back({a, b, c, e, r});
        }
  return out;
}

RatMat kirillov_form(const LieAlgebra& g, const Covector& lambda) {
  int n = g.dim(), lo = g.base_index();
  if (static_cast<int>(lambda.components.size()) != n)
    throw ParseError("covector size does not match algebra dimension");
  RatMat A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational v = 0;
      for (int k = 0; k < n; ++k) {
        const Rational& c = g.structure_constant(lo + i, lo + j, lo + k);
        if (c != 0 && lambda.components[k] != 0) v += c * lambda.components[k];
      }
      A.at(i, j) = v;
      A.at(j, i) = -v;
    }
  return A;
}

std::vector<RatVec> annihilator(const LieAlgebra& g, const Covector& lambda) {
  return null_space(kirillov_form(g, lambda));
}

namespace detail {

IndexReport max_shifted_rank(const LieAlgebra& g, const RatMat& S,
                             const IndexOptions& opts) {
  int n = g.dim(), lo = g.base_index();
  if (opts.trials < 1) throw std::invalid_argument("trials must be >= 1");

  // A(lambda) entries are linear in lambda; precompute the coefficient of
  // lambda_k in slot (i, j) once so each trial is a cheap evaluation.
  std::vector<RatMat> coef(n, RatMat(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational c = g.structure_constant(lo + i, lo + j, lo + k);
        coef[k].at(i, j) = c;
        coef[k].at(j, i) = -c;
      }

  auto rank_at = [&](const RatVec& lambda) {
    RatMat m = S;
    for (int k = 0; k < n; ++k) {
      if (lambda[k] == 0) continue;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (coef[k].at(i, j) != 0) m.at(i, j) += coef[k].at(i, j) * lambda[k];
    }
    return static_cast<int>(rank(m));
  };

  IndexReport rep;
  rep.dim = n;
  rep.trials = opts.trials;
  rep.seed = opts.seed;

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<long> dist(-opts.range, opts.range);
  int best = 0;
  for (int t = 0; t < opts.trials; ++t) {
    RatVec lambda(n);
    for (int k = 0; k < n; ++k) lambda[k] = Rational(dist(rng));
    best = std::max(best, rank_at(lambda));
  }

  // Failure = every random covector landed in the zero set of the maximal
  // nonvanishing Pfaffian minor, a polynomial of total degree <= floor(n/2).
  double per_trial =
      static_cast<double>(n / 2) / (2.0 * static_cast<double>(opts.range) + 1.0);
  rep.log2_failure_bound = opts.trials * std::log2(per_trial);

  if (opts.certify) {
    if (n > 6)
      throw std::invalid_argument(
          "exact index certification supported for dim <= 6 only");
    // Every attainable rank 2r is witnessed by a principal Pfaffian minor
    // with per-variable degree <= r <= floor(n/2), so the maximum over
    // the integer grid {0..floor(n/2)}^n is the true maximum.
    int R = n / 2;
    RatVec lambda(n, Rational(0));
    int certified_best = 0;
    while (true) {
      certified_best = std::max(certified_best, rank_at(lambda));
      int k = 0;
      while (k < n && lambda[k] == R) lambda[k++] = 0;
      if (k == n) break;
      lambda[k] += 1;
    }
    if (certified_best < best)
      throw std::logic_error("randomized rank exceeded certified maximum");
    best = certified_best;
    rep.certified = true;
  }

  rep.max_rank = best;
  rep.index = n - best;
  if ((n - rep.index) % 2 != 0)
    throw std::logic_error("skew rank parity violated");
  return rep;
}

}  // namespace detail

IndexReport algebra_index(const LieAlgebra& g, const IndexOptions& opts) {
  return detail::max_shifted_rank(g, RatMat(g.dim(), g.dim()), opts);
}

}  // namespace magflow
