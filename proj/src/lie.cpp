#include "quiverhh/lie.hpp"

#include "quiverhh/errors.hpp"

namespace quiverhh {

LieAlgebraPresentation::LieAlgebraPresentation(std::vector<std::string> labels)
    : labels_(std::move(labels)), table_(labels_.size() * labels_.size()) {}

void LieAlgebraPresentation::set_bracket(std::size_t i, std::size_t j, SparseVector v) {
  const std::size_t n = dimension();
  if (i >= n || j >= n || v.extent() > n) throw DimensionMismatch("bracket outside the presentation");
  table_[i * n + j] = std::move(v);
}

const SparseVector& LieAlgebraPresentation::bracket(std::size_t i, std::size_t j) const {
  const std::size_t n = dimension();
  if (i >= n || j >= n) throw DimensionMismatch("bracket index outside the presentation");
  return table_[i * n + j];
}

SparseVector LieAlgebraPresentation::bracket(const SparseVector& x, const SparseVector& y) const {
  SparseVector out;
  for (const auto& [i, a] : x.entries())
    for (const auto& [j, b] : y.entries()) out.add_scaled(bracket(i, j), a * b);
  return out;
}

RationalMatrix LieAlgebraPresentation::ad(const SparseVector& x) const {
  const std::size_t n = dimension();
  RationalMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const SparseVector col = bracket(x, SparseVector::unit(j));
    for (const auto& [k, v] : col.entries()) m.add(k, j, v);
  }
  return m;
}

std::optional<BasisTriple> antisymmetry_violation(const LieAlgebraPresentation& g) {
  const std::size_t n = g.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (!(g.bracket(i, j) + g.bracket(j, i)).empty()) return BasisTriple{i, j, j};
  return std::nullopt;
}

std::optional<BasisTriple> jacobi_violation(const LieAlgebraPresentation& g) {
  const std::size_t n = g.dimension();
  auto u = [](std::size_t i) { return SparseVector::unit(i); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        SparseVector s = g.bracket(u(i), g.bracket(j, k));
        s.add_scaled(g.bracket(u(j), g.bracket(k, i)), 1);
        s.add_scaled(g.bracket(u(k), g.bracket(i, j)), 1);
        if (!s.empty()) return BasisTriple{i, j, k};
      }
  return std::nullopt;
}

SparseVector strametz_bracket(const std::pair<Path, Path>& x, const std::pair<Path, Path>& y,
                              const MonomialAlgebra& A, const ParallelPairSpace& c1) {
  const auto& [a, alpha] = x;
  const auto& [b, beta] = y;
  SparseVector out;
  auto put = [&](const Path& arrow, const AlgebraElement& e, const Rational& sign) {
    for (const auto& [p, c] : e.terms()) {
      auto idx = c1.index_of(arrow, p);
      if (!idx) throw DimensionMismatch("bracket produced a pair outside k(Q1||B)");
      out.add(*idx, sign * c);
    }
  };
  put(b, replace_all(beta, a.arrow(0), alpha, A), 1);
  put(a, replace_all(alpha, b.arrow(0), beta, A), -1);
  return out;
}

SparseVector strametz_bracket(const SparseVector& x, const SparseVector& y, const MonomialAlgebra& A,
                              const ParallelPairSpace& c1) {
  SparseVector out;
  for (const auto& [i, s] : x.entries())
    for (const auto& [j, t] : y.entries()) out.add_scaled(strametz_bracket(c1.pair(i), c1.pair(j), A, c1), s * t);
  return out;
}

LieAlgebraPresentation cochain_lie(const MonomialAlgebra& A, const ParallelPairSpace& c1) {
  std::vector<std::string> labels;
  for (const auto& [x, y] : c1.pairs())
    labels.push_back("(" + A.quiver().format(x) + "," + A.quiver().format(y) + ")");
  LieAlgebraPresentation g(std::move(labels));
  for (std::size_t i = 0; i < c1.size(); ++i)
    for (std::size_t j = 0; j < c1.size(); ++j) g.set_bracket(i, j, strametz_bracket(c1.pair(i), c1.pair(j), A, c1));
  return g;
}

LieAlgebraPresentation cochain_lie(const MonomialAlgebra& A) {
  return cochain_lie(A, space(PathSelector::arrows(), PathSelector::basis(), A));
}

namespace {

// Coordinates of v on the tail block of [head..., tail...], dropping head.
SparseVector tail_coordinates(const SpanSolver& solver, std::size_t head, const SparseVector& v) {
  auto coords = solver.coordinates(v);
  if (!coords) throw QuotientNotClosed("bracket outside the spanned subspace");
  SparseVector out;
  for (const auto& [i, c] : coords->entries())
    if (i >= head) out.add(i - head, c);
  return out;
}

std::vector<SparseVector> units(std::size_t n) {
  std::vector<SparseVector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(SparseVector::unit(i));
  return out;
}

bool spans_contain(const std::vector<SparseVector>& basis, const std::vector<SparseVector>& vs) {
  Echelon e;
  for (const auto& b : basis) e.insert(b);
  for (const auto& v : vs)
    if (!e.contains(v)) return false;
  return true;
}

}  // namespace

LieAlgebraPresentation subquotient_lie(const SubquotientBasis& sq, const BracketFn& bracket,
                                       std::vector<std::string> labels) {
  if (labels.size() != sq.quotient_reps.size()) throw DimensionMismatch("label count differs from quotient dimension");
  Echelon ker;
  for (const auto& v : sq.kernel_basis) ker.insert(v);
  Echelon im;
  for (const auto& v : sq.image_basis) im.insert(v);

  for (const auto& k : sq.kernel_basis)
    for (const auto& m : sq.image_basis)
      if (!im.contains(bracket(k, m))) throw QuotientNotClosed("bracket of a cycle with a boundary is not a boundary");

  std::vector<SparseVector> frame = sq.image_basis;
  frame.insert(frame.end(), sq.quotient_reps.begin(), sq.quotient_reps.end());
  SpanSolver solver(frame);
  const std::size_t head = sq.image_basis.size();

  const std::size_t n = sq.quotient_reps.size();
  LieAlgebraPresentation g(std::move(labels));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseVector v = bracket(sq.quotient_reps[i], sq.quotient_reps[j]);
      if (!ker.contains(v)) throw QuotientNotClosed("bracket of two cycles is not a cycle");
      g.set_bracket(i, j, tail_coordinates(solver, head, v));
    }
  return g;
}

LieAlgebraPresentation hh1_lie(const MonomialAlgebra& A) {
  LowDegreeComplex c = build_complex(A);
  SubquotientBasis sq = quotient(kernel(c.psi1), image(c.psi0), c.c1.size());
  std::vector<std::string> labels;
  for (const auto& r : sq.quotient_reps) labels.push_back(c.c1.describe(r, A.quiver()));
  const ParallelPairSpace& c1 = c.c1;
  return subquotient_lie(
      sq, [&](const SparseVector& x, const SparseVector& y) { return strametz_bracket(x, y, A, c1); },
      std::move(labels));
}

std::vector<SparseVector> span_basis(const std::vector<SparseVector>& family) {
  Echelon e;
  for (const auto& v : family) e.insert(v);
  return e.reduced_basis();
}

std::vector<SparseVector> bracket_span(const LieAlgebraPresentation& g, const std::vector<SparseVector>& u,
                                       const std::vector<SparseVector>& v) {
  Echelon e;
  for (const auto& x : u)
    for (const auto& y : v) e.insert(g.bracket(x, y));
  return e.reduced_basis();
}

std::vector<std::size_t> derived_series(const LieAlgebraPresentation& g, const std::vector<SparseVector>& sub) {
  std::vector<SparseVector> cur = span_basis(sub);
  std::vector<std::size_t> dims{cur.size()};
  while (!cur.empty()) {
    cur = bracket_span(g, cur, cur);
    const bool repeat = cur.size() == dims.back();
    dims.push_back(cur.size());
    if (repeat) break;
  }
  return dims;
}

std::vector<std::size_t> derived_series(const LieAlgebraPresentation& g) {
  return derived_series(g, units(g.dimension()));
}

RationalMatrix killing_form(const LieAlgebraPresentation& g) {
  const std::size_t n = g.dimension();
  RationalMatrix k(n, n);
  // kappa(i, j) = sum_m sum_l c[i][m]_l * c[j][l]_m
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational s = 0;
      for (std::size_t m = 0; m < n; ++m)
        for (const auto& [l, v] : g.bracket(i, m).entries()) s += v * g.bracket(j, l).at(m);
      if (s != 0) {
        k.add(i, j, s);
        if (i != j) k.add(j, i, s);
      }
    }
  return k;
}

LieAlgebraPresentation quotient_lie(const LieAlgebraPresentation& g, const std::vector<SparseVector>& ideal) {
  const std::size_t n = g.dimension();
  std::vector<SparseVector> base = span_basis(ideal);
  Echelon e;
  for (const auto& v : base) e.insert(v);
  std::vector<SparseVector> reps;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    if (e.insert(SparseVector::unit(i))) {
      reps.push_back(SparseVector::unit(i));
      labels.push_back(g.labels()[i]);
    }
  std::vector<SparseVector> frame = base;
  frame.insert(frame.end(), reps.begin(), reps.end());
  SpanSolver solver(frame);
  LieAlgebraPresentation q(std::move(labels));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j)
      q.set_bracket(i, j, tail_coordinates(solver, base.size(), g.bracket(reps[i], reps[j])));
  return q;
}

std::vector<SparseVector> radical(const LieAlgebraPresentation& g) {
  const std::size_t n = g.dimension();
  const auto all = units(n);
  const auto derived = bracket_span(g, all, all);
  const RationalMatrix kappa = killing_form(g);
  RationalMatrix m(derived.size(), n);
  for (std::size_t r = 0; r < derived.size(); ++r) {
    const SparseVector row = kappa.apply(derived[r]);
    for (const auto& [c, v] : row.entries()) m.add(r, c, v);
  }
  std::vector<SparseVector> rad = span_basis(kernel(m));

  if (!spans_contain(rad, bracket_span(g, all, rad))) throw RadicalNotSolvable("Killing radical is not an ideal");
  if (derived_series(g, rad).back() != 0) throw RadicalNotSolvable("Killing radical is not solvable");
  LieAlgebraPresentation semi = quotient_lie(g, rad);
  if (rank(killing_form(semi)) != semi.dimension())
    throw RadicalNotSolvable("quotient by the radical has a degenerate Killing form");
  return rad;
}

std::vector<SparseVector> center(const LieAlgebraPresentation& g) {
  const std::size_t n = g.dimension();
  // Row (j, k): coefficient of b_k in [x, b_j].
  RationalMatrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, v] : g.bracket(i, j).entries()) m.add(j * n + k, i, v);
  return kernel(m);
}

LieInvariants invariants(const LieAlgebraPresentation& g) {
  LieInvariants inv;
  inv.dim = g.dimension();
  inv.derived = derived_series(g);
  const auto rad = radical(g);
  inv.radical_dim = rad.size();
  inv.radical_abelian = bracket_span(g, rad, rad).empty();
  inv.center_dim = center(g).size();
  inv.killing_rank = rank(killing_form(g));
  return inv;
}

std::string hypothesis_name(DecompositionReport::Hypothesis h) {
  switch (h) {
    case DecompositionReport::Hypothesis::RadicalSquareZero:
      return "radical-square-zero";
    case DecompositionReport::Hypothesis::TriangularCompleteMonomial:
      return "triangular-complete-monomial";
    case DecompositionReport::Hypothesis::Generic:
      break;
  }
  return "generic";
}

std::vector<SemisimpleFactor> factors_from_quiver(const Quiver& q) {
  const BarQuiver bq = bar_quiver(q);
  std::vector<SemisimpleFactor> out;
  for (std::size_t c : bq.multiple_classes()) {
    SemisimpleFactor f;
    f.size = bq.classes[c].size();
    for (ArrowId a : bq.classes[c].arrows) f.arrows.push_back(q.arrow(a).name);
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

std::size_t factor_dim(const std::vector<SemisimpleFactor>& fs) {
  std::size_t d = 0;
  for (const auto& f : fs) d += f.size * f.size - 1;
  return d;
}

}  // namespace

DecompositionReport classify(const MonomialAlgebra& A) {
  DecompositionReport r;
  r.chi = euler_characteristic(bar_quiver(A.quiver()));
  const ParallelPairSpace c1 = space(PathSelector::arrows(), PathSelector::basis(), A);
  for (const auto& [a, p] : c1.pairs())
    if (p.length() >= 2) ++r.R_dim;

  r.computed = invariants(hh1_lie(A));
  r.semisimple_dim = r.computed.dim - r.computed.radical_dim;
  r.radical_abelian = r.computed.radical_abelian;
  r.reductive = r.computed.reductive();
  r.semisimple = r.computed.semisimple();
  r.solvable = r.computed.solvable();

  if (is_radical_square_zero(A)) {
    r.hypothesis = DecompositionReport::Hypothesis::RadicalSquareZero;
  } else if (is_triangular(A) && is_complete_monomial(A).holds) {
    r.hypothesis = DecompositionReport::Hypothesis::TriangularCompleteMonomial;
  } else {
    return r;
  }

  r.semisimple_factors = factors_from_quiver(A.quiver());
  const std::size_t rad = static_cast<std::size_t>(r.chi) + r.R_dim;
  r.predicted_radical_dim = rad;
  r.predicted_dim = factor_dim(r.semisimple_factors) + rad;

  auto note = [&](const std::string& what, std::size_t predicted, std::size_t computed) {
    if (predicted != computed)
      r.discrepancies.push_back(what + ": predicted " + std::to_string(predicted) + ", computed " +
                                std::to_string(computed));
  };
  note("dimension", *r.predicted_dim, r.computed.dim);
  note("radical dimension", rad, r.computed.radical_dim);
  note("semisimple dimension", factor_dim(r.semisimple_factors), r.semisimple_dim);
  if (r.hypothesis == DecompositionReport::Hypothesis::RadicalSquareZero) {
    if (!r.radical_abelian) r.discrepancies.push_back("radical is not abelian");
    if (!r.reductive) r.discrepancies.push_back("not reductive");
  }
  return r;
}

SemisimpleVerdict check_semisimple(const MonomialAlgebra& A) {
  SemisimpleVerdict v;
  const BarQuiver bq = bar_quiver(A.quiver());
  v.closed_parallel = is_closed_under_parallel_paths(A);
  v.qbar_tree = bq.underlying_tree();
  v.s_nonempty = !bq.multiple_classes().empty();
  v.verdict = v.closed_parallel.holds && v.qbar_tree && v.s_nonempty;
  const LieAlgebraPresentation g = hh1_lie(A);
  v.hh1_dim = g.dimension();
  v.killing_nondegenerate = v.hh1_dim > 0 && rank(killing_form(g)) == v.hh1_dim;
  return v;
}

VanishingVerdict vanishing_verdict(const MonomialAlgebra& A) {
  VanishingVerdict v;
  v.qbar_tree = bar_quiver(A.quiver()).underlying_tree();
  v.closed_parallel = is_closed_under_parallel_paths(A).holds;
  v.hypotheses_hold = v.qbar_tree && v.closed_parallel;
  if (!v.hypotheses_hold) return v;
  v.factors = factors_from_quiver(A.quiver());
  v.claimed_hh0 = 1;
  v.claimed_hh1 = factor_dim(v.factors);
  return v;
}

}  // namespace quiverhh
