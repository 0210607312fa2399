#include <doctest.h>

#include "quiverhh/cochain.hpp"
#include "quiverhh/errors.hpp"
#include "quiverhh/lie.hpp"
#include "support/corpus.hpp"

using namespace quiverhh;
using quiverhh::testing::named_example;
using quiverhh::testing::psi1_kernel_lie;
using quiverhh::testing::worked_example;

namespace {

LieAlgebraPresentation sl2() {
  LieAlgebraPresentation g({"e", "f", "h"});
  auto vec = [](std::size_t i, long c) {
    SparseVector v;
    v.add(i, c);
    return v;
  };
  g.set_bracket(0, 1, vec(2, 1));
  g.set_bracket(1, 0, vec(2, -1));
  g.set_bracket(2, 0, vec(0, 2));
  g.set_bracket(0, 2, vec(0, -2));
  g.set_bracket(2, 1, vec(1, -2));
  g.set_bracket(1, 2, vec(1, 2));
  return g;
}

LieAlgebraPresentation abelian(std::size_t d) { return LieAlgebraPresentation(std::vector<std::string>(d, "x")); }

SparseVector jacobiator(const LieAlgebraPresentation& g, std::size_t i, std::size_t j, std::size_t k) {
  const auto e = [](std::size_t n) { return SparseVector::unit(n); };
  return g.bracket(g.bracket(e(i), e(j)), e(k)) + g.bracket(g.bracket(e(j), e(k)), e(i)) +
         g.bracket(g.bracket(e(k), e(i)), e(j));
}

MonomialAlgebra two_classes() {
  return quiverhh::testing::build({{"1", "2", "3"},
                                   {{"a1", "1", "2"}, {"a2", "1", "2"}, {"c", "2", "3"}},
                                   {},
                                   true});
}

}  // namespace

TEST_CASE("bracket on arrow pairs") {
  const MonomialAlgebra A = named_example("loops-2").algebra;
  const ParallelPairSpace c1 = build_complex(A).c1;
  const Quiver& q = A.quiver();
  const Path x1 = q.path_from_names({"x1"}), x2 = q.path_from_names({"x2"});
  const SparseVector v = strametz_bracket({x1, x2}, {x2, x1}, A, c1);
  SparseVector expected;
  expected.add(*c1.index_of(x2, x2), 1);
  expected.add(*c1.index_of(x1, x1), -1);
  CHECK(v == expected);
  for (const auto& p : c1.pairs()) CHECK(strametz_bracket(p, p, A, c1).empty());
}

TEST_CASE("identity of a class commutes with pairs outside it") {
  const MonomialAlgebra A = two_classes();
  const ParallelPairSpace c1 = build_complex(A).c1;
  const Quiver& q = A.quiver();
  SparseVector id;
  for (const char* n : {"a1", "a2"}) id.add(*c1.index_of(q.path_from_names({n}), q.path_from_names({n})), 1);
  const Path c = q.path_from_names({"c"});
  CHECK(strametz_bracket(id, SparseVector::unit(*c1.index_of(c, c)), A, c1).empty());
}

TEST_CASE("derived series") {
  CHECK(derived_series(abelian(4)) == std::vector<std::size_t>{4, 0});
  CHECK(derived_series(sl2()) == std::vector<std::size_t>{3, 3});
  CHECK(derived_series(abelian(0)) == std::vector<std::size_t>{0});
}

TEST_CASE("Killing form, radical and center") {
  const LieAlgebraPresentation s = sl2();
  CHECK(rank(killing_form(s)) == 3);
  CHECK(radical(s).empty());
  CHECK(center(s).empty());
  CHECK(radical(abelian(3)).size() == 3);
  CHECK(center(abelian(3)).size() == 3);
  const LieInvariants inv = invariants(s);
  CHECK(inv.semisimple());
  CHECK(inv.reductive());
  CHECK_FALSE(inv.solvable());
  CHECK_FALSE(invariants(abelian(0)).semisimple());
}

TEST_CASE("antisymmetry and Jacobi checks detect broken tables") {
  LieAlgebraPresentation g = sl2();
  CHECK_FALSE(antisymmetry_violation(g).has_value());
  CHECK_FALSE(jacobi_violation(g).has_value());
  g.set_bracket(1, 0, SparseVector{});
  CHECK(antisymmetry_violation(g).has_value());
  LieAlgebraPresentation h({"x", "y", "z"});
  h.set_bracket(0, 1, SparseVector::unit(0));
  h.set_bracket(1, 0, SparseVector{} - SparseVector::unit(0));
  h.set_bracket(0, 2, SparseVector::unit(1));
  h.set_bracket(2, 0, SparseVector{} - SparseVector::unit(1));
  CHECK(jacobi_violation(h).has_value());
}

TEST_CASE("HH1 as a Lie algebra") {
  SUBCASE("loop") {
    const LieInvariants inv = invariants(hh1_lie(named_example("loop").algebra));
    CHECK(inv.dim == 1);
    CHECK(inv.derived == std::vector<std::size_t>{1, 0});
  }
  for (std::size_t r : {2, 3}) {
    CAPTURE(r);
    const LieInvariants inv = invariants(hh1_lie(named_example("loops-" + std::to_string(r)).algebra));
    CHECK(inv.dim == r * r);
    CHECK(inv.derived == std::vector<std::size_t>{r * r, r * r - 1, r * r - 1});
    CHECK(inv.radical_dim == 1);
    CHECK(inv.center_dim == 1);
    CHECK(inv.reductive());
  }
  for (std::size_t r : {2, 3}) {
    const LieInvariants inv = invariants(hh1_lie(named_example("kronecker-" + std::to_string(r)).algebra));
    CHECK(inv.dim == r * r - 1);
    CHECK(inv.radical_dim == 0);
    CHECK(inv.killing_rank == r * r - 1);
  }
}

TEST_CASE("classify") {
  for (std::size_t r : {2, 3}) {
    const DecompositionReport rep = classify(named_example("loops-" + std::to_string(r)).algebra);
    CHECK(rep.hypothesis == DecompositionReport::Hypothesis::RadicalSquareZero);
    REQUIRE(rep.semisimple_factors.size() == 1);
    CHECK(rep.semisimple_factors[0].size == r);
    CHECK(rep.computed.radical_dim == 1);
    CHECK(rep.semisimple_dim == r * r - 1);
    CHECK(rep.reductive);
    CHECK(rep.consistent());
  }
  {
    const DecompositionReport rep = classify(named_example("cycle-3").algebra);
    CHECK(rep.semisimple_factors.empty());
    CHECK(rep.computed.radical_dim == 1);
    CHECK(rep.chi == 1);
  }
  {
    const DecompositionReport rep = classify(worked_example({{"c", "d"}, {"c", "b", "a"}}));
    CHECK(rep.hypothesis == DecompositionReport::Hypothesis::TriangularCompleteMonomial);
    CHECK(rep.semisimple_factors.empty());
    CHECK(rep.predicted_radical_dim == std::optional<std::size_t>(2));
    CHECK(rep.computed.radical_dim == 2);
    CHECK(rep.R_dim == 1);
    CHECK(rep.solvable);
    CHECK(rep.consistent());
  }
  {
    const DecompositionReport rep = classify(worked_example({{"c", "b"}}));
    CHECK(rep.hypothesis == DecompositionReport::Hypothesis::Generic);
    CHECK_FALSE(rep.predicted_dim.has_value());
  }
}

TEST_CASE("semisimplicity verdict") {
  for (const char* name : {"kronecker-2", "kronecker-3"}) {
    const SemisimpleVerdict v = check_semisimple(named_example(name).algebra);
    CHECK(v.verdict);
    CHECK(v.killing_nondegenerate);
  }
  const SemisimpleVerdict rsz = check_semisimple(two_classes());
  CHECK(rsz.verdict);
  CHECK(rsz.agrees());
  const SemisimpleVerdict loops = check_semisimple(named_example("loops-3").algebra);
  CHECK_FALSE(loops.verdict);
  CHECK_FALSE(loops.qbar_tree);
  CHECK(loops.agrees());
}

TEST_CASE("vanishing verdict") {
  const VanishingVerdict k = vanishing_verdict(named_example("kronecker-2").algebra);
  CHECK(k.hypotheses_hold);
  CHECK(k.claimed_hh0 == 1);
  CHECK(k.claimed_hh1 == 3);
  const MonomialAlgebra line =
      quiverhh::testing::build({{"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}, {{"b", "a"}}, false});
  const VanishingVerdict l = vanishing_verdict(line);
  CHECK(l.hypotheses_hold);
  CHECK(l.claimed_hh1 == 0);
  CHECK(hh1(line).dimension() == 0);
  CHECK_FALSE(vanishing_verdict(named_example("loops-2").algebra).hypotheses_hold);
}

TEST_CASE("truncated bracket fails Jacobi outside ker psi1") {
  const MonomialAlgebra A = named_example("parallel-arrows-with-path").algebra;
  CHECK_FALSE(is_complete_monomial(A).holds);
  const LowDegreeComplex c = build_complex(A);
  const LieAlgebraPresentation full = cochain_lie(A, c.c1);
  CHECK_FALSE(antisymmetry_violation(full).has_value());
  CHECK(jacobi_violation(full).has_value());

  const Quiver& q = A.quiver();
  const auto p = [&](std::vector<std::string> x, std::vector<std::string> y) {
    return *c.c1.index_of(q.path_from_names(x), q.path_from_names(y));
  };
  const SparseVector j = jacobiator(full, p({"a"}, {"b"}), p({"b"}, {"a"}), p({"x"}, {"a", "c"}));
  INFO(c.c1.describe(j, q));
  CHECK(j == SparseVector{} - SparseVector::unit(p({"x"}, {"a", "c"})));

  const LieAlgebraPresentation ker = psi1_kernel_lie(A);
  CHECK(ker.dimension() == 6);
  CHECK_FALSE(jacobi_violation(ker).has_value());
  CHECK(invariants(hh1_lie(A)).dim == hh1(A).dimension());
}

TEST_CASE("Jacobi holds on all of k(Q1 || B) for complete monomial algebras") {
  for (const auto& e : quiverhh::testing::generate_corpus(21, 120)) {
    if (!is_complete_monomial(e.algebra).holds) continue;
    CAPTURE(e.name);
    // Deleting a loop can land on a single arrow, which completeness ignores.
    if (!graph_predicates(e.algebra.quiver()).has_loops) CHECK(build_psi1(e.algebra).is_zero());
    const LieAlgebraPresentation g = cochain_lie(e.algebra);
    CHECK_FALSE(antisymmetry_violation(g).has_value());
    CHECK_FALSE(jacobi_violation(g).has_value());
  }
}

TEST_CASE("structure of k(Q1 || Q1) and the length filtration") {
  for (const auto& e : quiverhh::testing::generate_corpus(22, 120)) {
    CAPTURE(e.name);
    const MonomialAlgebra& A = e.algebra;
    const LowDegreeComplex c = build_complex(A);
    const Quiver& q = A.quiver();
    const BarQuiver bq = bar_quiver(q);
    std::vector<std::size_t> arrow_pairs, long_pairs;
    for (std::size_t i = 0; i < c.c1.size(); ++i) {
      const std::size_t len = c.c1.pair(i).second.length();
      if (len == 1) arrow_pairs.push_back(i);
      if (len >= 2) long_pairs.push_back(i);
    }
    // Pairs from different classes commute; each class identity is central.
    for (std::size_t i : arrow_pairs)
      for (std::size_t j : arrow_pairs) {
        const auto cls = [&](std::size_t k) { return bq.class_of_arrow[c.c1.pair(k).first.arrow(0)]; };
        if (cls(i) != cls(j)) CHECK(strametz_bracket(c.c1.pair(i), c.c1.pair(j), A, c.c1).empty());
      }
    for (const ParallelClass& cl : bq.classes) {
      SparseVector id;
      for (ArrowId a : cl.arrows) id.add(*c.c1.index_of(q.arrow_path(a), q.arrow_path(a)), 1);
      for (std::size_t j : arrow_pairs)
        CHECK(strametz_bracket(id, SparseVector::unit(j), A, c.c1).empty());
    }
    // D0 image is central in k(Q1 || Q1) for radical square zero algebras.
    if (is_radical_square_zero(A)) {
      const RationalMatrix d0 = build_D0(A);
      const ParallelPairSpace q1q1 = space(PathSelector::arrows(), PathSelector::arrows(), A);
      for (std::size_t col = 0; col < d0.cols(); ++col) {
        SparseVector img;
        const SparseVector column = d0.column(col);
        for (const auto& [r, v] : column.entries())
          img.add(*c.c1.index_of(q1q1.pair(r).first, q1q1.pair(r).second), v);
        for (std::size_t j : arrow_pairs) CHECK(strametz_bracket(img, SparseVector::unit(j), A, c.c1).empty());
      }
    }
    // Without loops, pairs with a long path form an ideal whose derived series reaches 0.
    if (!graph_predicates(q).has_loops) {
      std::vector<SparseVector> R;
      for (std::size_t i : long_pairs) R.push_back(SparseVector::unit(i));
      for (std::size_t i = 0; i < c.c1.size(); ++i)
        for (std::size_t j : long_pairs) {
          const SparseVector b = strametz_bracket(c.c1.pair(i), c.c1.pair(j), A, c.c1);
          for (const auto& [k, v] : b.entries()) CHECK(c.c1.pair(k).second.length() >= 2);
        }
      if (!R.empty()) {
        const LieAlgebraPresentation g = cochain_lie(A, c.c1);
        CHECK(derived_series(g, R).back() == 0);
      }
    }
  }
}
