#include "quiverhh/cochain.hpp"

#include <algorithm>

#include "quiverhh/errors.hpp"

namespace quiverhh {

std::vector<Path> select_paths(PathSelector sel, const MonomialAlgebra& A) {
  const Quiver& q = A.quiver();
  std::vector<Path> out;
  switch (sel.kind) {
    case PathSelector::Kind::Vertices:
      for (VertexId v = 0; v < q.vertex_count(); ++v) out.push_back(Path::trivial(v));
      break;
    case PathSelector::Kind::Arrows:
      for (ArrowId a = 0; a < q.arrow_count(); ++a) out.push_back(q.arrow_path(a));
      break;
    case PathSelector::Kind::Relations:
      out = A.relations().paths();
      break;
    case PathSelector::Kind::Basis:
      out = A.basis();
      break;
    case PathSelector::Kind::BasisOfLength:
      for (const Path& p : A.basis())
        if (p.length() == sel.length) out.push_back(p);
      break;
  }
  return out;
}

ParallelPairSpace::ParallelPairSpace(std::vector<std::pair<Path, Path>> pairs) : pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (!parallel(pairs_[i].first, pairs_[i].second))
      throw DimensionMismatch("parallel pair space given a non-parallel pair");
    if (!index_.emplace(pairs_[i], i).second) throw DimensionMismatch("duplicate pair in parallel pair space");
  }
}

std::optional<std::size_t> ParallelPairSpace::index_of(const Path& x, const Path& y) const {
  auto it = index_.find({x, y});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string ParallelPairSpace::describe(const SparseVector& v, const Quiver& q) const {
  if (v.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : v.entries()) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag);
    const auto& [x, y] = pairs_.at(i);
    out += "(" + q.format(x) + "," + q.format(y) + ")";
    first = false;
  }
  return out;
}

ParallelPairSpace space(PathSelector x, PathSelector y, const MonomialAlgebra& A) {
  auto xs = select_paths(x, A);
  auto ys = select_paths(y, A);
  std::vector<std::pair<Path, Path>> pairs;
  for (const Path& p : xs)
    for (const Path& r : ys)
      if (parallel(p, r)) pairs.emplace_back(p, r);
  return ParallelPairSpace(std::move(pairs));
}

namespace {

std::size_t must_index(const ParallelPairSpace& s, const Path& x, const Path& y) {
  auto i = s.index_of(x, y);
  if (!i) throw DimensionMismatch("pair missing from cochain basis");
  return *i;
}

RationalMatrix psi0_on(const MonomialAlgebra& A, const ParallelPairSpace& c0, const ParallelPairSpace& c1) {
  const Quiver& q = A.quiver();
  RationalMatrix m(c1.size(), c0.size());
  for (std::size_t col = 0; col < c0.size(); ++col) {
    const auto& [e, gamma] = c0.pair(col);
    const VertexId v = e.source();
    for (ArrowId a : q.arrows_from(v)) {
      Path ap = q.arrow_path(a);
      if (auto ag = compose(ap, gamma); ag && A.in_basis(*ag)) m.add(must_index(c1, ap, *ag), col, 1);
    }
    for (ArrowId a : q.arrows_into(v)) {
      Path ap = q.arrow_path(a);
      if (auto ga = compose(gamma, ap); ga && A.in_basis(*ga)) m.add(must_index(c1, ap, *ga), col, -1);
    }
  }
  return m;
}

RationalMatrix psi1_on(const MonomialAlgebra& A, const ParallelPairSpace& c1, const ParallelPairSpace& c2) {
  RationalMatrix m(c2.size(), c1.size());
  for (std::size_t col = 0; col < c1.size(); ++col) {
    const auto& [a, gamma] = c1.pair(col);
    for (const Path& p : A.relations().paths())
      for (const PairTerm& t : replace_all_pairs(p, a.arrow(0), gamma, A))
        m.add(must_index(c2, t.first, t.second), col, t.coefficient);
  }
  return m;
}

void require_radical_square_zero(const MonomialAlgebra& A) {
  if (!is_radical_square_zero(A)) throw NotRadicalSquareZero("relations are not all paths of length two");
}

}  // namespace

RationalMatrix build_psi0(const MonomialAlgebra& A) {
  return psi0_on(A, space(PathSelector::vertices(), PathSelector::basis(), A),
                 space(PathSelector::arrows(), PathSelector::basis(), A));
}

RationalMatrix build_psi1(const MonomialAlgebra& A) {
  return psi1_on(A, space(PathSelector::arrows(), PathSelector::basis(), A),
                 space(PathSelector::relations(), PathSelector::basis(), A));
}

LowDegreeComplex build_complex(const MonomialAlgebra& A) {
  LowDegreeComplex c;
  c.c0 = space(PathSelector::vertices(), PathSelector::basis(), A);
  c.c1 = space(PathSelector::arrows(), PathSelector::basis(), A);
  c.c2 = space(PathSelector::relations(), PathSelector::basis(), A);
  c.psi0 = psi0_on(A, c.c0, c.c1);
  c.psi1 = psi1_on(A, c.c1, c.c2);
  return c;
}

RationalMatrix build_D0(const MonomialAlgebra& A) {
  require_radical_square_zero(A);
  const Quiver& q = A.quiver();
  auto dom = space(PathSelector::vertices(), PathSelector::vertices(), A);
  auto cod = space(PathSelector::arrows(), PathSelector::arrows(), A);
  RationalMatrix m(cod.size(), dom.size());
  for (std::size_t col = 0; col < dom.size(); ++col) {
    VertexId e = dom.pair(col).first.source();
    for (ArrowId a : q.arrows_from(e)) m.add(must_index(cod, q.arrow_path(a), q.arrow_path(a)), col, 1);
    for (ArrowId a : q.arrows_into(e)) m.add(must_index(cod, q.arrow_path(a), q.arrow_path(a)), col, -1);
  }
  return m;
}

RationalMatrix build_D1(const MonomialAlgebra& A) {
  require_radical_square_zero(A);
  const Quiver& q = A.quiver();
  auto dom = space(PathSelector::arrows(), PathSelector::vertices(), A);
  auto cod = space(PathSelector::relations(), PathSelector::arrows(), A);
  RationalMatrix m(cod.size(), dom.size());
  for (std::size_t col = 0; col < dom.size(); ++col) {
    const Path& a = dom.pair(col).first;  // a loop at e
    const VertexId e = a.source();
    for (ArrowId b : q.arrows_from(e)) {
      Path bp = q.arrow_path(b);
      m.add(must_index(cod, *compose(bp, a), bp), col, 1);
    }
    for (ArrowId b : q.arrows_into(e)) {
      Path bp = q.arrow_path(b);
      m.add(must_index(cod, *compose(a, bp), bp), col, 1);
    }
  }
  return m;
}

SubquotientBasis hh0(const MonomialAlgebra& A) {
  RationalMatrix psi0 = build_psi0(A);
  return quotient(kernel(psi0), {}, psi0.cols());
}

SubquotientBasis hh1(const MonomialAlgebra& A) {
  LowDegreeComplex c = build_complex(A);
  return quotient(kernel(c.psi1), image(c.psi0), c.c1.size());
}

}  // namespace quiverhh
