#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quiverhh/algebra.hpp"
#include "quiverhh/linalg.hpp"

namespace quiverhh {

// Which family of paths a side of a parallel-pair space draws from.
struct PathSelector {
  enum class Kind { Vertices, Arrows, Relations, Basis, BasisOfLength };
  Kind kind = Kind::Basis;
  std::size_t length = 0;  // only for BasisOfLength

  static PathSelector vertices() { return {Kind::Vertices, 0}; }
  static PathSelector arrows() { return {Kind::Arrows, 0}; }
  static PathSelector relations() { return {Kind::Relations, 0}; }
  static PathSelector basis() { return {Kind::Basis, 0}; }
  static PathSelector basis_of_length(std::size_t n) { return {Kind::BasisOfLength, n}; }
};

std::vector<Path> select_paths(PathSelector sel, const MonomialAlgebra& A);

// Basis of k(X || Y): pairs (x, y) with x in X, y in Y and x parallel to y,
// ordered by x then y.
class ParallelPairSpace {
 public:
  ParallelPairSpace() = default;
  explicit ParallelPairSpace(std::vector<std::pair<Path, Path>> pairs);

  std::size_t size() const { return pairs_.size(); }
  const std::pair<Path, Path>& pair(std::size_t i) const { return pairs_.at(i); }
  const std::vector<std::pair<Path, Path>>& pairs() const { return pairs_; }
  std::optional<std::size_t> index_of(const Path& x, const Path& y) const;

  // Human-readable linear combination such as "(a,a) - 2(b,ba)".
  std::string describe(const SparseVector& v, const Quiver& q) const;

 private:
  std::vector<std::pair<Path, Path>> pairs_;
  std::map<std::pair<Path, Path>, std::size_t> index_;
};

ParallelPairSpace space(PathSelector x, PathSelector y, const MonomialAlgebra& A);

// 0 -> k(Q0||B) -psi0-> k(Q1||B) -psi1-> k(Z||B)
struct LowDegreeComplex {
  ParallelPairSpace c0;
  ParallelPairSpace c1;
  ParallelPairSpace c2;
  RationalMatrix psi0;
  RationalMatrix psi1;
};

// psi0(e, g) = sum_{s(a)=e} (a, a g) - sum_{t(a)=e} (a, g a); concatenations
// that leave B are dropped.
RationalMatrix build_psi0(const MonomialAlgebra& A);
// psi1(a, g) = sum_{p in Z} (p, p^(a,g)).
RationalMatrix build_psi1(const MonomialAlgebra& A);
LowDegreeComplex build_complex(const MonomialAlgebra& A);

// Radical square zero blocks. D0: k(Q0||Q0) -> k(Q1||Q1) and
// D1: k(Q1||Q0) -> k(Q2||Q1), both written directly from the arrow
// incidences rather than through psi0/psi1. Throw NotRadicalSquareZero.
RationalMatrix build_D0(const MonomialAlgebra& A);
RationalMatrix build_D1(const MonomialAlgebra& A);

// HH^0 as ker psi0 (no quotient); HH^1 as ker psi1 / im psi0. Both in the
// bases of build_complex.
SubquotientBasis hh0(const MonomialAlgebra& A);
SubquotientBasis hh1(const MonomialAlgebra& A);

}  // namespace quiverhh
