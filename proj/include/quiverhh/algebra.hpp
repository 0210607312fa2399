#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "quiverhh/linalg.hpp"
#include "quiverhh/quiver.hpp"

namespace quiverhh {

// A set of relation paths, each of length >= 2, sorted and deduplicated.
class RelationSet {
 public:
  RelationSet() = default;
  // Throws ValidationError for relations shorter than two arrows.
  explicit RelationSet(std::vector<Path> relations);

  const std::vector<Path>& paths() const { return paths_; }
  std::size_t size() const { return paths_.size(); }
  bool empty() const { return paths_.empty(); }
  bool contains(const Path& p) const;
  std::size_t max_length() const;
  std::size_t total_length() const;

 private:
  std::vector<Path> paths_;
};

// Drops every relation strictly divisible by another one. The generated ideal
// is unchanged.
RelationSet minimize_relations(const Quiver& q, std::vector<Path> relations);
bool is_minimal(const Quiver& q, const RelationSet& relations);

// Every path of length two; the relations of the radical square zero algebra.
std::vector<Path> length_two_paths(const Quiver& q);

// kQ / <Z> together with its monomial basis B: the paths not divisible by any
// relation, ordered by length then lexicographically.
class MonomialAlgebra {
 public:
  const Quiver& quiver() const { return quiver_; }
  const RelationSet& relations() const { return relations_; }
  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(std::size_t i) const { return basis_.at(i); }
  std::size_t dimension() const { return basis_.size(); }
  // N: the maximal length of a basis path.
  std::size_t max_basis_length() const { return basis_.back().length(); }

  std::optional<std::size_t> basis_index(const Path& p) const;
  bool in_basis(const Path& p) const { return index_.count(p) != 0; }
  // Index of b_i b_j when the concatenation is defined and lies in B.
  std::optional<std::size_t> product(std::size_t i, std::size_t j) const;
  // Ids of basis paths from `source` to `target`, in basis order.
  const std::vector<std::size_t>& parallel_basis(VertexId source, VertexId target) const;

 private:
  friend MonomialAlgebra build_algebra(Quiver q, RelationSet z);
  MonomialAlgebra(Quiver q, RelationSet z) : quiver_(std::move(q)), relations_(std::move(z)) {}

  Quiver quiver_;
  RelationSet relations_;
  std::vector<Path> basis_;
  std::unordered_map<Path, std::size_t, PathHash> index_;
  std::vector<std::vector<std::size_t>> by_endpoints_;
};

// Enumerates B breadth-first by length. Throws ValidationError if the
// relations are not minimal and InfiniteDimensional once a surviving path is
// longer than (sum of relation lengths + |Q_0| + 1), which forces a repeated
// state in the forbidden-factor automaton and hence infinitely many paths.
MonomialAlgebra build_algebra(Quiver q, RelationSet z);

// Sparse linear combination of basis paths.
class AlgebraElement {
 public:
  void add(const Path& p, const Rational& c);
  const std::map<Path, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Path& p) const;

 private:
  std::map<Path, Rational> terms_;
};

bool in_ideal(const Path& p, const MonomialAlgebra& a);

// alpha with its i-th arrow (1-based) replaced by beta when that arrow is
// parallel to beta, nullopt otherwise. A trivial beta at e is parallel to a
// loop at e; the substitution then deletes the arrow.
// Throws IndexOutOfRange unless 1 <= i <= length(alpha).
std::optional<Path> diamond(const Quiver& q, const Path& alpha, std::size_t i, const Path& beta);

// Sum over occurrences of the arrow `a` in alpha of the substitution by gamma,
// keeping only results that lie in B.
AlgebraElement replace_all(const Path& alpha, ArrowId a, const Path& gamma, const MonomialAlgebra& A);

struct PairTerm {
  Path first;
  Path second;
  Rational coefficient;
};

// The same sum written as parallel pairs (alpha, substituted path).
std::vector<PairTerm> replace_all_pairs(const Path& alpha, ArrowId a, const Path& gamma,
                                        const MonomialAlgebra& A);

struct SaturationWitness {
  Path relation;
  std::size_t position = 0;  // 1-based
  ArrowId arrow = 0;
  Path substituted;
};

struct SaturationCheck {
  bool holds = true;
  std::optional<SaturationWitness> witness;
};

// For (member, other): closed-under-parallel uses member in Z and other a
// parallel path outside Z; completeness uses member in <Z> and other a basis
// path of length >= 2 parallel to it.
struct ParallelWitness {
  Path member;
  Path other;
};

struct ClosureCheck {
  bool holds = true;
  std::optional<ParallelWitness> witness;
};

struct CompletenessCheck {
  bool holds = true;
  // False only when a length cap hid the shortest witness.
  bool exact = true;
  std::optional<std::size_t> bound;
  std::optional<ParallelWitness> witness;
};

SaturationCheck is_completely_saturated(const MonomialAlgebra& A);
ClosureCheck is_closed_under_parallel_paths(const MonomialAlgebra& A);
// Decided exactly: a path in <Z> parallel to q exists iff some basis path w
// leaving source(q) extends by one arrow into <Z> and the target of q is
// reachable afterwards. The reported witness is a shortest such path. With a
// bound, witnesses longer than the bound are not reported and the verdict is
// marked inexact if one exists.
CompletenessCheck is_complete_monomial(const MonomialAlgebra& A,
                                       std::optional<std::size_t> search_bound = std::nullopt);
bool is_triangular(const MonomialAlgebra& A);
bool is_radical_square_zero(const MonomialAlgebra& A);

}  // namespace quiverhh
