#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quiverhh/algebra.hpp"
#include "quiverhh/cochain.hpp"
#include "quiverhh/linalg.hpp"

namespace quiverhh {

// A finite-dimensional Lie algebra given by labels and structure constants
// c[i][j] = [b_i, b_j] expressed in the same basis.
class LieAlgebraPresentation {
 public:
  LieAlgebraPresentation() = default;
  explicit LieAlgebraPresentation(std::vector<std::string> labels);

  std::size_t dimension() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Stores [b_i, b_j] exactly as given; no antisymmetric completion, so that
  // validation sees what the caller computed.
  void set_bracket(std::size_t i, std::size_t j, SparseVector v);
  const SparseVector& bracket(std::size_t i, std::size_t j) const;
  SparseVector bracket(const SparseVector& x, const SparseVector& y) const;

  // ad_x as a matrix, column j = [x, b_j].
  RationalMatrix ad(const SparseVector& x) const;

 private:
  std::vector<std::string> labels_;
  std::vector<SparseVector> table_;  // row-major n x n
};

struct BasisTriple {
  std::size_t i = 0, j = 0, k = 0;
};

std::optional<BasisTriple> antisymmetry_violation(const LieAlgebraPresentation& g);
// First basis triple (i <= j <= k) whose Jacobiator is nonzero.
std::optional<BasisTriple> jacobi_violation(const LieAlgebraPresentation& g);

// [(a,alpha),(b,beta)] = (b, beta^(a,alpha)) - (a, alpha^(b,beta)), as a
// vector of the k(Q1||B) space c1.
SparseVector strametz_bracket(const std::pair<Path, Path>& x, const std::pair<Path, Path>& y,
                              const MonomialAlgebra& A, const ParallelPairSpace& c1);
SparseVector strametz_bracket(const SparseVector& x, const SparseVector& y, const MonomialAlgebra& A,
                              const ParallelPairSpace& c1);

// The bracket on all of k(Q1||B) in the basis of build_complex(A).c1.
LieAlgebraPresentation cochain_lie(const MonomialAlgebra& A);
LieAlgebraPresentation cochain_lie(const MonomialAlgebra& A, const ParallelPairSpace& c1);

using BracketFn = std::function<SparseVector(const SparseVector&, const SparseVector&)>;

// The Lie algebra ker/im on the quotient representatives of sq. Throws
// QuotientNotClosed if a bracket of representatives leaves the kernel or a
// bracket of a kernel vector with an image vector leaves the image.
LieAlgebraPresentation subquotient_lie(const SubquotientBasis& sq, const BracketFn& bracket,
                                       std::vector<std::string> labels);

// HH^1 with the induced bracket. Representatives are labelled by their
// expansion in parallel pairs.
LieAlgebraPresentation hh1_lie(const MonomialAlgebra& A);

// A subspace given by any spanning family; returned as its reduced basis.
std::vector<SparseVector> span_basis(const std::vector<SparseVector>& family);
// [U, V] spanned inside g.
std::vector<SparseVector> bracket_span(const LieAlgebraPresentation& g, const std::vector<SparseVector>& u,
                                       const std::vector<SparseVector>& v);

// Dimensions of D^0 = g, D^{l+1} = [D^l, D^l], stopping at 0 or at the
// first repetition.
std::vector<std::size_t> derived_series(const LieAlgebraPresentation& g);
std::vector<std::size_t> derived_series(const LieAlgebraPresentation& g, const std::vector<SparseVector>& sub);

RationalMatrix killing_form(const LieAlgebraPresentation& g);

// Killing-orthogonal of [g, g]. Throws RadicalNotSolvable unless the result
// is a solvable ideal with semisimple quotient.
std::vector<SparseVector> radical(const LieAlgebraPresentation& g);
std::vector<SparseVector> center(const LieAlgebraPresentation& g);

// g / I for an ideal I.
LieAlgebraPresentation quotient_lie(const LieAlgebraPresentation& g, const std::vector<SparseVector>& ideal);

struct LieInvariants {
  std::size_t dim = 0;
  std::vector<std::size_t> derived;
  std::size_t radical_dim = 0;
  std::size_t center_dim = 0;
  std::size_t killing_rank = 0;
  bool radical_abelian = true;

  bool solvable() const { return radical_dim == dim; }
  bool semisimple() const { return dim > 0 && radical_dim == 0; }
  // Reductive iff the radical is the center.
  bool reductive() const { return radical_dim == center_dim; }
  friend bool operator==(const LieInvariants&, const LieInvariants&) = default;
};

LieInvariants invariants(const LieAlgebraPresentation& g);

struct SemisimpleFactor {
  std::string type = "sl";
  std::size_t size = 0;
  std::vector<std::string> arrows;
};

struct DecompositionReport {
  enum class Hypothesis { RadicalSquareZero, TriangularCompleteMonomial, Generic };
  Hypothesis hypothesis = Hypothesis::Generic;

  // Predicted from the quiver data; empty factors and no prediction for the
  // generic case.
  std::vector<SemisimpleFactor> semisimple_factors;
  std::optional<std::size_t> predicted_radical_dim;
  std::optional<std::size_t> predicted_dim;
  long chi = 0;
  std::size_t R_dim = 0;

  // Computed from hh1_lie.
  LieInvariants computed;
  std::size_t semisimple_dim = 0;
  bool radical_abelian = true;
  bool reductive = false;
  bool semisimple = false;
  bool solvable = false;

  std::vector<std::string> discrepancies;
  bool consistent() const { return discrepancies.empty(); }
};

std::string hypothesis_name(DecompositionReport::Hypothesis h);

DecompositionReport classify(const MonomialAlgebra& A);

struct SemisimpleVerdict {
  ClosureCheck closed_parallel;
  bool qbar_tree = false;
  bool s_nonempty = false;
  bool verdict = false;
  // Killing form of HH^1 nondegenerate and HH^1 nonzero.
  bool killing_nondegenerate = false;
  std::size_t hh1_dim = 0;
  bool agrees() const { return verdict == killing_nondegenerate; }
};

SemisimpleVerdict check_semisimple(const MonomialAlgebra& A);

// Claims HH^0 = k, HH^1 = prod sl_|alpha| and HH^n = 0 for n >= 2 when Q̄ is a
// tree and Z is closed under parallel paths; no claim otherwise.
struct VanishingVerdict {
  bool hypotheses_hold = false;
  bool qbar_tree = false;
  bool closed_parallel = false;
  std::size_t claimed_hh0 = 0;
  std::size_t claimed_hh1 = 0;
  std::vector<SemisimpleFactor> factors;
};

VanishingVerdict vanishing_verdict(const MonomialAlgebra& A);

std::vector<SemisimpleFactor> factors_from_quiver(const Quiver& q);

}  // namespace quiverhh
