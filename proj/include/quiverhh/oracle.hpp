#pragma once

#include <optional>
#include <vector>

#include "quiverhh/algebra.hpp"
#include "quiverhh/lie.hpp"
#include "quiverhh/linalg.hpp"

namespace quiverhh {

struct OracleOptions {
  std::size_t max_degree = 4;
  std::size_t chain_cap = 200000;
  std::size_t max_algebra_dim = 64;
};

// Degree-n cochains of the bar complex relative to the vertex span E: one
// basis vector per chain (b_1, ..., b_n) of nontrivial composable basis
// paths and per basis path parallel to b_1 ... b_n. Degree 0 uses the
// empty chain at each vertex.
struct BarChainBasis {
  std::size_t degree = 0;
  // Basis ids of the chain entries; the single vertex id in degree 0.
  std::vector<std::vector<std::size_t>> chains;
  std::vector<VertexId> chain_source;
  std::vector<VertexId> chain_target;
  // First cochain index of each chain; outputs follow parallel_basis order.
  std::vector<std::size_t> offset;
  std::size_t dimension = 0;
};

// Throws DegreeTooLarge when n exceeds the option guard or the chain count
// exceeds the cap.
BarChainBasis bar_chains(const MonomialAlgebra& A, std::size_t n, const OracleOptions& opts = {});
std::size_t bar_cochain_dim(const MonomialAlgebra& A, std::size_t n, const OracleOptions& opts = {});

// delta^n : C^n -> C^{n+1}.
RationalMatrix bar_differential(const MonomialAlgebra& A, const BarChainBasis& from, const BarChainBasis& to);

// dim HH^n. Throws ComplexBroken if delta^n delta^{n-1} != 0.
std::size_t bar_hh(const MonomialAlgebra& A, std::size_t n, const OracleOptions& opts = {});
// dim HH^0 .. HH^max_degree in one pass.
std::vector<std::size_t> bar_hh_range(const MonomialAlgebra& A, std::size_t max_degree, const OracleOptions& opts = {});

// Outer derivations vanishing on E, with the commutator bracket.
LieAlgebraPresentation derivation_hh1(const MonomialAlgebra& A, const OracleOptions& opts = {});

struct DegreeComparison {
  std::size_t degree = 0;
  std::optional<std::size_t> combinatorial;
  std::size_t oracle = 0;
  bool agree = true;
};

struct OracleComparison {
  std::vector<DegreeComparison> degrees;
  // Degrees >= 2 carry a combinatorial value only when the vanishing
  // hypotheses hold.
  bool vanishing_claimed = false;
  LieInvariants combinatorial_lie;
  LieInvariants derivation_lie;
  bool lie_agree = true;
  bool agree() const;
};

// Throws Mismatch, with the full comparison as JSON payload, when any row or
// the Lie invariants disagree.
OracleComparison compare(const MonomialAlgebra& A, std::size_t max_degree, const OracleOptions& opts = {});
// Same comparison without throwing.
OracleComparison compare_unchecked(const MonomialAlgebra& A, std::size_t max_degree, const OracleOptions& opts = {});

}  // namespace quiverhh
