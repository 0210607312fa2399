#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "quiverhh/io.hpp"
#include "quiverhh/lie.hpp"

namespace quiverhh::testing {

struct CorpusLimits {
  std::size_t max_vertices = 4;
  std::size_t max_arrows = 6;
  std::size_t max_dimension = 24;
};

struct CorpusEntry {
  std::string name;
  QuiverFile file;
  MonomialAlgebra algebra;
  // Generated with Q̄ a tree and Z closed under parallel paths.
  bool tree_family = false;
};

// A random connected quiver; loops and parallel arrows allowed.
QuiverFile random_connected_quiver(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_arrows);

// Relations between paths of length 2 and L-1 at random plus every path of
// length L, so that the ideal is admissible. Acyclic quivers sometimes skip
// the length-L completion.
std::vector<std::vector<std::string>> random_admissible_relations(std::mt19937_64& rng, const QuiverFile& f);

// Q̄ a tree with random multiplicities; Z a union of whole parallel classes.
QuiverFile random_tree_closed(std::mt19937_64& rng, const CorpusLimits& limits);

// Hand-picked algebras followed by random ones, deterministic in the seed.
// About a third of the random part belongs to the tree family.
std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, std::size_t count, const CorpusLimits& limits = {});

// The fixed examples alone.
std::vector<CorpusEntry> named_examples();
// One fixed example by name; throws std::out_of_range if unknown.
CorpusEntry named_example(const std::string& name);

// The four-vertex quiver a: v1->v2, b: v2->v3, d: v1->v3, c: v3->v4 with the
// given relations.
MonomialAlgebra worked_example(const std::vector<std::vector<std::string>>& relations);
MonomialAlgebra build(const QuiverFile& f);

// The Strametz bracket restricted to ker psi1, in a basis of that kernel.
LieAlgebraPresentation psi1_kernel_lie(const MonomialAlgebra& A);

}  // namespace quiverhh::testing
