#include "corpus.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "quiverhh/cochain.hpp"
#include "quiverhh/errors.hpp"

namespace quiverhh::testing {

namespace {

std::string arrow_name(std::size_t i) { return std::string(1, static_cast<char>('a' + i)); }

QuiverFile skeleton(std::size_t n) {
  QuiverFile f;
  for (std::size_t i = 0; i < n; ++i) f.vertices.push_back("v" + std::to_string(i));
  return f;
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<std::vector<std::string>> names_of(const Quiver& q, const std::vector<Path>& ps) {
  std::vector<std::vector<std::string>> out;
  for (const Path& p : ps) out.push_back(q.arrow_names(p));
  return out;
}

QuiverFile loops(std::size_t r, bool rsz) {
  QuiverFile f{{"e"}, {}, {}, rsz};
  for (std::size_t i = 0; i < r; ++i) f.arrows.push_back({"x" + std::to_string(i + 1), "e", "e"});
  return f;
}

QuiverFile kronecker(std::size_t r) {
  QuiverFile f{{"1", "2"}, {}, {}, false};
  for (std::size_t i = 0; i < r; ++i) f.arrows.push_back({"a" + std::to_string(i + 1), "1", "2"});
  return f;
}

QuiverFile cycle(std::size_t n) {
  QuiverFile f;
  for (std::size_t i = 1; i <= n; ++i) f.vertices.push_back(std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i)
    f.arrows.push_back({"a" + std::to_string(i), std::to_string(i), std::to_string(i % n + 1)});
  f.radical_square_zero = true;
  return f;
}

QuiverFile worked(std::vector<std::vector<std::string>> rels) {
  QuiverFile f{{"v1", "v2", "v3", "v4"},
               {{"a", "v1", "v2"}, {"b", "v2", "v3"}, {"d", "v1", "v3"}, {"c", "v3", "v4"}},
               std::move(rels),
               false};
  return f;
}

}  // namespace

QuiverFile random_connected_quiver(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_arrows) {
  const std::size_t n = uniform(rng, 1, max_vertices);
  const std::size_t m = uniform(rng, std::max<std::size_t>(n - 1, 1), max_arrows);
  QuiverFile f = skeleton(n);
  std::size_t next = 0;
  // Spanning tree first, each new vertex hooked to an earlier one.
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t u = uniform(rng, 0, v - 1);
    if (coin(rng, 0.5))
      f.arrows.push_back({arrow_name(next++), f.vertices[u], f.vertices[v]});
    else
      f.arrows.push_back({arrow_name(next++), f.vertices[v], f.vertices[u]});
  }
  while (f.arrows.size() < m) {
    const std::size_t s = uniform(rng, 0, n - 1);
    const std::size_t t = uniform(rng, 0, n - 1);
    f.arrows.push_back({arrow_name(next++), f.vertices[s], f.vertices[t]});
  }
  return f;
}

std::vector<std::vector<std::string>> random_admissible_relations(std::mt19937_64& rng, const QuiverFile& f) {
  const Quiver q(f.vertices, f.arrows);
  const std::size_t L = uniform(rng, 2, 4);
  const double p = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
  std::vector<Path> rels;
  for (const Path& path : enumerate_paths(q, L)) {
    if (path.length() < 2) continue;
    if (path.length() < L && coin(rng, p)) rels.push_back(path);
  }
  const bool acyclic = !graph_predicates(q).has_oriented_cycles;
  if (!acyclic || coin(rng, 0.5))
    for (const Path& path : enumerate_paths(q, L))
      if (path.length() == L) rels.push_back(path);
  return names_of(q, minimize_relations(q, rels).paths());
}

QuiverFile random_tree_closed(std::mt19937_64& rng, const CorpusLimits& limits) {
  const std::size_t n = uniform(rng, 2, limits.max_vertices);
  QuiverFile f = skeleton(n);
  std::size_t budget = limits.max_arrows - (n - 1);
  std::size_t next = 0;
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t u = uniform(rng, 0, v - 1);
    const std::size_t extra = uniform(rng, 0, std::min<std::size_t>(budget, 2));
    budget -= extra;
    const bool forward = coin(rng, 0.5);
    for (std::size_t k = 0; k <= extra; ++k) {
      if (forward)
        f.arrows.push_back({arrow_name(next++), f.vertices[u], f.vertices[v]});
      else
        f.arrows.push_back({arrow_name(next++), f.vertices[v], f.vertices[u]});
    }
  }
  const Quiver q(f.vertices, f.arrows);
  const BarQuiver bq = bar_quiver(q);
  // Group paths by their sequence of parallel classes.
  std::map<std::vector<std::size_t>, std::vector<Path>> groups;
  for (const Path& p : enumerate_paths(q, n))
    if (p.length() >= 2) {
      std::vector<std::size_t> key;
      for (ArrowId a : p.arrows()) key.push_back(bq.class_of_arrow[a]);
      groups[key].push_back(p);
    }
  const double prob = std::uniform_real_distribution<double>(0.2, 0.7)(rng);
  std::vector<Path> rels;
  for (const auto& [key, members] : groups)
    if (coin(rng, prob)) rels.insert(rels.end(), members.begin(), members.end());
  f.relations = names_of(q, minimize_relations(q, rels).paths());
  return f;
}

std::vector<CorpusEntry> named_examples() {
  std::vector<std::pair<std::string, QuiverFile>> files = {
      {"loop", {{"e"}, {{"a", "e", "e"}}, {{"a", "a"}}, false}},
      {"loops-2", loops(2, true)},
      {"loops-3", loops(3, true)},
      {"kronecker-2", kronecker(2)},
      {"kronecker-3", kronecker(3)},
      {"cycle-2", cycle(2)},
      {"cycle-3", cycle(3)},
      {"worked-1", worked({{"c", "b"}})},
      {"worked-2", worked({{"b", "a"}, {"c", "b"}, {"c", "d"}})},
      {"worked-3", worked({{"c", "d"}, {"c", "b", "a"}})},
      {"worked-4", worked({{"b", "a"}})},
      {"parallel-arrows-with-path",
       {{"0", "1", "2"},
        {{"c", "0", "1"}, {"a", "1", "2"}, {"b", "1", "2"}, {"x", "0", "2"}},
        {{"b", "c"}},
        false}},
  };
  std::vector<CorpusEntry> out;
  for (auto& [name, f] : files) {
    LoadedAlgebra l = build_from_file(f);
    const Quiver& q = l.algebra.quiver();
    const bool tree = bar_quiver(q).underlying_tree() && is_closed_under_parallel_paths(l.algebra).holds;
    out.push_back({name, f, std::move(l.algebra), tree});
  }
  return out;
}

CorpusEntry named_example(const std::string& name) {
  for (CorpusEntry& e : named_examples())
    if (e.name == name) return std::move(e);
  throw std::out_of_range("no example named " + name);
}

MonomialAlgebra worked_example(const std::vector<std::vector<std::string>>& relations) {
  return build(worked(relations));
}

MonomialAlgebra build(const QuiverFile& f) { return build_from_file(f).algebra; }

LieAlgebraPresentation psi1_kernel_lie(const MonomialAlgebra& A) {
  const LowDegreeComplex c = build_complex(A);
  const SubquotientBasis sq = quotient(kernel(c.psi1), {}, c.c1.size());
  std::vector<std::string> labels;
  for (const auto& v : sq.quotient_reps) labels.push_back(c.c1.describe(v, A.quiver()));
  const ParallelPairSpace& c1 = c.c1;
  return subquotient_lie(
      sq, [&](const SparseVector& x, const SparseVector& y) { return strametz_bracket(x, y, A, c1); }, labels);
}

std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, std::size_t count, const CorpusLimits& limits) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out = named_examples();
  std::size_t serial = 0;
  while (out.size() < count) {
    const bool tree = serial % 3 == 0;
    ++serial;
    for (int attempt = 0; attempt < 50; ++attempt) {
      QuiverFile f;
      if (tree) {
        f = random_tree_closed(rng, limits);
      } else {
        f = random_connected_quiver(rng, limits.max_vertices, limits.max_arrows);
        f.relations = random_admissible_relations(rng, f);
      }
      try {
        LoadedAlgebra l = build_from_file(f);
        if (l.algebra.dimension() > limits.max_dimension) continue;
        out.push_back({"random-" + std::to_string(serial), f, std::move(l.algebra), tree});
        break;
      } catch (const InputError&) {
        continue;
      }
    }
  }
  return out;
}

}  // namespace quiverhh::testing
