#include "quiverhh/algebra.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "quiverhh/errors.hpp"

namespace quiverhh {

namespace {

constexpr std::size_t kMaxBasisSize = 200000;
constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

bool is_prefix(std::span<const ArrowId> prefix, std::span<const ArrowId> seq) {
  return prefix.size() <= seq.size() && std::equal(prefix.begin(), prefix.end(), seq.begin());
}

// Length of a shortest walk from each vertex to `target`.
std::vector<std::size_t> distances_to(const Quiver& q, VertexId target) {
  std::vector<std::size_t> dist(q.vertex_count(), kUnreachable);
  std::deque<VertexId> todo{target};
  dist[target] = 0;
  while (!todo.empty()) {
    VertexId v = todo.front();
    todo.pop_front();
    for (ArrowId a : q.arrows_into(v)) {
      VertexId u = q.arrow(a).source;
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        todo.push_back(u);
      }
    }
  }
  return dist;
}

// reach[k][v]: some walk of exactly k arrows goes from v to target.
std::vector<std::vector<bool>> exact_reach(const Quiver& q, VertexId target, std::size_t max_len) {
  std::vector<std::vector<bool>> reach(max_len + 1, std::vector<bool>(q.vertex_count(), false));
  reach[0][target] = true;
  for (std::size_t k = 1; k <= max_len; ++k)
    for (VertexId v = 0; v < q.vertex_count(); ++v)
      for (ArrowId a : q.arrows_from(v))
        if (reach[k - 1][q.arrow(a).target]) {
          reach[k][v] = true;
          break;
        }
  return reach;
}

// Extends `start` (a path ending at v) by a walk from v to the target of
// exactly `steps` arrows, picking the smallest arrow id at each step.
Path extend_by_walk(const Quiver& q, Path start, std::size_t steps,
                    const std::vector<std::vector<bool>>& reach) {
  for (std::size_t left = steps; left > 0; --left) {
    for (ArrowId a : q.arrows_from(start.target())) {
      if (reach[left - 1][q.arrow(a).target]) {
        start = *compose(q.arrow_path(a), start);
        break;
      }
    }
  }
  return start;
}

// All paths from source to target with 1 <= length <= max_len, shortest first.
std::vector<Path> paths_between(const Quiver& q, VertexId source, VertexId target, std::size_t max_len,
                                const std::vector<std::vector<bool>>& reach) {
  std::vector<Path> out;
  std::vector<Path> layer{Path::trivial(source)};
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    std::vector<Path> next;
    for (const Path& p : layer) {
      for (ArrowId a : q.arrows_from(p.target())) {
        VertexId v = q.arrow(a).target;
        bool alive = false;
        for (std::size_t rest = 0; rest + len <= max_len && !alive; ++rest) alive = reach[rest][v];
        if (alive) next.push_back(*compose(q.arrow_path(a), p));
      }
    }
    std::sort(next.begin(), next.end());
    for (const Path& p : next)
      if (p.target() == target) out.push_back(p);
    layer = std::move(next);
  }
  return out;
}

}  // namespace

RelationSet::RelationSet(std::vector<Path> relations) : paths_(std::move(relations)) {
  for (const Path& p : paths_)
    if (p.length() < 2) throw ValidationError("relations must have length at least two");
  std::sort(paths_.begin(), paths_.end());
  paths_.erase(std::unique(paths_.begin(), paths_.end()), paths_.end());
}

bool RelationSet::contains(const Path& p) const { return std::binary_search(paths_.begin(), paths_.end(), p); }

std::size_t RelationSet::max_length() const {
  std::size_t m = 0;
  for (const Path& p : paths_) m = std::max(m, p.length());
  return m;
}

std::size_t RelationSet::total_length() const {
  std::size_t s = 0;
  for (const Path& p : paths_) s += p.length();
  return s;
}

RelationSet minimize_relations(const Quiver& q, std::vector<Path> relations) {
  RelationSet all(std::move(relations));
  std::vector<Path> kept;
  for (const Path& p : all.paths()) {
    bool redundant = std::any_of(all.paths().begin(), all.paths().end(),
                                 [&](const Path& r) { return r != p && divides(q, r, p); });
    if (!redundant) kept.push_back(p);
  }
  return RelationSet(std::move(kept));
}

bool is_minimal(const Quiver& q, const RelationSet& relations) {
  return minimize_relations(q, relations.paths()).size() == relations.size();
}

std::vector<Path> length_two_paths(const Quiver& q) {
  std::vector<Path> out;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    auto layer = paths_of_length_from(q, v, 2);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

MonomialAlgebra build_algebra(Quiver q, RelationSet z) {
  if (!is_minimal(q, z)) throw ValidationError("relation set is not minimal");
  for (const Path& p : z.paths())
    for (ArrowId a : p.arrows())
      if (a >= q.arrow_count()) throw ValidationError("relation uses an arrow outside the quiver");

  MonomialAlgebra A(std::move(q), std::move(z));
  const Quiver& Q = A.quiver_;
  const auto& rel = A.relations_.paths();
  const std::size_t pump = A.relations_.total_length() + Q.vertex_count() + 1;

  std::vector<Path> layer;
  for (VertexId v = 0; v < Q.vertex_count(); ++v) layer.push_back(Path::trivial(v));
  for (std::size_t len = 0; !layer.empty(); ++len) {
    if (len > pump)
      throw InfiniteDimensional("basis path of length " + std::to_string(len) +
                                " survives all relations; the algebra is infinite dimensional");
    A.basis_.insert(A.basis_.end(), layer.begin(), layer.end());
    if (A.basis_.size() > kMaxBasisSize) throw InputError("algebra dimension exceeds supported size");
    std::vector<Path> next;
    for (const Path& w : layer) {
      for (ArrowId a : Q.arrows_from(w.target())) {
        Path aw = *compose(Q.arrow_path(a), w);
        // w has no relation factor, so aw has one iff a relation is a prefix.
        bool dead = std::any_of(rel.begin(), rel.end(), [&](const Path& r) { return is_prefix(r.arrows(), aw.arrows()); });
        if (!dead) next.push_back(std::move(aw));
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }

  const std::size_t n = Q.vertex_count();
  A.by_endpoints_.assign(n * n, {});
  for (std::size_t i = 0; i < A.basis_.size(); ++i) {
    const Path& p = A.basis_[i];
    A.index_.emplace(p, i);
    A.by_endpoints_[p.source() * n + p.target()].push_back(i);
  }
  return A;
}

std::optional<std::size_t> MonomialAlgebra::basis_index(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> MonomialAlgebra::product(std::size_t i, std::size_t j) const {
  auto c = compose(basis_.at(i), basis_.at(j));
  if (!c) return std::nullopt;
  return basis_index(*c);
}

const std::vector<std::size_t>& MonomialAlgebra::parallel_basis(VertexId source, VertexId target) const {
  return by_endpoints_.at(source * quiver_.vertex_count() + target);
}

void AlgebraElement::add(const Path& p, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational AlgebraElement::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool in_ideal(const Path& p, const MonomialAlgebra& a) {
  const auto& rel = a.relations().paths();
  return std::any_of(rel.begin(), rel.end(), [&](const Path& r) { return divides(a.quiver(), r, p); });
}

std::optional<Path> diamond(const Quiver& q, const Path& alpha, std::size_t i, const Path& beta) {
  if (i < 1 || i > alpha.length())
    throw IndexOutOfRange("substitution position " + std::to_string(i) + " outside path of length " +
                          std::to_string(alpha.length()));
  const Arrow& ai = q.arrow(alpha.arrow(i - 1));
  if (ai.source != beta.source() || ai.target != beta.target()) return std::nullopt;
  auto arrows = alpha.arrows();
  std::vector<ArrowId> out(arrows.begin(), arrows.begin() + static_cast<std::ptrdiff_t>(i - 1));
  out.insert(out.end(), beta.arrows().begin(), beta.arrows().end());
  out.insert(out.end(), arrows.begin() + static_cast<std::ptrdiff_t>(i), arrows.end());
  return Path(std::move(out), alpha.source(), alpha.target());
}

AlgebraElement replace_all(const Path& alpha, ArrowId a, const Path& gamma, const MonomialAlgebra& A) {
  AlgebraElement out;
  for (std::size_t i = 1; i <= alpha.length(); ++i) {
    if (alpha.arrow(i - 1) != a) continue;
    auto sub = diamond(A.quiver(), alpha, i, gamma);
    if (sub && A.in_basis(*sub)) out.add(*sub, 1);
  }
  return out;
}

std::vector<PairTerm> replace_all_pairs(const Path& alpha, ArrowId a, const Path& gamma,
                                        const MonomialAlgebra& A) {
  std::vector<PairTerm> out;
  const AlgebraElement e = replace_all(alpha, a, gamma, A);
  for (const auto& [path, coef] : e.terms()) out.push_back({alpha, path, coef});
  return out;
}

SaturationCheck is_completely_saturated(const MonomialAlgebra& A) {
  const Quiver& q = A.quiver();
  for (const Path& p : A.relations().paths()) {
    for (std::size_t i = 1; i <= p.length(); ++i) {
      const Arrow& pi = q.arrow(p.arrow(i - 1));
      for (ArrowId a : q.arrows_from(pi.source)) {
        if (q.arrow(a).target != pi.target) continue;
        Path sub = *diamond(q, p, i, q.arrow_path(a));
        if (!in_ideal(sub, A)) return {false, SaturationWitness{p, i, a, sub}};
      }
    }
  }
  return {};
}

ClosureCheck is_closed_under_parallel_paths(const MonomialAlgebra& A) {
  const Quiver& q = A.quiver();
  const RelationSet& z = A.relations();
  const std::size_t lmax = z.max_length();
  // A walk longer than lmax exists iff one exists with length in
  // (lmax, lmax + |Q_0|]: cutting out a cycle of length <= |Q_0| keeps a
  // longer walk above lmax.
  const std::size_t horizon = lmax + q.vertex_count();
  for (const Path& p : z.paths()) {
    auto reach = exact_reach(q, p.target(), horizon);
    for (const Path& other : paths_between(q, p.source(), p.target(), lmax, reach))
      if (!z.contains(other)) return {false, ParallelWitness{p, other}};
    for (std::size_t len = lmax + 1; len <= horizon; ++len) {
      if (reach[len][p.source()])
        return {false, ParallelWitness{p, extend_by_walk(q, Path::trivial(p.source()), len, reach)}};
    }
  }
  return {};
}

CompletenessCheck is_complete_monomial(const MonomialAlgebra& A, std::optional<std::size_t> search_bound) {
  const Quiver& q = A.quiver();
  CompletenessCheck out;
  out.bound = search_bound;
  std::vector<std::vector<std::size_t>> dist_cache(q.vertex_count());

  for (const Path& target_path : A.basis()) {
    if (target_path.length() < 2) continue;
    const VertexId s = target_path.source();
    const VertexId t = target_path.target();
    auto& dist = dist_cache[t];
    if (dist.empty()) dist = distances_to(q, t);

    // Shortest path in <Z> from s to t: a basis path w leaving s, one arrow
    // that pushes it into the ideal, then a shortest walk to t.
    std::optional<std::pair<std::size_t, Path>> best;
    for (const Path& w : A.basis()) {
      if (w.source() != s) continue;
      for (ArrowId a : q.arrows_from(w.target())) {
        Path aw = *compose(q.arrow_path(a), w);
        if (A.in_basis(aw)) continue;
        std::size_t d = dist[q.arrow(a).target];
        if (d == kUnreachable) continue;
        std::size_t len = aw.length() + d;
        if (!best || len < best->first) best.emplace(len, aw);
      }
    }
    if (!best) continue;
    auto reach = exact_reach(q, t, dist[best->second.target()]);
    Path member = extend_by_walk(q, best->second, dist[best->second.target()], reach);
    if (search_bound && member.length() > *search_bound) {
      out.exact = false;
      continue;
    }
    out.holds = false;
    out.witness = ParallelWitness{member, target_path};
    return out;
  }
  return out;
}

bool is_triangular(const MonomialAlgebra& A) { return !graph_predicates(A.quiver()).has_oriented_cycles; }

bool is_radical_square_zero(const MonomialAlgebra& A) {
  return A.relations().paths() == length_two_paths(A.quiver());
}

}  // namespace quiverhh
