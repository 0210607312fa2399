#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quiverhh {

using VertexId = std::uint32_t;
using ArrowId = std::uint32_t;

struct Arrow {
  std::string name;
  VertexId source = 0;
  VertexId target = 0;
};

// Arrow as it appears in an input file, endpoints given by vertex name.
struct ArrowSpec {
  std::string name;
  std::string source;
  std::string target;
};

// A path a_1 a_2 ... a_n written in composition order: source(a_i) equals
// target(a_{i+1}), so the path starts at source(a_n) and ends at target(a_1).
// The empty sequence is the trivial path at a vertex.
//
// Paths carry their endpoints so that composition and parallelism need no
// quiver. Build them through Quiver::path / Quiver::trivial, which validate.
class Path {
 public:
  Path() = default;
  static Path trivial(VertexId v) { return Path({}, v, v); }
  // Unchecked; callers guarantee composability and matching endpoints.
  Path(std::vector<ArrowId> arrows, VertexId source, VertexId target)
      : arrows_(std::move(arrows)), source_(source), target_(target) {}

  std::span<const ArrowId> arrows() const { return arrows_; }
  ArrowId arrow(std::size_t i) const { return arrows_[i]; }
  std::size_t length() const { return arrows_.size(); }
  bool is_trivial() const { return arrows_.empty(); }
  VertexId source() const { return source_; }
  VertexId target() const { return target_; }

  // Grouped by length, then lexicographic on arrow ids, then endpoints.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    if (auto c = a.arrows_ <=> b.arrows_; c != 0) return c;
    if (auto c = a.source_ <=> b.source_; c != 0) return c;
    return a.target_ <=> b.target_;
  }
  friend bool operator==(const Path& a, const Path& b) = default;

 private:
  std::vector<ArrowId> arrows_;
  VertexId source_ = 0;
  VertexId target_ = 0;
};

struct PathHash {
  std::size_t operator()(const Path& p) const noexcept;
};

// A finite connected quiver. Vertices and arrows are stored sorted by name;
// ids index into those sorted lists so every derived ordering is reproducible.
class Quiver {
 public:
  // Throws ValidationError on duplicate names, dangling endpoints, empty
  // vertex or arrow sets, or a disconnected underlying graph.
  Quiver(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;

  // Arrows with the given source (resp. target), in id order.
  const std::vector<ArrowId>& arrows_from(VertexId v) const { return out_.at(v); }
  const std::vector<ArrowId>& arrows_into(VertexId v) const { return in_.at(v); }

  Path trivial(VertexId v) const;
  Path arrow_path(ArrowId a) const;
  // Throws ValidationError if the sequence is empty or not composable.
  Path path(std::vector<ArrowId> arrows) const;
  Path path_from_names(const std::vector<std::string>& names) const;

  std::vector<std::string> arrow_names(const Path& p) const;
  // "cba" when every arrow name is one character, "c.b.a" otherwise; trivial
  // paths print as their vertex name.
  std::string format(const Path& p) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<ArrowId>> out_;
  std::vector<std::vector<ArrowId>> in_;
  bool short_names_ = true;
};

// pq when source(p) = target(q), nullopt otherwise.
std::optional<Path> compose(const Path& p, const Path& q);

// True iff p = x q y for some paths x, y (possibly trivial).
bool divides(const Quiver& quiver, const Path& q, const Path& p);

inline bool parallel(const Path& p, const Path& q) {
  return p.source() == q.source() && p.target() == q.target();
}

// All paths of length <= max_len, grouped by length and lexicographic within.
std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_len);

// Paths of exactly the given length with the given source, lexicographic.
std::vector<Path> paths_of_length_from(const Quiver& q, VertexId source, std::size_t length);

struct ParallelClass {
  VertexId source = 0;
  VertexId target = 0;
  std::vector<ArrowId> arrows;
  std::size_t size() const { return arrows.size(); }
};

// The quiver with each class of parallel arrows collapsed to a single arrow.
struct BarQuiver {
  std::size_t vertex_count = 0;
  std::vector<ParallelClass> classes;
  std::vector<std::size_t> class_of_arrow;

  // Indices of classes with more than one arrow.
  std::vector<std::size_t> multiple_classes() const;
  bool underlying_tree() const;
};

BarQuiver bar_quiver(const Quiver& q);

// |classes| - |vertices| + 1, the first Betti number of the underlying graph.
long euler_characteristic(const BarQuiver& qbar);

struct GraphPredicates {
  bool is_connected = false;
  bool underlying_tree = false;
  // The whole quiver is a single directed cycle (the loop is the N = 1 case).
  bool is_oriented_cycle = false;
  bool has_loops = false;
  bool has_oriented_cycles = false;
};

GraphPredicates graph_predicates(const Quiver& q);

}  // namespace quiverhh
