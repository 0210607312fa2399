#include "quiverhh/quiver.hpp"

#include <algorithm>
#include <numeric>

#include "quiverhh/errors.hpp"

namespace quiverhh {

namespace {

// Union-find over vertex ids; used for connectivity and tree checks.
class Components {
 public:
  explicit Components(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }
  std::size_t count() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) c += find(i) == i;
    return c;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::size_t PathHash::operator()(const Path& p) const noexcept {
  std::size_t h = std::hash<std::uint64_t>{}((std::uint64_t{p.source()} << 32) | p.target());
  for (ArrowId a : p.arrows()) h = h * 1000003u ^ std::hash<ArrowId>{}(a);
  return h;
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows) {
  if (vertices.empty()) throw ValidationError("quiver has no vertices");
  if (arrows.empty()) throw ValidationError("quiver has no arrows");

  std::sort(vertices.begin(), vertices.end());
  if (auto it = std::adjacent_find(vertices.begin(), vertices.end()); it != vertices.end())
    throw ValidationError("duplicate vertex '" + *it + "'");
  vertex_names_ = std::move(vertices);

  std::sort(arrows.begin(), arrows.end(),
            [](const ArrowSpec& a, const ArrowSpec& b) { return a.name < b.name; });
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto& spec = arrows[i];
    if (spec.name.empty()) throw ValidationError("arrow with empty name");
    if (i > 0 && arrows[i - 1].name == spec.name)
      throw ValidationError("duplicate arrow '" + spec.name + "'");
    auto s = find_vertex(spec.source);
    auto t = find_vertex(spec.target);
    if (!s) throw ValidationError("arrow '" + spec.name + "' has undeclared source '" + spec.source + "'");
    if (!t) throw ValidationError("arrow '" + spec.name + "' has undeclared target '" + spec.target + "'");
    arrows_.push_back({spec.name, *s, *t});
    short_names_ = short_names_ && spec.name.size() == 1;
  }

  out_.assign(vertex_names_.size(), {});
  in_.assign(vertex_names_.size(), {});
  Components comp(vertex_names_.size());
  for (ArrowId a = 0; a < arrows_.size(); ++a) {
    out_[arrows_[a].source].push_back(a);
    in_[arrows_[a].target].push_back(a);
    comp.unite(arrows_[a].source, arrows_[a].target);
  }
  if (comp.count() != 1) throw ValidationError("underlying graph of the quiver is not connected");
}

std::optional<VertexId> Quiver::find_vertex(std::string_view name) const {
  auto it = std::lower_bound(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - vertex_names_.begin());
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), name,
                             [](const Arrow& a, std::string_view n) { return a.name < n; });
  if (it == arrows_.end() || it->name != name) return std::nullopt;
  return static_cast<ArrowId>(it - arrows_.begin());
}

Path Quiver::trivial(VertexId v) const {
  if (v >= vertex_count()) throw ValidationError("vertex id out of range");
  return Path::trivial(v);
}

Path Quiver::arrow_path(ArrowId a) const {
  const Arrow& arr = arrow(a);
  return Path({a}, arr.source, arr.target);
}

Path Quiver::path(std::vector<ArrowId> seq) const {
  if (seq.empty()) throw ValidationError("empty arrow sequence; use trivial() for vertices");
  for (ArrowId a : seq)
    if (a >= arrow_count()) throw ValidationError("arrow id out of range");
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (arrows_[seq[i]].source != arrows_[seq[i + 1]].target)
      throw ValidationError("arrows '" + arrows_[seq[i]].name + "' and '" + arrows_[seq[i + 1]].name +
                            "' are not composable");
  }
  VertexId s = arrows_[seq.back()].source;
  VertexId t = arrows_[seq.front()].target;
  return Path(std::move(seq), s, t);
}

Path Quiver::path_from_names(const std::vector<std::string>& names) const {
  std::vector<ArrowId> seq;
  seq.reserve(names.size());
  for (const auto& n : names) {
    auto a = find_arrow(n);
    if (!a) throw ValidationError("unknown arrow '" + n + "'");
    seq.push_back(*a);
  }
  return path(std::move(seq));
}

std::vector<std::string> Quiver::arrow_names(const Path& p) const {
  std::vector<std::string> out;
  for (ArrowId a : p.arrows()) out.push_back(arrows_[a].name);
  return out;
}

std::string Quiver::format(const Path& p) const {
  if (p.is_trivial()) return vertex_names_[p.source()];
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i > 0 && !short_names_) out += '.';
    out += arrows_[p.arrow(i)].name;
  }
  return out;
}

std::optional<Path> compose(const Path& p, const Path& q) {
  if (p.source() != q.target()) return std::nullopt;
  if (p.is_trivial()) return q;
  if (q.is_trivial()) return p;
  std::vector<ArrowId> seq(p.arrows().begin(), p.arrows().end());
  seq.insert(seq.end(), q.arrows().begin(), q.arrows().end());
  return Path(std::move(seq), q.source(), p.target());
}

bool divides(const Quiver& quiver, const Path& q, const Path& p) {
  if (q.is_trivial()) {
    // A trivial path divides p iff its vertex lies on p.
    if (p.source() == q.source()) return true;
    for (ArrowId a : p.arrows())
      if (quiver.arrow(a).target == q.source()) return true;
    return false;
  }
  if (q.length() > p.length()) return false;
  auto hay = p.arrows();
  auto needle = q.arrows();
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

std::vector<Path> paths_of_length_from(const Quiver& q, VertexId source, std::size_t length) {
  // Paths grow on the left: a path starting at `source` is a_1 ... a_n with
  // source(a_n) = source, so extend by prepending arrows leaving the target.
  std::vector<Path> frontier{Path::trivial(source)};
  for (std::size_t len = 0; len < length; ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      for (ArrowId a : q.arrows_from(p.target())) {
        if (auto c = compose(q.arrow_path(a), p)) next.push_back(std::move(*c));
      }
    }
    frontier = std::move(next);
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_len) {
  std::vector<Path> out;
  std::vector<Path> layer;
  for (VertexId v = 0; v < q.vertex_count(); ++v) layer.push_back(Path::trivial(v));
  out = layer;
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    std::vector<Path> next;
    for (const Path& p : layer) {
      for (ArrowId a : q.arrows_from(p.target())) next.push_back(*compose(q.arrow_path(a), p));
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<std::size_t> BarQuiver::multiple_classes() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].size() > 1) s.push_back(i);
  return s;
}

bool BarQuiver::underlying_tree() const {
  if (classes.size() + 1 != vertex_count) return false;
  Components comp(vertex_count);
  for (const auto& c : classes)
    if (!comp.unite(c.source, c.target)) return false;
  return true;
}

BarQuiver bar_quiver(const Quiver& q) {
  BarQuiver qbar;
  qbar.vertex_count = q.vertex_count();
  qbar.class_of_arrow.resize(q.arrow_count());
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    auto it = std::find_if(qbar.classes.begin(), qbar.classes.end(), [&](const ParallelClass& c) {
      return c.source == arr.source && c.target == arr.target;
    });
    if (it == qbar.classes.end()) {
      qbar.classes.push_back({arr.source, arr.target, {}});
      it = std::prev(qbar.classes.end());
    }
    it->arrows.push_back(a);
    qbar.class_of_arrow[a] = static_cast<std::size_t>(it - qbar.classes.begin());
  }
  return qbar;
}

long euler_characteristic(const BarQuiver& qbar) {
  return static_cast<long>(qbar.classes.size()) - static_cast<long>(qbar.vertex_count) + 1;
}

GraphPredicates graph_predicates(const Quiver& q) {
  GraphPredicates g;
  const std::size_t n = q.vertex_count();

  Components comp(n);
  bool forest = true;
  for (const Arrow& a : q.arrows()) {
    g.has_loops = g.has_loops || a.source == a.target;
    forest = comp.unite(a.source, a.target) && forest;
  }
  g.is_connected = comp.count() == 1;
  g.underlying_tree = g.is_connected && forest;

  // Kahn's algorithm: a directed cycle exists iff not every vertex drains.
  std::vector<std::size_t> indeg(n, 0);
  for (const Arrow& a : q.arrows()) ++indeg[a.target];
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t drained = 0;
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    ++drained;
    for (ArrowId a : q.arrows_from(v))
      if (--indeg[q.arrow(a).target] == 0) ready.push_back(q.arrow(a).target);
  }
  g.has_oriented_cycles = drained != n;

  bool one_in_one_out = q.arrow_count() == n;
  for (VertexId v = 0; v < n && one_in_one_out; ++v)
    one_in_one_out = q.arrows_from(v).size() == 1 && q.arrows_into(v).size() == 1;
  g.is_oriented_cycle = one_in_one_out && g.is_connected;
  return g;
}

}  // namespace quiverhh
