#include "quiverhh/io.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "quiverhh/errors.hpp"

namespace quiverhh {

using nlohmann::ordered_json;

namespace {

const ordered_json& field(const ordered_json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(where + ": missing field '" + key + "'");
  return *it;
}

std::string string_of(const ordered_json& v, const std::string& where) {
  if (!v.is_string()) throw ValidationError(where + ": expected a string");
  return v.get<std::string>();
}

void only_keys(const ordered_json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw ValidationError(where + ": unknown field '" + k + "'");
  }
}

}  // namespace

QuiverFile parse_quiver_file(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
  if (!doc.is_object()) throw ValidationError("top level: expected an object");
  only_keys(doc, {"vertices", "arrows", "relations", "radical_square_zero"}, "top level");

  QuiverFile f;
  const auto& vs = field(doc, "vertices", "top level");
  if (!vs.is_array()) throw ValidationError("vertices: expected an array");
  for (const auto& v : vs) f.vertices.push_back(string_of(v, "vertices"));

  const auto& as = field(doc, "arrows", "top level");
  if (!as.is_array()) throw ValidationError("arrows: expected an array");
  for (const auto& a : as) {
    if (!a.is_object()) throw ValidationError("arrows: expected objects");
    only_keys(a, {"name", "source", "target"}, "arrow");
    f.arrows.push_back({string_of(field(a, "name", "arrow"), "arrow name"),
                        string_of(field(a, "source", "arrow"), "arrow source"),
                        string_of(field(a, "target", "arrow"), "arrow target")});
  }

  if (auto it = doc.find("relations"); it != doc.end()) {
    if (!it->is_array()) throw ValidationError("relations: expected an array");
    for (const auto& r : *it) {
      if (!r.is_array()) throw ValidationError("relations: each relation is an array of arrow names");
      std::vector<std::string> names;
      for (const auto& n : r) names.push_back(string_of(n, "relation"));
      f.relations.push_back(std::move(names));
    }
  }
  if (auto it = doc.find("radical_square_zero"); it != doc.end()) {
    if (!it->is_boolean()) throw ValidationError("radical_square_zero: expected a boolean");
    f.radical_square_zero = it->get<bool>();
  }
  return f;
}

std::string dump_quiver_file(const QuiverFile& f) {
  ordered_json doc;
  doc["vertices"] = f.vertices;
  doc["arrows"] = ordered_json::array();
  for (const auto& a : f.arrows) doc["arrows"].push_back({{"name", a.name}, {"source", a.source}, {"target", a.target}});
  doc["relations"] = f.relations;
  if (f.radical_square_zero) doc["radical_square_zero"] = true;
  return doc.dump(2) + "\n";
}

QuiverFile describe_algebra(const MonomialAlgebra& A) {
  const Quiver& q = A.quiver();
  QuiverFile f;
  f.vertices = q.vertex_names();
  for (const auto& a : q.arrows()) f.arrows.push_back({a.name, q.vertex_name(a.source), q.vertex_name(a.target)});
  for (const Path& p : A.relations().paths()) f.relations.push_back(q.arrow_names(p));
  return f;
}

LoadedAlgebra build_from_file(const QuiverFile& f) {
  Quiver q(f.vertices, f.arrows);
  std::vector<Path> rels;
  if (f.radical_square_zero) {
    if (!f.relations.empty()) throw ValidationError("radical_square_zero preset excludes explicit relations");
    rels = length_two_paths(q);
  } else {
    for (const auto& names : f.relations) rels.push_back(q.path_from_names(names));
  }
  std::vector<std::string> warnings;
  const std::size_t distinct = std::set<Path>(rels.begin(), rels.end()).size();
  RelationSet z = minimize_relations(q, std::move(rels));
  if (z.size() < distinct)
    warnings.push_back("relation set was not minimal; reduced from " + std::to_string(distinct) + " to " +
                       std::to_string(z.size()) + " relations");
  return {build_algebra(std::move(q), std::move(z)), std::move(warnings)};
}

LoadedAlgebra load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return build_from_file(parse_quiver_file(buf.str()));
}

Path parse_path(const Quiver& q, const std::string& text) {
  bool short_names = true;
  for (const auto& a : q.arrows()) short_names = short_names && a.name.size() == 1;
  std::vector<std::string> names;
  if (short_names) {
    for (char c : text) names.emplace_back(1, c);
  } else {
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, '.');) names.push_back(part);
  }
  bool all_arrows = !names.empty();
  for (const auto& n : names) all_arrows = all_arrows && q.find_arrow(n).has_value();
  if (all_arrows) return q.path_from_names(names);
  if (auto v = q.find_vertex(text)) return q.trivial(*v);
  throw ValidationError("cannot read path '" + text + "'");
}

}  // namespace quiverhh
