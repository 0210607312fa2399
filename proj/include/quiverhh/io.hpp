#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "quiverhh/algebra.hpp"

namespace quiverhh {

// On-disk description of a monomial algebra:
//   {"vertices": ["1", "2"],
//    "arrows": [{"name": "a", "source": "1", "target": "2"}],
//    "relations": [["b", "a"]],
//    "radical_square_zero": false}
// Each relation lists arrow names in composition order, so source(p_i) =
// target(p_{i+1}). "relations" and "radical_square_zero" are optional; the
// preset stands for every path of length two and excludes explicit relations.
struct QuiverFile {
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  std::vector<std::vector<std::string>> relations;
  bool radical_square_zero = false;
};

// Throws ParseError with the byte offset for malformed JSON and
// ValidationError for schema violations.
QuiverFile parse_quiver_file(std::string_view text);
std::string dump_quiver_file(const QuiverFile& f);
QuiverFile describe_algebra(const MonomialAlgebra& A);

struct LoadedAlgebra {
  MonomialAlgebra algebra;
  std::vector<std::string> warnings;
};

// Validates the quiver, minimizes the relations (warning when that drops
// any) and enumerates the basis. Throws ValidationError or
// InfiniteDimensional.
LoadedAlgebra build_from_file(const QuiverFile& f);
LoadedAlgebra load(const std::filesystem::path& path);

// Inverse of Quiver::format for nontrivial paths and vertex names.
Path parse_path(const Quiver& q, const std::string& text);

}  // namespace quiverhh
