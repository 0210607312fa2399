#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "quiverhh/algebra.hpp"
#include "quiverhh/lie.hpp"
#include "quiverhh/oracle.hpp"

namespace quiverhh {

using Json = nlohmann::ordered_json;

Json to_json(const LieInvariants& inv);
Json to_json(const OracleComparison& cmp);
Json to_json(const DecompositionReport& r);

// One document per CLI command. Every document has "command" first and a
// boolean "consistent" that is false when an internal cross-check failed.
Json check_report(const MonomialAlgebra& A, std::optional<std::size_t> bound = std::nullopt);
Json hh_report(const MonomialAlgebra& A, int degree);
Json classify_report(const MonomialAlgebra& A);
Json semisimple_report(const MonomialAlgebra& A);
Json bracket_table_report(const MonomialAlgebra& A);
Json oracle_report(const MonomialAlgebra& A, std::size_t max_degree, const OracleOptions& opts = {});

bool report_consistent(const Json& doc);

// Machine form: two-space indented JSON with a trailing newline.
std::string render_json(const Json& doc);
// Human form: aligned "key  value" lines rendered from the machine form.
std::string render_text(const Json& doc);

}  // namespace quiverhh
