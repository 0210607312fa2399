#include <CLI11.hpp>
#include <iostream>

#include "quiverhh/errors.hpp"
#include "quiverhh/io.hpp"
#include "quiverhh/report.hpp"

using namespace quiverhh;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology HH^0, HH^1 and the Lie structure of HH^1 for monomial path algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::string seed_order = "lex";
  app.add_flag("--json", json, "Print the machine-readable report");
  app.add_option("--seed-order", seed_order, "Basis ordering; only lexicographic order is supported")
      ->check(CLI::IsMember({"lex"}));

  std::string file;
  std::optional<std::size_t> bound;
  int degree = 0;
  std::size_t max_degree = 4;

  auto* check = app.add_subcommand("check", "Decide the combinatorial conditions on the relations");
  check->add_option("file", file, "Quiver file")->required();
  check->add_option("--bound", bound, "Cap on the length of completeness witnesses");

  auto* hh = app.add_subcommand("hh", "Dimension and representatives of HH^0 or HH^1");
  hh->add_option("file", file, "Quiver file")->required();
  hh->add_option("--degree", degree, "Degree, 0 or 1")->required()->check(CLI::IsMember({0, 1}));

  auto* cls = app.add_subcommand("classify", "Radical, semisimple part and decomposition of HH^1");
  cls->add_option("file", file, "Quiver file")->required();

  auto* semi = app.add_subcommand("semisimple", "Semisimplicity conditions and Killing form check");
  semi->add_option("file", file, "Quiver file")->required();

  auto* table = app.add_subcommand("bracket-table", "Structure constants of HH^1");
  table->add_option("file", file, "Quiver file")->required();

  auto* oracle = app.add_subcommand("oracle", "Compare against the bar complex and derivation oracles");
  oracle->add_option("file", file, "Quiver file")->required();
  oracle->add_option("--max-degree", max_degree, "Highest bar complex degree")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    LoadedAlgebra loaded = load(file);
    for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
    const MonomialAlgebra& A = loaded.algebra;

    Json doc;
    if (check->parsed()) {
      doc = check_report(A, bound);
    } else if (hh->parsed()) {
      doc = hh_report(A, degree);
    } else if (cls->parsed()) {
      doc = classify_report(A);
    } else if (semi->parsed()) {
      doc = semisimple_report(A);
    } else if (table->parsed()) {
      doc = bracket_table_report(A);
    } else {
      doc = oracle_report(A, max_degree);
    }
    std::cout << (json ? render_json(doc) : render_text(doc));
    return report_consistent(doc) ? kOk : kViolation;
  } catch (const Mismatch& e) {
    std::cerr << "error: " << e.what() << "\n" << e.payload() << "\n";
    return kViolation;
  } catch (const ConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
