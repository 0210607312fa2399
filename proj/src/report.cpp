#include "quiverhh/report.hpp"

#include <algorithm>

#include "quiverhh/cochain.hpp"
#include "quiverhh/errors.hpp"

namespace quiverhh {

namespace {

Json path_json(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return Json::array({q.vertex_name(p.source())});
  return q.arrow_names(p);
}

Json vector_json(const SparseVector& v) {
  Json terms = Json::array();
  for (const auto& [i, c] : v.entries()) terms.push_back({{"basis", i}, {"coefficient", to_string(c)}});
  return terms;
}

Json factors_json(const std::vector<SemisimpleFactor>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back({{"type", f.type}, {"size", f.size}, {"arrows", f.arrows}});
  return out;
}

Json closure_json(const Quiver& q, const ClosureCheck& c) {
  Json w = nullptr;
  if (c.witness) w = {{"member", path_json(q, c.witness->member)}, {"other", path_json(q, c.witness->other)}};
  return {{"holds", c.holds}, {"witness", w}};
}

bool closure_witness_valid(const MonomialAlgebra& A, const ClosureCheck& c) {
  if (c.holds) return !c.witness;
  if (!c.witness) return false;
  const auto& [m, o] = *c.witness;
  return A.relations().contains(m) && parallel(m, o) && !o.is_trivial() && !A.relations().contains(o);
}

bool completeness_witness_valid(const MonomialAlgebra& A, const CompletenessCheck& c) {
  if (!c.witness) return c.holds || !c.exact;
  const auto& [m, o] = *c.witness;
  return !c.holds && parallel(m, o) && in_ideal(m, A) && !in_ideal(o, A) && o.length() >= 2;
}

bool saturation_witness_valid(const MonomialAlgebra& A, const SaturationCheck& c) {
  if (c.holds) return !c.witness;
  if (!c.witness) return false;
  const auto& w = *c.witness;
  auto sub = diamond(A.quiver(), w.relation, w.position, A.quiver().arrow_path(w.arrow));
  return A.relations().contains(w.relation) && sub && *sub == w.substituted && !in_ideal(w.substituted, A);
}

}  // namespace

Json to_json(const LieInvariants& inv) {
  return {{"dimension", inv.dim},
          {"derived_series", inv.derived},
          {"radical_dimension", inv.radical_dim},
          {"radical_abelian", inv.radical_abelian},
          {"center_dimension", inv.center_dim},
          {"killing_rank", inv.killing_rank}};
}

Json to_json(const OracleComparison& cmp) {
  Json rows = Json::array();
  for (const auto& d : cmp.degrees) {
    Json comb = nullptr;
    if (d.combinatorial) comb = *d.combinatorial;
    rows.push_back({{"degree", d.degree}, {"combinatorial", comb}, {"oracle", d.oracle}, {"agree", d.agree}});
  }
  return {{"degrees", rows},
          {"vanishing_claimed", cmp.vanishing_claimed},
          {"lie",
           {{"combinatorial", to_json(cmp.combinatorial_lie)},
            {"derivation", to_json(cmp.derivation_lie)},
            {"agree", cmp.lie_agree}}},
          {"agree", cmp.agree()}};
}

Json to_json(const DecompositionReport& r) {
  Json predicted = nullptr;
  if (r.predicted_dim)
    predicted = {{"dimension", *r.predicted_dim}, {"radical_dimension", *r.predicted_radical_dim}};
  Json computed = to_json(r.computed);
  computed["semisimple_dimension"] = r.semisimple_dim;
  return {{"hypothesis", hypothesis_name(r.hypothesis)},
          {"semisimple_factors", factors_json(r.semisimple_factors)},
          {"chi", r.chi},
          {"R_dimension", r.R_dim},
          {"predicted", predicted},
          {"computed", computed},
          {"verdicts", {{"reductive", r.reductive}, {"semisimple", r.semisimple}, {"solvable", r.solvable}}},
          {"discrepancies", r.discrepancies}};
}

Json check_report(const MonomialAlgebra& A, std::optional<std::size_t> bound) {
  const Quiver& q = A.quiver();
  const BarQuiver bq = bar_quiver(q);

  Json rels = Json::array();
  for (const Path& p : A.relations().paths()) rels.push_back(path_json(q, p));

  const CompletenessCheck comp = is_complete_monomial(A, bound);
  Json comp_w = nullptr;
  if (comp.witness) comp_w = {{"member", path_json(q, comp.witness->member)}, {"other", path_json(q, comp.witness->other)}};
  Json comp_bound = nullptr;
  if (comp.bound) comp_bound = *comp.bound;

  const SaturationCheck sat = is_completely_saturated(A);
  Json sat_w = nullptr;
  if (sat.witness)
    sat_w = {{"relation", path_json(q, sat.witness->relation)},
             {"position", sat.witness->position},
             {"arrow", q.arrow(sat.witness->arrow).name},
             {"substituted", path_json(q, sat.witness->substituted)}};

  const ClosureCheck closed = is_closed_under_parallel_paths(A);

  Json s = Json::array();
  for (std::size_t c : bq.multiple_classes()) {
    std::vector<std::string> names;
    for (ArrowId a : bq.classes[c].arrows) names.push_back(q.arrow(a).name);
    s.push_back({{"source", q.vertex_name(bq.classes[c].source)},
                 {"target", q.vertex_name(bq.classes[c].target)},
                 {"arrows", names}});
  }

  std::vector<std::string> problems;
  if (!completeness_witness_valid(A, comp)) problems.push_back("complete monomial witness does not re-validate");
  if (!saturation_witness_valid(A, sat)) problems.push_back("saturation witness does not re-validate");
  if (!closure_witness_valid(A, closed)) problems.push_back("closure witness does not re-validate");
  if (closed.holds && !sat.holds) problems.push_back("closed under parallel paths but not completely saturated");
  if (comp.holds && !sat.holds) problems.push_back("complete monomial but not completely saturated");

  Json doc;
  doc["command"] = "check";
  doc["algebra"] = {{"vertices", q.vertex_count()},
                    {"arrows", q.arrow_count()},
                    {"relations", rels},
                    {"dimension", A.dimension()},
                    {"max_basis_length", A.max_basis_length()}};
  doc["minimal"] = is_minimal(q, A.relations());
  doc["finite_dimensional"] = true;
  doc["triangular"] = is_triangular(A);
  doc["radical_square_zero"] = is_radical_square_zero(A);
  doc["complete_monomial"] = {{"holds", comp.holds}, {"exact", comp.exact}, {"bound", comp_bound}, {"witness", comp_w}};
  doc["completely_saturated"] = {{"holds", sat.holds}, {"witness", sat_w}};
  doc["closed_under_parallel_paths"] = closure_json(q, closed);
  doc["qbar_tree"] = bq.underlying_tree();
  doc["S"] = s;
  doc["chi"] = euler_characteristic(bq);
  doc["problems"] = problems;
  doc["consistent"] = problems.empty();
  return doc;
}

Json hh_report(const MonomialAlgebra& A, int degree) {
  if (degree != 0 && degree != 1) throw DegreeTooLarge("hh supports degrees 0 and 1");
  const LowDegreeComplex c = build_complex(A);
  const SubquotientBasis sq = degree == 0 ? quotient(kernel(c.psi0), {}, c.c0.size())
                                          : quotient(kernel(c.psi1), image(c.psi0), c.c1.size());
  const ParallelPairSpace& amb = degree == 0 ? c.c0 : c.c1;
  Json reps = Json::array();
  for (const auto& r : sq.quotient_reps) reps.push_back(amb.describe(r, A.quiver()));
  Json doc;
  doc["command"] = "hh";
  doc["degree"] = degree;
  doc["dimension"] = sq.dimension();
  doc["cochain_dimension"] = sq.ambient_dim;
  doc["kernel_dimension"] = sq.kernel_basis.size();
  doc["image_dimension"] = sq.image_basis.size();
  doc["representatives"] = reps;
  doc["consistent"] = sq.dimension() == sq.kernel_basis.size() - sq.image_basis.size();
  return doc;
}

Json classify_report(const MonomialAlgebra& A) {
  const DecompositionReport r = classify(A);
  Json doc;
  doc["command"] = "classify";
  const Json body = to_json(r);
  for (const auto& [k, v] : body.items()) doc[k] = v;
  doc["consistent"] = r.consistent();
  return doc;
}

Json semisimple_report(const MonomialAlgebra& A) {
  const SemisimpleVerdict v = check_semisimple(A);
  const VanishingVerdict van = vanishing_verdict(A);
  Json claim = nullptr;
  if (van.hypotheses_hold)
    claim = {{"hh0", van.claimed_hh0}, {"hh1", van.claimed_hh1}, {"higher", 0}, {"factors", factors_json(van.factors)}};
  Json doc;
  doc["command"] = "semisimple";
  doc["conditions"] = {{"closed_under_parallel_paths", closure_json(A.quiver(), v.closed_parallel)},
                       {"qbar_tree", v.qbar_tree},
                       {"S_nonempty", v.s_nonempty}};
  doc["semisimple"] = v.verdict;
  doc["killing_check"] = {{"hh1_dimension", v.hh1_dim}, {"killing_nondegenerate", v.killing_nondegenerate}};
  doc["agree"] = v.agrees();
  doc["vanishing"] = {{"hypotheses_hold", van.hypotheses_hold}, {"claim", claim}};
  doc["consistent"] = v.agrees();
  return doc;
}

Json bracket_table_report(const MonomialAlgebra& A) {
  const LieAlgebraPresentation g = hh1_lie(A);
  Json brackets = Json::array();
  for (std::size_t i = 0; i < g.dimension(); ++i)
    for (std::size_t j = i + 1; j < g.dimension(); ++j)
      if (!g.bracket(i, j).empty())
        brackets.push_back({{"left", i}, {"right", j}, {"value", vector_json(g.bracket(i, j))}});
  const bool anti = !antisymmetry_violation(g);
  const bool jacobi = !jacobi_violation(g);
  Json doc;
  doc["command"] = "bracket-table";
  doc["dimension"] = g.dimension();
  doc["basis"] = g.labels();
  doc["brackets"] = brackets;
  doc["antisymmetric"] = anti;
  doc["jacobi"] = jacobi;
  doc["consistent"] = anti && jacobi;
  return doc;
}

Json oracle_report(const MonomialAlgebra& A, std::size_t max_degree, const OracleOptions& opts) {
  const OracleComparison cmp = compare_unchecked(A, max_degree, opts);
  Json doc;
  doc["command"] = "oracle";
  doc["max_degree"] = max_degree;
  const Json body = to_json(cmp);
  for (const auto& [k, v] : body.items()) doc[k] = v;
  doc["consistent"] = cmp.agree();
  return doc;
}

bool report_consistent(const Json& doc) {
  auto it = doc.find("consistent");
  return it == doc.end() || (it->is_boolean() && it->get<bool>());
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

bool is_flat(const Json& v) {
  if (v.is_array()) return std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive() || (x.is_array() && is_flat(x)); });
  return v.is_primitive();
}

std::string flat_text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + flat_text(v[i]);
    return out + "]";
  }
  return v.dump();
}

void render_object(const Json& obj, const std::string& indent, std::string& out);

void render_value(const std::string& head, const Json& v, const std::string& indent, std::string& out) {
  if (is_flat(v)) {
    out += head + flat_text(v) + "\n";
    return;
  }
  out += head + "\n";
  if (v.is_object()) {
    render_object(v, indent + "  ", out);
    return;
  }
  for (const auto& item : v) {
    if (item.is_object()) {
      std::string block;
      render_object(item, indent + "    ", block);
      if (block.empty()) {
        out += indent + "  - {}\n";
        continue;
      }
      // Replace the leading indent of the first line by a list marker.
      out += indent + "  - " + block.substr(indent.size() + 4);
    } else {
      render_value(indent + "  - ", item, indent + "    ", out);
    }
  }
}

void render_object(const Json& obj, const std::string& indent, std::string& out) {
  std::size_t width = 0;
  for (const auto& [k, v] : obj.items())
    if (is_flat(v)) width = std::max(width, k.size());
  for (const auto& [k, v] : obj.items()) {
    if (is_flat(v))
      render_value(indent + k + std::string(width - k.size() + 2, ' '), v, indent, out);
    else
      render_value(indent + k + ":", v, indent, out);
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::string out;
  if (doc.is_object())
    render_object(doc, "", out);
  else
    render_value("", doc, "", out);
  return out;
}

}  // namespace quiverhh
