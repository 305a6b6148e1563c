#include "cpo/documents.hpp"

#include <sstream>

namespace cpo::doc {

namespace {

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorCode::Parse, why); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected an object around \"" + std::string(key) + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t as_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

const Json& as_array(const Json& j, std::size_t len, const char* what) {
  if (!j.is_array() || j.size() != len)
    bad(std::string(what) + " must be an array of length " + std::to_string(len));
  return j;
}

std::string model_of(const Json& j) {
  const Json& m = field(j, "model");
  if (!m.is_string()) bad("\"model\" must be a string");
  return m.get<std::string>();
}

// Structural comparison; display names do not matter.
bool is_example_setup(const GaloisSetup& setup) {
  const auto& ex = *qix::example_setup();
  return setup.group().table() == ex.group().table() &&
         setup.ideals().perms() == ex.ideals().perms();
}

Json members(const std::vector<Elem>& v) {
  Json a = Json::array();
  for (auto e : v) a.push_back(e);
  return a;
}

std::string set_str(const std::vector<Elem>& v, const FiniteGroup& g) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + g.name(v[i]);
  return s + "}";
}

std::string vec_str(const ValVector& v) {
  std::string s = "(";
  for (std::size_t m = 0; m < v.size(); ++m) s += (m ? "," : "") + std::to_string(v[m]);
  return s + ")";
}

std::string coset_label(const GraphOfF& graph, std::size_t c, const FiniteGroup& g) {
  return c == 0 ? "H" : g.name(graph.representative(c)) + "H";
}

void write_text(const Json& j, std::ostringstream& os, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      os << pad << "  " << Json(it.key()).dump() << ": ";
      write_text(it.value(), os, indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << "}";
    return;
  }
  if (j.is_array()) {
    bool has_object = false;
    for (const auto& e : j) has_object |= e.is_object();
    if (!has_object) {
      os << j.dump();
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad << "  ";
      write_text(j[i], os, indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << "]";
    return;
  }
  os << j.dump();
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

std::string to_text(const Json& j) {
  std::ostringstream os;
  write_text(j, os, 0);
  os << "\n";
  return os.str();
}

GaloisSetup parse_setup(const Json& j) {
  const Json& group = field(j, "group");
  const std::size_t n = as_index(field(group, "order"), "group.order");
  if (n == 0) bad("group.order must be positive");
  if (n > kMaxGroupOrder)
    throw Error(ErrorCode::InvalidArgument,
                "group order " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxGroupOrder));
  std::vector<std::string> names;
  if (group.contains("names")) {
    const Json& jn = as_array(group["names"], n, "group.names");
    for (const auto& s : jn) {
      if (!s.is_string()) bad("group.names entries must be strings");
      names.push_back(s.get<std::string>());
    }
  }
  Table table;
  for (const auto& row : as_array(field(group, "table"), n, "group.table")) {
    std::vector<Elem> r;
    for (const auto& e : as_array(row, n, "group.table row")) r.push_back(as_index(e, "table entry"));
    table.push_back(std::move(r));
  }
  const Json& ideals = field(j, "ideals");
  const std::size_t r = as_index(field(ideals, "count"), "ideals.count");
  if (r == 0) bad("ideals.count must be positive");
  std::vector<Perm> perms;
  for (const auto& row : as_array(field(ideals, "action"), n, "ideals.action")) {
    Perm p;
    for (const auto& e : as_array(row, r, "ideals.action row")) p.push_back(as_index(e, "action entry"));
    perms.push_back(std::move(p));
  }
  return GaloisSetup::make(FiniteGroup::make(std::move(names), std::move(table)),
                           std::move(perms));
}

Json emit_setup(const GaloisSetup& setup) {
  const auto& g = setup.group();
  Json group;
  group["order"] = g.order();
  group["names"] = g.names();
  Json table = Json::array();
  for (const auto& row : g.table()) table.push_back(members(row));
  group["table"] = table;
  Json ideals;
  ideals["count"] = setup.ideal_count();
  Json action = Json::array();
  for (const auto& p : setup.ideals().perms()) action.push_back(members(p));
  ideals["action"] = action;
  Json out;
  out["group"] = group;
  out["ideals"] = ideals;
  return out;
}

ParsedCocycle parse_cocycle(const Json& j, const SetupPtr& setup) {
  const std::string model = model_of(j);
  const std::size_t n = setup->order(), r = setup->ideal_count();
  const Json& values = field(j, "values");
  if (model == "valuation") {
    ValTable vals;
    for (const auto& row : as_array(values, n, "values")) {
      std::vector<ValVector> vr;
      for (const auto& cell : as_array(row, n, "values row")) {
        ValVector v(r);
        for (Label m = 0; m < r; ++m) v[m] = as_int(as_array(cell, r, "values cell")[m], "valuation");
        vr.push_back(std::move(v));
      }
      vals.push_back(std::move(vr));
    }
    return {ValCocycle::validate(setup, std::move(vals)), std::nullopt};
  }
  if (model == "qix") {
    if (!is_example_setup(*setup))
      throw Error(ErrorCode::SetupMismatch,
                  "the qix model lives on the example setup (C2 swapping two ideals)");
    qix::ExactTable t;
    for (Elem s = 0; s < 2; ++s)
      for (Elem u = 0; u < 2; ++u) {
        const Json& cell = as_array(as_array(values, 2, "values")[s], 2, "values row")[u];
        if (!cell.is_string()) bad("qix values must be strings");
        t[s][u] = qix::parse(cell.get<std::string>());
      }
    auto exact = qix::ExactCocycle::validate(std::move(t));
    auto val = qix::to_valuation_model(exact);
    return {ValCocycle::validate(setup, val.table()), std::move(exact)};
  }
  bad("unknown cocycle model \"" + model + "\"");
}

Json emit_cocycle(const ValCocycle& f) {
  Json values = Json::array();
  for (const auto& row : f.table()) {
    Json jr = Json::array();
    for (const auto& v : row) jr.push_back(v.exps());
    values.push_back(jr);
  }
  Json out;
  out["model"] = "valuation";
  out["values"] = values;
  return out;
}

Json emit_exact_cocycle(const qix::ExactCocycle& f) {
  Json values = Json::array();
  for (const auto& row : f.table()) {
    Json jr = Json::array();
    for (const auto& v : row) jr.push_back(qix::to_string(v));
    values.push_back(jr);
  }
  Json out;
  out["model"] = "qix";
  out["values"] = values;
  return out;
}

Witness parse_witness(const Json& j, const GaloisSetup& setup) {
  const std::string model = model_of(j);
  const Json& values = field(j, "values");
  if (model == "valuation-witness") {
    const std::size_t n = setup.order(), r = setup.ideal_count();
    CoboundaryWitness w;
    for (const auto& row : as_array(values, n, "values")) {
      ValVector v(r);
      for (Label m = 0; m < r; ++m) v[m] = as_int(as_array(row, r, "witness row")[m], "valuation");
      w.cvecs.push_back(std::move(v));
    }
    if (!w.cvecs[0].is_unit()) throw Error(ErrorCode::NotNormalized, "c_1 must be 1");
    return w;
  }
  if (model == "qix-witness") {
    if (!is_example_setup(setup))
      throw Error(ErrorCode::SetupMismatch, "qix witnesses live on the example setup");
    std::array<qix::QiRatFunc, 2> c;
    for (Elem s = 0; s < 2; ++s) {
      const Json& cell = as_array(values, 2, "values")[s];
      if (!cell.is_string()) bad("qix witness values must be strings");
      c[s] = qix::parse(cell.get<std::string>());
    }
    return c;
  }
  bad("unknown witness model \"" + model + "\"");
}

Json emit_witness(const CoboundaryWitness& w) {
  Json values = Json::array();
  for (const auto& v : w.cvecs) values.push_back(v.exps());
  Json out;
  out["model"] = "valuation-witness";
  out["values"] = values;
  return out;
}

Json emit_exact_witness(const std::array<qix::QiRatFunc, 2>& c) {
  Json out;
  out["model"] = "qix-witness";
  out["values"] = Json::array({qix::to_string(c[0]), qix::to_string(c[1])});
  return out;
}

Json emit_report(const ClassificationReport& rep) {
  Json out;
  out["H"] = members(rep.H.members);

  Json cosets = Json::array();
  for (const auto& c : rep.graph.cosets) cosets.push_back(members(c));
  Json edges = Json::array();
  for (const auto& [a, b] : rep.graph.hasse)
    edges.push_back(Json::array({rep.graph.representative(a), rep.graph.representative(b)}));
  Json graph;
  graph["cosets"] = cosets;
  graph["hasse_edges"] = edges;
  out["graph"] = graph;

  out["azumaya"] = rep.azumaya;
  out["hereditary"] = rep.hereditary;
  out["maximal"] = rep.maximal;

  Json radical = Json::array();
  for (const auto& v : rep.radical.iexps) radical.push_back(v.exps());
  out["radical"] = radical;
  Json bounds = Json::array();
  for (const auto& v : rep.left_order_bounds) bounds.push_back(v.exps());
  out["left_order_bounds"] = bounds;

  Json locs = Json::array();
  for (const auto& l : rep.localizations) {
    Json jl;
    jl["ideal"] = l.m;
    jl["decomposition_group"] = members(l.decomposition_group.members);
    jl["maximal"] = l.maximal;
    locs.push_back(jl);
  }
  out["localizations"] = locs;

  Json wit;
  wit["hereditary"] = nullptr;
  wit["maximal"] = nullptr;
  if (rep.hereditary_witness) {
    Json w;
    w["tau"] = rep.hereditary_witness->tau;
    w["ideal"] = rep.hereditary_witness->m;
    w["exponent"] = rep.hereditary_witness->exponent;
    wit["hereditary"] = w;
  }
  if (rep.maximal_witness) {
    Json w;
    w["ideal"] = rep.maximal_witness->m;
    w["coset"] = members(rep.maximal_witness->coset);
    wit["maximal"] = w;
  }
  out["witnesses"] = wit;

  Json checks;
  checks["corollary1"] = rep.cross_checks.corollary1;
  checks["oracle"] = rep.cross_checks.oracle;
  checks["lemma"] = rep.cross_checks.lemma;
  out["cross_checks"] = checks;
  return out;
}

std::string report_summary(const ClassificationReport& rep, const GaloisSetup& setup) {
  const auto& g = setup.group();
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  os << "group order " << g.order() << ", " << setup.ideal_count() << " maximal ideal(s)\n";
  os << "H = " << set_str(rep.H.members, g) << "\n";
  os << "graph of f: " << rep.graph.cosets.size() << " coset(s)";
  if (!rep.graph.hasse.empty()) {
    os << "; cover edges:";
    for (const auto& [a, b] : rep.graph.hasse)
      os << " " << coset_label(rep.graph, a, g) << " < " << coset_label(rep.graph, b, g) << ";";
  }
  os << "\n";
  os << "azumaya: " << yes(rep.azumaya) << "\n";
  os << "hereditary: " << yes(rep.hereditary);
  if (rep.hereditary_witness)
    os << " (f(" << g.name(rep.hereditary_witness->tau) << ", "
       << g.name(g.inverse(rep.hereditary_witness->tau)) << ") lies in M"
       << rep.hereditary_witness->m << "^" << rep.hereditary_witness->exponent << ")";
  os << "\n";
  os << "maximal: " << yes(rep.maximal);
  if (rep.maximal_witness && !rep.maximal_witness->coset.empty())
    os << " (right coset " << set_str(rep.maximal_witness->coset, g) << " of D_M"
       << rep.maximal_witness->m << " has no g with f(g, g^-1) outside M"
       << rep.maximal_witness->m << ")";
  else if (rep.maximal_witness)
    os << " (not hereditary)";
  os << "\n";
  os << "radical I_tau:";
  for (Elem t = 0; t < rep.radical.iexps.size(); ++t)
    os << " " << g.name(t) << "=" << vec_str(rep.radical.iexps[t]);
  os << "\n";
  os << "localizations:";
  for (const auto& l : rep.localizations)
    os << " M" << l.m << " (D=" << set_str(l.decomposition_group.members, g)
       << ", maximal " << yes(l.maximal) << ");";
  os << "\n";
  os << "cross-checks: corollary1 " << (rep.cross_checks.corollary1 ? "ok" : "FAIL")
     << ", oracle " << (rep.cross_checks.oracle ? "ok" : "FAIL") << ", lemma "
     << (rep.cross_checks.lemma ? "ok" : "FAIL") << "\n";
  return os.str();
}

std::string graph_dot(const GraphOfF& graph, const GaloisSetup& setup) {
  const auto& g = setup.group();
  std::ostringstream os;
  os << "digraph graph_of_f {\n";
  os << "  rankdir=BT;\n";
  for (std::size_t c = 0; c < graph.cosets.size(); ++c) {
    os << "  c" << graph.representative(c) << " [label=" << Json(coset_label(graph, c, g)).dump();
    if (c == 0) os << ", peripheries=2";
    os << "];\n";
  }
  for (const auto& [a, b] : graph.hasse)
    os << "  c" << graph.representative(a) << " -> c" << graph.representative(b) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cpo::doc
