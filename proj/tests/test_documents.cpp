#include <doctest.h>

#include "cpo/documents.hpp"
#include "support.hpp"

using namespace cpo;
using namespace cpo::doc;
using namespace testsupport;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InternalInconsistency;
}

const char* kExampleSetup = R"({
  "group": {"order": 2, "names": ["1", "sigma"], "table": [[0, 1], [1, 0]]},
  "ideals": {"count": 2, "action": [[0, 1], [1, 0]]}
})";

}  // namespace

TEST_CASE("setup documents") {
  const auto s = parse_setup(parse_json(kExampleSetup));
  CHECK(s == groups::example_setup());
  CHECK(to_text(emit_setup(s)) ==
        "{\n"
        "  \"group\": {\n"
        "    \"order\": 2,\n"
        "    \"names\": [\"1\",\"sigma\"],\n"
        "    \"table\": [[0,1],[1,0]]\n"
        "  },\n"
        "  \"ideals\": {\n"
        "    \"count\": 2,\n"
        "    \"action\": [[0,1],[1,0]]\n"
        "  }\n"
        "}\n");
  // round trip both ways
  const auto text = to_text(emit_setup(s));
  CHECK(to_text(emit_setup(parse_setup(parse_json(text)))) == text);
  for (const auto& c : corpus_setups())
    CHECK(parse_setup(emit_setup(*c)) == *c);
}

TEST_CASE("setup document errors") {
  CHECK(code_of([] { parse_json("{"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_setup(parse_json("{}")); }) == ErrorCode::Parse);
  CHECK(code_of([] {
          parse_setup(parse_json(R"({"group": {"order": 2, "table": [[0,1],[1,1]]},
                                    "ideals": {"count": 1, "action": [[0],[0]]}})"));
        }) == ErrorCode::NotPermutationTable);
  CHECK(code_of([] {
          parse_setup(parse_json(R"({"group": {"order": 2, "table": [[0,1],[1,0]]},
                                    "ideals": {"count": 2, "action": [[0,1],[0,1]]}})"));
        }) == ErrorCode::ActionNotTransitive);
  CHECK(code_of([] {
          parse_setup(parse_json(R"({"group": {"order": 2, "table": [[0,1],[1,0]]},
                                    "ideals": {"count": 2, "action": [[0,1]]}})"));
        }) == ErrorCode::Parse);
  CHECK(code_of([] {
          parse_setup(parse_json(R"({"group": {"order": 65, "table": []},
                                    "ideals": {"count": 1, "action": []}})"));
        }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] {
          parse_setup(parse_json(R"({"group": {"order": 1, "table": [[-1]]},
                                    "ideals": {"count": 1, "action": [[0]]}})"));
        }) == ErrorCode::Parse);
}

TEST_CASE("cocycle documents") {
  const auto ex = example();
  const auto p = parse_cocycle(parse_json(R"({"model": "valuation",
      "values": [[[0,0],[0,0]],[[0,0],[1,1]]]})"), ex);
  CHECK(p.valuation.table() == f1().table());
  CHECK_FALSE(p.exact);
  CHECK(to_text(emit_cocycle(p.valuation)) ==
        "{\n  \"model\": \"valuation\",\n  \"values\": [[[0,0],[0,0]],[[0,0],[1,1]]]\n}\n");

  const auto q = parse_cocycle(
      parse_json(R"({"model": "qix", "values": [["1","1"],["1","x^5+2*x^3+x"]]})"), ex);
  REQUIRE(q.exact);
  CHECK(q.valuation.table() == f2().table());
  CHECK(to_text(emit_exact_cocycle(*q.exact)) ==
        "{\n  \"model\": \"qix\",\n  \"values\": [[\"1\",\"1\"],[\"1\",\"x^5+2*x^3+x\"]]\n}\n");

  CHECK(code_of([&] {
          parse_cocycle(parse_json(R"({"model": "valuation",
              "values": [[[0,0],[0,0]],[[0,0],[1,0]]]})"), ex);
        }) == ErrorCode::CocycleIdentityViolated);
  CHECK(code_of([&] {
          parse_cocycle(parse_json(R"({"model": "valuation", "values": [[[0,0]]]})"), ex);
        }) == ErrorCode::Parse);
  CHECK(code_of([&] {
          parse_cocycle(parse_json(R"({"model": "tensor", "values": []})"), ex);
        }) == ErrorCode::Parse);
  CHECK(code_of([&] {
          parse_cocycle(parse_json(R"({"model": "qix", "values": [["1","1"],["1","1"]]})"),
                        c2_dvr());
        }) == ErrorCode::SetupMismatch);
  CHECK(code_of([&] {
          parse_cocycle(parse_json(R"({"model": "qix", "values": [["1","1"],["1","(x"]]})"),
                        ex);
        }) == ErrorCode::Parse);
}

TEST_CASE("property: cocycle documents round-trip") {
  for (const auto& [idx, f] : build_corpus(5, 3, 404)) {
    const auto text = to_text(emit_cocycle(f));
    const auto back = parse_cocycle(parse_json(text), f.setup_ptr());
    CHECK(back.valuation.table() == f.table());
    CHECK(to_text(emit_cocycle(back.valuation)) == text);
  }
}

TEST_CASE("witness documents") {
  const auto ex = groups::example_setup();
  const auto w = parse_witness(
      parse_json(R"({"model": "valuation-witness", "values": [[0,0],[1,0]]})"), ex);
  REQUIRE(std::holds_alternative<CoboundaryWitness>(w));
  CHECK(std::get<CoboundaryWitness>(w).cvecs[1] == ValVector{1, 0});
  CHECK(to_text(emit_witness(std::get<CoboundaryWitness>(w))) ==
        "{\n  \"model\": \"valuation-witness\",\n  \"values\": [[0,0],[1,0]]\n}\n");

  const auto e = parse_witness(
      parse_json(R"({"model": "qix-witness", "values": ["1", "x+1i"]})"), ex);
  REQUIRE(e.index() == 1);
  const auto& c = std::get<1>(e);
  CHECK(qix::verify_coboundary_exact(qix::build_example(1), qix::build_example(2), c));
  CHECK(to_text(emit_exact_witness(c)) ==
        "{\n  \"model\": \"qix-witness\",\n  \"values\": [\"1\",\"x+1i\"]\n}\n");

  CHECK(code_of([&] {
          parse_witness(parse_json(R"({"model": "valuation-witness", "values": [[1,0],[1,0]]})"),
                        ex);
        }) == ErrorCode::NotNormalized);
}

TEST_CASE("report document") {
  const auto j = emit_report(classify(f2()));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"H", "graph", "azumaya", "hereditary", "maximal",
                                         "radical", "left_order_bounds", "localizations",
                                         "witnesses", "cross_checks"});
  CHECK(j["H"] == Json::array({0}));
  CHECK(j["graph"]["hasse_edges"] == Json::parse("[[0,1]]"));
  CHECK(j["hereditary"] == false);
  CHECK(j["radical"] == Json::parse("[[1,1],[0,0]]"));
  CHECK(j["left_order_bounds"] == Json::parse("[[0,0],[-1,-1]]"));
  CHECK(j["localizations"][0]["maximal"] == true);
  CHECK(j["localizations"][1]["decomposition_group"] == Json::array({0}));
  CHECK(j["witnesses"]["hereditary"]["exponent"] == 2);
  CHECK(j["witnesses"]["maximal"]["coset"] == Json::array());
  CHECK(j["cross_checks"]["oracle"] == true);

  const auto j1 = emit_report(classify(f1()));
  CHECK(j1["witnesses"]["hereditary"].is_null());
  CHECK(j1["witnesses"]["maximal"]["coset"] == Json::array({1}));
}

TEST_CASE("report summary") {
  const auto s = report_summary(classify(f1()), groups::example_setup());
  CHECK(s.find("H = {1}\n") != std::string::npos);
  CHECK(s.find("hereditary: yes\n") != std::string::npos);
  CHECK(s.find("maximal: no (right coset {sigma} of D_M0") != std::string::npos);
  CHECK(s.find("cover edges: H < sigmaH;") != std::string::npos);
}

TEST_CASE("graph_dot") {
  const auto ex = groups::example_setup();
  CHECK(graph_dot(graph_of_f(f1()), ex) ==
        "digraph graph_of_f {\n"
        "  rankdir=BT;\n"
        "  c0 [label=\"H\", peripheries=2];\n"
        "  c1 [label=\"sigmaH\"];\n"
        "  c0 -> c1;\n"
        "}\n");
  CHECK(graph_dot(graph_of_f(f1()), ex) == graph_dot(graph_of_f(f2()), ex));
  CHECK(graph_dot(graph_of_f(ValCocycle::trivial(example())), ex) ==
        "digraph graph_of_f {\n  rankdir=BT;\n  c0 [label=\"H\", peripheries=2];\n}\n");
}

TEST_CASE("property: DOT of sampled S3 cocycles is acyclic with a single source") {
  const auto s = s3_natural();
  const auto g = groups::symmetric3();
  const auto regular = action_on_cosets(g, trivial_subgroup());
  for (const auto& setup : {s, regular})
    for (const auto& f : sample_cocycles(setup, 2, 15, 77)) {
      const auto gr = graph_of_f(f);
      const auto dot = graph_dot(gr, *setup);
      CHECK(dot.rfind("digraph graph_of_f {\n", 0) == 0);
      const std::size_t k = gr.cosets.size();
      std::vector<int> indeg(k, 0);
      for (const auto& [a, b] : gr.hasse) {
        CHECK(a != b);
        ++indeg[b];
        const std::string edge = "  c" + std::to_string(gr.representative(a)) + " -> c" +
                                 std::to_string(gr.representative(b)) + ";\n";
        CHECK(dot.find(edge) != std::string::npos);
      }
      // single source, the coset H
      for (std::size_t c = 0; c < k; ++c) CHECK((indeg[c] == 0) == (c == 0));
      // acyclic: edges go up in the order, and leq is antisymmetric
      for (const auto& [a, b] : gr.hasse) CHECK_FALSE(gr.leq[b][a]);
      CHECK(graph_dot(gr, *setup) == dot);
    }
}
