// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "cpo/documents.hpp"
#include "support.hpp"

using namespace cpo;
using namespace testsupport;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok;
  std::string detail;
};

struct Captured {
  int status;
  std::string out;
};

Captured run_cli(const std::string& args) {
  const std::string cmd = std::string(CPO_CLI_PATH) + " " + args + " 2>/dev/null";
  Captured c{-1, ""};
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return c;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) c.out.append(buf, got);
  const int raw = pclose(p);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "cpo_acceptance";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = build_corpus(40, 3, 2024);
  return c;
}

Outcome example_reproduction() {
  const auto t0 = Clock::now();
  const auto a = run_cli("example f1 --json");
  const auto b = run_cli("example f2 --json");
  const double secs = seconds_since(t0);
  if (a.status != 0 || b.status != 0) return {false, "cpo example exited non-zero"};
  const auto j1 = doc::parse_json(a.out), j2 = doc::parse_json(b.out);
  // in-process exact pipeline as a second route
  const auto r1 = classify(qix::to_valuation_model(qix::build_example(1)));
  const auto r2 = classify(qix::to_valuation_model(qix::build_example(2)));
  const bool ok = j1["hereditary"] == true && j2["hereditary"] == false &&
                  j1["H"] == doc::Json::array({0}) && j2["H"] == doc::Json::array({0}) &&
                  j1["graph"] == j2["graph"] && j1["graph"]["cosets"].size() == 2 &&
                  j1["graph"]["hasse_edges"] == doc::Json::parse("[[0,1]]") &&
                  r1.hereditary && !r2.hereditary && r1.graph.leq == r2.graph.leq &&
                  secs < 1.0;
  std::ostringstream d;
  d << "f1 hereditary=" << j1["hereditary"] << ", f2 hereditary=" << j2["hereditary"]
    << ", H={1}, chain H < sigmaH for both, " << secs << " s";
  return {ok, d.str()};
}

Outcome cohomology_witness() {
  const auto t0 = Clock::now();
  const auto e1 = qix::build_example(1), e2 = qix::build_example(2);
  const bool exact =
      qix::verify_coboundary_exact(e1, e2, {qix::QiRatFunc::one(), qix::parse("x+i")});
  const auto v1 = qix::to_valuation_model(e1), v2 = qix::to_valuation_model(e2);
  const auto w = is_cohomologous_K_valuation(v1, v2);
  bool reverified = false;
  if (w) {
    auto t = v1.table();
    const auto cob = coboundary_of(*w, v1.setup());
    for (Elem s = 0; s < 2; ++s)
      for (Elem u = 0; u < 2; ++u) t[s][u] += cob[s][u];
    reverified = t == v2.table();
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << "exact c_sigma = x+i " << (exact ? "verified" : "rejected") << ", valuation witness ";
  if (w) d << doc::emit_witness(*w)["values"].dump();
  else d << "none";
  d << ", " << secs << " s";
  return {exact && w && reverified && secs < 1.0, d.str()};
}

Outcome converse_counterexample() {
  const auto f = qix::to_valuation_model(qix::build_example(2));
  bool all_max = true;
  for (Label m = 0; m < f.ideal_count(); ++m) all_max = all_max && is_maximal_dvr(localize_at_ideal(f, m));
  const bool her = is_hereditary(f).holds;
  return {all_max && !her, std::string("f2 localizations at M1, M2 maximal: ") +
                               (all_max ? "yes" : "no") + ", f2 hereditary: " +
                               (her ? "yes" : "no")};
}

Outcome criterion_equivalence() {
  const auto t0 = Clock::now();
  const auto& c = corpus();
  const auto setups = corpus_setups();
  std::set<std::string> groups_seen;
  std::set<std::size_t> ranks;
  std::int64_t max_exp = 0;
  std::size_t agree = 0, hereditary = 0;
  for (const auto& [idx, f] : c) {
    const auto& s = f.setup();
    groups_seen.insert(std::to_string(s.order()) + (s.order() == 4 && s.group().mul(1, 1) == 0
                                                        ? "v"
                                                        : ""));
    ranks.insert(s.ideal_count());
    for (const auto& row : f.table())
      for (const auto& v : row) max_exp = std::max(max_exp, v.max());
    const bool a = is_hereditary(f).holds;
    agree += a == is_hereditary_allpairs(f) && a == hereditary_oracle(f);
    hereditary += a;
  }
  const double secs = seconds_since(t0);
  const bool ranks_ok = ranks == std::set<std::size_t>{1, 2, 3, 4, 6};
  std::ostringstream d;
  d << agree << "/" << c.size() << " agree (" << hereditary << " hereditary), "
    << groups_seen.size() << " groups, r in {";
  for (auto r : ranks) d << (r == *ranks.begin() ? "" : ",") << r;
  d << "}, max exponent " << max_exp << ", " << secs << " s";
  return {c.size() >= 200 && agree == c.size() && ranks_ok && groups_seen.size() == 5 &&
              max_exp <= 3 && secs < 30.0,
          d.str()};
}

Outcome lemma_suite() {
  std::size_t pass = 0;
  for (const auto& [idx, f] : corpus()) pass += !lemma_check(f).has_value();
  return {pass == corpus().size(),
          std::to_string(pass) + "/" + std::to_string(corpus().size()) + " pass"};
}

Outcome structural_invariants() {
  std::size_t pass = 0, dvr = 0;
  for (const auto& [idx, f] : corpus()) {
    bool ok = true;
    try {
      const auto& g = f.setup().group();
      const auto H = compute_H(f);
      make_subgroup(g, H.members);
      const auto gr = graph_of_f(f);
      const std::size_t k = gr.cosets.size();
      for (std::size_t a = 0; a < k; ++a) {
        ok = ok && gr.leq[a][a] && gr.leq[0][a] && (a == 0 || !gr.leq[a][0]);
        for (std::size_t b = 0; b < k; ++b) {
          ok = ok && !(a != b && gr.leq[a][b] && gr.leq[b][a]);
          for (std::size_t e = 0; e < k; ++e)
            ok = ok && !(gr.leq[a][b] && gr.leq[b][e] && !gr.leq[a][e]);
        }
      }
      const bool mx = is_maximal(f).holds;
      ok = ok && (!mx || is_hereditary(f).holds);
      if (f.ideal_count() == 1) {
        ++dvr;
        ok = ok && mx == is_maximal_dvr(f);
      }
    } catch (const Error&) {
      ok = false;
    }
    pass += ok;
  }
  return {pass == corpus().size(), std::to_string(pass) + "/" +
                                       std::to_string(corpus().size()) + " pass (" +
                                       std::to_string(dvr) + " with r = 1)"};
}

Outcome monotonicity() {
  std::size_t members = 0, pass = 0, restrictions = 0;
  for (const auto& [idx, f] : corpus()) {
    if (!is_hereditary(f).holds) continue;
    ++members;
    const auto& s = f.setup();
    bool ok = true;
    for (const auto& sub : all_subgroups(s.group())) {
      std::vector<bool> done(s.ideal_count(), false);
      for (Label m = 0; m < s.ideal_count(); ++m) {
        if (done[m]) continue;
        const auto o = orbit(m, sub, s);
        for (auto l : o) done[l] = true;
        ok = ok && is_hereditary(restrict(f, sub, o)).holds;
        ++restrictions;
      }
    }
    for (Label m = 0; m < s.ideal_count(); ++m) ok = ok && is_maximal_dvr(localize_at_ideal(f, m));
    pass += ok;
  }
  return {members > 0 && pass == members,
          std::to_string(pass) + "/" + std::to_string(members) +
              " hereditary members pass (" + std::to_string(restrictions) + " restrictions)"};
}

Outcome s_invariance() {
  const auto e1 = qix::build_example(1);
  const auto scaled = qix::unit_scale(e1, qix::parse("x"));
  const auto a = qix::to_valuation_model(e1), b = qix::to_valuation_model(scaled);
  const auto ra = classify(a), rb = classify(b);
  const bool ok = a.table() == b.table() && ra.H == rb.H && ra.graph.leq == rb.graph.leq &&
                  ra.graph.cosets == rb.graph.cosets && ra.azumaya == rb.azumaya &&
                  ra.hereditary == rb.hereditary && ra.maximal == rb.maximal &&
                  doc::emit_report(ra) == doc::emit_report(rb);
  return {ok, "f1(sigma,sigma) -> " + qix::to_string(scaled.at(1, 1)) +
                  ", valuation table and report unchanged"};
}

Outcome determinism() {
  const auto ex = write_file("example_setup.json", doc::to_text(doc::emit_setup(groups::example_setup())));
  const auto s3 = write_file(
      "s3_regular.json",
      doc::to_text(doc::emit_setup(*action_on_cosets(groups::symmetric3(), trivial_subgroup()))));
  bool ok = true;
  std::size_t bytes = 0;
  for (const auto& setup : {ex, s3}) {
    const std::string args = "sample " + setup + " --count 10 --seed 7 --max-val 3";
    const auto a = run_cli(args), b = run_cli(args);
    ok = ok && a.status == 0 && b.status == 0 && a.out == b.out && !a.out.empty();
    bytes += a.out.size();
  }
  const auto p1 = write_file("f1.json", doc::to_text(doc::emit_cocycle(testsupport::f1())));
  const auto p2 = write_file("f2.json", doc::to_text(doc::emit_cocycle(testsupport::f2())));
  const auto s1 = run_cli("cohom --solve " + ex + " " + p1 + " " + p2);
  const auto s2 = run_cli("cohom --solve " + ex + " " + p1 + " " + p2);
  ok = ok && s1.status == 0 && s1.out == s2.out &&
       s1.out.find("[[0,0],[1,0]]") != std::string::npos;
  // in-process: sampler and solver on the whole corpus setups
  for (const auto& s : corpus_setups()) {
    const auto x = sample_cocycles(s, 2, 5, 99), y = sample_cocycles(s, 2, 5, 99);
    for (std::size_t i = 0; i < x.size(); ++i) ok = ok && x[i].table() == y[i].table();
    if (x.size() >= 2) {
      const auto w1 = is_cohomologous_K_valuation(x[0], x[1]);
      const auto w2 = is_cohomologous_K_valuation(x[0], x[1]);
      ok = ok && w1.has_value() == w2.has_value() && (!w1 || *w1 == *w2);
    }
  }
  return {ok, "sample runs byte-identical (" + std::to_string(bytes) +
                  " bytes), solver witness reproducible"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"example reproduction (exact pipeline)", example_reproduction},
      {"cohomology witness f1 ~_K f2", cohomology_witness},
      {"localizations maximal but not hereditary (f2)", converse_counterexample},
      {"hereditary criteria agree on the corpus", criterion_equivalence},
      {"lemma on the corpus", lemma_suite},
      {"structural invariants", structural_invariants},
      {"restriction and localization monotonicity", monotonicity},
      {"~_S invariance under unit scaling", s_invariance},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first
              << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
