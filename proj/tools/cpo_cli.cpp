// cpo: command-line front end over the C API in cpo/cpo.h.
//
// Exit codes: 0 ok, 1 parse error, 2 validation failure, 3 resource cap,
// 4 internal inconsistency.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "cpo/cpo.h"

namespace {

struct Failure {
  int exit_code;
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Setup = std::unique_ptr<cpo_setup, Deleter<cpo_setup, cpo_setup_free>>;
using Cocycle = std::unique_ptr<cpo_cocycle, Deleter<cpo_cocycle, cpo_cocycle_free>>;
using Report = std::unique_ptr<cpo_report, Deleter<cpo_report, cpo_report_free>>;

void check(cpo_status st, const std::string& context) {
  if (st == CPO_OK) return;
  std::cerr << "error: " << context << ": " << cpo_last_error() << "\n";
  throw Failure{cpo_exit_code(st)};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  cpo_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    throw Failure{1};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Setup load_setup(const std::string& path) {
  cpo_setup* s = nullptr;
  check(cpo_setup_from_json(read_file(path).c_str(), &s), path);
  return Setup(s);
}

Cocycle load_cocycle(const cpo_setup* setup, const std::string& path) {
  cpo_cocycle* c = nullptr;
  check(cpo_cocycle_from_json(setup, read_file(path).c_str(), &c), path);
  return Cocycle(c);
}

Report classify(const cpo_cocycle* f) {
  cpo_report* r = nullptr;
  check(cpo_classify(f, &r), "classify");
  return Report(r);
}

void print_report(const cpo_report* rep, bool json) {
  char* out = nullptr;
  check(json ? cpo_report_to_json(rep, &out) : cpo_report_summary(rep, &out), "report");
  std::cout << take(out);
}

int example_index(const std::string& which) { return which == "f1" ? 1 : 2; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify crossed-product orders A_f over a DVR from their two-cocycles"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cpo_version()));

  std::string setup_path, cocycle_path, g_path, witness_path, out_dir, which;
  bool json = false, dot = false, solve = false, check_mode = false;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::int64_t max_val = 1;

  auto* validate = app.add_subcommand("validate", "Validate a setup and a cocycle document");
  validate->add_option("setup", setup_path, "Setup document")->required();
  validate->add_option("cocycle", cocycle_path, "Cocycle document")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Azumaya/hereditary/maximal report");
  classify_cmd->add_option("setup", setup_path, "Setup document")->required();
  classify_cmd->add_option("cocycle", cocycle_path, "Cocycle document")->required();
  classify_cmd->add_flag("--json", json, "Emit the JSON report");

  auto* graph = app.add_subcommand("graph", "Hasse diagram of the graph of f");
  graph->add_option("setup", setup_path, "Setup document")->required();
  graph->add_option("cocycle", cocycle_path, "Cocycle document")->required();
  graph->add_flag("--dot", dot, "Emit DOT (the default output format)");

  auto* example = app.add_subcommand("example", "Run the exact Q(i)(x) example");
  example->add_option("which", which, "f1, f2 or pair")
      ->required()
      ->check(CLI::IsMember({"f1", "f2", "pair"}));
  example->add_flag("--json", json, "Emit JSON reports");

  auto* cohom = app.add_subcommand("cohom", "Cohomology over K at the valuation level");
  cohom->add_flag("--solve", solve, "Solve for a valuation witness");
  cohom->add_flag("--check", check_mode, "Check a witness document");
  cohom->add_option("setup", setup_path, "Setup document")->required();
  cohom->add_option("f", cocycle_path, "First cocycle")->required();
  cohom->add_option("g", g_path, "Second cocycle")->required();
  cohom->add_option("witness", witness_path, "Witness document (--check)");

  auto* sample = app.add_subcommand("sample", "Seeded sample of valid valuation cocycles");
  sample->add_option("setup", setup_path, "Setup document")->required();
  sample->add_option("--count", count, "Number of cocycles")->default_val(1);
  sample->add_option("--seed", seed, "Random seed")->default_val(0);
  sample->add_option("--max-val", max_val, "Largest exponent")->default_val(1);
  sample->add_option("--out", out_dir, "Write cocycle_NNN.json files here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*validate) {
      auto setup = load_setup(setup_path);
      load_cocycle(setup.get(), cocycle_path);
      std::cout << "ok\n";
    } else if (*classify_cmd) {
      auto setup = load_setup(setup_path);
      auto f = load_cocycle(setup.get(), cocycle_path);
      print_report(classify(f.get()).get(), json);
    } else if (*graph) {
      auto setup = load_setup(setup_path);
      auto f = load_cocycle(setup.get(), cocycle_path);
      char* out = nullptr;
      check(cpo_graph_dot(f.get(), &out), "graph");
      std::cout << take(out);
    } else if (*example) {
      if (which == "pair") {
        int holds = 0;
        check(cpo_example_verify_pair("x+i", &holds), "example");
        std::cout << (holds ? "~_K witness verified: c_sigma = x+i\n"
                            : "~_K witness FAILED: c_sigma = x+i\n");
        if (!holds) throw Failure{4};
        for (int k = 1; k <= 2; ++k) {
          cpo_cocycle* c = nullptr;
          check(cpo_cocycle_example(k, &c), "example");
          Cocycle f(c);
          std::cout << "f" << k << ": hereditary "
                    << (cpo_report_hereditary(classify(f.get()).get()) ? "yes" : "no") << "\n";
        }
      } else {
        cpo_cocycle* c = nullptr;
        check(cpo_cocycle_example(example_index(which), &c), "example");
        Cocycle f(c);
        char* exact = nullptr;
        check(cpo_cocycle_exact_json(f.get(), &exact), "example");
        const std::string exact_text = take(exact);
        auto rep = classify(f.get());
        if (json) {
          print_report(rep.get(), true);
        } else {
          std::cout << "exact cocycle " << which << ":\n" << exact_text;
          print_report(rep.get(), false);
        }
      }
    } else if (*cohom) {
      if (solve == check_mode) {
        std::cerr << "error: pass exactly one of --solve or --check\n";
        return 1;
      }
      auto setup = load_setup(setup_path);
      auto f = load_cocycle(setup.get(), cocycle_path);
      auto g = load_cocycle(setup.get(), g_path);
      if (solve) {
        char* w = nullptr;
        check(cpo_cohom_solve(f.get(), g.get(), &w), "cohom");
        std::cout << (w ? take(w) : std::string("infeasible\n"));
      } else {
        if (witness_path.empty()) {
          std::cerr << "error: --check needs a witness document\n";
          return 1;
        }
        int holds = 0;
        check(cpo_cohom_check(f.get(), g.get(), read_file(witness_path).c_str(), &holds),
              witness_path);
        std::cout << (holds ? "true\n" : "false\n");
      }
    } else if (*sample) {
      auto setup = load_setup(setup_path);
      cpo_cocycle** items = nullptr;
      check(cpo_sample(setup.get(), max_val, count, seed, &items), "sample");
      std::unique_ptr<cpo_cocycle*, void (*)(cpo_cocycle**)> guard(items, [](cpo_cocycle** p) {
        std::size_t k = 0;
        while (p[k]) ++k;
        cpo_cocycle_array_free(p, k);
      });
      if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
      for (std::size_t i = 0; i < count; ++i) {
        char* text = nullptr;
        check(cpo_cocycle_to_json(items[i], &text), "sample");
        const std::string doc = take(text);
        if (out_dir.empty()) {
          std::cout << doc;
        } else {
          char name[32];
          std::snprintf(name, sizeof name, "cocycle_%03zu.json", i);
          std::ofstream(std::filesystem::path(out_dir) / name, std::ios::binary) << doc;
        }
      }
    }
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return 0;
}
