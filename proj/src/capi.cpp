#include "cpo/cpo.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cpo/documents.hpp"

struct cpo_setup {
  cpo::SetupPtr setup;
};

struct cpo_cocycle {
  cpo::ValCocycle val;
  std::optional<cpo::qix::ExactCocycle> exact;
};

struct cpo_report {
  cpo::ClassificationReport rep;
  cpo::SetupPtr setup;
};

namespace {

static_assert(static_cast<int>(cpo::ErrorCode::InvalidArgument) + 1 ==
                  CPO_ERR_INVALID_ARGUMENT,
              "cpo_status must mirror cpo::ErrorCode");

thread_local std::string last_error;

cpo_status to_status(cpo::ErrorCode code) {
  return static_cast<cpo_status>(static_cast<int>(code) + 1);
}

template <class F>
cpo_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return CPO_OK;
  } catch (const cpo::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CPO_ERR_CAP_EXHAUSTED;
  } catch (const std::exception& e) {
    last_error = std::string("InternalInconsistency ") + e.what();
    return CPO_ERR_INTERNAL_INCONSISTENCY;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw cpo::Error(cpo::ErrorCode::InvalidArgument, std::string("null ") + what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

CPO_API const char* cpo_version(void) { return "1.0.0"; }

CPO_API const char* cpo_last_error(void) { return last_error.c_str(); }

CPO_API const char* cpo_status_name(cpo_status status) {
  if (status == CPO_OK) return "Ok";
  if (status < CPO_OK || status > CPO_ERR_INVALID_ARGUMENT) return "UnknownError";
  return cpo::error_code_name(static_cast<cpo::ErrorCode>(static_cast<int>(status) - 1));
}

CPO_API int cpo_exit_code(cpo_status status) {
  switch (status) {
    case CPO_OK: return 0;
    case CPO_ERR_PARSE: return 1;
    case CPO_ERR_CAP_EXHAUSTED: return 3;
    case CPO_ERR_INTERNAL_INCONSISTENCY:
    case CPO_ERR_SUBGROUP_CLOSURE_FAILURE:
    case CPO_ERR_NOT_WELL_DEFINED:
    case CPO_ERR_NOT_PARTIAL_ORDER: return 4;
    default: return 2;
  }
}

CPO_API void cpo_string_free(char* s) { std::free(s); }

CPO_API cpo_status cpo_setup_from_json(const char* text, cpo_setup** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    auto s = cpo::doc::parse_setup(cpo::doc::parse_json(text));
    *out = new cpo_setup{std::make_shared<const cpo::GaloisSetup>(std::move(s))};
  });
}

CPO_API cpo_status cpo_setup_example(cpo_setup** out) {
  return guarded([&] {
    require(out, "out");
    *out = new cpo_setup{cpo::qix::example_setup()};
  });
}

CPO_API cpo_status cpo_setup_to_json(const cpo_setup* setup, char** out) {
  return guarded([&] {
    require(setup, "setup");
    require(out, "out");
    *out = dup(cpo::doc::to_text(cpo::doc::emit_setup(*setup->setup)));
  });
}

CPO_API size_t cpo_setup_order(const cpo_setup* setup) {
  return setup ? setup->setup->order() : 0;
}

CPO_API size_t cpo_setup_ideal_count(const cpo_setup* setup) {
  return setup ? setup->setup->ideal_count() : 0;
}

CPO_API void cpo_setup_free(cpo_setup* setup) { delete setup; }

CPO_API cpo_status cpo_cocycle_from_json(const cpo_setup* setup, const char* text,
                                         cpo_cocycle** out) {
  return guarded([&] {
    require(setup, "setup");
    require(text, "text");
    require(out, "out");
    auto parsed = cpo::doc::parse_cocycle(cpo::doc::parse_json(text), setup->setup);
    *out = new cpo_cocycle{std::move(parsed.valuation), std::move(parsed.exact)};
  });
}

CPO_API cpo_status cpo_cocycle_example(int which, cpo_cocycle** out) {
  return guarded([&] {
    require(out, "out");
    auto exact = cpo::qix::build_example(which);
    auto val = cpo::qix::to_valuation_model(exact);
    *out = new cpo_cocycle{std::move(val), std::move(exact)};
  });
}

CPO_API cpo_status cpo_cocycle_to_json(const cpo_cocycle* f, char** out) {
  return guarded([&] {
    require(f, "cocycle");
    require(out, "out");
    *out = dup(cpo::doc::to_text(cpo::doc::emit_cocycle(f->val)));
  });
}

CPO_API cpo_status cpo_cocycle_exact_json(const cpo_cocycle* f, char** out) {
  return guarded([&] {
    require(f, "cocycle");
    require(out, "out");
    if (!f->exact)
      throw cpo::Error(cpo::ErrorCode::InvalidArgument, "cocycle has no exact form");
    *out = dup(cpo::doc::to_text(cpo::doc::emit_exact_cocycle(*f->exact)));
  });
}

CPO_API void cpo_cocycle_free(cpo_cocycle* f) { delete f; }

CPO_API void cpo_cocycle_array_free(cpo_cocycle** items, size_t count) {
  if (!items) return;
  for (size_t i = 0; i < count; ++i) delete items[i];
  std::free(items);
}

CPO_API cpo_status cpo_classify(const cpo_cocycle* f, cpo_report** out) {
  return guarded([&] {
    require(f, "cocycle");
    require(out, "out");
    *out = new cpo_report{cpo::classify(f->val), f->val.setup_ptr()};
  });
}

CPO_API cpo_status cpo_report_to_json(const cpo_report* rep, char** out) {
  return guarded([&] {
    require(rep, "report");
    require(out, "out");
    *out = dup(cpo::doc::to_text(cpo::doc::emit_report(rep->rep)));
  });
}

CPO_API cpo_status cpo_report_summary(const cpo_report* rep, char** out) {
  return guarded([&] {
    require(rep, "report");
    require(out, "out");
    *out = dup(cpo::doc::report_summary(rep->rep, *rep->setup));
  });
}

CPO_API int cpo_report_azumaya(const cpo_report* rep) { return rep && rep->rep.azumaya; }
CPO_API int cpo_report_hereditary(const cpo_report* rep) { return rep && rep->rep.hereditary; }
CPO_API int cpo_report_maximal(const cpo_report* rep) { return rep && rep->rep.maximal; }

CPO_API void cpo_report_free(cpo_report* rep) { delete rep; }

CPO_API cpo_status cpo_graph_dot(const cpo_cocycle* f, char** out) {
  return guarded([&] {
    require(f, "cocycle");
    require(out, "out");
    *out = dup(cpo::doc::graph_dot(cpo::graph_of_f(f->val), f->val.setup()));
  });
}

CPO_API cpo_status cpo_cohom_solve(const cpo_cocycle* f, const cpo_cocycle* g,
                                   char** witness_json) {
  return guarded([&] {
    require(f, "f");
    require(g, "g");
    require(witness_json, "out");
    *witness_json = nullptr;
    if (auto w = cpo::is_cohomologous_K_valuation(f->val, g->val))
      *witness_json = dup(cpo::doc::to_text(cpo::doc::emit_witness(*w)));
  });
}

CPO_API cpo_status cpo_cohom_check(const cpo_cocycle* f, const cpo_cocycle* g,
                                   const char* witness_json, int* holds) {
  return guarded([&] {
    require(f, "f");
    require(g, "g");
    require(witness_json, "witness");
    require(holds, "out");
    if (!(f->val.setup() == g->val.setup()))
      throw cpo::Error(cpo::ErrorCode::SetupMismatch, "cocycles live on different setups");
    const auto w = cpo::doc::parse_witness(cpo::doc::parse_json(witness_json), f->val.setup());
    if (const auto* vw = std::get_if<cpo::CoboundaryWitness>(&w)) {
      const auto cob = cpo::coboundary_of(*vw, f->val.setup());
      bool ok = true;
      for (cpo::Elem s = 0; s < f->val.order(); ++s)
        for (cpo::Elem t = 0; t < f->val.order(); ++t)
          ok = ok && f->val.at(s, t) + cob[s][t] == g->val.at(s, t);
      *holds = ok;
      return;
    }
    if (!f->exact || !g->exact)
      throw cpo::Error(cpo::ErrorCode::InvalidArgument,
                       "an exact witness needs cocycles in the qix model");
    *holds = cpo::qix::verify_coboundary_exact(*f->exact, *g->exact,
                                               std::get<1>(w));
  });
}

CPO_API cpo_status cpo_sample(const cpo_setup* setup, int64_t max_exponent,
                              size_t count, uint64_t seed, cpo_cocycle*** out) {
  return guarded([&] {
    require(setup, "setup");
    require(out, "out");
    auto samples = cpo::sample_cocycles(setup->setup, max_exponent, count, seed);
    auto** items = static_cast<cpo_cocycle**>(std::calloc(samples.size() + 1, sizeof(cpo_cocycle*)));
    if (!items) throw std::bad_alloc();
    for (size_t i = 0; i < samples.size(); ++i)
      items[i] = new cpo_cocycle{std::move(samples[i]), std::nullopt};
    *out = items;
  });
}

CPO_API cpo_status cpo_example_verify_pair(const char* c_sigma, int* holds) {
  return guarded([&] {
    require(c_sigma, "c_sigma");
    require(holds, "out");
    const auto f1 = cpo::qix::build_example(1);
    const auto f2 = cpo::qix::build_example(2);
    *holds = cpo::qix::verify_coboundary_exact(
        f1, f2, {cpo::qix::QiRatFunc::one(), cpo::qix::parse(c_sigma)});
  });
}

}  // extern "C"
