#include "norikit/norikit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "norikit/error.hpp"
#include "norikit/io.hpp"
#include "norikit/suites.hpp"

struct nk_representation {
  norikit::Representation rep;
};

namespace {

thread_local std::string last_error;

nk_status status_for(norikit::ErrorKind kind) {
  using norikit::ErrorKind;
  switch (kind) {
    case ErrorKind::InternalClosureFailure:
    case ErrorKind::NotInSpan:
    case ErrorKind::NotACoalgebraMorphism:
      return NK_ERR_INTERNAL;
    default:
      return NK_ERR_INPUT;
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
nk_status try_(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const norikit::Error& e) {
    last_error = e.what();
    return status_for(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return NK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return NK_ERR_INTERNAL;
  }
}

nk_status null_argument() {
  last_error = "InvalidArgument: null pointer argument";
  return NK_ERR_INPUT;
}

}  // namespace

extern "C" {

const char* nk_last_error(void) { return last_error.c_str(); }

const char* nk_version(void) { return "0.1.0"; }

void nk_string_free(char* s) { std::free(s); }

nk_status nk_representation_parse(const char* json, nk_representation** out) {
  if (!json || !out) return null_argument();
  *out = nullptr;
  return try_([&] {
    auto h = new nk_representation{norikit::load_representation(json)};
    *out = h;
    return NK_OK;
  });
}

void nk_representation_free(nk_representation* rep) { delete rep; }

size_t nk_representation_vertex_count(const nk_representation* rep) {
  return rep ? rep->rep.diagram.vertices().size() : 0;
}

nk_status nk_snf(const char* matrix_text, int json, char** out) {
  if (!matrix_text || !out) return null_argument();
  return try_([&] {
    norikit::Matrix m = norikit::parse_matrix_text(matrix_text, norikit::Ring::Z);
    *out = duplicate(norikit::snf_report(m, json != 0));
    return NK_OK;
  });
}

nk_status nk_end_algebra(const nk_representation* rep, int json, char** out) {
  if (!rep || !out) return null_argument();
  return try_([&] {
    *out = duplicate(norikit::end_algebra_report(norikit::compute_end(rep->rep), json != 0));
    return NK_OK;
  });
}

nk_status nk_end_dimension(const nk_representation* rep, size_t* out) {
  if (!rep || !out) return null_argument();
  return try_([&] {
    *out = norikit::compute_end(rep->rep).dimension();
    return NK_OK;
  });
}

nk_status nk_coalgebra(const nk_representation* rep, char** out) {
  if (!rep || !out) return null_argument();
  return try_([&] {
    *out = duplicate(norikit::coalgebra_report(norikit::dualize(norikit::compute_end(rep->rep))));
    return NK_OK;
  });
}

nk_status nk_comodule(const nk_representation* rep, const char* module_json, int json,
                      char** out) {
  if (!rep || !module_json || !out) return null_argument();
  return try_([&] {
    auto r = norikit::comodule_report(rep->rep, module_json, json != 0);
    *out = duplicate(r.output);
    return r.passed ? NK_OK : NK_CHECK_FAILED;
  });
}

nk_status nk_check(const nk_representation* rep, const char* suite, size_t size_bound, int json,
                   char** out) {
  if (!rep || !suite || !out) return null_argument();
  return try_([&] {
    auto reports = norikit::run_suite(rep->rep, suite, size_bound);
    *out = duplicate(norikit::render_reports(suite, reports, json != 0));
    return norikit::all_passed(reports) ? NK_OK : NK_CHECK_FAILED;
  });
}

nk_status nk_colimit(const char* chain_json, int json, char** out) {
  if (!chain_json || !out) return null_argument();
  return try_([&] {
    auto r = norikit::colimit_report(norikit::parse_chain(chain_json), json != 0);
    *out = duplicate(r.output);
    return r.passed ? NK_OK : NK_CHECK_FAILED;
  });
}

}  // extern "C"
