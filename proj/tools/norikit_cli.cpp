// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "norikit/norikit.h"

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kInputError = 2, kIoError = 3 };

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

int exit_code(nk_status s) {
  switch (s) {
    case NK_OK: return kPass;
    case NK_CHECK_FAILED: return kCheckFailed;
    case NK_ERR_INPUT: return kInputError;
    case NK_ERR_IO: return kIoError;
    case NK_ERR_INTERNAL: return kCheckFailed;
  }
  return kCheckFailed;
}

// Prints the output (if any) and the error message (if any), maps the status.
int finish(nk_status s, char* out) {
  if (out) {
    std::fputs(out, stdout);
    nk_string_free(out);
  }
  if (s != NK_OK && *nk_last_error()) std::fprintf(stderr, "error: %s\n", nk_last_error());
  return exit_code(s);
}

struct Loaded {
  nk_representation* rep = nullptr;
  int code = kPass;
  ~Loaded() { nk_representation_free(rep); }
};

void load(const std::string& path, Loaded& l) {
  auto text = read_file(path);
  if (!text) {
    std::fprintf(stderr, "error: cannot read '%s'\n", path.c_str());
    l.code = kIoError;
    return;
  }
  nk_status s = nk_representation_parse(text->c_str(), &l.rep);
  if (s != NK_OK) l.code = finish(s, nullptr);
}

std::size_t size_bound() {
  const char* env = std::getenv("NORIKIT_SIZE_BOUND");
  if (!env || !*env) return 12;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0) {
    std::fprintf(stderr, "warning: ignoring invalid NORIKIT_SIZE_BOUND '%s'\n", env);
    return 12;
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with endomorphism algebras of diagram representations"};
  app.require_subcommand(1, 1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string matrix_path, rep_path, module_path, suite, chain_path;

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix file");
  snf->add_option("matrix", matrix_path, "Whitespace-separated rows")->required();

  auto* end = app.add_subcommand("end-algebra", "Basis and structure constants of End(T)");
  end->add_option("representation", rep_path)->required();

  auto* coalg = app.add_subcommand("coalgebra", "The dual coalgebra of End(T), as JSON");
  coalg->add_option("representation", rep_path)->required();

  auto* comod = app.add_subcommand("comodule", "Translate an End(T)-module to a comodule");
  comod->add_option("representation", rep_path)->required();
  comod->add_option("--module", module_path, "Module description (JSON)")->required();

  auto* check = app.add_subcommand("check", "Run a check suite");
  check->add_option("representation", rep_path)->required();
  check->add_option("--suite", suite, "end, duality, equivalence or all")
      ->required()
      ->check(CLI::IsMember({"end", "duality", "equivalence", "all"}));

  auto* colim = app.add_subcommand("colimit", "Colimit of coalgebras along a chain");
  colim->add_option("chain", chain_path)->required();

  for (auto* sub : {snf, end, coalg, comod, check, colim}) sub->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  char* out = nullptr;
  // The call must complete before `out` is read.
  auto emit = [&out](nk_status st) { return finish(st, out); };
  if (*snf) {
    auto text = read_file(matrix_path);
    if (!text) {
      std::fprintf(stderr, "error: cannot read '%s'\n", matrix_path.c_str());
      return kIoError;
    }
    return emit(nk_snf(text->c_str(), json, &out));
  }
  if (*colim) {
    auto text = read_file(chain_path);
    if (!text) {
      std::fprintf(stderr, "error: cannot read '%s'\n", chain_path.c_str());
      return kIoError;
    }
    return emit(nk_colimit(text->c_str(), json, &out));
  }

  Loaded l;
  load(rep_path, l);
  if (l.code != kPass) return l.code;

  if (*end) return emit(nk_end_algebra(l.rep, json, &out));
  if (*coalg) return emit(nk_coalgebra(l.rep, &out));
  if (*comod) {
    auto text = read_file(module_path);
    if (!text) {
      std::fprintf(stderr, "error: cannot read '%s'\n", module_path.c_str());
      return kIoError;
    }
    return emit(nk_comodule(l.rep, text->c_str(), json, &out));
  }
  return emit(nk_check(l.rep, suite.c_str(), size_bound(), json, &out));
}
