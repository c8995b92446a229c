#pragma once

// Report rendering for the command-line tool and the named check suites.
// All output is deterministic: vertices and edges in id order, structure
// constants as sorted triples, rationals as strings.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "norikit/coalgebra.hpp"
#include "norikit/end_algebra.hpp"
#include "norikit/functors.hpp"
#include "norikit/io.hpp"

namespace norikit {

struct CommandResult {
  std::string output;
  bool passed = true;
};

std::string snf_report(const Matrix& m, bool json);
std::string end_algebra_report(const EndAlgebra& e, bool json);
std::string coalgebra_report(const Coalgebra& c);
CommandResult comodule_report(const Representation& rep, std::string_view module_text, bool json);
CommandResult colimit_report(const ChainSpec& chain, bool json);

/// Suites: "end", "duality", "equivalence", "all". Throws InvalidArgument
/// for anything else.
std::vector<Report> run_suite(const Representation& rep, const std::string& suite,
                              std::size_t bound = kDefaultSizeBound);
std::string render_reports(const std::string& suite, const std::vector<Report>& reports,
                           bool json);
bool all_passed(const std::vector<Report>& reports);

}  // namespace norikit
