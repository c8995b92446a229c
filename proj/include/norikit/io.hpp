#pragma once

// JSON input formats. Matrix entries are strings ("3", "-1/2"); a matrix is
// a list of rows.
//
// representation: {"ring":"Q"|"Z", "vertices":[{"id","rank"}],
//                  "edges":[{"id","src","dst","matrix"}]}
// module:         {"vertex":"p"} | {"vertices":["p","q"]} |
//                 {"rank":d, "action":[matrix per End basis element]}
// chain:          {"representation":{...}, "chain":[["p"],["p","q"]],
//                  "elements":[{"stage":0, "coords":["1"]}]}

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "norikit/diagram.hpp"
#include "norikit/end_algebra.hpp"
#include "norikit/linalg.hpp"

namespace norikit {

/// Parses without validating; throws Error(Parse).
Representation parse_representation(std::string_view text);
Representation representation_from_json(const nlohmann::json& j);
/// parse_representation followed by validate(); violations throw
/// Error(Validation) listing every message.
Representation load_representation(std::string_view text);

Matrix matrix_from_json(const nlohmann::json& j, Ring ring, const std::string& what,
                        std::size_t default_cols = 0);
nlohmann::ordered_json matrix_to_json(const Matrix& m);
nlohmann::ordered_json vector_to_json(const Vector& v);

EModule parse_module(std::string_view text, std::shared_ptr<const EndAlgebra> e);

struct ChainElement {
  std::size_t stage = 0;
  Vector coords;
};

struct ChainSpec {
  Representation representation;
  std::vector<std::vector<std::string>> stages;
  std::vector<ChainElement> elements;
};

ChainSpec parse_chain(std::string_view text);

}  // namespace norikit
