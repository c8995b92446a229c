#pragma once

// Diagrams (directed multigraphs, loops allowed) and their representations
// in free modules. Ids are strings; everything downstream orders vertices
// and edges lexicographically by id.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "norikit/linalg.hpp"

namespace norikit {

struct Edge {
  std::string id;
  std::string src;
  std::string dst;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class Diagram {
 public:
  Diagram() = default;
  /// Sorts vertices and edges by id. Duplicate ids and dangling endpoints
  /// are kept so that validate() can report them.
  Diagram(std::vector<std::string> vertices, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_vertex(const std::string& v) const;
  const Edge* find_edge(const std::string& id) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

/// The full subdiagram on `vs`: those vertices and every edge between them.
Diagram full_subdiagram(const Diagram& d, const std::set<std::string>& vs);

bool is_full_subdiagram(const Diagram& sub, const Diagram& d);

struct Representation {
  Diagram diagram;
  Ring ring = Ring::Q;
  std::map<std::string, std::size_t> rank;
  std::map<std::string, Matrix> edge_matrix;

  std::size_t rank_of(const std::string& vertex) const;
  const Matrix& matrix_of(const std::string& edge) const;
};

enum class ViolationKind {
  DuplicateVertex,
  DuplicateEdge,
  UnknownEndpoint,
  MissingRank,
  MissingMatrix,
  ShapeMismatch,
  RingMismatch,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string id;
  std::string message;
};

std::vector<Violation> validate(const Representation& rep);
/// Throws InvalidRepresentation listing every violation.
void require_valid(const Representation& rep);

Representation restrict(const Representation& rep, const Diagram& sub);

}  // namespace norikit
