#include "norikit/diagram.hpp"

#include <algorithm>

#include "norikit/error.hpp"

namespace norikit {

Diagram::Diagram(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  std::stable_sort(edges_.begin(), edges_.end(),
                   [](const Edge& a, const Edge& b) { return a.id < b.id; });
}

bool Diagram::has_vertex(const std::string& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

const Edge* Diagram::find_edge(const std::string& id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, const std::string& key) { return e.id < key; });
  return it != edges_.end() && it->id == id ? &*it : nullptr;
}

Diagram full_subdiagram(const Diagram& d, const std::set<std::string>& vs) {
  for (const auto& v : vs)
    if (!d.has_vertex(v)) fail(ErrorKind::UnknownVertex, "'" + v + "'");
  std::vector<Edge> edges;
  for (const auto& e : d.edges())
    if (vs.count(e.src) && vs.count(e.dst)) edges.push_back(e);
  return Diagram({vs.begin(), vs.end()}, std::move(edges));
}

bool is_full_subdiagram(const Diagram& sub, const Diagram& d) {
  for (const auto& v : sub.vertices())
    if (!d.has_vertex(v)) return false;
  std::set<std::string> vs(sub.vertices().begin(), sub.vertices().end());
  return full_subdiagram(d, vs) == sub;
}

std::size_t Representation::rank_of(const std::string& vertex) const {
  auto it = rank.find(vertex);
  if (it == rank.end()) fail(ErrorKind::UnknownVertex, "no rank for '" + vertex + "'");
  return it->second;
}

const Matrix& Representation::matrix_of(const std::string& edge) const {
  auto it = edge_matrix.find(edge);
  if (it == edge_matrix.end())
    fail(ErrorKind::InvalidRepresentation, "no matrix for edge '" + edge + "'");
  return it->second;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DuplicateVertex: return "DuplicateVertex";
    case ViolationKind::DuplicateEdge: return "DuplicateEdge";
    case ViolationKind::UnknownEndpoint: return "UnknownEndpoint";
    case ViolationKind::MissingRank: return "MissingRank";
    case ViolationKind::MissingMatrix: return "MissingMatrix";
    case ViolationKind::ShapeMismatch: return "ShapeMismatch";
    case ViolationKind::RingMismatch: return "RingMismatch";
  }
  return "Violation";
}

std::vector<Violation> validate(const Representation& rep) {
  std::vector<Violation> out;
  const auto& vs = rep.diagram.vertices();
  for (std::size_t i = 1; i < vs.size(); ++i)
    if (vs[i] == vs[i - 1])
      out.push_back({ViolationKind::DuplicateVertex, vs[i], "vertex id '" + vs[i] + "' is repeated"});
  for (const auto& v : vs)
    if (!rep.rank.count(v))
      out.push_back({ViolationKind::MissingRank, v, "vertex '" + v + "' has no rank"});

  const auto& es = rep.diagram.edges();
  for (std::size_t i = 1; i < es.size(); ++i)
    if (es[i].id == es[i - 1].id)
      out.push_back({ViolationKind::DuplicateEdge, es[i].id, "edge id '" + es[i].id + "' is repeated"});
  for (const auto& e : es) {
    bool endpoints_ok = true;
    for (const auto* end : {&e.src, &e.dst})
      if (!rep.diagram.has_vertex(*end)) {
        endpoints_ok = false;
        out.push_back({ViolationKind::UnknownEndpoint, e.id,
                       "edge '" + e.id + "' refers to unknown vertex '" + *end + "'"});
      }
    auto it = rep.edge_matrix.find(e.id);
    if (it == rep.edge_matrix.end()) {
      out.push_back({ViolationKind::MissingMatrix, e.id, "edge '" + e.id + "' has no matrix"});
      continue;
    }
    const Matrix& m = it->second;
    if (m.ring() != rep.ring && !(rep.ring == Ring::Z && m.is_integral()))
      out.push_back({ViolationKind::RingMismatch, e.id,
                     "edge '" + e.id + "' has entries outside " + to_string(rep.ring)});
    if (!endpoints_ok || !rep.rank.count(e.src) || !rep.rank.count(e.dst)) continue;
    std::size_t want_r = rep.rank.at(e.dst), want_c = rep.rank.at(e.src);
    if (m.rows() != want_r || m.cols() != want_c)
      out.push_back({ViolationKind::ShapeMismatch, e.id,
                     "edge '" + e.id + "' matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " + std::to_string(want_r) +
                         "x" + std::to_string(want_c)});
  }
  return out;
}

void require_valid(const Representation& rep) {
  auto violations = validate(rep);
  if (violations.empty()) return;
  std::string msg;
  for (const auto& v : violations) {
    if (!msg.empty()) msg += "; ";
    msg += v.message;
  }
  fail(ErrorKind::InvalidRepresentation, msg);
}

Representation restrict(const Representation& rep, const Diagram& sub) {
  if (!is_full_subdiagram(sub, rep.diagram))
    fail(ErrorKind::NotASubdiagram, "not a full subdiagram of the representation's diagram");
  Representation out;
  out.diagram = sub;
  out.ring = rep.ring;
  for (const auto& v : sub.vertices()) {
    auto it = rep.rank.find(v);
    if (it != rep.rank.end()) out.rank.emplace(v, it->second);
  }
  for (const auto& e : sub.edges()) {
    auto it = rep.edge_matrix.find(e.id);
    if (it != rep.edge_matrix.end()) out.edge_matrix.emplace(e.id, it->second);
  }
  return out;
}

}  // namespace norikit
