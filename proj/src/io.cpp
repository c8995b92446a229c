#include "norikit/io.hpp"

#include <set>

#include "norikit/error.hpp"

namespace norikit {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorKind::Parse, where + " is missing \"" + key + "\"");
  return j.at(key);
}

std::string string_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_string()) fail(ErrorKind::Parse, where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

std::size_t count_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_unsigned())
    fail(ErrorKind::Parse, where + ": \"" + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

Scalar entry(const json& e, const std::string& what) {
  if (!e.is_string()) fail(ErrorKind::Parse, what + ": matrix entries must be strings");
  try {
    return parse_scalar(e.get<std::string>());
  } catch (const Error& err) {
    std::string msg = err.what();
    const std::string prefix = std::string(to_string(err.kind())) + ": ";
    if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
    fail(ErrorKind::Parse, what + ": " + msg);
  }
}

Vector vector_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) fail(ErrorKind::Parse, what + " must be a list");
  Vector v;
  for (const auto& e : j) v.push_back(entry(e, what));
  return v;
}

Ring ring_from_json(const json& j) {
  std::string r = string_field(j, "ring", "representation");
  if (r == "Q") return Ring::Q;
  if (r == "Z") return Ring::Z;
  fail(ErrorKind::Parse, "ring must be \"Q\" or \"Z\", got \"" + r + "\"");
}

}  // namespace

Matrix matrix_from_json(const json& j, Ring ring, const std::string& what,
                        std::size_t default_cols) {
  if (!j.is_array()) fail(ErrorKind::Parse, what + ": matrix must be a list of rows");
  const std::size_t rows = j.size();
  std::size_t cols = default_cols;
  if (rows > 0) {
    if (!j[0].is_array()) fail(ErrorKind::Parse, what + ": matrix rows must be lists");
    cols = j[0].size();
  }
  std::vector<Scalar> data;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      fail(ErrorKind::Parse, what + ": row " + std::to_string(r) + " has length " +
                                 std::to_string(j[r].is_array() ? j[r].size() : 0) +
                                 ", expected " + std::to_string(cols));
    for (const auto& e : j[r]) data.push_back(entry(e, what));
  }
  Matrix m(Ring::Q, rows, cols, std::move(data));
  if (ring == Ring::Z && m.is_integral()) return m.with_ring(Ring::Z);
  return m;
}

nlohmann::ordered_json matrix_to_json(const Matrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_scalar(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json vector_to_json(const Vector& v) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& x : v) out.push_back(format_scalar(x));
  return out;
}

Representation representation_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::Parse, "representation must be a JSON object");
  Representation rep;
  rep.ring = ring_from_json(j);

  const json& vs = field(j, "vertices", "representation");
  if (!vs.is_array()) fail(ErrorKind::Parse, "\"vertices\" must be a list");
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "vertex " + std::to_string(i);
    std::string id = string_field(vs[i], "id", where);
    rep.rank.emplace(id, count_field(vs[i], "rank", "vertex '" + id + "'"));
    ids.push_back(std::move(id));
  }

  std::vector<Edge> edges;
  if (j.contains("edges")) {
    const json& es = j.at("edges");
    if (!es.is_array()) fail(ErrorKind::Parse, "\"edges\" must be a list");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string where = "edge " + std::to_string(i);
      Edge e{string_field(es[i], "id", where), string_field(es[i], "src", where),
             string_field(es[i], "dst", where)};
      auto src = rep.rank.find(e.src);
      std::size_t cols = src == rep.rank.end() ? 0 : src->second;
      const std::string what = "edge '" + e.id + "'";
      Matrix m = matrix_from_json(field(es[i], "matrix", what), rep.ring, what, cols);
      rep.edge_matrix.emplace(e.id, std::move(m));
      edges.push_back(std::move(e));
    }
  }
  rep.diagram = Diagram(std::move(ids), std::move(edges));
  return rep;
}

Representation parse_representation(std::string_view text) {
  return representation_from_json(parse_json(text));
}

Representation load_representation(std::string_view text) {
  Representation rep = parse_representation(text);
  auto violations = validate(rep);
  if (!violations.empty()) {
    std::string msg;
    for (const auto& v : violations) msg += (msg.empty() ? "" : "; ") + v.message;
    fail(ErrorKind::Validation, msg);
  }
  return rep;
}

EModule parse_module(std::string_view text, std::shared_ptr<const EndAlgebra> e) {
  json j = parse_json(text);
  if (!j.is_object()) fail(ErrorKind::Parse, "module must be a JSON object");
  if (j.contains("vertex")) return vertex_module(e, string_field(j, "vertex", "module"));
  if (j.contains("vertices")) {
    const json& vs = j.at("vertices");
    if (!vs.is_array()) fail(ErrorKind::Parse, "\"vertices\" must be a list");
    std::vector<std::string> ids;
    for (const auto& v : vs) {
      if (!v.is_string()) fail(ErrorKind::Parse, "vertex ids must be strings");
      ids.push_back(v.get<std::string>());
    }
    return vertex_sum_module(e, ids);
  }
  const std::size_t d = count_field(j, "rank", "module");
  const json& act = field(j, "action", "module");
  if (!act.is_array()) fail(ErrorKind::Parse, "\"action\" must be a list of matrices");
  EModule m;
  m.underlying = Presentation::free(e->ring(), d);
  for (std::size_t i = 0; i < act.size(); ++i) {
    const std::string what = "action " + std::to_string(i);
    Matrix a = matrix_from_json(act[i], e->ring(), what, d);
    if (a.ring() != e->ring())
      fail(ErrorKind::Validation, what + " has entries outside " + to_string(e->ring()));
    if (a.rows() != d || a.cols() != d)
      fail(ErrorKind::Validation, what + " is not " + std::to_string(d) + "x" + std::to_string(d));
    m.action.push_back(std::move(a));
  }
  m.algebra = std::move(e);
  auto bad = module_violations(m);
  if (!bad.empty()) fail(ErrorKind::Validation, bad.front());
  return m;
}

ChainSpec parse_chain(std::string_view text) {
  json j = parse_json(text);
  ChainSpec c;
  c.representation = representation_from_json(field(j, "representation", "chain file"));
  const json& st = field(j, "chain", "chain file");
  if (!st.is_array()) fail(ErrorKind::Parse, "\"chain\" must be a list of vertex lists");
  for (const auto& s : st) {
    if (!s.is_array()) fail(ErrorKind::Parse, "each chain stage must be a list of vertex ids");
    std::vector<std::string> ids;
    for (const auto& v : s) {
      if (!v.is_string()) fail(ErrorKind::Parse, "vertex ids must be strings");
      ids.push_back(v.get<std::string>());
    }
    c.stages.push_back(std::move(ids));
  }
  if (j.contains("elements")) {
    const json& es = j.at("elements");
    if (!es.is_array()) fail(ErrorKind::Parse, "\"elements\" must be a list");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string where = "element " + std::to_string(i);
      ChainElement e;
      e.stage = count_field(es[i], "stage", where);
      e.coords = vector_from_json(field(es[i], "coords", where), where);
      c.elements.push_back(std::move(e));
    }
  }
  return c;
}

}  // namespace norikit
