#include "norikit/end_algebra.hpp"

#include <algorithm>
#include <cstdio>

#include "norikit/error.hpp"

namespace norikit {

namespace {

std::vector<std::size_t> vertex_offsets(const Representation& rep, std::size_t& total) {
  std::vector<std::size_t> out;
  total = 0;
  for (const auto& v : rep.diagram.vertices()) {
    out.push_back(total);
    std::size_t r = rep.rank_of(v);
    total += r * r;
  }
  return out;
}

std::size_t vertex_index(const Representation& rep, const std::string& v) {
  const auto& vs = rep.diagram.vertices();
  auto it = std::lower_bound(vs.begin(), vs.end(), v);
  if (it == vs.end() || *it != v) fail(ErrorKind::UnknownVertex, "'" + v + "'");
  return static_cast<std::size_t>(it - vs.begin());
}

}  // namespace

Matrix intertwiner_system(const Representation& rep) {
  require_valid(rep);
  const Ring ring = rep.ring;
  std::size_t total = 0;
  auto offsets = vertex_offsets(rep, total);

  std::size_t rows = 0;
  for (const auto& e : rep.diagram.edges()) rows += rep.rank_of(e.src) * rep.rank_of(e.dst);
  Matrix sys(ring, rows, total);

  std::size_t row = 0;
  for (const auto& e : rep.diagram.edges()) {
    const Matrix t = rep.matrix_of(e.id).with_ring(ring);
    const std::size_t rp = rep.rank_of(e.src), rq = rep.rank_of(e.dst);
    // vec(T e_p) = (I (x) T) vec(e_p),  vec(e_q T) = (T^T (x) I) vec(e_q)
    Matrix left = kronecker(Matrix::identity(ring, rp), t);
    Matrix right = kronecker(t.transpose(), Matrix::identity(ring, rq));
    const std::size_t op = offsets[vertex_index(rep, e.src)];
    const std::size_t oq = offsets[vertex_index(rep, e.dst)];
    for (std::size_t i = 0; i < rq * rp; ++i) {
      for (std::size_t j = 0; j < rp * rp; ++j) sys(row + i, op + j) += left(i, j);
      for (std::size_t j = 0; j < rq * rq; ++j) sys(row + i, oq + j) -= right(i, j);
    }
    row += rq * rp;
  }
  return sys;
}

std::size_t EndAlgebra::offset(const std::string& vertex) const {
  return offsets_[vertex_index(rep_, vertex)];
}

Matrix EndAlgebra::component(std::size_t i, const std::string& vertex) const {
  const std::size_t r = rep_.rank_of(vertex);
  const std::size_t o = offset(vertex);
  const Vector& b = basis_.at(i);
  return unvec(ring(), Vector(b.begin() + o, b.begin() + o + r * r), r, r);
}

Matrix EndAlgebra::component_of(const Vector& coords, const std::string& vertex) const {
  if (coords.size() != dimension())
    fail(ErrorKind::DimensionMismatch, "coordinate vector has wrong length");
  const std::size_t r = rep_.rank_of(vertex);
  Matrix out(ring(), r, r);
  for (std::size_t i = 0; i < dimension(); ++i)
    if (coords[i] != 0) out = out + coords[i] * component(i, vertex);
  return out;
}

std::vector<Matrix> EndAlgebra::tuple(std::size_t i) const {
  std::vector<Matrix> out;
  for (const auto& v : rep_.diagram.vertices()) out.push_back(component(i, v));
  return out;
}

Vector EndAlgebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t n = dimension();
  if (x.size() != n || y.size() != n)
    fail(ErrorKind::DimensionMismatch, "coordinate vector has wrong length");
  Vector z(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t l = 0; l < n; ++l) z[l] += xy * structure_constant(i, j, l);
    }
  }
  return z;
}

std::optional<Vector> EndAlgebra::coordinates(const Vector& flat) const {
  return solver_->solve(flat);
}

bool EndAlgebra::is_saturated() const {
  if (ring() == Ring::Q) return true;
  Matrix b = Matrix::from_columns(Ring::Z, flat_length_, basis_);
  SmithForm s = snf(b);
  for (std::size_t i = 0; i < dimension(); ++i)
    if (s.S(i, i) != 1) return false;
  return true;
}

EndAlgebra EndAlgebra::from_basis(const Representation& rep, std::vector<Vector> basis) {
  require_valid(rep);
  EndAlgebra e;
  e.rep_ = rep;
  e.offsets_ = vertex_offsets(rep, e.flat_length_);
  for (const auto& b : basis)
    if (b.size() != e.flat_length_)
      fail(ErrorKind::DimensionMismatch, "basis vector does not match the representation");
  e.basis_ = std::move(basis);
  const Ring ring = rep.ring;
  e.solver_ = std::make_shared<SpanSolver>(
      Matrix::from_columns(ring, e.flat_length_, e.basis_));

  const std::size_t n = e.dimension();
  const auto& vertices = rep.diagram.vertices();
  std::vector<std::vector<Matrix>> tuples;
  for (std::size_t i = 0; i < n; ++i) tuples.push_back(e.tuple(i));

  e.constants_.assign(n * n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector flat(e.flat_length_);
      for (std::size_t v = 0; v < vertices.size(); ++v) {
        Vector part = vec(tuples[i][v] * tuples[j][v]);
        std::copy(part.begin(), part.end(), flat.begin() + e.offsets_[v]);
      }
      auto c = e.solver_->solve(flat);
      if (!c)
        fail(ErrorKind::InternalClosureFailure,
             "product of basis elements " + std::to_string(i) + " and " +
                 std::to_string(j) + " is not in the span");
      for (std::size_t l = 0; l < n; ++l) e.constants_[(i * n + j) * n + l] = (*c)[l];
    }

  Vector id(e.flat_length_);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    Vector part = vec(Matrix::identity(ring, rep.rank_of(vertices[v])));
    std::copy(part.begin(), part.end(), id.begin() + e.offsets_[v]);
  }
  auto u = e.solver_->solve(id);
  if (!u) fail(ErrorKind::InternalClosureFailure, "identity tuple is not in the span");
  e.unit_ = std::move(*u);
  return e;
}

EndAlgebra compute_end(const Representation& rep) {
  return EndAlgebra::from_basis(rep, kernel(intertwiner_system(rep)));
}

Representation loop_representation(Ring ring, std::size_t rank,
                                   const std::vector<Matrix>& loops) {
  Representation rep;
  rep.ring = ring;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < loops.size(); ++i) {
    char id[16];
    std::snprintf(id, sizeof id, "m%06zu", i);
    edges.push_back({id, "v", "v"});
    rep.edge_matrix.emplace(id, loops[i]);
  }
  rep.diagram = Diagram({"v"}, std::move(edges));
  rep.rank["v"] = rank;
  return rep;
}

Matrix transition_hom(const EndAlgebra& big, const EndAlgebra& small) {
  const auto& sd = small.representation().diagram;
  if (!is_full_subdiagram(sd, big.representation().diagram))
    fail(ErrorKind::NotASubdiagram, "transition between non-nested diagrams");
  for (const auto& v : sd.vertices())
    if (small.representation().rank_of(v) != big.representation().rank_of(v))
      fail(ErrorKind::NotASubdiagram, "vertex '" + v + "' has different ranks");
  const Ring ring = big.ring();
  Matrix h(ring, small.dimension(), big.dimension());
  for (std::size_t i = 0; i < big.dimension(); ++i) {
    Vector flat(small.flat_length());
    for (const auto& v : sd.vertices()) {
      Vector part = vec(big.component(i, v));
      std::copy(part.begin(), part.end(), flat.begin() + small.offset(v));
    }
    auto c = small.coordinates(flat);
    if (!c) fail(ErrorKind::NotInSpan, "projected basis tuple is not an intertwiner");
    for (std::size_t l = 0; l < small.dimension(); ++l) h(l, i) = (*c)[l];
  }

  // Algebra homomorphism: units and products are preserved.
  if (h * big.unit_coords() != small.unit_coords())
    fail(ErrorKind::InternalClosureFailure, "transition map does not preserve the unit");
  for (std::size_t i = 0; i < big.dimension(); ++i)
    for (std::size_t j = 0; j < big.dimension(); ++j) {
      Vector ei(big.dimension()), ej(big.dimension());
      ei[i] = 1;
      ej[j] = 1;
      if (h * big.multiply(ei, ej) != small.multiply(h.column(i), h.column(j)))
        fail(ErrorKind::InternalClosureFailure, "transition map does not preserve products");
    }
  return h;
}

// ------------------------------------------------------------------ modules

Matrix EModule::act(const Vector& coords) const {
  if (coords.size() != action.size())
    fail(ErrorKind::DimensionMismatch, "coordinate vector has wrong length");
  Matrix out(ring(), generators(), generators());
  for (std::size_t i = 0; i < action.size(); ++i)
    if (coords[i] != 0) out = out + coords[i] * action[i];
  return out;
}

std::vector<std::string> module_violations(const EModule& m) {
  std::vector<std::string> out;
  if (!m.algebra) return {"module has no algebra"};
  const EndAlgebra& e = *m.algebra;
  const std::size_t n = e.dimension(), g = m.generators();
  if (m.action.size() != n) return {"action count does not match algebra dimension"};
  if (m.ring() != e.ring()) return {"module and algebra rings differ"};
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix& a = m.action[i];
    if (a.rows() != g || a.cols() != g || a.ring() != m.ring())
      return {"action matrix " + std::to_string(i) + " has the wrong shape or ring"};
    if (!is_well_defined({m.underlying, m.underlying, a}))
      out.push_back("action of basis element " + std::to_string(i) +
                    " does not preserve the relations");
  }
  if (!out.empty()) return out;
  if (!equal_mod(m.underlying, m.act(e.unit_coords()), Matrix::identity(m.ring(), g)))
    out.push_back("unit does not act as the identity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector prod(n);
      for (std::size_t l = 0; l < n; ++l) prod[l] = e.structure_constant(i, j, l);
      if (!equal_mod(m.underlying, m.action[i] * m.action[j], m.act(prod)))
        out.push_back("action does not respect b_" + std::to_string(i) + " * b_" +
                      std::to_string(j));
    }
  return out;
}

EModule vertex_module(std::shared_ptr<const EndAlgebra> e, const std::string& vertex) {
  return vertex_sum_module(std::move(e), {vertex});
}

EModule vertex_sum_module(std::shared_ptr<const EndAlgebra> e,
                          const std::vector<std::string>& vertices) {
  EModule m;
  const Ring ring = e->ring();
  std::size_t total = 0;
  for (const auto& v : vertices) total += e->representation().rank_of(v);
  m.underlying = Presentation::free(ring, total);
  for (std::size_t i = 0; i < e->dimension(); ++i) {
    std::vector<Matrix> blocks;
    for (const auto& v : vertices) blocks.push_back(e->component(i, v));
    m.action.push_back(block_diagonal(ring, blocks));
  }
  m.algebra = std::move(e);
  return m;
}

EModule regular_module(std::shared_ptr<const EndAlgebra> e) {
  EModule m;
  const std::size_t n = e->dimension();
  m.underlying = Presentation::free(e->ring(), n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix a(e->ring(), n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) a(l, j) = e->structure_constant(i, j, l);
    m.action.push_back(std::move(a));
  }
  m.algebra = std::move(e);
  return m;
}

EModule zero_module(std::shared_ptr<const EndAlgebra> e) {
  EModule m;
  m.underlying = Presentation::free(e->ring(), 0);
  m.action.assign(e->dimension(), Matrix(e->ring(), 0, 0));
  m.algebra = std::move(e);
  return m;
}

EModule restrict_scalars(const EModule& m, const Matrix& h,
                         std::shared_ptr<const EndAlgebra> big) {
  if (!m.algebra || h.rows() != m.algebra->dimension() || h.cols() != big->dimension())
    fail(ErrorKind::DimensionMismatch, "transition matrix does not match the algebras");
  EModule out;
  out.underlying = m.underlying;
  for (std::size_t i = 0; i < big->dimension(); ++i) out.action.push_back(m.act(h.column(i)));
  out.algebra = std::move(big);
  return out;
}

std::optional<std::size_t> first_noncommuting(const Matrix& f, const EModule& m,
                                              const EModule& n) {
  if (f.rows() != n.generators() || f.cols() != m.generators())
    fail(ErrorKind::DimensionMismatch, "morphism shape does not match modules");
  if (m.action.size() != n.action.size())
    fail(ErrorKind::DimensionMismatch, "modules over different algebras");
  for (std::size_t i = 0; i < m.action.size(); ++i)
    if (!equal_mod(n.underlying, f * m.action[i], n.action[i] * f)) return i;
  return std::nullopt;
}

Subquotient module_hom(const EModule& m, const EModule& n) {
  if (m.action.size() != n.action.size())
    fail(ErrorKind::DimensionMismatch, "modules over different algebras");
  std::vector<CommutationConstraint> cs;
  for (std::size_t i = 0; i < m.action.size(); ++i) cs.push_back({m.action[i], n.action[i]});
  return morphism_module(m.underlying, n.underlying, cs);
}

}  // namespace norikit
