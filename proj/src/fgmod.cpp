#include "norikit/fgmod.hpp"

#include <algorithm>

#include "norikit/error.hpp"

namespace norikit {

Presentation::Presentation(Ring r, std::size_t g, Matrix rel)
    : ring(r), generators(g), relations(std::move(rel)) {
  if (relations.rows() != generators)
    fail(ErrorKind::DimensionMismatch, "relation matrix must have one row per generator");
  if (relations.ring() != ring)
    fail(ErrorKind::RingMismatch, "relation matrix over a different ring");
}

Presentation Presentation::free(Ring ring, std::size_t rank) {
  return Presentation(ring, rank, Matrix(ring, rank, 0));
}

Presentation Presentation::cyclic(Ring ring, long order) {
  return Presentation(ring, 1, Matrix::from_rows(ring, {{order}}));
}

Presentation direct_sum(const Presentation& a, const Presentation& b) {
  if (a.ring != b.ring) fail(ErrorKind::RingMismatch, "direct sum over different rings");
  return Presentation(a.ring, a.generators + b.generators,
                      block_diagonal(a.ring, {a.relations, b.relations}));
}

Presentation power(const Presentation& p, std::size_t n) {
  return Presentation(p.ring, p.generators * n,
                      kronecker(Matrix::identity(p.ring, n), p.relations));
}

NormalForm normal_form(const Presentation& p) {
  NormalForm nf;
  if (p.ring == Ring::Q) {
    nf.free_rank = p.generators - rank(p.relations);
    return nf;
  }
  SmithForm s = snf(p.relations);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < std::min(s.S.rows(), s.S.cols()); ++i) {
    const Scalar& d = s.S(i, i);
    if (d == 0) continue;
    ++nonzero;
    if (d != 1) nf.invariant_factors.push_back(d.get_num());
  }
  nf.free_rank = p.generators - nonzero;
  return nf;
}

bool equal_mod(const Presentation& p, const Vector& x, const Vector& y) {
  if (x.size() != p.generators || y.size() != p.generators)
    fail(ErrorKind::DimensionMismatch, "vector length does not match generators");
  Vector diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - y[i];
  if (std::all_of(diff.begin(), diff.end(), [](const Scalar& s) { return s == 0; }))
    return true;
  return SpanSolver(p.relations).contains(diff);
}

bool equal_mod(const Presentation& p, const Matrix& x, const Matrix& y) {
  if (x.rows() != p.generators || y.rows() != p.generators || x.cols() != y.cols())
    fail(ErrorKind::DimensionMismatch, "matrix shapes do not match presentation");
  if (x == y) return true;
  SpanSolver solver(p.relations);
  for (std::size_t j = 0; j < x.cols(); ++j) {
    Vector diff = x.column(j);
    Vector yc = y.column(j);
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= yc[i];
    if (!solver.contains(diff)) return false;
  }
  return true;
}

static void check_shape(const PresentedMorphism& f) {
  if (f.source.ring != f.target.ring || f.matrix.ring() != f.source.ring)
    fail(ErrorKind::RingMismatch, "morphism over mixed rings");
  if (f.matrix.rows() != f.target.generators || f.matrix.cols() != f.source.generators)
    fail(ErrorKind::DimensionMismatch, "morphism matrix shape does not match presentations");
}

bool is_well_defined(const PresentedMorphism& f) {
  check_shape(f);
  if (f.source.relations.cols() == 0) return true;
  Matrix image = f.matrix * f.source.relations;
  SpanSolver solver(f.target.relations);
  for (std::size_t j = 0; j < image.cols(); ++j)
    if (!solver.contains(image.column(j))) return false;
  return true;
}

PresentedMorphism compose(const PresentedMorphism& g, const PresentedMorphism& f) {
  if (f.target.generators != g.source.generators)
    fail(ErrorKind::DimensionMismatch, "composition of non-composable morphisms");
  return {f.source, g.target, g.matrix * f.matrix};
}

Matrix preimage_lattice(const Matrix& constraints, const Matrix& allowed) {
  Ring ring = constraints.ring();
  if (allowed.ring() != ring) fail(ErrorKind::RingMismatch, "constraint rings differ");
  if (allowed.rows() != constraints.rows())
    fail(ErrorKind::DimensionMismatch, "constraint row counts differ");
  const std::size_t n = constraints.cols();
  Matrix system = hstack(constraints, Scalar(-1) * allowed);
  std::vector<Vector> solutions = kernel(system);
  if (solutions.empty()) return Matrix(ring, n, 0);
  Matrix gens(ring, n, solutions.size());
  for (std::size_t j = 0; j < solutions.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) gens(i, j) = solutions[j][i];
  return span_basis(gens);
}

Vector coordinates_in(const Subquotient& sub, const Vector& element) {
  auto c = SpanSolver(sub.inclusion).solve(element);
  if (!c) fail(ErrorKind::NotInSpan, "element does not lie in the submodule");
  return *c;
}

static Subquotient subquotient_from(const Matrix& basis, const Matrix& ambient_relations) {
  Ring ring = basis.ring();
  const std::size_t k = basis.cols();
  SpanSolver solver(basis);
  Matrix rel(ring, k, ambient_relations.cols());
  for (std::size_t j = 0; j < ambient_relations.cols(); ++j) {
    auto c = solver.solve(ambient_relations.column(j));
    if (!c) fail(ErrorKind::NotInSpan, "relations are not contained in the submodule");
    for (std::size_t i = 0; i < k; ++i) rel(i, j) = (*c)[i];
  }
  return {Presentation(ring, k, std::move(rel)), basis};
}

Subquotient kernel(const PresentedMorphism& f) {
  check_shape(f);
  Matrix basis = preimage_lattice(f.matrix, f.target.relations);
  return subquotient_from(basis, f.source.relations);
}

bool is_injective(const PresentedMorphism& f) {
  return normal_form(kernel(f).presentation).is_trivial();
}

bool is_surjective(const PresentedMorphism& f) {
  check_shape(f);
  Presentation cok(f.target.ring, f.target.generators, hstack(f.matrix, f.target.relations));
  return normal_form(cok).is_trivial();
}

Subquotient morphism_module(const Presentation& x, const Presentation& y,
                            const std::vector<CommutationConstraint>& constraints) {
  if (x.ring != y.ring) fail(ErrorKind::RingMismatch, "Hom between modules over different rings");
  const Ring ring = x.ring;
  const std::size_t gx = x.generators, gy = y.generators;
  const Matrix iy = Matrix::identity(ring, gy);
  const Matrix ix = Matrix::identity(ring, gx);
  const Matrix rel_all = kronecker(ix, y.relations);

  // F R_x must vanish in Y.
  Matrix c = kronecker(x.relations.transpose(), iy);
  std::vector<Matrix> allowed{kronecker(Matrix::identity(ring, x.relations.cols()), y.relations)};
  for (const auto& k : constraints) {
    if (k.source_side.rows() != gx || k.source_side.cols() != gx ||
        k.target_side.rows() != gy || k.target_side.cols() != gy)
      fail(ErrorKind::DimensionMismatch, "commutation constraint has wrong shape");
    c = vstack(c, kronecker(k.source_side.transpose(), iy) - kronecker(ix, k.target_side));
    allowed.push_back(rel_all);
  }
  Matrix basis = preimage_lattice(c, block_diagonal(ring, allowed));
  return subquotient_from(basis, rel_all);
}

Subquotient hom_module(const Presentation& m, const Presentation& n) {
  return morphism_module(m, n);
}

}  // namespace norikit
