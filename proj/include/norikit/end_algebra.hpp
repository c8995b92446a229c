#pragma once

// End(T) for a finite representation: tuples (e_p) of endomorphisms, one per
// vertex, with Tm e_p = e_q Tm for every edge m : p -> q. Also the modules
// over such an algebra (objects of the diagram category for a finite
// diagram) and restriction of scalars along transition homomorphisms.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "norikit/diagram.hpp"
#include "norikit/fgmod.hpp"
#include "norikit/linalg.hpp"

namespace norikit {

/// Linearized intertwiner equations. Unknowns are vec(e_p) (column-major)
/// concatenated over vertices in id order; one block row per edge.
Matrix intertwiner_system(const Representation& rep);

class EndAlgebra {
 public:
  Ring ring() const noexcept { return rep_.ring; }
  const Representation& representation() const noexcept { return rep_; }
  std::size_t dimension() const noexcept { return basis_.size(); }

  /// Basis element i as a flat vector in the intertwiner_system layout.
  const Vector& basis_vector(std::size_t i) const { return basis_.at(i); }
  /// Component e_p of basis element i.
  Matrix component(std::size_t i, const std::string& vertex) const;
  /// Component at `vertex` of an arbitrary coordinate combination.
  Matrix component_of(const Vector& coords, const std::string& vertex) const;
  std::vector<Matrix> tuple(std::size_t i) const;

  /// c[i][j][l] with b_i b_j = sum_l c[i][j][l] b_l.
  const Scalar& structure_constant(std::size_t i, std::size_t j, std::size_t l) const {
    return constants_[(i * dimension() + j) * dimension() + l];
  }
  const Vector& unit_coords() const noexcept { return unit_; }

  Vector multiply(const Vector& x, const Vector& y) const;

  /// Coordinates of a flat tuple vector, or nullopt if it is not in the span.
  std::optional<Vector> coordinates(const Vector& flat) const;

  std::size_t offset(const std::string& vertex) const;
  std::size_t flat_length() const noexcept { return flat_length_; }

  /// Over Z: the basis spans every integer intertwiner. Always true over Q.
  bool is_saturated() const;

  /// Builds the algebra on a caller-chosen basis of intertwiners. Throws
  /// InternalClosureFailure if the span is not closed or lacks the unit.
  static EndAlgebra from_basis(const Representation& rep, std::vector<Vector> basis);

  friend EndAlgebra compute_end(const Representation& rep);

 private:
  Representation rep_;
  std::vector<std::size_t> offsets_;  // parallel to diagram vertices
  std::size_t flat_length_ = 0;
  std::vector<Vector> basis_;
  std::vector<Scalar> constants_;
  Vector unit_;
  std::shared_ptr<const SpanSolver> solver_;
};

EndAlgebra compute_end(const Representation& rep);

/// A one-vertex representation of rank `rank` whose loops are `loops`. Its
/// End algebra is the commutant of the loops.
Representation loop_representation(Ring ring, std::size_t rank,
                                   const std::vector<Matrix>& loops);

/// Matrix (dim E_small x dim E_big) of the projection End(T_F') -> End(T_F).
Matrix transition_hom(const EndAlgebra& big, const EndAlgebra& small);

/// A finitely generated left module over an EndAlgebra.
struct EModule {
  std::shared_ptr<const EndAlgebra> algebra;
  Presentation underlying;
  std::vector<Matrix> action;  // one per algebra basis element

  std::size_t generators() const noexcept { return underlying.generators; }
  Ring ring() const noexcept { return underlying.ring; }
  /// Action of an arbitrary coordinate combination.
  Matrix act(const Vector& coords) const;
};

/// Human-readable list of broken EModule invariants (empty = valid).
std::vector<std::string> module_violations(const EModule& m);

/// T p with End(T) acting through e -> e_p.
EModule vertex_module(std::shared_ptr<const EndAlgebra> e, const std::string& vertex);
/// Direct sum of vertex modules, blocks in the given order.
EModule vertex_sum_module(std::shared_ptr<const EndAlgebra> e,
                          const std::vector<std::string>& vertices);
/// The algebra acting on itself by left multiplication.
EModule regular_module(std::shared_ptr<const EndAlgebra> e);
EModule zero_module(std::shared_ptr<const EndAlgebra> e);

/// Pulls M back along h : E_big -> E_small.
EModule restrict_scalars(const EModule& m, const Matrix& h,
                         std::shared_ptr<const EndAlgebra> big);

/// Module morphism check f act_M(b_i) = act_N(b_i) f in N, all i. Returns
/// the first violating basis index, or nullopt if f is a morphism.
std::optional<std::size_t> first_noncommuting(const Matrix& f, const EModule& m,
                                              const EModule& n);

/// Hom_E(M, N) as a presented module; generators are vec(F).
Subquotient module_hom(const EModule& m, const EModule& n);

}  // namespace norikit
