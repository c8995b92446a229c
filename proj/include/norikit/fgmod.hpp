#pragma once

// Finitely generated modules over Q or Z given as cokernels of relation
// matrices, together with maps between them and Hom modules.

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "norikit/linalg.hpp"

namespace norikit {

/// The module coker(relations), where relations is generators x k.
struct Presentation {
  Ring ring = Ring::Q;
  std::size_t generators = 0;
  Matrix relations;

  static Presentation free(Ring ring, std::size_t rank);
  static Presentation cyclic(Ring ring, long order);
  Presentation(Ring r, std::size_t g, Matrix rel);
  Presentation() = default;

  bool is_free_presentation() const { return relations.cols() == 0 || relations.is_zero(); }
};

Presentation direct_sum(const Presentation& a, const Presentation& b);
/// n copies of p, copy-major generator order.
Presentation power(const Presentation& p, std::size_t n);

struct NormalForm {
  std::size_t free_rank = 0;
  std::vector<mpz_class> invariant_factors;

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm normal_form(const Presentation& p);

/// x and y (generator coordinates) agree in coker(p.relations).
bool equal_mod(const Presentation& p, const Vector& x, const Vector& y);
/// Columnwise equal_mod.
bool equal_mod(const Presentation& p, const Matrix& x, const Matrix& y);

/// A map coker(source) -> coker(target) acting on generator coordinates.
struct PresentedMorphism {
  Presentation source;
  Presentation target;
  Matrix matrix;  // target.generators x source.generators
};

bool is_well_defined(const PresentedMorphism& f);
PresentedMorphism compose(const PresentedMorphism& g, const PresentedMorphism& f);

/// Basis (as columns) of {x : C x lies in the column span of Q}.
Matrix preimage_lattice(const Matrix& constraints, const Matrix& allowed);

/// A submodule L/rel of a presented module, with the chosen basis of L.
struct Subquotient {
  Presentation presentation;
  Matrix inclusion;  // ambient generators x presentation.generators
};

/// Kernel of a well-defined presented morphism, with its inclusion into the
/// source generators.
Subquotient kernel(const PresentedMorphism& f);

bool is_injective(const PresentedMorphism& f);
bool is_surjective(const PresentedMorphism& f);
inline bool is_isomorphism(const PresentedMorphism& f) {
  return is_injective(f) && is_surjective(f);
}

/// Linear conditions on a map F : X -> Y: for each pair (a, b) the matrix
/// F a - b F must vanish in Y. Used to cut module morphisms out of Hom.
struct CommutationConstraint {
  Matrix source_side;  // acts on X
  Matrix target_side;  // acts on Y
};

/// Hom(X, Y) restricted to maps satisfying every constraint. Generators are
/// vec(F) (column-major, F is Y.generators x X.generators).
Subquotient morphism_module(const Presentation& x, const Presentation& y,
                            const std::vector<CommutationConstraint>& constraints = {});

/// Hom_R(M, N) presented via the kernel of N^{a0} -> N^{a1}.
Subquotient hom_module(const Presentation& m, const Presentation& n);

/// Coordinates of `element` (ambient generators) in the generators of `sub`.
/// Throws NotInSpan if the element is not in the submodule.
Vector coordinates_in(const Subquotient& sub, const Vector& element);

}  // namespace norikit
