#pragma once

// Hom_R(-, p) and - (x)_R p for an R-module given by a presentation and a
// module p over an End algebra, plus the object X(p) inside Hom_R(Tp, p)
// and the checks that tie the module categories together.
//
// Layouts. For M = coker(A) with a0 generators, p^{a0} has generator index
// i*g + r (copy i, generator r of p). An element of Hom_R(M, p) is the list
// of images of the generators of M, so for free M of rank d it is vec of a
// g x d matrix (column-major), the same layout hom_module uses.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "norikit/end_algebra.hpp"
#include "norikit/fgmod.hpp"
#include "norikit/linalg.hpp"

namespace norikit {

struct Report {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline constexpr std::size_t kDefaultSizeBound = 12;

/// The matrix induced by f on subquotients: f maps the span of
/// src_inclusion into span(dst_inclusion) + span(dst_relations). Throws
/// NotInSpan otherwise.
Matrix induced_map(const Matrix& src_inclusion, const Matrix& dst_inclusion,
                   const Matrix& dst_relations, const Matrix& f);

struct HomObject {
  Presentation source;    // M
  Presentation ambient;   // p^{a0}
  std::size_t target_generators = 0;  // generators of p
  EModule module;         // Hom_R(M, p) with the inherited action
  Matrix inclusion;       // ambient generators x module generators
};

HomObject hom_functor(const Presentation& m, const EModule& p);
/// coker(A (x) I | I (x) R_p), action I (x) act.
EModule tensor_functor(const Presentation& m, const EModule& p);

/// Hom(f, p) : Hom(M', p) -> Hom(M, p) for a lift of f : M -> M' on
/// generators (M'.generators x M.generators).
Matrix hom_functor_map(const Matrix& lift, const HomObject& from, const HomObject& to);
/// f (x) p on generators.
Matrix tensor_functor_map(const Matrix& lift, const EModule& p);

/// Forgetting the action of hom_functor(M, p) gives hom_module(M, p).
Report sandwich_check_hom(const Presentation& m, const EModule& p);

/// Post-composition with an endomorphism alpha of p. Throws
/// NotAnEndomorphism if alpha does not commute with the action.
Matrix left_action(const Matrix& alpha, const EModule& p, const HomObject& h);
/// Pre-composition with phi on Hom_R(Tp, p); h.source must be free of rank
/// phi.rows().
Matrix right_action(const Matrix& phi, const HomObject& h);

/// X(p) for a module p whose underlying R-module is free of rank d.
struct XObject {
  EModule p;
  std::vector<Matrix> alphas;             // basis of End_A(p), d x d
  std::shared_ptr<const EndAlgebra> ep;   // E(p): commutant of the alphas
  HomObject hom;                          // Hom_R(Tp, p)
  Subquotient x;                          // X(p); inclusion in vec(d x d)
  EModule module;                         // X(p) with the action of A
  std::vector<Matrix> left;               // left mult by E(p) basis on X
  std::vector<Matrix> right;              // right mult by E(p) basis on X
  bool matches_ep = false;                // T(X(p)) == E(p)
};

XObject compute_X(const EModule& p);
/// A = End(T|{v}), p = T v.
XObject compute_X(const Representation& rep, const std::string& vertex);

/// X (x)_{E(p)} M for a module M over x.ep, with the A-action on the left
/// factor and the evaluation map x (x) m -> x.m into M.
struct TensorResult {
  EModule module;
  Matrix ev;  // M.generators x module.generators
};

TensorResult tensor_over_Ep(const XObject& x, const EModule& m);

struct CanonicalMap {
  Presentation source;
  Matrix can;
  bool iso = false;
};

CanonicalMap canonical_map(const XObject& x);
CanonicalMap canonical_map(const Representation& rep, const std::string& vertex);

/// X (x)_{E(p)} M evaluates isomorphically onto M and transports the
/// E(p)-action to exactly M's action.
Report tensor_roundtrip(const XObject& x, const EModule& m, const std::string& label);

/// Left actions of End_A(p) commute with right actions of End_R(Tp).
Report actions_commute(const XObject& x);

/// Hom_A(p (x) M, b) ~ Hom_A(p, Hom(M, b)), natural in b.
/// Throws SizeBound if a0 * (gp + gb) exceeds the bound.
Report adjunction_check(const EModule& p, const Presentation& m, const EModule& b,
                        std::size_t bound = kDefaultSizeBound);

/// The equivalence data for the full subdiagram on `vertices`. Throws
/// SizeBound if the summed rank exceeds the bound.
std::vector<Report> verify_equivalence(const Representation& rep,
                                       const std::vector<std::string>& vertices,
                                       std::size_t bound = kDefaultSizeBound);

}  // namespace norikit
