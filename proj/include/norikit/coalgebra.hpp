#pragma once

// Duals of End algebras as coalgebras, and the module <-> comodule
// translation.
//
// Index convention: for an algebra with b_i b_j = sum_l c[i][j][l] b_l the
// dual coalgebra has Delta(b_l^v) = sum_{i,j} d[l][i][j] b_i^v (x) b_j^v with
// d[l][i][j] = c[i][j][l], and epsilon(b_l^v) = unit coordinate l.
//
// A left module with action matrices A_i = act(b_i) becomes the right
// comodule rho(x) = sum_i A_i x (x) b_i^v. Coassociativity of rho reads
// A_i A_j = sum_l d[l][i][j] A_l, the counit law sum_l eps_l A_l = id.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "norikit/end_algebra.hpp"
#include "norikit/linalg.hpp"

namespace norikit {

class Coalgebra {
 public:
  Coalgebra() = default;
  Coalgebra(Ring ring, std::size_t rank, std::vector<Scalar> delta, Vector epsilon);

  Ring ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  const Scalar& delta(std::size_t l, std::size_t i, std::size_t j) const {
    return delta_[(l * rank_ + i) * rank_ + j];
  }
  const Vector& epsilon() const noexcept { return epsilon_; }

  /// Delta as an (n*n) x n matrix; row i*n + j, column l.
  Matrix delta_matrix() const;
  /// epsilon as a 1 x n matrix.
  Matrix epsilon_matrix() const;

  /// Broken coassociativity / counit identities (empty = valid).
  std::vector<std::string> violations() const;

  friend bool operator==(const Coalgebra&, const Coalgebra&) = default;

 private:
  Ring ring_ = Ring::Q;
  std::size_t rank_ = 0;
  std::vector<Scalar> delta_;
  Vector epsilon_;
};

/// Over Z the algebra must carry a saturated (free) basis.
Coalgebra dualize(const EndAlgebra& e);

struct Comodule {
  std::shared_ptr<const Coalgebra> coalgebra;
  Presentation underlying;
  std::vector<Matrix> coefficients;  // A_i, one per coalgebra basis element

  /// rho as a (g*n) x g matrix into M (x) A^v, row index r*n + i.
  Matrix coaction_matrix() const;
};

std::vector<std::string> comodule_violations(const Comodule& c);

Comodule module_to_comodule(const EModule& m);
/// The inverse translation; C's coalgebra must equal dualize(E).
EModule comodule_to_module(const Comodule& c, std::shared_ptr<const EndAlgebra> e);

struct ComoduleMorphism {
  Matrix matrix;
};

/// Accepts f iff (f (x) id) rho_M = rho_N f; otherwise throws NotAMorphism
/// naming the first basis index where the coaction squares fail.
ComoduleMorphism translate_morphism(const Matrix& f, const EModule& m, const EModule& n);

/// Coaction-side morphism test on comodules, independent of the module code.
std::optional<std::size_t> comodule_morphism_violation(const Matrix& f, const Comodule& m,
                                                       const Comodule& n);

/// Transpose of an algebra hom E_big -> E_small, checked to be a coalgebra
/// morphism dualize(E_small) -> dualize(E_big).
Matrix dual_of_algebra_hom(const Matrix& h, const Coalgebra& small, const Coalgebra& big);

bool is_coalgebra_morphism(const Matrix& f, const Coalgebra& from, const Coalgebra& to);

/// Comodule over a later stage obtained by pushing the coaction along f.
Comodule extend_comodule(const Comodule& c, const Matrix& f,
                         std::shared_ptr<const Coalgebra> target);

/// Colimit of a finite chain C_0 -> C_1 -> ... -> C_n. Elements are
/// compared by pushing them to the last stage.
class ColimitCoalgebra {
 public:
  ColimitCoalgebra(std::vector<Coalgebra> stages, std::vector<Matrix> maps);

  const std::vector<Coalgebra>& stages() const noexcept { return stages_; }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }
  const Coalgebra& colimit() const { return stages_.back(); }

  /// Matrix of the composite map from stage s to the last stage.
  Matrix to_last(std::size_t stage) const;
  Vector normal_form(std::size_t stage, const Vector& element) const;
  bool equal(std::size_t stage_a, const Vector& a, std::size_t stage_b, const Vector& b) const;

  /// Delta and epsilon commute with the pushforward, for every basis element
  /// of every stage.
  std::vector<std::string> compatibility_violations() const;

 private:
  std::vector<Coalgebra> stages_;
  std::vector<Matrix> maps_;
  std::vector<Matrix> to_last_;
};

}  // namespace norikit
