#include "norikit/coalgebra.hpp"

#include "norikit/error.hpp"

namespace norikit {

Coalgebra::Coalgebra(Ring ring, std::size_t rank, std::vector<Scalar> delta, Vector epsilon)
    : ring_(ring), rank_(rank), delta_(std::move(delta)), epsilon_(std::move(epsilon)) {
  if (delta_.size() != rank * rank * rank || epsilon_.size() != rank)
    fail(ErrorKind::DimensionMismatch, "coalgebra constants do not match the rank");
}

Matrix Coalgebra::delta_matrix() const {
  Matrix d(ring_, rank_ * rank_, rank_);
  for (std::size_t l = 0; l < rank_; ++l)
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) d(i * rank_ + j, l) = delta(l, i, j);
  return d;
}

Matrix Coalgebra::epsilon_matrix() const {
  Matrix e(ring_, 1, rank_);
  for (std::size_t l = 0; l < rank_; ++l) e(0, l) = epsilon_[l];
  return e;
}

std::vector<std::string> Coalgebra::violations() const {
  std::vector<std::string> out;
  const std::size_t n = rank_;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Scalar lhs = 0, rhs = 0;
          for (std::size_t l = 0; l < n; ++l) {
            lhs += delta(m, l, k) * delta(l, i, j);
            rhs += delta(m, i, l) * delta(l, j, k);
          }
          if (lhs != rhs)
            out.push_back("coassociativity fails at (m,i,j,k)=(" + std::to_string(m) + "," +
                          std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ")");
        }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar left = 0, right = 0;
      for (std::size_t i = 0; i < n; ++i) {
        left += epsilon_[i] * delta(m, i, j);
        right += epsilon_[i] * delta(m, j, i);
      }
      Scalar kron = m == j ? 1 : 0;
      if (left != kron || right != kron)
        out.push_back("counit fails at (m,j)=(" + std::to_string(m) + "," +
                      std::to_string(j) + ")");
    }
  return out;
}

Coalgebra dualize(const EndAlgebra& e) {
  if (!e.is_saturated())
    fail(ErrorKind::InvalidArgument,
         "dualizing over Z needs a saturated basis of the endomorphism lattice");
  const std::size_t n = e.dimension();
  std::vector<Scalar> d(n * n * n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[(l * n + i) * n + j] = e.structure_constant(i, j, l);
  return Coalgebra(e.ring(), n, std::move(d), e.unit_coords());
}

// ----------------------------------------------------------------- comodules

Matrix Comodule::coaction_matrix() const {
  const std::size_t n = coefficients.size(), g = underlying.generators;
  Matrix rho(underlying.ring, g * n, g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < g; ++r)
      for (std::size_t c = 0; c < g; ++c) rho(r * n + i, c) = coefficients[i](r, c);
  return rho;
}

std::vector<std::string> comodule_violations(const Comodule& c) {
  if (!c.coalgebra) return {"comodule has no coalgebra"};
  const Coalgebra& a = *c.coalgebra;
  const std::size_t n = a.rank(), g = c.underlying.generators;
  if (c.coefficients.size() != n) return {"coefficient count does not match coalgebra rank"};
  for (const auto& m : c.coefficients)
    if (m.rows() != g || m.cols() != g || m.ring() != c.underlying.ring)
      return {"coefficient matrix has the wrong shape or ring"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix rhs(c.underlying.ring, g, g);
      for (std::size_t l = 0; l < n; ++l)
        if (a.delta(l, i, j) != 0) rhs = rhs + a.delta(l, i, j) * c.coefficients[l];
      if (!equal_mod(c.underlying, c.coefficients[i] * c.coefficients[j], rhs))
        out.push_back("coaction is not coassociative at (i,j)=(" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
    }
  Matrix unit(c.underlying.ring, g, g);
  for (std::size_t l = 0; l < n; ++l)
    if (a.epsilon()[l] != 0) unit = unit + a.epsilon()[l] * c.coefficients[l];
  if (!equal_mod(c.underlying, unit, Matrix::identity(c.underlying.ring, g)))
    out.push_back("counit law fails for the coaction");
  return out;
}

Comodule module_to_comodule(const EModule& m) {
  Comodule c;
  c.coalgebra = std::make_shared<const Coalgebra>(dualize(*m.algebra));
  c.underlying = m.underlying;
  c.coefficients = m.action;
  return c;
}

EModule comodule_to_module(const Comodule& c, std::shared_ptr<const EndAlgebra> e) {
  if (!c.coalgebra || !(*c.coalgebra == dualize(*e)))
    fail(ErrorKind::CoalgebraMismatch, "comodule is not over the dual of this algebra");
  EModule m;
  m.underlying = c.underlying;
  m.action = c.coefficients;
  m.algebra = std::move(e);
  return m;
}

std::optional<std::size_t> comodule_morphism_violation(const Matrix& f, const Comodule& m,
                                                       const Comodule& n) {
  const std::size_t k = m.coalgebra->rank();
  if (n.coalgebra->rank() != k)
    fail(ErrorKind::DimensionMismatch, "comodules over different coalgebras");
  if (f.rows() != n.underlying.generators || f.cols() != m.underlying.generators)
    fail(ErrorKind::DimensionMismatch, "morphism shape does not match comodules");
  const Ring ring = f.ring();
  Matrix lhs = kronecker(f, Matrix::identity(ring, k)) * m.coaction_matrix();
  Matrix rhs = n.coaction_matrix() * f;
  Presentation target(ring, n.underlying.generators * k,
                      kronecker(n.underlying.relations, Matrix::identity(ring, k)));
  if (equal_mod(target, lhs, rhs)) return std::nullopt;
  // Locate the offending coefficient: rows r*k + i for fixed i.
  const std::size_t g = n.underlying.generators;
  for (std::size_t i = 0; i < k; ++i) {
    Matrix l(ring, g, f.cols()), r(ring, g, f.cols());
    for (std::size_t row = 0; row < g; ++row)
      for (std::size_t c = 0; c < f.cols(); ++c) {
        l(row, c) = lhs(row * k + i, c);
        r(row, c) = rhs(row * k + i, c);
      }
    if (!equal_mod(n.underlying, l, r)) return i;
  }
  return 0;
}

ComoduleMorphism translate_morphism(const Matrix& f, const EModule& m, const EModule& n) {
  Comodule cm = module_to_comodule(m);
  Comodule cn = module_to_comodule(n);
  if (!(*cm.coalgebra == *cn.coalgebra))
    fail(ErrorKind::CoalgebraMismatch, "modules over different algebras");
  if (!is_well_defined({m.underlying, n.underlying, f}))
    fail(ErrorKind::NotAMorphism, "matrix does not respect the relations");
  if (auto bad = comodule_morphism_violation(f, cm, cn))
    fail(ErrorKind::NotAMorphism, "coaction square fails at basis index " + std::to_string(*bad));
  return {f};
}

bool is_coalgebra_morphism(const Matrix& f, const Coalgebra& from, const Coalgebra& to) {
  if (f.rows() != to.rank() || f.cols() != from.rank()) return false;
  if (to.delta_matrix() * f != kronecker(f, f) * from.delta_matrix()) return false;
  return to.epsilon_matrix() * f == from.epsilon_matrix();
}

Matrix dual_of_algebra_hom(const Matrix& h, const Coalgebra& small, const Coalgebra& big) {
  if (h.rows() != small.rank() || h.cols() != big.rank())
    fail(ErrorKind::DimensionMismatch, "algebra hom does not match the coalgebras");
  Matrix f = h.transpose();
  if (!is_coalgebra_morphism(f, small, big))
    fail(ErrorKind::NotACoalgebraMorphism, "dual map does not preserve Delta and epsilon");
  return f;
}

Comodule extend_comodule(const Comodule& c, const Matrix& f,
                         std::shared_ptr<const Coalgebra> target) {
  if (f.cols() != c.coefficients.size() || f.rows() != target->rank())
    fail(ErrorKind::DimensionMismatch, "map does not match the comodule's coalgebra");
  Comodule out;
  out.underlying = c.underlying;
  const std::size_t g = c.underlying.generators;
  for (std::size_t l = 0; l < f.rows(); ++l) {
    Matrix a(c.underlying.ring, g, g);
    for (std::size_t i = 0; i < f.cols(); ++i)
      if (f(l, i) != 0) a = a + f(l, i) * c.coefficients[i];
    out.coefficients.push_back(std::move(a));
  }
  out.coalgebra = std::move(target);
  return out;
}

// ------------------------------------------------------------------ colimits

ColimitCoalgebra::ColimitCoalgebra(std::vector<Coalgebra> stages, std::vector<Matrix> maps)
    : stages_(std::move(stages)), maps_(std::move(maps)) {
  if (stages_.empty()) fail(ErrorKind::ChainMismatch, "a chain needs at least one stage");
  if (maps_.size() + 1 != stages_.size())
    fail(ErrorKind::ChainMismatch, "need exactly one map between consecutive stages");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const Matrix& f = maps_[i];
    if (f.rows() != stages_[i + 1].rank() || f.cols() != stages_[i].rank())
      fail(ErrorKind::ChainMismatch, "map " + std::to_string(i) + " has the wrong shape");
    if (!is_coalgebra_morphism(f, stages_[i], stages_[i + 1]))
      fail(ErrorKind::NotACoalgebraMorphism,
           "map " + std::to_string(i) + " is not a coalgebra morphism");
  }
  const std::size_t last = stages_.size() - 1;
  to_last_.resize(stages_.size());
  to_last_[last] = Matrix::identity(stages_[last].ring(), stages_[last].rank());
  for (std::size_t s = last; s-- > 0;) to_last_[s] = to_last_[s + 1] * maps_[s];
}

Matrix ColimitCoalgebra::to_last(std::size_t stage) const { return to_last_.at(stage); }

Vector ColimitCoalgebra::normal_form(std::size_t stage, const Vector& element) const {
  return to_last_.at(stage) * element;
}

bool ColimitCoalgebra::equal(std::size_t stage_a, const Vector& a, std::size_t stage_b,
                             const Vector& b) const {
  return normal_form(stage_a, a) == normal_form(stage_b, b);
}

std::vector<std::string> ColimitCoalgebra::compatibility_violations() const {
  std::vector<std::string> out;
  const Coalgebra& top = colimit();
  for (std::size_t s = 0; s < stages_.size(); ++s) {
    const Matrix& p = to_last_[s];
    if (top.delta_matrix() * p != kronecker(p, p) * stages_[s].delta_matrix())
      out.push_back("Delta does not commute with the pushforward from stage " +
                    std::to_string(s));
    if (top.epsilon_matrix() * p != stages_[s].epsilon_matrix())
      out.push_back("epsilon does not commute with the pushforward from stage " +
                    std::to_string(s));
  }
  return out;
}

}  // namespace norikit
