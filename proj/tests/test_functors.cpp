#include <memory>

#include "doctest.h"
#include "norikit/functors.hpp"
#include "support.hpp"

using namespace norikit;
using testing_support::error_kind;
using testing_support::Rng;

namespace {

Matrix Q(std::initializer_list<std::initializer_list<long>> rows) {
  return Matrix::from_rows(Ring::Q, rows);
}

const Matrix kN = Q({{0, 1}, {0, 0}});

std::shared_ptr<const EndAlgebra> share(EndAlgebra e) {
  return std::make_shared<const EndAlgebra>(std::move(e));
}

/// `underlying` with the ground ring acting by scalars.
EModule trivial_module(const Presentation& underlying) {
  EModule m;
  m.algebra = share(compute_end(loop_representation(underlying.ring, 1, {})));
  m.underlying = underlying;
  m.action = {Matrix::identity(underlying.ring, underlying.generators)};
  return m;
}

EModule tautological_jordan(Ring ring = Ring::Q) {
  return vertex_module(share(compute_end(loop_representation(ring, 2, {kN.with_ring(ring)}))),
                       "v");
}

Representation identity_edge() {
  Representation rep;
  rep.rank = {{"p", 1}, {"q", 1}};
  rep.diagram = Diagram({"p", "q"}, {{"m", "p", "q"}});
  rep.edge_matrix.emplace("m", Q({{1}}));
  return rep;
}

Representation isolated() { return loop_representation(Ring::Q, 1, {}); }

bool intertwines(const HomObject& h, const Matrix& induced, const Matrix& ambient) {
  return equal_mod(h.ambient, h.inclusion * induced, ambient * h.inclusion);
}

bool all_passed(const std::vector<Report>& rs) {
  for (const auto& r : rs)
    if (!r.passed) return false;
  return !rs.empty();
}

}  // namespace

TEST_CASE("hom functor examples") {
  EModule taut = tautological_jordan();
  HomObject free2 = hom_functor(Presentation::free(Ring::Q, 2), taut);
  CHECK(normal_form(free2.module.underlying).free_rank == 4);
  for (std::size_t i = 0; i < taut.action.size(); ++i)
    CHECK(intertwines(free2, free2.module.action[i],
                      kronecker(Matrix::identity(Ring::Q, 2), taut.action[i])));

  HomObject z2 = hom_functor(Presentation::cyclic(Ring::Z, 2),
                             trivial_module(Presentation::free(Ring::Z, 1)));
  CHECK(normal_form(z2.module.underlying).is_trivial());

  HomObject one = hom_functor(Presentation::free(Ring::Q, 1), taut);
  CHECK(normal_form(one.module.underlying).free_rank == 2);
  for (std::size_t i = 0; i < taut.action.size(); ++i)
    CHECK(intertwines(one, one.module.action[i], taut.action[i]));
  CHECK(module_violations(one.module).empty());

  CHECK(error_kind([&] { hom_functor(Presentation::free(Ring::Z, 1), taut); }) ==
        ErrorKind::RingMismatch);
}

TEST_CASE("tensor functor examples") {
  EModule taut = tautological_jordan();
  EModule t3 = tensor_functor(Presentation::free(Ring::Q, 3), taut);
  CHECK(normal_form(t3.underlying).free_rank == 6);
  CHECK(module_violations(t3).empty());

  EModule z2 = tensor_functor(Presentation::cyclic(Ring::Z, 2),
                              trivial_module(Presentation::free(Ring::Z, 1)));
  CHECK(normal_form(z2.underlying).invariant_factors == std::vector<mpz_class>{2});

  Presentation q2_mod_diag(Ring::Q, 2, Q({{1}, {1}}));
  EModule q = tensor_functor(q2_mod_diag, trivial_module(Presentation::free(Ring::Q, 1)));
  CHECK(normal_form(q.underlying).free_rank == 1);
  CHECK(normal_form(q.underlying).invariant_factors.empty());
}

TEST_CASE("forgetting the action recovers the plain Hom") {
  CHECK(sandwich_check_hom(Presentation::free(Ring::Q, 3), tautological_jordan()).passed);
  CHECK(sandwich_check_hom(Presentation::free(Ring::Q, 2), tautological_jordan()).passed);
  Report r = sandwich_check_hom(Presentation::cyclic(Ring::Z, 4),
                                trivial_module(Presentation::cyclic(Ring::Z, 6)));
  CHECK(r.passed);
  CHECK(normal_form(hom_functor(Presentation::cyclic(Ring::Z, 4),
                                trivial_module(Presentation::cyclic(Ring::Z, 6)))
                        .module.underlying)
            .invariant_factors == std::vector<mpz_class>{2});

  Rng rng(61);
  for (int t = 0; t < 40; ++t) {
    const std::size_t g = rng.uniform(1, 2), a = rng.uniform(1, 3);
    Presentation m(Ring::Z, g, testing_support::random_matrix(rng, Ring::Z, g, a, -4, 4, 0.3));
    const std::size_t gp = rng.uniform(1, 2);
    Presentation p(Ring::Z, gp, testing_support::random_matrix(rng, Ring::Z, gp, 1, 0, 6, 0.2));
    CHECK(sandwich_check_hom(m, trivial_module(p)).passed);
  }
}

TEST_CASE("left and right actions") {
  EModule taut = tautological_jordan();
  HomObject h = hom_functor(Presentation::free(Ring::Q, 2), taut);
  const Matrix i2 = Matrix::identity(Ring::Q, 2);
  const std::size_t k = h.inclusion.cols();

  CHECK(left_action(i2, taut, h) == Matrix::identity(Ring::Q, k));
  CHECK(left_action(Matrix(Ring::Q, 2, 2), taut, h).is_zero());
  // Post-composition with N: vec(N F) = (I (x) N) vec F.
  CHECK(intertwines(h, left_action(kN, taut, h), kronecker(i2, kN)));
  CHECK(error_kind([&] { left_action(Q({{1, 0}, {0, 0}}), taut, h); }) ==
        ErrorKind::NotAnEndomorphism);

  CHECK(right_action(i2, h) == Matrix::identity(Ring::Q, k));
  CHECK(right_action(Matrix(Ring::Q, 2, 2), h).is_zero());
  // Pre-composition with N: vec(F N) = (N^T (x) I) vec F.
  CHECK(intertwines(h, right_action(kN, h), kronecker(kN.transpose(), i2)));
  CHECK(error_kind([&] { right_action(Matrix::identity(Ring::Q, 3), h); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("X(p) on the small examples") {
  XObject iso = compute_X(isolated(), "v");
  CHECK(iso.x.inclusion.cols() == 1);
  CHECK(iso.matches_ep);

  XObject j = compute_X(loop_representation(Ring::Q, 2, {kN}), "v");
  CHECK(j.x.inclusion.cols() == 2);
  CHECK(j.matches_ep);
  SpanSolver span(j.x.inclusion);
  CHECK(span.contains(vec(Matrix::identity(Ring::Q, 2))));
  CHECK(span.contains(vec(kN)));

  for (const char* v : {"p", "q"}) {
    XObject x = compute_X(identity_edge(), v);
    CHECK(normal_form(x.x.presentation).free_rank == 1);
    CHECK(x.matches_ep);
  }
}

TEST_CASE("the canonical map") {
  CanonicalMap c = canonical_map(isolated(), "v");
  CHECK(c.iso);
  CHECK(c.can == Q({{1}}));

  CanonicalMap j = canonical_map(loop_representation(Ring::Q, 2, {kN}), "v");
  CHECK(j.iso);
  CHECK(j.can.rows() == 2);
  CHECK(normal_form(j.source).free_rank == 2);

  CanonicalMap e = canonical_map(identity_edge(), "p");
  CHECK(e.iso);
  CHECK(normal_form(e.source).free_rank == 1);

  CanonicalMap z = canonical_map(
      loop_representation(Ring::Z, 2, {Matrix::from_rows(Ring::Z, {{0, 2}, {0, 0}})}), "v");
  CHECK(z.iso);
}

TEST_CASE("tensoring back over E(p)") {
  XObject j = compute_X(loop_representation(Ring::Q, 2, {kN}), "v");
  CHECK(tensor_roundtrip(j, vertex_module(j.ep, "v"), "tautological").passed);
  CHECK(tensor_roundtrip(j, regular_module(j.ep), "regular").passed);
  CHECK(tensor_roundtrip(j, zero_module(j.ep), "zero").passed);
  CHECK(tensor_roundtrip(j, vertex_sum_module(j.ep, {"v", "v"}), "sum").passed);

  TensorResult t = tensor_over_Ep(j, vertex_module(j.ep, "v"));
  CHECK(module_violations(t.module).empty());
  CHECK(t.ev.rows() == 2);

  CHECK(actions_commute(j).passed);
}

TEST_CASE("functoriality with lifts chosen two ways") {
  Rng rng(62);
  std::vector<EModule> targets{trivial_module(Presentation::free(Ring::Z, 1)),
                               trivial_module(Presentation::cyclic(Ring::Z, 6)),
                               tautological_jordan(Ring::Z)};
  int tested = 0;
  while (tested < 40) {
    // Z/a -> Z/b -> Z/c, 1 -> k and 1 -> l, well defined when b | a k and c | b l.
    const long a = rng.uniform(1, 12), b = rng.uniform(1, 12), c = rng.uniform(1, 12);
    const long k = rng.uniform(0, 11), l = rng.uniform(0, 11);
    if ((a * k) % b != 0 || (b * l) % c != 0) continue;
    ++tested;
    Presentation ma = Presentation::cyclic(Ring::Z, a), mb = Presentation::cyclic(Ring::Z, b),
                 mc = Presentation::cyclic(Ring::Z, c);
    Matrix f = Matrix::from_rows(Ring::Z, {{k}}), g = Matrix::from_rows(Ring::Z, {{l}});
    Matrix f2 = f + Scalar(rng.uniform(-3, 3)) * mb.relations;  // another lift of f
    const EModule& p = targets[rng.uniform(0, long(targets.size()) - 1)];

    HomObject ha = hom_functor(ma, p), hb = hom_functor(mb, p), hc = hom_functor(mc, p);
    const Presentation& hom_a = ha.module.underlying;
    CHECK(equal_mod(hom_a, hom_functor_map(f, hb, ha), hom_functor_map(f2, hb, ha)));
    CHECK(equal_mod(hom_a, hom_functor_map(g * f, hc, ha),
                    hom_functor_map(f, hb, ha) * hom_functor_map(g, hc, hb)));
    CHECK(equal_mod(hom_a, hom_functor_map(Matrix::identity(Ring::Z, 1), ha, ha),
                    Matrix::identity(Ring::Z, ha.inclusion.cols())));

    const Presentation& ten_c = tensor_functor(mc, p).underlying;
    const Presentation& ten_b = tensor_functor(mb, p).underlying;
    CHECK(equal_mod(ten_b, tensor_functor_map(f, p), tensor_functor_map(f2, p)));
    CHECK(equal_mod(ten_c, tensor_functor_map(g * f, p),
                    tensor_functor_map(g, p) * tensor_functor_map(f, p)));
  }
}

TEST_CASE("scalar blocks commute with diagonal endomorphisms") {
  Rng rng(63);
  testing_support::RepShape shape;
  shape.max_vertices = 1;
  shape.max_unknowns = 9;
  for (int t = 0; t < 60; ++t) {
    Representation rep = testing_support::random_representation(rng, Ring::Q, shape);
    EModule p = vertex_module(share(compute_end(rep)), "v0");
    Subquotient ends = module_hom(p, p);
    const std::size_t g = p.generators();
    Vector v(ends.inclusion.rows());
    for (std::size_t c = 0; c < ends.inclusion.cols(); ++c) {
      const long s = rng.uniform(-3, 3);
      for (std::size_t r = 0; r < v.size(); ++r) v[r] += s * ends.inclusion(r, c);
    }
    Matrix alpha = unvec(Ring::Q, v, g, g);
    const std::size_t m = rng.uniform(1, 3), n = rng.uniform(1, 3);
    Matrix a = testing_support::random_matrix(rng, Ring::Q, m, n, -3, 3);
    Matrix lhs = kronecker(Matrix::identity(Ring::Q, m), alpha) *
                 kronecker(a, Matrix::identity(Ring::Q, g));
    Matrix rhs = kronecker(a, Matrix::identity(Ring::Q, g)) *
                 kronecker(Matrix::identity(Ring::Q, n), alpha);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("X(p), can and the commutation on random representations") {
  Rng rng(64);
  testing_support::RepShape shape;
  shape.max_vertices = 3;
  shape.max_rank = 2;
  shape.max_unknowns = 8;
  for (int t = 0; t < 25; ++t) {
    Representation rep = testing_support::random_representation(rng, Ring::Q, shape);
    for (const auto& v : rep.diagram.vertices()) {
      XObject x = compute_X(rep, v);
      CHECK(x.matches_ep);
      CHECK(canonical_map(x).iso);
      CHECK(actions_commute(x).passed);
      CHECK(tensor_roundtrip(x, regular_module(x.ep), "regular").passed);
    }
  }
}

TEST_CASE("adjunction") {
  EModule taut = tautological_jordan();
  CHECK(adjunction_check(taut, Presentation::free(Ring::Q, 1), taut).passed);
  CHECK(adjunction_check(taut, Presentation::free(Ring::Q, 2), taut).passed);
  CHECK(adjunction_check(taut, Presentation::free(Ring::Q, 2), zero_module(taut.algebra)).passed);
  Presentation q2_mod_diag(Ring::Q, 2, Q({{1}, {1}}));
  CHECK(adjunction_check(taut, q2_mod_diag, taut).passed);

  EModule zt = trivial_module(Presentation::free(Ring::Z, 1));
  EModule z6 = trivial_module(Presentation::cyclic(Ring::Z, 6));
  z6.algebra = zt.algebra;
  CHECK(adjunction_check(zt, Presentation::cyclic(Ring::Z, 4), z6).passed);

  CHECK(error_kind([&] { adjunction_check(taut, Presentation::free(Ring::Q, 4), taut); }) ==
        ErrorKind::SizeBound);
  CHECK(error_kind([&] { adjunction_check(taut, Presentation::free(Ring::Q, 2), taut, 7); }) ==
        ErrorKind::SizeBound);
}

TEST_CASE("equivalence reports on the small examples") {
  CHECK(all_passed(verify_equivalence(isolated(), {"v"})));
  CHECK(all_passed(verify_equivalence(loop_representation(Ring::Q, 2, {kN}), {"v"})));
  CHECK(all_passed(verify_equivalence(identity_edge(), {"p", "q"})));
  CHECK(all_passed(verify_equivalence(identity_edge(), {"q"})));
  CHECK(error_kind([] {
          verify_equivalence(loop_representation(Ring::Q, 3, {}), {"v"}, 2);
        }) == ErrorKind::SizeBound);
}
