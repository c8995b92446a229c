#include "doctest.h"
#include "norikit/error.hpp"
#include "norikit/linalg.hpp"
#include "support.hpp"

using namespace norikit;
using testing_support::Rng;

namespace {

Matrix Q(std::initializer_list<std::initializer_list<long>> rows) {
  return Matrix::from_rows(Ring::Q, rows);
}
Matrix Z(std::initializer_list<std::initializer_list<long>> rows) {
  return Matrix::from_rows(Ring::Z, rows);
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("scalars parse and print exactly") {
  CHECK(parse_scalar("3") == 3);
  CHECK(parse_scalar("-1/2") == Scalar(-1, 2));
  CHECK(parse_scalar("+4/6") == Scalar(2, 3));
  CHECK(format_scalar(Scalar(6, 4)) == "3/2");
  CHECK(format_scalar(Scalar(-5)) == "-5");
  for (const char* bad : {"", "1/0", "1.5", "abc", "1/", "/2", "--1", "1 2", "1/-2"})
    CHECK_MESSAGE(kind_of([&] { parse_scalar(bad); }) == ErrorKind::Parse, bad);
}

TEST_CASE("ring tags are enforced") {
  CHECK(kind_of([] { Q({{1}}) * Z({{1}}); }) == ErrorKind::RingMismatch);
  CHECK(kind_of([] { Matrix(Ring::Z, 1, 1, {Scalar(1, 2)}); }) == ErrorKind::RingMismatch);
  CHECK(kind_of([] { Q({{1, 2}}) * Q({{1, 2}}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("vec is column-major and matches the Kronecker identity") {
  Matrix a = Q({{1, 2}, {3, 4}});
  CHECK(vec(a) == Vector{1, 3, 2, 4});
  CHECK(unvec(Ring::Q, vec(a), 2, 2) == a);

  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    std::size_t m = rng.uniform(1, 3), n = rng.uniform(1, 3), k = rng.uniform(1, 3),
                l = rng.uniform(1, 3);
    Matrix A = testing_support::random_rational_matrix(rng, m, n);
    Matrix X = testing_support::random_rational_matrix(rng, n, k);
    Matrix B = testing_support::random_rational_matrix(rng, k, l);
    CHECK(vec(A * X * B) == kronecker(B.transpose(), A) * vec(X));
  }
}

TEST_CASE("rank and determinant agree with the oracles") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = rng.uniform(1, 5), c = rng.uniform(1, 5);
    Matrix m = testing_support::random_rational_matrix(rng, r, c);
    if (rng.chance(0.3) && r > 1)  // force a dependent row
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;
    CHECK(rank(m) == testing_support::oracle_rank(m));
    if (r == c) CHECK(determinant(m) == testing_support::oracle_det(m));
  }
}

TEST_CASE("rref is reduced and row-equivalent") {
  Rref r = rref(Q({{0, 2, 4}, {1, 1, 1}, {1, 3, 5}}));
  CHECK(r.reduced == Q({{1, 0, -1}, {0, 1, 2}, {0, 0, 0}}));
  CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});
}

TEST_CASE("nullspace over Q") {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    Matrix m = testing_support::random_matrix(rng, Ring::Q, rng.uniform(1, 4), rng.uniform(1, 5),
                                              -3, 3, 0.4);
    auto ns = nullspace_q(m);
    CHECK(ns.size() == m.cols() - testing_support::oracle_rank(m));
    for (const auto& v : ns) CHECK(m * v == Vector(m.rows()));
  }
}

TEST_CASE("Smith normal form") {
  SmithForm s = snf(Z({{2, 4}, {6, 8}}));
  CHECK(s.S == Z({{2, 0}, {0, 4}}));
  CHECK(s.U * Z({{2, 4}, {6, 8}}) * s.V == s.S);

  CHECK(snf(Z({{0, 0}, {0, 0}})).S == Z({{0, 0}, {0, 0}}));
  CHECK(snf(Z({{4, 6}})).S == Z({{2, 0}}));
  CHECK(snf(Matrix(Ring::Z, 0, 3)).S.rows() == 0);

  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    Matrix m = testing_support::random_matrix(rng, Ring::Z, rng.uniform(1, 5), rng.uniform(1, 5),
                                              -20, 20, 0.2);
    SmithForm f = snf(m);
    CHECK(f.U * m * f.V == f.S);
    CHECK(abs(determinant(f.U)) == 1);
    CHECK(abs(determinant(f.V)) == 1);
    const std::size_t k = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < f.S.rows(); ++i)
      for (std::size_t j = 0; j < f.S.cols(); ++j)
        if (i != j) CHECK(f.S(i, j) == 0);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      CHECK(f.S(i, i) >= 0);
      if (f.S(i + 1, i + 1) != 0) {
        CHECK(f.S(i, i) != 0);
        CHECK(is_integral(f.S(i + 1, i + 1) / f.S(i, i)));
      }
    }
  }
}

TEST_CASE("integer kernel is saturated") {
  // 2x = 0 mod nothing: kernel of [2 4] is spanned by (-2, 1), not (-4, 2).
  auto k = kernel_z(Z({{2, 4}}));
  REQUIRE(k.size() == 1);
  CHECK(Z({{2, 4}}) * k[0] == Vector{0});
  CHECK((k[0] == Vector{-2, 1} || k[0] == Vector{2, -1}));

  Rng rng(9);
  for (int t = 0; t < 60; ++t) {
    Matrix m = testing_support::random_matrix(rng, Ring::Z, rng.uniform(1, 2), 3, -3, 3, 0.3);
    auto basis = kernel_z(m);
    CHECK(basis.size() == 3 - testing_support::oracle_rank(m));
    for (const auto& v : basis) CHECK(m * v == Vector(m.rows()));
    if (basis.empty()) continue;
    SpanSolver span(Matrix::from_columns(Ring::Z, 3, basis));
    for (long a = -4; a <= 4; ++a)
      for (long b = -4; b <= 4; ++b)
        for (long c = -4; c <= 4; ++c) {
          Vector x{a, b, c};
          if (m * x == Vector(m.rows())) CHECK(span.contains(x));
        }
  }
}

TEST_CASE("Hermite form and canonical spans") {
  Matrix g1 = Z({{2, 0}, {0, 3}});
  Matrix g2 = Z({{2, 2}, {0, 3}});  // same lattice, different generators
  CHECK(span_basis(g1) == span_basis(g2));
  CHECK(span_basis(Z({{2}, {0}})) != span_basis(Z({{1}, {0}})));
  CHECK(span_basis(Q({{2}, {0}})) == span_basis(Q({{1}, {0}})));
  CHECK(hermite_rows(Z({{0, 0}, {4, 6}, {2, 3}})).rows() == 1);
}

TEST_CASE("solving in a span") {
  std::vector<Vector> gens{{1, 0, 1}, {0, 2, 0}};
  CHECK(solve_in_span(Ring::Q, gens, {1, 1, 1}) == Vector{1, Scalar(1, 2)});
  CHECK_FALSE(solve_in_span(Ring::Z, gens, {1, 1, 1}));
  CHECK(solve_in_span(Ring::Z, gens, {3, 4, 3}) == Vector{3, 2});
  CHECK_FALSE(solve_in_span(Ring::Q, gens, {1, 0, 0}));
}

TEST_CASE("matrix text format") {
  Matrix m = parse_matrix_text("1 2\n\n-3 1/2\n", Ring::Q);
  CHECK(m == Matrix(Ring::Q, 2, 2, {1, 2, -3, Scalar(1, 2)}));
  CHECK(format_matrix(m) == "1 2\n-3 1/2\n");
  CHECK(kind_of([] { parse_matrix_text("1 2\n3\n", Ring::Q); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_matrix_text("1/2\n", Ring::Z); }) == ErrorKind::RingMismatch);
}
