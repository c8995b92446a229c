#include "norikit/functors.hpp"

#include <algorithm>
#include <set>

#include "norikit/error.hpp"

namespace norikit {

namespace {

std::vector<Matrix> module_endomorphisms(const EModule& p) {
  Subquotient s = module_hom(p, p);
  const std::size_t g = p.generators();
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < s.inclusion.cols(); ++j)
    out.push_back(unvec(p.ring(), s.inclusion.column(j), g, g));
  return out;
}

// Coordinates of `target` in span(inclusion) + span(relations), first part.
std::optional<Vector> coords_mod(const SpanSolver& solver, std::size_t k, const Vector& target) {
  auto y = solver.solve(target);
  if (!y) return std::nullopt;
  return Vector(y->begin(), y->begin() + static_cast<std::ptrdiff_t>(k));
}

Report make_report(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

bool same_span(const Matrix& a, const Matrix& b) { return span_basis(a) == span_basis(b); }

// Whether every basis element of the E(p) tuple algebra is block diagonal for
// the given block sizes.
bool block_diagonal_basis(const EndAlgebra& ep, const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> start;
  std::size_t total = 0;
  for (auto s : sizes) {
    start.push_back(total);
    total += s;
  }
  auto block_of = [&](std::size_t r) {
    return static_cast<std::size_t>(std::upper_bound(start.begin(), start.end(), r) -
                                    start.begin()) - 1;
  };
  for (std::size_t i = 0; i < ep.dimension(); ++i) {
    Matrix m = ep.component(i, "v");
    for (std::size_t r = 0; r < total; ++r)
      for (std::size_t c = 0; c < total; ++c)
        if (block_of(r) != block_of(c) && m(r, c) != 0) return false;
  }
  return true;
}

}  // namespace

Matrix induced_map(const Matrix& src_inclusion, const Matrix& dst_inclusion,
                   const Matrix& dst_relations, const Matrix& f) {
  if (f.cols() != src_inclusion.rows() || f.rows() != dst_inclusion.rows())
    fail(ErrorKind::DimensionMismatch, "map does not match the ambient modules");
  const Ring ring = dst_inclusion.ring();
  const std::size_t k = dst_inclusion.cols();
  SpanSolver solver(hstack(dst_inclusion, dst_relations));
  Matrix out(ring, k, src_inclusion.cols());
  for (std::size_t j = 0; j < src_inclusion.cols(); ++j) {
    auto c = coords_mod(solver, k, f * src_inclusion.column(j));
    if (!c) fail(ErrorKind::NotInSpan, "image leaves the target submodule");
    for (std::size_t i = 0; i < k; ++i) out(i, j) = (*c)[i];
  }
  return out;
}

// -------------------------------------------------------------- the functors

HomObject hom_functor(const Presentation& m, const EModule& p) {
  if (m.ring != p.ring()) fail(ErrorKind::RingMismatch, "M and p live over different rings");
  const Ring ring = m.ring;
  const std::size_t a0 = m.generators, a1 = m.relations.cols(), g = p.generators();
  HomObject h;
  h.source = m;
  h.target_generators = g;
  h.ambient = power(p.underlying, a0);
  // A^T acting diagonally: p^{a0} -> p^{a1}.
  PresentedMorphism at{h.ambient, power(p.underlying, a1),
                       kronecker(m.relations.transpose(), Matrix::identity(ring, g))};
  Subquotient k = kernel(at);
  h.inclusion = k.inclusion;
  h.module.algebra = p.algebra;
  h.module.underlying = k.presentation;
  const Matrix id = Matrix::identity(ring, a0);
  for (const auto& a : p.action)
    h.module.action.push_back(
        induced_map(h.inclusion, h.inclusion, h.ambient.relations, kronecker(id, a)));
  return h;
}

EModule tensor_functor(const Presentation& m, const EModule& p) {
  if (m.ring != p.ring()) fail(ErrorKind::RingMismatch, "M and p live over different rings");
  const Ring ring = m.ring;
  const std::size_t a0 = m.generators, g = p.generators();
  EModule t;
  t.algebra = p.algebra;
  t.underlying = Presentation(
      ring, a0 * g,
      hstack(kronecker(m.relations, Matrix::identity(ring, g)),
             kronecker(Matrix::identity(ring, a0), p.underlying.relations)));
  for (const auto& a : p.action) t.action.push_back(kronecker(Matrix::identity(ring, a0), a));
  return t;
}

Matrix hom_functor_map(const Matrix& lift, const HomObject& from, const HomObject& to) {
  if (lift.rows() != from.source.generators || lift.cols() != to.source.generators)
    fail(ErrorKind::DimensionMismatch, "lift does not match the Hom objects");
  if (from.target_generators != to.target_generators)
    fail(ErrorKind::DimensionMismatch, "Hom objects into different modules");
  const Ring ring = lift.ring();
  return induced_map(from.inclusion, to.inclusion, to.ambient.relations,
                     kronecker(lift.transpose(), Matrix::identity(ring, to.target_generators)));
}

Matrix tensor_functor_map(const Matrix& lift, const EModule& p) {
  return kronecker(lift, Matrix::identity(lift.ring(), p.generators()));
}

Report sandwich_check_hom(const Presentation& m, const EModule& p) {
  HomObject h = hom_functor(m, p);
  Subquotient plain = hom_module(m, p.underlying);
  NormalForm a = normal_form(h.module.underlying), b = normal_form(plain.presentation);
  bool images = same_span(hstack(h.inclusion, h.ambient.relations),
                          hstack(plain.inclusion, h.ambient.relations));
  std::string detail = "free rank " + std::to_string(a.free_rank) + " vs " +
                       std::to_string(b.free_rank) + ", " +
                       std::to_string(a.invariant_factors.size()) + " vs " +
                       std::to_string(b.invariant_factors.size()) + " invariant factors";
  if (!images) detail += ", images differ";
  return make_report("hom-sandwich", a == b && images, detail);
}

Matrix left_action(const Matrix& alpha, const EModule& p, const HomObject& h) {
  if (alpha.rows() != p.generators() || alpha.cols() != p.generators())
    fail(ErrorKind::DimensionMismatch, "alpha does not match p");
  if (!is_well_defined({p.underlying, p.underlying, alpha}) || first_noncommuting(alpha, p, p))
    fail(ErrorKind::NotAnEndomorphism, "alpha does not commute with the action on p");
  const std::size_t a0 = h.source.generators;
  return induced_map(h.inclusion, h.inclusion, h.ambient.relations,
                     kronecker(Matrix::identity(alpha.ring(), a0), alpha));
}

Matrix right_action(const Matrix& phi, const HomObject& h) {
  if (!h.source.is_free_presentation() || phi.rows() != h.source.generators ||
      phi.cols() != h.source.generators)
    fail(ErrorKind::DimensionMismatch, "phi must be square of the rank of Tp");
  return hom_functor_map(phi, h, h);
}

// --------------------------------------------------------------------- X(p)

XObject compute_X(const EModule& p) {
  if (!p.underlying.is_free_presentation())
    fail(ErrorKind::InvalidArgument, "X(p) needs p to be free over the base ring");
  const Ring ring = p.ring();
  const std::size_t d = p.generators();
  XObject x;
  x.p = p;
  x.alphas = module_endomorphisms(p);
  x.ep = std::make_shared<const EndAlgebra>(compute_end(loop_representation(ring, d, x.alphas)));
  x.hom = hom_functor(Presentation::free(ring, d), p);

  // Joint kernel of left(alpha) - right(alpha) on Hom_R(Tp, p).
  const std::size_t k = x.hom.inclusion.cols();
  Matrix stacked(ring, 0, k);
  for (const auto& a : x.alphas)
    stacked = vstack(stacked, left_action(a, p, x.hom) - right_action(a, x.hom));
  Subquotient in_h =
      kernel(PresentedMorphism{x.hom.module.underlying,
                               power(x.hom.module.underlying, x.alphas.size()), stacked});
  x.x.inclusion = x.hom.inclusion * in_h.inclusion;
  x.x.presentation = in_h.presentation;

  const Matrix& inc = x.x.inclusion;
  const Matrix& rel = x.hom.ambient.relations;
  x.module.algebra = p.algebra;
  x.module.underlying = x.x.presentation;
  const Matrix id = Matrix::identity(ring, d);
  for (const auto& a : p.action)
    x.module.action.push_back(induced_map(inc, inc, rel, kronecker(id, a)));
  for (std::size_t i = 0; i < x.ep->dimension(); ++i) {
    Matrix psi = x.ep->component(i, "v");
    x.left.push_back(induced_map(inc, inc, rel, kronecker(id, psi)));
    x.right.push_back(induced_map(inc, inc, rel, kronecker(psi.transpose(), id)));
  }

  Matrix ep_span(ring, d * d, x.ep->dimension());
  for (std::size_t i = 0; i < x.ep->dimension(); ++i)
    for (std::size_t r = 0; r < d * d; ++r) ep_span(r, i) = x.ep->basis_vector(i)[r];
  x.matches_ep = same_span(inc, ep_span);
  return x;
}

XObject compute_X(const Representation& rep, const std::string& vertex) {
  if (!rep.diagram.has_vertex(vertex)) fail(ErrorKind::UnknownVertex, "'" + vertex + "'");
  auto e = std::make_shared<const EndAlgebra>(
      compute_end(restrict(rep, full_subdiagram(rep.diagram, {vertex}))));
  return compute_X(vertex_module(e, vertex));
}

TensorResult tensor_over_Ep(const XObject& x, const EModule& m) {
  if (!m.algebra || m.action.size() != x.ep->dimension())
    fail(ErrorKind::DimensionMismatch, "M is not a module over E(p)");
  const Ring ring = m.ring();
  const std::size_t n = x.x.inclusion.cols(), g = m.generators();
  const Matrix in = Matrix::identity(ring, n), ig = Matrix::identity(ring, g);

  Matrix rel = kronecker(in, m.underlying.relations);
  for (std::size_t k = 0; k < x.ep->dimension(); ++k)
    rel = hstack(rel, kronecker(x.right[k], ig) - kronecker(in, m.action[k]));
  rel = hstack(rel, kronecker(x.x.presentation.relations, ig));

  TensorResult t;
  t.module.algebra = x.module.algebra;
  t.module.underlying = Presentation(ring, n * g, rel);
  for (const auto& a : x.module.action) t.module.action.push_back(kronecker(a, ig));

  // ev(x_a (x) m) = act_M(x_a) m.
  t.ev = Matrix(ring, g, n * g);
  const std::size_t d = x.p.generators();
  for (std::size_t a = 0; a < n; ++a) {
    Matrix xa = unvec(ring, x.x.inclusion.column(a), d, d);
    auto c = x.ep->coordinates(vec(xa));
    if (!c) fail(ErrorKind::NotInSpan, "element of X(p) is not in E(p)");
    t.ev.set_block(0, a * g, m.act(*c));
  }
  return t;
}

CanonicalMap canonical_map(const XObject& x) {
  EModule taut = vertex_module(x.ep, "v");
  TensorResult t = tensor_over_Ep(x, taut);
  CanonicalMap c;
  c.source = t.module.underlying;
  c.can = t.ev;
  PresentedMorphism f{c.source, taut.underlying, c.can};
  c.iso = is_well_defined(f) && is_isomorphism(f);
  return c;
}

CanonicalMap canonical_map(const Representation& rep, const std::string& vertex) {
  return canonical_map(compute_X(rep, vertex));
}

Report tensor_roundtrip(const XObject& x, const EModule& m, const std::string& label) {
  const std::string name = "tensor-roundtrip[" + label + "]";
  auto bad = module_violations(m);
  if (!bad.empty()) return make_report(name, false, "sample is not a module: " + bad.front());
  TensorResult t = tensor_over_Ep(x, m);
  PresentedMorphism ev{t.module.underlying, m.underlying, t.ev};
  if (!is_well_defined(ev)) return make_report(name, false, "evaluation is not well defined");
  if (!is_isomorphism(ev)) return make_report(name, false, "evaluation is not an isomorphism");
  auto broken = module_violations(t.module);
  if (!broken.empty()) return make_report(name, false, "tensor product: " + broken.front());
  const Matrix ig = Matrix::identity(m.ring(), m.generators());
  for (std::size_t k = 0; k < x.ep->dimension(); ++k)
    if (!equal_mod(m.underlying, t.ev * kronecker(x.left[k], ig), m.action[k] * t.ev))
      return make_report(name, false,
                         "transported action differs for basis element " + std::to_string(k));
  return make_report(name, true,
                     "rank " + std::to_string(m.generators()) + ", action reproduced");
}

Report actions_commute(const XObject& x) {
  const Ring ring = x.p.ring();
  const std::size_t d = x.p.generators();
  std::size_t pairs = 0;
  for (const auto& a : x.alphas) {
    Matrix l = left_action(a, x.p, x.hom);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s) {
        Matrix unit(ring, d, d);
        unit(r, s) = 1;
        Matrix rt = right_action(unit, x.hom);
        if (l * rt != rt * l)
          return make_report("actions-commute", false,
                             "left and right actions do not commute at unit (" +
                                 std::to_string(r) + "," + std::to_string(s) + ")");
        ++pairs;
      }
  }
  return make_report("actions-commute", true, std::to_string(pairs) + " pairs commute");
}

// --------------------------------------------------------------- adjunction

Report adjunction_check(const EModule& p, const Presentation& m, const EModule& b,
                        std::size_t bound) {
  const Ring ring = m.ring;
  const std::size_t a0 = m.generators, gp = p.generators(), gb = b.generators();
  if (a0 * (gp + gb) > bound)
    fail(ErrorKind::SizeBound, "adjunction instance of size " + std::to_string(a0 * (gp + gb)) +
                                   " exceeds bound " + std::to_string(bound));
  if (p.ring() != ring || b.ring() != ring)
    fail(ErrorKind::RingMismatch, "adjunction data over different rings");

  EModule pm = tensor_functor(m, p);
  HomObject h = hom_functor(m, b);
  Subquotient lhs = module_hom(pm, b);       // vec(F), F : gb x (a0 gp)
  Subquotient rhs = module_hom(p, h.module); // vec(G), G : k x gp
  const std::size_t k = h.inclusion.cols();

  // F = [F_1 | ... | F_a0] goes to the stacked [F_1; ...; F_a0] in b^{a0},
  // read in the generators of Hom(M, b).
  SpanSolver in_h(hstack(h.inclusion, h.ambient.relations));
  SpanSolver in_rhs(hstack(rhs.inclusion,
                           kronecker(Matrix::identity(ring, gp), h.module.underlying.relations)));
  const std::size_t n = lhs.inclusion.cols();
  Matrix phi(ring, rhs.inclusion.cols(), n);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix f = unvec(ring, lhs.inclusion.column(j), gb, a0 * gp);
    Matrix g(ring, k, gp);
    for (std::size_t c = 0; c < gp; ++c) {
      Vector stacked(a0 * gb);
      for (std::size_t i = 0; i < a0; ++i)
        for (std::size_t s = 0; s < gb; ++s) stacked[i * gb + s] = f(s, i * gp + c);
      auto y = coords_mod(in_h, k, stacked);
      if (!y) return make_report("adjunction", false, "stacked map leaves Hom(M, b)");
      for (std::size_t r = 0; r < k; ++r) g(r, c) = (*y)[r];
    }
    auto y = coords_mod(in_rhs, rhs.inclusion.cols(), vec(g));
    if (!y) return make_report("adjunction", false, "image is not an A-linear map");
    for (std::size_t r = 0; r < phi.rows(); ++r) phi(r, j) = (*y)[r];
  }

  PresentedMorphism corr{lhs.presentation, rhs.presentation, phi};
  NormalForm nl = normal_form(lhs.presentation), nr = normal_form(rhs.presentation);
  std::string dims = "ranks " + std::to_string(nl.free_rank) + " and " +
                     std::to_string(nr.free_rank);
  if (!(nl == nr)) return make_report("adjunction", false, "normal forms differ, " + dims);
  if (!is_well_defined(corr) || !is_isomorphism(corr))
    return make_report("adjunction", false, "correspondence is not bijective, " + dims);

  // Naturality in b along the endomorphisms of b.
  for (const auto& g : module_endomorphisms(b)) {
    Matrix post = induced_map(lhs.inclusion, lhs.inclusion,
                              kronecker(Matrix::identity(ring, a0 * gp), b.underlying.relations),
                              kronecker(Matrix::identity(ring, a0 * gp), g));
    Matrix hg = induced_map(h.inclusion, h.inclusion, h.ambient.relations,
                            kronecker(Matrix::identity(ring, a0), g));
    Matrix post_h = induced_map(rhs.inclusion, rhs.inclusion,
                                kronecker(Matrix::identity(ring, gp), h.module.underlying.relations),
                                kronecker(Matrix::identity(ring, gp), hg));
    if (!equal_mod(rhs.presentation, phi * post, post_h * phi))
      return make_report("adjunction", false, "naturality square in b fails");
  }
  return make_report("adjunction", true, dims + ", bijective and natural");
}

// -------------------------------------------------------------- equivalence

std::vector<Report> verify_equivalence(const Representation& rep,
                                       const std::vector<std::string>& vertices,
                                       std::size_t bound) {
  std::set<std::string> vs(vertices.begin(), vertices.end());
  if (vs.empty()) fail(ErrorKind::InvalidArgument, "empty vertex set");
  Diagram sub = full_subdiagram(rep.diagram, vs);
  const std::vector<std::string> order(vs.begin(), vs.end());
  std::vector<std::size_t> sizes;
  std::size_t d = 0;
  for (const auto& v : order) {
    sizes.push_back(rep.rank_of(v));
    d += sizes.back();
  }
  if (d > bound)
    fail(ErrorKind::SizeBound, "summed rank " + std::to_string(d) + " exceeds bound " +
                                   std::to_string(bound));
  const Ring ring = rep.ring;
  auto ef = std::make_shared<const EndAlgebra>(compute_end(restrict(rep, sub)));
  EModule p = vertex_sum_module(ef, order);
  XObject x = compute_X(p);
  std::vector<Report> out;

  out.push_back(make_report("block-diagonal", block_diagonal_basis(*x.ep, sizes),
                            "E(p) has dimension " + std::to_string(x.ep->dimension())));

  Matrix embedded(ring, d * d, ef->dimension());
  for (std::size_t i = 0; i < ef->dimension(); ++i) {
    Vector v = vec(p.action[i]);
    for (std::size_t r = 0; r < d * d; ++r) embedded(r, i) = v[r];
  }
  Matrix ep_span(ring, d * d, x.ep->dimension());
  for (std::size_t i = 0; i < x.ep->dimension(); ++i)
    for (std::size_t r = 0; r < d * d; ++r) ep_span(r, i) = x.ep->basis_vector(i)[r];
  out.push_back(make_report("E(p)=End(T_F)", same_span(embedded, ep_span),
                            "dim End(T_F) = " + std::to_string(ef->dimension())));

  out.push_back(make_report("T(X(p))=E(p)", x.matches_ep,
                            "X(p) has " + std::to_string(x.x.inclusion.cols()) + " generators"));

  CanonicalMap can = canonical_map(x);
  out.push_back(make_report("can-iso", can.iso,
                            "can is " + std::to_string(can.can.rows()) + "x" +
                                std::to_string(can.can.cols())));

  // Samples: regular, tautological, one block per vertex, zero.
  std::vector<std::pair<std::string, EModule>> samples;
  samples.emplace_back("regular", regular_module(x.ep));
  samples.emplace_back("tautological", vertex_module(x.ep, "v"));
  std::vector<EModule> blocks;
  std::size_t start = 0;
  for (std::size_t b = 0; b < order.size(); ++b) {
    EModule m;
    m.algebra = x.ep;
    m.underlying = Presentation::free(ring, sizes[b]);
    for (std::size_t i = 0; i < x.ep->dimension(); ++i)
      m.action.push_back(x.ep->component(i, "v").block(start, start, sizes[b], sizes[b]));
    start += sizes[b];
    blocks.push_back(m);
    samples.emplace_back("block " + order[b], m);
  }
  samples.emplace_back("zero", zero_module(x.ep));
  for (const auto& [label, m] : samples) out.push_back(tensor_roundtrip(x, m, label));

  out.push_back(actions_commute(x));

  // Full on morphisms: Hom_A(p_i, p_j) and Hom_E(p)(Tp_i, Tp_j) coincide.
  bool full = true;
  std::string where;
  for (std::size_t i = 0; i < order.size() && full; ++i)
    for (std::size_t j = 0; j < order.size() && full; ++j) {
      Subquotient a = module_hom(vertex_module(ef, order[i]), vertex_module(ef, order[j]));
      Subquotient e = module_hom(blocks[i], blocks[j]);
      if (!(normal_form(a.presentation) == normal_form(e.presentation)) ||
          !same_span(a.inclusion, e.inclusion)) {
        full = false;
        where = order[i] + " -> " + order[j];
      }
    }
  out.push_back(make_report("hom-surjective", full,
                            full ? std::to_string(order.size() * order.size()) + " pairs agree"
                                 : "mismatch at " + where));
  return out;
}

}  // namespace norikit
