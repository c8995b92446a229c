#include "norikit/suites.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "norikit/error.hpp"

namespace norikit {

using ojson = nlohmann::ordered_json;

namespace {

std::string inline_matrix(const Matrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      out += format_scalar(m(r, c));
    }
    out += ']';
  }
  return out + "]";
}

std::string inline_vector(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + format_scalar(v[i]);
  return out + "]";
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

Report report(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

std::shared_ptr<const EndAlgebra> end_of(const Representation& rep,
                                         const std::set<std::string>& vs) {
  return std::make_shared<const EndAlgebra>(
      compute_end(restrict(rep, full_subdiagram(rep.diagram, vs))));
}

// A small non-free module for the Hom and adjunction checks.
Presentation sample_quotient(Ring ring) {
  if (ring == Ring::Z) return Presentation::cyclic(Ring::Z, 2);
  return Presentation(Ring::Q, 2, Matrix::from_rows(Ring::Q, {{1}, {1}}));
}

// --------------------------------------------------------------- end suite

std::vector<Report> end_suite(const Representation& rep) {
  std::vector<Report> out;
  const EndAlgebra e = compute_end(rep);
  const std::size_t n = e.dimension();

  std::size_t eqs = 0;
  std::string bad;
  for (std::size_t i = 0; i < n && bad.empty(); ++i)
    for (const auto& m : rep.diagram.edges()) {
      Matrix t = rep.matrix_of(m.id).with_ring(rep.ring);
      if (t * e.component(i, m.src) != e.component(i, m.dst) * t) {
        bad = "basis " + std::to_string(i) + " breaks edge '" + m.id + "'";
        break;
      }
      ++eqs;
    }
  out.push_back(report("intertwiner-equations", bad.empty(),
                       bad.empty() ? std::to_string(eqs) + " equations hold" : bad));

  Matrix sys = intertwiner_system(rep);
  std::size_t nullity = sys.cols() - rank(sys.with_ring(Ring::Q));
  out.push_back(report("dimension-vs-nullity", nullity == n,
                       "dimension " + std::to_string(n) + ", nullity " +
                           std::to_string(nullity)));

  bool assoc = true;
  for (std::size_t i = 0; i < n && assoc; ++i)
    for (std::size_t j = 0; j < n && assoc; ++j)
      for (std::size_t k = 0; k < n && assoc; ++k)
        for (std::size_t m = 0; m < n && assoc; ++m) {
          Scalar lhs = 0, rhs = 0;
          for (std::size_t l = 0; l < n; ++l) {
            lhs += e.structure_constant(i, j, l) * e.structure_constant(l, k, m);
            rhs += e.structure_constant(j, k, l) * e.structure_constant(i, l, m);
          }
          assoc = lhs == rhs;
        }
  out.push_back(report("associativity", assoc, std::to_string(n * n * n * n) + " identities"));

  bool unit = true;
  for (std::size_t i = 0; i < n && unit; ++i) {
    Vector b = unit_vector(n, i);
    unit = e.multiply(e.unit_coords(), b) == b && e.multiply(b, e.unit_coords()) == b;
  }
  out.push_back(report("unit-laws", unit, "unit " + inline_vector(e.unit_coords())));

  out.push_back(report("saturated-basis", e.is_saturated(),
                       rep.ring == Ring::Z ? "integer lattice basis" : "rational basis"));

  std::size_t homs = 0;
  std::string broken;
  for (const auto& v : rep.diagram.vertices()) {
    try {
      transition_hom(e, *end_of(rep, {v}));
      ++homs;
    } catch (const Error& err) {
      broken = v + ": " + err.what();
      break;
    }
  }
  out.push_back(report("transition-homs", broken.empty(),
                       broken.empty() ? std::to_string(homs) + " restrictions to one vertex"
                                      : broken));

  auto shared = std::make_shared<const EndAlgebra>(e);
  std::string mod_bad;
  for (const auto& v : rep.diagram.vertices()) {
    auto viol = module_violations(vertex_module(shared, v));
    if (!viol.empty()) {
      mod_bad = v + ": " + viol.front();
      break;
    }
  }
  if (mod_bad.empty()) {
    auto viol = module_violations(regular_module(shared));
    if (!viol.empty()) mod_bad = "regular: " + viol.front();
  }
  out.push_back(report("module-laws", mod_bad.empty(),
                       mod_bad.empty() ? "vertex and regular modules" : mod_bad));
  return out;
}

// ----------------------------------------------------------- duality suite

std::vector<Report> duality_suite(const Representation& rep) {
  std::vector<Report> out;
  auto e = std::make_shared<const EndAlgebra>(compute_end(rep));
  Coalgebra c = dualize(*e);
  auto viol = c.violations();
  out.push_back(report("coalgebra-laws", viol.empty(),
                       viol.empty() ? "rank " + std::to_string(c.rank()) : viol.front()));

  std::vector<std::pair<std::string, EModule>> modules;
  for (const auto& v : rep.diagram.vertices()) modules.emplace_back(v, vertex_module(e, v));
  modules.emplace_back("regular", regular_module(e));

  for (const auto& [label, m] : modules) {
    Comodule cm = module_to_comodule(m);
    auto cv = comodule_violations(cm);
    out.push_back(report("comodule-laws[" + label + "]", cv.empty(),
                         cv.empty() ? "rank " + std::to_string(m.generators()) : cv.front()));
    EModule back = comodule_to_module(cm, e);
    out.push_back(report("roundtrip[" + label + "]", back.action == m.action,
                         back.action == m.action ? "action matrices identical"
                                                 : "action matrices differ"));
  }

  // Accept/reject agreement between the comodule and module morphism tests.
  std::size_t tried = 0, accepted = 0;
  bool agree = true;
  for (const auto& [la, a] : modules)
    for (const auto& [lb, b] : modules) {
      std::vector<Matrix> candidates;
      const Ring ring = a.ring();
      for (std::size_t r = 0; r < b.generators(); ++r)
        for (std::size_t s = 0; s < a.generators(); ++s) {
          Matrix u(ring, b.generators(), a.generators());
          u(r, s) = 1;
          candidates.push_back(u);
        }
      Subquotient hom = module_hom(a, b);
      for (std::size_t j = 0; j < hom.inclusion.cols(); ++j)
        candidates.push_back(unvec(ring, hom.inclusion.column(j), b.generators(),
                                   a.generators()));
      for (const auto& f : candidates) {
        bool module_side = !first_noncommuting(f, a, b).has_value();
        bool comodule_side = true;
        try {
          translate_morphism(f, a, b);
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::NotAMorphism) throw;
          comodule_side = false;
        }
        agree = agree && module_side == comodule_side;
        accepted += comodule_side;
        ++tried;
      }
    }
  out.push_back(report("morphism-agreement", agree,
                       std::to_string(tried) + " candidates, " + std::to_string(accepted) +
                           " accepted"));

  std::string bad;
  for (const auto& v : rep.diagram.vertices()) {
    auto small = end_of(rep, {v});
    try {
      dual_of_algebra_hom(transition_hom(*e, *small), dualize(*small), c);
    } catch (const Error& err) {
      bad = v + ": " + err.what();
      break;
    }
  }
  out.push_back(report("dual-transitions", bad.empty(),
                       bad.empty() ? "coalgebra maps from every vertex" : bad));
  return out;
}

// ------------------------------------------------------- equivalence suite

std::vector<Report> equivalence_suite(const Representation& rep, std::size_t bound) {
  std::vector<Report> out;
  const Ring ring = rep.ring;
  auto whole = std::make_shared<const EndAlgebra>(compute_end(rep));

  for (const auto& v : rep.diagram.vertices()) {
    const std::string tag = "[" + v + "]";
    if (rep.rank_of(v) > bound) {
      out.push_back(report("vertex" + tag, false, "rank exceeds size bound"));
      continue;
    }
    auto ev = end_of(rep, {v});
    XObject x = compute_X(vertex_module(ev, v));
    out.push_back(report("X(p)=E(p)" + tag, x.matches_ep,
                         "dimension " + std::to_string(x.ep->dimension())));

    Matrix a(ring, x.ep->flat_length(), x.ep->dimension()), b(ring, ev->flat_length(),
                                                                  ev->dimension());
    for (std::size_t i = 0; i < x.ep->dimension(); ++i)
      for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) = x.ep->basis_vector(i)[r];
    for (std::size_t i = 0; i < ev->dimension(); ++i)
      for (std::size_t r = 0; r < b.rows(); ++r) b(r, i) = ev->basis_vector(i)[r];
    out.push_back(report("E(p)=End(T|p)" + tag, span_basis(a) == span_basis(b),
                         "commutant of " + std::to_string(x.alphas.size()) + " endomorphisms"));

    CanonicalMap can = canonical_map(x);
    out.push_back(report("can-iso" + tag, can.iso,
                         std::to_string(can.can.rows()) + "x" + std::to_string(can.can.cols())));

    for (auto& r : {tensor_roundtrip(x, regular_module(x.ep), "regular"),
                    tensor_roundtrip(x, vertex_module(x.ep, "v"), "tautological"),
                    tensor_roundtrip(x, zero_module(x.ep), "zero")}) {
      Report tagged = r;
      tagged.name += tag;
      out.push_back(tagged);
    }
    Report ac = actions_commute(x);
    ac.name += tag;
    out.push_back(ac);

    EModule p = vertex_module(whole, v);
    for (const auto& m : {Presentation::free(ring, 2), sample_quotient(ring)}) {
      Report s = sandwich_check_hom(m, p);
      s.name += tag + "[" + std::to_string(m.generators) + "x" +
                std::to_string(m.relations.cols()) + "]";
      out.push_back(s);
    }
  }

  // Adjunction on pairs of vertex modules, within the size bound.
  const Presentation m = sample_quotient(ring);
  std::size_t done = 0, skipped = 0;
  std::string bad;
  for (const auto& v : rep.diagram.vertices())
    for (const auto& w : rep.diagram.vertices()) {
      const std::size_t size = m.generators * (rep.rank_of(v) + rep.rank_of(w));
      if (size > bound) {
        ++skipped;
        continue;
      }
      Report r = adjunction_check(vertex_module(whole, v), m, vertex_module(whole, w), bound);
      if (!r.passed && bad.empty()) bad = v + " -> " + w + ": " + r.detail;
      ++done;
    }
  std::string detail = std::to_string(done) + " pairs";
  if (skipped) detail += ", " + std::to_string(skipped) + " over the size bound";
  out.push_back(report("adjunction", bad.empty(), bad.empty() ? detail : bad));

  std::size_t total = 0;
  for (const auto& v : rep.diagram.vertices()) total += rep.rank_of(v);
  if (total > bound) {
    out.push_back(report("equivalence", false,
                         "summed rank " + std::to_string(total) + " exceeds size bound " +
                             std::to_string(bound)));
  } else if (!rep.diagram.vertices().empty()) {
    for (auto r : verify_equivalence(rep, rep.diagram.vertices(), bound)) {
      r.name = "full/" + r.name;
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

bool all_passed(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return false;
  return true;
}

std::vector<Report> run_suite(const Representation& rep, const std::string& suite,
                              std::size_t bound) {
  require_valid(rep);
  if (suite == "end") return end_suite(rep);
  if (suite == "duality") return duality_suite(rep);
  if (suite == "equivalence") return equivalence_suite(rep, bound);
  if (suite == "all") {
    std::vector<Report> out;
    for (const char* s : {"end", "duality", "equivalence"})
      for (auto& r : run_suite(rep, s, bound)) {
        r.name = std::string(s) + "/" + r.name;
        out.push_back(std::move(r));
      }
    return out;
  }
  fail(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
}

std::string render_reports(const std::string& suite, const std::vector<Report>& reports,
                           bool json) {
  if (json) {
    ojson checks = ojson::array();
    for (const auto& r : reports)
      checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    ojson j = {{"suite", suite}, {"passed", all_passed(reports)}, {"checks", checks}};
    return j.dump(2) + "\n";
  }
  std::string out;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    out += (r.passed ? "PASS " : "FAIL ") + r.name + ": " + r.detail + "\n";
    failed += !r.passed;
  }
  out += "suite " + suite + ": " + std::to_string(reports.size() - failed) + "/" +
         std::to_string(reports.size()) + " passed\n";
  return out;
}

// ------------------------------------------------------------ plain reports

std::string snf_report(const Matrix& m, bool json) {
  SmithForm s = snf(m.with_ring(Ring::Z));
  std::vector<std::string> factors;
  for (std::size_t i = 0; i < std::min(s.S.rows(), s.S.cols()); ++i)
    if (s.S(i, i) != 0) factors.push_back(format_scalar(s.S(i, i)));
  if (json) {
    ojson j = {{"S", matrix_to_json(s.S)},
               {"U", matrix_to_json(s.U)},
               {"V", matrix_to_json(s.V)},
               {"invariant_factors", factors}};
    return j.dump(2) + "\n";
  }
  std::string out = "S:\n" + format_matrix(s.S) + "U:\n" + format_matrix(s.U) + "V:\n" +
                    format_matrix(s.V) + "invariant factors:";
  for (const auto& f : factors) out += " " + f;
  return out + "\n";
}

std::string end_algebra_report(const EndAlgebra& e, bool json) {
  const auto& vertices = e.representation().diagram.vertices();
  const std::size_t n = e.dimension();
  if (json) {
    ojson basis = ojson::array();
    for (std::size_t i = 0; i < n; ++i) {
      ojson t = ojson::object();
      for (const auto& v : vertices) t[v] = matrix_to_json(e.component(i, v));
      basis.push_back(t);
    }
    ojson sc = ojson::array();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
          if (e.structure_constant(i, j, l) != 0)
            sc.push_back({i, j, l, format_scalar(e.structure_constant(i, j, l))});
    ojson j = {{"ring", to_string(e.ring())},
               {"dimension", n},
               {"basis", basis},
               {"unit", vector_to_json(e.unit_coords())},
               {"structure_constants", sc}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "ring: " << to_string(e.ring()) << "\n";
  out << "dimension: " << n << "\n";
  out << "basis:\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "  b" << i << ":";
    for (const auto& v : vertices) out << " " << v << "=" << inline_matrix(e.component(i, v));
    out << "\n";
  }
  out << "unit: " << inline_vector(e.unit_coords()) << "\n";
  out << "structure constants (i j l value):\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        if (e.structure_constant(i, j, l) != 0)
          out << "  " << i << " " << j << " " << l << " "
              << format_scalar(e.structure_constant(i, j, l)) << "\n";
  return out.str();
}

std::string coalgebra_report(const Coalgebra& c) {
  const std::size_t n = c.rank();
  ojson delta = ojson::array();
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (c.delta(l, i, j) != 0) delta.push_back({l, i, j, format_scalar(c.delta(l, i, j))});
  ojson j = {{"rank", n}, {"epsilon", vector_to_json(c.epsilon())}, {"delta", delta}};
  return j.dump(2) + "\n";
}

CommandResult comodule_report(const Representation& rep, std::string_view module_text,
                              bool json) {
  auto e = std::make_shared<const EndAlgebra>(compute_end(rep));
  EModule m = parse_module(module_text, e);
  Comodule c = module_to_comodule(m);
  auto viol = comodule_violations(c);
  bool roundtrip = comodule_to_module(c, e).action == m.action;
  CommandResult r;
  r.passed = viol.empty() && roundtrip;
  if (json) {
    ojson coeffs = ojson::array();
    for (const auto& a : c.coefficients) coeffs.push_back(matrix_to_json(a));
    ojson j = {{"rank", m.generators()},
               {"coalgebra_rank", c.coalgebra->rank()},
               {"coefficients", coeffs},
               {"valid", viol.empty()},
               {"roundtrip", roundtrip}};
    if (!viol.empty()) j["violations"] = viol;
    r.output = j.dump(2) + "\n";
    return r;
  }
  std::ostringstream out;
  out << "rank: " << m.generators() << "\n";
  out << "coalgebra rank: " << c.coalgebra->rank() << "\n";
  out << "coaction coefficients:\n";
  for (std::size_t i = 0; i < c.coefficients.size(); ++i)
    out << "  A" << i << " = " << inline_matrix(c.coefficients[i]) << "\n";
  out << "comodule laws: " << (viol.empty() ? "ok" : viol.front()) << "\n";
  out << "roundtrip: " << (roundtrip ? "ok" : "differs") << "\n";
  r.output = out.str();
  return r;
}

CommandResult colimit_report(const ChainSpec& chain, bool json) {
  const Representation& rep = chain.representation;
  require_valid(rep);
  if (chain.stages.empty()) fail(ErrorKind::ChainMismatch, "chain has no stages");

  std::vector<std::shared_ptr<const EndAlgebra>> algebras;
  std::vector<Coalgebra> stages;
  std::vector<std::set<std::string>> sets;
  for (const auto& s : chain.stages) {
    std::set<std::string> vs(s.begin(), s.end());
    if (!sets.empty() && !std::includes(vs.begin(), vs.end(), sets.back().begin(),
                                        sets.back().end()))
      fail(ErrorKind::ChainMismatch, "chain stages must grow");
    for (const auto& v : vs)
      if (!rep.diagram.has_vertex(v)) fail(ErrorKind::ChainMismatch, "unknown vertex '" + v + "'");
    algebras.push_back(end_of(rep, vs));
    stages.push_back(dualize(*algebras.back()));
    sets.push_back(std::move(vs));
  }
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i + 1 < stages.size(); ++i)
    maps.push_back(dual_of_algebra_hom(transition_hom(*algebras[i + 1], *algebras[i]),
                                       stages[i], stages[i + 1]));
  ColimitCoalgebra colim(stages, maps);
  auto compat = colim.compatibility_violations();

  // Every vertex comodule at every stage extends to the last stage.
  auto top = std::make_shared<const Coalgebra>(colim.colimit());
  std::size_t extended = 0;
  std::string ext_bad;
  for (std::size_t s = 0; s < stages.size(); ++s)
    for (const auto& v : sets[s]) {
      Comodule c = module_to_comodule(vertex_module(algebras[s], v));
      auto viol = comodule_violations(extend_comodule(c, colim.to_last(s), top));
      if (!viol.empty() && ext_bad.empty()) ext_bad = "stage " + std::to_string(s) + ", " + v;
      ++extended;
    }

  std::vector<Vector> normal;
  for (std::size_t i = 0; i < chain.elements.size(); ++i) {
    const auto& el = chain.elements[i];
    if (el.stage >= stages.size() || el.coords.size() != stages[el.stage].rank())
      fail(ErrorKind::ChainMismatch, "element " + std::to_string(i) + " does not fit its stage");
    normal.push_back(colim.normal_form(el.stage, el.coords));
  }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> seen(normal.size());
  for (std::size_t i = 0; i < normal.size(); ++i) {
    if (seen[i]) continue;
    classes.push_back({i});
    for (std::size_t j = i + 1; j < normal.size(); ++j)
      if (!seen[j] && colim.equal(chain.elements[i].stage, chain.elements[i].coords,
                                  chain.elements[j].stage, chain.elements[j].coords)) {
        seen[j] = true;
        classes.back().push_back(j);
      }
  }

  CommandResult r;
  r.passed = compat.empty() && ext_bad.empty();
  if (json) {
    ojson st = ojson::array();
    for (std::size_t s = 0; s < stages.size(); ++s)
      st.push_back({{"vertices", sets[s]}, {"rank", stages[s].rank()}});
    ojson mj = ojson::array();
    for (const auto& f : maps) mj.push_back(matrix_to_json(f));
    ojson els = ojson::array();
    for (std::size_t i = 0; i < normal.size(); ++i)
      els.push_back({{"stage", chain.elements[i].stage},
                     {"coords", vector_to_json(chain.elements[i].coords)},
                     {"normal_form", vector_to_json(normal[i])}});
    ojson j = {{"stages", st},
               {"colimit_rank", colim.colimit().rank()},
               {"maps", mj},
               {"compatible", compat.empty()},
               {"comodules_extend", ext_bad.empty()},
               {"elements", els},
               {"classes", classes}};
    r.output = j.dump(2) + "\n";
    return r;
  }
  std::ostringstream out;
  for (std::size_t s = 0; s < stages.size(); ++s) {
    out << "stage " << s << ": {";
    bool first = true;
    for (const auto& v : sets[s]) {
      out << (first ? "" : ",") << v;
      first = false;
    }
    out << "} rank " << stages[s].rank() << "\n";
  }
  for (std::size_t i = 0; i < maps.size(); ++i)
    out << "map " << i << " -> " << i + 1 << ": " << inline_matrix(maps[i]) << "\n";
  out << "colimit rank: " << colim.colimit().rank() << "\n";
  out << "delta/epsilon compatible: " << (compat.empty() ? "yes" : compat.front()) << "\n";
  out << "comodules extend: "
      << (ext_bad.empty() ? std::to_string(extended) + " checked" : "fails at " + ext_bad) << "\n";
  for (std::size_t i = 0; i < normal.size(); ++i)
    out << "element " << i << " (stage " << chain.elements[i].stage << ") -> "
        << inline_vector(normal[i]) << "\n";
  for (const auto& cl : classes) {
    out << "class:";
    for (auto i : cl) out << " " << i;
    out << "\n";
  }
  r.output = out.str();
  return r;
}

}  // namespace norikit
