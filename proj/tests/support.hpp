#pragma once

// Generators and independent oracles shared by the unit tests and the
// acceptance binary. The oracles deliberately avoid the library's
// elimination code: plain Gaussian elimination on nested vectors, Leibniz
// determinants, int64 brute force.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "norikit/diagram.hpp"
#include "norikit/error.hpp"
#include "norikit/linalg.hpp"

namespace testing_support {

using norikit::Matrix;
using norikit::Representation;
using norikit::Ring;
using norikit::Scalar;
using norikit::Vector;

/// Kind of the norikit::Error thrown by f, or nullopt if it returns.
template <class F>
std::optional<norikit::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const norikit::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

struct Rng {
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  bool chance(double p) { return std::bernoulli_distribution(p)(gen); }
  std::mt19937_64 gen;
};

inline Matrix random_matrix(Rng& rng, Ring ring, std::size_t rows, std::size_t cols, long lo,
                            long hi, double zero_bias = 0.0) {
  Matrix m(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rng.chance(zero_bias) ? 0 : rng.uniform(lo, hi);
  return m;
}

inline Matrix random_rational_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(Ring::Q, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      Scalar x(rng.uniform(-5, 5), rng.uniform(1, 4));
      x.canonicalize();
      m(r, c) = x;
    }
  return m;
}

using Rows = std::vector<std::vector<Scalar>>;

inline Rows to_rows(const Matrix& m) {
  Rows out(m.rows(), std::vector<Scalar>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

/// Rank by textbook elimination.
inline std::size_t oracle_rank(Rows a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      Scalar f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t oracle_rank(const Matrix& m) { return oracle_rank(to_rows(m)); }

/// Leibniz expansion; fine up to 6x6.
inline Scalar oracle_det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Scalar term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// ------------------------------------------------------------ representations

struct RepShape {
  std::size_t max_vertices = 4;
  std::size_t max_rank = 3;
  std::size_t max_edges = 4;
  long lo = -2, hi = 2;
  double zero_bias = 0.5;
  std::size_t max_unknowns = 1000;  // bound on the sum of rank^2
};

inline Representation random_representation(Rng& rng, Ring ring, const RepShape& s) {
  for (;;) {
    Representation rep;
    rep.ring = ring;
    const std::size_t nv = static_cast<std::size_t>(rng.uniform(1, long(s.max_vertices)));
    std::vector<std::string> vs;
    std::size_t unknowns = 0;
    for (std::size_t i = 0; i < nv; ++i) {
      vs.push_back("v" + std::to_string(i));
      std::size_t r = static_cast<std::size_t>(rng.uniform(1, long(s.max_rank)));
      rep.rank[vs.back()] = r;
      unknowns += r * r;
    }
    if (unknowns > s.max_unknowns) continue;
    const std::size_t ne = static_cast<std::size_t>(rng.uniform(0, long(s.max_edges)));
    std::vector<norikit::Edge> edges;
    for (std::size_t i = 0; i < ne; ++i) {
      norikit::Edge e{"e" + std::to_string(i), vs[rng.uniform(0, long(nv) - 1)],
                      vs[rng.uniform(0, long(nv) - 1)]};
      const std::size_t rows = rep.rank[e.dst], cols = rep.rank[e.src];
      Matrix m = rng.chance(0.2) && rows == cols
                     ? Matrix::identity(ring, rows)
                     : random_matrix(rng, ring, rows, cols, s.lo, s.hi, s.zero_bias);
      rep.edge_matrix.emplace(e.id, m);
      edges.push_back(e);
    }
    rep.diagram = norikit::Diagram(vs, edges);
    return rep;
  }
}

/// Intertwiner equations assembled independently: unknowns are the entries
/// of every e_p in row-major order, one equation per entry of each edge
/// identity T e_p - e_q T = 0.
inline Rows oracle_intertwiner_rows(const Representation& rep) {
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (const auto& v : rep.diagram.vertices()) {
    offset.push_back(total);
    total += rep.rank.at(v) * rep.rank.at(v);
  }
  auto index_of = [&](const std::string& v) {
    const auto& vs = rep.diagram.vertices();
    return static_cast<std::size_t>(std::find(vs.begin(), vs.end(), v) - vs.begin());
  };
  Rows eqs;
  for (const auto& e : rep.diagram.edges()) {
    const Matrix& t = rep.edge_matrix.at(e.id);
    const std::size_t rp = rep.rank.at(e.src), rq = rep.rank.at(e.dst);
    const std::size_t op = offset[index_of(e.src)], oq = offset[index_of(e.dst)];
    for (std::size_t i = 0; i < rq; ++i)
      for (std::size_t j = 0; j < rp; ++j) {
        std::vector<Scalar> row(total);
        for (std::size_t k = 0; k < rp; ++k) row[op + k * rp + j] += t(i, k);
        for (std::size_t k = 0; k < rq; ++k) row[oq + i * rq + k] -= t(k, j);
        eqs.push_back(std::move(row));
      }
  }
  if (eqs.empty()) eqs.push_back(std::vector<Scalar>(total));
  return eqs;
}

inline std::size_t oracle_end_dimension(const Representation& rep) {
  Rows eqs = oracle_intertwiner_rows(rep);
  return eqs[0].size() - oracle_rank(eqs);
}

/// Membership in the integer span of the columns of a full-column-rank
/// integer matrix B, in int64: x is in the lattice iff c = Lx is integral
/// and Bc = x, with L a rational left inverse of B built by Gauss-Jordan on
/// a maximal independent set of rows.
class LatticeOracle {
 public:
  explicit LatticeOracle(const Matrix& b) : n_(b.rows()), d_(b.cols()) {
    b_.assign(n_, std::vector<long>(d_));
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < d_; ++c) b_[r][c] = b(r, c).get_num().get_si();
    Rows rows = to_rows(b), chosen;
    std::vector<std::size_t> picked;
    for (std::size_t r = 0; r < n_ && chosen.size() < d_; ++r) {
      chosen.push_back(rows[r]);
      if (oracle_rank(chosen) == chosen.size())
        picked.push_back(r);
      else
        chosen.pop_back();
    }
    // Invert the square block [chosen | I].
    const std::size_t d = d_;
    Rows aug(d, std::vector<Scalar>(2 * d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) aug[i][j] = chosen[i][j];
      aug[i][d + i] = 1;
    }
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t p = c;
      while (aug[p][c] == 0) ++p;
      std::swap(aug[p], aug[c]);
      Scalar inv = 1 / aug[c][c];
      for (auto& x : aug[c]) x *= inv;
      for (std::size_t r = 0; r < d; ++r)
        if (r != c && aug[r][c] != 0) {
          Scalar f = aug[r][c];
          for (std::size_t k = 0; k < 2 * d; ++k) aug[r][k] -= f * aug[c][k];
        }
    }
    mpz_class den = 1;
    for (const auto& row : aug)
      for (std::size_t k = d; k < 2 * d; ++k) den = lcm(den, row[k].get_den());
    den_ = den.get_si();
    l_.assign(d, std::vector<long>(n_));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        Scalar v = aug[i][d + k] * den;
        l_[i][picked[k]] = v.get_num().get_si();
      }
  }

  bool contains(const std::vector<long>& x) const {
    std::vector<long> c(d_);
    for (std::size_t i = 0; i < d_; ++i) {
      long acc = 0;
      for (std::size_t k = 0; k < n_; ++k) acc += l_[i][k] * x[k];
      if (acc % den_ != 0) return false;
      c[i] = acc / den_;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      long acc = 0;
      for (std::size_t i = 0; i < d_; ++i) acc += b_[r][i] * c[i];
      if (acc != x[r]) return false;
    }
    return true;
  }

 private:
  std::size_t n_, d_;
  long den_ = 1;
  std::vector<std::vector<long>> b_, l_;
};

/// Calls f on every integer tuple (flat layout of `e`, entries in
/// [-bound, bound]) satisfying every edge equation. Equations are evaluated
/// in int64, so keep edge entries and ranks small.
template <class EndLike, class F>
void for_each_integer_intertwiner(const Representation& rep, const EndLike& e, long bound, F&& f) {
  struct Eq {
    std::size_t src_off, dst_off, rp, rq;
    std::vector<std::vector<long>> t;
  };
  std::vector<Eq> eqs;
  for (const auto& edge : rep.diagram.edges()) {
    const Matrix& m = rep.matrix_of(edge.id);
    Eq q{e.offset(edge.src), e.offset(edge.dst), rep.rank_of(edge.src), rep.rank_of(edge.dst), {}};
    q.t.assign(q.rq, std::vector<long>(q.rp));
    for (std::size_t i = 0; i < q.rq; ++i)
      for (std::size_t j = 0; j < q.rp; ++j) q.t[i][j] = m(i, j).get_num().get_si();
    eqs.push_back(std::move(q));
  }
  const std::size_t n = e.flat_length();
  std::vector<long> x(n, -bound);
  // Column-major: entry (r, c) of the block at `off` with `dim` rows.
  auto at = [&](std::size_t off, std::size_t dim, std::size_t r, std::size_t c) {
    return x[off + c * dim + r];
  };
  for (;;) {
    bool ok = true;
    for (const auto& q : eqs) {
      for (std::size_t i = 0; i < q.rq && ok; ++i)
        for (std::size_t j = 0; j < q.rp && ok; ++j) {
          long lhs = 0, rhs = 0;
          for (std::size_t k = 0; k < q.rp; ++k) lhs += q.t[i][k] * at(q.src_off, q.rp, k, j);
          for (std::size_t k = 0; k < q.rq; ++k) rhs += at(q.dst_off, q.rq, i, k) * q.t[k][j];
          ok = lhs == rhs;
        }
      if (!ok) break;
    }
    if (ok) f(static_cast<const std::vector<long>&>(x));
    std::size_t k = 0;
    while (k < n && x[k] == bound) x[k++] = -bound;
    if (k == n) return;
    ++x[k];
  }
}

}  // namespace testing_support
