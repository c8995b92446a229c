#include "norikit/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "norikit/error.hpp"

namespace norikit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotASubdiagram: return "NotASubdiagram";
    case ErrorKind::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorKind::InternalClosureFailure: return "InternalClosureFailure";
    case ErrorKind::NotInSpan: return "NotInSpan";
    case ErrorKind::CoalgebraMismatch: return "CoalgebraMismatch";
    case ErrorKind::NotAMorphism: return "NotAMorphism";
    case ErrorKind::NotAnEndomorphism: return "NotAnEndomorphism";
    case ErrorKind::NotACoalgebraMorphism: return "NotACoalgebraMorphism";
    case ErrorKind::ChainMismatch: return "ChainMismatch";
    case ErrorKind::SizeBound: return "SizeBound";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

const char* to_string(Ring ring) { return ring == Ring::Q ? "Q" : "Z"; }

bool is_integral(const Scalar& x) { return x.get_den() == 1; }

Scalar parse_scalar(std::string_view text) {
  auto bad = [&]() -> Scalar {
    fail(ErrorKind::Parse, "malformed number '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t from) {
    std::size_t end = from;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])))
      ++end;
    return end;
  };
  std::size_t num_end = digits(pos);
  if (num_end == pos) return bad();
  mpz_class num(std::string(text.substr(pos, num_end - pos)), 10);
  mpz_class den = 1;
  if (num_end < text.size()) {
    if (text[num_end] != '/') return bad();
    std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != text.size()) return bad();
    den = mpz_class(std::string(text.substr(num_end + 1, den_end - num_end - 1)), 10);
    if (den == 0)
      fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  }
  Scalar out(negative ? mpz_class(-num) : num, den);
  out.canonicalize();
  return out;
}

std::string format_scalar(const Scalar& x) {
  Scalar c = x;
  c.canonicalize();
  return c.get_str();
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols,
               std::vector<Scalar> entries)
    : ring_(ring), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    fail(ErrorKind::DimensionMismatch, "entry count does not match shape");
  for (auto& x : data_) x.canonicalize();
  if (ring == Ring::Z && !is_integral())
    fail(ErrorKind::RingMismatch, "non-integral entry in a Z-matrix");
}

Matrix Matrix::identity(Ring ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Ring ring,
                         std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr ? rows.begin()->size() : 0;
  std::vector<Scalar> entries;
  for (const auto& row : rows) {
    if (row.size() != nc) fail(ErrorKind::DimensionMismatch, "ragged rows");
    for (long x : row) entries.emplace_back(x);
  }
  return Matrix(ring, nr, nc, std::move(entries));
}

Matrix Matrix::from_columns(Ring ring, std::size_t rows,
                            const std::vector<Vector>& columns) {
  Matrix m(ring, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows)
      fail(ErrorKind::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Matrix Matrix::column_vector(Ring ring, const Vector& v) {
  return from_columns(ring, v.size(), {v});
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                     std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    fail(ErrorKind::DimensionMismatch, "block out of range");
  Matrix b(ring_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
    fail(ErrorKind::DimensionMismatch, "block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x == 0; });
}

bool Matrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Scalar& x) { return norikit::is_integral(x); });
}

Matrix Matrix::with_ring(Ring ring) const {
  if (ring == Ring::Z && !is_integral())
    fail(ErrorKind::RingMismatch, "matrix has non-integral entries");
  Matrix m = *this;
  m.ring_ = ring;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.data_ == b.data_;
}

static void require_same_ring(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring())
    fail(ErrorKind::RingMismatch, "operands over different rings");
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (a.cols() != b.rows())
    fail(ErrorKind::DimensionMismatch, "product shape mismatch");
  Matrix c(a.ring(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorKind::DimensionMismatch, "sum shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorKind::DimensionMismatch, "difference shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  if (a.ring() == Ring::Z && !is_integral(s))
    fail(ErrorKind::RingMismatch, "non-integral scalar times Z-matrix");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size())
    fail(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (v[j] != 0) out[i] += a(i, j) * v[j];
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (a.rows() != b.rows())
    fail(ErrorKind::DimensionMismatch, "hstack row mismatch");
  Matrix c(a.ring(), a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (a.cols() != b.cols())
    fail(ErrorKind::DimensionMismatch, "vstack column mismatch");
  Matrix c(a.ring(), a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  Matrix c(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return c;
}

Matrix block_diagonal(Ring ring, const std::vector<Matrix>& blocks) {
  std::size_t nr = 0, nc = 0;
  for (const auto& b : blocks) {
    if (b.ring() != ring) fail(ErrorKind::RingMismatch, "block over a different ring");
    nr += b.rows();
    nc += b.cols();
  }
  Matrix out(ring, nr, nc);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

Vector vec(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(m(i, j));
  return v;
}

Matrix unvec(Ring ring, const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols)
    fail(ErrorKind::DimensionMismatch, "unvec length mismatch");
  Matrix m(ring, rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = v[j * rows + i];
  return m;
}

// ------------------------------------------------------- field elimination

Rref rref(const Matrix& m) {
  if (m.ring() != Ring::Q) fail(ErrorKind::RingMismatch, "rref needs a Q-matrix");
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t piv = row;
    while (piv < r.rows() && r(piv, col) == 0) ++piv;
    if (piv == r.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(piv, j), r(row, j));
    Scalar inv = 1 / r(row, col);
    for (std::size_t j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col) == 0) continue;
      Scalar f = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) r(i, j) -= f * r(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m.with_ring(Ring::Q)).pivot_columns.size(); }

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) fail(ErrorKind::DimensionMismatch, "determinant of non-square");
  Matrix a = m.with_ring(Ring::Q);
  std::size_t n = a.rows();
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      Scalar f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

std::vector<Vector> nullspace_q(const Matrix& m) {
  if (m.ring() != Ring::Q) fail(ErrorKind::RingMismatch, "nullspace_q needs a Q-matrix");
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivot_columns) is_pivot[p] = true;
  std::vector<Vector> raw;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivot_columns.size(); ++i)
      v[r.pivot_columns[i]] = -r.reduced(i, f);
    raw.push_back(std::move(v));
  }
  if (raw.empty()) return raw;
  // Canonical representative: the RREF of the basis rows.
  Matrix rows(Ring::Q, raw.size(), m.cols());
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows(i, j) = raw[i][j];
  Rref canon = rref(rows);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < raw.size(); ++i) out.push_back(canon.reduced.row(i));
  return out;
}

// ----------------------------------------------------- integer elimination

namespace {

// Plain integer matrix used internally by the Smith and Hermite routines.
struct IntMat {
  std::size_t rows = 0, cols = 0;
  std::vector<mpz_class> a;

  IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  static IntMat identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static IntMat from(const Matrix& m) {
    if (m.ring() != Ring::Z) fail(ErrorKind::RingMismatch, "expected a Z-matrix");
    IntMat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num();
    return out;
  }
  Matrix to_matrix() const {
    Matrix m(Ring::Z, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar((*this)(i, j));
    return m;
  }
  mpz_class& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }
  // row_i -= q * row_j
  void sub_row(std::size_t i, std::size_t j, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < cols; ++k) (*this)(i, k) -= q * (*this)(j, k);
  }
  void sub_col(std::size_t i, std::size_t j, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < rows; ++k) (*this)(k, i) -= q * (*this)(k, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols; ++k) (*this)(i, k) = -(*this)(i, k);
  }
};

// Row-style Hermite form in place; `t` (if given) accumulates the row ops.
// Returns the rank.
std::size_t hermite_in_place(IntMat& h, IntMat* t) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols && row < h.rows; ++col) {
    bool found = false;
    while (true) {
      std::size_t piv = h.rows;
      for (std::size_t i = row; i < h.rows; ++i) {
        if (h(i, col) == 0) continue;
        if (piv == h.rows || abs(h(i, col)) < abs(h(piv, col))) piv = i;
      }
      if (piv == h.rows) break;
      found = true;
      h.swap_rows(piv, row);
      if (t) t->swap_rows(piv, row);
      bool clean = true;
      for (std::size_t i = row + 1; i < h.rows; ++i) {
        if (h(i, col) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(row, col).get_mpz_t());
        h.sub_row(i, row, q);
        if (t) t->sub_row(i, row, q);
        if (h(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (h(row, col) < 0) {
      h.negate_row(row);
      if (t) t->negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(row, col).get_mpz_t());
      h.sub_row(i, row, q);
      if (t) t->sub_row(i, row, q);
    }
    ++row;
  }
  return row;
}

}  // namespace

SmithForm snf(const Matrix& m) {
  IntMat a = IntMat::from(m);
  const std::size_t nr = a.rows, nc = a.cols;
  IntMat u = IntMat::identity(nr);
  IntMat v = IntMat::identity(nc);

  for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
    // Smallest nonzero absolute value in the trailing block becomes the pivot.
    std::size_t pr = nr, pc = nc;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j)
        if (a(i, j) != 0 && (pr == nr || abs(a(i, j)) < abs(a(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == nr) break;
    a.swap_rows(t, pr);
    u.swap_rows(t, pr);
    a.swap_cols(t, pc);
    v.swap_cols(t, pc);

    while (true) {
      bool residue = false;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (a(i, t) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        a.sub_row(i, t, q);
        u.sub_row(i, t, q);
        if (a(i, t) != 0) residue = true;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (a(t, j) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        a.sub_col(j, t, q);
        v.sub_col(j, t, q);
        if (a(t, j) != 0) residue = true;
      }
      if (residue) {
        // A remainder is smaller than the pivot: move the smallest one in.
        std::size_t best_r = t, best_c = t;
        for (std::size_t i = t + 1; i < nr; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(best_r, best_c))) {
            best_r = i;
            best_c = t;
          }
        for (std::size_t j = t + 1; j < nc; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(best_r, best_c))) {
            best_r = t;
            best_c = j;
          }
        a.swap_rows(t, best_r);
        u.swap_rows(t, best_r);
        a.swap_cols(t, best_c);
        v.swap_cols(t, best_c);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      std::size_t bad = nr;
      for (std::size_t i = t + 1; i < nr && bad == nr; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == nr) break;
      a.sub_row(t, bad, -1);
      u.sub_row(t, bad, -1);
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return {u.to_matrix(), a.to_matrix(), v.to_matrix()};
}

Matrix hermite_rows(const Matrix& m) {
  IntMat h = IntMat::from(m);
  std::size_t r = hermite_in_place(h, nullptr);
  Matrix out(Ring::Z, r, h.cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < h.cols; ++j) out(i, j) = Scalar(h(i, j));
  return out;
}

std::vector<Vector> kernel_z(const Matrix& m) {
  if (m.ring() != Ring::Z) fail(ErrorKind::RingMismatch, "kernel_z needs a Z-matrix");
  // Row-reduce M^T while tracking the unimodular transform; transform rows
  // that end up against zero rows of the reduced M^T span the kernel.
  IntMat h = IntMat::from(m.transpose());
  IntMat t = IntMat::identity(m.cols());
  std::size_t r = hermite_in_place(h, &t);
  std::size_t k = m.cols() - r;
  if (k == 0) return {};
  Matrix kern(Ring::Z, k, m.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) kern(i, j) = Scalar(t(r + i, j));
  Matrix canon = hermite_rows(kern);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < canon.rows(); ++i) out.push_back(canon.row(i));
  return out;
}

std::vector<Vector> kernel(const Matrix& m) {
  return m.ring() == Ring::Q ? nullspace_q(m) : kernel_z(m);
}

Matrix span_basis(const Matrix& generators) {
  Matrix rows = generators.transpose();
  if (generators.ring() == Ring::Z) return hermite_rows(rows).transpose();
  Rref r = rref(rows);
  return r.reduced.block(0, 0, r.pivot_columns.size(), rows.cols()).transpose();
}

// ----------------------------------------------------------------- solving

SpanSolver::SpanSolver(const Matrix& generators)
    : ring_(generators.ring()), length_(generators.rows()), count_(generators.cols()) {
  if (ring_ == Ring::Q) {
    Rref r = rref(hstack(generators, Matrix::identity(Ring::Q, length_)));
    for (auto p : r.pivot_columns)
      if (p < count_) pivots_.push_back(p);
    rank_ = pivots_.size();
    transform_ = r.reduced.block(0, count_, length_, length_);
  } else {
    smith_ = snf(generators);
    std::size_t n = std::min(length_, count_);
    while (rank_ < n && smith_.S(rank_, rank_) != 0) ++rank_;
  }
}

std::optional<Vector> SpanSolver::solve(const Vector& target) const {
  if (target.size() != length_)
    fail(ErrorKind::DimensionMismatch, "target length does not match generators");
  if (ring_ == Ring::Z &&
      !std::all_of(target.begin(), target.end(), [](const Scalar& x) { return is_integral(x); }))
    return std::nullopt;
  Vector c(count_);
  if (ring_ == Ring::Q) {
    Vector y = transform_ * target;
    for (std::size_t i = rank_; i < length_; ++i)
      if (y[i] != 0) return std::nullopt;
    for (std::size_t i = 0; i < rank_; ++i) c[pivots_[i]] = y[i];
    return c;
  }
  Vector y = smith_.U * target;
  Vector z(count_);
  for (std::size_t i = 0; i < length_; ++i) {
    if (i < rank_) {
      Scalar q = y[i] / smith_.S(i, i);
      if (!is_integral(q)) return std::nullopt;
      z[i] = q;
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return smith_.V * z;
}

std::optional<Vector> solve_in_span(Ring ring, const std::vector<Vector>& generators,
                                    const Vector& target) {
  for (const auto& g : generators)
    if (g.size() != target.size())
      fail(ErrorKind::DimensionMismatch, "generator and target lengths differ");
  Matrix g = Matrix::from_columns(ring, target.size(), generators);
  return SpanSolver(g).solve(target);
}

// -------------------------------------------------------------------- text

Matrix parse_matrix_text(std::string_view text, Ring ring) {
  std::vector<std::vector<Scalar>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<Scalar> row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_scalar(tok));
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      fail(ErrorKind::Parse, "row at line " + std::to_string(line_no) +
                                 " has " + std::to_string(row.size()) +
                                 " entries, expected " +
                                 std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  std::vector<Scalar> entries;
  for (auto& r : rows)
    for (auto& x : r) entries.push_back(std::move(x));
  return Matrix(ring, rows.size(), nc, std::move(entries));
}

std::string format_matrix(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += format_scalar(m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace norikit
