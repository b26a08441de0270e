#include "flagcert/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace flagcert {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
  const size_t r = rows.size();
  const size_t c = r ? rows.begin()->size() : 0;
  Matrix m(r, c);
  size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix rows");
    size_t j = 0;
    for (const auto& s : row) m(i, j++) = s;
    ++i;
  }
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, size_t rows) {
  Matrix m(rows, columns.size());
  for (size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns) {
  if (columns.empty()) throw std::invalid_argument("cannot infer row count from zero columns");
  return from_columns(columns, columns.front().size());
}

Matrix Matrix::unit(size_t rows, size_t cols, size_t r, size_t c) {
  Matrix m(rows, cols);
  m(r, c) = 1;
  return m;
}

Vector Matrix::col(size_t c) const {
  Vector v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Vector Matrix::row(size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_col(size_t c, const Vector& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (size_t i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (size_t c = 0; c < cols_; ++c) out.push_back(col(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::conj() const {
  Matrix m(*this);
  for (auto& s : m.data_) s = s.conj();
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_real() const {
  for (const auto& s : data_)
    if (!s.is_real()) return false;
  return true;
}

Scalar Matrix::trace() const {
  Scalar t;
  for (size_t k = 0; k < std::min(rows_, cols_); ++k) t += (*this)(k, k);
  return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix m(a);
  for (size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix m(a);
  for (size_t k = 0; k < m.data_.size(); ++k) m.data_[k] -= b.data_[k];
  return m;
}

Matrix operator-(const Matrix& a) {
  Matrix m(a);
  for (auto& s : m.data_) s = -s;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix m(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  return m;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix m(a);
  for (auto& x : m.data_) x = s * x;
  return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

Vector unit_vector(size_t n, size_t k) {
  Vector v(n);
  v.at(k) = 1;
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vector out(a);
  for (size_t k = 0; k < a.size(); ++k) out[k] += b[k];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vector out(a);
  for (size_t k = 0; k < a.size(); ++k) out[k] -= b[k];
  return out;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector out(v);
  for (auto& x : out) x = s * x;
  return out;
}

Vector conj(const Vector& v) {
  Vector out(v);
  for (auto& x : out) x = x.conj();
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector real_coords(const Vector& v) {
  Vector out(2 * v.size());
  for (size_t k = 0; k < v.size(); ++k) {
    out[k] = v[k].real_part();
    out[v.size() + k] = v[k].imag_part();
  }
  return out;
}

Matrix bracket(const Matrix& x, const Matrix& y) { return x * y - y * x; }

Echelon row_reduce(Matrix m) {
  Echelon e;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Scalar inv = m(row, col).inverse();
    for (size_t j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) = m(row, j) * inv;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar f = m(r, col);
      for (size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

size_t rank(const Matrix& m) {
  SpanReducer red(m.cols());
  for (size_t r = 0; r < m.rows(); ++r) red.insert(m.row(r));
  return red.rank();
}

Scalar determinant(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix m(a);
  const size_t n = m.rows();
  Scalar det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar();
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Scalar inv = m(c, c).inverse();
    for (size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const Scalar f = m(r, c) * inv;
      for (size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Matrix kernel_basis(const Matrix& m) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(basis, m.cols());
}

Matrix column_echelon(const Matrix& generators) {
  Echelon e = row_reduce(generators.transpose());
  Matrix out(generators.rows(), e.pivots.size());
  for (size_t k = 0; k < e.pivots.size(); ++k)
    for (size_t i = 0; i < generators.rows(); ++i) out(i, k) = e.reduced(k, i);
  return out;
}

Subspace Subspace::span(const Matrix& generators) {
  Subspace s;
  s.ambient_ = generators.rows();
  Echelon e = row_reduce(generators);
  std::vector<Vector> cols;
  for (size_t p : e.pivots) cols.push_back(generators.col(p));
  s.basis_ = Matrix::from_columns(cols, s.ambient_);
  s.canonical_ = column_echelon(s.basis_);
  return s;
}

Subspace Subspace::span(std::span<const Vector> generators, size_t ambient_dim) {
  return span(Matrix::from_columns(generators, ambient_dim));
}

Subspace Subspace::zero(size_t ambient_dim) { return span(Matrix(ambient_dim, 0)); }
Subspace Subspace::whole(size_t ambient_dim) { return span(Matrix::identity(ambient_dim)); }

Matrix Subspace::annihilator() const { return kernel_basis(canonical_.transpose()).transpose(); }

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  SpanReducer red(ambient_);
  for (size_t c = 0; c < canonical_.cols(); ++c) red.insert(canonical_.col(c));
  return red.contains(v);
}

Subspace kernel(const Matrix& m) { return Subspace::span(kernel_basis(m)); }

bool column_space_equal(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  return a.canonical() == b.canonical();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  const size_t n = a.ambient_dim(), ka = a.dim(), kb = b.dim();
  Matrix stacked(n, ka + kb);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < ka; ++j) stacked(i, j) = a.basis()(i, j);
    for (size_t j = 0; j < kb; ++j) stacked(i, ka + j) = -b.basis()(i, j);
  }
  Matrix ker = kernel_basis(stacked);
  Matrix gens(n, ker.cols());
  for (size_t c = 0; c < ker.cols(); ++c)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < ka; ++j)
        if (!ker(j, c).is_zero()) gens(i, c) += a.basis()(i, j) * ker(j, c);
  return Subspace::span(gens);
}

Subspace apply(const Matrix& g, const Subspace& s) { return Subspace::span(g * s.basis()); }

namespace {

bool is_hermitian(const Matrix& g) { return g.square() && g.transpose() == g.conj(); }

// basis[:, k] += t * basis[:, j] for the form values g(a, b) = s_a^t G conj(s_b).
void add_multiple(Matrix& form, Matrix& basis, size_t k, size_t j, const Scalar& t) {
  const size_t n = form.rows();
  for (size_t c = 0; c < n; ++c) form(k, c) += t * form(j, c);
  const Scalar tc = t.conj();
  for (size_t r = 0; r < n; ++r) form(r, k) += tc * form(r, j);
  for (size_t r = 0; r < basis.rows(); ++r) basis(r, k) += t * basis(r, j);
}

void swap_index(Matrix& form, Matrix& basis, size_t a, size_t b) {
  const size_t n = form.rows();
  for (size_t c = 0; c < n; ++c) std::swap(form(a, c), form(b, c));
  for (size_t r = 0; r < n; ++r) std::swap(form(r, a), form(r, b));
  for (size_t r = 0; r < basis.rows(); ++r) std::swap(basis(r, a), basis(r, b));
}

}  // namespace

Congruence congruence_diagonalize(const Matrix& g) {
  if (!is_hermitian(g)) throw std::invalid_argument("congruence diagonalization needs a Hermitian matrix");
  const size_t n = g.rows();
  Matrix form(g);
  Matrix basis = Matrix::identity(n);
  for (size_t k = 0; k < n; ++k) {
    if (form(k, k).is_zero()) {
      size_t j = k + 1;
      while (j < n && form(j, j).is_zero()) ++j;
      if (j < n) {
        swap_index(form, basis, k, j);
      } else {
        j = k + 1;
        while (j < n && form(j, k).is_zero()) ++j;
        if (j == n) continue;  // radical direction
        // value of s_k + t s_j is 2 Re(t * form(j, k)); pick t in {1, i} to make it nonzero.
        const Scalar t = form(j, k).real_part().is_zero() ? Scalar::i() : Scalar(1);
        add_multiple(form, basis, k, j, t);
      }
    }
    const Scalar inv = form(k, k).inverse();
    for (size_t j = k + 1; j < n; ++j) {
      if (form(j, k).is_zero()) continue;
      add_multiple(form, basis, j, k, -(form(j, k) * inv));
    }
  }
  Congruence out;
  out.basis = std::move(basis);
  out.diagonal.resize(n);
  for (size_t k = 0; k < n; ++k) out.diagonal[k] = form(k, k);
  return out;
}

Signature hermitian_signature(const Matrix& g) {
  Signature s;
  for (const Scalar& d : congruence_diagonalize(g).diagonal) {
    const int sg = d.sign();
    (sg > 0 ? s.positive : sg < 0 ? s.negative : s.zero)++;
  }
  return s;
}

std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," + std::to_string(s.zero) + ")";
}

Vector SpanReducer::reduce(Vector v) const {
  if (v.size() != length_) throw std::invalid_argument("vector length mismatch");
  for (const auto& [p, row] : rows_) {
    if (v[p].is_zero()) continue;
    const Scalar f = v[p];
    for (size_t k = p; k < length_; ++k)
      if (!row[k].is_zero()) v[k] -= f * row[k];
  }
  return v;
}

bool SpanReducer::insert(const Vector& v) {
  Vector r = reduce(v);
  size_t p = 0;
  while (p < length_ && r[p].is_zero()) ++p;
  if (p == length_) return false;
  const Scalar inv = r[p].inverse();
  for (size_t k = p; k < length_; ++k)
    if (!r[k].is_zero()) r[k] = r[k] * inv;
  rows_.emplace_back(p, std::move(r));
  return true;
}

const char* to_string(Ground g) { return g == Ground::real ? "real" : "complex"; }

Vector coordinates(const Matrix& x, Ground ground) {
  Vector v;
  v.reserve(x.rows() * x.cols());
  for (size_t i = 0; i < x.rows(); ++i)
    for (size_t j = 0; j < x.cols(); ++j) v.push_back(x(i, j));
  return ground == Ground::real ? real_coords(v) : v;
}

LieAlgebraBasis solve_linear_constraints(size_t m, std::span<const LinearCondition> conditions,
                                         bool over_real_structure) {
  const Matrix zero(m, m);
  const size_t entries = m * m;
  const size_t unknowns = over_real_structure ? 2 * entries : entries;

  // One column of coefficients per unknown, rows are residual entries of all conditions.
  std::vector<Vector> columns(unknowns);
  for (size_t e = 0; e < entries; ++e) {
    const Matrix unit = Matrix::unit(m, m, e / m, e % m);
    if (!over_real_structure) {
      for (const auto& cond : conditions) {
        const Matrix r = cond.residual(unit, zero);
        for (size_t i = 0; i < r.rows(); ++i)
          for (size_t j = 0; j < r.cols(); ++j) columns[e].push_back(r(i, j));
      }
      continue;
    }
    // X = U + iV: the unit in U enters as (E, E), in V as (iE, -iE).
    const Matrix iunit = Scalar::i() * unit;
    for (const auto& cond : conditions) {
      const Matrix ru = cond.residual(unit, unit);
      const Matrix rv = cond.residual(iunit, -iunit);
      for (size_t i = 0; i < ru.rows(); ++i)
        for (size_t j = 0; j < ru.cols(); ++j) {
          columns[e].push_back(ru(i, j).real_part());
          columns[e].push_back(ru(i, j).imag_part());
          columns[entries + e].push_back(rv(i, j).real_part());
          columns[entries + e].push_back(rv(i, j).imag_part());
        }
    }
  }

  const size_t rows = columns.empty() ? 0 : columns.front().size();
  // Drop rows that vanish identically before elimination.
  std::vector<size_t> live;
  for (size_t r = 0; r < rows; ++r)
    for (const auto& c : columns)
      if (!c[r].is_zero()) {
        live.push_back(r);
        break;
      }
  Matrix system(live.size(), unknowns);
  for (size_t k = 0; k < live.size(); ++k)
    for (size_t u = 0; u < unknowns; ++u) system(k, u) = columns[u][live[k]];

  Matrix ker = kernel_basis(system);
  LieAlgebraBasis out;
  out.ambient_dim = m;
  out.ground = over_real_structure ? Ground::real : Ground::complex;
  for (size_t c = 0; c < ker.cols(); ++c) {
    Matrix x(m, m);
    for (size_t e = 0; e < entries; ++e) {
      Scalar v = ker(e, c);
      if (over_real_structure) v += Scalar::i() * ker(entries + e, c);
      x(e / m, e % m) = v;
    }
    out.elements.push_back(std::move(x));
  }
  return out;
}

}  // namespace flagcert
