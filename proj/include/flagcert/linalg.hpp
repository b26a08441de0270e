#pragma once

// Dense exact linear algebra over the scalar tower.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "flagcert/scalar.hpp"

namespace flagcert {

using Vector = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(size_t n);
  static Matrix diagonal(const Vector& d);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows);
  static Matrix from_columns(std::span<const Vector> columns, size_t rows);
  static Matrix from_columns(std::span<const Vector> columns);
  /// Elementary matrix with a single 1 at (r, c).
  static Matrix unit(size_t rows, size_t cols, size_t r, size_t c);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  Vector col(size_t c) const;
  Vector row(size_t r) const;
  void set_col(size_t c, const Vector& v);
  std::vector<Vector> columns() const;

  Matrix transpose() const;
  Matrix conj() const;
  /// Conjugate transpose.
  Matrix adjoint() const { return conj().transpose(); }
  bool is_zero() const;
  bool is_real() const;
  Scalar trace() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// Vector helpers.
Vector unit_vector(size_t n, size_t k);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
Vector conj(const Vector& v);
bool is_zero(const Vector& v);
/// Interleaving-free real coordinates: (Re v_1, ..., Re v_n, Im v_1, ..., Im v_n).
Vector real_coords(const Vector& v);
/// Commutator XY - YX.
Matrix bracket(const Matrix& x, const Matrix& y);

/// Reduced row echelon form; pivots[k] is the pivot column of row k.
struct Echelon {
  Matrix reduced;
  std::vector<size_t> pivots;
};
Echelon row_reduce(Matrix m);

size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
/// Throws std::domain_error on singular input.
Matrix inverse(const Matrix& m);
/// Columns form a basis of the right null space, in free-variable order.
Matrix kernel_basis(const Matrix& m);

/// A subspace of an ambient coordinate space, with its canonical reduced column echelon basis.
class Subspace {
 public:
  /// Span of the columns of `generators` (dependent columns are dropped).
  static Subspace span(const Matrix& generators);
  static Subspace span(std::span<const Vector> generators, size_t ambient_dim);
  static Subspace zero(size_t ambient_dim);
  static Subspace whole(size_t ambient_dim);

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.cols(); }
  /// Independent columns of the original generators, in their original order.
  const Matrix& basis() const { return basis_; }
  const Matrix& canonical() const { return canonical_; }
  bool contains(const Vector& v) const;
  /// Rows spanning the annihilator: a vector lies in the subspace iff annihilator * v = 0.
  Matrix annihilator() const;

 private:
  size_t ambient_ = 0;
  Matrix basis_;
  Matrix canonical_;
};

Subspace kernel(const Matrix& m);
/// Reduced column echelon form of the column span: leading entries 1, topmost pivot first.
Matrix column_echelon(const Matrix& generators);
/// Throws std::invalid_argument on ambient dimension mismatch.
bool column_space_equal(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace apply(const Matrix& g, const Subspace& s);

/// Sesquilinear congruence diagonalization: basis^t * gram * conj(basis) is diagonal.
struct Congruence {
  Matrix basis;
  Vector diagonal;
};
Congruence congruence_diagonalize(const Matrix& hermitian_gram);

struct Signature {
  size_t positive = 0;
  size_t negative = 0;
  size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};
/// Throws std::invalid_argument when the input is not Hermitian.
Signature hermitian_signature(const Matrix& g);
std::string to_string(const Signature& s);

/// Incremental echelon basis for rank and membership tests on long vectors.
class SpanReducer {
 public:
  explicit SpanReducer(size_t length) : length_(length) {}
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return is_zero(reduce(v)); }
  /// Returns true when `v` was independent of the stored span.
  bool insert(const Vector& v);
  size_t rank() const { return rows_.size(); }
  size_t length() const { return length_; }

 private:
  size_t length_;
  std::vector<std::pair<size_t, Vector>> rows_;
};

enum class Ground { complex, real };
const char* to_string(Ground g);

/// Basis of a matrix Lie algebra. With Ground::real the span is taken over the reals
/// (elements may still be complex matrices).
struct LieAlgebraBasis {
  std::string name;
  size_t ambient_dim = 0;
  std::vector<Matrix> elements;
  Ground ground = Ground::complex;

  size_t dim() const { return elements.size(); }
};

/// Coordinates of a matrix in the ground field: entries, or their real and imaginary parts.
Vector coordinates(const Matrix& x, Ground ground);

/// A homogeneous condition residual(X, conj(X)) = 0, linear in X and conj(X) separately.
struct LinearCondition {
  std::string label;
  std::function<Matrix(const Matrix& x, const Matrix& x_conj)> residual;
};

/// Solution space of the conditions for an m x m unknown. Without the real structure the
/// conditions may not involve conj(X); with it every entry is split into two real unknowns.
LieAlgebraBasis solve_linear_constraints(size_t m, std::span<const LinearCondition> conditions,
                                         bool over_real_structure);

}  // namespace flagcert
