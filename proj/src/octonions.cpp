#include "flagcert/octonions.hpp"

#include <stdexcept>

#include "flagcert/forms.hpp"

namespace flagcert {

namespace {

struct Zorn {
  int a = 0, b = 0;
  std::array<int, 3> v{}, w{};
};

int dot(const std::array<int, 3>& x, const std::array<int, 3>& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

std::array<int, 3> cross(const std::array<int, 3>& x, const std::array<int, 3>& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

Zorn mul(const Zorn& x, const Zorn& y) {
  Zorn r;
  r.a = x.a * y.a + dot(x.v, y.w);
  r.b = x.b * y.b + dot(x.w, y.v);
  const auto vw = cross(x.w, y.w);
  const auto vv = cross(x.v, y.v);
  for (int k = 0; k < 3; ++k) {
    r.v[k] = x.a * y.v[k] + y.b * x.v[k] - vw[k];
    r.w[k] = y.a * x.w[k] + x.b * y.w[k] + vv[k];
  }
  return r;
}

// Coordinates: a = c0 + c1, b = c0.
Zorn basis_element(size_t i) {
  Zorn z;
  if (i == 0) z.a = z.b = 1;
  else if (i == 1) z.a = 1;
  else if (i < 5) z.v[i - 2] = 1;
  else z.w[i - 5] = 1;
  return z;
}

std::array<int, 8> coords(const Zorn& z) {
  return {z.b, z.a - z.b, z.v[0], z.v[1], z.v[2], z.w[0], z.w[1], z.w[2]};
}

}  // namespace

Vector OctonionAlgebra::multiply(const Vector& x, const Vector& y) const {
  if (x.size() != dim || y.size() != dim) throw std::invalid_argument("octonion vectors have 8 coordinates");
  Vector r(dim);
  for (size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (size_t k = 0; k < dim; ++k)
        if (table[i][j][k] != 0) r[k] += Scalar(table[i][j][k]) * xy;
    }
  }
  return r;
}

Scalar OctonionAlgebra::norm(const Vector& x) const {
  const Vector g = norm_gram * x;
  Scalar s;
  for (size_t k = 0; k < dim; ++k) s += x[k] * g[k];
  return s;
}

Matrix OctonionAlgebra::quadric_basis() const {
  // Positive: v_k - w_k. Negative: e0 - 2 e1 (a = -1, b = 1), then v_k + w_k.
  std::vector<Vector> cols;
  for (size_t k = 0; k < 3; ++k) cols.push_back(unit_vector(8, 2 + k) - unit_vector(8, 5 + k));
  cols.push_back(unit_vector(8, 0) - Scalar(2) * unit_vector(8, 1));
  for (size_t k = 0; k < 3; ++k) cols.push_back(unit_vector(8, 2 + k) + unit_vector(8, 5 + k));
  return Matrix::from_columns(cols);
}

OctonionAlgebra split_octonions() {
  OctonionAlgebra o;
  for (size_t i = 0; i < 8; ++i)
    for (size_t j = 0; j < 8; ++j) o.table[i][j] = coords(mul(basis_element(i), basis_element(j)));
  // N = ab - v.w = c0^2 + c0 c1 - sum v_k w_k.
  Matrix g(8, 8);
  g(0, 0) = 1;
  g(0, 1) = g(1, 0) = Scalar::rational(1, 2);
  for (size_t k = 0; k < 3; ++k) g(2 + k, 5 + k) = g(5 + k, 2 + k) = Scalar::rational(-1, 2);
  o.norm_gram = g;
  return o;
}

DerivationBasis derivations(const OctonionAlgebra& a) {
  std::vector<Vector> basis;
  for (size_t i = 0; i < 8; ++i) basis.push_back(unit_vector(8, i));
  std::vector<std::vector<Vector>> products(8);
  for (size_t i = 0; i < 8; ++i)
    for (size_t j = 0; j < 8; ++j) products[i].push_back(a.multiply(basis[i], basis[j]));

  // Column 8i+j of the residual is D(e_i e_j) - D(e_i) e_j - e_i D(e_j).
  const LinearCondition leibniz{"leibniz", [&](const Matrix& x, const Matrix&) {
                                  std::vector<Vector> cols;
                                  const std::vector<Vector> dx = x.columns();
                                  for (size_t i = 0; i < 8; ++i)
                                    for (size_t j = 0; j < 8; ++j)
                                      cols.push_back(x * products[i][j] - a.multiply(dx[i], basis[j]) -
                                                     a.multiply(basis[i], dx[j]));
                                  return Matrix::from_columns(cols, 8);
                                }};
  DerivationBasis out;
  out.algebra = solve_linear_constraints(8, std::span(&leibniz, 1), false);
  out.algebra.name = "der(O)";
  out.algebra.ground = Ground::real;  // rational structure constants: the solved basis is rational
  if (out.algebra.dim() != 14)
    throw std::logic_error("derivation algebra has dimension " + std::to_string(out.algebra.dim()) + ", expected 14");

  const Matrix p = a.quadric_basis();
  const Matrix pt = p.transpose();
  if (pt * a.norm_gram * p != e_pq(3, 4)) throw std::logic_error("imaginary norm is not diag(1,1,1,-1,-1,-1,-1)");
  const Matrix left = inverse(pt * p) * pt;
  for (const auto& d : out.algebra.elements) {
    if (!d.is_real()) throw std::logic_error("derivation basis is not rational");
    const Matrix dp = d * p;
    const Matrix x = left * dp;
    if (p * x != dp) throw std::logic_error("derivation does not preserve the imaginary part");
    out.restricted.push_back(x);
  }
  return out;
}

LieAlgebraBasis imaginary_embedding(const DerivationBasis& d) {
  LieAlgebraBasis out;
  out.name = "G2split";
  out.ambient_dim = 7;
  out.ground = Ground::real;
  out.elements = d.restricted;
  return out;
}

}  // namespace flagcert
