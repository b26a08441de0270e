#include "flagcert/groups.hpp"

#include <stdexcept>

namespace flagcert {

Constraint Constraint::preserves(const FormSpec& f) {
  return {f.bilinear() ? Kind::preserves_bilinear : Kind::preserves_hermitian, f, {}};
}

const char* to_string(Constraint::Kind k) {
  switch (k) {
    case Constraint::Kind::preserves_bilinear: return "preserves_bilinear";
    case Constraint::Kind::preserves_hermitian: return "preserves_hermitian";
    case Constraint::Kind::det_equals_one: return "det_equals_one";
    case Constraint::Kind::fixes_vector: return "fixes_vector";
    case Constraint::Kind::real_entries: return "real_entries";
  }
  return "?";
}

std::vector<std::string> violated_constraints(const GroupSpec& group, const Matrix& g) {
  if (!g.square() || g.rows() != group.ambient_dim)
    throw std::invalid_argument("element dimension does not match group " + group.name);
  std::vector<std::string> bad;
  for (const auto& c : group.constraints) {
    bool ok = true;
    switch (c.kind) {
      case Constraint::Kind::preserves_bilinear:
        ok = g.transpose() * c.form->gram * g == c.form->gram;
        break;
      case Constraint::Kind::preserves_hermitian:
        ok = g.transpose() * c.form->gram * g.conj() == c.form->gram;
        break;
      case Constraint::Kind::det_equals_one:
        ok = determinant(g) == Scalar(1);
        break;
      case Constraint::Kind::fixes_vector:
        ok = g * c.vector == c.vector;
        break;
      case Constraint::Kind::real_entries:
        ok = g.is_real();
        break;
    }
    if (!ok) bad.emplace_back(to_string(c.kind));
  }
  return bad;
}

bool contains(const GroupSpec& group, const Matrix& g) { return violated_constraints(group, g).empty(); }

LieAlgebraBasis lie_algebra_of(const GroupSpec& group) {
  std::vector<LinearCondition> conds;
  bool real = false;
  for (const auto& c : group.constraints) {
    switch (c.kind) {
      case Constraint::Kind::preserves_bilinear: {
        const Matrix g = c.form->gram;
        conds.push_back({"bilinear", [g](const Matrix& x, const Matrix&) { return x.transpose() * g + g * x; }});
        break;
      }
      case Constraint::Kind::preserves_hermitian: {
        const Matrix g = c.form->gram;
        conds.push_back({"hermitian", [g](const Matrix& x, const Matrix& xc) { return x.transpose() * g + g * xc; }});
        real = true;
        break;
      }
      case Constraint::Kind::det_equals_one:
        conds.push_back({"trace", [](const Matrix& x, const Matrix&) { return Matrix::diagonal({x.trace()}); }});
        break;
      case Constraint::Kind::fixes_vector: {
        const Vector v = c.vector;
        conds.push_back({"fixed", [v](const Matrix& x, const Matrix&) {
                           const std::vector<Vector> col{x * v};
                           return Matrix::from_columns(col);
                         }});
        break;
      }
      case Constraint::Kind::real_entries:
        conds.push_back({"real", [](const Matrix& x, const Matrix& xc) { return x - xc; }});
        real = true;
        break;
    }
  }
  LieAlgebraBasis out = solve_linear_constraints(group.ambient_dim, conds, real);
  out.name = group.name;
  return out;
}

LieAlgebraBasis gl_algebra(size_t m) {
  LieAlgebraBasis out;
  out.name = "gl" + std::to_string(m);
  out.ambient_dim = m;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) out.elements.push_back(Matrix::unit(m, m, i, j));
  return out;
}

LieAlgebraBasis isotropy_subalgebra(const LieAlgebraBasis& algebra, const Subspace& point) {
  if (point.ambient_dim() != algebra.ambient_dim) throw std::invalid_argument("point dimension does not match algebra");
  const Matrix ann = point.annihilator();
  const bool real = algebra.ground == Ground::real;
  // Column k holds the entries of ann * X_k * S; a combination is in the isotropy iff they cancel.
  std::vector<Vector> columns;
  for (const auto& x : algebra.elements) {
    Vector c = coordinates(ann * x * point.basis(), Ground::complex);
    columns.push_back(real ? real_coords(c) : c);
  }
  const size_t rows = columns.empty() ? 0 : columns.front().size();
  Matrix system = columns.empty() ? Matrix(0, 0) : Matrix::from_columns(columns, rows);
  Matrix ker = kernel_basis(system);

  LieAlgebraBasis out;
  out.name = "iso(" + algebra.name + ")";
  out.ambient_dim = algebra.ambient_dim;
  out.ground = algebra.ground;
  for (size_t c = 0; c < ker.cols(); ++c) {
    Matrix x(algebra.ambient_dim, algebra.ambient_dim);
    for (size_t k = 0; k < algebra.dim(); ++k)
      if (!ker(k, c).is_zero()) x = x + ker(k, c) * algebra.elements[k];
    out.elements.push_back(std::move(x));
  }
  return out;
}

namespace {

SpanReducer reducer_of(const LieAlgebraBasis& a) {
  SpanReducer red(coordinates(Matrix(a.ambient_dim, a.ambient_dim), a.ground).size());
  for (const auto& x : a.elements) red.insert(coordinates(x, a.ground));
  return red;
}

}  // namespace

bool in_span(const LieAlgebraBasis& algebra, const Matrix& x) {
  return reducer_of(algebra).contains(coordinates(x, algebra.ground));
}

bool is_bracket_closed(const LieAlgebraBasis& algebra) {
  const SpanReducer red = reducer_of(algebra);
  for (size_t i = 0; i < algebra.dim(); ++i)
    for (size_t j = i + 1; j < algebra.dim(); ++j)
      if (!red.contains(coordinates(bracket(algebra.elements[i], algebra.elements[j]), algebra.ground)))
        return false;
  return true;
}

LieAlgebraBasis complexify(const LieAlgebraBasis& algebra) {
  LieAlgebraBasis out;
  out.name = algebra.name;
  out.ambient_dim = algebra.ambient_dim;
  out.ground = Ground::complex;
  SpanReducer red(algebra.ambient_dim * algebra.ambient_dim);
  for (const auto& x : algebra.elements)
    if (red.insert(coordinates(x, Ground::complex))) out.elements.push_back(x);
  return out;
}

OnishchikReport check_onishchik_triple(const LieAlgebraBasis& small, const LieAlgebraBasis& big,
                                       const Subspace& point) {
  if (small.ground != big.ground || small.ambient_dim != big.ambient_dim)
    throw std::invalid_argument("algebras must share ground field and ambient dimension");
  const SpanReducer big_span = reducer_of(big);
  for (const auto& x : small.elements)
    if (!big_span.contains(coordinates(x, big.ground)))
      throw std::invalid_argument(small.name + " is not contained in " + big.name);

  OnishchikReport r;
  r.small_name = small.name;
  r.big_name = big.name;
  r.dim_small = small.dim();
  r.dim_big = big.dim();
  const LieAlgebraBasis q = isotropy_subalgebra(small, point);
  const LieAlgebraBasis qhat = isotropy_subalgebra(big, point);
  r.isotropy_small = q.dim();
  r.isotropy_big = qhat.dim();
  r.quotient_small = r.dim_small - r.isotropy_small;
  r.quotient_big = r.dim_big - r.isotropy_big;
  r.quotients_equal = r.quotient_small == r.quotient_big;

  SpanReducer sum = reducer_of(qhat);
  for (const auto& x : small.elements) sum.insert(coordinates(x, big.ground));
  r.intersection = qhat.dim() + small.dim() - sum.rank();
  const SpanReducer qhat_span = reducer_of(qhat);
  bool q_inside = true;
  for (const auto& x : q.elements) q_inside = q_inside && qhat_span.contains(coordinates(x, big.ground));
  r.isotropy_is_intersection = q_inside && r.intersection == q.dim();
  return r;
}

bool is_nilpotent(const Matrix& x) {
  Matrix p = x;
  for (size_t k = 1; k < x.rows(); ++k) p = p * x;
  return p.is_zero();
}

Matrix exp_nilpotent(const Matrix& x, const Scalar& t) {
  if (!x.square()) throw std::invalid_argument("exp of a non-square matrix");
  Matrix sum = Matrix::identity(x.rows());
  Matrix term = Matrix::identity(x.rows());
  for (size_t k = 1; k <= x.rows(); ++k) {
    term = (t / Scalar(static_cast<long>(k))) * (term * x);
    if (term.is_zero()) return sum;
    sum = sum + term;
  }
  throw std::domain_error("matrix is not nilpotent");
}

namespace {

void require(const StandardModel& m, std::initializer_list<ModelCase> kinds) {
  for (ModelCase k : kinds)
    if (m.kind == k) return;
  throw std::invalid_argument("group is not defined on model " + m.name());
}

}  // namespace

GroupSpec sp2n_c(const StandardModel& m) {
  require(m, {ModelCase::projective_split, ModelCase::projective_pq});
  return {"Sp2nC", m.dim, {Constraint::preserves(*m.omega)}};
}

GroupSpec sl_c(size_t m, const std::string& name) { return {name, m, {Constraint::det_one()}}; }

GroupSpec su_h(const StandardModel& m) {
  require(m, {ModelCase::projective_split, ModelCase::projective_pq});
  return {m.kind == ModelCase::projective_split ? "SU(n,n)" : "SU(2p,2q)", m.dim,
          {Constraint::preserves(m.h), Constraint::det_one()}};
}

GroupSpec sp_real_form(const StandardModel& m) {
  require(m, {ModelCase::projective_split, ModelCase::projective_pq});
  return {m.kind == ModelCase::projective_split ? "Sp2nR" : "Sp(2p,2q)", m.dim,
          {Constraint::preserves(*m.omega), Constraint::preserves(m.h), Constraint::det_one()}};
}

GroupSpec so7_c(const StandardModel& m) {
  require(m, {ModelCase::quadric7});
  return {"SO7C", 7, {Constraint::preserves(m.b), Constraint::det_one()}};
}

GroupSpec so34(const StandardModel& m) {
  require(m, {ModelCase::quadric7});
  return {"SO(3,4)", 7, {Constraint::preserves(m.b), Constraint::preserves(m.h), Constraint::det_one()}};
}

GroupSpec so2n_c(const StandardModel& m) {
  require(m, {ModelCase::isotropic});
  return {"SO2nC", m.dim, {Constraint::preserves(m.b), Constraint::det_one()}};
}

GroupSpec so2n1_c(const StandardModel& m) {
  require(m, {ModelCase::isotropic});
  return {"SO2n-1C", m.dim, {Constraint::preserves(m.b), Constraint::det_one(), Constraint::fixes(m.fixed)}};
}

GroupSpec so_pq(const StandardModel& m) {
  require(m, {ModelCase::isotropic});
  return {"SO(p,q)", m.dim,
          {Constraint::preserves(m.b), Constraint::preserves(m.h), Constraint::det_one(), Constraint::fixes(m.fixed)}};
}

GroupSpec so_pq_hat(const StandardModel& m) {
  require(m, {ModelCase::isotropic});
  const bool even = m.p % 2 == 0;
  const std::string name = "SO(" + std::to_string(even ? m.p : m.p + 1) + "," + std::to_string(even ? m.q + 1 : m.q) + ")";
  return {name, m.dim, {Constraint::preserves(m.b), Constraint::preserves(m.h), Constraint::det_one()}};
}

}  // namespace flagcert
