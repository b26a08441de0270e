#include "flagcert/forms.hpp"

#include <stdexcept>

namespace flagcert {

const char* to_string(FormKind k) {
  switch (k) {
    case FormKind::symmetric: return "symmetric";
    case FormKind::antisymmetric: return "antisymmetric";
    case FormKind::hermitian: return "hermitian";
  }
  return "?";
}

FormKind form_kind_from_string(const std::string& s) {
  if (s == "symmetric") return FormKind::symmetric;
  if (s == "antisymmetric") return FormKind::antisymmetric;
  if (s == "hermitian") return FormKind::hermitian;
  throw std::invalid_argument("unknown form kind: " + s);
}

FormSpec FormSpec::make(FormKind kind, Matrix gram) {
  if (!gram.square() || gram.rows() == 0) throw std::invalid_argument("Gram matrix must be square and nonempty");
  const Matrix t = gram.transpose();
  const bool ok = kind == FormKind::symmetric     ? t == gram
                  : kind == FormKind::antisymmetric ? t == -gram
                                                    : t == gram.conj();
  if (!ok) throw std::invalid_argument(std::string("Gram matrix is not ") + to_string(kind));
  if (determinant(gram).is_zero()) throw std::invalid_argument("degenerate form");
  return FormSpec{kind, std::move(gram)};
}

Scalar evaluate(const FormSpec& f, const Vector& z, const Vector& w) {
  if (z.size() != f.dim() || w.size() != f.dim()) throw std::invalid_argument("vector dimension does not match form");
  const Vector gw = f.gram * (f.bilinear() ? w : conj(w));
  Scalar s;
  for (size_t k = 0; k < z.size(); ++k)
    if (!z[k].is_zero()) s += z[k] * gw[k];
  return s;
}

Subspace perp(const FormSpec& f, const Subspace& s) {
  if (s.ambient_dim() != f.dim()) throw std::invalid_argument("subspace dimension does not match form");
  // Rows s^t G; for the Hermitian kind the unknown enters conjugated, so solve the conjugate system.
  Matrix rows = s.basis().transpose() * f.gram;
  if (!f.bilinear()) rows = rows.conj();
  if (rows.rows() == 0) return Subspace::whole(f.dim());
  return kernel(rows);
}

Matrix restrict_gram(const FormSpec& f, const Subspace& s) {
  if (s.ambient_dim() != f.dim()) throw std::invalid_argument("subspace dimension does not match form");
  const Matrix& b = s.basis();
  return b.transpose() * f.gram * (f.bilinear() ? b : b.conj());
}

bool is_isotropic(const FormSpec& f, const Subspace& s) { return restrict_gram(f, s).is_zero(); }

Matrix e_pq(size_t p, size_t q) {
  Vector d(p + q, Scalar(1));
  for (size_t k = p; k < p + q; ++k) d[k] = -1;
  return Matrix::diagonal(d);
}

const char* to_string(ModelCase c) {
  switch (c) {
    case ModelCase::projective_split: return "projective-split";
    case ModelCase::projective_pq: return "projective-pq";
    case ModelCase::quadric7: return "quadric7";
    case ModelCase::isotropic: return "isotropic";
  }
  return "?";
}

std::string StandardModel::name() const {
  switch (kind) {
    case ModelCase::projective_split: return "projective-split(n=" + std::to_string(n) + ")";
    case ModelCase::projective_pq:
      return "projective-pq(p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")";
    case ModelCase::quadric7: return "quadric7";
    case ModelCase::isotropic:
      return "isotropic(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")";
  }
  return "?";
}

namespace {

Matrix standard_j(size_t n) {
  Matrix j(2 * n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    j(n + i, i) = 1;   // J e_i = e_{n+i}
    j(i, n + i) = -1;  // J e_{n+i} = -e_i
  }
  return j;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

StandardModel projective_model(ModelCase kind, size_t n, Matrix e) {
  StandardModel m;
  m.kind = kind;
  m.n = n;
  m.dim = 2 * n;
  m.J = standard_j(n);
  m.E = std::move(e);
  m.b = FormSpec::make(FormKind::symmetric, Matrix::identity(2 * n));
  m.omega = FormSpec::make(FormKind::antisymmetric, m.J);
  m.h = FormSpec::make(FormKind::hermitian, m.E);
  return m;
}

}  // namespace

StandardModel projective_split_model(size_t n) {
  if (n < 1) throw std::invalid_argument("projective model needs n >= 1");
  StandardModel m = projective_model(ModelCase::projective_split, n, e_pq(n, n));
  m.p = n;
  m.q = n;
  return m;
}

StandardModel projective_pq_model(size_t p, size_t q) {
  if (p + q < 1) throw std::invalid_argument("projective-pq model needs p + q >= 1");
  StandardModel m = projective_model(ModelCase::projective_pq, p + q, block_diag(e_pq(p, q), e_pq(p, q)));
  m.p = p;
  m.q = q;
  return m;
}

StandardModel quadric7_model() {
  StandardModel m;
  m.kind = ModelCase::quadric7;
  m.dim = 7;
  m.p = 3;
  m.q = 4;
  m.E = e_pq(3, 4);
  m.b = FormSpec::make(FormKind::symmetric, m.E);
  m.h = FormSpec::make(FormKind::hermitian, m.E);
  m.z_plus = unit_vector(7, 0) + Scalar::i() * unit_vector(7, 1);
  m.z_minus = unit_vector(7, 3) + Scalar::i() * unit_vector(7, 4);
  return m;
}

StandardModel isotropic_model(size_t n, size_t p, size_t q) {
  if (n < 1) throw std::invalid_argument("isotropic model needs n >= 1");
  if (p + q != 2 * n - 1) throw std::invalid_argument("isotropic model needs p + q = 2n - 1");
  StandardModel m;
  m.kind = ModelCase::isotropic;
  m.n = n;
  m.p = p;
  m.q = q;
  m.dim = 2 * n;
  m.eps = p % 2 == 0 ? Scalar(-1) : Scalar(1);
  m.E = block_diag(e_pq(p, q), Matrix::diagonal({m.eps}));
  m.b = FormSpec::make(FormKind::symmetric, Matrix::identity(2 * n));
  m.h = FormSpec::make(FormKind::hermitian, m.E);
  m.h_on_v = FormSpec::make(FormKind::hermitian, e_pq(p, q));
  m.b_signature = FormSpec::make(FormKind::symmetric, m.E);
  Vector d(2 * n, Scalar(1));
  for (size_t k = p; k < p + q; ++k) d[k] = Scalar::i();
  if (m.eps == Scalar(-1)) d[2 * n - 1] = Scalar::i();
  m.to_standard = Matrix::diagonal(d);
  m.fixed = unit_vector(2 * n, 2 * n - 1);
  return m;
}

Vector phi(const StandardModel& m, const Vector& z) {
  if (m.kind != ModelCase::projective_split && m.kind != ModelCase::projective_pq)
    throw std::invalid_argument("phi is defined on the projective models only");
  if (z.size() != m.dim) throw std::invalid_argument("vector dimension does not match model");
  return Scalar(-1) * (m.J * (m.E * conj(z)));
}

}  // namespace flagcert
