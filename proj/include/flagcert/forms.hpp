#pragma once

// Forms given by Gram matrices, and the standard models of the exceptional flag manifolds.

#include <optional>
#include <string>

#include "flagcert/linalg.hpp"

namespace flagcert {

enum class FormKind { symmetric, antisymmetric, hermitian };
const char* to_string(FormKind k);
FormKind form_kind_from_string(const std::string& s);

/// value(z, w) = z^t G w for the bilinear kinds and z^t G conj(w) for the Hermitian kind.
struct FormSpec {
  FormKind kind = FormKind::symmetric;
  Matrix gram;

  /// Validates the symmetry type of the Gram matrix and its invertibility.
  static FormSpec make(FormKind kind, Matrix gram);
  size_t dim() const { return gram.rows(); }
  bool bilinear() const { return kind != FormKind::hermitian; }
};

Scalar evaluate(const FormSpec& f, const Vector& z, const Vector& w);
/// {v : f(s, v) = 0 for all s in S}, the perp in the second slot.
Subspace perp(const FormSpec& f, const Subspace& s);
/// Gram matrix of f on the basis of S.
Matrix restrict_gram(const FormSpec& f, const Subspace& s);
bool is_isotropic(const FormSpec& f, const Subspace& s);

/// diag(+1 x p, -1 x q).
Matrix e_pq(size_t p, size_t q);

enum class ModelCase { projective_split, projective_pq, quadric7, isotropic };
const char* to_string(ModelCase c);

struct StandardModel {
  ModelCase kind = ModelCase::projective_split;
  size_t n = 0;
  size_t p = 0;
  size_t q = 0;
  size_t dim = 0;  // dimension of the ambient vector space

  Matrix J;  // projective cases: J e_i = e_{n+i}, J e_{n+i} = -e_i
  Matrix E;  // Gram of h (of the extended form on C^{2n} in the isotropic case)

  FormSpec b;                    // complex symmetric form
  std::optional<FormSpec> omega; // projective cases
  FormSpec h;                    // Hermitian form (the extension to C^{2n} in the isotropic case)

  // Isotropic case only.
  std::optional<FormSpec> h_on_v;   // Hermitian form on V = span{e_1..e_{2n-1}}
  std::optional<FormSpec> b_signature;  // diag(E_{p,q}, eps): the same b in signature coordinates
  Matrix to_standard;               // D with z = D z' from signature to standard coordinates
  Scalar eps;                       // h(e_{2n}, e_{2n})

  // Distinguished vectors.
  Vector fixed;    // e_{2n} in the isotropic case
  Vector z_plus;   // quadric: e_1 + i e_2
  Vector z_minus;  // quadric: e_4 + i e_5

  std::string name() const;
};

StandardModel projective_split_model(size_t n);
/// Signature variant with E = E_{p,q} + E_{p,q} on C^{2(p+q)}.
StandardModel projective_pq_model(size_t p, size_t q);
StandardModel quadric7_model();
/// Requires p + q = 2n - 1. The Hermitian form extends with h(e_{2n}) = -1 for even p and +1 for odd p.
StandardModel isotropic_model(size_t n, size_t p, size_t q);

/// phi(z) = -J E conj(z) on a projective model. Antilinear; phi^2 = +Id in the split model, -Id in the pq model.
Vector phi(const StandardModel& m, const Vector& z);

}  // namespace flagcert
