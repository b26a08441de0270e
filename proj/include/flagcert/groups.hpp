#pragma once

// Constraint-defined matrix groups and their Lie algebras.

#include <optional>
#include <string>
#include <vector>

#include "flagcert/forms.hpp"
#include "flagcert/linalg.hpp"

namespace flagcert {

struct Constraint {
  enum class Kind { preserves_bilinear, preserves_hermitian, det_equals_one, fixes_vector, real_entries };
  Kind kind;
  std::optional<FormSpec> form;  // preserves_*
  Vector vector;                 // fixes_vector

  static Constraint preserves(const FormSpec& f);
  static Constraint det_one() { return {Kind::det_equals_one, std::nullopt, {}}; }
  static Constraint fixes(Vector v) { return {Kind::fixes_vector, std::nullopt, std::move(v)}; }
  static Constraint real() { return {Kind::real_entries, std::nullopt, {}}; }
};
const char* to_string(Constraint::Kind k);

struct GroupSpec {
  std::string name;
  size_t ambient_dim = 0;
  std::vector<Constraint> constraints;
};

/// Names of the constraints that `g` violates; empty when g is a member.
std::vector<std::string> violated_constraints(const GroupSpec& group, const Matrix& g);
bool contains(const GroupSpec& group, const Matrix& g);

/// Linearized constraints; the result has real ground iff a Hermitian or reality constraint is present.
LieAlgebraBasis lie_algebra_of(const GroupSpec& group);
/// Full matrix algebra gl_m.
LieAlgebraBasis gl_algebra(size_t m);

/// Elements X of the algebra with X S contained in S (a line is a 1-dimensional S).
LieAlgebraBasis isotropy_subalgebra(const LieAlgebraBasis& algebra, const Subspace& point);

bool in_span(const LieAlgebraBasis& algebra, const Matrix& x);
/// Every commutator of basis elements lies in the span.
bool is_bracket_closed(const LieAlgebraBasis& algebra);
/// Real span as a complex-ground basis (the complexification inside gl).
LieAlgebraBasis complexify(const LieAlgebraBasis& algebra);

struct OnishchikReport {
  std::string small_name;
  std::string big_name;
  size_t dim_small = 0;
  size_t dim_big = 0;
  size_t isotropy_small = 0;
  size_t isotropy_big = 0;
  size_t quotient_small = 0;   // dim g/q
  size_t quotient_big = 0;     // dim g^/q^
  size_t intersection = 0;     // dim (q^ cap g)
  bool quotients_equal = false;
  bool isotropy_is_intersection = false;  // q = q^ cap g
  bool ok() const { return quotients_equal && isotropy_is_intersection; }
};

/// Compares g/q with g^/q^ at a point; throws std::invalid_argument unless small is inside big.
OnishchikReport check_onishchik_triple(const LieAlgebraBasis& small, const LieAlgebraBasis& big,
                                       const Subspace& point);

/// exp(tX) as a finite sum; throws std::domain_error when X is not nilpotent.
Matrix exp_nilpotent(const Matrix& x, const Scalar& t);
bool is_nilpotent(const Matrix& x);

// Named groups of the standard models. Names follow the report vocabulary.
GroupSpec sp2n_c(const StandardModel& projective);
GroupSpec sl_c(size_t m, const std::string& name);
/// SU(n,n) or SU(2p,2q): isometries of h with determinant one.
GroupSpec su_h(const StandardModel& projective);
/// Sp2nR or Sp(2p,2q): Sp2nC intersected with the Hermitian isometries.
GroupSpec sp_real_form(const StandardModel& projective);
GroupSpec so7_c(const StandardModel& quadric);
GroupSpec so34(const StandardModel& quadric);
GroupSpec so2n_c(const StandardModel& isotropic);
/// Fix(e_{2n}) inside SO_{2n}(C).
GroupSpec so2n1_c(const StandardModel& isotropic);
/// The real form SO(p,q) of Fix(e_{2n}), as isometries of b and of the extended h.
GroupSpec so_pq(const StandardModel& isotropic);
/// SO(p,q+1) or SO(p+1,q): isometries of b and the extended h on all of C^{2n}.
GroupSpec so_pq_hat(const StandardModel& isotropic);

}  // namespace flagcert
