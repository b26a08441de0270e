#pragma once

// Explicit group elements certifying that two configurations lie in one orbit.

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagcert/forms.hpp"
#include "flagcert/groups.hpp"

namespace flagcert {

struct Claim {
  enum class Kind { maps_line, maps_subspace, maps_vector };
  Kind kind = Kind::maps_subspace;
  Matrix source;  // columns span the source (a single column for lines and vectors)
  Matrix target;
};
const char* to_string(Claim::Kind k);
Claim::Kind claim_kind_from_string(const std::string& s);

struct Witness {
  GroupSpec group;
  Matrix element;
  Claim claim;
  bool verified = false;
};

/// Membership and claim rechecked from the stored data only.
bool verify_witness(const Witness& w);
/// Reasons a witness fails; empty when it verifies.
std::vector<std::string> witness_failures(const Witness& w);
/// Radicands of the tower holding the element's entries, outermost last.
std::vector<Scalar> witness_radicands(const Witness& w);

/// second after first; requires the same group and first's target equal to second's source.
Witness compose(const Witness& second, const Witness& first);

/// Input on the manifold but outside the open orbit being normalized.
class NotInOpenOrbit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// sigma_u(x) = x - 2 f(x,u)/f(u,u) u. Throws std::invalid_argument for isotropic u.
Matrix reflection(const FormSpec& f, const Vector& u);

/// g with g a_k = b_k preserving the symmetric form f, as a product of reflections.
/// Throws std::invalid_argument when the frames are not isometric or independent, or when
/// no admissible reflection sequence exists.
Matrix witt_transport(const FormSpec& f, std::span<const Vector> frame_a, std::span<const Vector> frame_b,
                      bool require_special, bool extra_real);

/// Element of Sp2nR or Sp(2p,2q) mapping span{z} to span{z_target}; both lines must have
/// h-norms of the same nonzero sign. Square roots are adjoined to `tower` as needed.
Witness transport_positive_line_sp(const StandardModel& m, const Vector& z, const Vector& z_target,
                                   TowerPtr& tower);
Witness transport_positive_line_sp(const StandardModel& m, const Vector& z, const Vector& z_target);

/// span{e_k + i e_{n+k} : k = 1..n}.
Subspace complex_normal_form(size_t n);
/// Pairs (a_k, c_k) of 0-based indices with the real normal form spanned by e_{a_k} + i e_{c_k};
/// positive pairs first, the pair containing e_{2n} last.
std::vector<std::pair<size_t, size_t>> real_normal_pairs(const StandardModel& m);
Subspace real_normal_form(const StandardModel& m);
/// Permutation P with P(real normal form) = complex normal form.
Matrix normal_form_change_of_basis(const StandardModel& m);

/// Element of SO2n-1C (fixing e_{2n}) mapping the isotropic n-plane to the complex normal form.
Witness isotropic_normal_form_complex(const StandardModel& m, const Subspace& w_hat);
/// Element of SO(p,q) mapping the isotropic n-plane to the real normal form.
/// Throws NotInOpenOrbit when the plane meets V in a degenerate or wrongly signed subspace.
Witness isotropic_normal_form_real(const StandardModel& m, const Subspace& w_hat, TowerPtr& tower);
Witness isotropic_normal_form_real(const StandardModel& m, const Subspace& w_hat);

/// For maximal isotropic subspaces of C^{2n}: dim(A cap B) = n mod 2, i.e. one connected component.
bool same_family(const Subspace& a, const Subspace& b);

}  // namespace flagcert
