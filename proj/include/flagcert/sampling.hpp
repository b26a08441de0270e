#pragma once

// Seeded random inputs for verification campaigns. Entries are Gaussian integers
// with coordinates in [-bound, bound]; rejection loops give up after a fixed budget.

#include "flagcert/forms.hpp"
#include "flagcert/rng.hpp"

namespace flagcert {

/// Rejection budget for every sampler below; exceeding it throws std::runtime_error.
inline constexpr int kSampleAttempts = 10000;

Vector random_vector(Rng& rng, size_t n, long bound, bool real = false);
/// Vector z with sign h(z, z) = sign on a projective model.
Vector random_line_with_sign(Rng& rng, const StandardModel& m, int sign, long bound);
/// Product of `reflections` reflections (an even count gives determinant one) in random
/// f-anisotropic vectors supported on the first k coordinates.
Matrix random_rotation(Rng& rng, const FormSpec& f, size_t k, bool real, int reflections, long bound);
/// Image of the complex normal form under a random element of SO2n-1C.
Subspace scramble_complex(Rng& rng, const StandardModel& isotropic, long bound);
/// Image of the real normal form under a random element of SO(p,q).
Subspace scramble_real(Rng& rng, const StandardModel& isotropic, long bound);

/// A b-isotropic n-plane with a nonzero h-null part, outside every open orbit: real null
/// vectors e_a + e_c pairing opposite signs of diag(E_pq, eps), the rest e_a + i e_c.
/// `flip` negates the last coordinate of the last vector, which switches the family.
/// Throws std::invalid_argument when the signature is definite.
Subspace boundary_plane(const StandardModel& isotropic, bool flip);

}  // namespace flagcert
