#pragma once

// Tangent-space dimensions of orbits at projective and Grassmannian points, and
// stratum classification on the standard models.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagcert/forms.hpp"
#include "flagcert/linalg.hpp"

namespace flagcert {

/// dim span{X z} modulo C z (complex ground) or modulo span_R{z, iz} (real ground, real dimension).
size_t tangent_dim_projective(const LieAlgebraBasis& algebra, const Vector& z);

/// Dimension of the image of X -> (s -> X s mod S). With a constraint, S must be isotropic for it.
size_t tangent_dim_grassmann(const LieAlgebraBasis& algebra, const Subspace& s,
                             const std::optional<FormSpec>& ambient_constraint = std::nullopt);

/// Complex dimension of the model's flag manifold.
size_t manifold_dim(const StandardModel& m);

struct PointClass {
  std::string stratum;  // positive, negative, null-real, null-nonreal, or signature(a,b,c)
  std::optional<Signature> signature;  // isotropic model only
  bool open_orbit = false;
};

/// Throws std::invalid_argument when the point is not on the model's manifold.
PointClass classify_point(const StandardModel& m, const Subspace& point);

struct OrbitReport {
  std::string point;
  std::string algebra;
  Ground ground = Ground::complex;
  size_t tangent_dim = 0;
  size_t manifold_dim = 0;  // complex dimension of Z
  bool open = false;        // tangent_dim = manifold_dim, or 2 manifold_dim for real ground
  std::string stratum;
};

OrbitReport orbit_report(const StandardModel& m, const LieAlgebraBasis& algebra, const Subspace& point);

struct OrbitComparison {
  std::string stratum;
  size_t sample = 0;
  Vector point;
  OrbitReport small;
  OrbitReport big;
  bool equal = false;
};

/// Stratum representatives on the quadric: z+, z-, e3+e4, z+ + z-.
std::vector<std::pair<std::string, Vector>> quadric_strata_representatives();

/// Random element exp(X_1) ... exp(X_k) of SO(3,4) built from nilpotent X(w) = b(v,w)u - b(u,w)v.
Matrix random_so34_element(const StandardModel& quadric, uint64_t seed, long bound, int factors = 3);

/// Samples per stratum, moved by random SO(3,4) elements; compares real tangent dimensions.
std::vector<OrbitComparison> verify_orbit_equality(const StandardModel& quadric, const LieAlgebraBasis& g2,
                                                   const LieAlgebraBasis& so34, size_t samples, uint64_t seed,
                                                   long bound);

}  // namespace flagcert
