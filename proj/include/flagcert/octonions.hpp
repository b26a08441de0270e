#pragma once

// Split octonions in the vector-matrix model, their derivation algebra (split g2),
// and its action on the imaginary part in quadric coordinates.

#include <array>

#include "flagcert/linalg.hpp"

namespace flagcert {

struct OctonionAlgebra {
  static constexpr size_t dim = 8;
  using Table = std::array<std::array<std::array<int, 8>, 8>, 8>;

  // e_i e_j = sum_k table[i][j][k] e_k.
  // Basis: e0 = unit, e1 = idempotent (1,0;0,0), e2..e4 = v-slots, e5..e7 = w-slots.
  Table table{};
  size_t unit = 0;
  Matrix norm_gram;  // N(x) = x^t norm_gram x

  Vector multiply(const Vector& x, const Vector& y) const;
  Scalar norm(const Vector& x) const;
  /// 8x7 basis of the trace-zero part whose norm Gram is diag(1,1,1,-1,-1,-1,-1).
  Matrix quadric_basis() const;
};

OctonionAlgebra split_octonions();

struct DerivationBasis {
  LieAlgebraBasis algebra;           // 8x8 derivations
  std::vector<Matrix> restricted;    // 7x7 action on the imaginary part, quadric coordinates
};

/// Throws std::logic_error unless the derivation algebra has dimension 14.
DerivationBasis derivations(const OctonionAlgebra& a);

/// The restricted matrices as a real-ground algebra named "G2split".
LieAlgebraBasis imaginary_embedding(const DerivationBasis& d);

}  // namespace flagcert
