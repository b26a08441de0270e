#include "flagcert/sampling.hpp"

#include <algorithm>
#include <stdexcept>

#include "flagcert/witnesses.hpp"

namespace flagcert {

Vector random_vector(Rng& rng, size_t n, long bound, bool real) {
  if (bound < 1) throw std::invalid_argument("sampling bound must be positive");
  Vector v(n);
  for (auto& x : v) {
    x = Scalar(rng.uniform(-bound, bound));
    if (!real) x += Scalar::i() * Scalar(rng.uniform(-bound, bound));
  }
  return v;
}

Vector random_line_with_sign(Rng& rng, const StandardModel& m, int sign, long bound) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  for (int a = 0; a < kSampleAttempts; ++a) {
    Vector z = random_vector(rng, m.dim, bound);
    if (evaluate(m.h, z, z).sign() == sign) return z;
  }
  throw std::runtime_error("no line of the requested sign found within the attempt budget");
}

Matrix random_rotation(Rng& rng, const FormSpec& f, size_t k, bool real, int reflections, long bound) {
  if (k > f.dim()) throw std::invalid_argument("support exceeds the form dimension");
  Matrix r = Matrix::identity(f.dim());
  int done = 0;
  for (int a = 0; done < reflections; ++a) {
    if (a >= kSampleAttempts) throw std::runtime_error("no anisotropic vector found within the attempt budget");
    Vector u = random_vector(rng, k, bound, real);
    u.resize(f.dim());
    if (evaluate(f, u, u).is_zero()) continue;
    r = reflection(f, u) * r;
    ++done;
  }
  return r;
}

Subspace scramble_complex(Rng& rng, const StandardModel& m, long bound) {
  if (m.kind != ModelCase::isotropic) throw std::invalid_argument("needs the isotropic model");
  const Matrix g = random_rotation(rng, m.b, m.dim - 1, false, 4, bound);
  return apply(g, complex_normal_form(m.n));
}

Subspace scramble_real(Rng& rng, const StandardModel& m, long bound) {
  if (m.kind != ModelCase::isotropic) throw std::invalid_argument("needs the isotropic model");
  const Matrix g0 = random_rotation(rng, *m.b_signature, m.dim - 1, true, 4, bound);
  return apply(m.to_standard * g0 * inverse(m.to_standard), real_normal_form(m));
}

Subspace boundary_plane(const StandardModel& m, bool flip) {
  if (m.kind != ModelCase::isotropic) throw std::invalid_argument("needs the isotropic model");
  const Matrix& d = m.b_signature->gram;
  std::vector<size_t> pos, neg;
  for (size_t k = 0; k < m.dim; ++k) (d(k, k).sign() > 0 ? pos : neg).push_back(k);
  if (pos.empty() || neg.empty()) throw std::invalid_argument("definite signature has no boundary planes");
  std::vector<Vector> sig;
  const size_t mixed = std::min(pos.size(), neg.size());
  for (size_t k = 0; k < mixed; ++k) sig.push_back(unit_vector(m.dim, pos[k]) + unit_vector(m.dim, neg[k]));
  const std::vector<size_t>& rest = pos.size() > neg.size() ? pos : neg;
  for (size_t k = mixed; k + 1 < rest.size(); k += 2)
    sig.push_back(unit_vector(m.dim, rest[k]) + Scalar::i() * unit_vector(m.dim, rest[k + 1]));
  if (flip) {
    Vector& last = sig.back();
    for (size_t k = m.dim; k-- > 0;)
      if (!last[k].is_zero()) {
        last[k] = -last[k];
        break;
      }
  }
  return apply(m.to_standard, Subspace::span(sig, m.dim));
}

}  // namespace flagcert
