#include "flagcert/orbits.hpp"

#include <algorithm>
#include <stdexcept>

#include "flagcert/groups.hpp"
#include "flagcert/rng.hpp"

namespace flagcert {

size_t tangent_dim_projective(const LieAlgebraBasis& algebra, const Vector& z) {
  if (z.size() != algebra.ambient_dim) throw std::invalid_argument("vector dimension does not match algebra");
  if (is_zero(z)) throw std::invalid_argument("zero vector does not define a point");
  const bool real = algebra.ground == Ground::real;
  SpanReducer red(real ? 2 * z.size() : z.size());
  auto add = [&](const Vector& v) { red.insert(real ? real_coords(v) : v); };
  add(z);
  if (real) add(Scalar::i() * z);
  const size_t base = red.rank();
  for (const auto& x : algebra.elements) add(x * z);
  return red.rank() - base;
}

size_t tangent_dim_grassmann(const LieAlgebraBasis& algebra, const Subspace& s,
                             const std::optional<FormSpec>& ambient_constraint) {
  if (s.ambient_dim() != algebra.ambient_dim) throw std::invalid_argument("subspace dimension does not match algebra");
  if (ambient_constraint && !is_isotropic(*ambient_constraint, s))
    throw std::invalid_argument("subspace is not isotropic for the ambient form");
  const bool real = algebra.ground == Ground::real;
  const Matrix ann = s.annihilator();
  const size_t len = ann.rows() * s.dim();
  SpanReducer red(real ? 2 * len : len);
  for (const auto& x : algebra.elements) {
    const Vector c = coordinates(ann * x * s.basis(), Ground::complex);
    red.insert(real ? real_coords(c) : c);
  }
  return red.rank();
}

size_t manifold_dim(const StandardModel& m) {
  switch (m.kind) {
    case ModelCase::projective_split:
    case ModelCase::projective_pq: return m.dim - 1;
    case ModelCase::quadric7: return 5;
    case ModelCase::isotropic: return m.n * (m.n - 1) / 2;
  }
  return 0;
}

PointClass classify_point(const StandardModel& m, const Subspace& point) {
  if (point.ambient_dim() != m.dim) throw std::invalid_argument("point dimension does not match model");
  PointClass out;
  if (m.kind == ModelCase::isotropic) {
    if (point.dim() != m.n || !is_isotropic(m.b, point))
      throw std::invalid_argument("point is not an isotropic n-plane");
    const Signature sig = hermitian_signature(restrict_gram(m.h, point));
    const Signature open = m.p % 2 == 0 ? Signature{m.p / 2, (m.q + 1) / 2, 0} : Signature{(m.p + 1) / 2, m.q / 2, 0};
    out.stratum = "signature" + to_string(sig);
    out.signature = sig;
    out.open_orbit = sig == open;
    return out;
  }
  if (point.dim() != 1) throw std::invalid_argument("point is not a line");
  if (m.kind == ModelCase::quadric7 && !is_isotropic(m.b, point))
    throw std::invalid_argument("line is not on the quadric");
  const Vector z = point.basis().col(0);
  const int s = evaluate(m.h, z, z).sign();
  if (s != 0) {
    out.stratum = s > 0 ? "positive" : "negative";
    out.open_orbit = true;
    return out;
  }
  const std::vector<Vector> c{conj(z)};
  out.stratum = column_space_equal(point, Subspace::span(c, m.dim)) ? "null-real" : "null-nonreal";
  return out;
}

namespace {

std::string describe(const Subspace& s) {
  std::string out = "span{";
  const auto cols = s.canonical().columns();
  for (size_t c = 0; c < cols.size(); ++c) {
    if (c) out += ", ";
    out += "(";
    for (size_t k = 0; k < cols[c].size(); ++k) out += (k ? "," : "") + cols[c][k].to_string();
    out += ")";
  }
  return out + "}";
}

}  // namespace

OrbitReport orbit_report(const StandardModel& m, const LieAlgebraBasis& algebra, const Subspace& point) {
  OrbitReport r;
  r.point = describe(point);
  r.algebra = algebra.name;
  r.ground = algebra.ground;
  r.tangent_dim = point.dim() == 1 && m.kind != ModelCase::isotropic
                      ? tangent_dim_projective(algebra, point.basis().col(0))
                      : tangent_dim_grassmann(algebra, point, m.b);
  r.manifold_dim = manifold_dim(m);
  r.open = r.tangent_dim == (algebra.ground == Ground::real ? 2 : 1) * r.manifold_dim;
  r.stratum = classify_point(m, point).stratum;
  return r;
}

std::vector<std::pair<std::string, Vector>> quadric_strata_representatives() {
  const Scalar i = Scalar::i();
  const Vector zp = unit_vector(7, 0) + i * unit_vector(7, 1);
  const Vector zm = unit_vector(7, 3) + i * unit_vector(7, 4);
  return {{"positive", zp}, {"negative", zm}, {"null-real", unit_vector(7, 2) + unit_vector(7, 3)},
          {"null-nonreal", zp + zm}};
}

Matrix random_so34_element(const StandardModel& quadric, uint64_t seed, long bound, int factors) {
  if (quadric.kind != ModelCase::quadric7) throw std::invalid_argument("needs the quadric model");
  if (bound < 1) throw std::invalid_argument("sampling bound must be positive");
  Rng rng(seed);
  const Matrix& e = quadric.b.gram;
  Matrix g = Matrix::identity(7);
  for (int f = 0; f < factors; ++f) {
    // u = (x, signed permutation of (x, 0)) is b-isotropic.
    Vector u(7);
    for (size_t k = 0; k < 3; ++k) u[k] = Scalar(rng.uniform(-bound, bound));
    std::vector<size_t> slots{3, 4, 5, 6};
    for (size_t k = slots.size() - 1; k > 0; --k)
      std::swap(slots[k], slots[static_cast<size_t>(rng.uniform(0, static_cast<int64_t>(k)))]);
    for (size_t k = 0; k < 3; ++k) u[slots[k]] = rng.uniform(0, 1) ? u[k] : -u[k];
    if (is_zero(u)) continue;
    // v with b(u, v) = 0, solved in the first coordinate where u is nonzero.
    Vector v(7);
    for (auto& c : v) c = Scalar(rng.uniform(-bound, bound));
    size_t j = 0;
    while (u[j].is_zero()) ++j;
    v[j] = Scalar();
    Scalar s;
    for (size_t k = 0; k < 7; ++k) s += e(k, k) * u[k] * v[k];
    v[j] = -s / (e(j, j) * u[j]);
    const Scalar t(rng.uniform(-bound, bound));
    const std::vector<Vector> uc{u}, vc{v}, euc{e * u}, evc{e * v};
    const Matrix x = t * (Matrix::from_columns(uc) * Matrix::from_columns(evc).transpose() -
                          Matrix::from_columns(vc) * Matrix::from_columns(euc).transpose());
    g = exp_nilpotent(x, Scalar(1)) * g;
  }
  return g;
}

std::vector<OrbitComparison> verify_orbit_equality(const StandardModel& quadric, const LieAlgebraBasis& g2,
                                                   const LieAlgebraBasis& so34, size_t samples, uint64_t seed,
                                                   long bound) {
  if (quadric.kind != ModelCase::quadric7) throw std::invalid_argument("needs the quadric model");
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  Rng master(seed);
  std::vector<OrbitComparison> out;
  for (const auto& [stratum, rep] : quadric_strata_representatives()) {
    for (size_t k = 0; k < samples; ++k) {
      // Sample 0 is the representative itself.
      const Vector z = k == 0 ? rep : random_so34_element(quadric, master.next(), bound) * rep;
      const std::vector<Vector> zc{z};
      const Subspace line = Subspace::span(zc, 7);
      OrbitComparison c;
      c.stratum = stratum;
      c.sample = k;
      c.point = z;
      c.small = orbit_report(quadric, g2, line);
      c.big = orbit_report(quadric, so34, line);
      if (c.small.stratum != stratum) throw std::logic_error("sample left its stratum");
      c.equal = c.small.tangent_dim == c.big.tangent_dim;
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace flagcert
