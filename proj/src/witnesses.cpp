#include "flagcert/witnesses.hpp"

#include <algorithm>
#include <optional>

namespace flagcert {

const char* to_string(Claim::Kind k) {
  switch (k) {
    case Claim::Kind::maps_line: return "maps_line";
    case Claim::Kind::maps_subspace: return "maps_subspace";
    case Claim::Kind::maps_vector: return "maps_vector";
  }
  return "?";
}

Claim::Kind claim_kind_from_string(const std::string& s) {
  if (s == "maps_line") return Claim::Kind::maps_line;
  if (s == "maps_subspace") return Claim::Kind::maps_subspace;
  if (s == "maps_vector") return Claim::Kind::maps_vector;
  throw std::invalid_argument("unknown claim kind: " + s);
}

namespace {

Matrix column(const Vector& v) {
  const std::vector<Vector> c{v};
  return Matrix::from_columns(c);
}

Subspace span_of(std::span<const Vector> vs, size_t n) { return Subspace::span(vs, n); }

// Coordinate subspace span{e_j : j in idx}.
Subspace coordinate_span(size_t n, const std::vector<size_t>& idx) {
  std::vector<Vector> g;
  for (size_t j : idx) g.push_back(unit_vector(n, j));
  return span_of(g, n);
}

Vector real_part(const Vector& v) {
  Vector r(v.size());
  for (size_t k = 0; k < v.size(); ++k) r[k] = v[k].real_part();
  return r;
}

Vector imag_part(const Vector& v) {
  Vector r(v.size());
  for (size_t k = 0; k < v.size(); ++k) r[k] = v[k].imag_part();
  return r;
}

Vector head(const Vector& v, size_t k) { return Vector(v.begin(), v.begin() + static_cast<long>(k)); }

Matrix block_one(const Matrix& a) {
  Matrix m = Matrix::identity(a.rows() + 1);
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

bool is_real_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_real(); });
}

}  // namespace

std::vector<std::string> witness_failures(const Witness& w) {
  std::vector<std::string> out;
  const Matrix& g = w.element;
  if (!g.square() || g.rows() != w.group.ambient_dim) return {"element dimension does not match group"};
  if (w.claim.source.rows() != g.rows() || w.claim.target.rows() != g.rows()) return {"claim dimension mismatch"};
  for (const auto& v : violated_constraints(w.group, g)) out.push_back("violates " + v);
  switch (w.claim.kind) {
    case Claim::Kind::maps_vector:
      if (w.claim.source.cols() != 1 || w.claim.target.cols() != 1) {
        out.emplace_back("vector claim needs single columns");
      } else if (g * w.claim.source.col(0) != w.claim.target.col(0)) {
        out.emplace_back("image vector differs from target");
      }
      break;
    case Claim::Kind::maps_line:
    case Claim::Kind::maps_subspace: {
      const Subspace s = Subspace::span(w.claim.source);
      const Subspace t = Subspace::span(w.claim.target);
      if (w.claim.kind == Claim::Kind::maps_line && (s.dim() != 1 || t.dim() != 1)) {
        out.emplace_back("line claim needs one-dimensional spans");
      } else if (!column_space_equal(apply(g, s), t)) {
        out.emplace_back("image subspace differs from target");
      }
      break;
    }
  }
  return out;
}

bool verify_witness(const Witness& w) { return witness_failures(w).empty(); }

std::vector<Scalar> witness_radicands(const Witness& w) {
  TowerPtr t;
  for (size_t i = 0; i < w.element.rows(); ++i)
    for (size_t j = 0; j < w.element.cols(); ++j) t = common_tower(t, w.element(i, j).tower());
  return t ? t->radicands() : std::vector<Scalar>{};
}

Witness compose(const Witness& second, const Witness& first) {
  if (second.group.name != first.group.name || second.group.ambient_dim != first.group.ambient_dim)
    throw std::invalid_argument("witnesses belong to different groups");
  if (first.claim.kind != second.claim.kind) throw std::invalid_argument("witness claims have different kinds");
  const bool linked = first.claim.kind == Claim::Kind::maps_vector
                          ? first.claim.target == second.claim.source
                          : column_space_equal(Subspace::span(first.claim.target), Subspace::span(second.claim.source));
  if (!linked) throw std::invalid_argument("first target is not the second source");
  Witness w{second.group, second.element * first.element, {first.claim.kind, first.claim.source, second.claim.target}};
  w.verified = verify_witness(w);
  return w;
}

Matrix reflection(const FormSpec& f, const Vector& u) {
  if (f.kind != FormKind::symmetric) throw std::invalid_argument("reflections need a symmetric form");
  const Scalar uu = evaluate(f, u, u);
  if (uu.is_zero()) throw std::invalid_argument("cannot reflect in an isotropic vector");
  const Vector gu = f.gram * u;
  const Scalar c = Scalar(2) / uu;
  Matrix m = Matrix::identity(f.dim());
  for (size_t i = 0; i < m.rows(); ++i) {
    if (u[i].is_zero()) continue;
    const Scalar cu = c * u[i];
    for (size_t j = 0; j < m.cols(); ++j)
      if (!gu[j].is_zero()) m(i, j) -= cu * gu[j];
  }
  return m;
}

Matrix witt_transport(const FormSpec& f, std::span<const Vector> frame_a, std::span<const Vector> frame_b,
                      bool require_special, bool extra_real) {
  if (f.kind != FormKind::symmetric) throw std::invalid_argument("witt_transport needs a symmetric form");
  const size_t n = f.dim(), k = frame_a.size();
  if (frame_b.size() != k) throw std::invalid_argument("frames have different lengths");
  for (size_t i = 0; i < k; ++i)
    if (frame_a[i].size() != n || frame_b[i].size() != n) throw std::invalid_argument("frame vector dimension mismatch");
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i; j < k; ++j)
      if (evaluate(f, frame_a[i], frame_a[j]) != evaluate(f, frame_b[i], frame_b[j]))
        throw std::invalid_argument("frames have different Gram matrices");
  if (k > 0 && (span_of(frame_a, n).dim() != k || span_of(frame_b, n).dim() != k))
    throw std::invalid_argument("frames are linearly dependent");
  if (extra_real) {
    if (!f.gram.is_real()) throw std::invalid_argument("real transport needs a real form");
    for (size_t i = 0; i < k; ++i)
      if (!is_real_vector(frame_a[i]) || !is_real_vector(frame_b[i]))
        throw std::invalid_argument("real transport needs real frames");
  }

  Matrix g = Matrix::identity(n);
  for (size_t step = 0; step < k; ++step) {
    const Vector a = g * frame_a[step];
    const Vector& b = frame_b[step];
    if (a == b) continue;
    // a - b is orthogonal to the frame vectors already in place.
    const Vector d = a - b;
    if (!evaluate(f, d, d).is_zero()) {
      g = reflection(f, d) * g;
      continue;
    }
    // Split off the component in U = span{b_0..b_{step-1}}; it is the same for a and b.
    Vector bp = b;
    if (step > 0) {
      Matrix gram(step, step);
      Vector rhs(step);
      for (size_t i = 0; i < step; ++i) {
        for (size_t j = 0; j < step; ++j) gram(i, j) = evaluate(f, frame_b[i], frame_b[j]);
        rhs[i] = evaluate(f, frame_b[i], b);
      }
      if (determinant(gram).is_zero()) throw std::invalid_argument("degenerate pivot: placed frame is degenerate");
      const Vector coef = inverse(gram) * rhs;
      for (size_t i = 0; i < step; ++i) bp = bp - coef[i] * frame_b[i];
    }
    if (evaluate(f, bp, bp).is_zero()) throw std::invalid_argument("degenerate pivot: isotropic frame component");
    const Vector ap = d + bp;
    g = reflection(f, bp) * (reflection(f, ap + bp) * g);
  }

  if (require_special && determinant(g) != Scalar(1)) {
    const Subspace rest = perp(f, k > 0 ? span_of(frame_b, n) : Subspace::zero(n));
    const std::vector<Vector> cols = rest.basis().columns();
    std::optional<Vector> pick;
    for (size_t i = 0; i < cols.size() && !pick; ++i)
      if (!evaluate(f, cols[i], cols[i]).is_zero()) pick = cols[i];
    for (size_t i = 0; i < cols.size() && !pick; ++i)
      for (size_t j = i + 1; j < cols.size() && !pick; ++j) {
        const Vector s = cols[i] + cols[j];
        if (!evaluate(f, s, s).is_zero()) pick = s;
      }
    if (!pick) throw std::invalid_argument("no room for determinant correction");
    g = reflection(f, *pick) * g;
  }
  for (size_t i = 0; i < k; ++i)
    if (g * frame_a[i] != frame_b[i]) throw std::logic_error("witt_transport produced a wrong image");
  if (extra_real && !g.is_real()) throw std::logic_error("witt_transport produced a non-real matrix");
  return g;
}

namespace {

// Seeds w_1..w_n with V = sum of span{w_k, phi w_k}, pairwise h- and omega-orthogonal.
std::vector<Vector> symplectic_seeds(const StandardModel& m, const Vector& z, const std::vector<int>& signs) {
  const size_t dim = m.dim;
  std::vector<Vector> seeds{z};
  std::vector<Vector> ortho{z, phi(m, z)};
  std::vector<Scalar> norms{evaluate(m.h, z, z), evaluate(m.h, ortho[1], ortho[1])};
  auto project = [&](Vector x) {
    for (size_t i = 0; i < ortho.size(); ++i) {
      const Scalar c = evaluate(m.h, x, ortho[i]);
      if (!c.is_zero()) x = x - (c / norms[i]) * ortho[i];
    }
    return x;
  };
  for (size_t k = 1; k < signs.size(); ++k) {
    std::optional<Vector> seed;
    for (size_t j = 0; j < dim && !seed; ++j) {
      const Vector x = project(unit_vector(dim, j));
      if (evaluate(m.h, x, x).sign() == signs[k]) seed = x;
    }
    if (!seed) {
      const Subspace rest = perp(m.h, span_of(ortho, dim));
      const Congruence c = congruence_diagonalize(restrict_gram(m.h, rest));
      for (size_t j = 0; j < c.diagonal.size() && !seed; ++j)
        if (c.diagonal[j].sign() == signs[k]) seed = rest.basis() * c.basis.col(j);
    }
    if (!seed) throw std::logic_error("no seed of the required sign in the complement");
    seeds.push_back(*seed);
    ortho.push_back(*seed);
    ortho.push_back(phi(m, *seed));
    norms.push_back(evaluate(m.h, ortho[ortho.size() - 2], ortho[ortho.size() - 2]));
    norms.push_back(evaluate(m.h, ortho.back(), ortho.back()));
  }
  return seeds;
}

Matrix seed_basis(const StandardModel& m, const std::vector<Vector>& seeds) {
  std::vector<Vector> cols;
  for (const auto& w : seeds) {
    cols.push_back(w);
    cols.push_back(phi(m, w));
  }
  return Matrix::from_columns(cols);
}

}  // namespace

Witness transport_positive_line_sp(const StandardModel& m, const Vector& z, const Vector& z_target, TowerPtr& tower) {
  if (m.kind != ModelCase::projective_split && m.kind != ModelCase::projective_pq)
    throw std::invalid_argument("line transport needs a projective model");
  if (z.size() != m.dim || z_target.size() != m.dim) throw std::invalid_argument("vector dimension does not match model");
  const int s = evaluate(m.h, z, z).sign();
  const int st = evaluate(m.h, z_target, z_target).sign();
  if (s == 0 || st == 0) throw std::invalid_argument("null line");
  if (s != st) throw std::invalid_argument("lines have h-norms of different sign");

  // Sign of h on each seed; both sides use the same sequence.
  std::vector<int> signs{s};
  if (m.kind == ModelCase::projective_split) {
    signs.resize(m.n, s);
  } else {
    size_t pos = m.p - (s > 0 ? 1 : 0), neg = m.q - (s < 0 ? 1 : 0);
    while (pos-- > 0) signs.push_back(1);
    while (neg-- > 0) signs.push_back(-1);
  }
  const std::vector<Vector> src = symplectic_seeds(m, z, signs);
  std::vector<Vector> dst = symplectic_seeds(m, z_target, signs);
  for (size_t k = 0; k < dst.size(); ++k) {
    const Scalar ratio = evaluate(m.h, src[k], src[k]) / evaluate(m.h, dst[k], dst[k]);
    dst[k] = sqrt_adjoining(ratio, tower) * dst[k];
  }
  const Matrix t = seed_basis(m, dst) * inverse(seed_basis(m, src));
  Witness w{sp_real_form(m), t, {Claim::Kind::maps_line, column(z), column(z_target)}};
  w.verified = verify_witness(w);
  return w;
}

Witness transport_positive_line_sp(const StandardModel& m, const Vector& z, const Vector& z_target) {
  TowerPtr tower;
  return transport_positive_line_sp(m, z, z_target, tower);
}

Subspace complex_normal_form(size_t n) {
  std::vector<Vector> g;
  for (size_t k = 0; k < n; ++k) g.push_back(unit_vector(2 * n, k) + Scalar::i() * unit_vector(2 * n, n + k));
  return span_of(g, 2 * n);
}

std::vector<std::pair<size_t, size_t>> real_normal_pairs(const StandardModel& m) {
  if (m.kind != ModelCase::isotropic) throw std::invalid_argument("normal forms need the isotropic model");
  std::vector<std::pair<size_t, size_t>> pairs;
  const size_t last = 2 * m.n - 1;
  if (m.p % 2 == 0) {
    for (size_t k = 0; k < m.n; ++k) pairs.emplace_back(2 * k, 2 * k + 1);
  } else {
    for (size_t a = 0; a + 2 < m.p; a += 2) pairs.emplace_back(a, a + 1);
    for (size_t a = m.p; a + 1 < last; a += 2) pairs.emplace_back(a, a + 1);
    pairs.emplace_back(m.p - 1, last);
  }
  return pairs;
}

Subspace real_normal_form(const StandardModel& m) {
  std::vector<Vector> g;
  for (auto [a, c] : real_normal_pairs(m)) g.push_back(unit_vector(m.dim, a) + Scalar::i() * unit_vector(m.dim, c));
  return span_of(g, m.dim);
}

Matrix normal_form_change_of_basis(const StandardModel& m) {
  const auto pairs = real_normal_pairs(m);
  Matrix p(m.dim, m.dim);
  for (size_t k = 0; k < pairs.size(); ++k) {
    p(k, pairs[k].first) = 1;
    p(m.n + k, pairs[k].second) = 1;
  }
  return p;
}

bool same_family(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.ambient_dim() % 2 != 0) throw std::invalid_argument("need even ambient dimension");
  const size_t n = a.ambient_dim() / 2;
  if (a.dim() != n || b.dim() != n) throw std::invalid_argument("need maximal subspaces");
  return intersect(a, b).dim() % 2 == n % 2;
}

namespace {

void check_isotropic_plane(const StandardModel& m, const Subspace& w_hat) {
  if (m.kind != ModelCase::isotropic) throw std::invalid_argument("normal forms need the isotropic model");
  if (w_hat.ambient_dim() != m.dim) throw std::invalid_argument("plane ambient dimension does not match model");
  if (w_hat.dim() != m.n) throw std::invalid_argument("plane must have dimension n");
  if (!is_isotropic(m.b, w_hat)) throw std::invalid_argument("plane is not b-isotropic");
}

}  // namespace

Witness isotropic_normal_form_complex(const StandardModel& m, const Subspace& w_hat) {
  check_isotropic_plane(m, w_hat);
  const size_t dim = m.dim, last = dim - 1;
  const Subspace target = complex_normal_form(m.n);
  if (!same_family(w_hat, target)) throw std::invalid_argument("plane lies in the other component of isotropic n-planes");
  bool meets_last = false;
  for (const auto& c : w_hat.basis().columns()) meets_last = meets_last || !c[last].is_zero();
  if (!meets_last) throw std::invalid_argument("plane is contained in V");

  const Scalar i = Scalar::i();
  std::vector<size_t> idx(dim);
  for (size_t k = 0; k < dim; ++k) idx[k] = k;
  Matrix g = Matrix::identity(dim);
  Subspace cur = w_hat;
  while (!idx.empty()) {
    const size_t half = idx.size() / 2;
    const size_t a = idx[half - 1], c = idx[2 * half - 1];
    auto pivot_column = [&]() -> std::optional<Vector> {
      for (const auto& col : cur.basis().columns())
        if (!col[c].is_zero()) return col;
      return std::nullopt;
    };
    std::optional<Vector> col = pivot_column();
    if (!col) {
      // Inner levels only: rotate a used coordinate e_j onto e_c (e_j -> e_c, e_c -> -e_j).
      size_t j = dim;
      for (size_t t : idx)
        for (const auto& v : cur.basis().columns())
          if (j == dim && t != c && !v[t].is_zero()) j = t;
      if (j == dim) throw std::logic_error("empty plane in normal form recursion");
      Matrix r = Matrix::identity(dim);
      r(j, j) = 0;
      r(c, c) = 0;
      r(c, j) = 1;
      r(j, c) = -1;
      g = r * g;
      cur = apply(r, cur);
      col = pivot_column();
    }
    const Vector w = (i / (*col)[c]) * *col;
    const Vector v = w - i * unit_vector(dim, c);
    const Vector ea = unit_vector(dim, a);
    Matrix r = Matrix::identity(dim);
    if (v != ea) {
      const Vector d = v - ea;
      r = !evaluate(m.b, d, d).is_zero() ? reflection(m.b, d) : reflection(m.b, ea) * reflection(m.b, v + ea);
    }
    if (determinant(r) != Scalar(1)) {
      size_t j = dim;
      for (size_t t : idx)
        if (j == dim && t != a && t != c) j = t;
      if (j == dim) throw std::logic_error("determinant correction impossible: plane in the wrong component");
      r = reflection(m.b, unit_vector(dim, j)) * r;
    }
    g = r * g;
    cur = apply(r, cur);
    // Keep the part with vanishing c-coordinate; it lies in the remaining coordinates.
    cur = intersect(cur, kernel(column(unit_vector(dim, c)).transpose()));
    idx.erase(idx.begin() + static_cast<long>(2 * half - 1));
    idx.erase(idx.begin() + static_cast<long>(half - 1));
  }
  Witness out{so2n1_c(m), g, {Claim::Kind::maps_subspace, w_hat.basis(), target.basis()}};
  out.verified = verify_witness(out);
  return out;
}

Witness isotropic_normal_form_real(const StandardModel& m, const Subspace& w_hat, TowerPtr& tower) {
  check_isotropic_plane(m, w_hat);
  const size_t dim = m.dim, vdim = dim - 1;
  const Subspace target = real_normal_form(m);
  if (!same_family(w_hat, target)) throw std::invalid_argument("plane lies in the other component of isotropic n-planes");

  // Signature coordinates: b and h both have Gram diag(E_pq, eps) and SO(p,q) is real.
  const Matrix d_inv = inverse(m.to_standard);
  const Subspace ws = apply(d_inv, w_hat);
  std::vector<size_t> vidx(vdim);
  for (size_t k = 0; k < vdim; ++k) vidx[k] = k;
  const Subspace w = intersect(ws, coordinate_span(dim, vidx));
  if (w.dim() + 1 != m.n) throw std::logic_error("plane meets V in the wrong dimension");

  const Matrix gram = restrict_gram(m.h, w);
  const Signature sig = hermitian_signature(gram);
  const Signature open = m.p % 2 == 0 ? Signature{m.p / 2, (m.q - 1) / 2, 0} : Signature{(m.p - 1) / 2, m.q / 2, 0};
  if (sig.zero > 0) throw NotInOpenOrbit("h is degenerate on the plane's intersection with V");
  if (sig != open) throw NotInOpenOrbit("h has signature " + to_string(sig) + " on the plane's intersection with V");

  // h-orthogonal basis of W; it is b-orthogonal too since W is b-isotropic.
  std::vector<Vector> pos, neg;
  if (w.dim() > 0) {
    const Congruence c = congruence_diagonalize(gram);
    for (size_t k = 0; k < c.diagonal.size(); ++k) {
      const Vector v = w.basis() * c.basis.col(k);
      (c.diagonal[k].sign() > 0 ? pos : neg).push_back(v);
    }
  }
  const FormSpec fv = FormSpec::make(FormKind::symmetric, e_pq(m.p, m.q));
  const auto pairs = real_normal_pairs(m);
  std::vector<Vector> frame_a, frame_b;
  auto add = [&](const Vector& v, std::pair<size_t, size_t> pair) {
    // v = x + i y with b(x,x) = b(y,y) = h(v,v)/2 and b(x,y) = 0.
    const Vector x = head(real_part(v), vdim), y = head(imag_part(v), vdim);
    const Scalar bxx = evaluate(fv, x, x);
    const Scalar s = Scalar(1) / sqrt_adjoining(bxx.sign() > 0 ? bxx : -bxx, tower);
    frame_a.push_back(s * x);
    frame_a.push_back(s * y);
    frame_b.push_back(unit_vector(vdim, pair.first));
    frame_b.push_back(unit_vector(vdim, pair.second));
  };
  for (size_t k = 0; k < pos.size(); ++k) add(pos[k], pairs[k]);
  for (size_t k = 0; k < neg.size(); ++k) add(neg[k], pairs[pos.size() + k]);
  Matrix gv = witt_transport(fv, frame_a, frame_b, false, true);
  if (determinant(gv) != Scalar(1)) gv = reflection(fv, unit_vector(vdim, pairs.back().first)) * gv;
  const Matrix g = m.to_standard * block_one(gv) * d_inv;

  Witness out{so_pq(m), g, {Claim::Kind::maps_subspace, w_hat.basis(), target.basis()}};
  out.verified = verify_witness(out);
  return out;
}

Witness isotropic_normal_form_real(const StandardModel& m, const Subspace& w_hat) {
  TowerPtr tower;
  return isotropic_normal_form_real(m, w_hat, tower);
}

}  // namespace flagcert
