#include "flagcert/scalar.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace flagcert {

namespace {

using Coords = std::vector<GaussQ>;
using CSpan = std::span<const GaussQ>;

bool all_zero(CSpan c) {
  return std::all_of(c.begin(), c.end(), [](const GaussQ& g) { return g.is_zero(); });
}

Coords add(CSpan a, CSpan b) {
  Coords out(a.size());
  for (size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

Coords sub(CSpan a, CSpan b) {
  Coords out(a.size());
  for (size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

Coords neg(CSpan a) {
  Coords out(a.size());
  for (size_t k = 0; k < a.size(); ++k) out[k] = -a[k];
  return out;
}

Coords concat(const Coords& lo, const Coords& hi) {
  Coords out(lo);
  out.insert(out.end(), hi.begin(), hi.end());
  return out;
}

// All recursive kernels below work on coordinate vectors of length 2^d where
// `node` is the tower node of depth d (nullptr at depth 0). Level d splits the
// vector into x0 + x1*sqrt(r_d) with halves living at depth d-1.

Coords mul_rec(CSpan a, CSpan b, int d, const Tower* node) {
  if (d == 0) return {a[0] * b[0]};
  const size_t h = size_t{1} << (d - 1);
  const Tower* p = node->parent().get();
  CSpan a0 = a.first(h), a1 = a.subspan(h), b0 = b.first(h), b1 = b.subspan(h);
  const bool a1z = all_zero(a1), b1z = all_zero(b1);
  if (a1z && b1z) return concat(mul_rec(a0, b0, d - 1, p), Coords(h));
  if (a1z) return concat(mul_rec(a0, b0, d - 1, p), mul_rec(a0, b1, d - 1, p));
  if (b1z) return concat(mul_rec(a0, b0, d - 1, p), mul_rec(a1, b0, d - 1, p));
  Coords lo = mul_rec(a0, b0, d - 1, p);
  Coords t = mul_rec(a1, b1, d - 1, p);
  lo = add(lo, mul_rec(t, node->radicand_coords(), d - 1, p));
  Coords hi = add(mul_rec(a0, b1, d - 1, p), mul_rec(a1, b0, d - 1, p));
  return concat(lo, hi);
}

// x0^2 - r*x1^2, the norm down to depth d-1.
Coords norm_down(CSpan x, int d, const Tower* node) {
  const size_t h = size_t{1} << (d - 1);
  const Tower* p = node->parent().get();
  CSpan x0 = x.first(h), x1 = x.subspan(h);
  Coords sq1 = mul_rec(x1, x1, d - 1, p);
  return sub(mul_rec(x0, x0, d - 1, p), mul_rec(sq1, node->radicand_coords(), d - 1, p));
}

Coords inverse_rec(CSpan a, int d, const Tower* node) {
  if (d == 0) return {a[0].inverse()};
  const size_t h = size_t{1} << (d - 1);
  const Tower* p = node->parent().get();
  Coords ni = inverse_rec(norm_down(a, d, node), d - 1, p);
  return concat(mul_rec(a.first(h), ni, d - 1, p), neg(mul_rec(a.subspan(h), ni, d - 1, p)));
}

int sign_rec(CSpan x, int d, const Tower* node) {
  if (d == 0) return sgn(x[0].re);
  const size_t h = size_t{1} << (d - 1);
  const Tower* p = node->parent().get();
  const int s0 = sign_rec(x.first(h), d - 1, p);
  const int s1 = sign_rec(x.subspan(h), d - 1, p);
  if (s1 == 0) return s0;
  if (s0 == 0 || s0 == s1) return s0 == 0 ? s1 : s0;
  return s0 * sign_rec(norm_down(x, d, node), d - 1, p);
}

std::optional<mpz_class> exact_isqrt(const mpz_class& v) {
  if (sgn(v) < 0 || !mpz_perfect_square_p(v.get_mpz_t())) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

// Some square root of a real element (only real roots are searched), or nullopt.
std::optional<Coords> sqrt_rec(CSpan x, int d, const Tower* node) {
  if (d == 0) {
    if (!x[0].is_real() || sgn(x[0].re) < 0) return std::nullopt;
    auto n = exact_isqrt(x[0].re.get_num());
    auto m = exact_isqrt(x[0].re.get_den());
    if (!n || !m) return std::nullopt;
    mpq_class q(*n, *m);
    q.canonicalize();
    return Coords{GaussQ(q)};
  }
  const size_t h = size_t{1} << (d - 1);
  const Tower* p = node->parent().get();
  CSpan x0 = x.first(h), x1 = x.subspan(h);
  CSpan r = node->radicand_coords();
  if (all_zero(x1)) {
    if (auto y = sqrt_rec(x0, d - 1, p)) return concat(*y, Coords(h));
    Coords q = mul_rec(x0, inverse_rec(r, d - 1, p), d - 1, p);
    if (auto y = sqrt_rec(q, d - 1, p)) return concat(Coords(h), *y);
    return std::nullopt;
  }
  auto delta = sqrt_rec(norm_down(x, d, node), d - 1, p);
  if (!delta) return std::nullopt;
  const GaussQ half(mpq_class(1, 2));
  Coords halfc(h);
  halfc[0] = half;
  for (const Coords& t : {add(x0, *delta), sub(x0, *delta)}) {
    auto a = sqrt_rec(mul_rec(t, halfc, d - 1, p), d - 1, p);
    if (!a || all_zero(*a)) continue;
    Coords b = mul_rec(mul_rec(x1, halfc, d - 1, p), inverse_rec(*a, d - 1, p), d - 1, p);
    Coords y = concat(*a, b);
    Coords sq = mul_rec(y, y, d, node);
    if (std::equal(sq.begin(), sq.end(), x.begin())) return y;
  }
  return std::nullopt;
}

const Tower* raw(const TowerPtr& t) { return t.get(); }

}  // namespace

GaussQ GaussQ::inverse() const {
  const mpq_class n = re * re + im * im;
  if (sgn(n) == 0) throw std::domain_error("division by zero");
  return {re / n, -im / n};
}

std::string GaussQ::to_text() const {
  std::string s = re.get_num().get_str() + "/" + re.get_den().get_str();
  mpq_class a = abs(im);
  s += sgn(im) < 0 ? "-" : "+";
  s += a.get_num().get_str() + "/" + a.get_den().get_str() + "*i";
  return s;
}

GaussQ GaussQ::from_text(const std::string& text) {
  static const std::regex pattern(R"(^(-?[0-9]+)/([0-9]+)([+-])(-?[0-9]+)/([0-9]+)\*i$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw std::invalid_argument("malformed scalar: '" + text + "'");
  mpz_class a(m[1].str()), b(m[2].str()), c(m[4].str()), d(m[5].str());
  if (sgn(b) == 0 || sgn(d) == 0) throw std::invalid_argument("zero denominator in scalar: '" + text + "'");
  mpq_class re(a, b), im(c, d);
  re.canonicalize();
  im.canonicalize();
  if (m[3].str() == "-") im = -im;
  return {re, im};
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::from_coords(TowerPtr tower, std::vector<GaussQ> coords) {
  if (coords.size() != (size_t{1} << tower_depth(tower)))
    throw std::invalid_argument("coordinate count does not match tower depth");
  Scalar s;
  s.tower_ = std::move(tower);
  s.c_ = std::move(coords);
  s.trim();
  return s;
}

Scalar Scalar::generator(const TowerPtr& tower) {
  if (!tower) throw std::invalid_argument("base field has no generator");
  std::vector<GaussQ> c(size_t{1} << tower->depth());
  c[c.size() / 2] = GaussQ(mpq_class(1));
  return from_coords(tower, std::move(c));
}

void Scalar::trim() {
  while (tower_) {
    const size_t h = c_.size() / 2;
    if (!all_zero(CSpan(c_).subspan(h))) break;
    c_.resize(h);
    tower_ = tower_->parent();
  }
}

bool Scalar::is_real() const {
  return std::all_of(c_.begin(), c_.end(), [](const GaussQ& g) { return g.is_real(); });
}

int Scalar::sign() const {
  if (!is_real()) throw std::domain_error("sign of a non-real scalar");
  return sign_rec(c_, depth(), raw(tower_));
}

Scalar Scalar::conj() const {
  Scalar s(*this);
  for (auto& g : s.c_) g.im = -g.im;
  return s;
}

Scalar Scalar::real_part() const {
  Scalar s(*this);
  for (auto& g : s.c_) g.im = 0;
  s.trim();
  return s;
}

Scalar Scalar::imag_part() const {
  Scalar s(*this);
  for (auto& g : s.c_) g = GaussQ(g.im);
  s.trim();
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return from_coords(tower_, inverse_rec(c_, depth(), raw(tower_)));
}

std::vector<GaussQ> Scalar::lifted(const TowerPtr& tower) const {
  if (!tower_extends(tower, tower_)) throw std::invalid_argument("scalar does not belong to the given tower");
  std::vector<GaussQ> out(c_);
  out.resize(size_t{1} << tower_depth(tower));
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (tower_ == o.tower_) {
    for (size_t k = 0; k < c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
  } else {
    TowerPtr t = common_tower(tower_, o.tower_);
    c_ = add(lifted(t), o.lifted(t));
    tower_ = std::move(t);
  }
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (tower_ == o.tower_) {
    for (size_t k = 0; k < c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
  } else {
    TowerPtr t = common_tower(tower_, o.tower_);
    c_ = sub(lifted(t), o.lifted(t));
    tower_ = std::move(t);
  }
  trim();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (!a.tower_ && !b.tower_) return Scalar(a.c_[0] * b.c_[0]);
  if (a.is_gaussian() && a.c_[0].is_zero()) return Scalar();
  if (b.is_gaussian() && b.c_[0].is_zero()) return Scalar();
  TowerPtr t = common_tower(a.tower_, b.tower_);
  if (a.is_gaussian() || b.is_gaussian()) {
    const Scalar& s = a.is_gaussian() ? a : b;
    const Scalar& v = a.is_gaussian() ? b : a;
    std::vector<GaussQ> c(v.c_);
    for (auto& g : c) g = g * s.c_[0];
    return Scalar::from_coords(t, std::move(c));
  }
  return Scalar::from_coords(t, mul_rec(a.lifted(t), b.lifted(t), tower_depth(t), raw(t)));
}

Scalar operator-(const Scalar& a) {
  Scalar s(a);
  for (auto& g : s.c_) g = -g;
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.tower_ != b.tower_) {
    (void)common_tower(a.tower_, b.tower_);
    return false;  // both are trimmed, so different levels mean different values
  }
  return a.c_ == b.c_;
}

std::string Scalar::to_string() const {
  if (!tower_) return c_[0].to_text();
  std::ostringstream os;
  os << "[";
  auto rads = tower_->radicands();
  for (size_t k = 0; k < rads.size(); ++k) os << (k ? "," : "") << rads[k].to_string();
  os << "](";
  for (size_t k = 0; k < c_.size(); ++k) os << (k ? "," : "") << c_[k].to_text();
  os << ")";
  return os.str();
}

TowerPtr Tower::adjoin(const TowerPtr& parent, const Scalar& radicand) {
  if (!tower_extends(parent, radicand.tower()))
    throw std::invalid_argument("radicand does not belong to the parent tower");
  if (!radicand.is_real() || radicand.sign() <= 0)
    throw std::invalid_argument("radicand must be a positive real element");
  if (sqrt_in(parent, radicand))
    throw std::invalid_argument("radicand is already a square: " + radicand.to_string());
  auto node = std::shared_ptr<Tower>(new Tower());
  node->parent_ = parent;
  node->radicand_ = radicand;
  node->radicand_coords_ = radicand.lifted(parent);
  node->depth_ = tower_depth(parent) + 1;
  return node;
}

std::vector<Scalar> Tower::radicands() const {
  std::vector<Scalar> out;
  for (const Tower* t = this; t; t = t->parent_.get()) out.push_back(t->radicand_);
  std::reverse(out.begin(), out.end());
  return out;
}

bool tower_extends(const TowerPtr& t, const TowerPtr& ancestor) {
  if (!ancestor) return true;
  for (const Tower* n = t.get(); n; n = n->parent().get())
    if (n == ancestor.get()) return true;
  return false;
}

TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b) {
  if (tower_extends(a, b)) return a;
  if (tower_extends(b, a)) return b;
  throw std::invalid_argument("scalars from incompatible tower contexts");
}

std::optional<Scalar> sqrt_in(const TowerPtr& tower, const Scalar& x) {
  if (!x.is_real()) return std::nullopt;
  if (x.is_zero()) return Scalar();
  if (x.sign() < 0) return std::nullopt;
  auto r = sqrt_rec(x.lifted(tower), tower_depth(tower), raw(tower));
  if (!r) return std::nullopt;
  Scalar y = Scalar::from_coords(tower, std::move(*r));
  return y.sign() < 0 ? -y : y;
}

Scalar sqrt_adjoining(const Scalar& x, TowerPtr& tower) {
  if (!x.is_real() || x.sign() <= 0) throw std::domain_error("square root of a non-positive scalar");
  tower = common_tower(tower, x.tower());
  if (auto y = sqrt_in(tower, x)) return *y;
  if (!x.is_gaussian()) {
    tower = Tower::adjoin(tower, x);
    return Scalar::generator(tower);
  }
  // sqrt(a/b) = k/b * sqrt(s) with a*b = k^2 * s and small square factors pulled out.
  const mpq_class& q = x.base().re;
  mpz_class s = q.get_num() * q.get_den();
  mpz_class k = 1;
  for (unsigned long p = 2; p < 1000 && p * p <= s; ++p) {
    const mpz_class p2 = p * p;
    while (mpz_divisible_p(s.get_mpz_t(), p2.get_mpz_t())) {
      s /= p2;
      k *= p;
    }
  }
  tower = Tower::adjoin(tower, Scalar(mpq_class(s)));
  mpq_class coef(k, q.get_den());
  coef.canonicalize();
  return Scalar(coef) * Scalar::generator(tower);
}

}  // namespace flagcert
