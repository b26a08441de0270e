#pragma once

// Exact scalars: elements of a real-quadratic tower Q(i)(sqrt r1)...(sqrt rk).
//
// A tower is an immutable chain of nodes; adjoining a root creates a new child
// node and never mutates an existing one, so a TowerPtr can be shared freely
// between threads. Every Scalar carries the node of the smallest level that
// contains it (trailing zero halves are trimmed), which makes the coordinate
// vector a canonical representative.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagcert {

/// Gaussian rational re + im*i.
struct GaussQ {
  mpq_class re{0};
  mpq_class im{0};

  GaussQ() = default;
  GaussQ(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussQ conj() const { return GaussQ(re, -im); }

  friend GaussQ operator+(const GaussQ& a, const GaussQ& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussQ operator-(const GaussQ& a, const GaussQ& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussQ operator-(const GaussQ& a) { return {-a.re, -a.im}; }
  friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussQ inverse() const;
  friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }

  /// "a/b+c/d*i" with both parts reduced; a negative imaginary part is written "a/b-c/d*i".
  std::string to_text() const;
  static GaussQ from_text(const std::string& text);
};

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

class Scalar {
 public:
  Scalar() : c_(1) {}
  Scalar(long v) : c_{GaussQ(mpq_class(v))} {}  // NOLINT: implicit integers are convenient in formulas
  Scalar(const mpq_class& re, const mpq_class& im = 0) : c_{GaussQ(re, im)} {}
  explicit Scalar(const GaussQ& g) : c_{g} {}

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar rational(long num, long den);
  /// Element with the given coordinates over `tower` (size must be 2^depth).
  static Scalar from_coords(TowerPtr tower, std::vector<GaussQ> coords);
  /// The generator sqrt(r_k) of the top level of `tower`.
  static Scalar generator(const TowerPtr& tower);

  const TowerPtr& tower() const { return tower_; }
  int depth() const;
  std::span<const GaussQ> coords() const { return c_; }

  bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }
  bool is_one() const { return c_.size() == 1 && c_[0].re == 1 && sgn(c_[0].im) == 0; }
  bool is_real() const;
  /// Rational base-level value, when the scalar lies in Q(i).
  bool is_gaussian() const { return c_.size() == 1; }
  const GaussQ& base() const { return c_[0]; }
  /// Sign of a real scalar; throws for non-real input.
  int sign() const;

  Scalar conj() const;
  Scalar real_part() const;
  Scalar imag_part() const;
  Scalar inverse() const;
  /// Coordinates padded to the depth of `tower`, which must extend this scalar's tower.
  std::vector<GaussQ> lifted(const TowerPtr& tower) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Human-readable form; base-level scalars print as "a/b+c/d*i".
  std::string to_string() const;

 private:
  void trim();

  TowerPtr tower_;          // nullptr means Q(i)
  std::vector<GaussQ> c_;   // size 2^depth
};

class Tower {
 public:
  /// Adjoins sqrt(radicand). The radicand must be a positive real element of `parent`
  /// that is not already a square there.
  static TowerPtr adjoin(const TowerPtr& parent, const Scalar& radicand);

  const TowerPtr& parent() const { return parent_; }
  const Scalar& radicand() const { return radicand_; }
  int depth() const { return depth_; }
  /// Radicand coordinates lifted to the parent's depth.
  std::span<const GaussQ> radicand_coords() const { return radicand_coords_; }
  /// Radicands from the bottom level upwards.
  std::vector<Scalar> radicands() const;

 private:
  Tower() = default;
  TowerPtr parent_;
  Scalar radicand_;
  std::vector<GaussQ> radicand_coords_;
  int depth_ = 0;
};

inline int tower_depth(const TowerPtr& t) { return t ? t->depth() : 0; }
inline int Scalar::depth() const { return tower_depth(tower_); }

/// True when `ancestor` is `t` or one of its parents (nullptr is everyone's ancestor).
bool tower_extends(const TowerPtr& t, const TowerPtr& ancestor);
/// The deeper of the two towers; throws std::invalid_argument when they lie on different branches.
TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b);

/// Non-negative real square root of a real scalar inside `tower`, if one exists there.
std::optional<Scalar> sqrt_in(const TowerPtr& tower, const Scalar& x);

/// Positive square root of a positive real scalar. Uses `tower` when the root already
/// lies in it, otherwise adjoins a new level and updates `tower`.
Scalar sqrt_adjoining(const Scalar& x, TowerPtr& tower);

}  // namespace flagcert
