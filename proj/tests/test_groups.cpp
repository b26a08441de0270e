#include <gtest/gtest.h>

#include "flagcert/groups.hpp"
#include "test_support.hpp"

namespace flagcert {
namespace {

using testing::Gen;

const Scalar I = Scalar::i();

Subspace line(const Vector& v) {
  const std::vector<Vector> g{v};
  return Subspace::span(g, v.size());
}

Subspace isotropic_normal_plane(size_t n) {
  std::vector<Vector> g;
  for (size_t k = 0; k < n; ++k) g.push_back(unit_vector(2 * n, k) + I * unit_vector(2 * n, n + k));
  return Subspace::span(g, 2 * n);
}

GroupSpec so_m(size_t m) {
  return {"SO" + std::to_string(m), m,
          {Constraint::preserves(FormSpec::make(FormKind::symmetric, Matrix::identity(m))), Constraint::det_one()}};
}

std::vector<GroupSpec> sample_groups() {
  const StandardModel ps = projective_split_model(2);
  const StandardModel pq = projective_pq_model(1, 1);
  const StandardModel qu = quadric7_model();
  const StandardModel iso = isotropic_model(2, 2, 1);
  return {sp2n_c(ps),      su_h(ps),       sp_real_form(ps), su_h(pq),       sp_real_form(pq),
          so7_c(qu),       so34(qu),       so2n_c(iso),      so2n1_c(iso),   so_pq(iso),
          so_pq_hat(iso),  sl_c(3, "SL3C")};
}

TEST(Contains, Examples) {
  const StandardModel m = projective_split_model(1);
  const Matrix g = Matrix::diagonal({Scalar(2), Scalar::rational(1, 2)});
  EXPECT_TRUE(contains(sp2n_c(m), g));
  EXPECT_FALSE(contains(su_h(m), g));
  EXPECT_EQ(violated_constraints(su_h(m), g), std::vector<std::string>{"preserves_hermitian"});
  for (const auto& grp : sample_groups()) EXPECT_TRUE(contains(grp, Matrix::identity(grp.ambient_dim))) << grp.name;
  EXPECT_THROW(contains(sp2n_c(m), Matrix::identity(3)), std::invalid_argument);
}

TEST(Contains, DeterminantAndFixedVector) {
  const StandardModel iso = isotropic_model(2, 2, 1);
  Matrix swap(4, 4);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  swap(2, 2) = 1;
  swap(3, 3) = 1;
  EXPECT_FALSE(contains(so2n_c(iso), swap));
  Matrix flip = Matrix::diagonal({Scalar(1), Scalar(1), Scalar(-1), Scalar(-1)});
  EXPECT_TRUE(contains(so2n_c(iso), flip));
  EXPECT_FALSE(contains(so2n1_c(iso), flip));
  EXPECT_EQ(violated_constraints(so2n1_c(iso), flip), std::vector<std::string>{"fixes_vector"});
}

TEST(Contains, NamesFollowReportVocabulary) {
  const StandardModel ps = projective_split_model(2);
  const StandardModel pq = projective_pq_model(2, 1);
  EXPECT_EQ(sp2n_c(ps).name, "Sp2nC");
  EXPECT_EQ(su_h(ps).name, "SU(n,n)");
  EXPECT_EQ(sp_real_form(ps).name, "Sp2nR");
  EXPECT_EQ(su_h(pq).name, "SU(2p,2q)");
  EXPECT_EQ(sp_real_form(pq).name, "Sp(2p,2q)");
  EXPECT_EQ(so34(quadric7_model()).name, "SO(3,4)");
  EXPECT_EQ(so_pq(isotropic_model(2, 2, 1)).name, "SO(p,q)");
  EXPECT_THROW(so7_c(ps), std::invalid_argument);
}

TEST(LieAlgebra, SymplecticDimensions) {
  for (size_t n = 1; n <= 3; ++n)
    EXPECT_EQ(lie_algebra_of(sp2n_c(projective_split_model(n))).dim(), n * (2 * n + 1));
}

TEST(LieAlgebra, OrthogonalDimensions) {
  for (size_t m = 2; m <= 6; ++m) EXPECT_EQ(lie_algebra_of(so_m(m)).dim(), m * (m - 1) / 2);
}

TEST(LieAlgebra, UnitaryRealDimensions) {
  for (size_t n = 1; n <= 2; ++n) {
    const LieAlgebraBasis su = lie_algebra_of(su_h(projective_split_model(n)));
    EXPECT_EQ(su.ground, Ground::real);
    EXPECT_EQ(su.dim(), 4 * n * n - 1);
  }
}

TEST(LieAlgebra, RealFormsMatchComplexDimensions) {
  const StandardModel ps = projective_split_model(2);
  const StandardModel pq = projective_pq_model(1, 1);
  const StandardModel qu = quadric7_model();
  const StandardModel iso = isotropic_model(3, 2, 3);
  const std::vector<std::pair<GroupSpec, GroupSpec>> pairs{
      {sp_real_form(ps), sp2n_c(ps)},
      {su_h(ps), sl_c(4, "SL2nC")},
      {sp_real_form(pq), sp2n_c(pq)},
      {su_h(pq), sl_c(4, "SL2nC")},
      {so34(qu), so7_c(qu)},
      {so_pq(iso), so2n1_c(iso)},
      {so_pq_hat(iso), so2n_c(iso)},
  };
  for (const auto& [real, cplx] : pairs) {
    const LieAlgebraBasis r = lie_algebra_of(real);
    const LieAlgebraBasis c = lie_algebra_of(cplx);
    EXPECT_EQ(r.ground, Ground::real) << real.name;
    EXPECT_EQ(c.ground, Ground::complex) << cplx.name;
    EXPECT_EQ(r.dim(), c.dim()) << real.name;
    // A real form spans the complex algebra over C.
    EXPECT_EQ(complexify(r).dim(), c.dim()) << real.name;
    for (const auto& x : r.elements) EXPECT_TRUE(in_span(c, x)) << real.name;
  }
}

TEST(LieAlgebra, BasisSatisfiesLinearizedConstraintsAndCloses) {
  for (const auto& grp : sample_groups()) {
    const LieAlgebraBasis a = lie_algebra_of(grp);
    EXPECT_TRUE(is_bracket_closed(a)) << grp.name;
    for (const auto& x : a.elements) {
      for (const auto& c : grp.constraints) {
        switch (c.kind) {
          case Constraint::Kind::preserves_bilinear:
            EXPECT_TRUE((x.transpose() * c.form->gram + c.form->gram * x).is_zero()) << grp.name;
            break;
          case Constraint::Kind::preserves_hermitian:
            EXPECT_TRUE((x.transpose() * c.form->gram + c.form->gram * x.conj()).is_zero()) << grp.name;
            break;
          case Constraint::Kind::det_equals_one:
            EXPECT_TRUE(x.trace().is_zero()) << grp.name;
            break;
          case Constraint::Kind::fixes_vector:
            EXPECT_TRUE(is_zero(x * c.vector)) << grp.name;
            break;
          case Constraint::Kind::real_entries:
            EXPECT_TRUE(x.is_real()) << grp.name;
            break;
        }
      }
    }
  }
}

// Nilpotent elements among combinations of at most three basis elements with unit coefficients.
std::vector<Matrix> nilpotent_elements(const LieAlgebraBasis& a) {
  std::vector<Matrix> out;
  const size_t d = a.dim();
  std::vector<Scalar> coeffs{Scalar(1), Scalar(-1)};
  if (a.ground == Ground::complex) coeffs.insert(coeffs.end(), {I, -I});
  for (size_t i = 0; i < d; ++i) {
    if (is_nilpotent(a.elements[i])) out.push_back(a.elements[i]);
    for (size_t j = i + 1; j < d; ++j)
      for (const Scalar& c : coeffs) {
        const Matrix x = a.elements[i] + c * a.elements[j];
        if (is_nilpotent(x)) out.push_back(x);
        for (size_t k = j + 1; k < d && out.size() < 8; ++k)
          for (const Scalar& c2 : coeffs) {
            const Matrix y = x + c2 * a.elements[k];
            if (is_nilpotent(y)) out.push_back(y);
          }
      }
    if (out.size() >= 8) break;
  }
  return out;
}

// X(w) = i h(w,u) u - i h(w,phi u) phi u for h-null u: preserves h and omega, and X^2 = 0.
Matrix quaternionic_nilpotent(const StandardModel& m, const Vector& u) {
  const Vector pu = phi(m, u);
  const std::vector<Vector> a{u}, b{m.E * conj(u)}, c{pu}, d{m.E * conj(pu)};
  return I * (Matrix::from_columns(a) * Matrix::from_columns(b).transpose()) -
         I * (Matrix::from_columns(c) * Matrix::from_columns(d).transpose());
}

TEST(LieAlgebra, QuaternionicNilpotent) {
  const StandardModel m = projective_pq_model(1, 1);
  const Vector u = unit_vector(4, 0) + unit_vector(4, 1);
  const Matrix x = quaternionic_nilpotent(m, u);
  EXPECT_TRUE(in_span(lie_algebra_of(sp_real_form(m)), x));
  EXPECT_TRUE((x * x).is_zero());
  EXPECT_TRUE(contains(sp_real_form(m), exp_nilpotent(x, Scalar::rational(3, 2))));
}

TEST(LieAlgebra, NilpotentExponentialsAreGroupElements) {
  Gen gen(12);
  for (const auto& grp : sample_groups()) {
    const LieAlgebraBasis a = lie_algebra_of(grp);
    const std::vector<Matrix> nil = nilpotent_elements(a);
    // Sp(2,2) has no nilpotent element of this sparse shape; it is covered by QuaternionicNilpotent.
    if (grp.name == "Sp(2p,2q)") continue;
    ASSERT_FALSE(nil.empty()) << grp.name;
    for (size_t k = 0; k < nil.size() && k < 6; ++k) {
      const Scalar t = gen.rational(4);
      EXPECT_TRUE(contains(grp, exp_nilpotent(nil[k], t))) << grp.name;
    }
  }
}

TEST(ExpNilpotent, Basics) {
  const Matrix x = Matrix::unit(2, 2, 0, 1);
  EXPECT_EQ(exp_nilpotent(x, Scalar(3)), Matrix::from_rows({{1, 3}, {0, 1}}));
  EXPECT_EQ(exp_nilpotent(Matrix(3, 3), Scalar(5)), Matrix::identity(3));
  EXPECT_THROW(exp_nilpotent(Matrix::identity(2), Scalar(1)), std::domain_error);
}

TEST(Isotropy, Codimensions) {
  const LieAlgebraBasis gl3 = gl_algebra(3);
  EXPECT_EQ(gl3.dim() - isotropy_subalgebra(gl3, line(unit_vector(3, 0))).dim(), 2u);
  Gen gen(5);
  for (size_t n = 1; n <= 3; ++n) {
    const LieAlgebraBasis sp = lie_algebra_of(sp2n_c(projective_split_model(n)));
    const Vector z = gen.vector(2 * n);
    EXPECT_EQ(sp.dim() - isotropy_subalgebra(sp, line(z)).dim(), 2 * n - 1);
  }
  for (size_t n = 2; n <= 3; ++n) {
    const LieAlgebraBasis so = lie_algebra_of(so2n1_c(isotropic_model(n, 1, 2 * n - 2)));
    EXPECT_EQ(so.dim() - isotropy_subalgebra(so, isotropic_normal_plane(n)).dim(), n * (n - 1) / 2);
  }
}

TEST(Isotropy, IsSubalgebra) {
  const LieAlgebraBasis sp = lie_algebra_of(sp2n_c(projective_split_model(2)));
  const LieAlgebraBasis q = isotropy_subalgebra(sp, line(unit_vector(4, 0) + unit_vector(4, 3)));
  EXPECT_TRUE(is_bracket_closed(q));
  for (const auto& x : q.elements) EXPECT_TRUE(in_span(sp, x));
  const LieAlgebraBasis su = lie_algebra_of(su_h(projective_split_model(1)));
  const LieAlgebraBasis qs = isotropy_subalgebra(su, line(unit_vector(2, 0)));
  EXPECT_EQ(qs.ground, Ground::real);
  EXPECT_EQ(qs.dim(), 1u);
  EXPECT_TRUE(is_bracket_closed(qs));
}

TEST(Onishchik, ProjectiveTriples) {
  for (size_t n = 1; n <= 3; ++n) {
    const StandardModel m = projective_split_model(n);
    const LieAlgebraBasis sp = lie_algebra_of(sp2n_c(m));
    const LieAlgebraBasis sl = lie_algebra_of(sl_c(2 * n, "SL2nC"));
    const OnishchikReport r = check_onishchik_triple(sp, sl, line(unit_vector(2 * n, 0)));
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.quotient_small, 2 * n - 1);
    EXPECT_EQ(r.quotient_big, 2 * n - 1);
  }
}

TEST(Onishchik, IsotropicTriples) {
  for (size_t n = 2; n <= 3; ++n) {
    const StandardModel m = isotropic_model(n, 1, 2 * n - 2);
    const OnishchikReport r = check_onishchik_triple(lie_algebra_of(so2n1_c(m)), lie_algebra_of(so2n_c(m)),
                                                     isotropic_normal_plane(n));
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.quotient_small, n * (n - 1) / 2);
  }
}

TEST(Onishchik, RejectsNonInclusion) {
  const StandardModel m = projective_split_model(1);
  EXPECT_THROW(check_onishchik_triple(gl_algebra(2), lie_algebra_of(sp2n_c(m)), line(unit_vector(2, 0))),
               std::invalid_argument);
}

TEST(Onishchik, DetectsNonTransitiveSubalgebra) {
  // so2 inside gl2 at e1: quotients differ, so the report must not pass.
  const LieAlgebraBasis so2 = lie_algebra_of(so_m(2));
  const OnishchikReport r = check_onishchik_triple(so2, gl_algebra(2), line(unit_vector(2, 0)));
  EXPECT_TRUE(r.isotropy_is_intersection);
  EXPECT_EQ(r.quotient_small, 1u);
  EXPECT_TRUE(r.quotients_equal);
  const OnishchikReport r2 = check_onishchik_triple(lie_algebra_of(so_m(3)), gl_algebra(3),
                                                    line(unit_vector(3, 0) + I * unit_vector(3, 1)));
  EXPECT_FALSE(r2.quotients_equal);
}

}  // namespace
}  // namespace flagcert
