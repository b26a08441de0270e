#include <gtest/gtest.h>

#include "flagcert/forms.hpp"
#include "test_support.hpp"

namespace flagcert {
namespace {

using testing::Gen;

const Scalar I = Scalar::i();

Vector e(size_t n, size_t k) { return unit_vector(n, k); }

Subspace line(const Vector& v) {
  const std::vector<Vector> g{v};
  return Subspace::span(g, v.size());
}

TEST(Evaluate, Examples) {
  const StandardModel m = projective_split_model(1);
  EXPECT_EQ(evaluate(m.b, e(2, 0), e(2, 0)), Scalar(1));
  EXPECT_EQ(evaluate(*m.omega, e(2, 0), e(2, 1)), Scalar(-1));
  EXPECT_EQ(evaluate(m.h, e(2, 1), e(2, 1)), Scalar(-1));
  EXPECT_THROW(evaluate(m.b, e(3, 0), e(2, 0)), std::invalid_argument);
}

TEST(Evaluate, HermitianIsConjugateLinearInSecondSlot) {
  const StandardModel m = projective_split_model(2);
  Gen gen(3);
  const Vector z = gen.vector(4), w = gen.vector(4);
  const Scalar c = gen.gaussian();
  EXPECT_EQ(evaluate(m.h, z, c * w), c.conj() * evaluate(m.h, z, w));
  EXPECT_EQ(evaluate(m.h, c * z, w), c * evaluate(m.h, z, w));
  EXPECT_EQ(evaluate(m.h, w, z), evaluate(m.h, z, w).conj());
}

TEST(FormSpec, RejectsWrongSymmetryAndDegenerate) {
  EXPECT_THROW(FormSpec::make(FormKind::symmetric, Matrix::from_rows({{0, 1}, {-1, 0}})), std::invalid_argument);
  EXPECT_THROW(FormSpec::make(FormKind::hermitian, Matrix::from_rows({{1, I}, {I, 1}})), std::invalid_argument);
  EXPECT_THROW(FormSpec::make(FormKind::symmetric, Matrix::from_rows({{1, 1}, {1, 1}})), std::invalid_argument);
  EXPECT_NO_THROW(FormSpec::make(FormKind::hermitian, Matrix::from_rows({{1, I}, {-I, -1}})));
}

TEST(Phi, Examples) {
  const StandardModel m = projective_split_model(1);
  EXPECT_EQ(phi(m, e(2, 0)), Scalar(-1) * e(2, 1));
  // E conj(e2) = -e2, J(-e2) = e1, negated.
  EXPECT_EQ(phi(m, e(2, 1)), Scalar(-1) * e(2, 0));
  EXPECT_THROW(phi(quadric7_model(), e(7, 0)), std::invalid_argument);
}

TEST(Phi, IsAntilinear) {
  const StandardModel m = projective_pq_model(2, 1);
  Gen gen(8);
  const Vector z = gen.vector(6);
  const Scalar c = gen.gaussian();
  EXPECT_EQ(phi(m, c * z), c.conj() * phi(m, z));
}

class ProjectiveModels : public ::testing::TestWithParam<StandardModel> {};

TEST_P(ProjectiveModels, StructureIdentities) {
  const StandardModel& m = GetParam();
  const Matrix id = Matrix::identity(m.dim);
  EXPECT_EQ(m.J * m.J, -id);
  EXPECT_EQ(m.J.transpose() * m.J, id);
  EXPECT_EQ(m.omega->gram, m.J);
  for (size_t i = 0; i < m.n; ++i) {
    EXPECT_EQ(m.J * e(m.dim, i), e(m.dim, m.n + i));
    EXPECT_EQ(m.J * e(m.dim, m.n + i), Scalar(-1) * e(m.dim, i));
  }
}

TEST_P(ProjectiveModels, PhiRelations) {
  const StandardModel& m = GetParam();
  // J E is an involution in the split model and squares to -Id in the signature model.
  const Scalar sign = m.kind == ModelCase::projective_split ? Scalar(-1) : Scalar(1);
  Gen gen(m.dim * 17 + m.p);
  for (int trial = 0; trial < 20; ++trial) {
    const Vector z = gen.vector(m.dim), w = gen.vector(m.dim);
    EXPECT_EQ(phi(m, phi(m, z)), Scalar(-1) * sign * z);
    EXPECT_EQ(evaluate(m.h, z, w), evaluate(*m.omega, z, phi(m, w)));
    EXPECT_EQ(evaluate(m.h, phi(m, z), phi(m, w)), sign * evaluate(m.h, z, w).conj());
    EXPECT_TRUE(evaluate(m.h, z, phi(m, z)).is_zero());
  }
}

TEST_P(ProjectiveModels, PerpOfPhiStablePlane) {
  const StandardModel& m = GetParam();
  Gen gen(m.dim * 31 + m.q);
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Vector z = gen.vector(m.dim);
    if (evaluate(m.h, z, z).is_zero()) continue;
    const std::vector<Vector> gens{z, phi(m, z)};
    const Subspace p = Subspace::span(gens, m.dim);
    ASSERT_EQ(p.dim(), 2u);
    const Subspace ph = perp(m.h, p);
    EXPECT_TRUE(column_space_equal(ph, perp(*m.omega, p)));
    EXPECT_EQ(ph.dim(), m.dim - 2);
    EXPECT_EQ(intersect(p, ph).dim(), 0u);
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

INSTANTIATE_TEST_SUITE_P(Forms, ProjectiveModels,
                         ::testing::Values(projective_split_model(1), projective_split_model(2),
                                           projective_split_model(3), projective_pq_model(1, 1),
                                           projective_pq_model(2, 1)));

TEST(Perp, Examples) {
  const FormSpec b = FormSpec::make(FormKind::symmetric, Matrix::identity(2));
  EXPECT_TRUE(column_space_equal(perp(b, line(e(2, 0))), line(e(2, 1))));
  const StandardModel m = projective_split_model(1);
  EXPECT_TRUE(column_space_equal(perp(*m.omega, line(e(2, 0))), line(e(2, 0))));
  EXPECT_EQ(perp(b, Subspace::zero(2)).dim(), 2u);
}

TEST(Perp, HermitianUsesConjugateCoordinates) {
  const FormSpec h = FormSpec::make(FormKind::hermitian, Matrix::identity(2));
  const Subspace p = perp(h, line(Vector{Scalar(1), I}));
  // h((1,i), w) = conj(w1) + i conj(w2) vanishes exactly on w = (i, 1).
  EXPECT_TRUE(column_space_equal(p, line(Vector{I, Scalar(1)})));
}

TEST(Perp, FixedVectorIsOrthogonalToV) {
  for (auto [n, p, q] : {std::tuple{2, 2, 1}, {2, 1, 2}, {3, 2, 3}, {3, 3, 2}}) {
    const StandardModel m = isotropic_model(n, p, q);
    std::vector<Vector> v;
    for (size_t k = 0; k + 1 < m.dim; ++k) v.push_back(e(m.dim, k));
    const Subspace vv = Subspace::span(v, m.dim);
    EXPECT_TRUE(column_space_equal(perp(m.h, vv), line(m.fixed)));
    EXPECT_TRUE(column_space_equal(perp(m.b, vv), line(m.fixed)));
  }
}

TEST(IsotropicModel, ExtendedSignature) {
  EXPECT_EQ(hermitian_signature(isotropic_model(2, 2, 1).h.gram), (Signature{2, 2, 0}));
  EXPECT_EQ(hermitian_signature(isotropic_model(2, 1, 2).h.gram), (Signature{2, 2, 0}));
  EXPECT_EQ(hermitian_signature(isotropic_model(3, 2, 3).h.gram), (Signature{2, 4, 0}));
  EXPECT_EQ(hermitian_signature(isotropic_model(3, 3, 2).h.gram), (Signature{4, 2, 0}));
  EXPECT_THROW(isotropic_model(2, 2, 2), std::invalid_argument);
}

TEST(IsotropicModel, SignaturePresentationIsCongruentToStandard) {
  for (auto [n, p, q] : {std::tuple{2, 2, 1}, {2, 1, 2}, {3, 2, 3}, {3, 3, 2}, {4, 4, 3}}) {
    const StandardModel m = isotropic_model(n, p, q);
    const Matrix& d = m.to_standard;
    // b(Dz, Dw) in the standard form equals the signature presentation of b.
    EXPECT_EQ(d.transpose() * m.b.gram * d, m.b_signature->gram);
    // The Hermitian form is diagonal with unimodular D, so it reads the same in both coordinates.
    EXPECT_EQ(d.transpose() * m.h.gram * d.conj(), m.h.gram);
  }
}

TEST(RestrictGram, Examples) {
  const StandardModel m = quadric7_model();
  EXPECT_EQ(restrict_gram(m.b, line(m.z_plus)), Matrix::diagonal({Scalar(0)}));
  EXPECT_EQ(restrict_gram(m.h, line(m.z_plus)), Matrix::diagonal({Scalar(2)}));
  const Matrix empty = restrict_gram(m.b, Subspace::zero(7));
  EXPECT_EQ(empty.rows(), 0u);
  EXPECT_EQ(empty.cols(), 0u);
}

TEST(IsIsotropic, Examples) {
  const StandardModel m = quadric7_model();
  EXPECT_TRUE(is_isotropic(m.b, line(m.z_plus)));
  EXPECT_TRUE(is_isotropic(m.b, line(m.z_minus)));
  EXPECT_FALSE(is_isotropic(FormSpec::make(FormKind::symmetric, Matrix::identity(3)), line(e(3, 0))));
  for (size_t n = 1; n <= 4; ++n) {
    std::vector<Vector> g;
    for (size_t k = 0; k < n; ++k) g.push_back(e(2 * n, k) + I * e(2 * n, n + k));
    const StandardModel iso = isotropic_model(n, 1, 2 * n - 2);
    EXPECT_TRUE(is_isotropic(iso.b, Subspace::span(g, 2 * n)));
  }
}

TEST(Quadric, Grams) {
  const StandardModel m = quadric7_model();
  EXPECT_EQ(m.b.gram, e_pq(3, 4));
  EXPECT_EQ(m.h.gram, e_pq(3, 4));
  EXPECT_EQ(hermitian_signature(m.h.gram), (Signature{3, 4, 0}));
}

}  // namespace
}  // namespace flagcert
