#include <gtest/gtest.h>

#include "flagcert/io.hpp"
#include "flagcert/sampling.hpp"
#include "test_support.hpp"

namespace flagcert {
namespace {

using testing::Gen;

TEST(ScalarJson, BaseLevelText) {
  EXPECT_EQ(scalar_to_json(Scalar::rational(1, 2) - Scalar::i() * Scalar(3)), "1/2-3/1*i");
  EXPECT_EQ(scalar_to_json(Scalar()), "0/1+0/1*i");
  TowerInterner t;
  EXPECT_EQ(scalar_from_json("-4/6+2/1*i", t), Scalar::rational(-2, 3) + Scalar::i() * Scalar(2));
  EXPECT_THROW(scalar_from_json("1/0+0/1*i", t), std::invalid_argument);
  EXPECT_THROW(scalar_from_json("1.5", t), std::invalid_argument);
}

TEST(ScalarJson, TowerExample) {
  TowerPtr tower;
  const Scalar r2 = sqrt_adjoining(Scalar(2), tower);
  const Scalar x = Scalar(1) + Scalar::rational(1, 2) * r2;
  const Json j = scalar_to_json(x);
  EXPECT_EQ(j.dump(), R"({"radicands":[2],"coords":["1/1+0/1*i","1/2+0/1*i"]})");
  TowerInterner fresh;
  EXPECT_EQ(scalar_to_json(scalar_from_json(j, fresh)).dump(), j.dump());
  TowerInterner in;
  in.adopt(tower);
  const Scalar y = scalar_from_json(j, in);
  EXPECT_EQ(y, x);
  EXPECT_EQ(y.tower(), tower);
}

TEST(ScalarJson, NestedRadicandsRoundTrip) {
  TowerPtr tower;
  const Scalar r2 = sqrt_adjoining(Scalar(2), tower);
  const Scalar r3 = sqrt_adjoining(Scalar(3) + r2, tower);
  const Scalar r5 = sqrt_adjoining(Scalar::rational(5, 7), tower);
  Gen g(4);
  TowerInterner in;
  for (int t = 0; t < 10; ++t) {
    const Scalar x = g.in_tower(tower) + r3 * r5;
    const Json j = scalar_to_json(x);
    const Scalar y = scalar_from_json(j, in);
    EXPECT_EQ(scalar_to_json(y).dump(), j.dump());
    // Decoded scalars share one interned tower and combine without branch conflicts.
    EXPECT_EQ(y - scalar_from_json(j, in), Scalar());
  }
  EXPECT_EQ(radicands_to_json(tower).dump(), R"([2,["3/1+0/1*i","1/1+0/1*i"],35])");
}

TEST(ScalarJson, RejectsBadTowers) {
  TowerInterner in;
  EXPECT_THROW(in.intern(Json::parse("[4]")), std::invalid_argument);   // already a square
  EXPECT_THROW(in.intern(Json::parse("[-2]")), std::invalid_argument);  // not positive
  EXPECT_THROW(scalar_from_json(Json::parse(R"({"radicands":[2],"coords":["1/1+0/1*i"]})"), in),
               std::invalid_argument);
}

TEST(MatrixJson, RoundTrip) {
  Gen g(9);
  TowerPtr tower;
  sqrt_adjoining(Scalar(3), tower);
  for (int t = 0; t < 5; ++t) {
    Matrix m = g.matrix(3, 4);
    if (t % 2) m(1, 2) = g.in_tower(tower);
    const Json j = matrix_to_json(m);
    TowerInterner in;
    in.adopt(tower);
    const Matrix back = matrix_from_json(j, in);
    EXPECT_EQ(back, m);
    EXPECT_EQ(matrix_to_json(back).dump(), j.dump());
    EXPECT_EQ(Json::parse(j.dump()), j);
  }
  TowerInterner in;
  EXPECT_EQ(matrix_from_json(matrix_to_json(Matrix(0, 0)), in), Matrix(0, 0));
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"rows":1,"cols":2,"radicands":[],"entries":[["0/1+0/1*i"]]})"), in),
               std::invalid_argument);
}

TEST(GroupJson, RoundTripPreservesMembership) {
  const StandardModel m = isotropic_model(2, 2, 1);
  const GroupSpec g = so_pq(m);
  TowerInterner in;
  const GroupSpec back = group_from_json(group_to_json(g), in);
  EXPECT_EQ(group_to_json(back).dump(), group_to_json(g).dump());
  const Witness w = isotropic_normal_form_real(m, real_normal_form(m));
  EXPECT_TRUE(contains(back, w.element));
  EXPECT_FALSE(contains(back, Scalar(2) * Matrix::identity(4)));
}

TEST(WitnessJson, RoundTripReverifies) {
  const StandardModel m = projective_split_model(2);
  Rng rng(5);
  for (int t = 0; t < 4; ++t) {
    const Vector z = random_line_with_sign(rng, m, 1, 3), zt = random_line_with_sign(rng, m, 1, 3);
    const Witness w = transport_positive_line_sp(m, z, zt);
    ASSERT_TRUE(w.verified);
    const Json j = witness_to_json(w);
    EXPECT_EQ(j["schema"], kWitnessSchema);
    EXPECT_EQ(j["radicands"], radicands_to_json(matrix_tower(w.element)));
    TowerInterner in;
    in.adopt(matrix_tower(w.element));
    const Witness back = witness_from_json(Json::parse(j.dump()), in);
    EXPECT_EQ(back.element, w.element);
    EXPECT_FALSE(back.verified);
    EXPECT_TRUE(verify_witness(back));
    EXPECT_EQ(witness_to_json(back).dump(), j.dump());
  }
}

TEST(WitnessJson, PerturbedEntryFails) {
  const StandardModel m = projective_split_model(1);
  const Witness w = transport_positive_line_sp(m, unit_vector(2, 0), Scalar(2) * unit_vector(2, 0) + unit_vector(2, 1));
  Witness p = w;
  p.element(0, 0) += Scalar(1);
  TowerInterner in;
  EXPECT_FALSE(verify_witness(witness_from_json(witness_to_json(p), in)));
  Json j = witness_to_json(w);
  j["schema"] = "other/1";
  EXPECT_THROW(witness_from_json(j, in), std::invalid_argument);
}

TEST(Sampling, Deterministic) {
  const StandardModel m = isotropic_model(3, 2, 3);
  Rng a(11), b(11);
  EXPECT_TRUE(column_space_equal(scramble_real(a, m, 3), scramble_real(b, m, 3)));
  EXPECT_EQ(random_vector(a, 5, 4), random_vector(b, 5, 4));
  Rng r(1);
  for (int t = 0; t < 100; ++t) {
    const int64_t x = r.uniform(-3, 3);
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 3);
  }
  EXPECT_THROW(random_vector(r, 3, 0), std::invalid_argument);
}

TEST(Sampling, ScramblesStayOnTheManifold) {
  Rng rng(2);
  for (auto [n, p, q] : {std::tuple{2, 2, 1}, {3, 3, 2}}) {
    const StandardModel m = isotropic_model(n, p, q);
    const Subspace c = scramble_complex(rng, m, 3);
    const Subspace r = scramble_real(rng, m, 3);
    EXPECT_TRUE(is_isotropic(m.b, c));
    EXPECT_TRUE(is_isotropic(m.b, r));
    EXPECT_TRUE(same_family(c, complex_normal_form(n)));
    EXPECT_TRUE(same_family(r, real_normal_form(m)));
  }
}

TEST(Sampling, BoundaryPlanes) {
  for (auto [n, p, q] : {std::tuple{2, 2, 1}, {2, 1, 2}, {3, 2, 3}, {3, 3, 2}, {4, 4, 3}}) {
    const StandardModel m = isotropic_model(n, p, q);
    const Subspace a = boundary_plane(m, false), b = boundary_plane(m, true);
    for (const Subspace& w : {a, b}) {
      EXPECT_EQ(w.dim(), m.n);
      EXPECT_TRUE(is_isotropic(m.b, w));
      EXPECT_GT(hermitian_signature(restrict_gram(m.h, w)).zero, 0u);
    }
    EXPECT_NE(same_family(a, real_normal_form(m)), same_family(b, real_normal_form(m)));
  }
  EXPECT_THROW(boundary_plane(isotropic_model(2, 3, 0), false), std::invalid_argument);
}

}  // namespace
}  // namespace flagcert
