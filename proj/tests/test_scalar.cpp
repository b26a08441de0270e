#include <gtest/gtest.h>

#include "flagcert/scalar.hpp"
#include "test_support.hpp"

namespace flagcert {
namespace {

using testing::Gen;

TowerPtr two_level_tower() {
  TowerPtr t = Tower::adjoin(nullptr, Scalar(2));
  // 1 + sqrt(2) is positive and not a square in Q(i)(sqrt 2).
  return Tower::adjoin(t, Scalar(1) + Scalar::generator(t));
}

TEST(GaussQ, TextFormat) {
  GaussQ g(mpq_class(1, 2), mpq_class(-3, 4));
  EXPECT_EQ(g.to_text(), "1/2-3/4*i");
  EXPECT_EQ(GaussQ::from_text("1/2-3/4*i"), g);
  EXPECT_EQ(GaussQ::from_text("2/4+0/7*i").to_text(), "1/2+0/1*i");
  EXPECT_EQ(GaussQ::from_text("1/1+-1/1*i"), GaussQ(mpq_class(1), mpq_class(-1)));
  EXPECT_THROW(GaussQ::from_text("1/0+0/1*i"), std::invalid_argument);
  EXPECT_THROW(GaussQ::from_text("1.5"), std::invalid_argument);
}

TEST(Scalar, BaseArithmetic) {
  const Scalar i = Scalar::i();
  EXPECT_EQ(i * i, Scalar(-1));
  EXPECT_EQ((Scalar(1) + i) * (Scalar(1) - i), Scalar(2));
  EXPECT_EQ(Scalar(3) / Scalar(6), Scalar::rational(1, 2));
  EXPECT_EQ((Scalar(2) + i).inverse(), Scalar::rational(2, 5) - Scalar::rational(1, 5) * i);
  EXPECT_THROW(Scalar().inverse(), std::domain_error);
}

TEST(Scalar, SqrtSquaredIsRadicand) {
  TowerPtr t;
  Scalar r = sqrt_adjoining(Scalar(2), t);
  ASSERT_EQ(tower_depth(t), 1);
  EXPECT_EQ(r * r, Scalar(2));
  EXPECT_EQ(r.sign(), 1);

  // sqrt(1/3) lands in Q(sqrt 3) as sqrt(3)/3, and sqrt(8) reuses sqrt(2).
  Scalar s = sqrt_adjoining(Scalar::rational(1, 3), t);
  EXPECT_EQ(tower_depth(t), 2);
  EXPECT_EQ(s * s, Scalar::rational(1, 3));
  Scalar e = sqrt_adjoining(Scalar(8), t);
  EXPECT_EQ(tower_depth(t), 2);
  EXPECT_EQ(e, Scalar(2) * r);
  // sqrt(6) = sqrt(2) * sqrt(3) is found without adjoining.
  Scalar six = sqrt_adjoining(Scalar(6), t);
  EXPECT_EQ(tower_depth(t), 2);
  EXPECT_EQ(six * six, Scalar(6));
}

TEST(Scalar, NestedRadicand) {
  TowerPtr t = two_level_tower();
  Scalar g = Scalar::generator(t);
  EXPECT_EQ(g * g, t->radicand());
  EXPECT_EQ(g.sign(), 1);
  // (1 + sqrt 2)^2 = 3 + 2 sqrt 2 has a root in Q(sqrt 2).
  Scalar r2 = Scalar::generator(t->parent());
  auto root = sqrt_in(t->parent(), Scalar(3) + Scalar(2) * r2);
  ASSERT_TRUE(root.has_value());
  EXPECT_EQ(*root, Scalar(1) + r2);
}

TEST(Scalar, RefusesRedundantAdjunction) {
  EXPECT_THROW(Tower::adjoin(nullptr, Scalar(4)), std::invalid_argument);
  EXPECT_THROW(Tower::adjoin(nullptr, Scalar(-2)), std::invalid_argument);
  TowerPtr t = Tower::adjoin(nullptr, Scalar(2));
  EXPECT_THROW(Tower::adjoin(t, Scalar(8)), std::invalid_argument);
  EXPECT_THROW(Tower::adjoin(t, Scalar(3) + Scalar(2) * Scalar::generator(t)), std::invalid_argument);
}

TEST(Scalar, IncompatibleTowersAreRejected) {
  TowerPtr a = Tower::adjoin(nullptr, Scalar(2));
  TowerPtr b = Tower::adjoin(nullptr, Scalar(3));
  EXPECT_THROW(Scalar::generator(a) + Scalar::generator(b), std::invalid_argument);
  EXPECT_THROW((void)(Scalar::generator(a) == Scalar::generator(b)), std::invalid_argument);
}

TEST(Scalar, SignOfMixedTerms) {
  TowerPtr t = Tower::adjoin(nullptr, Scalar(2));
  Scalar r = Scalar::generator(t);
  EXPECT_EQ((Scalar(3) - Scalar(2) * r).sign(), 1);    // 3 > 2.828
  EXPECT_EQ((Scalar(-3) + Scalar(2) * r).sign(), -1);
  EXPECT_EQ((Scalar(1) - r).sign(), -1);
  EXPECT_THROW((Scalar::i() * r).sign(), std::domain_error);
}

TEST(ScalarProperty, FieldAxioms) {
  Gen gen(17);
  TowerPtr t = two_level_tower();
  for (int k = 0; k < 60; ++k) {
    Scalar a = gen.in_tower(t), b = gen.in_tower(t), c = gen.in_tower(t);
    if (!a.is_zero()) EXPECT_EQ((a * b) * a.inverse(), b);
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a.real_part() + Scalar::i() * a.imag_part(), a);
  }
}

TEST(ScalarProperty, SqrtOfSquares) {
  Gen gen(5);
  TowerPtr t = two_level_tower();
  for (int k = 0; k < 30; ++k) {
    Scalar a = gen.in_tower(t).real_part();
    if (a.is_zero()) continue;
    auto r = sqrt_in(t, a * a);
    ASSERT_TRUE(r.has_value()) << a.to_string();
    EXPECT_EQ(*r * *r, a * a);
    EXPECT_EQ(r->sign(), 1);
  }
}

TEST(ScalarProperty, CanonicalRepresentation) {
  TowerPtr t = Tower::adjoin(nullptr, Scalar(2));
  Scalar r = Scalar::generator(t);
  Scalar two = r * r;
  EXPECT_EQ(two.depth(), 0);
  EXPECT_EQ(two, Scalar(2));
  EXPECT_EQ((r - r).depth(), 0);
}

}  // namespace
}  // namespace flagcert
