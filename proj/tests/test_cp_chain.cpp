#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rbd/cp_chain.hpp"

using namespace rbd;
using oracle::cvs;

TEST(Verify, ThreeChainAtA3Passes) {
  const auto f = oracle::family(1, 3);
  const auto rep = verify_cp_configuration(cvs(f.classes), 3);
  EXPECT_TRUE(rep.passed);
  EXPECT_FALSE(rep.first_violation.has_value());
  EXPECT_TRUE(rep.violations.empty());
  EXPECT_EQ(rep.gram, (IntMatrix{{-2, 1}, {1, -5}}));
}

TEST(Verify, FormulaAtA12FailsOnFirstAndLast) {
  const auto f = oracle::family(1, 12);
  ASSERT_EQ(f.n, 38u);
  ASSERT_EQ(f.p, 39);
  const auto rep = verify_cp_configuration(cvs(f.classes), 39);
  EXPECT_FALSE(rep.passed);
  ASSERT_TRUE(rep.first_violation.has_value());
  const auto& v = *rep.first_violation;
  EXPECT_EQ(v.kind, ConstraintKind::distant_pairing);
  EXPECT_EQ(v.i, 1u);
  EXPECT_EQ(v.j, 38u);
  EXPECT_EQ(v.expected, 0);
  EXPECT_EQ(v.actual, 9);
  EXPECT_EQ(rep.violations.size(), 1u);
}

TEST(Verify, WrongSquareForP2) {
  const std::vector<ClassVector> c{ClassVector{2, -1, -1, -1, -1, -1}};
  const auto rep = verify_cp_configuration(c, 2);
  EXPECT_FALSE(rep.passed);
  ASSERT_TRUE(rep.first_violation);
  EXPECT_EQ(rep.first_violation->kind, ConstraintKind::square);
  EXPECT_EQ(rep.first_violation->expected, -4);
  EXPECT_EQ(rep.first_violation->actual, -1);
}

TEST(Verify, ScanOrderSquaresFirst) {
  // u1 has the wrong square and u1.u2 is also wrong; the square is reported first.
  const std::vector<ClassVector> c{ClassVector{0, 1, 0, 0, 0, 0, 0}, ClassVector{0, 1, 1, 1, 1, 1, 0}};
  const auto rep = verify_cp_configuration(c, 3);
  ASSERT_TRUE(rep.first_violation);
  EXPECT_EQ(rep.first_violation->kind, ConstraintKind::square);
  EXPECT_EQ(rep.first_violation->i, 1u);
  ASSERT_GE(rep.violations.size(), 2u);
  EXPECT_EQ(rep.violations.back().kind, ConstraintKind::consecutive_pairing);
}

TEST(Verify, Errors) {
  const auto f = oracle::family(1, 3);
  EXPECT_THROW(verify_cp_configuration(cvs(f.classes), 4), ArityError);
  EXPECT_THROW(verify_cp_configuration(cvs(f.classes), 1), DomainError);
  const std::vector<ClassVector> mixed{ClassVector{0, 1, -1}, ClassVector{0, 1}};
  EXPECT_THROW(verify_cp_configuration(mixed, 3), DimensionMismatch);
  EXPECT_THROW(verify_cp_configuration({}, 2), ArityError);
}

TEST(Verify, ReversalFails) {
  for (long p = 3; p <= 8; ++p) {
    auto c = standard_configuration(p);
    ASSERT_TRUE(verify_cp_configuration(c, p).passed) << p;
    std::reverse(c.begin(), c.end());
    EXPECT_FALSE(verify_cp_configuration(c, p).passed) << p;
  }
}

TEST(CpConfiguration, VerifiedFactory) {
  const auto f = oracle::family(1, 4);
  const auto cfg = CpConfiguration::verified(cvs(f.classes), 7);
  EXPECT_EQ(cfg.p(), 7);
  EXPECT_EQ(cfg.size(), 6u);
  EXPECT_EQ(cfg.lattice().n, 14u);
  EXPECT_EQ(cfg.long_class(), oracle::cv(f.classes.back()));
  auto bad = cvs(f.classes);
  bad[0][0] += 1;
  EXPECT_THROW(CpConfiguration::verified(bad, 7), PreconditionError);
}

TEST(LensSpace, Examples) {
  EXPECT_EQ(lens_space_cf(2), (std::vector<long>{4}));
  EXPECT_EQ(lens_space_cf(3), (std::vector<long>{5, 2}));
  EXPECT_EQ(lens_space_cf(5), (std::vector<long>{7, 2, 2, 2}));
  EXPECT_THROW(lens_space_cf(1), DomainError);
  EXPECT_THROW(lens_space_cf(-3), DomainError);
}

TEST(LensSpace, EvaluateNegativeCf) {
  const std::vector<long> t{7, 2, 2, 2};
  EXPECT_EQ(evaluate_negative_cf(t), Rational(25, 4));
  const std::vector<long> single{4};
  EXPECT_EQ(evaluate_negative_cf(single), Rational(4));
  EXPECT_THROW(evaluate_negative_cf({}), DomainError);
}

TEST(IntersectionMatrix, Examples) {
  const auto f3 = oracle::family(1, 3);
  const auto q3 = intersection_matrix(cvs(f3.classes));
  EXPECT_EQ(q3, (IntMatrix{{-2, 1}, {1, -5}}));
  EXPECT_EQ(abs(determinant(q3)), 9);

  const auto c2 = standard_configuration(2);
  const auto q2 = intersection_matrix(c2);
  EXPECT_EQ(q2, IntMatrix{{-4}});
  EXPECT_EQ(abs(determinant(q2)), 4);

  const auto f4 = oracle::family(1, 4);
  const auto q7 = intersection_matrix(cvs(f4.classes));
  ASSERT_EQ(q7.rows(), 6u);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(q7(i, j), oracle::cp_entry(7, i, j)) << i << "," << j;
  EXPECT_EQ(q7(5, 5), -9);
  EXPECT_EQ(abs(determinant(q7)), 49);
}

TEST(BoundaryGroup, CyclicOfOrderPSquared) {
  for (long p = 2; p <= 12; ++p) {
    const auto bg = boundary_group(intersection_matrix(standard_configuration(p)));
    EXPECT_EQ(bg.order, p * p) << p;
    EXPECT_TRUE(bg.cyclic) << p;
    EXPECT_EQ(bg.divisors.back(), p * p);
  }
}

TEST(BoundaryGroup, SingularAndNonCyclic) {
  const auto sing = boundary_group(IntMatrix{{0, 0}, {0, -2}});
  EXPECT_EQ(sing.order, 0);
  const auto two = boundary_group(IntMatrix{{-2, 0}, {0, -2}});
  EXPECT_EQ(two.order, 4);
  EXPECT_FALSE(two.cyclic);
}

TEST(StandardConfiguration, ShapeAndErrors) {
  const auto c = standard_configuration(4);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].lattice().n, 8u);
  EXPECT_EQ(c[2].to_string(), "e3+e4+e5+e6+e7+e8");
  EXPECT_THROW(standard_configuration(1), DomainError);
}
