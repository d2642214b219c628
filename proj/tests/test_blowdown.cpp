#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rbd/blowdown.hpp"
#include "rbd/families.hpp"

using namespace rbd;
using oracle::cv;
using oracle::cvs;

namespace {

struct Case {
  AmbientManifoldData X;
  CpConfiguration cfg;
  oracle::Family data;
};

Case family_case(int fam, int a) {
  auto f = oracle::family(fam, a);
  return Case{AmbientManifoldData{AmbientLattice{f.n}}, CpConfiguration::verified(cvs(f.classes), f.p), f};
}

// C_2 spanned by 2e_1: not primitive, so no class pairs oddly with it.
CpConfiguration imprimitive_c2() { return CpConfiguration::verified({ClassVector{0, 2, 0}}, 2); }

}  // namespace

TEST(AmbientManifold, DerivedFields) {
  const AmbientManifoldData X{AmbientLattice{11}};
  EXPECT_EQ(X.b2_plus(), 1);
  EXPECT_EQ(X.b2_minus(), 11);
  EXPECT_EQ(X.euler(), 14);
  EXPECT_EQ(X.signature(), -10);
}

TEST(Invariants, Examples) {
  const auto c3 = family_case(1, 3);
  const auto i3 = blowdown_invariants(c3.X, c3.cfg);
  EXPECT_EQ(i3.b2_plus, 1);
  EXPECT_EQ(i3.b2_minus, 9);
  EXPECT_EQ(i3.signature, -8);
  EXPECT_EQ(i3.euler, 12);

  const auto c7 = family_case(1, 7);
  EXPECT_EQ(c7.X.lattice.n, 23u);
  EXPECT_EQ(blowdown_invariants(c7.X, c7.cfg).b2_minus, 5);

  const auto c2 = CpConfiguration::verified(standard_configuration(2), 2);
  const AmbientManifoldData X8{AmbientLattice{8}};
  auto cfg8 = CpConfiguration::verified({ClassVector{0, 1, 1, 1, 1, 0, 0, 0, 0}}, 2);
  EXPECT_EQ(blowdown_invariants(X8, cfg8).b2_minus, 7);
  EXPECT_EQ(blowdown_invariants(AmbientManifoldData{c2.lattice()}, c2).b2_minus, 3);
}

TEST(Invariants, ConsistencyAcrossFamilies) {
  for (int fam : {1, 2}) {
    for (int a = 3; a <= (fam == 1 ? 7 : 6); ++a) {
      const auto c = family_case(fam, a);
      const auto inv = blowdown_invariants(c.X, c.cfg);
      EXPECT_EQ(inv.euler - 2, inv.b2_plus + inv.b2_minus);
      EXPECT_EQ(inv.signature, inv.b2_plus - inv.b2_minus);
      EXPECT_EQ(inv.b2_minus, 12 - a);
    }
  }
}

TEST(Invariants, LatticeMismatchRejected) {
  const auto c = family_case(1, 3);
  EXPECT_THROW(blowdown_invariants(AmbientManifoldData{AmbientLattice{12}}, c.cfg), DimensionMismatch);
}

TEST(H1, PaperWitnessAtA3) {
  const auto c = family_case(1, 3);
  const auto delta = cv(c.data.delta);
  EXPECT_EQ(delta.to_string(), "e9-e10");
  const auto cert = h1_certificate(c.X, c.cfg, delta);
  EXPECT_EQ(cert.verdict, H1Verdict::trivial);
  EXPECT_EQ(cert.condition, 1);
  EXPECT_EQ(cert.source, "supplied");
  EXPECT_EQ(cert.pairings, (std::vector<Integer>{1, 0}));
}

TEST(H1, ConditionTwoForP2) {
  const auto cfg = CpConfiguration::verified(standard_configuration(2), 2);
  const AmbientManifoldData X{cfg.lattice()};
  const ClassVector delta{0, 1, 0, 0, 0};  // pairs to -1 with e1+e2+e3+e4: condition (2) only
  const auto cert = h1_certificate(X, cfg, delta);
  EXPECT_EQ(cert.verdict, H1Verdict::trivial);
  EXPECT_EQ(h1_condition_met(cfg, delta), 2);
  EXPECT_EQ(h1_condition_met(cfg, ClassVector{0, -1, 0, 0, 0}), 1);  // pairs to +1: (1) is checked first
  EXPECT_EQ(h1_condition_met(cfg, ClassVector{0, 1, 1, 0, 0}), 0);   // pairs to -2
  const ClassVector delta3{0, 1, 1, 1, 0};  // pairs to -3
  EXPECT_EQ(h1_condition_met(cfg, delta3), 2);
}

TEST(H1, InconclusiveWhenNoWitnessExists) {
  const auto cfg = imprimitive_c2();
  const AmbientManifoldData X{cfg.lattice()};
  const auto searched = h1_certificate(X, cfg, std::nullopt);
  EXPECT_EQ(searched.verdict, H1Verdict::inconclusive);
  EXPECT_FALSE(searched.witness.has_value());
  const auto supplied = h1_certificate(X, cfg, ClassVector{0, 1, 0});
  EXPECT_EQ(supplied.verdict, H1Verdict::inconclusive);
  EXPECT_EQ(supplied.condition, 0);
}

TEST(H1, SearchFindsSmallWitness) {
  const auto c = family_case(1, 3);
  const auto cert = h1_certificate(c.X, c.cfg, std::nullopt);
  ASSERT_EQ(cert.verdict, H1Verdict::trivial);
  ASSERT_TRUE(cert.witness);
  EXPECT_EQ(cert.source, "bounded-search");
  EXPECT_NE(h1_condition_met(c.cfg, *cert.witness), 0);
}

TEST(H1, WrongLatticeDeltaThrows) {
  const auto c = family_case(1, 3);
  EXPECT_THROW(h1_certificate(c.X, c.cfg, ClassVector{0, 1, -1}), DimensionMismatch);
}

// delta = e_{12-a} - e_{13-a} works for a = 3..10. At a = 11 it is e1 - e2,
// which meets the long class in -(1)(-10) - (-1)(-2) = 8 as well as u_1, so
// neither condition holds and the witness has to come from the search.
TEST(H1, PaperDeltaAcrossTemplateRange) {
  for (int a = 3; a <= 10; ++a) {
    const auto c = family_case(1, a);
    const auto cert = h1_certificate(c.X, c.cfg, cv(c.data.delta));
    EXPECT_EQ(cert.verdict, H1Verdict::trivial) << "a=" << a;
  }
  const auto c11 = family_case(1, 11);
  const auto formula_delta = h1_certificate(c11.X, c11.cfg, cv(c11.data.delta));
  EXPECT_EQ(formula_delta.verdict, H1Verdict::inconclusive);
  const auto searched = h1_certificate(c11.X, c11.cfg, std::nullopt);
  EXPECT_EQ(searched.verdict, H1Verdict::trivial);
  ASSERT_TRUE(searched.witness);
  EXPECT_NE(h1_condition_met(c11.cfg, *searched.witness), 0);
}

TEST(Parity, SignatureCriterionAtA3) {
  const auto c = family_case(1, 3);
  const auto h1 = h1_certificate(c.X, c.cfg, cv(c.data.delta));
  const auto par = parity_and_homeo_type(c.X, c.cfg, h1);
  EXPECT_EQ(par.parity, Parity::odd);
  EXPECT_TRUE(par.signature_criterion);
  ASSERT_TRUE(par.homeo_type);
  EXPECT_EQ(*par.homeo_type, "CP²#9CP̄²");
}

TEST(Parity, BothCriteriaAgreeOnFamilyOne) {
  for (int a = 3; a <= 7; ++a) {
    const auto c = family_case(1, a);
    const auto h1 = h1_certificate(c.X, c.cfg, cv(c.data.delta));
    const std::vector<ClassVector> cand{cv(c.data.H)};
    const auto par = parity_and_homeo_type(c.X, c.cfg, h1, {}, cand);
    EXPECT_TRUE(par.signature_criterion) << a;
    ASSERT_TRUE(par.odd_witness) << a;
    EXPECT_TRUE(par.complement_odd) << a;
    // H is used when its square is odd; otherwise the bounded search supplies the witness.
    const bool h_odd = oracle::dot(c.data.H, c.data.H) % 2 != 0;
    EXPECT_EQ(par.witness_source, h_odd ? "candidate" : "bounded-search") << a;
    EXPECT_EQ(par.parity, Parity::odd);
    EXPECT_EQ(*par.homeo_type, rational_surface_name(12 - a));
  }
}

TEST(Parity, OddVectorAtA11) {
  const auto c = family_case(1, 11);
  ASSERT_EQ(c.X.lattice.n, 35u);
  const auto h1 = h1_certificate(c.X, c.cfg, std::nullopt);
  ASSERT_EQ(h1.verdict, H1Verdict::trivial);
  oracle::V v(36, -14);
  v[0] = 87;
  v[1] = -28;
  EXPECT_EQ(oracle::dot(v, v), 121);

  const std::vector<ClassVector> cand{cv(v)};
  const auto with_v = parity_and_homeo_type(c.X, c.cfg, h1, {}, cand);
  EXPECT_FALSE(with_v.signature_criterion);
  EXPECT_EQ(with_v.parity, Parity::odd);
  ASSERT_TRUE(with_v.odd_witness_square);
  EXPECT_EQ(*with_v.odd_witness_square, 121);
  EXPECT_EQ(*with_v.homeo_type, "CP²#1CP̄²");

  const auto unaided = parity_and_homeo_type(c.X, c.cfg, h1);
  EXPECT_EQ(unaided.parity, Parity::odd);
  ASSERT_TRUE(unaided.odd_witness);
  EXPECT_EQ(*unaided.homeo_type, "CP²#1CP̄²");
}

TEST(Parity, NoTypeWithoutH1) {
  const auto cfg = imprimitive_c2();
  const AmbientManifoldData X{cfg.lattice()};
  const auto h1 = h1_certificate(X, cfg, std::nullopt);
  const auto par = parity_and_homeo_type(X, cfg, h1);
  EXPECT_FALSE(par.homeo_type.has_value());
  EXPECT_NE(par.parity, Parity::even_possible);
}

TEST(Parity, CandidateMustBeOrthogonal) {
  const auto c = family_case(1, 3);
  const auto h1 = h1_certificate(c.X, c.cfg, cv(c.data.delta));
  const std::vector<ClassVector> bad{ClassVector::h(c.X.lattice)};  // h.u2 = 6
  const auto par = parity_and_homeo_type(c.X, c.cfg, h1, {}, bad);
  EXPECT_NE(par.witness_source, "candidate");
}

TEST(RationalSurfaceName, Examples) {
  EXPECT_EQ(rational_surface_name(0), "CP²");
  EXPECT_EQ(rational_surface_name(5), "CP²#5CP̄²");
}

TEST(Handles, Examples) {
  EXPECT_EQ(handle_counts_after_blowdown(13 - 4, 2), (HandleCounts{1, 0, 10, 2, 1}));
  EXPECT_EQ(handle_counts_after_blowdown(11 - 5, 0), (HandleCounts{1, 0, 7, 0, 1}));
  EXPECT_EQ(handle_counts_after_blowdown(0, 3), (HandleCounts{1, 0, 1, 3, 1}));
  EXPECT_THROW(handle_counts_after_blowdown(-1, 0), DomainError);
  EXPECT_THROW(handle_counts_after_blowdown(1, -1), DomainError);
  EXPECT_EQ(handle_counts_after_blowdown(6, 0, 1), (HandleCounts{1, 1, 7, 0, 1}));
  EXPECT_THROW(handle_counts_after_blowdown(1, 0, -1), DomainError);
}

TEST(Report, EndToEnd) {
  const auto c = family_case(2, 5);
  BlowdownOptions opt;
  opt.delta = cv(c.data.delta);
  opt.handles = HandleInput{6, 0};
  const auto rep = blowdown_report(c.X, c.cfg, opt);
  EXPECT_EQ(rep.invariants.b2_minus, 7);
  EXPECT_EQ(rep.h1.verdict, H1Verdict::trivial);
  ASSERT_TRUE(rep.homeo_type);
  EXPECT_EQ(*rep.homeo_type, "CP²#7CP̄²");
  ASSERT_TRUE(rep.handle_counts);
  EXPECT_EQ(*rep.handle_counts, (HandleCounts{1, 0, 7, 0, 1}));
}

TEST(Families, FormulaMatchesOracle) {
  for (int fam : {1, 2}) {
    for (int a = 3; a <= 11; ++a) {
      const auto inst = family_instance(fam, a);
      const auto f = oracle::family(fam, a);
      EXPECT_EQ(inst.p, f.p);
      EXPECT_EQ(inst.classes, cvs(f.classes)) << fam << "/" << a;
      EXPECT_EQ(family_canonical_lift(fam, a), cv(f.K));
      EXPECT_EQ(family_period_point(fam, a), cv(f.H));
      EXPECT_EQ(family_h1_witness(fam, a), cv(f.delta));
    }
  }
}

TEST(Families, AnchoredBeyondA12) {
  for (int a = 13; a <= 14; ++a) {
    const auto inst = family_instance(1, a);
    EXPECT_EQ(inst.lattice.n, static_cast<std::size_t>(4 * a - 10));
    EXPECT_EQ(inst.classes.front(), ClassVector::e(inst.lattice, 1) - ClassVector::e(inst.lattice, 2));
    EXPECT_EQ(inst.classes.size(), static_cast<std::size_t>(4 * a - 10));
  }
  EXPECT_THROW(family_instance(2, 13), DomainError);
  EXPECT_THROW(family_instance(3, 5), DomainError);
  EXPECT_THROW(family_instance(1, 2), DomainError);
  EXPECT_THROW(family_h1_witness(1, 12), DomainError);
}
