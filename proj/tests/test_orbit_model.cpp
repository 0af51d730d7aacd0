#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support/corpus.hpp"
#include "tempdual/analyzer.hpp"
#include "tempdual/catalog.hpp"
#include "tempdual/orbit_model.hpp"

namespace tempdual {
namespace {

std::set<std::string> codes_of(const Scenario& s) {
  std::set<std::string> out;
  for (const auto& v : validate_scenario(s)) out.insert(v.code);
  return out;
}

TEST(Rationals, ReduceModAndParse) {
  EXPECT_EQ(reduce_mod(Rational(5, 4), 1), Rational(1, 4));
  EXPECT_EQ(reduce_mod(Rational(-1, 3), 1), Rational(2, 3));
  EXPECT_EQ(reduce_mod(Rational(2, 3), 2), Rational(1, 6));
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("0.5"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
}

TEST(Validation, CatalogScenariosAreValid) {
  for (const auto& s : {catalog::iwahori_sp4(), catalog::intro_sp8(), catalog::super_singleton(),
                        catalog::pureii_pair(), catalog::mixed_pair(), catalog::equivalent_super_pair(),
                        catalog::so10_mixed_parity()}) {
    EXPECT_TRUE(validate_scenario(s).empty());
  }
}

TEST(Validation, TorsionMustDivideSize) {
  Scenario s = catalog::super_singleton();
  s.classes[0].torsion = 2;
  EXPECT_TRUE(codes_of(s).count("torsion-divides-size"));
  EXPECT_THROW(Model::build(s), ValidationFailed);
}

TEST(Validation, LeviSumAndBlockCount) {
  Scenario s = catalog::iwahori_sp4();
  s.n = 3;
  EXPECT_TRUE(codes_of(s).count("levi-sum"));
  s = catalog::iwahori_sp4();
  s.blocks.pop_back();
  EXPECT_TRUE(codes_of(s).count("block-count"));
}

TEST(Validation, DualityMustBeAnInvolution) {
  Scenario s = catalog::pureii_pair();
  s.classes[1].dual_id = "cubic_inv";
  EXPECT_TRUE(codes_of(s).count("dual-involution"));
  s = catalog::pureii_pair();
  s.classes[0].dual_id = "nowhere";
  EXPECT_TRUE(codes_of(s).count("dual-unknown"));
}

TEST(Validation, FlagsKeyedAtSelfDualParameters) {
  Scenario s = catalog::super_singleton();
  s.classes[0].reducibility = {{Rational(0), true}, {Rational(1, 3), true}};
  EXPECT_TRUE(codes_of(s).count("flag-key"));
  s = catalog::pureii_pair();
  s.classes[0].reducibility = {{Rational(0), true}};
  EXPECT_TRUE(codes_of(s).count("flag-key"));
}

TEST(Validation, UnknownClassAndSizeMismatch) {
  Scenario s = catalog::iwahori_sp4();
  s.blocks[1].class_id = "ghost";
  EXPECT_TRUE(codes_of(s).count("unknown-class"));
  s = catalog::iwahori_sp4();
  s.classes.push_back(catalog::self_dual_class("big", 2, 1, Rational(0), true, true));
  s.blocks[1].class_id = "big";
  EXPECT_TRUE(codes_of(s).count("block-class-size"));
}

TEST(Validation, TildeStatusRules) {
  Scenario s = catalog::so10_mixed_parity();
  s.levi.q = 2;
  s.n = 7;
  EXPECT_TRUE(codes_of(s).count("tilde-status"));
  s.tau.tilde = TildeStatus::Equivalent;
  EXPECT_TRUE(codes_of(s).empty());
  Scenario sp = catalog::iwahori_sp4();
  sp.tau.tilde = TildeStatus::Inequivalent;
  EXPECT_TRUE(codes_of(sp).count("tilde-status"));
}

TEST(Validation, OddEvenOrthogonalBlocksNeedBothFlags) {
  Scenario s = catalog::so10_mixed_parity();
  s.classes[0].reducibility[0].second = false;
  EXPECT_TRUE(codes_of(s).count("so-odd-flag"));
  // With τ̃ ≃ τ the same flags are legitimate.
  s.levi.q = 2;
  s.n = 7;
  s.tau.tilde = TildeStatus::Equivalent;
  EXPECT_TRUE(codes_of(s).empty());
}

TEST(Validation, SplitQOneNeedsTorusBlock) {
  Scenario s = catalog::so10_mixed_parity();
  s.levi.q = 1;
  s.n = 6;
  EXPECT_TRUE(codes_of(s).count("so-even-q1"));
  s.torus_block = RawBlock{"quadratic_a", Rational(0)};
  EXPECT_TRUE(codes_of(s).empty());
  const Model m = Model::build(s);
  EXPECT_EQ(m.rank(), 5u);
  EXPECT_EQ(m.q(), 0);
  EXPECT_EQ(m.regime(), Regime::ParitySplit);
}

TEST(Validation, DuplicateClassId) {
  Scenario s = catalog::super_singleton();
  s.classes.push_back(s.classes.front());
  EXPECT_TRUE(codes_of(s).count("duplicate-class"));
}

TEST(Regimes, Table) {
  EXPECT_EQ(regime_of(GroupKind::Sp, 3, TildeStatus::NotApplicable), Regime::Symplectic);
  EXPECT_EQ(regime_of(GroupKind::U_odd, 0, TildeStatus::NotApplicable), Regime::Symplectic);
  EXPECT_EQ(regime_of(GroupKind::SO_even_split, 2, TildeStatus::Equivalent), Regime::SpecSymplectic);
  EXPECT_EQ(regime_of(GroupKind::SO_even_split, 2, TildeStatus::Inequivalent), Regime::ParitySplit);
  EXPECT_EQ(regime_of(GroupKind::SO_even_quasisplit, 0, TildeStatus::NotApplicable), Regime::ParitySplit);
}

TEST(Blocks, DualAndSelfDualParameters) {
  const Model m = Model::build(catalog::iwahori_sp4());
  const BlockState b{0, Rational(1, 3)};
  EXPECT_EQ(m.dual(b).t, Rational(2, 3));
  EXPECT_EQ(m.dual(m.dual(b)), b);
  EXPECT_TRUE(m.is_self_dual({0, Rational(1, 2)}));
  EXPECT_TRUE(m.satisfies_C({0, Rational(1, 2)}));
  EXPECT_FALSE(m.satisfies_C({0, Rational(0)}));
  EXPECT_FALSE(m.satisfies_C({0, Rational(1, 4)}));
  const auto [p0, p1] = self_dual_parameters(Rational(1, 6), 3);
  EXPECT_EQ(p0, Rational(1, 12));
  EXPECT_EQ(p1, Rational(1, 4));
  EXPECT_EQ(self_dual_parameters(Rational(1, 3), 3).first, Rational(0));
}

TEST(Blocks, EquivalenceAcrossSizesIsADomainError) {
  Scenario s = catalog::so10_mixed_parity();
  const Model m = Model::build(s);
  EXPECT_THROW((void)m.equivalent(m.base_point().blocks[0], m.base_point().blocks[1]), DomainError);
  EXPECT_FALSE(m.equivalent(m.base_point().blocks[0], m.base_point().blocks[2]));
}

TEST(Action, RejectsMixedSizes) {
  const Model m = Model::build(catalog::so10_mixed_parity());
  EXPECT_THROW(m.act(SignedPerm::transposition(4, 0, 1), m.base_point()), DomainError);
  EXPECT_THROW(m.act(SignedPerm::identity(3), m.base_point()), DimensionError);
}

TEST(Action, SpecBitTogglesTildeOnlyWhenInequivalent) {
  Scenario s = catalog::so10_mixed_parity();
  s.levi.q = 2;
  s.n = 7;
  s.tau.tilde = TildeStatus::Inequivalent;
  const Model m = Model::build(s);
  EXPECT_TRUE(m.act(SignedPerm::spec_change(4), m.base_point()).tau_tilde);
  s.tau.tilde = TildeStatus::Equivalent;
  const Model e = Model::build(s);
  EXPECT_FALSE(e.act(SignedPerm::spec_change(4), e.base_point()).tau_tilde);
}

class CorpusProperties : public ::testing::Test {
 protected:
  static const std::vector<Scenario>& corpus() {
    static const std::vector<Scenario> c = testing::random_corpus(0x5eed, 240);
    return c;
  }
};

TEST_F(CorpusProperties, GeneratedScenariosValidate) {
  for (const auto& s : corpus()) {
    const auto v = validate_scenario(s);
    EXPECT_TRUE(v.empty()) << (v.empty() ? "" : v.front().code + ": " + v.front().message);
  }
}

TEST_F(CorpusProperties, DualIsAnInvolutionOnEveryBlock) {
  for (const auto& s : corpus()) {
    const Model m = Model::build(s);
    for (const auto& b : m.base_point().blocks) {
      EXPECT_EQ(m.dual(m.dual(b)), b);
      if (m.class_self_dual(b.cls)) {
        const auto [p0, p1] = m.self_dual_parameters(b.cls);
        EXPECT_TRUE(m.is_self_dual({b.cls, p0}));
        EXPECT_TRUE(m.is_self_dual({b.cls, p1}));
      }
    }
  }
}

TEST_F(CorpusProperties, ActionCommutesWithTwisting) {
  testing::Rng rng(99);
  for (const auto& s : corpus()) {
    const Model m = Model::build(s);
    const Subgroup full = full_weyl_group(m);
    Twist x = zero_twist(m.rank());
    for (auto& a : x.angles) a = Rational(testing::pick(rng, 0, 11), 12);
    for (int k = 0; k < 4; ++k) {
      const SignedPerm& w = full.elements()[static_cast<std::size_t>(testing::pick(rng, 0, static_cast<int>(full.order()) - 1))];
      const SigmaPoint lhs = m.act(w, m.twist_apply(m.base_point(), x));
      const SigmaPoint rhs = m.twist_apply(m.act(w, m.base_point()), m.act_on_twist(w, x));
      EXPECT_EQ(lhs, rhs) << w.word();
    }
  }
}

TEST_F(CorpusProperties, ActionIsAGroupAction) {
  testing::Rng rng(3);
  for (const auto& s : corpus()) {
    const Model m = Model::build(s);
    const Subgroup full = full_weyl_group(m);
    const auto pick_element = [&] {
      return full.elements()[static_cast<std::size_t>(testing::pick(rng, 0, static_cast<int>(full.order()) - 1))];
    };
    const SignedPerm a = pick_element();
    const SignedPerm b = pick_element();
    const SigmaPoint& p = m.base_point();
    EXPECT_EQ(m.act(compose(a, b), p), m.act(a, m.act(b, p)));
    EXPECT_EQ(m.act(SignedPerm::identity(m.rank()), p), p);
  }
}

}  // namespace
}  // namespace tempdual
