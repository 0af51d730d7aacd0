#include <gtest/gtest.h>

#include <map>

#include "support/corpus.hpp"
#include "tempdual/catalog.hpp"
#include "tempdual/census.hpp"

namespace tempdual {
namespace {

CensusTable census_at_fixed_point(const Model& m, std::int64_t L, std::vector<CensusPoint>* points = nullptr) {
  const SigmaPoint sigma = find_fixed_point(m, m.base_point()).point;
  return census(m, sigma, L, w_theta(m), points);
}

TEST(Census, SuperSingletonAtResolutionFour) {
  const Model m = Model::build(catalog::super_singleton());
  const CensusTable t = census_at_fixed_point(m, 4);
  EXPECT_EQ(t.grid_points, 4u);
  ASSERT_EQ(t.strata.size(), 2u);
  EXPECT_EQ(t.strata[0].r_group.order(), 1u);
  EXPECT_EQ(t.strata[0].orbits, 1u);
  EXPECT_EQ(t.strata[0].points, 2u);
  EXPECT_EQ(t.strata[1].r_group.order(), 2u);
  EXPECT_EQ(t.strata[1].orbits, 2u);
  EXPECT_EQ(t.strata[1].points, 2u);
  EXPECT_EQ(t.constituent_histogram, (std::map<std::size_t, std::size_t>{{1, 1}, {2, 2}}));
  EXPECT_EQ(t.total_spectrum_points, 5u);
}

TEST(Census, PureIIPairHasOnlySingleConstituents) {
  const Model m = Model::build(catalog::pureii_pair());
  const CensusTable t = census_at_fixed_point(m, 2);
  ASSERT_EQ(t.strata.size(), 1u);
  EXPECT_EQ(t.strata[0].r_group.order(), 1u);
  EXPECT_EQ(t.constituent_histogram.size(), 1u);
  EXPECT_EQ(t.constituent_histogram.begin()->first, 1u);
}

TEST(Census, RefusesBadPointsAndOffGridResolutions) {
  const Model bad = Model::build(catalog::iwahori_sp4());
  EXPECT_THROW(census(bad, bad.base_point(), 2, w_theta(bad)), PreconditionError);
  const Model good = Model::build(catalog::super_singleton());
  EXPECT_THROW(census(good, good.base_point(), 3, w_theta(good)), DomainError);
  EXPECT_THROW(census(good, good.base_point(), 0, w_theta(good)), DomainError);
}

TEST(Census, CocycleCutsTheConstituentCount) {
  Scenario s = catalog::intro_sp8();
  s.cocycle = BilinearCocycle{{0, 1}, {0, 0}};
  const Model m = Model::build(s);
  const SigmaPoint sigma = find_fixed_point(m, m.base_point()).point;
  const KnappSteinData d = knapp_stein(m, sigma, w_theta(m));
  ASSERT_EQ(d.r_group.order(), 4u);
  EXPECT_EQ(constituent_count(d.r_group, d.r_group, m.cocycle()), 1u);
  EXPECT_EQ(constituent_count(d.r_group, d.r_group, std::nullopt), 4u);
  // On the cyclic subgroup the form restricts to zero and the extension splits.
  const Subgroup half = generate_subgroup({d.r_group.generators().front()}, m.rank());
  EXPECT_EQ(constituent_count(half, d.r_group, m.cocycle()), 2u);
  EXPECT_THROW(constituent_count(d.r_group, d.r_group, BilinearCocycle{{0}}), InputError);

  const CensusTable t = census(m, sigma, 2, w_theta(m));
  const CensusTable plain = census(Model::build(catalog::intro_sp8()), sigma, 2, w_theta(m));
  EXPECT_LT(t.total_spectrum_points, plain.total_spectrum_points);
  EXPECT_EQ(t.orbit_count(), plain.orbit_count());
}

class CensusCorpus : public ::testing::Test {
 protected:
  static const std::vector<Scenario>& good_scenarios() {
    static const std::vector<Scenario> c = [] {
      testing::CorpusShape shape;
      shape.max_blocks = 4;
      std::vector<Scenario> out;
      for (const auto& s : testing::random_corpus(0xce05, 200, shape)) {
        const Model m = Model::build(s);
        const SigmaPoint sigma = find_fixed_point(m, m.base_point()).point;
        if (classify(m, sigma, w_theta(m), false).verdict == Verdict::Good) out.push_back(s);
      }
      return out;
    }();
    return c;
  }
};

TEST_F(CensusCorpus, CorpusHasGoodScenarios) { EXPECT_GE(good_scenarios().size(), 40u); }

TEST_F(CensusCorpus, CosetRGroupEqualsDirectRGroupEverywhere) {
  for (const auto& s : good_scenarios()) {
    const Model m = Model::build(s);
    const SigmaPoint sigma = find_fixed_point(m, m.base_point()).point;
    const Subgroup wt = w_theta(m);
    const KnappSteinData at_fixed = knapp_stein(m, sigma, wt);
    for_each_grid_twist(m, default_resolution(m), [&](const Twist& chi) {
      const SigmaPoint tau = m.twist_apply(sigma, chi);
      EXPECT_EQ(coset_r_group(m, at_fixed, tau), r_group(m, tau));
    });
  }
}

TEST_F(CensusCorpus, StrataPartitionTheGrid) {
  for (const auto& s : good_scenarios()) {
    const Model m = Model::build(s);
    std::vector<CensusPoint> points;
    const CensusTable t = census_at_fixed_point(m, default_resolution(m), &points);
    std::size_t covered = 0;
    std::size_t orbits = 0;
    for (const auto& stratum : t.strata) {
      covered += stratum.points;
      orbits += stratum.orbits;
    }
    EXPECT_EQ(covered, t.grid_points);
    EXPECT_EQ(orbits, points.size());
    std::size_t histogram_total = 0;
    for (const auto& [count, n] : t.constituent_histogram) histogram_total += count * n;
    EXPECT_EQ(histogram_total, t.total_spectrum_points);
  }
}

TEST_F(CensusCorpus, ConstituentsAreConstantAlongOrbits) {
  for (const auto& s : good_scenarios()) {
    const Model m = Model::build(s);
    const SigmaPoint sigma = find_fixed_point(m, m.base_point()).point;
    const Subgroup wt = w_theta(m);
    const KnappSteinData at_fixed = knapp_stein(m, sigma, wt);
    std::vector<CensusPoint> points;
    census(m, sigma, default_resolution(m), wt, &points);
    for (const auto& pt : points) {
      for (const auto& w : wt.elements()) {
        const Subgroup moved = r_group(m, m.act(w, pt.representative));
        EXPECT_EQ(constituent_count(moved, at_fixed.r_group, m.cocycle()), pt.constituents);
      }
    }
  }
}

TEST_F(CensusCorpus, RefiningTheGridPreservesCoarseOrbits) {
  // W_Θ preserves the lattice (1/L)Z^r, so the orbits of the fine census
  // that meet the coarse grid are exactly the coarse orbits.
  for (const auto& s : good_scenarios()) {
    const Model m = Model::build(s);
    if (m.rank() > 3) continue;
    const std::int64_t L = default_resolution(m);
    std::vector<CensusPoint> coarse;
    std::vector<CensusPoint> fine;
    const CensusTable a = census_at_fixed_point(m, L, &coarse);
    const CensusTable b = census_at_fixed_point(m, 2 * L, &fine);
    EXPECT_EQ(b.grid_points, a.grid_points << m.rank());
    std::map<std::size_t, std::size_t> coarse_hist;
    std::map<std::size_t, std::size_t> fine_on_coarse_hist;
    for (const auto& p : coarse) coarse_hist[p.constituents] += 1;
    for (const auto& p : fine) {
      bool on_coarse = true;
      for (const auto& angle : p.chi.angles) on_coarse = on_coarse && (angle * L).denominator() == 1;
      if (on_coarse) fine_on_coarse_hist[p.constituents] += 1;
    }
    EXPECT_EQ(coarse_hist, fine_on_coarse_hist);
    EXPECT_EQ(coarse_hist, a.constituent_histogram);
    EXPECT_GE(b.total_spectrum_points, a.total_spectrum_points);
  }
}

}  // namespace
}  // namespace tempdual
