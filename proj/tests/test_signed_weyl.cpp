#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "tempdual/roots.hpp"
#include "tempdual/subgroup.hpp"

namespace tempdual {
namespace {

// Signed permutation matrices plus a ±1 entry for the classical slot:
// column i carries (-1)^{sign(i)} in row image(i).
struct Matrix {
  std::vector<std::vector<int>> m;
  int spec = 1;
};

Matrix to_matrix(const SignedPerm& w) {
  const std::size_t r = w.rank();
  Matrix out{std::vector<std::vector<int>>(r, std::vector<int>(r, 0)), w.spec() ? -1 : 1};
  for (std::size_t i = 0; i < r; ++i) out.m[w.image(i)][i] = w.sign(i) ? -1 : 1;
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t r = a.m.size();
  Matrix out{std::vector<std::vector<int>>(r, std::vector<int>(r, 0)), a.spec * b.spec};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) out.m[i][j] += a.m[i][k] * b.m[k][j];
    }
  }
  return out;
}

bool same(const Matrix& a, const Matrix& b) { return a.m == b.m && a.spec == b.spec; }

SignedPerm random_element(std::mt19937_64& rng, std::size_t r, bool spec_allowed = true) {
  std::vector<std::size_t> image(r);
  for (std::size_t i = 0; i < r; ++i) image[i] = i;
  std::shuffle(image.begin(), image.end(), rng);
  const auto signs = static_cast<std::uint32_t>(rng() & ((1u << r) - 1u));
  return SignedPerm::from_parts(image, signs, spec_allowed && (rng() & 1));
}

// All elements of S_r ⋉ (Z/2)^r (spec bit optional).
std::vector<SignedPerm> all_elements(std::size_t r, bool with_spec) {
  std::vector<std::size_t> image(r);
  for (std::size_t i = 0; i < r; ++i) image[i] = i;
  std::vector<SignedPerm> out;
  do {
    for (std::uint32_t s = 0; s < (1u << r); ++s) {
      out.push_back(SignedPerm::from_parts(image, s, false));
      if (with_spec) out.push_back(SignedPerm::from_parts(image, s, true));
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

TEST(Compose, IdentityIsNeutral) {
  std::mt19937_64 rng(1);
  const SignedPerm w = random_element(rng, 4);
  EXPECT_EQ(compose(SignedPerm::identity(4), w), w);
  EXPECT_EQ(compose(w, SignedPerm::identity(4)), w);
}

TEST(Compose, SignChangeIsInvolution) {
  const SignedPerm c1 = SignedPerm::sign_change(2, 0);
  EXPECT_EQ(compose(c1, c1), SignedPerm::identity(2));
}

TEST(Compose, TranspositionAndSignOrderMatters) {
  const SignedPerm s = SignedPerm::transposition(2, 0, 1);
  const SignedPerm c1 = SignedPerm::sign_change(2, 0);
  const SignedPerm sc = compose(s, c1);
  const SignedPerm cs = compose(c1, s);
  EXPECT_TRUE(sc.sign(0));
  EXPECT_FALSE(sc.sign(1));
  EXPECT_FALSE(cs.sign(0));
  EXPECT_TRUE(cs.sign(1));
}

TEST(Compose, AgreesWithMatrixModelOnFullTableRankTwo) {
  const auto elements = all_elements(2, true);
  ASSERT_EQ(elements.size(), 16u);
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      EXPECT_TRUE(same(to_matrix(compose(a, b)), multiply(to_matrix(a), to_matrix(b))))
          << a.word() << " * " << b.word();
    }
  }
}

TEST(Compose, RankMismatchIsDimensionError) {
  EXPECT_THROW(compose(SignedPerm::identity(2), SignedPerm::identity(3)), DimensionError);
}

TEST(Compose, RandomAssociativityInverseAndMatrixModel) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t r = 1 + rng() % 6;
    const SignedPerm a = random_element(rng, r);
    const SignedPerm b = random_element(rng, r);
    const SignedPerm c = random_element(rng, r);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    EXPECT_EQ(compose(a, inverse(a)), SignedPerm::identity(r));
    EXPECT_EQ(compose(inverse(a), a), SignedPerm::identity(r));
    EXPECT_TRUE(same(to_matrix(compose(a, b)), multiply(to_matrix(a), to_matrix(b))));
  }
}

TEST(Word, Notation) {
  EXPECT_EQ(SignedPerm::identity(3).word(), "e");
  EXPECT_EQ(reflection_of_root(RootLabel::sum(0, 1), 2).word(), "(1,2)c_1c_2");
  EXPECT_EQ(compose(SignedPerm::sign_change(3, 2), SignedPerm::spec_change(3)).word(), "c_3c_spec");
}

TEST(GenerateSubgroup, Examples) {
  EXPECT_EQ(generate_subgroup(std::vector<SignedPerm>{}, 3).order(), 1u);
  const std::vector<SignedPerm> b2 = {SignedPerm::transposition(2, 0, 1), SignedPerm::sign_change(2, 0),
                                      SignedPerm::sign_change(2, 1)};
  const Subgroup g = generate_subgroup(b2, 2);
  EXPECT_EQ(g.order(), 8u);
  // Exhaustive oracle: every element of S_2 ⋉ (Z/2)^2 without spec.
  for (const auto& w : all_elements(2, false)) EXPECT_TRUE(g.contains(w));
  EXPECT_EQ(generate_subgroup({sign_product(2, {0, 1})}, 2).order(), 2u);
}

TEST(GenerateSubgroup, HyperoctahedralOrders) {
  for (std::size_t r = 1; r <= 5; ++r) {
    std::vector<SignedPerm> gens{SignedPerm::sign_change(r, 0)};
    for (std::size_t i = 0; i + 1 < r; ++i) gens.push_back(SignedPerm::transposition(r, i, i + 1));
    std::uint64_t expected = 1;
    for (std::size_t k = 1; k <= r; ++k) expected *= 2 * k;
    EXPECT_EQ(generate_subgroup(gens, r).order(), expected);
    gens.push_back(SignedPerm::spec_change(r));
    EXPECT_EQ(generate_subgroup(gens, r).order(), 2 * expected);
    EXPECT_EQ(ambient_order(r), 2 * expected);
  }
}

TEST(GenerateSubgroup, RandomSubgroupsAreClosed) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 4;
    std::vector<SignedPerm> gens;
    const int k = static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) gens.push_back(random_element(rng, r));
    const Subgroup g = generate_subgroup(gens, r);
    EXPECT_TRUE(g.contains(SignedPerm::identity(r)));
    EXPECT_EQ(ambient_order(r) % g.order(), 0u);
    for (const auto& a : g.elements()) {
      EXPECT_TRUE(g.contains(inverse(a)));
      for (const auto& b : g.elements()) ASSERT_TRUE(g.contains(compose(a, b)));
    }
    const Subgroup again = subgroup_from_elements(g.elements(), r);
    EXPECT_EQ(again, g);
  }
}

TEST(SubgroupFromElements, RejectsNonClosedSets) {
  std::vector<SignedPerm> bad = {SignedPerm::identity(2), SignedPerm::sign_change(2, 0),
                                 SignedPerm::sign_change(2, 1)};
  EXPECT_THROW(subgroup_from_elements(bad, 2), DomainError);
}

TEST(IsNormal, Examples) {
  const Subgroup trivial(4);
  const Subgroup any = generate_subgroup({SignedPerm::transposition(4, 0, 1), SignedPerm::sign_change(4, 2)}, 4);
  EXPECT_TRUE(is_normal(trivial, any));

  const Subgroup h = generate_subgroup({SignedPerm::transposition(4, 2, 3)}, 4);
  const Subgroup g = generate_subgroup(
      {SignedPerm::transposition(4, 2, 3), SignedPerm::sign_change(4, 0), SignedPerm::sign_change(4, 1)}, 4);
  EXPECT_TRUE(is_normal(h, g));

  const Subgroup b2 = generate_subgroup(
      {SignedPerm::transposition(2, 0, 1), SignedPerm::sign_change(2, 0), SignedPerm::sign_change(2, 1)}, 2);
  const Subgroup c1 = generate_subgroup({SignedPerm::sign_change(2, 0)}, 2);
  EXPECT_FALSE(is_normal(c1, b2));
  EXPECT_THROW(is_normal(b2, c1), ContainmentError);
}

TEST(IsNormal, AgreesWithAllElementConjugation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 2 + rng() % 2;
    const Subgroup g = generate_subgroup({random_element(rng, r, false), random_element(rng, r, false)}, r);
    const SignedPerm x = g.elements()[rng() % g.order()];
    const Subgroup h = generate_subgroup({x}, r);
    bool brute = true;
    for (const auto& a : g.elements()) {
      for (const auto& b : h.elements()) brute = brute && h.contains(compose(compose(a, b), inverse(a)));
    }
    EXPECT_EQ(is_normal(h, g), brute);
  }
}

TEST(CheckSemidirect, Examples) {
  const Subgroup w = generate_subgroup({SignedPerm::sign_change(2, 0), SignedPerm::sign_change(2, 1)}, 2);
  EXPECT_TRUE(check_semidirect(w, w, Subgroup(2)));
  const Subgroup wp = generate_subgroup({SignedPerm::sign_change(2, 1)}, 2);
  const Subgroup rg = generate_subgroup({SignedPerm::sign_change(2, 0)}, 2);
  EXPECT_TRUE(check_semidirect(w, wp, rg));

  const Subgroup b2 = generate_subgroup(
      {SignedPerm::transposition(2, 0, 1), SignedPerm::sign_change(2, 0), SignedPerm::sign_change(2, 1)}, 2);
  EXPECT_FALSE(check_semidirect(b2, rg, generate_subgroup({SignedPerm::transposition(2, 0, 1)}, 2)));
  EXPECT_THROW(check_semidirect(w, b2, rg), ContainmentError);
}

TEST(CheckSemidirect, ImpliesUniqueFactorization) {
  // W = B_3, W' = D_3 (even sign changes), R = <c_3>.
  const std::size_t r = 3;
  const Subgroup w = generate_subgroup({SignedPerm::transposition(r, 0, 1), SignedPerm::transposition(r, 1, 2),
                                        SignedPerm::sign_change(r, 0)},
                                       r);
  std::vector<SignedPerm> d3;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      d3.push_back(reflection_of_root(RootLabel::difference(i, j), r));
      d3.push_back(reflection_of_root(RootLabel::sum(i, j), r));
    }
  }
  const Subgroup wp = generate_subgroup(d3, r);
  const Subgroup rg = generate_subgroup({SignedPerm::sign_change(r, 2)}, r);
  ASSERT_TRUE(check_semidirect(w, wp, rg));
  for (const auto& x : w.elements()) {
    int factorizations = 0;
    for (const auto& a : wp.elements()) {
      for (const auto& b : rg.elements()) factorizations += compose(a, b) == x ? 1 : 0;
    }
    EXPECT_EQ(factorizations, 1) << x.word();
  }
}

TEST(Reflection, Examples) {
  EXPECT_EQ(reflection_of_root(RootLabel::short_root(0), 2), SignedPerm::sign_change(2, 0));
  const SignedPerm s = reflection_of_root(RootLabel::sum(0, 1), 2);
  EXPECT_EQ(compose(s, s), SignedPerm::identity(2));
  const Subgroup b2 = generate_subgroup({reflection_of_root(RootLabel::difference(0, 1), 2),
                                         reflection_of_root(RootLabel::short_root(0), 2),
                                         reflection_of_root(RootLabel::short_root(1), 2)},
                                        2);
  EXPECT_EQ(b2.order(), 8u);
  EXPECT_THROW(reflection_of_root(RootLabel::short_root(2), 2), DomainError);
  EXPECT_THROW(reflection_of_root(RootLabel::difference(1, 0), 2), DomainError);
}

TEST(Reflection, EveryReflectionIsAnInvolutionThatNegatesItsRoot) {
  for (std::size_t r = 1; r <= 5; ++r) {
    std::vector<RootLabel> roots;
    for (std::size_t i = 0; i < r; ++i) {
      roots.push_back(RootLabel::short_root(i));
      for (std::size_t j = i + 1; j < r; ++j) {
        roots.push_back(RootLabel::difference(i, j));
        roots.push_back(RootLabel::sum(i, j));
      }
    }
    for (const auto& root : roots) {
      for (bool spec : {false, true}) {
        const SignedPerm s = reflection_of_root(root, r, spec);
        EXPECT_EQ(compose(s, s), SignedPerm::identity(r));
        const SignedRoot image = apply_to_root(s, root);
        EXPECT_EQ(image.root, root);
        EXPECT_FALSE(image.positive);
      }
    }
  }
}

TEST(Join, EmbedsOnDisjointSlots) {
  const Subgroup a = generate_subgroup({SignedPerm::transposition(2, 0, 1)}, 2);
  const Subgroup b = generate_subgroup({SignedPerm::sign_change(1, 0)}, 1);
  const Subgroup j = join(a, {0, 2}, b, {1}, 3);
  EXPECT_EQ(j.order(), 4u);
  EXPECT_TRUE(j.contains(SignedPerm::transposition(3, 0, 2)));
  EXPECT_TRUE(j.contains(SignedPerm::sign_change(3, 1)));
}

}  // namespace
}  // namespace tempdual
