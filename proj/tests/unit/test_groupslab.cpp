#include "finegrad/groupslab.hpp"

#include <gtest/gtest.h>

using namespace finegrad;

TEST(Q8, MultiplicationRules) {
    const int I = 1, J = 2, K = 3, M = 4;
    EXPECT_EQ(q8::mul(I, J), K);
    EXPECT_EQ(q8::mul(J, K), I);
    EXPECT_EQ(q8::mul(K, I), J);
    EXPECT_EQ(q8::mul(J, I), K | M);
    EXPECT_EQ(q8::mul(I, I), M);
    EXPECT_EQ(q8::mul(q8::neg(I), J), q8::neg(K));
    for (int a = 0; a < 8; ++a) EXPECT_EQ(q8::mul(a, q8::inv(a)), 0) << q8::str(a);
    // associativity over the whole table
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            for (int c = 0; c < 8; ++c) EXPECT_EQ(q8::mul(q8::mul(a, b), c), q8::mul(a, q8::mul(b, c)));
}

TEST(Q8, TwentyFourAutomorphisms) {
    auto autos = q8::automorphisms();
    EXPECT_EQ(autos.size(), 24u);
    for (const auto& f : autos) EXPECT_EQ(f[4], 4);
}

TEST(FinGroupElt, SignsFoldModuloK) {
    const int I = 1, M = 4;
    // (-1,-1,1) lies in K
    EXPECT_EQ(FinGroupElt::make(M, M, 0), FinGroupElt::make(0, 0, 0));
    EXPECT_EQ(FinGroupElt::make(0, I | M, 0), FinGroupElt::make(M, 0, 0) * FinGroupElt::make(0, I, 0));
    EXPECT_EQ(FinGroupElt::make(0, 0, M).str(), "(-1,1,1)K");
    auto g = q8_cubed_mod_k();
    EXPECT_EQ(g.center().count(), 2u);
}

TEST(FiniteGroup, AbelianInvariants) {
    auto g = q8_cubed_mod_k();
    Subset s;
    s.set(size_t(FinGroupElt::make(1, 0, 0).index()));
    auto cyc = g.closure(s);
    EXPECT_EQ(cyc.count(), 4u);
    EXPECT_EQ(g.abelian_invariants(cyc), (std::vector<long>{4}));
    EXPECT_EQ(g.abelian_invariants(g.center()), (std::vector<long>{2}));
}

TEST(MaximalAbelian, Q8CubedModK) {
    auto r = maximal_abelian_Q83K();
    EXPECT_EQ(r.group_order, 128u);
    EXPECT_EQ(r.subgroup_count, 135u);
    EXPECT_EQ(r.types, (std::vector<std::vector<long>>{{2, 2, 4}}));
    EXPECT_TRUE(r.all_contain_center);
    EXPECT_EQ(r.orbit_count, 3u);
    EXPECT_TRUE(r.representatives_maximal);
    EXPECT_TRUE(r.representatives_cover_orbits);
    EXPECT_TRUE(r.lift_matches_subspaces);
    EXPECT_TRUE(r.ok_q83k());
}

TEST(MaximalAbelian, UnitsTimesQ8SquaredModK) {
    auto r = maximal_abelian_FxQ82K();
    EXPECT_EQ(r.group_order, 64u);
    EXPECT_EQ(r.subgroup_count, 15u);
    EXPECT_TRUE(r.all_contain_center);
    EXPECT_EQ(r.orbit_count, 2u);
    EXPECT_TRUE(r.representatives_cover_orbits);
    EXPECT_TRUE(r.lift_matches_subspaces);
    EXPECT_TRUE(r.ok_fxq82k());
}

TEST(F2Subspaces, SurjectiveBlockCount) {
    // e1 in both blocks vs e2 in both blocks: two surjective projections
    EXPECT_EQ(surjective_blocks(0b0101, 0b1010, 2), 2);
    EXPECT_EQ(surjective_blocks(0b0001, 0b0010, 2), 1);
    EXPECT_EQ(surjective_blocks(0b0011, 0b0011, 2), 0);
}

TEST(F2Subspaces, ThreeBlocks) {
    auto r = f2_subspace_cases(3);
    EXPECT_EQ(r.maximal, 135u);
    EXPECT_EQ(r.family_counts, (std::vector<size_t>{27, 54, 54}));
    EXPECT_TRUE(r.exhaustive);
    EXPECT_TRUE(r.exclusive);
    EXPECT_TRUE(r.families_admissible);
    EXPECT_TRUE(r.family1_dim3);
    EXPECT_TRUE(r.ok());
}

TEST(F2Subspaces, TwoBlocks) {
    auto r = f2_subspace_cases(2);
    EXPECT_EQ(r.maximal, 15u);
    EXPECT_EQ(r.classified, r.admissible);
    EXPECT_EQ(r.family_counts.size(), 2u);
    EXPECT_EQ(r.family_counts[1], 6u);
    EXPECT_TRUE(r.ok());
    EXPECT_THROW(f2_subspace_cases(4), std::invalid_argument);
}
