#include "finegrad/abgroup.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace finegrad;

TEST(GroupElement, Order) {
    GradingGroup g(0, {2, 4});
    EXPECT_EQ(GroupElement(g, {}, {1, 1}).order(), 4);
    EXPECT_EQ(GroupElement(g, {}, {1, 2}).order(), 2);
    EXPECT_EQ(GroupElement::zero(g).order(), 1);
    GradingGroup h(1, {2});
    EXPECT_FALSE(GroupElement(h, {1}, {0}).order().has_value());
}

TEST(GroupElement, NegationInZ2) {
    GradingGroup g(0, {2, 2});
    GroupElement x(g, {}, {1, 0});
    EXPECT_EQ(-x, x);
}

TEST(GroupElement, ResiduesReduced) {
    GradingGroup g(1, {3});
    GroupElement x(g, {-2}, {-1});
    EXPECT_EQ(x.torsion_part()[0], 2);
}

TEST(GroupElement, MismatchedGroups) {
    GroupElement x(GradingGroup(0, {2}), {}, {1});
    GroupElement y(GradingGroup(0, {4}), {}, {1});
    EXPECT_THROW(x + y, GroupError);
}

namespace {
std::vector<GroupElement> quaternion_cube_degrees() {
    GradingGroup g = parse_group("Z_2^4");
    std::vector<std::string> lits = {"([];[1,0,0,0])", "([];[1,1,0,0])", "([];[0,1,1,0])", "([];[0,1,1,1])",
                                     "([];[1,1,0,1])", "([];[1,0,0,1])", "([];[0,0,0,1])"};
    std::vector<GroupElement> out;
    for (auto& l : lits) out.push_back(parse_element(g, l));
    return out;
}
}  // namespace

TEST(GroupElement, SevenDegreesSumToZero) {
    auto d = quaternion_cube_degrees();
    GroupElement s = GroupElement::zero(d[0].group());
    for (auto& x : d) s = s + x;
    EXPECT_TRUE(s.is_zero());
}

TEST(SubgroupInvariants, Examples) {
    auto d = quaternion_cube_degrees();
    EXPECT_EQ(subgroup_invariants(d), (AbelianInvariants{0, {2, 2, 2, 2}}));
    GradingGroup z2(2, {});
    EXPECT_EQ(subgroup_invariants({GroupElement(z2, {2, 0}, {})}), (AbelianInvariants{1, {}}));
    GradingGroup t(0, {2, 2});
    EXPECT_EQ(subgroup_invariants({GroupElement(t, {}, {1, 0}), GroupElement(t, {}, {0, 1})}),
              (AbelianInvariants{0, {2, 2}}));
    EXPECT_EQ(subgroup_invariants({}), (AbelianInvariants{0, {}}));
}

TEST(SubgroupInvariants, PermutationAndRedundancy) {
    auto d = quaternion_cube_degrees();
    AbelianInvariants base = subgroup_invariants(d);
    std::reverse(d.begin(), d.end());
    EXPECT_EQ(subgroup_invariants(d), base);
    d.push_back(d[0] + d[1]);
    EXPECT_EQ(subgroup_invariants(d), base);
}

TEST(SubgroupInvariants, MixedGroups) {
    GradingGroup g(1, {4, 2});
    std::vector<GroupElement> gens = {GroupElement(g, {0}, {1, 0}), GroupElement(g, {2}, {0, 1})};
    EXPECT_EQ(subgroup_invariants(gens), (AbelianInvariants{1, {4}}));
    EXPECT_EQ(invariants_of(GradingGroup(0, {4, 2, 2})), (AbelianInvariants{0, {2, 2, 4}}));
    EXPECT_EQ(invariants_of(GradingGroup(1, {2, 3})), (AbelianInvariants{1, {6}}));
}

TEST(SmithDiagonal, Basic) {
    auto d = smith_diagonal({{2, 4}, {6, 8}});
    EXPECT_EQ(d, (std::vector<long>{2, 4}));
}

TEST(Parse, GroupLiterals) {
    EXPECT_EQ(parse_group("Z^2 x Z_2 x Z_4"), GradingGroup(2, {2, 4}));
    EXPECT_EQ(parse_group("Z"), GradingGroup(1, {}));
    EXPECT_EQ(parse_group("Z_2^3"), GradingGroup(0, {2, 2, 2}));
    EXPECT_EQ(parse_group("0"), GradingGroup(0, {}));
    EXPECT_EQ(parse_group(GradingGroup(1, {2, 2, 2}).str()), GradingGroup(1, {2, 2, 2}));
    EXPECT_THROW(parse_group("Z_1"), GroupError);
    EXPECT_THROW(parse_group("Q"), GroupError);
}

TEST(Parse, ElementLiterals) {
    GradingGroup g(1, {2, 4});
    GroupElement x = parse_element(g, "([3];[1,3])");
    EXPECT_EQ(x, GroupElement(g, {3}, {1, 3}));
    EXPECT_EQ(parse_element(g, x.str()), x);
    EXPECT_THROW(parse_element(g, "([1];[1])"), GroupError);
}
