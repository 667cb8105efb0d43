#include "finegrad/cliffordlab.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace finegrad;

namespace {

std::string cfg(const std::string& name) { return std::string(FINEGRAD_DATA_DIR) + "/clifford/" + name + ".cfg"; }

GradedQuadraticSpace load(const std::string& name) { return normalize_quadratic_basis(load_quadratic_config(cfg(name))); }

GradingGroup z2(int r) { return GradingGroup(0, std::vector<long>(static_cast<size_t>(r), 2)); }

GroupElement bits(const GradingGroup& g, std::vector<long> t) { return GroupElement(g, {}, std::move(t)); }

const std::map<std::string, DivisionClass> kExpected = {
    {"m3_z3", DivisionClass::F},    {"m2", DivisionClass::Q},       {"m1_rank3", DivisionClass::Q},
    {"m1_rank4", DivisionClass::QQ}, {"m0_r6", DivisionClass::QQQ},  {"m0_r5a", DivisionClass::QQ},
    {"m0_r5b", DivisionClass::QQ},   {"m0_r4a", DivisionClass::QQ},  {"m0_r4b_quaternion_cube", DivisionClass::Q},
    {"m0_r3_cayley", DivisionClass::F},
};

}  // namespace

TEST(QuadraticConfig, ParsesDegreesAndPolarValues) {
    auto raw = parse_quadratic_config(
        "# comment\ngroup Z x Z_2\nvector u ([1];[0])\nvector v ([-1];[0])\nvector w ([0];[1]) q 3\npolar u v 2\n");
    ASSERT_EQ(raw.names.size(), 3u);
    EXPECT_EQ(raw.degrees[2], GroupElement(raw.group, {0}, {1}));
    EXPECT_EQ(raw.polar(2, 2), Scalar(6));
    EXPECT_EQ(raw.polar(1, 0), Scalar(2));
    EXPECT_THROW(parse_quadratic_config("vector u ([1];[0])\n"), ParseError);
    EXPECT_THROW(parse_quadratic_config("group Z\nvector u ([1];[])\nvector u ([1];[])\n"), ParseError);
    EXPECT_THROW(parse_quadratic_config("group Z\nfoo\n"), ParseError);
}

TEST(ScalarSqrt, AvailableRoots) {
    for (auto c : {Scalar(4), Scalar(-1), Scalar(3), Scalar(-3), Scalar::rational(9, 4), Scalar::zeta(4)}) {
        auto s = scalar_sqrt(c);
        ASSERT_TRUE(s) << c;
        EXPECT_EQ(*s * *s, c);
    }
    EXPECT_FALSE(scalar_sqrt(Scalar(2)));
}

TEST(Normalize, CayleyDataIsAlreadyNormalized) {
    auto u = load("m0_r3_cayley");
    EXPECT_EQ(u.m(), 0u);
    EXPECT_EQ(u.h.size(), 7u);
    EXPECT_TRUE(u.shift.is_zero());
}

TEST(Normalize, EqualDegreesMergeIntoAPair) {
    GradingGroup g = z2(2);
    RawQuadraticSpace raw{g, {"a", "b", "c"}, {bits(g, {1, 0}), bits(g, {1, 0}), bits(g, {1, 0})}, Mat::identity(3).scaled(2)};
    auto u = normalize_quadratic_basis(raw);
    EXPECT_EQ(u.m(), 1u);
    EXPECT_EQ(u.h.size(), 1u);
    // single w in degree (1,0) forces a shift by (1,0)
    EXPECT_EQ(u.shift, bits(g, {1, 0}));
    EXPECT_TRUE(u.h[0].is_zero());
}

TEST(Normalize, AllDegreesZeroGivesThreePairs) {
    GradingGroup g(0, {});
    RawQuadraticSpace raw{g, {"a", "b", "c", "d", "e", "f", "x"}, std::vector<GroupElement>(7, GroupElement::zero(g)),
                          Mat::identity(7).scaled(2)};
    auto u = normalize_quadratic_basis(raw);
    EXPECT_EQ(u.m(), 3u);
    EXPECT_EQ(u.l(), 0u);
}

TEST(Normalize, ShiftMakesDegreesSumToZero) {
    auto u = load("m0_r6");
    EXPECT_EQ(u.shift, bits(z2(6), {1, 1, 1, 1, 1, 1}));
    GroupElement s = GroupElement::zero(u.group);
    for (auto& h : u.h) s = s + h;
    EXPECT_TRUE(s.is_zero());
}

TEST(Normalize, RejectsBadInput) {
    GradingGroup g = z2(1);
    RawQuadraticSpace even{g, {"a", "b"}, {bits(g, {0}), bits(g, {1})}, Mat::identity(2).scaled(2)};
    EXPECT_THROW(normalize_quadratic_basis(even), CliffordError);
    RawQuadraticSpace incompatible{g, {"a", "b", "c"}, {bits(g, {0}), bits(g, {1}), bits(g, {1})}, Mat::identity(3).scaled(2)};
    incompatible.polar(0, 1) = incompatible.polar(1, 0) = 1;
    EXPECT_THROW(normalize_quadratic_basis(incompatible), CliffordError);
    RawQuadraticSpace no_root{g, {"a"}, {bits(g, {0})}, Mat::identity(1).scaled(4)};  // q = 2
    EXPECT_THROW(normalize_quadratic_basis(no_root), CliffordError);
}

TEST(EvenClifford, DimensionAndStructure) {
    auto ec = build_even_clifford(load("m0_r3_cayley"));
    EXPECT_EQ(ec.even.algebra->dim(), 64u);
    EXPECT_EQ(ec.full->dim(), 128u);
    EXPECT_TRUE(check_associative(*ec.even.algebra).ok);
    EXPECT_TRUE(verify_grading(ec.even.gradings[0]).ok);
    EXPECT_TRUE(ec.bar_antiautomorphism) << ec.witness;
    EXPECT_TRUE(ec.bar_involutive) << ec.witness;
    EXPECT_TRUE(ec.so_image_closed) << ec.witness;
    EXPECT_TRUE(ec.bracket_identity) << ec.witness;
}

TEST(EvenClifford, HyperbolicCommutatorSquaresToOne) {
    auto ec = build_even_clifford(load("m2"));
    Vec u = ec.generator(0), v = ec.generator(1);
    Vec c = sub(ec.mul(u, v), ec.mul(v, u));
    EXPECT_EQ(ec.mul(c, c), unit_vec(128, 0));
    EXPECT_TRUE(ec.bracket_identity) << ec.witness;
}

TEST(EvenClifford, CentralElementSquare) {
    // l = 1: three w's
    auto ec = build_even_clifford(load("m2"));
    EXPECT_EQ(ec.space.l(), 1u);
    EXPECT_EQ(ec.mul(ec.z, ec.z), scale(unit_vec(128, 0), Scalar(-1)));
    for (size_t k = 0; k < 7; ++k) EXPECT_EQ(ec.mul(ec.z, ec.generator(k)), ec.mul(ec.generator(k), ec.z));
    // l = 0
    auto e3 = build_even_clifford(load("m3_z3"));
    EXPECT_EQ(e3.mul(e3.z, e3.z), unit_vec(128, 0));
}

TEST(EvenClifford, RejectsLargeSpaces) {
    GradingGroup g(0, {});
    std::vector<GroupElement> gs(4, GroupElement::zero(g));
    auto u = GradedQuadraticSpace::make(g, gs, {GroupElement::zero(g)});
    EXPECT_THROW(build_even_clifford(u), CliffordError);
}

TEST(DivisionClass, CayleyConfigurationIsSplit) {
    auto ec = build_even_clifford(load("m0_r3_cayley"));
    auto r = division_class(ec.even.gradings[0]);
    EXPECT_EQ(r.cls, DivisionClass::F);
    EXPECT_EQ(r.ideal_dim, 8u);
    EXPECT_EQ(r.max_component_dim, 1u);
}

TEST(DivisionClass, QuaternionCubeDegreesGiveQ) {
    auto ec = build_even_clifford(load("m0_r4b_quaternion_cube"));
    EXPECT_EQ(division_class(ec.even.gradings[0]).cls, DivisionClass::Q);
}

TEST(DivisionClass, RankSixIsDivision) {
    auto ec = build_even_clifford(load("m0_r6"));
    auto r = division_class(ec.even.gradings[0]);
    EXPECT_EQ(r.cls, DivisionClass::QQQ);
    EXPECT_EQ(r.ideal_dim, 64u);
}

TEST(DivisionClass, AgreesWithCaseTableOnAllConfigs) {
    for (auto& [name, want] : kExpected) {
        auto u = load(name);
        auto c = dim7_case_classify(u);
        EXPECT_EQ(c.cls, want) << name << " " << c.pattern;
        auto ec = build_even_clifford(u);
        auto r = division_class(ec.even.gradings[0]);
        EXPECT_EQ(r.cls, c.cls) << name;
        EXPECT_EQ(r.max_component_dim, 1u) << name;
        // idempotent is of degree 0 and squares to itself
        EXPECT_EQ(ec.even.algebra->multiply(r.idempotent, r.idempotent), r.idempotent) << name;
    }
}

TEST(CaseTable, RecordsPermutation) {
    auto c = dim7_case_classify(load("m0_r4b_quaternion_cube"));
    EXPECT_EQ(c.m, 0u);
    EXPECT_EQ(c.rank, 4u);
    EXPECT_EQ(c.pattern, "h5=h1+h2, h6=h1+h3, h7=h1+h4");
    EXPECT_EQ(c.permutation.size(), 7u);
    auto d = dim7_case_classify(load("m0_r4a"));
    EXPECT_EQ(d.pattern, "h5=h1+h2, h6=h3+h4, h7=0");
}

TEST(CaseTable, RejectsWrongDimension) {
    GradingGroup g(0, {});
    auto u = GradedQuadraticSpace::make(g, {GroupElement::zero(g)}, {GroupElement::zero(g)});
    EXPECT_THROW(dim7_case_classify(u), CliffordError);
}

TEST(Uuv, FactorizationAfterOneMerge) {
    // quaternion cube degrees with w6, w7 given the same degree merge into a pair
    GradingGroup g = z2(4);
    std::vector<std::vector<long>> d = {{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 1}, {1, 1, 0, 1}, {1, 0, 0, 1}, {1, 0, 0, 1}};
    RawQuadraticSpace raw{g, {"w1", "w2", "w3", "w4", "w5", "w6", "w7"}, {}, Mat::identity(7).scaled(2)};
    for (auto& x : d) raw.degrees.push_back(bits(g, x));
    auto u = normalize_quadratic_basis(raw);
    ASSERT_EQ(u.m(), 1u);
    auto r = check_uuv_factorization(u);
    EXPECT_TRUE(r.ok()) << r.witness;
    EXPECT_EQ(r.steps[0].complement_dim, 16u);
}

TEST(Uuv, ThreeSuccessiveFactorizations) {
    auto r = check_uuv_factorization(load("m3_z3"));
    ASSERT_EQ(r.steps.size(), 3u);
    EXPECT_TRUE(r.ok()) << r.witness;
    EXPECT_EQ(r.residual_dim, 1u);
    EXPECT_EQ(r.steps[0].total_dim, 64u);
    EXPECT_EQ(r.steps[2].complement_dim, 1u);
    for (auto& s : r.steps) EXPECT_TRUE(s.idempotent_ok);
}

TEST(Uuv, NoPairIsReported) {
    auto r = check_uuv_factorization(load("m0_r6"));
    EXPECT_FALSE(r.ok());
}

TEST(OctonionClifford, LeftMultiplications) {
    auto r = verify_cayley_clifford();
    EXPECT_TRUE(r.squares_ok) << r.witness;
    EXPECT_EQ(r.span_dim, 64u);
    EXPECT_TRUE(r.adjoint_ok) << r.witness;
}

TEST(QuaternionCube, PhiAndHermitianForm) {
    auto r = verify_quaternion_cube();
    EXPECT_TRUE(r.phi_hom) << r.witness;
    EXPECT_EQ(r.phi_rank, 64u);
    EXPECT_TRUE(r.commutes_with_right_q);
    EXPECT_TRUE(r.w_anticommute);
    EXPECT_TRUE(r.degrees_ok);
    EXPECT_TRUE(r.skew_hermitian);
    EXPECT_TRUE(r.right_linear);
    EXPECT_TRUE(r.intertwines_bar) << r.witness;
    // q2 (x) q2 (x) q2 squares to 1 since q2^2 = 1
    EXPECT_EQ(r.w_squares, std::vector<int>({1, -1, 1, -1, 1, -1, 1}));
    EXPECT_EQ(r.sample_h, Vec({Scalar(-2), Scalar(), Scalar(), Scalar()}));
}
