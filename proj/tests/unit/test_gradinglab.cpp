#include "finegrad/constructions.hpp"
#include "finegrad/gradinglab.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace finegrad;

namespace {

Grading trivial_grading(const AlgPtr& a) {
    GradingGroup g(0, {});
    return Grading::on_basis("trivial", a, g, std::vector<GroupElement>(a->dim(), GroupElement::zero(g)));
}

size_t weighted_sum(const TypeVector& t) {
    size_t s = 0;
    for (size_t i = 0; i < t.size(); ++i) s += (i + 1) * t[i];
    return s;
}

// components as sets of ambient-coordinate subspaces, compared through mutual refinement
bool same_partition(const Grading& a, const Grading& b) { return is_refinement(a, b) && is_refinement(b, a); }

void expect_all_pass(const std::vector<CatalogEntry>& entries, size_t dim) {
    for (auto& e : entries) {
        auto r = check_entry(e);
        EXPECT_TRUE(r.verified) << e.name << ": " << r.witness;
        EXPECT_EQ(r.type, r.expected_type) << e.name << " type " << type_str(r.type);
        EXPECT_EQ(r.group, r.expected_group) << e.name << " group " << r.group.str();
        EXPECT_EQ(weighted_sum(r.type), dim) << e.name;
    }
}

const CatalogEntry& find(const std::vector<CatalogEntry>& es, const std::string& name) {
    auto it = std::find_if(es.begin(), es.end(), [&](const CatalogEntry& e) { return e.name == name; });
    if (it == es.end()) throw std::out_of_range(name);
    return *it;
}

}  // namespace

TEST(VerifyGrading, CayleyAndTrivial) {
    auto c = build_cayley();
    EXPECT_TRUE(verify_grading(c.gradings[0]).ok);
    auto t = trivial_grading(c.algebra);
    EXPECT_TRUE(verify_grading(t).ok);
    EXPECT_EQ(grading_type(t), TypeVector({0, 0, 0, 0, 0, 0, 0, 1}));
}

TEST(VerifyGrading, CorruptedDegreeFailsWithWitness) {
    auto es = catalog(CatalogTarget::D21);
    Grading g = find(es, "D21 Z4xZ2^2").grading;
    ASSERT_TRUE(verify_grading(g).ok);
    // h1 must sit in degree 0 since [h1, e1] = 2 e1
    size_t j = 1;
    while (g.degrees[j] == g.degrees[0]) ++j;
    g.degrees[0] = g.degrees[j];
    auto r = verify_grading(g);
    EXPECT_FALSE(r.ok);
    EXPECT_FALSE(r.witness.empty());
}

TEST(TypeVector, Formatting) { EXPECT_EQ(type_str({36, 0, 0, 1}), "(36,0,0,1)"); }

TEST(GradingFromDiag, D21ThreeIotas) {
    auto d = build_D21(Scalar::alpha());
    Mat A = sp_a(), B = sp_b();
    DiagGenerators gens;
    gens.finite_autos = {{"i1", d.iota(A, A, A), 4}, {"i2", d.iota(B, B, A), 4}, {"i3", d.iota(A, B, B), 4}};
    auto g = grading_from_diag("iotas", d.built.algebra, gens);
    EXPECT_TRUE(verify_grading(g).ok);
    EXPECT_EQ(grading_type(g), TypeVector({14, 0, 1}));
    EXPECT_EQ(g.group, GradingGroup(0, {4, 4, 4}));

    // generator order does not change the partition
    DiagGenerators rev;
    rev.finite_autos = {gens.finite_autos[2], gens.finite_autos[0], gens.finite_autos[1]};
    auto g2 = grading_from_diag("iotas reversed", d.built.algebra, rev);
    EXPECT_TRUE(same_partition(g, g2));
}

TEST(GradingFromDiag, CartanWeightsOnly) {
    auto d = build_D21(Scalar::alpha());
    const auto& a = *d.built.algebra;
    DiagGenerators gens;
    for (int l = 1; l <= 3; ++l) {
        Mat ad = a.ad(d.h(l));
        std::vector<long> w;
        for (size_t i = 0; i < a.dim(); ++i) w.push_back(ad(i, i).constant().coeff(0).get_num().get_si());
        gens.torus_weights.push_back(w);
    }
    auto g = grading_from_diag("roots", d.built.algebra, gens);
    EXPECT_TRUE(verify_grading(g).ok);
    EXPECT_EQ(grading_type(g), TypeVector({14, 0, 1}));
    // every basis vector survives unchanged, so the labels are kept
    EXPECT_TRUE(std::is_permutation(g.algebra->labels().begin(), g.algebra->labels().end(), a.labels().begin()));
}

TEST(GradingFromDiag, IdentityGivesTrivialGrading) {
    auto d = build_D21(Scalar::alpha());
    DiagGenerators gens;
    gens.finite_autos = {{"id", Mat::identity(17), 2}};
    auto g = grading_from_diag("id", d.built.algebra, gens);
    // the parity split is not part of the degree
    EXPECT_EQ(g.support().size(), 1u);
    EXPECT_EQ(grading_type(g).back(), 1u);
    EXPECT_EQ(grading_type(g).size(), 17u);
}

TEST(GradingFromDiag, NilpotentTorusAndBadOrderAreRejected) {
    auto d = build_D21(Scalar::alpha());
    DiagGenerators gens;
    gens.torus.push_back({d.built.algebra->ad(1), -2, 2});  // ad e1
    EXPECT_THROW(grading_from_diag("bad", d.built.algebra, gens), LinAlgError);
    DiagGenerators bad_order;
    bad_order.finite_autos = {{"x", Mat::identity(17), 5}};
    EXPECT_THROW(grading_from_diag("bad", d.built.algebra, bad_order), DiagError);
}

TEST(Refinement, TrivialCoarseningAndTorsionForgetting) {
    auto es = catalog(CatalogTarget::G3);
    const Grading& g = find(es, "G3 ZxZ2^3").grading;
    auto coarse = coarsen_to_free(g);
    EXPECT_TRUE(is_refinement(g, trivial_grading(g.ambient)));
    EXPECT_TRUE(verify_grading(coarse).ok);
    EXPECT_TRUE(is_refinement(g, coarse));
    EXPECT_FALSE(is_refinement(coarse, g));
}

TEST(Refinement, DifferentAlgebrasAreRejected) {
    auto c = build_cayley();
    auto q = build_quaternions();
    EXPECT_THROW(is_refinement(c.gradings[0], q.gradings[0]), std::invalid_argument);
}

TEST(Catalog, D21Generic) {
    auto es = catalog(CatalogTarget::D21);
    EXPECT_EQ(es.size(), 5u);
    expect_all_pass(es, 17);
}

TEST(Catalog, D21MinusHalf) {
    auto es = catalog(CatalogTarget::D21, Scalar::rational(-1, 2));
    EXPECT_EQ(es.size(), 8u);
    expect_all_pass(es, 17);
    std::set<TypeVector> types;
    for (auto& e : es) types.insert(grading_type(e.grading));
    EXPECT_TRUE(types.count({17}));
    EXPECT_TRUE(types.count({15, 1}));
    EXPECT_TRUE(types.count({13, 2}));
}

TEST(Catalog, D21Omega) {
    auto es = catalog(CatalogTarget::D21, Scalar::zeta(4));
    EXPECT_EQ(es.size(), 6u);
    expect_all_pass(es, 17);
    EXPECT_EQ(grading_type(find(es, "D21 ZxZ3").grading), TypeVector({17}));
}

TEST(Catalog, G3) {
    auto es = catalog(CatalogTarget::G3);
    ASSERT_EQ(es.size(), 2u);
    expect_all_pass(es, 31);
    EXPECT_EQ(grading_type(es[0].grading), TypeVector({28, 0, 1}));
    EXPECT_EQ(grading_type(es[1].grading), TypeVector({17, 7}));
}

TEST(Catalog, F4) {
    auto es = catalog(CatalogTarget::F4);
    ASSERT_EQ(es.size(), 5u);
    expect_all_pass(es, 40);
    EXPECT_EQ(grading_type(es[0].grading), TypeVector({36, 0, 0, 1}));
    // the two tkk gradings are not comparable
    const Grading& a = find(es, "F4 Z^2xZ2^2 (tkk)").grading;
    const Grading& b = find(es, "F4 ZxZ2^3 (tkk)").grading;
    EXPECT_FALSE(is_refinement(a, b));
    EXPECT_FALSE(is_refinement(b, a));
}

TEST(Catalog, QuaternionModelFourDimensionalComponent) {
    auto es = catalog(CatalogTarget::F4);
    const Grading& g = find(es, "F4 Z2^3xZ4 (quaternion)").grading;
    std::vector<std::pair<GroupElement, std::vector<size_t>>> four;
    for (auto& c : g.components())
        if (c.second.size() == 4) four.push_back(c);
    ASSERT_EQ(four.size(), 1u);
    // three b3 elements in the degree of w7 (embedded with 2d) plus q2 from a1
    EXPECT_EQ(four[0].first, GroupElement(g.group, {}, {0, 0, 0, 2}));
    EXPECT_EQ(four[0].second.front(), g.algebra->idx("q2"));
    size_t b3_count = 0;
    for (size_t i : four[0].second) b3_count += (i >= 3 && i < 24);
    EXPECT_EQ(b3_count, 3u);
}

TEST(Lemma, TkkIsomorphism) {
    auto r = verify_tkk_iso_lemma();
    EXPECT_TRUE(r.ok) << r.witness;
    EXPECT_TRUE(r.lands_in_so);
    EXPECT_TRUE(r.bijective);
    EXPECT_TRUE(r.bracket_preserved);
    EXPECT_EQ(r.rank, 21u);
}
