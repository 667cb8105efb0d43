#include "finegrad/superalg.hpp"

#include <gtest/gtest.h>

using namespace finegrad;

namespace {

// sl2 with basis h, e, f
SuperAlgebra sl2() {
    SuperAlgebra a("sl2", {"h", "e", "f"}, {0, 0, 0});
    a.lie_expected = true;
    a.set_product(0, 1, SparseVec{{1, Scalar(2)}});
    a.set_product(1, 0, SparseVec{{1, Scalar(-2)}});
    a.set_product(0, 2, SparseVec{{2, Scalar(-2)}});
    a.set_product(2, 0, SparseVec{{2, Scalar(2)}});
    a.set_product(1, 2, SparseVec{{0, Scalar(1)}});
    a.set_product(2, 1, SparseVec{{0, Scalar(-1)}});
    return a;
}

// natural 2-dim module of sl2 with odd parity
ModuleAction natural(const AlgPtr& g) {
    ModuleAction m;
    m.algebra = g;
    m.dim = 2;
    m.parity = {1, 1};
    m.labels = {"x", "y"};
    m.rho = {Mat::from_rows({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(-1)}}, 2),
             Mat::from_rows({{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)}}, 2),
             Mat::from_rows({{Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0)}}, 2)};
    return m;
}

}  // namespace

TEST(SuperAlgebra, LieChecksOnSl2) {
    auto a = sl2();
    EXPECT_TRUE(check_lie_super(a).ok());
    EXPECT_EQ(a.multiply(unit_vec(3, 1), unit_vec(3, 2)), unit_vec(3, 0));
    EXPECT_TRUE(is_zero(a.multiply(unit_vec(3, 1), zero_vec(3))));
}

TEST(SuperAlgebra, AbelianIsLie) {
    SuperAlgebra a("ab", {"x", "y"}, {0, 1});
    EXPECT_TRUE(check_lie_super(a).ok());
}

TEST(SuperAlgebra, DetectsBrokenJacobi) {
    auto a = sl2();
    a.set_product(1, 2, SparseVec{{0, Scalar(1)}, {1, Scalar(1)}});
    a.set_product(2, 1, SparseVec{{0, Scalar(-1)}, {1, Scalar(-1)}});
    auto r = check_lie_super(a);
    EXPECT_TRUE(r.anticommutativity_ok);
    EXPECT_FALSE(r.jacobi_ok);
    EXPECT_FALSE(r.witness.empty());
}

TEST(SuperAlgebra, ParityAdditivity) {
    SuperAlgebra a("bad", {"x", "y"}, {0, 1});
    a.set_product(0, 0, SparseVec{{1, Scalar(1)}});
    EXPECT_THROW(a.check_parity_additivity(), StructureError);
}

TEST(SuperAlgebra, Homomorphism) {
    auto g = std::make_shared<const SuperAlgebra>(sl2());
    LinMap id{g, g, Mat::identity(3), 0};
    EXPECT_TRUE(check_homomorphism(id).ok);
    EXPECT_TRUE(is_bijective(id));
    // Chevalley involution h -> -h, e -> -f, f -> -e
    Mat c(3, 3);
    c(0, 0) = Scalar(-1);
    c(2, 1) = Scalar(-1);
    c(1, 2) = Scalar(-1);
    EXPECT_TRUE(check_homomorphism({g, g, c, 0}).ok);
    Mat bad = Mat::identity(3);
    bad(0, 0) = Scalar(2);
    EXPECT_FALSE(check_homomorphism({g, g, bad, 0}).ok);
}

TEST(Derivations, Sl2IsInner) {
    auto d = derivations(sl2());
    EXPECT_EQ(d.maps.size(), 3u);
    EXPECT_EQ(d.even_count, 3u);
    EXPECT_TRUE(check_lie_super(d.algebra).ok());
}

TEST(Derivations, UnitLineHasNone) {
    SuperAlgebra a("F", {"1"}, {0});
    a.set_product(0, 0, SparseVec{{0, Scalar(1)}});
    EXPECT_TRUE(derivations(a).maps.empty());
}

TEST(InvariantPairings, Osp12) {
    auto g = std::make_shared<const SuperAlgebra>(sl2());
    auto m = natural(g);
    ASSERT_TRUE(m.is_representation());
    auto p = invariant_pairings(m, adjoint_action(g));
    EXPECT_EQ(p.size(), 1u);
    auto c = complete_superalgebra("osp12", m);
    EXPECT_EQ(c.algebra.dim(), 5u);
    EXPECT_TRUE(check_lie_super(c.algebra).ok());
    EXPECT_TRUE(check_lie_super(rescale_odd_bracket(c.algebra, Scalar(-3))).ok());
}

TEST(InvariantPairings, EmptyModule) {
    auto g = std::make_shared<const SuperAlgebra>(sl2());
    ModuleAction m;
    m.algebra = g;
    m.rho.assign(3, Mat(0, 0));
    EXPECT_TRUE(invariant_pairings(m, adjoint_action(g)).empty());
}

TEST(CompleteSuperalgebra, NoPairingIsError) {
    // trivial one-dim odd module: no nonzero invariant symmetric map into sl2
    auto g = std::make_shared<const SuperAlgebra>(sl2());
    ModuleAction m;
    m.algebra = g;
    m.dim = 1;
    m.parity = {1};
    m.rho.assign(3, Mat(1, 1));
    EXPECT_THROW(complete_superalgebra("x", m), StructureError);
}

TEST(SuperAlgebra, ChangeBasisAndSerialization) {
    auto a = sl2();
    std::vector<Vec> nb{{Scalar(2), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(1)},
                        {Scalar(0), Scalar(1), Scalar(-1)}};
    auto b = a.change_basis(nb, {"H", "X", "Y"});
    EXPECT_TRUE(check_lie_super(b).ok());
    auto text = store_superalgebra(b);
    EXPECT_EQ(load_superalgebra(text), b);
    EXPECT_THROW(load_superalgebra("garbage"), ParseError);
}

TEST(SuperAlgebra, GeneratedSubalgebra) {
    auto a = sl2();
    EXPECT_EQ(generated_subalgebra(a, {unit_vec(3, 1), unit_vec(3, 2)}).size(), 3u);
    EXPECT_EQ(generated_subalgebra(a, {unit_vec(3, 1)}).size(), 1u);
}

TEST(Associativity, Check) {
    SuperAlgebra a("F", {"1"}, {0});
    a.set_product(0, 0, SparseVec{{0, Scalar(1)}});
    EXPECT_TRUE(check_associative(a).ok);
    EXPECT_FALSE(check_associative(sl2()).ok);
}
