#include "finegrad/constructions.hpp"

#include <gtest/gtest.h>

using namespace finegrad;

namespace {

Vec unit(const SuperAlgebra& a, const std::string& label) { return unit_vec(a.dim(), a.idx(label)); }

Scalar norm_of(const BuiltAlgebra& b, const Vec& x) {
    const Mat& g = b.forms.at("norm");
    Scalar s;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) s += x[i] * g(i, j) * x[j];
    return s * Scalar::rational(1, 2);
}

}  // namespace

TEST(Quaternions, UnitsAndInvolution) {
    auto q = build_quaternions();
    const auto& a = *q.algebra;
    EXPECT_TRUE(check_associative(a).ok);
    EXPECT_EQ(a.multiply(unit(a, "q1"), unit(a, "q1")), unit(a, "1"));
    EXPECT_EQ(a.multiply(unit(a, "q2"), unit(a, "q2")), unit(a, "1"));
    EXPECT_EQ(q.maps.at("bar") * unit(a, "q3"), scale(unit(a, "q3"), Scalar(-1)));
    EXPECT_TRUE(verify_grading(q.gradings[0]).ok);
    EXPECT_EQ(grading_type(q.gradings[0]), TypeVector({4}));
    // N = det: N(q1) = -1, N(q3) = 1
    EXPECT_EQ(norm_of(q, unit(a, "q1")), Scalar(-1));
    EXPECT_EQ(norm_of(q, unit(a, "q3")), Scalar(1));
}

TEST(Cayley, ProductsNormAndDegreeTwoEquation) {
    auto c = build_cayley();
    const auto& a = *c.algebra;
    EXPECT_EQ(a.multiply(unit(a, "e2"), unit(a, "e3")), unit(a, "e5"));
    EXPECT_EQ(norm_of(c, unit(a, "e5")), Scalar(1));
    EXPECT_TRUE(verify_grading(c.gradings[0]).ok);
    // x^2 - N(x,1) x + N(x) 1 = 0 on e7 and on 1 + e7
    for (Vec x : {unit(a, "e7"), add(unit(a, "1"), unit(a, "e7"))}) {
        Scalar t;
        for (size_t i = 0; i < 8; ++i) t += c.forms.at("norm")(0, i) * x[i];
        Vec r = a.multiply(x, x);
        axpy(r, -t, x);
        axpy(r, norm_of(c, x), unit(a, "1"));
        EXPECT_TRUE(is_zero(r));
    }
    // composition on basis pairs
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j) {
            Vec x = unit_vec(8, i), y = unit_vec(8, j);
            EXPECT_EQ(norm_of(c, a.multiply(x, y)), norm_of(c, x) * norm_of(c, y));
        }
}

TEST(Cayley, GradingAutomorphismsAreAutomorphisms) {
    auto c = build_cayley();
    for (auto& s : cayley_grading_autos()) EXPECT_TRUE(check_homomorphism({c.algebra, c.algebra, s, 0}).ok);
}

TEST(An, A2IsQuaternionsAndA4Commutator) {
    auto a2 = build_An(2);
    auto q = build_quaternions();
    EXPECT_EQ(a2.gradings[0].components().size(), 4u);
    // x -> q1, y -> q2
    Mat f(4, 4);
    const auto& qa = *q.algebra;
    f(qa.idx("1"), a2.algebra->idx("x0y0")) = 1;
    f(qa.idx("q1"), a2.algebra->idx("x1y0")) = 1;
    f(qa.idx("q2"), a2.algebra->idx("x0y1")) = 1;
    Vec q1q2 = qa.multiply(unit(qa, "q1"), unit(qa, "q2"));
    for (size_t i = 0; i < 4; ++i) f(i, a2.algebra->idx("x1y1")) = q1q2[i];
    EXPECT_TRUE(check_homomorphism({a2.algebra, q.algebra, f, 0}).ok);
    EXPECT_TRUE(is_bijective({a2.algebra, q.algebra, f, 0}));

    auto a4 = build_An(4);
    const auto& a = *a4.algebra;
    EXPECT_TRUE(check_associative(a).ok);
    Vec xy = a.multiply(unit(a, "x1y0"), unit(a, "x0y1"));
    Vec yx = a.multiply(unit(a, "x0y1"), unit(a, "x1y0"));
    // yx = c x1y1 with c = eps^-1, so xy (yx)^-1 = eps
    Scalar c = yx[a.idx("x1y1")];
    Scalar ratio = xy[a.idx("x1y1")] / c;
    EXPECT_EQ(ratio, Scalar::zeta(3));
    EXPECT_THROW(build_An(5), std::invalid_argument);
}

TEST(Kac, ProductsGradingsAndIdempotents) {
    auto kp = build_kac();
    const auto& k10 = *kp.k10.algebra;
    Vec ee = unit(k10, "e.e");
    Vec want = ee;
    want[k10.idx("1")] = Scalar::rational(-3, 16);
    EXPECT_EQ(k10.multiply(ee, ee), want);
    EXPECT_EQ(grading_type(kp.k10.grading("Z^2")), TypeVector({8, 1}));
    EXPECT_EQ(grading_type(kp.k10.grading("ZxZ2")), TypeVector({7, 0, 1}));
    for (auto& g : kp.k10.gradings) EXPECT_TRUE(verify_grading(g).ok) << g.name;
    EXPECT_TRUE(check_homomorphism({kp.k10.algebra, kp.k10.algebra, kp.k10.maps.at("tau"), 0}).ok);
    const Vec& e1 = kp.k10.elements.at("E1");
    const Vec& e2 = kp.k10.elements.at("E2");
    EXPECT_EQ(k10.multiply(e1, e1), e1);
    EXPECT_EQ(k10.multiply(e2, e2), e2);
    EXPECT_TRUE(is_zero(k10.multiply(e1, e2)));
    EXPECT_EQ(add(e1, e2), unit(k10, "1"));
    // E2 (a(x)b) = a(x)b on V(x)V
    Vec vv = unit(k10, "v1.v-1");
    EXPECT_EQ(k10.multiply(e2, vv), vv);
}

TEST(Tkk, DimensionsParityAndBrackets) {
    auto kp = build_kac();
    auto t = build_tkk(kp.k10, "tkk(K10)");
    const auto& a = *t.built.algebra;
    EXPECT_EQ(a.dim(), 40u);
    EXPECT_EQ(a.even_dim(), 24u);
    EXPECT_EQ(a.odd_dim(), 16u);
    EXPECT_TRUE(check_lie_super(a).ok());
    // [q1(x)E1, q2(x)E1] = [q1,q2](x)E1
    const Vec& e1 = kp.k10.elements.at("E1");
    auto qe = [&](size_t q) {
        Vec v(a.dim());
        for (size_t j = 0; j < 10; ++j) v[q * 10 + j] = e1[j];
        return v;
    };
    Vec br = a.multiply(qe(0), qe(1));
    EXPECT_EQ(br, scale(qe(2), Scalar(2)));  // [q1,q2] = 2 q3
}

TEST(Tkk, EvenPartSplitsAsThreePlusTwentyOne) {
    auto kp = build_kac();
    auto t = build_tkk(kp.k10, "tkk(K10)");
    const auto& a = *t.built.algebra;
    const Vec& e1 = kp.k10.elements.at("E1");
    std::vector<Vec> ideal;
    for (size_t q = 0; q < 3; ++q) {
        Vec v(a.dim());
        for (size_t j = 0; j < 10; ++j) v[q * 10 + j] = e1[j];
        ideal.push_back(v);
    }
    // the span of Q0(x)E1 is stable under the even part and commutes with its complement
    IncrementalSpan s(a.dim());
    for (auto& v : ideal) s.add(v);
    for (size_t i = 0; i < a.dim(); ++i) {
        if (a.parity(i)) continue;
        for (auto& v : ideal) EXPECT_TRUE(s.contains(a.multiply(unit_vec(a.dim(), i), v)));
    }
    auto rep = verify_tkk_iso_lemma();
    EXPECT_TRUE(rep.ok) << rep.witness;
    EXPECT_EQ(rep.rank, 21u);
}

TEST(D21, SymbolicAlphaIsLieSuperalgebra) {
    auto d = build_D21(Scalar::alpha());
    const auto& a = *d.built.algebra;
    EXPECT_EQ(a.even_dim(), 9u);
    EXPECT_EQ(a.odd_dim(), 8u);
    EXPECT_TRUE(check_lie_super(a).ok());
    // [uuu, vvv] = gamma1_{u,v} + alpha gamma2_{u,v} + (-1-alpha) gamma3_{u,v}; gamma_{u,v} = -h
    Vec br = a.multiply(unit(a, "uuu"), unit(a, "vvv"));
    Vec want(17);
    want[a.idx("h1")] = -1;
    want[a.idx("h2")] = -Scalar::alpha();
    want[a.idx("h3")] = Scalar(1) + Scalar::alpha();
    EXPECT_EQ(br, want);
    EXPECT_THROW(build_D21(Scalar(0)), std::invalid_argument);
    EXPECT_THROW(build_D21(Scalar(-1)), std::invalid_argument);
}

TEST(D21, AutomorphismsAreHomomorphisms) {
    auto d = build_D21(Scalar::alpha());
    auto p = d.built.algebra;
    Mat A = sp_a(), B = sp_b();
    EXPECT_TRUE(check_homomorphism({p, p, d.iota(A, B, sp_d(Scalar(3))), 0}).ok);
    EXPECT_FALSE(check_homomorphism({p, p, d.pi23(), 0}).ok);  // needs alpha = -1/2

    auto dh = build_D21(Scalar::rational(-1, 2));
    auto q = dh.built.algebra;
    EXPECT_TRUE(check_homomorphism({q, q, dh.pi23(), 0}).ok);
    EXPECT_TRUE(check_homomorphism({q, q, dh.hat_phi(B, Mat::identity(2), B), 0}).ok);

    auto dw = build_D21(Scalar::zeta(4));
    EXPECT_TRUE(check_homomorphism({dw.built.algebra, dw.built.algebra, dw.varpi(), 0}).ok);
}

TEST(G3, DimensionsAndLie) {
    auto g = build_G3();
    const auto& a = *g.built.algebra;
    EXPECT_EQ(a.dim(), 31u);
    EXPECT_EQ(a.odd_dim(), 14u);
    EXPECT_EQ(g.completion.solution_dim, 1u);
    EXPECT_TRUE(check_lie_super(a).ok());
    for (auto& s : cayley_grading_autos())
        EXPECT_TRUE(check_homomorphism({g.built.algebra, g.built.algebra, g.extend_cayley_auto(s), 0}).ok);
    EXPECT_EQ(g.cartan_torus().size(), 2u);
}

TEST(G3, SecondCalibrationPointStaysLie) {
    auto g = build_G3();
    auto r = rescale_odd_bracket(*g.built.algebra, Scalar(-3));
    EXPECT_TRUE(check_lie_super(r).ok());
}

TEST(F4, CayleyModel) {
    auto f = build_F4(F4Model::Cayley);
    const auto& a = *f.built.algebra;
    EXPECT_EQ(a.dim(), 40u);
    EXPECT_EQ(a.even_dim(), 24u);
    EXPECT_TRUE(check_lie_super(a).ok());
    // l_x^2 = -N(x) id on basis
    auto c = build_cayley();
    for (size_t i = 1; i < 8; ++i) {
        Mat l = c.algebra->ad(i);
        EXPECT_EQ(l * l, Mat::identity(8).scaled(-1));
    }
    for (auto& s : cayley_grading_autos())
        EXPECT_TRUE(check_homomorphism({f.built.algebra, f.built.algebra, f.extend_cayley_auto(s), 0}).ok);
}

TEST(F4, TkkModel) {
    auto f = build_F4(F4Model::Tkk);
    EXPECT_EQ(f.built.algebra->dim(), 40u);
    EXPECT_TRUE(check_lie_super(*f.built.algebra).ok());
}

TEST(F4, QuaternionModel) {
    auto f = build_F4(F4Model::Quaternion);
    const auto& a = *f.built.algebra;
    EXPECT_EQ(a.dim(), 40u);
    EXPECT_EQ(f.b3.size(), 21u);
    EXPECT_TRUE(check_lie_super(a).ok());
    const std::vector<std::array<long, 4>> w = {{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 1},
                                                 {1, 1, 0, 1}, {1, 0, 0, 1}, {0, 0, 0, 1}};
    EXPECT_EQ(quaternion_w_degrees(), w);
    auto deg = f.quaternion_degrees();
    ASSERT_EQ(deg.size(), 40u);
    auto g = Grading::on_basis("q", f.built.algebra, GradingGroup(0, {2, 2, 2, 4}), deg);
    EXPECT_TRUE(verify_grading(g).ok);
}

TEST(F4, ModelNames) {
    EXPECT_EQ(parse_f4_model("tkk"), F4Model::Tkk);
    EXPECT_EQ(model_name(F4Model::Quaternion), "quaternion");
    EXPECT_THROW(parse_f4_model("octonion"), std::invalid_argument);
}

TEST(Roots, Candidates) {
    auto r = root_candidates(4);
    ASSERT_EQ(r.size(), 4u);
    EXPECT_EQ(r[1], Scalar::zeta(3));
    EXPECT_THROW(root_candidates(5), std::invalid_argument);
}
