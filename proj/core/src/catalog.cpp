#include "finegrad/constructions.hpp"
#include "finegrad/gradinglab.hpp"
#include <algorithm>

namespace finegrad {

namespace {

AbelianInvariants inv(int r, std::vector<long> f) { return AbelianInvariants{r, std::move(f)}; }

Mat ad_of(const SuperAlgebra& a, const Vec& x) { return a.left_mult(x); }

// diagonal grading derivation of K10: weight of the chosen tensor factor
Mat k10_degree_derivation(const BuiltAlgebra& k10, size_t factor) {
    const Grading& z2 = k10.grading("Z^2");
    size_t n = k10.algebra->dim();
    Mat d(n, n);
    for (size_t i = 0; i < n; ++i) d(i, i) = z2.degrees[i].free_part()[factor];
    return d;
}

Mat q0_block(const Mat& m) {
    Mat b(3, 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) b(i, j) = m(i + 1, j + 1);
    return b;
}

std::vector<CatalogEntry> f4_catalog() {
    std::vector<CatalogEntry> out;
    {
        auto f = build_F4(F4Model::Cayley);
        const SuperAlgebra& a = *f.built.algebra;
        Scalar two_i = Scalar(2) * Scalar::zeta(3);
        std::vector<Vec> tor;
        Vec h(a.dim());
        h[a.idx("h")] = 1;
        tor.push_back(h);
        for (const char* s : {"S12", "S36", "S57"}) {
            Vec v(a.dim());
            v[a.idx(s)] = two_i;
            tor.push_back(v);
        }
        DiagGenerators cartan;
        for (auto& t : tor) cartan.torus.push_back({ad_of(a, t), -4, 4});
        out.push_back({"F4 Cartan Z^4 (cayley)", grading_from_diag("F4 Cartan Z^4", f.built.algebra, cartan),
                       {36, 0, 0, 1}, inv(4, {})});

        DiagGenerators z2;
        z2.torus.push_back({ad_of(a, h), -2, 2});
        auto sig = cayley_grading_autos();
        for (size_t k = 0; k < sig.size(); ++k)
            z2.finite_autos.push_back({"sigma" + std::to_string(k + 1), f.extend_cayley_auto(sig[k]), 2});
        out.push_back({"F4 ZxZ2^3 (cayley)", grading_from_diag("F4 ZxZ2^3 (cayley)", f.built.algebra, z2),
                       {19, 0, 7}, inv(1, {2, 2, 2})});
    }
    {
        auto f = build_F4(F4Model::Tkk);
        const TkkAlgebra& t = *f.tkk;
        const SuperAlgebra& a = *f.built.algebra;
        auto kp = build_kac();
        Mat d1 = ad_of(a, t.der_element(k10_degree_derivation(kp.k10, 0)));
        Mat d2 = ad_of(a, t.der_element(k10_degree_derivation(kp.k10, 1)));
        auto qa = quaternion_grading_autos();
        Mat id10 = Mat::identity(10);
        DiagGenerators g1;
        g1.torus.push_back({d1, -4, 4});
        g1.torus.push_back({d2, -4, 4});
        g1.finite_autos.push_back({"conj q1", t.extend(q0_block(qa[0]), id10), 2});
        g1.finite_autos.push_back({"conj q2", t.extend(q0_block(qa[1]), id10), 2});
        out.push_back({"F4 Z^2xZ2^2 (tkk)", grading_from_diag("F4 Z^2xZ2^2 (tkk)", f.built.algebra, g1), {32, 4},
                       inv(2, {2, 2})});

        DiagGenerators g2;
        g2.torus.push_back({d1 + d2, -4, 4});
        g2.finite_autos.push_back({"conj q1", t.extend(q0_block(qa[0]), id10), 2});
        g2.finite_autos.push_back({"conj q2", t.extend(q0_block(qa[1]), id10), 2});
        g2.finite_autos.push_back({"tau", t.extend(Mat::identity(3), kp.k10.maps.at("tau")), 2});
        out.push_back({"F4 ZxZ2^3 (tkk)", grading_from_diag("F4 ZxZ2^3 (tkk)", f.built.algebra, g2), {31, 0, 3},
                       inv(1, {2, 2, 2})});
    }
    {
        auto f = build_F4(F4Model::Quaternion);
        auto deg = f.quaternion_degrees();
        out.push_back({"F4 Z2^3xZ4 (quaternion)",
                       Grading::on_basis("F4 Z2^3xZ4 (quaternion)", f.built.algebra, GradingGroup(0, {2, 2, 2, 4}), deg),
                       {24, 6, 0, 1}, inv(0, {2, 2, 2, 4})});
    }
    return out;
}

std::vector<CatalogEntry> g3_catalog() {
    std::vector<CatalogEntry> out;
    auto g = build_G3();
    const SuperAlgebra& a = *g.built.algebra;
    Vec h(a.dim());
    h[a.idx("h")] = 1;
    DiagGenerators cartan;
    cartan.torus.push_back({ad_of(a, h), -2, 2});
    for (auto& t : g.cartan_torus()) cartan.torus.push_back({ad_of(a, t), -6, 6});
    out.push_back({"G3 Cartan Z^3", grading_from_diag("G3 Cartan Z^3", g.built.algebra, cartan), {28, 0, 1},
                   inv(3, {})});

    DiagGenerators z2;
    z2.torus.push_back({ad_of(a, h), -2, 2});
    auto sig = cayley_grading_autos();
    for (size_t k = 0; k < sig.size(); ++k)
        z2.finite_autos.push_back({"sigma" + std::to_string(k + 1), g.extend_cayley_auto(sig[k]), 2});
    out.push_back({"G3 ZxZ2^3", grading_from_diag("G3 ZxZ2^3", g.built.algebra, z2), {17, 7}, inv(1, {2, 2, 2})});
    return out;
}

std::vector<CatalogEntry> d21_catalog(const Scalar& alpha) {
    std::vector<CatalogEntry> out;
    auto d = build_D21(alpha);
    const SuperAlgebra& a = *d.built.algebra;
    auto hvec = [&](std::initializer_list<int> ls) {
        Vec v(a.dim());
        for (int l : ls) v[d.h(l)] += 1;
        return v;
    };
    Mat A = sp_a(), B = sp_b(), I = Mat::identity(2);

    DiagGenerators cartan;
    for (int l = 1; l <= 3; ++l) cartan.torus.push_back({ad_of(a, hvec({l})), -2, 2});
    out.push_back({"D21 Cartan Z^3", grading_from_diag("D21 Cartan Z^3", d.built.algebra, cartan), {14, 0, 1},
                   inv(3, {})});

    DiagGenerators z4;
    z4.finite_autos.push_back({"iota(a,a,a)", d.iota(A, A, A), 4});
    z4.finite_autos.push_back({"iota(b,b,a)", d.iota(B, B, A), 4});
    z4.finite_autos.push_back({"iota(a,b,b)", d.iota(A, B, B), 4});
    out.push_back({"D21 Z4xZ2^2", grading_from_diag("D21 Z4xZ2^2", d.built.algebra, z4), {14, 0, 1},
                   inv(0, {2, 2, 4})});

    for (int l = 1; l <= 3; ++l) {
        DiagGenerators g;
        g.torus.push_back({ad_of(a, hvec({l})), -2, 2});
        Mat fa[3] = {A, A, A}, fb[3] = {B, B, B};
        fa[l - 1] = I;
        fb[l - 1] = I;
        g.finite_autos.push_back({"iota a", d.iota(fa[0], fa[1], fa[2]), 4});
        g.finite_autos.push_back({"iota b", d.iota(fb[0], fb[1], fb[2]), 4});
        std::string name = "D21 ZxZ2^2 (torus " + std::to_string(l) + ")";
        out.push_back({name, grading_from_diag(name, d.built.algebra, g), {11, 3}, inv(1, {2, 2})});
    }

    if (alpha == Scalar::zeta(4) || alpha == Scalar::zeta(8)) {
        DiagGenerators g;
        g.torus.push_back({ad_of(a, hvec({1, 2, 3})), -3, 3});
        g.finite_autos.push_back({"varpi", d.varpi(), 3});
        out.push_back({"D21 ZxZ3", grading_from_diag("D21 ZxZ3", d.built.algebra, g), {17}, inv(1, {3})});
    }
    if (alpha == Scalar::rational(-1, 2)) {
        {
            DiagGenerators g;
            g.torus.push_back({ad_of(a, hvec({1})), -2, 2});
            g.finite_autos.push_back({"iota(1,a,a)", d.iota(I, A, A), 4});
            g.finite_autos.push_back({"iota(1,b,b)", d.iota(I, B, B), 4});
            g.finite_autos.push_back({"pi23", d.pi23(), 2});
            out.push_back({"D21 ZxZ2^3", grading_from_diag("D21 ZxZ2^3", d.built.algebra, g), {17},
                           inv(1, {2, 2, 2})});
        }
        {
            DiagGenerators g;
            g.torus.push_back({ad_of(a, hvec({1})), -2, 2});
            g.torus.push_back({ad_of(a, hvec({2, 3})), -4, 4});
            g.finite_autos.push_back({"pi23", d.pi23(), 2});
            out.push_back({"D21 Z^2xZ2", grading_from_diag("D21 Z^2xZ2", d.built.algebra, g), {15, 1},
                           inv(2, {2})});
        }
        {
            // phi = hat_phi(b, 1, b), psi = iota(a, a, b^-1 a b)
            DiagGenerators g;
            g.finite_autos.push_back({"phi", d.hat_phi(B, I, B), 4});
            g.finite_autos.push_back({"psi", d.iota(A, A, inverse(B) * A * B), 4});
            out.push_back({"D21 Z4xZ4", grading_from_diag("D21 Z4xZ4", d.built.algebra, g), {13, 2},
                           inv(0, {4, 4})});
        }
    }
    return out;
}

}  // namespace

std::vector<CatalogEntry> catalog(CatalogTarget target, const Scalar& alpha) {
    switch (target) {
        case CatalogTarget::F4: return f4_catalog();
        case CatalogTarget::G3: return g3_catalog();
        case CatalogTarget::D21: return d21_catalog(alpha);
    }
    return {};
}

LemmaReport verify_tkk_iso_lemma() {
    LemmaReport rep;
    auto kp = build_kac();
    auto t = build_tkk(kp.k10, "tkk(K10)");
    const SuperAlgebra& tk = *t.built.algebra;
    const SuperAlgebra& k10 = *kp.k10.algebra;
    size_t dj = k10.dim();
    const Vec& e2 = kp.k10.elements.at("E2");
    const Mat& kform = kp.k3.forms.at("bilinear");

    // V (x) V inside K10: indices of v_a (x) v_b, a, b in {1, 2} of K3
    std::vector<size_t> vv;
    std::vector<std::pair<size_t, size_t>> vvpair;
    for (size_t a = 1; a < 3; ++a)
        for (size_t b = 1; b < 3; ++b) {
            vv.push_back(1 + 3 * a + b);
            vvpair.push_back({a, b});
        }

    // U = Q0 (3) + V(x)V (4) with polar form
    auto Q = build_quaternions();
    const Mat& nq = Q.forms.at("norm");
    Mat G(7, 7);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) G(i, j) = nq(i + 1, j + 1);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            G(3 + i, 3 + j) = kform(vvpair[i].first, vvpair[j].first) * kform(vvpair[i].second, vvpair[j].second);

    std::vector<Vec> dom;  // domain basis in tkk coordinates
    std::vector<Mat> img;
    // p (x) E2 -> ad_p on Q0
    for (size_t p = 0; p < 3; ++p) {
        Vec v(tk.dim());
        for (size_t j = 0; j < dj; ++j) v[p * dj + j] = e2[j];
        dom.push_back(v);
        Mat m(7, 7);
        for (size_t q = 0; q < 3; ++q)
            for (auto& s : Q.algebra->product(p + 1, q + 1)) {
                if (s.k == 0) continue;
                m(s.k - 1, q) += s.c;
            }
        for (size_t q = 0; q < 3; ++q)
            for (auto& s : Q.algebra->product(q + 1, p + 1)) {
                if (s.k == 0) continue;
                m(s.k - 1, q) -= s.c;
            }
        img.push_back(m);
    }
    // p (x) (u (x) v) -> Q(p,.) u(x)v - Q(u(x)v,.) p
    for (size_t p = 0; p < 3; ++p)
        for (size_t w = 0; w < 4; ++w) {
            Vec v(tk.dim());
            v[p * dj + vv[w]] = 1;
            dom.push_back(v);
            Mat m(7, 7);
            for (size_t y = 0; y < 7; ++y) {
                m(3 + w, y) += G(p, y);
                m(p, y) -= G(3 + w, y);
            }
            img.push_back(m);
        }
    // even derivations, restricted to V(x)V
    for (size_t k = 0; k < t.der.maps.size(); ++k) {
        if (t.der.algebra.parity(k)) continue;
        Vec v(tk.dim());
        v[t.der_offset + k] = 1;
        dom.push_back(v);
        const Mat& d = t.der.maps[k];
        Mat m(7, 7);
        for (size_t j = 0; j < 4; ++j)
            for (size_t i = 0; i < dj; ++i) {
                if (d(i, vv[j]).is_zero()) continue;
                auto it = std::find(vv.begin(), vv.end(), i);
                if (it == vv.end()) {
                    rep.ok = false;
                    rep.witness = "derivation D" + std::to_string(k + 1) + " does not preserve V(x)V";
                    return rep;
                }
                m(3 + static_cast<size_t>(it - vv.begin()), 3 + j) = d(i, vv[j]);
            }
        img.push_back(m);
    }

    for (size_t i = 0; i < img.size(); ++i) {
        if (!(img[i].transpose() * G + G * img[i]).is_zero()) {
            rep.lands_in_so = false;
            if (rep.witness.empty()) rep.witness = "image of domain vector " + std::to_string(i) + " is not in so(U,Q)";
        }
    }
    std::vector<Vec> flat;
    for (auto& m : img) {
        Vec f;
        for (size_t i = 0; i < 7; ++i)
            for (size_t j = 0; j < 7; ++j) f.push_back(m(i, j));
        flat.push_back(f);
    }
    rep.rank = rank(Mat::from_rows(flat, 49));
    rep.bijective = rep.rank == 21 && dom.size() == 21;

    rep.bracket_preserved = true;
    CoordinateSolver dc(dom);
    for (size_t i = 0; i < dom.size() && rep.bracket_preserved; ++i)
        for (size_t j = 0; j < dom.size(); ++j) {
            auto c = dc.solve(tk.multiply(dom[i], dom[j]));
            if (!c) {
                rep.bracket_preserved = false;
                rep.witness = "domain is not closed under the bracket";
                break;
            }
            Mat lhs(7, 7);
            for (size_t k = 0; k < c->size(); ++k)
                if (!(*c)[k].is_zero()) lhs = lhs + img[k].scaled((*c)[k]);
            Mat rhs = img[i] * img[j] - img[j] * img[i];
            if (lhs != rhs) {
                rep.bracket_preserved = false;
                if (rep.witness.empty())
                    rep.witness = "bracket of domain vectors " + std::to_string(i) + ", " + std::to_string(j) + " not preserved";
                break;
            }
        }
    rep.ok = rep.lands_in_so && rep.bijective && rep.bracket_preserved;
    return rep;
}

}  // namespace finegrad
