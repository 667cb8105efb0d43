#include "finegrad/constructions.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace finegrad {

namespace {

Mat mat2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    Mat m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat k(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (size_t p = 0; p < b.rows(); ++p)
                for (size_t q = 0; q < b.cols(); ++q)
                    if (!b(p, q).is_zero()) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return k;
}

Vec flatten(const Mat& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

Mat block(const Mat& m, size_t r0, size_t c0, size_t nr, size_t nc) {
    Mat b(nr, nc);
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) b(i, j) = m(r0 + i, c0 + j);
    return b;
}

void put_block(Mat& m, size_t r0, size_t c0, const Mat& b) {
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
}

Mat commutator(const Mat& a, const Mat& b, int sign = 1) { return a * b - (b * a).scaled(Scalar(sign)); }

Scalar det2(const Mat& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

GroupElement elem(const GradingGroup& g, std::vector<long> f, std::vector<long> t) {
    return GroupElement(g, std::move(f), std::move(t));
}

// sl2 matrices in the basis (u, v)
const std::array<Mat, 3>& sl2_mats() {
    static const std::array<Mat, 3> m = {mat2(1, 0, 0, -1), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0)};
    return m;
}

// [[a,b],[c,-a]] -> (a, b, c) on (h, e, f)
std::array<Scalar, 3> sl2_coords(const Mat& m) {
    if (m(1, 1) != -m(0, 0)) throw StructureError("sl2_coords: matrix is not traceless");
    return {m(0, 0), m(0, 1), m(1, 0)};
}

SuperAlgebra sl2_algebra() {
    return SuperAlgebra::from_products("sl2", {"h", "e", "f"}, {0, 0, 0}, [](size_t i, size_t j) {
        auto c = sl2_coords(commutator(sl2_mats()[i], sl2_mats()[j]));
        return Vec{c[0], c[1], c[2]};
    });
}

// coordinates of a matrix in a family of matrices
struct MatCoords {
    explicit MatCoords(const std::vector<Mat>& mats) : solver(flat(mats)) {}
    Vec operator()(const Mat& m) const {
        auto c = solver.solve(flatten(m));
        if (!c) throw StructureError("matrix outside the expected span");
        return *c;
    }
    static std::vector<Vec> flat(const std::vector<Mat>& mats) {
        std::vector<Vec> v;
        for (auto& m : mats) v.push_back(flatten(m));
        return v;
    }
    CoordinateSolver solver;
};

// direct sum of Lie algebras, parities from the summands
SuperAlgebra direct_sum(const std::string& name, const SuperAlgebra& a, const SuperAlgebra& b,
                        const std::vector<std::string>& labels) {
    size_t na = a.dim(), nb = b.dim();
    std::vector<int> par(a.parities());
    par.insert(par.end(), b.parities().begin(), b.parities().end());
    auto s = SuperAlgebra::from_products(name, labels, par, [&](size_t i, size_t j) {
        Vec v(na + nb);
        if (i < na && j < na) {
            for (auto& t : a.product(i, j)) v[t.k] = t.c;
        } else if (i >= na && j >= na) {
            for (auto& t : b.product(i - na, j - na)) v[na + t.k] = t.c;
        }
        return v;
    });
    s.lie_expected = true;
    return s;
}

std::vector<std::string> prefixed(const std::string& p, size_t n) {
    std::vector<std::string> out;
    for (size_t i = 1; i <= n; ++i) out.push_back(p + std::to_string(i));
    return out;
}

// Cayley algebra multiplication table, e_i e_{i+1} = e_{i+3}
const std::array<std::array<int, 3>, 7> kTriples = {{{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}}};
const std::array<std::array<long, 3>, 8> kCayleyDeg = {
    {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}, {1, 0, 1}}};

// q1, q2, q3 degrees in Z2^2
const std::array<std::array<long, 2>, 4> kQuatDeg = {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};

}  // namespace

const Grading& BuiltAlgebra::grading(const std::string& name) const {
    for (auto& g : gradings)
        if (g.name == name) return g;
    throw std::out_of_range("no grading named " + name);
}

SuperAlgebra matrix_algebra(const std::string& name, const std::vector<std::string>& labels,
                            const std::vector<Mat>& basis) {
    MatCoords coords(basis);
    auto a = SuperAlgebra::from_products(name, labels, std::vector<int>(basis.size(), 0),
                                         [&](size_t i, size_t j) { return coords(basis[i] * basis[j]); });
    a.associative_expected = true;
    return a;
}

std::vector<Mat> quaternion_matrices() {
    return {Mat::identity(2), mat2(1, 0, 0, -1), mat2(0, 1, 1, 0), mat2(0, 1, -1, 0)};
}

BuiltAlgebra build_quaternions() {
    auto mats = quaternion_matrices();
    BuiltAlgebra b;
    b.algebra = std::make_shared<SuperAlgebra>(matrix_algebra("Q", {"1", "q1", "q2", "q3"}, mats));
    Mat gram(4, 4);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) gram(i, j) = det2(mats[i] + mats[j]) - det2(mats[i]) - det2(mats[j]);
    b.forms["norm"] = gram;
    Mat bar = Mat::identity(4);
    for (size_t i = 1; i < 4; ++i) bar(i, i) = -1;
    b.maps["bar"] = bar;
    GradingGroup g(0, {2, 2});
    std::vector<GroupElement> deg;
    for (auto& d : kQuatDeg) deg.push_back(elem(g, {}, {d[0], d[1]}));
    b.gradings.push_back(Grading::on_basis("Z2^2", b.algebra, g, deg));
    return b;
}

std::vector<Mat> quaternion_grading_autos() {
    auto mats = quaternion_matrices();
    MatCoords coords(mats);
    std::vector<Mat> out;
    for (size_t q : {1, 2}) {
        Mat qi = inverse(mats[q]);
        Mat t(4, 4);
        for (size_t j = 0; j < 4; ++j) {
            Vec c = coords(mats[q] * mats[j] * qi);
            for (size_t i = 0; i < 4; ++i) t(i, j) = c[i];
        }
        out.push_back(t);
    }
    return out;
}

BuiltAlgebra build_cayley() {
    std::vector<std::string> labels = {"1"};
    for (int i = 1; i <= 7; ++i) labels.push_back("e" + std::to_string(i));
    auto prod = [](size_t i, size_t j) {
        Vec v(8);
        if (i == 0) {
            v[j] = 1;
        } else if (j == 0) {
            v[i] = 1;
        } else if (i == j) {
            v[0] = -1;
        } else {
            for (auto& t : kTriples)
                for (int r = 0; r < 3; ++r) {
                    int a = t[r], b = t[(r + 1) % 3], c = t[(r + 2) % 3];
                    if (static_cast<int>(i) == a && static_cast<int>(j) == b) v[c] = 1;
                    if (static_cast<int>(i) == b && static_cast<int>(j) == a) v[c] = -1;
                }
        }
        return v;
    };
    BuiltAlgebra b;
    b.algebra = std::make_shared<SuperAlgebra>(SuperAlgebra::from_products("C", labels, std::vector<int>(8, 0), prod));
    b.forms["norm"] = Mat::identity(8).scaled(2);
    Mat bar = Mat::identity(8).scaled(-1);
    bar(0, 0) = 1;
    b.maps["bar"] = bar;
    GradingGroup g(0, {2, 2, 2});
    std::vector<GroupElement> deg;
    for (auto& d : kCayleyDeg) deg.push_back(elem(g, {}, {d[0], d[1], d[2]}));
    b.gradings.push_back(Grading::on_basis("Z2^3", b.algebra, g, deg));
    return b;
}

std::vector<Mat> cayley_grading_autos() {
    std::vector<Mat> out;
    for (size_t k = 0; k < 3; ++k) {
        Mat s = Mat::identity(8);
        for (size_t i = 0; i < 8; ++i)
            if (kCayleyDeg[i][k]) s(i, i) = -1;
        out.push_back(s);
    }
    return out;
}

BuiltAlgebra build_An(int n) {
    if (n < 2 || 12 % n != 0) throw std::invalid_argument("build_An: n must divide 12");
    Scalar eps(root_of_unity(n));
    size_t nn = static_cast<size_t>(n);
    std::vector<std::string> labels;
    for (size_t a = 0; a < nn; ++a)
        for (size_t b = 0; b < nn; ++b) labels.push_back("x" + std::to_string(a) + "y" + std::to_string(b));
    // x^a y^b . x^c y^d = eps^{-bc} x^{a+c} y^{b+d}
    auto prod = [&](size_t i, size_t j) {
        size_t a = i / nn, b = i % nn, c = j / nn, d = j % nn;
        Vec v(nn * nn);
        v[((a + c) % nn) * nn + (b + d) % nn] = eps.pow(-static_cast<long>((b * c) % nn));
        return v;
    };
    BuiltAlgebra out;
    auto alg = SuperAlgebra::from_products("A" + std::to_string(n), labels, std::vector<int>(nn * nn, 0), prod);
    alg.associative_expected = true;
    // graded division: every homogeneous basis element is invertible
    for (size_t i = 0; i < nn * nn; ++i)
        if (rank(alg.ad(i)) != nn * nn) throw StructureError("build_An: homogeneous element not invertible");
    out.algebra = std::make_shared<SuperAlgebra>(std::move(alg));
    GradingGroup g(0, {n, n});
    std::vector<GroupElement> deg;
    for (size_t a = 0; a < nn; ++a)
        for (size_t b = 0; b < nn; ++b) deg.push_back(elem(g, {}, {long(a), long(b)}));
    out.gradings.push_back(Grading::on_basis("Zn^2", out.algebra, g, deg));
    return out;
}

KacPair build_kac() {
    KacPair kp;
    // K3: e even, v1, v-1 odd
    Mat form(3, 3);
    form(0, 0) = Scalar::rational(1, 2);
    form(1, 2) = 1;
    form(2, 1) = -1;
    auto k3prod = [&](size_t i, size_t j) {
        Vec v(3);
        if (i == 0 && j == 0) v[0] = 1;
        else if (i == 0) v[j] = Scalar::rational(1, 2);
        else if (j == 0) v[i] = Scalar::rational(1, 2);
        else v[0] = form(i, j);
        return v;
    };
    auto k3 = std::make_shared<SuperAlgebra>(SuperAlgebra::from_products("K3", {"e", "v1", "v-1"}, {0, 1, 1}, k3prod));
    kp.k3.algebra = k3;
    kp.k3.forms["bilinear"] = form;
    GradingGroup z1(1, {});
    const long w[3] = {0, 1, -1};
    std::vector<GroupElement> d3;
    for (long x : w) d3.push_back(elem(z1, {x}, {}));
    kp.k3.gradings.push_back(Grading::on_basis("Z", k3, z1, d3));

    // K10 = 1 + K3 (x) K3
    std::vector<std::string> labels = {"1"};
    std::vector<int> par = {0};
    for (size_t a = 0; a < 3; ++a)
        for (size_t b = 0; b < 3; ++b) {
            labels.push_back(k3->label(a) + "." + k3->label(b));
            par.push_back((k3->parity(a) + k3->parity(b)) % 2);
        }
    auto idx = [](size_t a, size_t b) { return 1 + 3 * a + b; };
    auto k10prod = [&](size_t i, size_t j) {
        Vec v(10);
        if (i == 0) {
            v[j] = 1;
            return v;
        }
        if (j == 0) {
            v[i] = 1;
            return v;
        }
        size_t a = (i - 1) / 3, b = (i - 1) % 3, c = (j - 1) / 3, d = (j - 1) % 3;
        Scalar sign = (k3->parity(b) && k3->parity(c)) ? Scalar(-1) : Scalar(1);
        for (auto& s : k3->product(a, c))
            for (auto& t : k3->product(b, d)) v[idx(s.k, t.k)] += sign * s.c * t.c;
        v[0] -= sign * Scalar::rational(3, 4) * form(a, c) * form(b, d);
        return v;
    };
    auto k10 = std::make_shared<SuperAlgebra>(SuperAlgebra::from_products("K10", labels, par, k10prod));
    kp.k10.algebra = k10;
    GradingGroup z2(2, {});
    std::vector<GroupElement> d10 = {elem(z2, {0, 0}, {})};
    std::vector<long> total = {0};
    for (size_t a = 0; a < 3; ++a)
        for (size_t b = 0; b < 3; ++b) {
            d10.push_back(elem(z2, {w[a], w[b]}, {}));
            total.push_back(w[a] + w[b]);
        }
    kp.k10.gradings.push_back(Grading::on_basis("Z^2", k10, z2, d10));

    // tau(x (x) y) = (-1)^{|x||y|} y (x) x
    Mat tau(10, 10);
    tau(0, 0) = 1;
    for (size_t a = 0; a < 3; ++a)
        for (size_t b = 0; b < 3; ++b)
            tau(idx(b, a), idx(a, b)) = (k3->parity(a) && k3->parity(b)) ? Scalar(-1) : Scalar(1);
    kp.k10.maps["tau"] = tau;

    Vec e1(10), e2(10);
    e1[0] = Scalar::rational(-1, 2);
    e1[idx(0, 0)] = 2;
    e2[0] = Scalar::rational(3, 2);
    e2[idx(0, 0)] = -2;
    kp.k10.elements["E1"] = e1;
    kp.k10.elements["E2"] = e2;

    DiagGenerators gens;
    gens.torus_weights.push_back(total);
    gens.finite_autos.push_back({"tau", tau, 2});
    kp.k10.gradings.push_back(grading_from_diag("ZxZ2", k10, gens));
    return kp;
}

Mat TkkAlgebra::extend(const Mat& on_q0, const Mat& on_j) const {
    size_t dj = jordan->dim();
    size_t n = built.algebra->dim();
    Mat t(n, n);
    for (size_t a = 0; a < 3; ++a)
        for (size_t b = 0; b < 3; ++b) {
            if (on_q0(b, a).is_zero()) continue;
            put_block(t, b * dj, a * dj, on_j.scaled(on_q0(b, a)));
        }
    Mat inv = inverse(on_j);
    MatCoords coords(der.maps);
    for (size_t k = 0; k < der.maps.size(); ++k) {
        Vec c = coords(on_j * der.maps[k] * inv);
        for (size_t l = 0; l < c.size(); ++l) t(der_offset + l, der_offset + k) = c[l];
    }
    return t;
}

Vec TkkAlgebra::der_element(const Mat& d) const {
    MatCoords coords(der.maps);
    Vec c = coords(d);
    Vec v(built.algebra->dim());
    for (size_t l = 0; l < c.size(); ++l) v[der_offset + l] = c[l];
    return v;
}

TkkAlgebra build_tkk(const BuiltAlgebra& j, const std::string& name) {
    TkkAlgebra t;
    t.jordan = j.algebra;
    t.der = derivations(*j.algebra);
    const SuperAlgebra& J = *j.algebra;
    size_t dj = J.dim(), nd = t.der.maps.size();
    for (size_t i = 0; i < dj; ++i)
        for (size_t k = 0; k < dj; ++k) {
            Vec x = J.basis_product(i, k), y = J.basis_product(k, i);
            if (J.parity(i) && J.parity(k)) y = scale(y, Scalar(-1));
            if (x != y) throw StructureError("build_tkk: " + J.label(i) + ", " + J.label(k) + " do not supercommute");
        }
    t.der_offset = 3 * dj;
    size_t n = 3 * dj + nd;

    auto qm = quaternion_matrices();
    MatCoords qcoords(qm);
    Scalar qbr[3][3][3];
    Scalar qn[3][3];
    for (size_t a = 0; a < 3; ++a)
        for (size_t b = 0; b < 3; ++b) {
            Vec c = qcoords(commutator(qm[a + 1], qm[b + 1]));
            if (!c[0].is_zero()) throw StructureError("build_tkk: Q0 not closed");
            for (size_t k = 0; k < 3; ++k) qbr[a][b][k] = c[k + 1];
            const Mat& x = qm[a + 1];
            const Mat& y = qm[b + 1];
            qn[a][b] = det2(x + y) - det2(x) - det2(y);
        }

    MatCoords dcoords(t.der.maps);
    std::vector<Mat> L(dj);
    for (size_t i = 0; i < dj; ++i) L[i] = J.ad(i);
    std::vector<Vec> lbr(dj * dj);
    for (size_t i = 0; i < dj; ++i)
        for (size_t k = 0; k < dj; ++k) {
            int s = (J.parity(i) && J.parity(k)) ? -1 : 1;
            lbr[i * dj + k] = dcoords(commutator(L[i], L[k], s));
        }

    std::vector<std::string> labels;
    std::vector<int> par;
    for (size_t a = 0; a < 3; ++a)
        for (size_t i = 0; i < dj; ++i) {
            labels.push_back("q" + std::to_string(a + 1) + ":" + J.label(i));
            par.push_back(J.parity(i));
        }
    for (size_t k = 0; k < nd; ++k) {
        labels.push_back("D" + std::to_string(k + 1));
        par.push_back(t.der.algebra.parity(k));
    }

    // [d, q(x)x] = q (x) d(x)
    auto der_on = [&](size_t k, size_t a, size_t i) {
        Vec v(n);
        for (size_t r = 0; r < dj; ++r) v[a * dj + r] = t.der.maps[k](r, i);
        return v;
    };
    auto prod = [&](size_t p, size_t q) {
        Vec v(n);
        bool pd = p >= t.der_offset, qd = q >= t.der_offset;
        if (pd && qd) {
            for (auto& s : t.der.algebra.product(p - t.der_offset, q - t.der_offset)) v[t.der_offset + s.k] = s.c;
        } else if (pd) {
            v = der_on(p - t.der_offset, q / dj, q % dj);
        } else if (qd) {
            size_t k = q - t.der_offset;
            size_t a = p / dj, i = p % dj;
            v = der_on(k, a, i);
            bool neg = !(J.parity(i) && t.der.algebra.parity(k));
            if (neg) v = scale(v, Scalar(-1));
        } else {
            size_t a = p / dj, i = p % dj, b = q / dj, k = q % dj;
            // [a(x)x, b(x)y] = [a,b](x)xy - 2 N(a,b) [L_x, L_y]
            for (auto& s : J.product(i, k))
                for (size_t c = 0; c < 3; ++c)
                    if (!qbr[a][b][c].is_zero()) v[c * dj + s.k] += qbr[a][b][c] * s.c;
            if (!qn[a][b].is_zero()) {
                const Vec& d = lbr[i * dj + k];
                for (size_t l = 0; l < nd; ++l)
                    if (!d[l].is_zero()) v[t.der_offset + l] -= Scalar(2) * qn[a][b] * d[l];
            }
        }
        return v;
    };
    auto alg = SuperAlgebra::from_products(name, labels, par, prod);
    alg.lie_expected = true;
    t.built.algebra = std::make_shared<SuperAlgebra>(std::move(alg));
    return t;
}

Mat sp_a() { return mat2(Scalar::zeta(3), 0, 0, -Scalar::zeta(3)); }
Mat sp_b() { return mat2(0, -1, 1, 0); }
Mat sp_d(const Scalar& mu) { return mat2(mu, 0, 0, mu.inv()); }

namespace {

constexpr size_t kD21Odd = 9;

// odd word index from (x1, x2, x3), 0 = u, 1 = v
size_t word(size_t x1, size_t x2, size_t x3) { return kD21Odd + 4 * x1 + 2 * x2 + x3; }
size_t bit(size_t w, int l) { return ((w - kD21Odd) >> (2 - l)) & 1; }  // l = 0, 1, 2

// conjugation x -> f x f^-1 on sl2 coordinates
Mat conj_sl2(const Mat& f) {
    Mat fi = inverse(f);
    Mat t(3, 3);
    for (size_t j = 0; j < 3; ++j) {
        auto c = sl2_coords(f * sl2_mats()[j] * fi);
        for (size_t i = 0; i < 3; ++i) t(i, j) = c[i];
    }
    return t;
}

}  // namespace

D21Algebra build_D21(const Scalar& alpha) {
    if (alpha == Scalar(0) || alpha == Scalar(-1)) throw std::invalid_argument("D(2,1;alpha) needs alpha not in {0, -1}");
    D21Algebra d;
    d.alpha = alpha;
    std::vector<std::string> labels;
    std::vector<int> par;
    for (int l = 1; l <= 3; ++l)
        for (const char* s : {"h", "e", "f"}) {
            labels.push_back(s + std::to_string(l));
            par.push_back(0);
        }
    for (size_t w = 0; w < 8; ++w) {
        std::string s;
        for (int l = 2; l >= 0; --l) s += ((w >> l) & 1) ? 'v' : 'u';
        labels.push_back(s);
        par.push_back(1);
    }
    // b(u,v) = 1
    auto bform = [](size_t x, size_t y) -> Scalar {
        if (x == y) return 0;
        return x == 0 ? 1 : -1;
    };
    // gamma_{x,y}(z) = b(x,z) y + b(y,z) x in sl2 coordinates
    auto gamma = [&](size_t x, size_t y) {
        Mat m(2, 2);
        for (size_t z = 0; z < 2; ++z) {
            m(y, z) += bform(x, z);
            m(x, z) += bform(y, z);
        }
        return sl2_coords(m);
    };
    const Scalar coef[3] = {Scalar(1), alpha, Scalar(-1) - alpha};
    auto prod = [&](size_t i, size_t j) {
        Vec v(17);
        bool io = i >= kD21Odd, jo = j >= kD21Odd;
        if (!io && !jo) {
            if (i / 3 == j / 3) {
                auto c = sl2_coords(commutator(sl2_mats()[i % 3], sl2_mats()[j % 3]));
                for (size_t r = 0; r < 3; ++r) v[3 * (i / 3) + r] = c[r];
            }
        } else if (io != jo) {
            size_t x = io ? j : i, w = io ? i : j;
            int l = static_cast<int>(x / 3);
            const Mat& m = sl2_mats()[x % 3];
            size_t b = bit(w, l);
            for (size_t r = 0; r < 2; ++r) {
                if (m(r, b).is_zero()) continue;
                size_t bits = w - kD21Odd;
                bits = (bits & ~(size_t(1) << (2 - l))) | (r << (2 - l));
                v[kD21Odd + bits] = io ? -m(r, b) : m(r, b);
            }
        } else {
            for (int l = 0; l < 3; ++l) {
                Scalar s = coef[l];
                for (int o = 0; o < 3; ++o)
                    if (o != l) s *= bform(bit(i, o), bit(j, o));
                if (s.is_zero()) continue;
                auto g = gamma(bit(i, l), bit(j, l));
                for (size_t r = 0; r < 3; ++r) v[3 * l + r] += s * g[r];
            }
        }
        return v;
    };
    auto alg = SuperAlgebra::from_products("D(2,1;" + alpha.str() + ")", labels, par, prod);
    alg.lie_expected = true;
    d.built.algebra = std::make_shared<SuperAlgebra>(std::move(alg));
    return d;
}

Mat D21Algebra::iota(const Mat& f1, const Mat& f2, const Mat& f3) const {
    Mat t(17, 17);
    const Mat* f[3] = {&f1, &f2, &f3};
    for (size_t l = 0; l < 3; ++l) put_block(t, 3 * l, 3 * l, conj_sl2(*f[l]));
    put_block(t, kD21Odd, kD21Odd, kron(kron(f1, f2), f3));
    return t;
}

Mat D21Algebra::varpi() const {
    Mat t(17, 17);
    for (size_t l = 0; l < 3; ++l)
        for (size_t r = 0; r < 3; ++r) t(3 * ((l + 1) % 3) + r, 3 * l + r) = 1;
    for (size_t x1 = 0; x1 < 2; ++x1)
        for (size_t x2 = 0; x2 < 2; ++x2)
            for (size_t x3 = 0; x3 < 2; ++x3) t(word(x3, x1, x2), word(x1, x2, x3)) = alpha;
    return t;
}

Mat D21Algebra::hat_phi(const Mat& f, const Mat& g, const Mat& h) const {
    Mat t(17, 17);
    put_block(t, 0, 0, conj_sl2(f));
    put_block(t, 6, 3, conj_sl2(g));  // x2 -> g x2 g^-1 in slot 3
    put_block(t, 3, 6, conj_sl2(h));  // x3 -> h x3 h^-1 in slot 2
    for (size_t x1 = 0; x1 < 2; ++x1)
        for (size_t x2 = 0; x2 < 2; ++x2)
            for (size_t x3 = 0; x3 < 2; ++x3)
                for (size_t y1 = 0; y1 < 2; ++y1)
                    for (size_t y2 = 0; y2 < 2; ++y2)
                        for (size_t y3 = 0; y3 < 2; ++y3) {
                            // f u1 (x) h u3 (x) g u2
                            Scalar c = f(y1, x1) * h(y2, x3) * g(y3, x2);
                            if (!c.is_zero()) t(word(y1, y2, y3), word(x1, x2, x3)) = c;
                        }
    return t;
}

namespace {

// action of an 8x8 map of C on C0 = span(e1..e7)
Mat on_c0(const Mat& m) { return block(m, 1, 1, 7, 7); }

}  // namespace

G3Algebra build_G3() {
    G3Algebra g;
    g.cayley = build_cayley();
    g.der_c = derivations(*g.cayley.algebra);
    if (g.der_c.maps.size() != 14) throw StructureError("der(C) has unexpected dimension");
    std::vector<std::string> l0 = {"h", "e", "f"};
    auto dl = prefixed("g", 14);
    l0.insert(l0.end(), dl.begin(), dl.end());
    auto g0 = std::make_shared<SuperAlgebra>(direct_sum("sl2+der(C)", sl2_algebra(), g.der_c.algebra, l0));

    ModuleAction act;
    act.algebra = g0;
    act.dim = 14;
    act.parity.assign(14, 1);
    for (const char* p : {"u", "v"})
        for (int i = 1; i <= 7; ++i) act.labels.push_back(std::string(p) + ".e" + std::to_string(i));
    for (size_t k = 0; k < 3; ++k) act.rho.push_back(kron(sl2_mats()[k], Mat::identity(7)));
    for (auto& d : g.der_c.maps) act.rho.push_back(kron(Mat::identity(2), on_c0(d)));
    g.completion = complete_superalgebra("G(3)", act);
    g.built.algebra = std::make_shared<SuperAlgebra>(g.completion.algebra);
    return g;
}

Mat G3Algebra::extend_cayley_auto(const Mat& sigma) const {
    Mat t(31, 31);
    put_block(t, 0, 0, Mat::identity(3));
    Mat si = inverse(sigma);
    MatCoords coords(der_c.maps);
    for (size_t k = 0; k < 14; ++k) {
        Vec c = coords(sigma * der_c.maps[k] * si);
        for (size_t l = 0; l < 14; ++l) t(3 + l, 3 + k) = c[l];
    }
    put_block(t, 17, 17, kron(Mat::identity(2), on_c0(sigma)));
    return t;
}

std::vector<Vec> G3Algebra::cartan_torus() const {
    // derivations killing e4 and rotating the planes {e1,e2}, {e3,e6}, {e5,e7}
    const std::vector<std::pair<size_t, size_t>> allowed = {{2, 1}, {1, 2}, {6, 3}, {3, 6}, {7, 5}, {5, 7}};
    std::vector<Vec> rows;
    for (size_t r = 0; r < 8; ++r)
        for (size_t c = 0; c < 8; ++c) {
            bool ok = false;
            for (auto& p : allowed) ok |= (p.first == r && p.second == c);
            if (ok) continue;
            Vec row(14);
            for (size_t k = 0; k < 14; ++k) row[k] = der_c.maps[k](r, c);
            rows.push_back(row);
        }
    auto ker = kernel(Mat::from_rows(rows, 14));
    if (ker.size() != 2) throw StructureError("G(3) Cartan torus: unexpected kernel dimension");
    std::vector<Vec> out;
    for (auto& c : ker) {
        Mat d(8, 8);
        for (size_t k = 0; k < 14; ++k)
            if (!c[k].is_zero()) d = d + der_c.maps[k].scaled(c[k]);
        // integer rotation angles, gcd 1
        mpz_class lcm = 1, gcd = 0;
        for (auto& p : allowed) {
            const Rational& q = d(p.first, p.second).constant().coeff(0);
            if (q == 0) continue;
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
        }
        for (auto& p : allowed) {
            Rational q = d(p.first, p.second).constant().coeff(0) * lcm;
            mpz_class z = q.get_num();
            mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), z.get_mpz_t());
        }
        Rational r(lcm, gcd);
        r.canonicalize();
        Scalar s = Scalar(r) * Scalar::zeta(3);
        Vec v(31);
        for (size_t k = 0; k < 14; ++k) v[3 + k] = c[k] * s;
        out.push_back(v);
    }
    return out;
}

F4Model parse_f4_model(const std::string& s) {
    if (s == "cayley") return F4Model::Cayley;
    if (s == "tkk") return F4Model::Tkk;
    if (s == "quaternion") return F4Model::Quaternion;
    throw std::invalid_argument("unknown F(4) model: " + s);
}

std::string model_name(F4Model m) {
    switch (m) {
        case F4Model::Cayley: return "cayley";
        case F4Model::Tkk: return "tkk";
        case F4Model::Quaternion: return "quaternion";
    }
    return "?";
}

namespace {

// so(C0) basis S_ab, a < b: e_a -> e_b, e_b -> -e_a
std::vector<Mat> so7_basis(std::vector<std::string>* labels) {
    std::vector<Mat> out;
    for (size_t a = 1; a <= 7; ++a)
        for (size_t b = a + 1; b <= 7; ++b) {
            Mat m(7, 7);
            m(b - 1, a - 1) = 1;
            m(a - 1, b - 1) = -1;
            out.push_back(m);
            if (labels) labels->push_back("S" + std::to_string(a) + std::to_string(b));
        }
    return out;
}

Vec so7_coords(const Mat& m) {
    Vec v;
    for (size_t a = 1; a <= 7; ++a)
        for (size_t b = a + 1; b <= 7; ++b) v.push_back(m(b - 1, a - 1));
    return v;
}

F4Algebra build_f4_cayley() {
    F4Algebra f;
    f.model = F4Model::Cayley;
    auto c = build_cayley();
    std::vector<std::string> sl;
    auto so = so7_basis(&sl);
    auto so_alg = SuperAlgebra::from_products("so7", sl, std::vector<int>(21, 0),
                                              [&](size_t i, size_t j) { return so7_coords(commutator(so[i], so[j])); });
    std::vector<std::string> l0 = {"h", "e", "f"};
    l0.insert(l0.end(), sl.begin(), sl.end());
    auto g0 = std::make_shared<SuperAlgebra>(direct_sum("sl2+so7", sl2_algebra(), so_alg, l0));

    ModuleAction act;
    act.algebra = g0;
    act.dim = 16;
    act.parity.assign(16, 1);
    for (const char* p : {"u", "v"})
        for (size_t i = 0; i < 8; ++i) act.labels.push_back(std::string(p) + "." + c.algebra->label(i));
    for (size_t k = 0; k < 3; ++k) act.rho.push_back(kron(sl2_mats()[k], Mat::identity(8)));
    for (size_t a = 1; a <= 7; ++a)
        for (size_t b = a + 1; b <= 7; ++b) {
            Mat la = c.algebra->ad(a), lb = c.algebra->ad(b);
            act.rho.push_back(kron(Mat::identity(2), (la * lb).scaled(Scalar::rational(1, 2))));
        }
    std::string w;
    if (!act.is_representation(&w)) throw StructureError("spin action is not a representation: " + w);
    f.completion = complete_superalgebra("F(4)", act);
    f.built.algebra = std::make_shared<SuperAlgebra>(f.completion->algebra);
    f.a1 = {0, 1, 2};
    for (size_t i = 3; i < 24; ++i) f.b3.push_back(i);
    return f;
}

F4Algebra build_f4_tkk() {
    F4Algebra f;
    f.model = F4Model::Tkk;
    auto kp = build_kac();
    f.tkk = build_tkk(kp.k10, "F(4)");
    f.built = f.tkk->built;
    return f;
}

struct QQQ {
    std::vector<Mat> mats;  // a(x)b(x)c at 16a + 4b + c, as 8x8 Kronecker products
    std::shared_ptr<SuperAlgebra> alg;
    QQQ() {
        auto q = quaternion_matrices();
        std::vector<std::string> labels;
        const char* nm[4] = {"1", "q1", "q2", "q3"};
        for (size_t a = 0; a < 4; ++a)
            for (size_t b = 0; b < 4; ++b)
                for (size_t c = 0; c < 4; ++c) {
                    mats.push_back(kron(kron(q[a], q[b]), q[c]));
                    labels.push_back(std::string(nm[a]) + "." + nm[b] + "." + nm[c]);
                }
        alg = std::make_shared<SuperAlgebra>(matrix_algebra("QxQxQ", labels, mats));
    }
};

// w1..w7 as (a, b, c) index triples
const std::array<std::array<size_t, 3>, 7> kW = {
    {{1, 0, 0}, {3, 0, 0}, {2, 0, 1}, {2, 0, 3}, {2, 1, 2}, {2, 3, 2}, {2, 2, 2}}};

size_t qqq_index(const std::array<size_t, 3>& t) { return 16 * t[0] + 4 * t[1] + t[2]; }

// degree in Z2^4 of a (x) b (x) c: (deg a + deg b, deg c)
std::array<long, 4> qqq_degree(size_t idx) {
    size_t a = idx / 16, b = (idx / 4) % 4, c = idx % 4;
    return {(kQuatDeg[a][0] + kQuatDeg[b][0]) % 2, (kQuatDeg[a][1] + kQuatDeg[b][1]) % 2, kQuatDeg[c][0],
            kQuatDeg[c][1]};
}

struct QuaternionModelData {
    std::vector<Vec> b3;                    // in QxQxQ coordinates
    std::vector<std::array<long, 4>> b3deg;  // Z2^4
};

QuaternionModelData quaternion_b3(const QQQ& qqq) {
    QuaternionModelData d;
    for (size_t i = 0; i < 7; ++i)
        for (size_t j = i + 1; j < 7; ++j) {
            size_t wi = qqq_index(kW[i]), wj = qqq_index(kW[j]);
            Vec v = sub(qqq.alg->basis_product(wi, wj), qqq.alg->basis_product(wj, wi));
            d.b3.push_back(v);
            auto x = qqq_degree(wi), y = qqq_degree(wj);
            d.b3deg.push_back({(x[0] + y[0]) % 2, (x[1] + y[1]) % 2, (x[2] + y[2]) % 2, (x[3] + y[3]) % 2});
        }
    return d;
}

F4Algebra build_f4_quaternion() {
    F4Algebra f;
    f.model = F4Model::Quaternion;
    QQQ qqq;
    auto qd = quaternion_b3(qqq);
    CoordinateSolver b3c(qd.b3);
    auto b3alg = SuperAlgebra::from_products("b3", prefixed("w", 21), std::vector<int>(21, 0), [&](size_t i, size_t j) {
        Vec c = sub(qqq.alg->multiply(qd.b3[i], qd.b3[j]), qqq.alg->multiply(qd.b3[j], qd.b3[i]));
        auto x = b3c.solve(c);
        if (!x) throw StructureError("b3 is not closed under the commutator");
        return *x;
    });
    auto qm = quaternion_matrices();
    MatCoords qcoords(qm);
    auto q0 = SuperAlgebra::from_products("a1", {"q1", "q2", "q3"}, {0, 0, 0}, [&](size_t i, size_t j) {
        Vec c = qcoords(commutator(qm[i + 1], qm[j + 1]));
        return Vec{c[1], c[2], c[3]};
    });
    std::vector<std::string> l0 = {"q1", "q2", "q3"};
    for (size_t i = 1; i <= 7; ++i)
        for (size_t j = i + 1; j <= 7; ++j) l0.push_back("w" + std::to_string(i) + std::to_string(j));
    auto g0 = std::make_shared<SuperAlgebra>(direct_sum("a1+b3", q0, b3alg, l0));

    auto Q = build_quaternions();
    const SuperAlgebra& qa = *Q.algebra;
    std::vector<Mat> Lq(4), Rq(4);
    for (size_t i = 0; i < 4; ++i) {
        Lq[i] = qa.ad(i);
        Mat r(4, 4);
        for (size_t x = 0; x < 4; ++x)
            for (auto& t : qa.product(x, i)) r(t.k, x) = t.c;
        Rq[i] = r;
    }
    const Mat& bar = Q.maps.at("bar");
    ModuleAction act;
    act.algebra = g0;
    act.dim = 16;
    act.parity.assign(16, 1);
    const char* nm[4] = {"1", "q1", "q2", "q3"};
    for (size_t x = 0; x < 4; ++x)
        for (size_t y = 0; y < 4; ++y) act.labels.push_back(std::string(nm[x]) + "|" + nm[y]);
    // [q, x(x)y] = -x(x)yq
    for (size_t i = 1; i < 4; ++i) act.rho.push_back(kron(Mat::identity(4), Rq[i]).scaled(-1));
    // Phi_{a(x)b(x)c}(x(x)y) = a x bbar (x) c y
    for (auto& v : qd.b3) {
        Mat m(16, 16);
        for (size_t k = 0; k < 64; ++k) {
            if (v[k].is_zero()) continue;
            size_t a = k / 16, b = (k / 4) % 4, c = k % 4;
            Scalar s = v[k] * bar(b, b);
            m = m + kron(Lq[a] * Rq[b], Lq[c]).scaled(s);
        }
        act.rho.push_back(m);
    }
    std::string w;
    if (!act.is_representation(&w)) throw StructureError("quaternion model action is not a representation: " + w);
    f.completion = complete_superalgebra("F(4)", act);
    f.built.algebra = std::make_shared<SuperAlgebra>(f.completion->algebra);
    f.a1 = {0, 1, 2};
    for (size_t i = 3; i < 24; ++i) f.b3.push_back(i);
    return f;
}

}  // namespace

F4Algebra build_F4(F4Model model) {
    switch (model) {
        case F4Model::Cayley: return build_f4_cayley();
        case F4Model::Tkk: return build_f4_tkk();
        case F4Model::Quaternion: return build_f4_quaternion();
    }
    throw std::invalid_argument("build_F4: bad model");
}

Mat F4Algebra::extend_cayley_auto(const Mat& sigma) const {
    if (model != F4Model::Cayley) throw std::logic_error("extend_cayley_auto needs the Cayley model");
    Mat t(40, 40);
    put_block(t, 0, 0, Mat::identity(3));
    Mat s0 = on_c0(sigma), si = inverse(s0);
    auto so = so7_basis(nullptr);
    for (size_t k = 0; k < 21; ++k) {
        Vec c = so7_coords(s0 * so[k] * si);
        for (size_t l = 0; l < 21; ++l) t(3 + l, 3 + k) = c[l];
    }
    put_block(t, 24, 24, kron(Mat::identity(2), sigma));
    return t;
}

std::vector<GroupElement> F4Algebra::quaternion_degrees() const {
    if (model != F4Model::Quaternion) throw std::logic_error("quaternion_degrees needs the quaternion model");
    GradingGroup g(0, {2, 2, 2, 4});
    std::vector<GroupElement> out;
    for (size_t i = 1; i < 4; ++i) out.push_back(elem(g, {}, {0, 0, kQuatDeg[i][0], 2 * kQuatDeg[i][1]}));
    for (size_t i = 0; i < 7; ++i)
        for (size_t j = i + 1; j < 7; ++j) {
            auto x = qqq_degree(qqq_index(kW[i])), y = qqq_degree(qqq_index(kW[j]));
            out.push_back(elem(g, {}, {(x[0] + y[0]) % 2, (x[1] + y[1]) % 2, (x[2] + y[2]) % 2, 2 * ((x[3] + y[3]) % 2)}));
        }
    // deg'(1) = (0,1), deg'(q1) = (1,1), deg'(q2) = (0,3), deg'(q3) = (1,3)
    const long dy[4][2] = {{0, 1}, {1, 1}, {0, 3}, {1, 3}};
    for (size_t x = 0; x < 4; ++x)
        for (size_t y = 0; y < 4; ++y) out.push_back(elem(g, {}, {kQuatDeg[x][0], kQuatDeg[x][1], dy[y][0], dy[y][1]}));
    return out;
}

std::vector<std::array<long, 4>> quaternion_w_degrees() {
    std::vector<std::array<long, 4>> out;
    for (auto& w : kW) out.push_back(qqq_degree(qqq_index(w)));
    return out;
}

std::vector<std::array<size_t, 3>> quaternion_w_triples() { return {kW.begin(), kW.end()}; }

std::vector<Scalar> root_candidates(long order) {
    if (order < 1 || 12 % order != 0) throw std::invalid_argument("root_candidates: order must divide 12");
    std::vector<Scalar> out;
    for (long k = 0; k < order; ++k) out.push_back(Scalar::zeta(k * (12 / order)));
    return out;
}

}  // namespace finegrad
