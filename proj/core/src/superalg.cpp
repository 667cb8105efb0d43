#include "finegrad/superalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace finegrad {

SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.push_back({i, v[i]});
    return s;
}

Vec to_dense(const SparseVec& v, size_t n) {
    Vec d(n);
    for (const auto& t : v) d[t.k] = t.c;
    return d;
}

namespace {

int sign_of(int p) { return (p & 1) ? -1 : 1; }

bool sparse_equal(const SparseVec& a, const SparseVec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].k != b[i].k || a[i].c != b[i].c) return false;
    return true;
}

// Dense accumulator that remembers touched slots.
class Accumulator {
public:
    explicit Accumulator(size_t n) : v_(n), touched_(n, false) {}
    void add(size_t k, const Scalar& c) {
        if (c.is_zero()) return;
        if (!touched_[k]) {
            touched_[k] = true;
            idx_.push_back(k);
        }
        v_[k] += c;
    }
    SparseVec take() {
        std::sort(idx_.begin(), idx_.end());
        SparseVec out;
        for (size_t k : idx_) {
            if (!v_[k].is_zero()) out.push_back({k, v_[k]});
            v_[k] = Scalar();
            touched_[k] = false;
        }
        idx_.clear();
        return out;
    }

private:
    Vec v_;
    std::vector<bool> touched_;
    std::vector<size_t> idx_;
};

std::string parity_name(int p) { return p ? "odd" : "even"; }

}  // namespace

// ---------------------------------------------------------------- SuperAlgebra

SuperAlgebra::SuperAlgebra(std::string name, std::vector<std::string> labels, std::vector<int> parity)
    : name_(std::move(name)), labels_(std::move(labels)), parity_(std::move(parity)) {
    if (labels_.size() != parity_.size()) throw StructureError("labels and parity vector differ in length");
    for (int p : parity_)
        if (p != 0 && p != 1) throw StructureError("parity must be 0 or 1");
    mult_.assign(labels_.size() * labels_.size(), {});
}

SuperAlgebra SuperAlgebra::from_products(std::string name, std::vector<std::string> labels, std::vector<int> parity,
                                         const std::function<Vec(size_t, size_t)>& product) {
    SuperAlgebra a(std::move(name), std::move(labels), std::move(parity));
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j) a.set_product(i, j, product(i, j));
    a.check_parity_additivity();
    return a;
}

size_t SuperAlgebra::even_dim() const {
    return static_cast<size_t>(std::count(parity_.begin(), parity_.end(), 0));
}

std::optional<size_t> SuperAlgebra::index_of(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

size_t SuperAlgebra::idx(const std::string& label) const {
    auto i = index_of(label);
    if (!i) throw StructureError("no basis element labelled '" + label + "' in " + name_);
    return *i;
}

void SuperAlgebra::set_product(size_t i, size_t j, const Vec& v) {
    if (v.size() != dim()) throw StructureError("product vector has wrong length");
    mult_[i * dim() + j] = to_sparse(v);
}

void SuperAlgebra::set_product(size_t i, size_t j, SparseVec v) {
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.k < b.k; });
    SparseVec clean;
    for (auto& t : v) {
        if (t.c.is_zero()) continue;
        if (!clean.empty() && clean.back().k == t.k) {
            clean.back().c += t.c;
            if (clean.back().c.is_zero()) clean.pop_back();
        } else {
            clean.push_back(std::move(t));
        }
    }
    mult_[i * dim() + j] = std::move(clean);
}

Scalar SuperAlgebra::coeff(size_t i, size_t j, size_t k) const {
    for (const auto& t : product(i, j))
        if (t.k == k) return t.c;
    return Scalar();
}

Vec SuperAlgebra::multiply(const Vec& x, const Vec& y) const {
    if (x.size() != dim() || y.size() != dim()) throw StructureError("multiply: coordinate length mismatch");
    return to_dense(multiply(to_sparse(x), to_sparse(y)), dim());
}

SparseVec SuperAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
    Accumulator acc(dim());
    for (const auto& a : x)
        for (const auto& b : y) {
            const SparseVec& p = product(a.k, b.k);
            if (p.empty()) continue;
            Scalar ab = a.c * b.c;
            for (const auto& t : p) acc.add(t.k, ab * t.c);
        }
    return acc.take();
}

void SuperAlgebra::check_parity_additivity() const {
    for (size_t i = 0; i < dim(); ++i)
        for (size_t j = 0; j < dim(); ++j)
            for (const auto& t : product(i, j))
                if (parity_[t.k] != ((parity_[i] + parity_[j]) & 1))
                    throw StructureError("parity additivity violated in " + name_ + ": " + labels_[i] + " * " +
                                         labels_[j] + " has a component on " + labels_[t.k]);
}

Mat SuperAlgebra::left_mult(const Vec& x) const {
    Mat m(dim(), dim());
    for (size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < dim(); ++j)
            for (const auto& t : product(i, j)) m(t.k, j) += x[i] * t.c;
    }
    return m;
}

Mat SuperAlgebra::ad(size_t i) const { return left_mult(unit_vec(dim(), i)); }

SuperAlgebra SuperAlgebra::change_basis(const std::vector<Vec>& nb, std::vector<std::string> new_labels) const {
    size_t n = dim();
    if (nb.size() != n || new_labels.size() != n) throw StructureError("change_basis: need " + std::to_string(n) + " vectors");
    std::vector<int> par(n);
    for (size_t c = 0; c < n; ++c) {
        int p = -1;
        for (size_t i = 0; i < n; ++i) {
            if (nb[c][i].is_zero()) continue;
            if (p == -1) p = parity_[i];
            if (p != parity_[i]) throw StructureError("change_basis: vector " + std::to_string(c) + " is not parity-homogeneous");
        }
        if (p == -1) throw StructureError("change_basis: zero basis vector");
        par[c] = p;
    }
    Mat pinv = inverse(Mat::from_columns(nb, n));
    std::vector<SparseVec> sb;
    for (const auto& v : nb) sb.push_back(to_sparse(v));
    SuperAlgebra out(name_, std::move(new_labels), par);
    out.lie_expected = lie_expected;
    out.associative_expected = associative_expected;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            SparseVec p = multiply(sb[i], sb[j]);
            if (p.empty()) continue;
            out.set_product(i, j, pinv * to_dense(p, n));
        }
    out.check_parity_additivity();
    return out;
}

bool operator==(const SuperAlgebra& a, const SuperAlgebra& b) {
    if (a.labels_ != b.labels_ || a.parity_ != b.parity_) return false;
    if (a.lie_expected != b.lie_expected || a.associative_expected != b.associative_expected) return false;
    for (size_t i = 0; i < a.mult_.size(); ++i)
        if (!sparse_equal(a.mult_[i], b.mult_[i])) return false;
    return true;
}

// ---------------------------------------------------------------- checks

HomReport check_homomorphism(const LinMap& f) {
    HomReport rep;
    const SuperAlgebra& a = *f.source;
    const SuperAlgebra& b = *f.target;
    if (f.matrix.rows() != b.dim() || f.matrix.cols() != a.dim())
        throw StructureError("check_homomorphism: matrix shape mismatch");
    std::vector<SparseVec> img(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) img[i] = to_sparse(f.matrix.column(i));
    Accumulator acc(b.dim());
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j) {
            for (const auto& t : a.product(i, j))
                for (const auto& s : img[t.k]) acc.add(s.k, t.c * s.c);
            SparseVec lhs = acc.take();
            SparseVec rhs = b.multiply(img[i], img[j]);
            if (!sparse_equal(lhs, rhs)) {
                rep.ok = false;
                rep.witness = "f(" + a.label(i) + " * " + a.label(j) + ") != f(" + a.label(i) + ") * f(" + a.label(j) + ")";
                return rep;
            }
        }
    return rep;
}

bool is_bijective(const LinMap& f) {
    return f.matrix.rows() == f.matrix.cols() && rank(f.matrix) == f.matrix.rows();
}

LieReport check_lie_super(const SuperAlgebra& a) {
    LieReport rep;
    size_t n = a.dim();
    for (size_t i = 0; i < n && rep.anticommutativity_ok; ++i)
        for (size_t j = i; j < n; ++j) {
            SparseVec ji = a.product(j, i);
            int s = -sign_of(a.parity(i) * a.parity(j));
            for (auto& t : ji) t.c *= Scalar(s);
            if (!sparse_equal(a.product(i, j), ji)) {
                rep.anticommutativity_ok = false;
                rep.witness = "[" + a.label(i) + ", " + a.label(j) + "] != -(-1)^{|x||y|}[" + a.label(j) + ", " +
                              a.label(i) + "]";
                break;
            }
        }
    Accumulator acc(n);
    auto bracket_into = [&](size_t x, const SparseVec& p, int sign) {
        for (const auto& t : p) {
            Scalar c = (sign > 0) ? t.c : -t.c;
            for (const auto& u : a.product(x, t.k)) acc.add(u.k, c * u.c);
        }
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                int pi = a.parity(i), pj = a.parity(j), pk = a.parity(k);
                bracket_into(i, a.product(j, k), sign_of(pi * pk));
                bracket_into(j, a.product(k, i), sign_of(pj * pi));
                bracket_into(k, a.product(i, j), sign_of(pk * pj));
                SparseVec r = acc.take();
                if (!r.empty()) {
                    rep.jacobi_ok = false;
                    if (rep.witness.empty())
                        rep.witness = "Jacobi residual nonzero on (" + a.label(i) + ", " + a.label(j) + ", " +
                                      a.label(k) + ")";
                    return rep;
                }
            }
    return rep;
}

AssocReport check_associative(const SuperAlgebra& a) {
    AssocReport rep;
    size_t n = a.dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                SparseVec ei{{i, Scalar(1)}}, ek{{k, Scalar(1)}};
                SparseVec l = a.multiply(a.product(i, j), ek);
                SparseVec r = a.multiply(ei, a.product(j, k));
                if (!sparse_equal(l, r)) {
                    rep.ok = false;
                    rep.witness = "(" + a.label(i) + " " + a.label(j) + ") " + a.label(k) + " != " + a.label(i) + " (" +
                                  a.label(j) + " " + a.label(k) + ")";
                    return rep;
                }
            }
    return rep;
}

// ---------------------------------------------------------------- modules

Mat ModuleAction::act(const Vec& x) const {
    Mat m(dim, dim);
    for (size_t a = 0; a < x.size(); ++a)
        if (!x[a].is_zero()) m = m + rho[a].scaled(x[a]);
    return m;
}

bool ModuleAction::is_representation(std::string* witness) const {
    const SuperAlgebra& g = *algebra;
    if (rho.size() != g.dim()) throw StructureError("module action: one matrix per algebra basis element required");
    for (size_t a = 0; a < g.dim(); ++a)
        for (size_t b = 0; b < g.dim(); ++b) {
            Mat lhs(dim, dim);
            for (const auto& t : g.product(a, b)) lhs = lhs + rho[t.k].scaled(t.c);
            Mat rhs = rho[a] * rho[b] - (rho[b] * rho[a]).scaled(Scalar(sign_of(g.parity(a) * g.parity(b))));
            if (lhs != rhs) {
                if (witness) *witness = "rho([" + g.label(a) + ", " + g.label(b) + "]) differs from the commutator";
                return false;
            }
        }
    return true;
}

ModuleAction adjoint_action(const AlgPtr& g0) {
    ModuleAction m;
    m.algebra = g0;
    m.dim = g0->dim();
    m.parity = g0->parities();
    m.labels = g0->labels();
    for (size_t a = 0; a < g0->dim(); ++a) m.rho.push_back(g0->ad(a));
    return m;
}

ModuleAction ideal_action(const AlgPtr& g0, const std::vector<size_t>& ideal) {
    ModuleAction m;
    m.algebra = g0;
    m.dim = ideal.size();
    for (size_t i : ideal) {
        m.parity.push_back(g0->parity(i));
        m.labels.push_back(g0->label(i));
    }
    std::vector<long> pos(g0->dim(), -1);
    for (size_t r = 0; r < ideal.size(); ++r) pos[ideal[r]] = static_cast<long>(r);
    for (size_t a = 0; a < g0->dim(); ++a) {
        Mat r(ideal.size(), ideal.size());
        for (size_t c = 0; c < ideal.size(); ++c)
            for (const auto& t : g0->product(a, ideal[c])) {
                if (pos[t.k] < 0) throw StructureError("ideal_action: span is not an ideal");
                r(pos[t.k], c) = t.c;
            }
        m.rho.push_back(std::move(r));
    }
    return m;
}

// ---------------------------------------------------------------- derivations

DerivationAlgebra derivations(const SuperAlgebra& a) {
    size_t n = a.dim();
    DerivationAlgebra out;
    std::vector<Mat> maps;
    std::vector<int> par;
    for (int dp = 0; dp < 2; ++dp) {
        // unknowns: entries D[k][l] with parity(k) = parity(l) + dp
        std::vector<long> var(n * n, -1);
        size_t nv = 0;
        for (size_t k = 0; k < n; ++k)
            for (size_t l = 0; l < n; ++l)
                if (a.parity(k) == ((a.parity(l) + dp) & 1)) var[k * n + l] = static_cast<long>(nv++);
        if (nv == 0) continue;
        std::vector<Vec> rows;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                // D(e_i e_j) - D(e_i) e_j - (-1)^{dp |i|} e_i D(e_j) = 0, component k
                std::map<size_t, std::map<size_t, Scalar>> eq;  // k -> var -> coeff
                for (const auto& t : a.product(i, j))
                    for (size_t k = 0; k < n; ++k)
                        if (var[k * n + t.k] >= 0) eq[k][var[k * n + t.k]] += t.c;
                for (size_t l = 0; l < n; ++l) {
                    long v1 = var[l * n + i];
                    if (v1 >= 0)
                        for (const auto& t : a.product(l, j)) eq[t.k][v1] -= t.c;
                    long v2 = var[l * n + j];
                    if (v2 >= 0) {
                        Scalar s(sign_of(dp * a.parity(i)));
                        for (const auto& t : a.product(i, l)) eq[t.k][v2] -= s * t.c;
                    }
                }
                for (auto& [k, m] : eq) {
                    Vec row(nv);
                    bool nz = false;
                    for (auto& [v, c] : m)
                        if (!c.is_zero()) {
                            row[v] = c;
                            nz = true;
                        }
                    if (nz) rows.push_back(std::move(row));
                }
            }
        std::vector<Vec> ker;
        if (rows.empty()) {
            for (size_t v = 0; v < nv; ++v) ker.push_back(unit_vec(nv, v));
        } else {
            ker = kernel(Mat::from_rows(rows, nv));
        }
        for (const auto& v : ker) {
            Mat d(n, n);
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l)
                    if (var[k * n + l] >= 0) d(k, l) = v[var[k * n + l]];
            maps.push_back(std::move(d));
            par.push_back(dp);
        }
        if (dp == 0) out.even_count = maps.size();
    }
    std::vector<std::string> labels;
    for (size_t i = 0; i < maps.size(); ++i) labels.push_back("d" + std::to_string(i + 1));
    SuperAlgebra der("der(" + a.name() + ")", labels, par);
    der.lie_expected = true;
    // structure constants from supercommutators
    std::vector<Vec> flat;
    for (const auto& m : maps) {
        Vec f(n * n);
        for (size_t k = 0; k < n; ++k)
            for (size_t l = 0; l < n; ++l) f[k * n + l] = m(k, l);
        flat.push_back(std::move(f));
    }
    std::vector<Vec> targets;
    for (size_t x = 0; x < maps.size(); ++x)
        for (size_t y = 0; y < maps.size(); ++y) {
            Mat c = maps[x] * maps[y] - (maps[y] * maps[x]).scaled(Scalar(sign_of(par[x] * par[y])));
            Vec f(n * n);
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l) f[k * n + l] = c(k, l);
            targets.push_back(std::move(f));
        }
    if (!maps.empty()) {
        auto coords = coordinates(flat, targets);
        if (!coords) throw StructureError("derivations: supercommutator left the derivation space");
        for (size_t x = 0; x < maps.size(); ++x)
            for (size_t y = 0; y < maps.size(); ++y) der.set_product(x, y, (*coords)[x * maps.size() + y]);
    }
    der.check_parity_additivity();
    out.algebra = std::move(der);
    out.maps = std::move(maps);
    return out;
}

// ---------------------------------------------------------------- invariant pairings

Vec Pairing::value(size_t i, size_t j) const {
    Vec v(dim_t);
    for (size_t k = 0; k < dim_t; ++k) v[k] = at(i, j, k);
    return v;
}

namespace {

using SparseRow = std::vector<std::pair<size_t, Scalar>>;  // sorted by column

// Incremental sparse row echelon form; kernel by back substitution.
class SparseEchelon {
public:
    explicit SparseEchelon(size_t ncols) : n_(ncols), piv_(ncols) {}

    void add_row(SparseRow r) {
        while (!r.empty()) {
            size_t c = r.front().first;
            if (!piv_[c]) {
                Scalar inv = r.front().second.inv();
                for (auto& e : r) e.second *= inv;
                piv_[c] = std::move(r);
                ++rank_;
                return;
            }
            Scalar f = r.front().second;
            r = axpy_rows(r, *piv_[c], -f);
        }
    }

    size_t rank() const { return rank_; }

    std::vector<Vec> kernel() const {
        std::vector<Vec> out;
        for (size_t f = 0; f < n_; ++f) {
            if (piv_[f]) continue;
            Vec v(n_);
            v[f] = Scalar(1);
            for (size_t c = n_; c-- > 0;) {
                if (!piv_[c]) continue;
                Scalar s;
                for (const auto& e : *piv_[c])
                    if (e.first != c && !v[e.first].is_zero()) s -= e.second * v[e.first];
                v[c] = s;
            }
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    static SparseRow axpy_rows(const SparseRow& a, const SparseRow& b, const Scalar& f) {
        SparseRow out;
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, f * b[j].second);
                ++j;
            } else {
                Scalar s = a[i].second + f * b[j].second;
                if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
                ++i;
                ++j;
            }
        }
        return out;
    }

    size_t n_;
    std::vector<std::optional<SparseRow>> piv_;
    size_t rank_ = 0;
};

bool is_diagonal(const Mat& m) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (i != j && !m(i, j).is_zero()) return false;
    return true;
}

// Greedy small generating set of a Lie algebra among its basis elements.
std::vector<size_t> generating_basis_elements(const SuperAlgebra& g) {
    std::vector<size_t> gens;
    std::vector<Vec> gen_vecs;
    size_t covered = 0;
    std::vector<Vec> span;
    for (size_t a = 0; a < g.dim() && covered < g.dim(); ++a) {
        if (!span.empty()) {
            IncrementalSpan s(g.dim());
            for (const auto& v : span) s.add(v);
            if (s.contains(unit_vec(g.dim(), a))) continue;
        }
        gens.push_back(a);
        gen_vecs.push_back(unit_vec(g.dim(), a));
        span = generated_subalgebra(g, gen_vecs);
        covered = span.size();
    }
    return gens;
}

}  // namespace

std::vector<Pairing> invariant_pairings(const ModuleAction& m, const ModuleAction& target) {
    if (m.algebra.get() != target.algebra.get() && !(*m.algebra == *target.algebra))
        throw StructureError("invariant_pairings: module and target use different algebras");
    const SuperAlgebra& g = *m.algebra;
    for (size_t a = 0; a < g.dim(); ++a)
        if (g.parity(a) != 0) throw StructureError("invariant_pairings: acting algebra must be purely even");
    size_t dm = m.dim, dt = target.dim;
    if (dm == 0 || dt == 0) return {};

    // symmetry sign: B(j,i) = sym(i,j) B(i,j)
    auto sym = [&](size_t i, size_t j) { return Scalar(-sign_of(m.parity[i] * m.parity[j])); };

    // torus pruning from basis elements acting diagonally on both spaces
    std::vector<size_t> torus;
    for (size_t a = 0; a < g.dim(); ++a)
        if (is_diagonal(m.rho[a]) && is_diagonal(target.rho[a]) && !m.rho[a].is_zero()) torus.push_back(a);

    std::vector<long> var(dm * dm * dt, -1);
    size_t nv = 0;
    for (size_t i = 0; i < dm; ++i)
        for (size_t j = i; j < dm; ++j) {
            if (i == j && sym(i, i) != Scalar(1)) continue;
            for (size_t k = 0; k < dt; ++k) {
                if (target.parity[k] != ((m.parity[i] + m.parity[j]) & 1)) continue;
                bool ok = true;
                for (size_t a : torus)
                    if (target.rho[a](k, k) != m.rho[a](i, i) + m.rho[a](j, j)) {
                        ok = false;
                        break;
                    }
                if (ok) var[(i * dm + j) * dt + k] = static_cast<long>(nv++);
            }
        }
    if (nv == 0) return {};

    // coefficient of unknown for B(i,j)_k with arbitrary order of i,j
    auto lookup = [&](size_t i, size_t j, size_t k, Scalar& s) -> long {
        if (i <= j) {
            s = Scalar(1);
            return var[(i * dm + j) * dt + k];
        }
        s = sym(j, i);
        return var[(j * dm + i) * dt + k];
    };

    SparseEchelon ech(nv);
    std::vector<size_t> gens = generating_basis_elements(g);
    for (size_t a : gens) {
        std::vector<SparseVec> rm(dm), rt(dt);  // columns of rho
        for (size_t c = 0; c < dm; ++c) rm[c] = to_sparse(m.rho[a].column(c));
        for (size_t c = 0; c < dt; ++c) rt[c] = to_sparse(target.rho[a].column(c));
        for (size_t i = 0; i < dm; ++i)
            for (size_t j = i; j < dm; ++j)
                for (size_t k = 0; k < dt; ++k) {
                    std::map<size_t, Scalar> row;
                    Scalar s;
                    // x.B(i,j)_k = sum_l rhoT[k][l] B(i,j)_l
                    for (size_t l = 0; l < dt; ++l) {
                        const Scalar& c = target.rho[a](k, l);
                        if (c.is_zero()) continue;
                        long v = lookup(i, j, l, s);
                        if (v >= 0) row[v] += c * s;
                    }
                    for (const auto& t : rm[i]) {
                        long v = lookup(t.k, j, k, s);
                        if (v >= 0) row[v] -= t.c * s;
                    }
                    for (const auto& t : rm[j]) {
                        long v = lookup(i, t.k, k, s);
                        if (v >= 0) row[v] -= t.c * s;
                    }
                    SparseRow r;
                    for (auto& [v, c] : row)
                        if (!c.is_zero()) r.emplace_back(v, c);
                    if (!r.empty()) ech.add_row(std::move(r));
                }
    }
    std::vector<Pairing> out;
    for (const auto& v : ech.kernel()) {
        Pairing p;
        p.dim_m = dm;
        p.dim_t = dt;
        p.data.assign(dm * dm * dt, Scalar());
        for (size_t i = 0; i < dm; ++i)
            for (size_t j = 0; j < dm; ++j)
                for (size_t k = 0; k < dt; ++k) {
                    Scalar s;
                    long idx = lookup(i, j, k, s);
                    if (idx >= 0) p.at(i, j, k) = s * v[idx];
                }
        out.push_back(std::move(p));
    }
    return out;
}

SuperAlgebra assemble_superalgebra(const std::string& name, const ModuleAction& act, const Pairing& bracket) {
    const SuperAlgebra& g = *act.algebra;
    size_t ng = g.dim(), nm = act.dim;
    std::vector<std::string> labels = g.labels();
    std::vector<int> par = g.parities();
    for (size_t i = 0; i < nm; ++i) {
        labels.push_back(act.labels.size() == nm ? act.labels[i] : "m" + std::to_string(i + 1));
        par.push_back(act.parity[i]);
    }
    SuperAlgebra out(name, labels, par);
    out.lie_expected = true;
    for (size_t a = 0; a < ng; ++a)
        for (size_t b = 0; b < ng; ++b) out.set_product(a, b, g.product(a, b));
    for (size_t a = 0; a < ng; ++a)
        for (size_t i = 0; i < nm; ++i) {
            SparseVec xm, mx;
            for (size_t r = 0; r < nm; ++r) {
                const Scalar& c = act.rho[a](r, i);
                if (c.is_zero()) continue;
                xm.push_back({ng + r, c});
                mx.push_back({ng + r, Scalar(-sign_of(g.parity(a) * act.parity[i])) * c});
            }
            out.set_product(a, ng + i, xm);
            out.set_product(ng + i, a, mx);
        }
    if (bracket.dim_m == nm && bracket.dim_t == ng) {
        for (size_t i = 0; i < nm; ++i)
            for (size_t j = 0; j < nm; ++j) {
                SparseVec v;
                for (size_t k = 0; k < ng; ++k)
                    if (!bracket.at(i, j, k).is_zero()) v.push_back({k, bracket.at(i, j, k)});
                out.set_product(ng + i, ng + j, v);
            }
    }
    out.check_parity_additivity();
    return out;
}

Completion complete_superalgebra(const std::string& name, const ModuleAction& act,
                                 const std::vector<BracketConstraint>& constraints) {
    AlgPtr g0 = act.algebra;
    for (size_t i = 0; i < act.dim; ++i)
        if (act.parity[i] != 1) throw StructureError("complete_superalgebra: module must be odd");
    Completion res;
    res.pairings = invariant_pairings(act, adjoint_action(g0));
    if (res.pairings.empty()) throw StructureError("no Lie superalgebra completion: no invariant pairings");
    size_t q = res.pairings.size(), nm = act.dim, ng = g0->dim();

    // precompute sparse values of each pairing
    std::vector<std::vector<SparseVec>> val(q, std::vector<SparseVec>(nm * nm));
    for (size_t p = 0; p < q; ++p)
        for (size_t i = 0; i < nm; ++i)
            for (size_t j = 0; j < nm; ++j) val[p][i * nm + j] = to_sparse(res.pairings[p].value(i, j));
    std::vector<std::vector<SparseVec>> rho_cols(ng, std::vector<SparseVec>(nm));
    for (size_t a = 0; a < ng; ++a)
        for (size_t c = 0; c < nm; ++c) rho_cols[a][c] = to_sparse(act.rho[a].column(c));

    // odd-odd-odd Jacobi: sum over cyclic (m,n,p) of B(n,p).m = 0, linear in the coefficients
    std::vector<Vec> rows;
    IncrementalSpan row_span(q);
    auto act_on = [&](const SparseVec& x, size_t mcol, std::vector<Vec>& acc, size_t p) {
        for (const auto& t : x)
            for (const auto& u : rho_cols[t.k][mcol]) acc[u.k][p] += t.c * u.c;
    };
    for (size_t i = 0; i < nm && row_span.dim() < q; ++i)
        for (size_t j = i; j < nm && row_span.dim() < q; ++j)
            for (size_t k = j; k < nm && row_span.dim() < q; ++k) {
                std::vector<Vec> acc(nm, Vec(q));
                for (size_t p = 0; p < q; ++p) {
                    act_on(val[p][j * nm + k], i, acc, p);
                    act_on(val[p][k * nm + i], j, acc, p);
                    act_on(val[p][i * nm + j], k, acc, p);
                }
                for (auto& r : acc)
                    if (!is_zero(r)) row_span.add(r);
            }
    for (const auto& c : constraints) {
        Vec r(q);
        for (size_t p = 0; p < q; ++p)
            r[p] = res.pairings[p].at(c.i1, c.j1, c.k1) - c.ratio * res.pairings[p].at(c.i2, c.j2, c.k2);
        if (!is_zero(r)) row_span.add(r);
    }
    std::vector<Vec> sol;
    if (row_span.dim() == 0) {
        for (size_t p = 0; p < q; ++p) sol.push_back(unit_vec(q, p));
    } else {
        sol = kernel(Mat::from_rows(row_span.basis(), q));
    }
    if (sol.empty()) throw StructureError("no Lie superalgebra completion");
    res.solution_dim = sol.size();
    Vec c = sol.front();
    for (const auto& x : c)
        if (!x.is_zero()) {
            c = scale(c, x.inv());
            break;
        }
    res.coefficients = c;
    Pairing b;
    b.dim_m = nm;
    b.dim_t = ng;
    b.data.assign(nm * nm * ng, Scalar());
    for (size_t p = 0; p < q; ++p) {
        if (c[p].is_zero()) continue;
        for (size_t e = 0; e < b.data.size(); ++e)
            if (!res.pairings[p].data[e].is_zero()) b.data[e] += c[p] * res.pairings[p].data[e];
    }
    res.algebra = assemble_superalgebra(name, act, b);
    LieReport lr = check_lie_super(res.algebra);
    if (!lr.ok()) throw StructureError("no Lie superalgebra completion: " + lr.witness);
    return res;
}

SuperAlgebra rescale_odd_bracket(const SuperAlgebra& a, const Scalar& s) {
    SuperAlgebra out(a);
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j) {
            if (a.parity(i) != 1 || a.parity(j) != 1) continue;
            SparseVec v = a.product(i, j);
            for (auto& t : v) t.c *= s;
            out.set_product(i, j, v);
        }
    return out;
}

std::vector<Vec> generated_subalgebra(const SuperAlgebra& a, const std::vector<Vec>& gens) {
    IncrementalSpan span(a.dim());
    std::vector<Vec> queue;
    for (const auto& g : gens)
        if (span.add(g)) queue.push_back(g);
    size_t head = 0;
    while (head < queue.size()) {
        Vec x = queue[head++];
        std::vector<Vec> current = span.basis();
        for (const auto& y : current) {
            Vec p1 = a.multiply(x, y);
            if (span.add(p1)) queue.push_back(p1);
            Vec p2 = a.multiply(y, x);
            if (span.add(p2)) queue.push_back(p2);
        }
    }
    return span.basis();
}

// ---------------------------------------------------------------- serialization

std::string store_superalgebra(const SuperAlgebra& a) {
    std::ostringstream os;
    os << "finegrad-superalgebra 1\n";
    os << "name " << a.name() << "\n";
    os << "flags";
    if (a.lie_expected) os << " lie";
    if (a.associative_expected) os << " associative";
    os << "\n";
    os << "dim " << a.dim() << "\n";
    os << "basis\n";
    for (size_t i = 0; i < a.dim(); ++i) os << a.label(i) << " " << parity_name(a.parity(i)) << "\n";
    os << "mult\n";
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j)
            for (const auto& t : a.product(i, j)) os << i << " " << j << " " << t.k << " " << t.c.str() << "\n";
    os << "end\n";
    return os.str();
}

SuperAlgebra load_superalgebra(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    size_t lineno = 0;
    auto next = [&]() -> bool {
        while (std::getline(is, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty() && line[0] != '#') return true;
        }
        return false;
    };
    auto fail = [&](const std::string& msg) -> void {
        throw ParseError("superalgebra file line " + std::to_string(lineno) + ": " + msg);
    };
    if (!next() || line != "finegrad-superalgebra 1") fail("missing header");
    if (!next() || line.rfind("name ", 0) != 0) fail("expected 'name'");
    std::string name = line.substr(5);
    if (!next() || line.rfind("flags", 0) != 0) fail("expected 'flags'");
    bool lie = line.find(" lie") != std::string::npos;
    bool assoc = line.find(" associative") != std::string::npos;
    if (!next() || line.rfind("dim ", 0) != 0) fail("expected 'dim'");
    size_t n = std::stoul(line.substr(4));
    if (!next() || line != "basis") fail("expected 'basis'");
    std::vector<std::string> labels;
    std::vector<int> par;
    for (size_t i = 0; i < n; ++i) {
        if (!next()) fail("truncated basis list");
        std::istringstream ls(line);
        std::string lab, p;
        ls >> lab >> p;
        if (p != "even" && p != "odd") fail("bad parity '" + p + "'");
        labels.push_back(lab);
        par.push_back(p == "odd");
    }
    if (!next() || line != "mult") fail("expected 'mult'");
    SuperAlgebra a(name, labels, par);
    a.lie_expected = lie;
    a.associative_expected = assoc;
    std::map<std::pair<size_t, size_t>, SparseVec> entries;
    for (;;) {
        if (!next()) fail("missing 'end'");
        if (line == "end") break;
        std::istringstream ls(line);
        size_t i, j, k;
        if (!(ls >> i >> j >> k)) fail("bad product entry");
        std::string rest;
        std::getline(ls, rest);
        if (i >= n || j >= n || k >= n) fail("index out of range");
        Scalar c;
        try {
            c = parse_scalar(rest);
        } catch (const ParseError& e) {
            fail(e.what());
        }
        entries[{i, j}].push_back({k, c});
    }
    for (auto& [ij, v] : entries) a.set_product(ij.first, ij.second, v);
    a.check_parity_additivity();
    return a;
}

}  // namespace finegrad
