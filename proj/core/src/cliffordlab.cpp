#include "finegrad/cliffordlab.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace finegrad {

namespace {

std::string trim_ws(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

Scalar bform(const Mat& b, const Vec& x, const Vec& y) {
    Scalar s;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < y.size(); ++j)
            if (!b(i, j).is_zero() && !y[j].is_zero()) s += x[i] * b(i, j) * y[j];
    }
    return s;
}

// bits of an element with 2h = 0, one per torsion factor
unsigned long two_torsion_bits(const GroupElement& h) {
    for (long f : h.free_part())
        if (f != 0) throw CliffordError("degree " + h.str() + " is not 2-torsion");
    unsigned long bits = 0;
    for (size_t i = 0; i < h.torsion_part().size(); ++i)
        if (h.torsion_part()[i] != 0) bits |= 1ul << i;
    return bits;
}

size_t f2_rank(std::vector<unsigned long> v) {
    size_t r = 0;
    for (int bit = 63; bit >= 0; --bit) {
        auto it = std::find_if(v.begin() + static_cast<long>(r), v.end(), [&](unsigned long x) { return (x >> bit) & 1; });
        if (it == v.end()) continue;
        std::iter_swap(v.begin() + static_cast<long>(r), it);
        for (size_t i = 0; i < v.size(); ++i)
            if (i != r && ((v[i] >> bit) & 1)) v[i] ^= v[r];
        ++r;
    }
    return r;
}

Scalar sign(size_t k) { return (k % 2) ? Scalar(-1) : Scalar(1); }

// ---- polynomials over the constants, used for idempotent extraction

struct ExtGcd {
    CycPoly g, s, t;  // s a + t b = g, g monic
};

ExtGcd ext_gcd(CycPoly a, CycPoly b) {
    CycPoly s0{CycNumber(1)}, s1, t0, t1{CycNumber(1)};
    poly::trim(a);
    poly::trim(b);
    while (!b.empty()) {
        CycPoly q, r;
        poly::divmod(a, b, q, r);
        poly::trim(r);
        CycPoly s2 = poly::sub(s0, poly::mul(q, s1)), t2 = poly::sub(t0, poly::mul(q, t1));
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    CycNumber li = a.back().inv();
    return {poly::scale(a, li), poly::scale(s0, li), poly::scale(t0, li)};
}

class Assoc {
public:
    Assoc(const SuperAlgebra& a) : a_(a) {}
    Vec mul(const Vec& x, const Vec& y) const { return a_.multiply(x, y); }
    Vec eval(const CycPoly& p, const Vec& y, const Vec& unit) const {
        Vec acc = zero_vec(a_.dim());
        for (size_t k = p.size(); k-- > 0;) {
            acc = mul(acc, y);
            axpy(acc, Scalar(p[k]), unit);
        }
        return acc;
    }
    // minimal polynomial of y in the corner algebra with the given unit
    CycPoly minpoly(const Vec& y, const Vec& unit) const {
        std::vector<Vec> pw = {unit};
        IncrementalSpan span(a_.dim());
        span.add(unit);
        while (true) {
            Vec next = mul(pw.back(), y);
            if (!span.add(next)) {
                CoordinateSolver cs(pw);
                auto c = cs.solve(next);
                if (!c) throw CliffordError("minimal polynomial: power not in span");
                CycPoly m;
                for (auto& x : *c) {
                    if (!x.is_constant()) throw CliffordError("minimal polynomial needs constant coefficients");
                    m.push_back(-x.constant());
                }
                m.push_back(CycNumber(1));
                return m;
            }
            pw.push_back(next);
        }
    }

private:
    const SuperAlgebra& a_;
};

std::vector<CycNumber> root_guesses(const CycPoly& m) {
    std::vector<CycNumber> out;
    if (m.size() == 3) {
        // t^2 + b t + c
        Scalar b(m[1]), c(m[0]);
        Scalar disc = b * b - Scalar(4) * c;
        if (auto s = scalar_sqrt(disc)) {
            out.push_back(((-b + *s) * Scalar::rational(1, 2)).constant());
            out.push_back(((-b - *s) * Scalar::rational(1, 2)).constant());
        }
    }
    for (long k = 0; k < 12; ++k)
        for (long r : {1, 2, 3, 4})
            for (long d : {1, 2, 3, 4}) out.push_back(CycNumber::zeta_power(k) * CycNumber(Rational(r, d)));
    return out;
}

// nonzero idempotent of the corner algebra, different from unit, built from y; nullopt if y gives none
std::optional<Vec> split_idempotent(const Assoc& A, const Vec& y, const Vec& unit) {
    CycPoly m = A.minpoly(y, unit);
    if (m.size() <= 2) return std::nullopt;  // y is a multiple of the unit
    auto attempt = [&](const Vec& yy, const CycPoly& mm) -> std::optional<Vec> {
        size_t k = 0;
        while (k < mm.size() && mm[k].is_zero()) ++k;
        if (k == 0) return std::nullopt;
        CycPoly s(mm.begin() + static_cast<long>(k), mm.end());
        if (s.size() <= 1) return std::nullopt;  // nilpotent
        CycPoly tk(k + 1);
        tk[k] = CycNumber(1);
        auto eg = ext_gcd(tk, s);
        if (eg.g.size() != 1) throw CliffordError("Bezout: factors are not coprime");
        // a t^k + b s = 1, e = a(y) y^k
        return A.eval(poly::mul(eg.s, tk), yy, unit);
    };
    if (auto e = attempt(y, m)) return e;
    for (auto& lambda : root_guesses(m)) {
        if (!poly::eval(m, lambda).is_zero()) continue;
        Vec y2 = y;
        axpy(y2, Scalar(-lambda), unit);
        // m(t + lambda)
        CycPoly shifted;
        CycPoly lin{lambda, CycNumber(1)}, powk{CycNumber(1)};
        for (size_t k = 0; k < m.size(); ++k) {
            shifted = poly::add(shifted, poly::scale(powk, m[k]));
            powk = poly::mul(powk, lin);
        }
        if (auto e = attempt(y2, shifted)) return e;
    }
    return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------- configs

RawQuadraticSpace parse_quadratic_config(const std::string& text) {
    RawQuadraticSpace raw;
    bool have_group = false;
    std::vector<std::pair<size_t, Scalar>> qvals;
    std::vector<std::tuple<std::string, std::string, Scalar>> polars;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw ParseError("quadratic config line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim_ws(line);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        std::string rest;
        std::getline(ls, rest);
        rest = trim_ws(rest);
        if (kw == "group") {
            raw.group = parse_group(rest);
            have_group = true;
        } else if (kw == "vector") {
            if (!have_group) fail("vector before group");
            size_t sp = rest.find_first_of(" \t");
            if (sp == std::string::npos) fail("vector needs a name and a degree");
            std::string name = rest.substr(0, sp);
            std::string tail = trim_ws(rest.substr(sp));
            size_t close = tail.rfind(')');
            if (tail.empty() || tail[0] != '(' || close == std::string::npos) fail("bad degree literal");
            GroupElement d = parse_element(raw.group, tail.substr(0, close + 1));
            std::string after = trim_ws(tail.substr(close + 1));
            if (std::find(raw.names.begin(), raw.names.end(), name) != raw.names.end()) fail("duplicate vector " + name);
            raw.names.push_back(name);
            raw.degrees.push_back(d);
            if (!after.empty()) {
                if (after.rfind("q", 0) != 0) fail("expected 'q <scalar>' after the degree");
                qvals.emplace_back(raw.names.size() - 1, parse_scalar(trim_ws(after.substr(1))));
            }
        } else if (kw == "polar") {
            std::istringstream ps(rest);
            std::string a, b, val;
            ps >> a >> b;
            std::getline(ps, val);
            if (a.empty() || b.empty() || trim_ws(val).empty()) fail("polar needs two names and a value");
            if (a == b) fail("use 'q' for diagonal values");
            polars.emplace_back(a, b, parse_scalar(trim_ws(val)));
        } else {
            fail("unknown keyword " + kw);
        }
    }
    if (!have_group) throw ParseError("quadratic config: missing group");
    size_t n = raw.names.size();
    raw.polar = Mat(n, n);
    for (auto& [i, q] : qvals) raw.polar(i, i) = q * Scalar(2);
    auto index = [&](const std::string& s) {
        auto it = std::find(raw.names.begin(), raw.names.end(), s);
        if (it == raw.names.end()) throw ParseError("quadratic config: unknown vector " + s);
        return static_cast<size_t>(it - raw.names.begin());
    };
    for (auto& [a, b, v] : polars) {
        size_t i = index(a), j = index(b);
        raw.polar(i, j) = v;
        raw.polar(j, i) = v;
    }
    return raw;
}

RawQuadraticSpace load_quadratic_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_quadratic_config(ss.str());
}

// ---------------------------------------------------------------- quadratic spaces

std::vector<std::string> GradedQuadraticSpace::names() const {
    std::vector<std::string> out;
    for (size_t i = 1; i <= m(); ++i) {
        out.push_back("u" + std::to_string(i));
        out.push_back("v" + std::to_string(i));
    }
    for (size_t j = 1; j <= h.size(); ++j) out.push_back("w" + std::to_string(j));
    return out;
}

std::vector<GroupElement> GradedQuadraticSpace::degrees() const {
    std::vector<GroupElement> out;
    for (auto& gi : g) {
        out.push_back(gi);
        out.push_back(-gi);
    }
    out.insert(out.end(), h.begin(), h.end());
    return out;
}

Mat GradedQuadraticSpace::polar() const {
    Mat b(dim(), dim());
    for (size_t i = 0; i < m(); ++i) {
        b(2 * i, 2 * i + 1) = 1;
        b(2 * i + 1, 2 * i) = 1;
    }
    for (size_t j = 2 * m(); j < dim(); ++j) b(j, j) = 2;
    return b;
}

GradedQuadraticSpace GradedQuadraticSpace::make(GradingGroup group, std::vector<GroupElement> g,
                                                std::vector<GroupElement> h) {
    if (h.size() % 2 == 0) throw CliffordError("quadratic space: even dimension is unsupported");
    GroupElement sum = GroupElement::zero(group);
    for (auto& x : g)
        if (x.group() != group) throw CliffordError("quadratic space: degree outside " + group.str());
    for (auto& x : h) {
        if (x.group() != group) throw CliffordError("quadratic space: degree outside " + group.str());
        if (!x.times(2).is_zero()) throw CliffordError("quadratic space: h = " + x.str() + " has 2h != 0");
        sum = sum + x;
    }
    if (!sum.is_zero()) throw CliffordError("quadratic space: the h_j do not sum to 0");
    std::set<GroupElement> seen(h.begin(), h.end());
    if (seen.size() != h.size()) throw CliffordError("quadratic space: repeated h_j, merge them first");
    GradedQuadraticSpace u;
    u.group = std::move(group);
    u.g = std::move(g);
    u.h = std::move(h);
    u.shift = GroupElement::zero(u.group);
    return u;
}

std::optional<Scalar> scalar_sqrt(const Scalar& c) {
    if (c.is_zero()) return Scalar();
    if (!c.is_constant()) return std::nullopt;
    Scalar s3 = Scalar::zeta(1) + Scalar::zeta(11);  // sqrt 3
    for (long j = 0; j < 12; ++j)
        for (int with3 = 0; with3 < 2; ++with3) {
            Scalar base = with3 ? Scalar::zeta(j) * s3 : Scalar::zeta(j);
            Scalar t = c / (base * base);
            CycNumber tc = t.constant();
            if (!tc.is_rational()) continue;
            Rational r = tc.coeff(0);
            if (r < 0) continue;
            mpz_class nu = r.get_num(), de = r.get_den();
            if (!mpz_perfect_square_p(nu.get_mpz_t()) || !mpz_perfect_square_p(de.get_mpz_t())) continue;
            mpz_class a, b;
            mpz_sqrt(a.get_mpz_t(), nu.get_mpz_t());
            mpz_sqrt(b.get_mpz_t(), de.get_mpz_t());
            Rational root(a, b);
            root.canonicalize();
            return Scalar(root) * base;
        }
    return std::nullopt;
}

GradedQuadraticSpace normalize_quadratic_basis(const RawQuadraticSpace& raw) {
    size_t n = raw.names.size();
    if (n % 2 == 0) throw CliffordError("normalize: even dimension " + std::to_string(n) + " is unsupported");
    if (raw.degrees.size() != n || raw.polar.rows() != n || raw.polar.cols() != n)
        throw CliffordError("normalize: inconsistent sizes");
    const Mat& B = raw.polar;
    if (B != B.transpose()) throw CliffordError("normalize: polar form is not symmetric");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!B(i, j).is_zero() && !(raw.degrees[i] + raw.degrees[j]).is_zero())
                throw CliffordError("normalize: q(" + raw.names[i] + "," + raw.names[j] +
                                    ") != 0 but the degrees do not add up to 0");

    std::vector<GroupElement> order;
    std::map<GroupElement, std::vector<size_t>> cls;
    for (size_t i = 0; i < n; ++i) {
        if (!cls.count(raw.degrees[i])) order.push_back(raw.degrees[i]);
        cls[raw.degrees[i]].push_back(i);
    }
    std::vector<std::pair<Vec, Vec>> pairs;
    std::vector<GroupElement> pg, wh;
    std::vector<Vec> ws;
    std::set<GroupElement> done;
    Scalar i_unit = Scalar::zeta(3), half = Scalar::rational(1, 2);
    for (auto& d : order) {
        if (done.count(d)) continue;
        done.insert(d);
        const auto& idx = cls[d];
        if (d.times(2).is_zero()) {
            std::vector<Vec> rest;
            for (size_t i : idx) rest.push_back(unit_vec(n, i));
            std::vector<Vec> ortho;
            while (!rest.empty()) {
                Vec x;
                size_t pick = rest.size();
                for (size_t a = 0; a < rest.size() && pick == rest.size(); ++a)
                    if (!bform(B, rest[a], rest[a]).is_zero()) pick = a;
                if (pick < rest.size()) {
                    x = rest[pick];
                } else {
                    for (size_t a = 0; a < rest.size() && pick == rest.size(); ++a)
                        for (size_t b = a + 1; b < rest.size(); ++b)
                            if (!bform(B, rest[a], rest[b]).is_zero()) {
                                pick = a;
                                x = add(rest[a], rest[b]);
                                break;
                            }
                    if (pick == rest.size()) throw CliffordError("normalize: degenerate form in degree " + d.str());
                }
                rest.erase(rest.begin() + static_cast<long>(pick));
                Scalar q = bform(B, x, x) * half;
                auto s = scalar_sqrt(q);
                if (!s) throw CliffordError("normalize: sqrt(" + q.str() + ") is not available");
                Vec w = scale(x, s->inv());
                for (auto& r : rest) axpy(r, -bform(B, r, w) * half, w);
                ortho.push_back(w);
            }
            // equal h's merge into hyperbolic pairs
            while (ortho.size() >= 2) {
                Vec u = scale(add(ortho[0], scale(ortho[1], i_unit)), half);
                Vec v = scale(sub(ortho[0], scale(ortho[1], i_unit)), half);
                pairs.emplace_back(u, v);
                pg.push_back(d);
                ortho.erase(ortho.begin(), ortho.begin() + 2);
            }
            if (!ortho.empty()) {
                ws.push_back(ortho[0]);
                wh.push_back(d);
            }
        } else {
            GroupElement nd = -d;
            done.insert(nd);
            auto it = cls.find(nd);
            if (it == cls.end() || it->second.size() != idx.size())
                throw CliffordError("normalize: degenerate form in degrees " + d.str() + ", " + nd.str());
            const auto& jdx = it->second;
            size_t k = idx.size();
            Mat P(k, k);
            for (size_t a = 0; a < k; ++a)
                for (size_t b = 0; b < k; ++b) P(a, b) = B(idx[a], jdx[b]);
            Mat Pi;
            try {
                Pi = inverse(P);
            } catch (const LinAlgError&) {
                throw CliffordError("normalize: degenerate form in degrees " + d.str() + ", " + nd.str());
            }
            for (size_t a = 0; a < k; ++a) {
                Vec v(n);
                for (size_t b = 0; b < k; ++b) v[jdx[b]] = Pi(b, a);
                pairs.emplace_back(unit_vec(n, idx[a]), v);
                pg.push_back(d);
            }
        }
    }
    GroupElement shift = GroupElement::zero(raw.group);
    for (auto& x : wh) shift = shift + x;
    for (auto& x : pg) x = x + shift;
    for (auto& x : wh) x = x + shift;
    auto u = GradedQuadraticSpace::make(raw.group, pg, wh);
    u.shift = shift;
    for (auto& p : pairs) {
        u.coords.push_back(p.first);
        u.coords.push_back(p.second);
    }
    for (auto& w : ws) u.coords.push_back(w);
    Mat want = u.polar();
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            if (bform(B, u.coords[a], u.coords[b]) != want(a, b))
                throw CliffordError("normalize: internal check of the new Gram matrix failed");
    return u;
}

// ---------------------------------------------------------------- Clifford algebras

Vec EvenClifford::generator(size_t k) const { return unit_vec(full->dim(), monomial(1u << k)); }

size_t EvenClifford::monomial(unsigned mask) const {
    auto it = std::find(masks.begin(), masks.end(), mask);
    if (it == masks.end()) throw CliffordError("no monomial with mask " + std::to_string(mask));
    return static_cast<size_t>(it - masks.begin());
}

Vec EvenClifford::to_even(const Vec& fv) const {
    Vec out(full->dim() / 2);
    for (size_t i = 0; i < fv.size(); ++i) {
        if (fv[i].is_zero()) continue;
        if (even_index[i] < 0) throw CliffordError("element has an odd component");
        out[static_cast<size_t>(even_index[i])] = fv[i];
    }
    return out;
}

Vec EvenClifford::to_full(const Vec& ev) const {
    Vec out(full->dim());
    for (size_t i = 0; i < even_index.size(); ++i)
        if (even_index[i] >= 0) out[i] = ev[static_cast<size_t>(even_index[i])];
    return out;
}

EvenClifford build_even_clifford(const GradedQuadraticSpace& u) {
    size_t n = u.dim();
    if (n > 7) throw CliffordError("build_even_clifford: dim U = " + std::to_string(n) + " > 7 is unsupported");
    if (n % 2 == 0) throw CliffordError("build_even_clifford: even dimension is unsupported");
    EvenClifford ec;
    ec.space = u;
    Mat B = u.polar();
    auto names = u.names();
    auto degs = u.degrees();

    // monomials ordered by length, then by mask
    std::vector<unsigned> masks(1u << n);
    std::iota(masks.begin(), masks.end(), 0u);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<size_t> pos(masks.size());
    for (size_t i = 0; i < masks.size(); ++i) pos[masks[i]] = i;
    ec.masks = masks;

    using Terms = std::map<unsigned, Scalar>;
    std::map<std::pair<unsigned, size_t>, Terms> memo;
    // (monomial) * x_c, moving x_c left through larger generators
    std::function<const Terms&(unsigned, size_t)> right_mult = [&](unsigned mask, size_t c) -> const Terms& {
        auto key = std::make_pair(mask, c);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Terms out;
        if (mask == 0) {
            out[1u << c] = 1;
        } else {
            size_t a = static_cast<size_t>(31 - std::countl_zero(mask));
            unsigned P = mask & ~(1u << a);
            if (a < c) {
                out[mask | (1u << c)] = 1;
            } else if (a == c) {
                Scalar q = B(c, c) * Scalar::rational(1, 2);
                if (!q.is_zero()) out[P] = q;
            } else {
                if (!B(a, c).is_zero()) out[P] += B(a, c);
                Terms inner = right_mult(P, c);
                for (auto& [mk, co] : inner) out[mk | (1u << a)] -= co;
            }
            for (auto i = out.begin(); i != out.end();) i = i->second.is_zero() ? out.erase(i) : std::next(i);
        }
        return memo.emplace(key, std::move(out)).first->second;
    };
    auto mask_product = [&](unsigned m1, unsigned m2) {
        Terms cur{{m1, Scalar(1)}};
        for (size_t c = 0; c < n; ++c) {
            if (!((m2 >> c) & 1)) continue;
            Terms next;
            for (auto& [mk, co] : cur)
                for (auto& [mk2, co2] : right_mult(mk, c)) next[mk2] += co * co2;
            for (auto i = next.begin(); i != next.end();) i = i->second.is_zero() ? next.erase(i) : std::next(i);
            cur = std::move(next);
        }
        return cur;
    };

    std::vector<std::string> labels;
    std::vector<int> parity;
    for (unsigned mk : masks) {
        std::string l;
        for (size_t k = 0; k < n; ++k)
            if ((mk >> k) & 1) l += names[k];
        labels.push_back(l.empty() ? "1" : l);
        parity.push_back(std::popcount(mk) % 2);
    }
    size_t N = masks.size();
    auto full = std::make_shared<SuperAlgebra>(SuperAlgebra::from_products(
        "Cl(U)", labels, parity, [&](size_t i, size_t j) {
            Vec v(N);
            for (auto& [mk, co] : mask_product(masks[i], masks[j])) v[pos[mk]] = co;
            return v;
        }));
    full->associative_expected = true;
    ec.full = full;

    std::vector<size_t> evens;
    ec.even_index.assign(N, -1);
    for (size_t i = 0; i < N; ++i)
        if (parity[i] == 0) {
            ec.even_index[i] = static_cast<long>(evens.size());
            evens.push_back(i);
        }
    std::vector<std::string> elabels;
    for (size_t i : evens) elabels.push_back(labels[i]);
    auto even = std::make_shared<SuperAlgebra>(SuperAlgebra::from_products(
        "Cl0(U)", elabels, std::vector<int>(evens.size(), 0), [&](size_t i, size_t j) {
            return ec.to_even(full->basis_product(evens[i], evens[j]));
        }));
    even->associative_expected = true;
    ec.even.algebra = even;

    std::vector<GroupElement> edeg;
    for (size_t i : evens) {
        GroupElement d = GroupElement::zero(u.group);
        for (size_t k = 0; k < n; ++k)
            if ((masks[i] >> k) & 1) d = d + degs[k];
        edeg.push_back(d);
    }
    ec.even.gradings.push_back(Grading::on_basis("induced", even, u.group, edeg));

    // bar: x_{a1}...x_{ak} -> (-1)^k x_{ak}...x_{a1}
    size_t E = evens.size();
    Mat bar(E, E);
    for (size_t j = 0; j < E; ++j) {
        unsigned mk = masks[evens[j]];
        Terms cur{{0u, sign(static_cast<size_t>(std::popcount(mk)))}};
        for (size_t c = n; c-- > 0;) {
            if (!((mk >> c) & 1)) continue;
            Terms next;
            for (auto& [m1, co] : cur)
                for (auto& [m2, co2] : right_mult(m1, c)) next[m2] += co * co2;
            cur = std::move(next);
        }
        for (auto& [m1, co] : cur)
            if (!co.is_zero()) bar(static_cast<size_t>(ec.even_index[pos[m1]]), j) = co;
    }
    ec.even.maps["bar"] = bar;

    ec.bar_involutive = (bar * bar == Mat::identity(E));
    ec.bar_antiautomorphism = true;
    for (size_t i = 0; i < E && ec.bar_antiautomorphism; ++i)
        for (size_t j = 0; j < E; ++j) {
            Vec lhs = bar * even->basis_product(i, j);
            Vec rhs = even->multiply(bar.column(j), bar.column(i));
            if (lhs != rhs) {
                ec.bar_antiautomorphism = false;
                ec.witness = "bar(" + elabels[i] + " " + elabels[j] + ") != bar(" + elabels[j] + ") bar(" + elabels[i] + ")";
                break;
            }
        }
    for (size_t j = 0; j < E && ec.bar_involutive; ++j)
        for (size_t i = 0; i < E; ++i)
            if (!bar(i, j).is_zero() && edeg[i] != edeg[j]) {
                ec.bar_involutive = false;
                ec.witness = "bar moves " + elabels[j] + " out of its component";
                break;
            }

    // z
    Vec z = unit_vec(N, pos[0]);
    for (size_t i = 0; i < u.m(); ++i) {
        Vec a = ec.generator(2 * i), b = ec.generator(2 * i + 1);
        z = full->multiply(z, sub(full->multiply(a, b), full->multiply(b, a)));
    }
    for (size_t j = 2 * u.m(); j < n; ++j) z = full->multiply(z, ec.generator(j));
    ec.z = z;

    // iota(so(U,q)) = span [x_a, x_b]
    auto comm = [&](const Vec& a, const Vec& b) { return sub(full->multiply(a, b), full->multiply(b, a)); };
    std::vector<Vec> so;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) so.push_back(comm(ec.generator(a), ec.generator(b)));
    CoordinateSolver so_coords(so);
    ec.so_image_closed = so_coords.dim() == n * (n - 1) / 2;
    for (size_t a = 0; a < so.size() && ec.so_image_closed; ++a)
        for (size_t b = a + 1; b < so.size(); ++b)
            if (!so_coords.solve(comm(so[a], so[b]))) {
                ec.so_image_closed = false;
                ec.witness = "commutator of so elements leaves the span";
                break;
            }
    ec.bracket_identity = true;
    for (size_t a = 0; a < n && ec.bracket_identity; ++a)
        for (size_t b = 0; b < n && ec.bracket_identity; ++b)
            for (size_t c = 0; c < n; ++c) {
                Vec x = ec.generator(a), y = ec.generator(b), t = ec.generator(c);
                Vec lhs = comm(comm(x, y), t);
                Vec rhs = scale(sub(scale(x, B(b, c)), scale(y, B(a, c))), Scalar(2));
                if (lhs != rhs) {
                    ec.bracket_identity = false;
                    ec.witness = "[[" + names[a] + "," + names[b] + "]," + names[c] + "] identity fails";
                    break;
                }
            }
    return ec;
}

// ---------------------------------------------------------------- division class

std::string to_string(DivisionClass c) {
    switch (c) {
        case DivisionClass::F: return "F";
        case DivisionClass::Q: return "Q";
        case DivisionClass::QQ: return "QQ";
        case DivisionClass::QQQ: return "QQQ";
    }
    return "?";
}

DivisionResult division_class(const Grading& gr) {
    const SuperAlgebra& a = *gr.algebra;
    size_t N = a.dim();
    Assoc A(a);
    auto comps = gr.components();
    GroupElement zero = GroupElement::zero(gr.group);
    std::vector<size_t> deg0;
    for (auto& c : comps)
        if (c.first == zero) deg0 = c.second;
    if (deg0.empty()) throw CliffordError("division_class: no degree 0 component");

    // unit: sum_i c_i b_i with (sum c_i b_i) b_j = b_j for all j
    Vec one;
    {
        std::vector<Vec> rows;
        Vec rhs;
        for (size_t j = 0; j < N; ++j)
            for (size_t k = 0; k < N; ++k) {
                Vec row(deg0.size());
                bool any = false;
                for (size_t t = 0; t < deg0.size(); ++t) {
                    Scalar c = a.coeff(deg0[t], j, k);
                    if (!c.is_zero()) any = true;
                    row[t] = c;
                }
                if (!any && k != j) continue;
                rows.push_back(row);
                rhs.push_back(k == j ? Scalar(1) : Scalar());
            }
        auto s = solve(Mat::from_rows(rows, deg0.size()), rhs);
        if (!s.consistent) throw CliffordError("division_class: algebra has no unit");
        one = zero_vec(N);
        for (size_t t = 0; t < deg0.size(); ++t) one[deg0[t]] = s.x[t];
    }

    auto left_ideal = [&](const Vec& x) {
        IncrementalSpan s(N);
        for (size_t k = 0; k < N; ++k) s.add(A.mul(unit_vec(N, k), x));
        return s;
    };

    // candidates: single basis elements, then pairs in one component if every single one is invertible
    std::vector<std::pair<std::string, Vec>> cands;
    for (size_t i = 0; i < N; ++i) cands.emplace_back(a.label(i), unit_vec(N, i));
    std::vector<size_t> dims;
    for (auto& c : cands) dims.push_back(left_ideal(c.second).dim());
    if (*std::min_element(dims.begin(), dims.end()) == N)
        for (auto& c : comps)
            for (size_t p = 0; p < c.second.size(); ++p)
                for (size_t q = p + 1; q < c.second.size(); ++q) {
                    Vec x = add(unit_vec(N, c.second[p]), unit_vec(N, c.second[q]));
                    cands.emplace_back(a.label(c.second[p]) + "+" + a.label(c.second[q]), x);
                    dims.push_back(left_ideal(x).dim());
                }
    std::vector<size_t> ord(cands.size());
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(), [&](size_t x, size_t y) { return dims[x] < dims[y]; });

    auto degree_of = [&](const Vec& v) -> std::optional<GroupElement> {
        for (size_t i = 0; i < N; ++i)
            if (!v[i].is_zero()) return gr.degrees[i];
        return std::nullopt;
    };

    auto idempotent_in = [&](const Vec& x) -> std::optional<Vec> {
        auto I = left_ideal(x);
        if (I.dim() == N) return one;
        IncrementalSpan i0(N);
        for (auto& v : I.basis()) {
            auto d = degree_of(v);
            if (d && *d == zero) i0.add(v);
        }
        // b x with deg b = -deg x
        auto dx = degree_of(x);
        for (size_t k = 0; k < N && dx; ++k)
            if (gr.degrees[k] + *dx == zero) i0.add(A.mul(unit_vec(N, k), x));
        std::vector<Vec> ys = i0.basis();
        size_t nb = ys.size();
        for (size_t p = 0; p < nb; ++p)
            for (size_t q = p + 1; q < nb; ++q) ys.push_back(add(ys[p], ys[q]));
        for (auto& y : ys)
            if (auto e = split_idempotent(A, y, one)) return e;
        return std::nullopt;
    };

    DivisionResult r;
    std::optional<Vec> e;
    for (size_t o : ord) {
        e = idempotent_in(cands[o].second);
        if (e) {
            r.ideal_generator = cands[o].first;
            r.ideal_dim = dims[o];
            break;
        }
    }
    if (!e) throw CliffordError("division_class: no idempotent found in a minimal left ideal");

    // shrink e until (eRe)_0 = F e
    while (true) {
        IncrementalSpan d0(N);
        for (size_t i : deg0) d0.add(A.mul(A.mul(*e, unit_vec(N, i)), *e));
        if (d0.dim() <= 1) break;
        std::vector<Vec> ys = d0.basis();
        for (size_t p = 0; p < d0.basis().size(); ++p)
            for (size_t q = p + 1; q < d0.basis().size(); ++q) ys.push_back(add(ys[p], ys[q]));
        std::optional<Vec> f;
        for (auto& y : ys)
            if ((f = split_idempotent(A, y, *e))) break;
        if (!f) throw CliffordError("division_class: degree 0 part of eRe has no proper idempotent");
        e = f;
    }
    r.idempotent = *e;
    r.ideal_dim = left_ideal(*e).dim();

    for (auto& c : comps) {
        IncrementalSpan s(N);
        for (size_t i : c.second) s.add(A.mul(A.mul(*e, unit_vec(N, i)), *e));
        if (s.dim() > 0) ++r.support_size;
        r.max_component_dim = std::max(r.max_component_dim, s.dim());
    }
    switch (r.support_size) {
        case 1: r.cls = DivisionClass::F; break;
        case 4: r.cls = DivisionClass::Q; break;
        case 16: r.cls = DivisionClass::QQ; break;
        case 64: r.cls = DivisionClass::QQQ; break;
        default:
            throw CliffordError("division_class: |Supp eRe| = " + std::to_string(r.support_size) +
                                " is not 1, 4, 16 or 64");
    }
    return r;
}

// ---------------------------------------------------------------- case table

namespace {

struct CasePattern {
    size_t m, rank;
    // relations for positions rank.. : source positions, empty means h = 0
    std::vector<std::vector<size_t>> rel;
    DivisionClass cls;
};

std::string describe(const CasePattern& p) {
    std::string s;
    for (size_t i = 0; i < p.rel.size(); ++i) {
        if (!s.empty()) s += ", ";
        s += "h" + std::to_string(p.rank + i + 1) + "=";
        if (p.rel[i].empty()) s += "0";
        for (size_t k = 0; k < p.rel[i].size(); ++k) s += (k ? "+h" : "h") + std::to_string(p.rel[i][k] + 1);
    }
    return s.empty() ? "no relation" : s;
}

const std::vector<CasePattern>& case_table() {
    using D = DivisionClass;
    static const std::vector<CasePattern> t = {
        {3, 0, {{}}, D::F},
        {2, 2, {{0, 1}}, D::Q},
        {1, 3, {{0, 1, 2}, {}}, D::Q},
        {1, 4, {{0, 1, 2, 3}}, D::QQ},
        {0, 6, {{0, 1, 2, 3, 4, 5}}, D::QQQ},
        {0, 5, {{0, 1, 2, 3, 4}, {}}, D::QQ},
        {0, 5, {{0, 1}, {2, 3, 4}}, D::QQ},
        {0, 4, {{0, 1}, {2, 3}, {}}, D::QQ},
        {0, 4, {{0, 1}, {0, 2}, {0, 3}}, D::Q},
        {0, 3, {{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}}, D::F},
    };
    return t;
}

}  // namespace

Dim7Case dim7_case_classify(const GradedQuadraticSpace& u) {
    if (u.dim() != 7) throw CliffordError("dim7_case_classify: dim U = " + std::to_string(u.dim()));
    std::vector<unsigned long> bits;
    for (auto& h : u.h) bits.push_back(two_torsion_bits(h));
    size_t r = f2_rank(bits);
    size_t k = bits.size();
    for (auto& p : case_table()) {
        if (p.m != u.m() || p.rank != r) continue;
        // m = 3 has a single w of degree 0
        if (p.rank == 0) {
            if (bits[0] != 0) continue;
            return {p.cls, p.m, r, describe(p), {0}};
        }
        std::vector<size_t> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<unsigned long> lead;
            for (size_t i = 0; i < p.rank; ++i) lead.push_back(bits[perm[i]]);
            if (f2_rank(lead) != p.rank) continue;
            bool ok = true;
            for (size_t i = 0; i < p.rel.size() && ok; ++i) {
                unsigned long want = 0;
                for (size_t s : p.rel[i]) want ^= bits[perm[s]];
                ok = bits[perm[p.rank + i]] == want;
            }
            if (ok) return {p.cls, p.m, r, describe(p), perm};
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    throw CliffordError("dim7_case_classify: no case matches m=" + std::to_string(u.m()) +
                        ", rank=" + std::to_string(r));
}

// ---------------------------------------------------------------- hyperbolic pair factorization

bool UuvReport::ok() const {
    if (steps.empty()) return false;
    for (auto& s : steps)
        if (!s.ok()) return false;
    return witness.empty();
}

UuvReport check_uuv_factorization(const GradedQuadraticSpace& u) {
    UuvReport rep;
    if (u.m() == 0) {
        rep.witness = "no hyperbolic pair";
        return rep;
    }
    auto M2 = std::make_shared<SuperAlgebra>(matrix_algebra(
        "M2", {"E11", "E12", "E21", "E22"},
        {[] { Mat m(2, 2); m(0, 0) = 1; return m; }(), [] { Mat m(2, 2); m(0, 1) = 1; return m; }(),
         [] { Mat m(2, 2); m(1, 0) = 1; return m; }(), [] { Mat m(2, 2); m(1, 1) = 1; return m; }()}));
    for (size_t k = 0; k < u.m(); ++k) {
        std::vector<GroupElement> g(u.g.begin() + static_cast<long>(k), u.g.end());
        auto sub_space = GradedQuadraticSpace::make(u.group, g, u.h);
        auto ec = build_even_clifford(sub_space);
        const SuperAlgebra& R = *ec.even.algebra;
        size_t n = sub_space.dim();
        Scalar sg = sign(sub_space.l());
        Vec zu = ec.to_even(ec.mul(ec.z, ec.generator(0)));
        Vec zv = ec.to_even(ec.mul(ec.z, ec.generator(1)));
        UuvStep st;
        st.subalgebra_dim = generated_subalgebra(R, {zu, zv}).size();

        LinMap f;
        f.source = M2;
        f.target = ec.even.algebra;
        f.matrix = Mat::from_columns(
            {scale(R.multiply(zu, zv), sg), zu, scale(zv, sg), scale(R.multiply(zv, zu), sg)}, R.dim());
        st.matrix_iso = check_homomorphism(f).ok && rank(f.matrix) == 4;

        // zbar = [u2,v2]... w1...w_{2l+1}
        Vec zbar = unit_vec(ec.full->dim(), ec.monomial(0));
        for (size_t i = 1; i < sub_space.m(); ++i) {
            Vec a = ec.generator(2 * i), b = ec.generator(2 * i + 1);
            zbar = ec.mul(zbar, sub(ec.mul(a, b), ec.mul(b, a)));
        }
        for (size_t j = 2 * sub_space.m(); j < n; ++j) zbar = ec.mul(zbar, ec.generator(j));
        std::vector<Vec> comp;
        for (size_t j = 2; j < n; ++j) comp.push_back(ec.to_even(ec.mul(zbar, ec.generator(j))));
        st.commutes = true;
        for (auto& c : comp)
            for (auto* s : {&zu, &zv})
                if (R.multiply(*s, c) != R.multiply(c, *s)) st.commutes = false;
        st.complement_dim = generated_subalgebra(R, comp).size();
        st.total_dim = R.dim();

        Vec e = ec.to_even(unit_vec(ec.full->dim(), ec.monomial(0b11u)));
        size_t ei = static_cast<size_t>(ec.even_index[ec.monomial(0b11u)]);
        st.idempotent_ok = R.multiply(e, e) == e && ec.even.gradings[0].degrees[ei].is_zero() &&
                           e == scale(R.multiply(zu, zv), sg);
        if (!st.ok() && rep.witness.empty()) rep.witness = "factorization fails at pair " + std::to_string(k + 1);
        rep.steps.push_back(st);
    }
    rep.residual_dim = size_t{1} << (2 * u.l());
    return rep;
}

// ---------------------------------------------------------------- octonion and quaternion cube checks

CayleyCliffordReport verify_cayley_clifford() {
    CayleyCliffordReport r;
    auto c = build_cayley();
    const SuperAlgebra& C = *c.algebra;
    const Mat& norm = c.forms.at("norm");
    std::vector<Mat> l(8);
    for (size_t i = 0; i < 8; ++i) l[i] = C.ad(i);
    r.squares_ok = true;
    for (size_t i = 1; i < 8; ++i) {
        Scalar N = norm(i, i) * Scalar::rational(1, 2);
        if (l[i] * l[i] != Mat::identity(8).scaled(-N)) {
            r.squares_ok = false;
            r.witness = "l_" + C.label(i) + "^2 != -N id";
        }
    }
    IncrementalSpan span(64);
    for (unsigned mk = 0; mk < 128; ++mk) {
        if (std::popcount(mk) % 2) continue;
        Mat p = Mat::identity(8);
        for (size_t k = 0; k < 7; ++k)
            if ((mk >> k) & 1) p = p * l[k + 1];
        Vec flat;
        for (size_t i = 0; i < 8; ++i)
            for (size_t j = 0; j < 8; ++j) flat.push_back(p(i, j));
        span.add(flat);
    }
    r.span_dim = span.dim();
    r.adjoint_ok = true;
    for (size_t x = 1; x < 8 && r.adjoint_ok; ++x)
        for (size_t y = 0; y < 8 && r.adjoint_ok; ++y)
            for (size_t z = 0; z < 8; ++z) {
                Vec xy = C.basis_product(x, y), xz = C.basis_product(x, z);
                Scalar lhs = bform(norm, xy, unit_vec(8, z)), rhs = bform(norm, unit_vec(8, y), xz);
                if (lhs != -rhs) {
                    r.adjoint_ok = false;
                    r.witness = "N(" + C.label(x) + C.label(y) + "," + C.label(z) + ") != -N(" + C.label(y) + "," +
                                C.label(x) + C.label(z) + ")";
                    break;
                }
            }
    return r;
}

QuaternionCubeReport verify_quaternion_cube() {
    QuaternionCubeReport r;
    auto Qb = build_quaternions();
    const SuperAlgebra& Q = *Qb.algebra;
    const Mat& qbar = Qb.maps.at("bar");
    const Mat& qnorm = Qb.forms.at("norm");
    auto qmul = [&](const Vec& x, const Vec& y) { return Q.multiply(x, y); };
    std::vector<Mat> L(4), R(4);
    for (size_t i = 0; i < 4; ++i) {
        L[i] = Q.ad(i);
        Mat m(4, 4);
        for (size_t x = 0; x < 4; ++x)
            for (auto& t : Q.product(x, i)) m(t.k, x) = t.c;
        R[i] = m;
    }
    auto kron = [](const Mat& a, const Mat& b) {
        Mat k(a.rows() * b.rows(), a.cols() * b.cols());
        for (size_t i = 0; i < a.rows(); ++i)
            for (size_t j = 0; j < a.cols(); ++j)
                if (!a(i, j).is_zero())
                    for (size_t p = 0; p < b.rows(); ++p)
                        for (size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        return k;
    };

    // Q (x) Q (x) Q, basis a(x)b(x)c at 16a + 4b + c
    auto cube = std::make_shared<SuperAlgebra>(SuperAlgebra::from_products(
        "QxQxQ",
        [] {
            std::vector<std::string> l;
            const char* nm[4] = {"1", "q1", "q2", "q3"};
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    for (int c = 0; c < 4; ++c) l.push_back(std::string(nm[a]) + "." + nm[b] + "." + nm[c]);
            return l;
        }(),
        std::vector<int>(64, 0), [&](size_t i, size_t j) {
            Vec v(64);
            for (auto& ta : Q.product(i / 16, j / 16))
                for (auto& tb : Q.product((i / 4) % 4, (j / 4) % 4))
                    for (auto& tc : Q.product(i % 4, j % 4)) v[16 * ta.k + 4 * tb.k + tc.k] += ta.c * tb.c * tc.c;
            return v;
        }));
    std::vector<Mat> phi(64);
    for (size_t k = 0; k < 64; ++k) {
        size_t a = k / 16, b = (k / 4) % 4, c = k % 4;
        phi[k] = kron(L[a] * R[b], L[c]).scaled(qbar(b, b));
    }
    auto phi_of = [&](const Vec& v) {
        Mat m(16, 16);
        for (size_t k = 0; k < 64; ++k)
            if (!v[k].is_zero()) m = m + phi[k].scaled(v[k]);
        return m;
    };
    // generators q(x)1(x)1, 1(x)q(x)1, 1(x)1(x)q against the whole basis
    r.phi_hom = true;
    for (size_t g : {16u, 32u, 48u, 4u, 8u, 12u, 1u, 2u, 3u})
        for (size_t k = 0; k < 64 && r.phi_hom; ++k)
            if (phi[g] * phi[k] != phi_of(cube->basis_product(g, k))) {
                r.phi_hom = false;
                r.witness = "Phi fails on " + cube->label(g) + " * " + cube->label(k);
            }
    IncrementalSpan span(256);
    for (auto& p : phi) {
        Vec flat;
        for (size_t i = 0; i < 16; ++i)
            for (size_t j = 0; j < 16; ++j) flat.push_back(p(i, j));
        span.add(flat);
    }
    r.phi_rank = span.dim();
    r.commutes_with_right_q = true;
    for (size_t q = 1; q < 4; ++q) {
        Mat rq = kron(Mat::identity(4), R[q]);
        for (auto& p : phi)
            if (p * rq != rq * p) r.commutes_with_right_q = false;
    }

    auto triples = quaternion_w_triples();
    std::vector<size_t> w;
    for (auto& t : triples) w.push_back(16 * t[0] + 4 * t[1] + t[2]);
    r.w_anticommute = true;
    for (size_t i = 0; i < w.size(); ++i) {
        Vec sq = cube->basis_product(w[i], w[i]);
        if (sq == unit_vec(64, 0)) {
            r.w_squares.push_back(1);
        } else if (sq == scale(unit_vec(64, 0), Scalar(-1))) {
            r.w_squares.push_back(-1);
        } else {
            r.w_squares.push_back(0);
            r.w_anticommute = false;
        }
        for (size_t j = i + 1; j < w.size(); ++j)
            if (!is_zero(add(cube->basis_product(w[i], w[j]), cube->basis_product(w[j], w[i])))) r.w_anticommute = false;
    }
    const std::vector<std::array<long, 4>> expected = {{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 1},
                                                        {1, 1, 0, 1}, {1, 0, 0, 1}, {0, 0, 0, 1}};
    r.degrees_ok = quaternion_w_degrees() == expected;

    // h(x(x)y, u(x)v) = ybar q2 v N(x,u), values in Q
    auto h_basis = [&](size_t X, size_t Y) {
        size_t x = X / 4, y = X % 4, u = Y / 4, v = Y % 4;
        Vec val = qmul(qmul(qbar.column(y), unit_vec(4, 2)), unit_vec(4, v));
        return scale(val, qnorm(x, u));
    };
    std::vector<std::vector<Vec>> H(16, std::vector<Vec>(16));
    for (size_t X = 0; X < 16; ++X)
        for (size_t Y = 0; Y < 16; ++Y) H[X][Y] = h_basis(X, Y);
    auto h = [&](const Vec& x, const Vec& y) {
        Vec s = zero_vec(4);
        for (size_t X = 0; X < 16; ++X) {
            if (x[X].is_zero()) continue;
            for (size_t Y = 0; Y < 16; ++Y)
                if (!y[Y].is_zero()) axpy(s, x[X] * y[Y], H[X][Y]);
        }
        return s;
    };
    r.sample_h = H[1 * 4 + 0][1 * 4 + 2];
    r.skew_hermitian = true;
    r.right_linear = true;
    for (size_t X = 0; X < 16; ++X)
        for (size_t Y = 0; Y < 16; ++Y) {
            if (H[X][Y] != scale(qbar * H[Y][X], Scalar(-1))) r.skew_hermitian = false;
            for (size_t q = 1; q < 4; ++q) {
                Vec yq = kron(Mat::identity(4), R[q]) * unit_vec(16, Y);
                if (h(unit_vec(16, X), yq) != qmul(H[X][Y], unit_vec(4, q))) r.right_linear = false;
            }
        }
    // bar on the cube: a(x)b(x)c -> abar (x) bbar (x) q2^-1 cbar q2
    Vec q2 = unit_vec(4, 2), q2inv = q2;  // q2^2 = 1
    r.intertwines_bar = true;
    for (size_t k = 0; k < 64 && r.intertwines_bar; ++k) {
        size_t a = k / 16, b = (k / 4) % 4, c = k % 4;
        Vec cc = qmul(qmul(q2inv, qbar.column(c)), q2);
        Vec kb(64);
        for (size_t t = 0; t < 4; ++t)
            if (!cc[t].is_zero()) kb[16 * a + 4 * b + t] = qbar(a, a) * qbar(b, b) * cc[t];
        Mat pb = phi_of(kb);
        for (size_t X = 0; X < 16 && r.intertwines_bar; ++X)
            for (size_t Y = 0; Y < 16; ++Y)
                if (h(phi[k] * unit_vec(16, X), unit_vec(16, Y)) != h(unit_vec(16, X), pb * unit_vec(16, Y))) {
                    r.intertwines_bar = false;
                    r.witness = "h(Phi(" + cube->label(k) + ") X, Y) != h(X, Phi(bar) Y)";
                    break;
                }
    }
    return r;
}

}  // namespace finegrad
