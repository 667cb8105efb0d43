#include "finegrad/abgroup.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace finegrad {

namespace {

long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long checked_mul(long a, long b) {
    long r;
    if (__builtin_mul_overflow(a, b, &r)) throw GroupError("integer overflow in group computation");
    return r;
}

long checked_sub(long a, long b) {
    long r;
    if (__builtin_sub_overflow(a, b, &r)) throw GroupError("integer overflow in group computation");
    return r;
}

}  // namespace

GradingGroup::GradingGroup(int r, std::vector<long> t) : free_rank(r), torsion(std::move(t)) {
    if (r < 0) throw GroupError("negative free rank");
    for (long m : torsion)
        if (m < 2) throw GroupError("torsion orders must be >= 2");
}

std::string GradingGroup::str() const {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.push_back("Z");
    if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (long m : torsion) parts.push_back("Z_" + std::to_string(m));
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
    return out;
}

GradingGroup GradingGroup::product(const GradingGroup& o) const {
    std::vector<long> t = torsion;
    t.insert(t.end(), o.torsion.begin(), o.torsion.end());
    return GradingGroup(free_rank + o.free_rank, t);
}

GroupElement::GroupElement(GradingGroup g, std::vector<long> free_part, std::vector<long> torsion_part)
    : g_(std::move(g)), f_(std::move(free_part)), t_(std::move(torsion_part)) {
    if (f_.size() != static_cast<size_t>(g_.free_rank) || t_.size() != g_.torsion.size())
        throw GroupError("element shape does not match group " + g_.str());
    for (size_t i = 0; i < t_.size(); ++i) t_[i] = mod_pos(t_[i], g_.torsion[i]);
}

GroupElement GroupElement::zero(const GradingGroup& g) {
    return GroupElement(g, std::vector<long>(g.free_rank, 0), std::vector<long>(g.torsion.size(), 0));
}

void GroupElement::check_same(const GroupElement& o) const {
    if (g_ != o.g_) throw GroupError("mismatched groups: " + g_.str() + " vs " + o.g_.str());
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
    check_same(o);
    GroupElement r(*this);
    for (size_t i = 0; i < f_.size(); ++i) r.f_[i] += o.f_[i];
    for (size_t i = 0; i < t_.size(); ++i) r.t_[i] = mod_pos(r.t_[i] + o.t_[i], g_.torsion[i]);
    return r;
}

GroupElement GroupElement::operator-() const {
    GroupElement r(*this);
    for (auto& v : r.f_) v = -v;
    for (size_t i = 0; i < t_.size(); ++i) r.t_[i] = mod_pos(-t_[i], g_.torsion[i]);
    return r;
}

GroupElement GroupElement::times(long n) const {
    GroupElement r(*this);
    for (auto& v : r.f_) v = checked_mul(v, n);
    for (size_t i = 0; i < t_.size(); ++i) r.t_[i] = mod_pos(checked_mul(t_[i], n % g_.torsion[i]), g_.torsion[i]);
    return r;
}

bool GroupElement::is_zero() const {
    for (long v : f_)
        if (v != 0) return false;
    for (long v : t_)
        if (v != 0) return false;
    return true;
}

std::optional<long> GroupElement::order() const {
    for (long v : f_)
        if (v != 0) return std::nullopt;
    long n = 1;
    for (size_t i = 0; i < t_.size(); ++i) {
        long m = g_.torsion[i];
        long o = m / std::gcd(t_[i], m);
        n = std::lcm(n, o);
    }
    return n;
}

GroupElement GroupElement::product(const GroupElement& o) const {
    std::vector<long> f = f_, t = t_;
    f.insert(f.end(), o.f_.begin(), o.f_.end());
    t.insert(t.end(), o.t_.begin(), o.t_.end());
    return GroupElement(g_.product(o.g_), f, t);
}

std::string GroupElement::str() const {
    std::ostringstream os;
    os << "([";
    for (size_t i = 0; i < f_.size(); ++i) os << (i ? "," : "") << f_[i];
    os << "];[";
    for (size_t i = 0; i < t_.size(); ++i) os << (i ? "," : "") << t_[i];
    os << "])";
    return os.str();
}

std::string AbelianInvariants::str() const {
    GradingGroup g(free_rank, factors);
    return g.str();
}

// ---------------------------------------------------------------- normal forms

std::vector<long> smith_diagonal(std::vector<std::vector<long>> m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    std::vector<long> diag;
    size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: smallest nonzero |entry| in the trailing block
        long best = 0;
        size_t pr = 0, pc = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || std::labs(m[i][j]) < best)) {
                    best = std::labs(m[i][j]);
                    pr = i;
                    pc = j;
                }
        if (best == 0) break;
        std::swap(m[t], m[pr]);
        for (auto& row : m) std::swap(row[t], row[pc]);
        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i) {
            long q = m[i][t] / m[t][t];
            if (q != 0)
                for (size_t j = t; j < cols; ++j) m[i][j] = checked_sub(m[i][j], checked_mul(q, m[t][j]));
            if (m[i][t] != 0) clean = false;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            long q = m[t][j] / m[t][t];
            if (q != 0)
                for (size_t i = t; i < rows; ++i) m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][t]));
            if (m[t][j] != 0) clean = false;
        }
        if (!clean) continue;
        // divisibility of the remaining block
        bool divides = true;
        for (size_t i = t + 1; i < rows && divides; ++i)
            for (size_t j = t + 1; j < cols; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
                    divides = false;
                    break;
                }
        if (!divides) continue;
        diag.push_back(std::labs(m[t][t]));
        ++t;
    }
    while (diag.size() < std::min(rows, cols)) diag.push_back(0);
    return diag;
}

namespace {

// Integer kernel of A (rows x cols) as a list of column vectors.
std::vector<std::vector<long>> integer_kernel(std::vector<std::vector<long>> a, size_t cols) {
    size_t rows = a.size();
    std::vector<std::vector<long>> u(cols, std::vector<long>(cols, 0));  // u[j] = column j
    for (size_t j = 0; j < cols; ++j) u[j][j] = 1;
    auto col_op = [&](size_t dst, size_t src, long q) {  // col dst -= q * col src
        for (size_t i = 0; i < rows; ++i) a[i][dst] = checked_sub(a[i][dst], checked_mul(q, a[i][src]));
        for (size_t i = 0; i < cols; ++i) u[dst][i] = checked_sub(u[dst][i], checked_mul(q, u[src][i]));
    };
    auto col_swap = [&](size_t x, size_t y) {
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
        std::swap(u[x], u[y]);
    };
    size_t p = 0;
    for (size_t i = 0; i < rows && p < cols; ++i) {
        for (;;) {
            size_t best = cols;
            for (size_t j = p; j < cols; ++j)
                if (a[i][j] != 0 && (best == cols || std::labs(a[i][j]) < std::labs(a[i][best]))) best = j;
            if (best == cols) break;
            col_swap(p, best);
            bool done = true;
            for (size_t j = p + 1; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                col_op(j, p, a[i][j] / a[i][p]);
                if (a[i][j] != 0) done = false;
            }
            if (done) {
                ++p;
                break;
            }
        }
    }
    std::vector<std::vector<long>> ker;
    for (size_t j = p; j < cols; ++j) ker.push_back(u[j]);
    return ker;
}

}  // namespace

AbelianInvariants subgroup_invariants(const std::vector<GroupElement>& gens) {
    AbelianInvariants inv;
    if (gens.empty()) return inv;
    const GradingGroup& g = gens[0].group();
    for (const auto& x : gens)
        if (x.group() != g) throw GroupError("mismatched groups in generator list");
    size_t r = g.free_rank, k = g.torsion.size(), s = gens.size();
    size_t rows = r + k, cols = s + k;
    std::vector<std::vector<long>> a(rows, std::vector<long>(cols, 0));
    for (size_t j = 0; j < s; ++j) {
        for (size_t i = 0; i < r; ++i) a[i][j] = gens[j].free_part()[i];
        for (size_t i = 0; i < k; ++i) a[r + i][j] = gens[j].torsion_part()[i];
    }
    for (size_t i = 0; i < k; ++i) a[r + i][s + i] = g.torsion[i];
    auto ker = integer_kernel(a, cols);
    std::vector<std::vector<long>> rel;
    for (const auto& v : ker) {
        std::vector<long> row(v.begin(), v.begin() + s);
        if (std::any_of(row.begin(), row.end(), [](long x) { return x != 0; })) rel.push_back(row);
    }
    if (rel.empty()) {
        inv.free_rank = static_cast<int>(s);
        return inv;
    }
    auto d = smith_diagonal(rel);
    size_t rank = 0;
    for (long x : d)
        if (x != 0) ++rank;
    inv.free_rank = static_cast<int>(s - rank);
    for (long x : d)
        if (x > 1) inv.factors.push_back(x);
    std::sort(inv.factors.begin(), inv.factors.end());
    return inv;
}

AbelianInvariants invariants_of(const GradingGroup& g) {
    AbelianInvariants inv;
    inv.free_rank = g.free_rank;
    size_t k = g.torsion.size();
    if (k == 0) return inv;
    std::vector<std::vector<long>> m(k, std::vector<long>(k, 0));
    for (size_t i = 0; i < k; ++i) m[i][i] = g.torsion[i];
    for (long x : smith_diagonal(m))
        if (x > 1) inv.factors.push_back(x);
    std::sort(inv.factors.begin(), inv.factors.end());
    return inv;
}

// ---------------------------------------------------------------- literals

namespace {

std::string strip(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

long parse_long(const std::string& s, const std::string& ctx) {
    std::string t = strip(s);
    if (t.empty()) throw GroupError("empty integer in " + ctx);
    size_t pos = 0;
    long v;
    try {
        v = std::stol(t, &pos);
    } catch (const std::exception&) {
        throw GroupError("bad integer '" + t + "' in " + ctx);
    }
    if (pos != t.size()) throw GroupError("bad integer '" + t + "' in " + ctx);
    return v;
}

std::vector<long> parse_list(const std::string& s, const std::string& ctx) {
    std::vector<long> out;
    std::string t = strip(s);
    if (t.empty()) return out;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_long(item, ctx));
    return out;
}

}  // namespace

GradingGroup parse_group(const std::string& text) {
    std::string t = strip(text);
    GradingGroup g;
    if (t == "0") return g;
    // split on 'x' surrounded by whitespace
    std::vector<std::string> parts;
    std::stringstream ss(t);
    std::string tok, cur;
    while (ss >> tok) {
        if (tok == "x") {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += tok;
        }
    }
    parts.push_back(cur);
    for (const auto& p : parts) {
        if (p.empty() || p[0] != 'Z') throw GroupError("bad group factor '" + p + "' in \"" + text + "\"");
        std::string rest = p.substr(1);
        long exponent = 1;
        size_t caret = rest.find('^');
        std::string base = rest;
        if (caret != std::string::npos) {
            exponent = parse_long(rest.substr(caret + 1), "group literal");
            base = rest.substr(0, caret);
        }
        if (exponent < 0) throw GroupError("negative exponent in group literal");
        if (base.empty()) {
            g.free_rank += static_cast<int>(exponent);
        } else if (base[0] == '_') {
            long m = parse_long(base.substr(1), "group literal");
            if (m < 2) throw GroupError("torsion order must be >= 2 in \"" + text + "\"");
            for (long i = 0; i < exponent; ++i) g.torsion.push_back(m);
        } else {
            throw GroupError("bad group factor '" + p + "'");
        }
    }
    return g;
}

GroupElement parse_element(const GradingGroup& g, const std::string& text) {
    std::string t = strip(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw GroupError("bad element literal \"" + text + "\"");
    std::string body = t.substr(1, t.size() - 2);
    size_t semi = body.find(';');
    if (semi == std::string::npos) throw GroupError("bad element literal \"" + text + "\"");
    auto bracket = [&](std::string s) {
        s = strip(s);
        if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw GroupError("bad element literal \"" + text + "\"");
        return parse_list(s.substr(1, s.size() - 2), "element literal");
    };
    return GroupElement(g, bracket(body.substr(0, semi)), bracket(body.substr(semi + 1)));
}

}  // namespace finegrad
