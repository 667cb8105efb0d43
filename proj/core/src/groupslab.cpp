#include "finegrad/groupslab.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace finegrad {

namespace q8 {

int mul(int a, int b) {
    int ua = a & 3, ub = b & 3;
    int sign = (a >> 2) ^ (b >> 2);
    int u;
    if (ua == 0) {
        u = ub;
    } else if (ub == 0) {
        u = ua;
    } else if (ua == ub) {
        u = 0;
        sign ^= 1;
    } else {
        u = 6 - ua - ub;
        if ((ub - ua + 3) % 3 != 1) sign ^= 1;  // i j = k, j k = i, k i = j
    }
    return u | (sign << 2);
}

int neg(int a) { return a ^ 4; }

int inv(int a) { return (a & 3) == 0 ? a : neg(a); }

std::string str(int a) {
    static const char* names[] = {"1", "i", "j", "k"};
    return std::string((a & 4) ? "-" : "") + names[a & 3];
}

std::vector<std::array<int, 8>> automorphisms() {
    std::vector<std::array<int, 8>> out;
    for (int fi = 0; fi < 8; ++fi) {
        for (int fj = 0; fj < 8; ++fj) {
            if ((fi & 3) == 0 || (fj & 3) == 0 || (fi & 3) == (fj & 3)) continue;
            std::array<int, 8> f{};
            f[0] = 0;
            f[4] = 4;
            f[1] = fi;
            f[2] = fj;
            f[3] = mul(fi, fj);
            for (int u = 1; u < 4; ++u) f[u | 4] = neg(f[u]);
            bool hom = true;
            for (int a = 0; a < 8 && hom; ++a)
                for (int b = 0; b < 8 && hom; ++b) hom = f[mul(a, b)] == mul(f[a], f[b]);
            if (hom) out.push_back(f);
        }
    }
    return out;
}

}  // namespace q8

FinGroupElt FinGroupElt::make(int a, int b, int c) {
    int s = (a >> 2) ^ (b >> 2) ^ (c >> 2);
    return {{(a & 3) | (s << 2), b & 3, c & 3}};
}

FinGroupElt FinGroupElt::operator*(const FinGroupElt& o) const {
    return make(q8::mul(q[0], o.q[0]), q8::mul(q[1], o.q[1]), q8::mul(q[2], o.q[2]));
}

std::string FinGroupElt::str() const {
    return "(" + q8::str(q[0]) + "," + q8::str(q[1]) + "," + q8::str(q[2]) + ")K";
}

namespace {

using Key = std::pair<uint64_t, uint64_t>;

Key key_of(const Subset& s) {
    uint64_t lo = 0, hi = 0;
    for (size_t i = 0; i < 64; ++i) {
        if (s[i]) lo |= uint64_t{1} << i;
        if (s[i + 64]) hi |= uint64_t{1} << i;
    }
    return {lo, hi};
}

Subset single(size_t i) {
    Subset s;
    s.set(i);
    return s;
}

}  // namespace

Subset FiniteGroup::closure(const Subset& gens) const {
    Subset s = gens;
    s.set(identity);
    std::vector<size_t> elems;
    for (size_t i = 0; i < n; ++i)
        if (s[i]) elems.push_back(i);
    // finite group: closing under products is enough
    for (size_t a = 0; a < elems.size(); ++a) {
        for (size_t b = 0; b <= a; ++b) {
            for (size_t p : {mul(elems[a], elems[b]), mul(elems[b], elems[a])}) {
                if (!s[p]) {
                    s.set(p);
                    elems.push_back(p);
                }
            }
        }
    }
    return s;
}

Subset FiniteGroup::center() const {
    Subset z;
    for (size_t a = 0; a < n; ++a) {
        bool c = true;
        for (size_t b = 0; b < n && c; ++b) c = commute(a, b);
        if (c) z.set(a);
    }
    return z;
}

std::vector<long> FiniteGroup::abelian_invariants(const Subset& h) const {
    // n_k = #{x : x^(2^k) = 1}; factors of order >= 2^k number log2(n_k / n_{k-1})
    std::vector<size_t> counts{1};
    std::vector<size_t> pw;
    for (size_t i = 0; i < n; ++i)
        if (h[i]) pw.push_back(i);
    const size_t order = pw.size();
    while (counts.back() < order) {
        // after k squarings, pw holds x^(2^k)
        size_t k1 = 0;
        for (auto& x : pw) {
            x = mul(x, x);
            if (x == identity) ++k1;
        }
        if (k1 == counts.back()) throw std::invalid_argument("abelian_invariants: not a 2-group");
        counts.push_back(k1);
    }
    std::vector<size_t> atleast;  // atleast[k-1] = number of factors of order >= 2^k
    for (size_t k = 1; k < counts.size(); ++k) {
        size_t ratio = counts[k] / counts[k - 1];
        size_t d = 0;
        while ((size_t{1} << d) < ratio) ++d;
        atleast.push_back(d);
    }
    std::vector<long> out;
    for (size_t k = 0; k < atleast.size(); ++k) {
        size_t next = k + 1 < atleast.size() ? atleast[k + 1] : 0;
        for (size_t r = next; r < atleast[k]; ++r) out.push_back(long{1} << (k + 1));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subset> FiniteGroup::maximal_abelian_subgroups() const {
    // every maximal abelian subgroup contains the center
    std::set<Key> seen;
    std::vector<Subset> out;
    std::deque<Subset> queue;
    Subset start = center();
    seen.insert(key_of(start));
    queue.push_back(start);
    while (!queue.empty()) {
        Subset h = queue.front();
        queue.pop_front();
        bool extended = false;
        for (size_t g = 0; g < n; ++g) {
            if (h[g]) continue;
            bool c = true;
            for (size_t x = 0; x < n && c; ++x)
                if (h[x]) c = commute(g, x);
            if (!c) continue;
            extended = true;
            Subset bigger = closure(h | single(g));
            if (seen.insert(key_of(bigger)).second) queue.push_back(bigger);
        }
        if (!extended) out.push_back(h);
    }
    std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) { return key_of(a) < key_of(b); });
    return out;
}

FiniteGroup q8_cubed_mod_k() {
    FiniteGroup g;
    g.n = 128;
    g.identity = 0;
    g.table.assign(128, std::vector<size_t>(128));
    for (int a = 0; a < 128; ++a)
        for (int b = 0; b < 128; ++b)
            g.table[a][b] = (FinGroupElt::from_index(a) * FinGroupElt::from_index(b)).index();
    return g;
}

namespace {

// (lambda, u2, u3) with lambda the exponent of a primitive 4th root of unity; -1 = zeta^2
struct Mu4Elt {
    int lam, a, b;
    static Mu4Elt make(int lam, int qa, int qb) {
        int s = (qa >> 2) + (qb >> 2);
        return {(lam + 2 * s) % 4, qa & 3, qb & 3};
    }
    int index() const { return lam * 16 + a * 4 + b; }
    static Mu4Elt from_index(int i) { return {i / 16, (i / 4) % 4, i % 4}; }
};

}  // namespace

FiniteGroup mu4_q8_squared_mod_k() {
    FiniteGroup g;
    g.n = 64;
    g.identity = 0;
    g.table.assign(64, std::vector<size_t>(64));
    for (int x = 0; x < 64; ++x) {
        for (int y = 0; y < 64; ++y) {
            auto p = Mu4Elt::from_index(x), q = Mu4Elt::from_index(y);
            g.table[x][y] = Mu4Elt::make(p.lam + q.lam, q8::mul(p.a, q.a), q8::mul(p.b, q.b)).index();
        }
    }
    return g;
}

OrbitResult subgroup_orbits(const std::vector<Subset>& subgroups, const std::vector<std::vector<size_t>>& gens) {
    std::map<Key, size_t> index;
    for (size_t i = 0; i < subgroups.size(); ++i) index[key_of(subgroups[i])] = i;
    std::vector<size_t> parent(subgroups.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < subgroups.size(); ++i) {
        for (const auto& perm : gens) {
            Subset img;
            for (size_t e = 0; e < perm.size(); ++e)
                if (subgroups[i][e]) img.set(perm[e]);
            auto it = index.find(key_of(img));
            if (it == index.end()) throw std::logic_error("subgroup_orbits: image is not in the list");
            parent[find(i)] = find(it->second);
        }
    }
    OrbitResult r;
    std::map<size_t, size_t> label;
    r.orbit_of.resize(subgroups.size());
    for (size_t i = 0; i < subgroups.size(); ++i) {
        auto [it, fresh] = label.emplace(find(i), label.size());
        if (fresh) r.sizes.push_back(0);
        r.orbit_of[i] = it->second;
        ++r.sizes[it->second];
    }
    r.count = label.size();
    return r;
}

namespace {

// ---- F2 blocks ----

int det2(uint32_t x, uint32_t y) { return ((x & 1) & ((y >> 1) & 1)) ^ (((x >> 1) & 1) & (y & 1)); }

uint32_t put(int block, uint32_t a) { return a << (2 * block); }

// subspace as membership mask over 2^(2 blocks) <= 64 vectors
uint64_t span_mask(const std::vector<uint32_t>& gens) {
    uint64_t s = 1;
    for (auto v : gens) {
        uint64_t t = s;
        for (uint32_t x = 0; x < 64; ++x)
            if (s >> x & 1) t |= uint64_t{1} << (x ^ v);
        s = t;
    }
    return s;
}

std::vector<uint32_t> members(uint64_t s) {
    std::vector<uint32_t> out;
    for (uint32_t x = 0; x < 64; ++x)
        if (s >> x & 1) out.push_back(x);
    return out;
}

bool admissible(uint64_t s, int blocks) {
    auto v = members(s);
    for (auto x : v)
        for (auto y : v)
            if (surjective_blocks(x, y, blocks) % 2) return false;
    return true;
}

// GL2(F2) as pairs (f e1, f e2)
std::vector<std::array<uint32_t, 4>> isos() {
    std::vector<std::array<uint32_t, 4>> out;
    for (uint32_t a = 1; a < 4; ++a)
        for (uint32_t b = 1; b < 4; ++b)
            if (a != b) out.push_back({0, a, b, a ^ b});
    return out;
}

struct Lattice {
    std::vector<uint64_t> admissible_spaces;
    std::vector<uint64_t> maximal;
};

Lattice admissible_lattice(int blocks) {
    const uint32_t nvec = 1u << (2 * blocks);
    std::set<uint64_t> seen{1};
    std::deque<uint64_t> queue{1};
    Lattice lat;
    while (!queue.empty()) {
        uint64_t s = queue.front();
        queue.pop_front();
        lat.admissible_spaces.push_back(s);
        bool extended = false;
        auto mem = members(s);
        for (uint32_t v = 1; v < nvec; ++v) {
            if (s >> v & 1) continue;
            bool ok = true;
            for (auto x : mem)
                if (surjective_blocks(x, v, blocks) % 2) ok = false;
            if (!ok) continue;
            extended = true;
            mem.push_back(v);
            uint64_t t = span_mask(mem);
            mem.pop_back();
            if (seen.insert(t).second) queue.push_back(t);
        }
        if (!extended) lat.maximal.push_back(s);
    }
    std::sort(lat.admissible_spaces.begin(), lat.admissible_spaces.end());
    std::sort(lat.maximal.begin(), lat.maximal.end());
    return lat;
}

std::vector<std::set<uint64_t>> families3() {
    std::vector<std::set<uint64_t>> fam(3);
    for (uint32_t a0 = 1; a0 < 4; ++a0)
        for (uint32_t a1 = 1; a1 < 4; ++a1)
            for (uint32_t a2 = 1; a2 < 4; ++a2) fam[0].insert(span_mask({put(0, a0), put(1, a1), put(2, a2)}));
    const auto fs = isos();
    for (int k = 0; k < 3; ++k) {
        int i = (k + 1) % 3, j = (k + 2) % 3;
        for (const auto& f : fs)
            for (uint32_t a = 1; a < 4; ++a)
                fam[1].insert(span_mask({put(i, 1) | put(j, f[1]), put(i, 2) | put(j, f[2]), put(k, a)}));
    }
    for (int p = 0; p < 3; ++p) {
        int q = (p + 1) % 3, r = (p + 2) % 3;
        for (const auto& basis : fs) {
            uint32_t a = basis[1], b = basis[2];
            for (const auto& f : fs)
                for (const auto& g : fs)
                    fam[2].insert(span_mask({put(p, a) | put(q, f[a]) | put(r, g[a]), put(p, b) | put(q, f[b]),
                                             put(p, b) | put(r, g[b])}));
        }
    }
    return fam;
}

std::vector<std::set<uint64_t>> families2() {
    std::vector<std::set<uint64_t>> fam(2);
    for (uint32_t a1 = 1; a1 < 4; ++a1) {
        for (uint32_t a2 = 1; a2 < 4; ++a2) {
            uint32_t x = put(0, a1), y = put(1, a2);
            for (auto gens : std::vector<std::vector<uint32_t>>{{}, {x}, {y}, {x ^ y}, {x, y}})
                fam[0].insert(span_mask(gens));
        }
    }
    for (const auto& f : isos()) fam[1].insert(span_mask({put(0, 1) | put(1, f[1]), put(0, 2) | put(1, f[2])}));
    return fam;
}

// image of H in G/Z as a subspace of (F2^2)^blocks; unit code u in Q8/{+-1} is already the F2^2 vector
uint64_t quotient_q83k(const Subset& h) {
    std::vector<uint32_t> gens;
    for (int i = 0; i < 128; ++i) {
        if (!h[i]) continue;
        auto e = FinGroupElt::from_index(i);
        gens.push_back(uint32_t(e.q[0] & 3) | uint32_t(e.q[1]) << 2 | uint32_t(e.q[2]) << 4);
    }
    return span_mask(gens);
}

uint64_t quotient_mu4(const Subset& h) {
    std::vector<uint32_t> gens;
    for (int i = 0; i < 64; ++i) {
        if (!h[i]) continue;
        auto e = Mu4Elt::from_index(i);
        gens.push_back(uint32_t(e.a) | uint32_t(e.b) << 2);
    }
    return span_mask(gens);
}

void fill_common(MaxAbelianReport& r, const FiniteGroup& g, const std::vector<Subset>& subs,
                 const std::vector<std::vector<size_t>>& gens, const std::vector<Subset>& reps) {
    r.group_order = g.n;
    r.subgroup_count = subs.size();
    const Subset z = g.center();
    r.all_contain_center = true;
    std::set<std::vector<long>> types;
    for (const auto& h : subs) {
        if ((h & z) != z) r.all_contain_center = false;
        types.insert(g.abelian_invariants(h));
    }
    r.types.assign(types.begin(), types.end());
    auto orb = subgroup_orbits(subs, gens);
    r.orbit_count = orb.count;
    r.orbit_sizes = orb.sizes;
    r.representatives_maximal = true;
    std::set<size_t> hit;
    for (const auto& rep : reps) {
        auto it = std::find(subs.begin(), subs.end(), rep);
        if (it == subs.end()) {
            r.representatives_maximal = false;
            continue;
        }
        hit.insert(orb.orbit_of[size_t(it - subs.begin())]);
    }
    r.representatives_cover_orbits = r.representatives_maximal && hit.size() == reps.size() && hit.size() == orb.count;
}

}  // namespace

int surjective_blocks(uint32_t x, uint32_t y, int blocks) {
    int c = 0;
    for (int i = 0; i < blocks; ++i) c += det2((x >> (2 * i)) & 3, (y >> (2 * i)) & 3);
    return c;
}

bool MaxAbelianReport::ok_q83k() const {
    return subgroup_count == 135 && types == std::vector<std::vector<long>>{{2, 2, 4}} && all_contain_center &&
           orbit_count == 3 && representatives_maximal && representatives_cover_orbits && lift_matches_subspaces;
}

bool MaxAbelianReport::ok_fxq82k() const {
    return subgroup_count == 15 && all_contain_center && orbit_count == 2 && representatives_maximal &&
           representatives_cover_orbits && lift_matches_subspaces;
}

MaxAbelianReport maximal_abelian_Q83K() {
    const FiniteGroup g = q8_cubed_mod_k();
    const auto subs = g.maximal_abelian_subgroups();

    std::vector<std::vector<size_t>> gens;
    for (const auto& f : q8::automorphisms()) {
        for (int slot = 0; slot < 3; ++slot) {
            std::vector<size_t> perm(128);
            for (int i = 0; i < 128; ++i) {
                auto e = FinGroupElt::from_index(i);
                std::array<int, 3> q = e.q;
                q[slot] = f[q[slot]];
                perm[i] = FinGroupElt::make(q[0], q[1], q[2]).index();
            }
            gens.push_back(perm);
        }
    }
    for (auto swap : std::vector<std::array<int, 3>>{{1, 0, 2}, {0, 2, 1}}) {
        std::vector<size_t> perm(128);
        for (int i = 0; i < 128; ++i) {
            auto e = FinGroupElt::from_index(i);
            perm[i] = FinGroupElt::make(e.q[swap[0]], e.q[swap[1]], e.q[swap[2]]).index();
        }
        gens.push_back(perm);
    }

    auto el = [](int a, int b, int c) { return size_t(FinGroupElt::make(a, b, c).index()); };
    const int I = 1, J = 2;
    Subset r1 = single(el(I, 0, 0)) | single(el(0, I, 0)) | single(el(0, 0, I));
    Subset r2 = single(el(I, I, 0)) | single(el(J, J, 0)) | single(el(0, 0, I));
    Subset r3 = single(el(I, I, I)) | single(el(J, J, I)) | single(el(I, J, J));
    std::vector<Subset> reps{g.closure(r1), g.closure(r2), g.closure(r3)};

    MaxAbelianReport r;
    fill_common(r, g, subs, gens, reps);
    r.representatives = {"<i>^3/K", "{(x,x,y) : x in Q8, y in <i>}K/K", "<(i,i,i),(j,j,i),(i,j,j)>K/K"};

    std::set<uint64_t> images;
    for (const auto& h : subs) images.insert(quotient_q83k(h));
    auto lat = admissible_lattice(3);
    r.lift_matches_subspaces = images.size() == subs.size() &&
                               std::equal(images.begin(), images.end(), lat.maximal.begin(), lat.maximal.end());
    return r;
}

MaxAbelianReport maximal_abelian_FxQ82K() {
    const FiniteGroup g = mu4_q8_squared_mod_k();
    const auto subs = g.maximal_abelian_subgroups();

    std::vector<std::vector<size_t>> gens;
    for (const auto& f : q8::automorphisms()) {
        for (int slot = 0; slot < 2; ++slot) {
            std::vector<size_t> perm(64);
            for (int i = 0; i < 64; ++i) {
                auto e = Mu4Elt::from_index(i);
                int a = e.a, b = e.b;
                (slot == 0 ? a : b) = f[slot == 0 ? a : b];
                perm[i] = Mu4Elt::make(e.lam, a, b).index();
            }
            gens.push_back(perm);
        }
    }
    {
        std::vector<size_t> perm(64);
        for (int i = 0; i < 64; ++i) {
            auto e = Mu4Elt::from_index(i);
            perm[i] = Mu4Elt::make(e.lam, e.b, e.a).index();
        }
        gens.push_back(perm);
    }

    auto el = [](int lam, int a, int b) { return size_t(Mu4Elt::make(lam, a, b).index()); };
    Subset r1 = single(el(1, 0, 0)) | single(el(0, 1, 0)) | single(el(0, 0, 1));
    Subset r2 = single(el(1, 0, 0)) | single(el(0, 1, 1)) | single(el(0, 2, 2));
    std::vector<Subset> reps{g.closure(r1), g.closure(r2)};

    MaxAbelianReport r;
    fill_common(r, g, subs, gens, reps);
    r.representatives = {"(F^x x <i> x <i>)/K", "(F^x x {(x,x) : x in Q8})K/K"};

    std::set<uint64_t> images;
    for (const auto& h : subs) images.insert(quotient_mu4(h));
    auto lat = admissible_lattice(2);
    r.lift_matches_subspaces = images.size() == subs.size() &&
                               std::equal(images.begin(), images.end(), lat.maximal.begin(), lat.maximal.end());
    return r;
}

SubspaceCaseReport f2_subspace_cases(int blocks) {
    if (blocks != 2 && blocks != 3) throw std::invalid_argument("f2_subspace_cases: blocks must be 2 or 3");
    SubspaceCaseReport r;
    r.blocks = blocks;
    const auto lat = admissible_lattice(blocks);
    r.admissible = lat.admissible_spaces.size();
    r.maximal = lat.maximal.size();
    const auto fam = blocks == 3 ? families3() : families2();
    const auto& targets = blocks == 3 ? lat.maximal : lat.admissible_spaces;
    r.classified = targets.size();
    r.family_counts.assign(fam.size(), 0);
    r.exhaustive = true;
    r.exclusive = true;
    for (auto s : targets) {
        size_t hits = 0;
        for (size_t f = 0; f < fam.size(); ++f) {
            if (fam[f].count(s)) {
                ++hits;
                ++r.family_counts[f];
            }
        }
        if (hits == 0) r.exhaustive = false;
        if (hits > 1) r.exclusive = false;
    }
    const std::set<uint64_t> target_set(targets.begin(), targets.end());
    r.families_admissible = true;
    for (const auto& f : fam)
        for (auto s : f)
            if (!admissible(s, blocks) || !target_set.count(s)) r.families_admissible = false;
    if (blocks == 3) {
        r.family1_dim3 = true;
        for (auto s : fam[0])
            if (__builtin_popcountll(s) != 8) r.family1_dim3 = false;
    }
    return r;
}

}  // namespace finegrad
