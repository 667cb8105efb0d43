#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace finegrad {

// Q8 element code: bits 0-1 select 1,i,j,k, bit 2 is the sign.
namespace q8 {
int mul(int a, int b);
int inv(int a);
int neg(int a);
std::string str(int a);
std::vector<std::array<int, 8>> automorphisms();  // all 24, as maps on codes
}  // namespace q8

// Triple of Q8 elements modulo K = {(e1,e2,e3) : e_l = +-1, e1 e2 e3 = 1}.
// Canonical representative keeps every sign in the first slot.
struct FinGroupElt {
    std::array<int, 3> q{0, 0, 0};
    static FinGroupElt make(int a, int b, int c);
    FinGroupElt operator*(const FinGroupElt& o) const;
    int index() const { return q[0] * 16 + q[1] * 4 + q[2]; }  // 0..127
    static FinGroupElt from_index(int i) { return {{i / 16, (i / 4) % 4, i % 4}}; }
    friend bool operator==(const FinGroupElt& a, const FinGroupElt& b) { return a.q == b.q; }
    std::string str() const;
};

constexpr size_t kMaxGroupOrder = 128;
using Subset = std::bitset<kMaxGroupOrder>;

// finite group on 0..n-1 given by its multiplication table
struct FiniteGroup {
    size_t n = 0;
    size_t identity = 0;
    std::vector<std::vector<size_t>> table;

    size_t mul(size_t a, size_t b) const { return table[a][b]; }
    Subset closure(const Subset& gens) const;
    Subset center() const;
    bool commute(size_t a, size_t b) const { return mul(a, b) == mul(b, a); }
    // invariant factors of an abelian 2-subgroup, ascending
    std::vector<long> abelian_invariants(const Subset& h) const;
    std::vector<Subset> maximal_abelian_subgroups() const;
};

FiniteGroup q8_cubed_mod_k();
// F^x replaced by its subgroup mu4 = <zeta>, which is central; the quotient by the center is unchanged
FiniteGroup mu4_q8_squared_mod_k();

struct OrbitResult {
    std::vector<size_t> orbit_of;  // per subgroup
    size_t count = 0;
    std::vector<size_t> sizes;
};
// orbits of subgroups under the group generated by the given element permutations
OrbitResult subgroup_orbits(const std::vector<Subset>& subgroups, const std::vector<std::vector<size_t>>& gens);

struct MaxAbelianReport {
    size_t group_order = 0;
    size_t subgroup_count = 0;
    std::vector<std::vector<long>> types;  // distinct invariant lists
    bool all_contain_center = false;
    size_t orbit_count = 0;
    std::vector<size_t> orbit_sizes;
    std::vector<std::string> representatives;
    bool representatives_maximal = false;
    bool representatives_cover_orbits = false;  // one per orbit
    bool lift_matches_subspaces = false;        // H / Z(G) runs over the maximal admissible subspaces
    bool ok_q83k() const;
    bool ok_fxq82k() const;
};

MaxAbelianReport maximal_abelian_Q83K();
MaxAbelianReport maximal_abelian_FxQ82K();

struct SubspaceCaseReport {
    int blocks = 0;
    size_t admissible = 0;          // subspaces with the even-surjectivity property
    size_t maximal = 0;
    size_t classified = 0;          // maximal ones for 3 blocks, all admissible ones for 2
    std::vector<size_t> family_counts;
    bool exhaustive = false;
    bool exclusive = false;
    bool families_admissible = false;  // every family member has the property
    bool family1_dim3 = false;         // 3 blocks only
    bool ok() const { return exhaustive && exclusive && families_admissible && (blocks != 3 || family1_dim3); }
};

// subspaces of (F2^2)^blocks, vectors as bitmasks with block i in bits 2i, 2i+1
SubspaceCaseReport f2_subspace_cases(int blocks);

// number of blocks whose projection of span{x, y} is onto F2^2
int surjective_blocks(uint32_t x, uint32_t y, int blocks);

}  // namespace finegrad
