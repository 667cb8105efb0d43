#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace finegrad {

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Z^r x Z_m1 x ... x Z_mk; torsion orders kept exactly as given.
struct GradingGroup {
    int free_rank = 0;
    std::vector<long> torsion;

    GradingGroup() = default;
    GradingGroup(int r, std::vector<long> t);

    size_t torsion_count() const { return torsion.size(); }
    std::string str() const;
    friend bool operator==(const GradingGroup& a, const GradingGroup& b) {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
    friend bool operator!=(const GradingGroup& a, const GradingGroup& b) { return !(a == b); }

    // direct product, factors of *this first
    GradingGroup product(const GradingGroup& o) const;
};

class GroupElement {
public:
    GroupElement() = default;
    GroupElement(GradingGroup g, std::vector<long> free_part, std::vector<long> torsion_part);
    static GroupElement zero(const GradingGroup& g);

    const GradingGroup& group() const { return g_; }
    const std::vector<long>& free_part() const { return f_; }
    const std::vector<long>& torsion_part() const { return t_; }

    GroupElement operator+(const GroupElement& o) const;
    GroupElement operator-() const;
    GroupElement operator-(const GroupElement& o) const { return *this + (-o); }
    GroupElement times(long n) const;
    bool is_zero() const;
    // least n >= 1 with n x = 0, nullopt for infinite order
    std::optional<long> order() const;

    // concatenation in the product group
    GroupElement product(const GroupElement& o) const;

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.g_ == b.g_ && a.f_ == b.f_ && a.t_ == b.t_;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
    friend bool operator<(const GroupElement& a, const GroupElement& b) {
        if (a.f_ != b.f_) return a.f_ < b.f_;
        return a.t_ < b.t_;
    }

    std::string str() const;

private:
    void check_same(const GroupElement& o) const;
    GradingGroup g_;
    std::vector<long> f_;
    std::vector<long> t_;
};

// Isomorphism type of a finitely generated abelian group:
// free rank plus invariant factors d1 | d2 | ... (all >= 2).
struct AbelianInvariants {
    int free_rank = 0;
    std::vector<long> factors;
    std::string str() const;
    friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
        return a.free_rank == b.free_rank && a.factors == b.factors;
    }
    friend bool operator!=(const AbelianInvariants& a, const AbelianInvariants& b) { return !(a == b); }
};

AbelianInvariants subgroup_invariants(const std::vector<GroupElement>& gens);
AbelianInvariants invariants_of(const GradingGroup& g);

// Smith normal form diagonal of an integer matrix (rows x cols); zeros included.
std::vector<long> smith_diagonal(std::vector<std::vector<long>> m);

GradingGroup parse_group(const std::string& text);
GroupElement parse_element(const GradingGroup& g, const std::string& text);

}  // namespace finegrad
