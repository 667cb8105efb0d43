#pragma once

#include "finegrad/constructions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace finegrad {

struct CliffordError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unnormalized input: homogeneous basis with degrees and polar form B(x,y) = q(x+y) - q(x) - q(y).
// Clifford relation: xy + yx = B(x,y), so x^2 = B(x,x)/2.
struct RawQuadraticSpace {
    GradingGroup group;
    std::vector<std::string> names;
    std::vector<GroupElement> degrees;
    Mat polar;
};

// Config text:
//   group Z_2^3
//   vector e1 ([];[1,0,0]) q -1      (q defaults to 0)
//   polar u v 1                      (off-diagonal polar value)
RawQuadraticSpace parse_quadratic_config(const std::string& text);
RawQuadraticSpace load_quadratic_config(const std::string& path);

// Basis u1,v1,...,um,vm,w1,...,w_{2l+1}; B(u_i,v_i) = 1, w_j^2 = 1, all other pairs orthogonal.
struct GradedQuadraticSpace {
    GradingGroup group;
    std::vector<GroupElement> g;  // deg u_i = g_i, deg v_i = -g_i
    std::vector<GroupElement> h;  // deg w_j, 2 h_j = 0
    GroupElement shift;           // added to every input degree
    std::vector<Vec> coords;      // normalized basis in input coordinates (empty when built directly)

    size_t m() const { return g.size(); }
    size_t l() const { return (h.size() - 1) / 2; }
    size_t dim() const { return 2 * g.size() + h.size(); }
    std::vector<std::string> names() const;
    std::vector<GroupElement> degrees() const;
    Mat polar() const;

    // checks: odd dimension, 2h_j = 0, h_j distinct, sum h_j = 0
    static GradedQuadraticSpace make(GradingGroup group, std::vector<GroupElement> g, std::vector<GroupElement> h);
};

GradedQuadraticSpace normalize_quadratic_basis(const RawQuadraticSpace& raw);

// square root inside Q(zeta12) for constants r^2 * zeta^k and r^2 * 3 * zeta^k
std::optional<Scalar> scalar_sqrt(const Scalar& c);

struct EvenClifford {
    GradedQuadraticSpace space;
    BuiltAlgebra even;               // grading "induced", maps["bar"]
    AlgPtr full;                     // Cl(U,q) on square-free monomials
    std::vector<unsigned> masks;     // full basis index -> generator subset
    std::vector<long> even_index;    // full basis index -> even index, -1 if odd
    Vec z;                           // [u1,v1]...[um,vm] w1...w_{2l+1}, in full coordinates

    bool bar_antiautomorphism = false;
    bool bar_involutive = false;
    bool so_image_closed = false;
    bool bracket_identity = false;  // [[x,y],t] = 2(B(y,t)x - B(x,t)y) on generators
    std::string witness;

    Vec generator(size_t k) const;  // full coordinates
    Vec mul(const Vec& a, const Vec& b) const { return full->multiply(a, b); }
    Vec to_even(const Vec& full_vec) const;  // throws if an odd monomial occurs
    Vec to_full(const Vec& even_vec) const;
    size_t monomial(unsigned mask) const;  // full index
};

EvenClifford build_even_clifford(const GradedQuadraticSpace& u);

enum class DivisionClass { F, Q, QQ, QQQ };
std::string to_string(DivisionClass c);

struct DivisionResult {
    DivisionClass cls = DivisionClass::F;
    std::string ideal_generator;  // basis element (or pair) whose left ideal seeded the search
    size_t ideal_dim = 0;         // dim R e for the final primitive idempotent e
    Vec idempotent;               // degree 0, primitive
    size_t support_size = 0;      // |Supp eRe|
    size_t max_component_dim = 0;  // of eRe, 1 for a graded division algebra
};

// R graded simple associative, grading on its basis
DivisionResult division_class(const Grading& r);

struct Dim7Case {
    DivisionClass cls = DivisionClass::F;
    size_t m = 0;
    size_t rank = 0;               // F2-rank of the span of the h_j
    std::string pattern;           // human readable relation list
    std::vector<size_t> permutation;  // w order used to match the pattern (0-based)
};

Dim7Case dim7_case_classify(const GradedQuadraticSpace& u);

struct UuvStep {
    size_t subalgebra_dim = 0;
    bool matrix_iso = false;
    bool commutes = false;
    size_t complement_dim = 0;
    size_t total_dim = 0;
    bool idempotent_ok = false;
    bool ok() const { return subalgebra_dim == 4 && matrix_iso && commutes && idempotent_ok && 4 * complement_dim == total_dim; }
};

struct UuvReport {
    std::vector<UuvStep> steps;  // one per hyperbolic pair, peeled off in order
    size_t residual_dim = 0;
    std::string witness;
    bool ok() const;
};

// factors Cl0(U) = <z u1, z v1> (x) Cl0(U') repeatedly until no pair is left
UuvReport check_uuv_factorization(const GradedQuadraticSpace& u);

struct CayleyCliffordReport {
    bool squares_ok = false;      // l_x^2 = -N(x) id
    size_t span_dim = 0;          // span of even products of the l_x
    bool adjoint_ok = false;      // N(xy,z) = -N(y,xz)
    std::string witness;
    bool ok() const { return squares_ok && span_dim == 64 && adjoint_ok; }
};
CayleyCliffordReport verify_cayley_clifford();

struct QuaternionCubeReport {
    bool phi_hom = false;
    size_t phi_rank = 0;            // 64 when onto End_Q
    bool commutes_with_right_q = false;
    bool w_anticommute = false;
    std::vector<int> w_squares;     // +1 or -1
    bool degrees_ok = false;
    bool skew_hermitian = false;
    bool right_linear = false;
    bool intertwines_bar = false;
    Vec sample_h;                   // h(q1(x)1, q1(x)q2) in the basis 1,q1,q2,q3
    std::string witness;
    bool ok() const {
        return phi_hom && phi_rank == 64 && commutes_with_right_q && w_anticommute && degrees_ok && skew_hermitian &&
               right_linear && intertwines_bar;
    }
};
QuaternionCubeReport verify_quaternion_cube();

}  // namespace finegrad
