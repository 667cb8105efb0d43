#pragma once

#include "finegrad/gradinglab.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace finegrad {

struct BuiltAlgebra {
    AlgPtr algebra;
    std::vector<Grading> gradings;
    std::map<std::string, Mat> forms;  // Gram matrices of bilinear forms
    std::map<std::string, Mat> maps;   // linear endomorphisms (involutions, automorphisms)
    std::map<std::string, Vec> elements;

    const Grading& grading(const std::string& name) const;
};

// Associative algebra spanned by the given square matrices (closed under product).
SuperAlgebra matrix_algebra(const std::string& name, const std::vector<std::string>& labels,
                            const std::vector<Mat>& basis);

// 2x2 matrices of the quaternion units 1, q1, q2, q3
std::vector<Mat> quaternion_matrices();

BuiltAlgebra build_quaternions();
BuiltAlgebra build_cayley();
BuiltAlgebra build_An(int n);

struct KacPair {
    BuiltAlgebra k3;
    BuiltAlgebra k10;
};
KacPair build_kac();

// (Q0 (x) J) + der(J); Q0 basis q1,q2,q3.
struct TkkAlgebra {
    BuiltAlgebra built;
    AlgPtr jordan;
    DerivationAlgebra der;
    size_t der_offset = 0;  // first der(J) index; q_a (x) x_j sits at a * dim J + j
    // extend automorphisms of Q0 (3x3) and of J to the tkk algebra
    Mat extend(const Mat& on_q0, const Mat& on_j) const;
    // tkk element of a derivation of J (must lie in der(J))
    Vec der_element(const Mat& d) const;
};
TkkAlgebra build_tkk(const BuiltAlgebra& j, const std::string& name);

// symbolic alpha (Scalar::alpha()) or any constant other than 0, -1
struct D21Algebra {
    BuiltAlgebra built;
    Scalar alpha;
    // indices: h_l, e_l, f_l at 3(l-1) + {0,1,2}; odd u/v words at 9 + bits
    Mat iota(const Mat& f1, const Mat& f2, const Mat& f3) const;
    // (x1,x2,x3) -> (x3,x1,x2), odd u1u2u3 -> w u3u1u2 (alpha = w)
    Mat varpi() const;
    // (x1,x2,x3) -> (f x1 f^-1, h x3 h^-1, g x2 g^-1), odd -> f u1 (x) h u3 (x) g u2
    Mat hat_phi(const Mat& f, const Mat& g, const Mat& h) const;
    Mat pi23() const { return hat_phi(Mat::identity(2), Mat::identity(2), Mat::identity(2)); }
    // Cartan element h_l
    size_t h(int l) const { return static_cast<size_t>(3 * (l - 1)); }
};
D21Algebra build_D21(const Scalar& alpha);

// a_l, b_l of the quaternion subgroup of Sp(V)
Mat sp_a();
Mat sp_b();
Mat sp_d(const Scalar& mu);

struct G3Algebra {
    BuiltAlgebra built;
    BuiltAlgebra cayley;
    DerivationAlgebra der_c;
    Completion completion;
    // sl2 (h,e,f) at 0..2, der(C) at 3..16, V (x) C0 at 17..30 (u(x)e1..e7, v(x)e1..e7)
    Mat extend_cayley_auto(const Mat& sigma) const;  // 8x8 automorphism of C
    std::vector<Vec> cartan_torus() const;            // two torus elements of der(C), times i
};
G3Algebra build_G3();

enum class F4Model { Cayley, Tkk, Quaternion };
F4Model parse_f4_model(const std::string& s);
std::string model_name(F4Model m);

struct F4Algebra {
    F4Model model;
    BuiltAlgebra built;
    std::optional<Completion> completion;
    std::optional<TkkAlgebra> tkk;
    std::vector<size_t> a1;  // indices of the A1 ideal of the even part
    std::vector<size_t> b3;  // indices of the B3 ideal
    // cayley model: extend an automorphism of C to F(4)
    Mat extend_cayley_auto(const Mat& sigma) const;
    // quaternion model: degrees of the Z4 x Z2^3 grading
    std::vector<GroupElement> quaternion_degrees() const;
};
F4Algebra build_F4(F4Model model);

// Cayley grading automorphisms: e_i -> (-1)^{deg_k(e_i)} e_i
std::vector<Mat> cayley_grading_autos();
// Quaternion grading automorphisms on Q: conjugation by q1 and by q2
std::vector<Mat> quaternion_grading_autos();

// Z2^4 degrees of w1..w7 in Q(x)Q(x)Q
std::vector<std::array<long, 4>> quaternion_w_degrees();
// (a, b, c) with w_i = q_a (x) q_b (x) q_c
std::vector<std::array<size_t, 3>> quaternion_w_triples();

// ζ_n^k candidates for an order-n automorphism
std::vector<Scalar> root_candidates(long order);

}  // namespace finegrad
