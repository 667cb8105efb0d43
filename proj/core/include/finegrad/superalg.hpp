#pragma once

#include "finegrad/exactla.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace finegrad {

struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Term {
    size_t k;
    Scalar c;
};
using SparseVec = std::vector<Term>;  // sorted by index, no zero coefficients

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, size_t n);

class SuperAlgebra {
public:
    SuperAlgebra() = default;
    SuperAlgebra(std::string name, std::vector<std::string> labels, std::vector<int> parity);

    // product of basis elements given by a callback returning dense coordinates
    static SuperAlgebra from_products(std::string name, std::vector<std::string> labels, std::vector<int> parity,
                                      const std::function<Vec(size_t, size_t)>& product);

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(size_t i) const { return labels_[i]; }
    int parity(size_t i) const { return parity_[i]; }
    const std::vector<int>& parities() const { return parity_; }
    size_t even_dim() const;
    size_t odd_dim() const { return dim() - even_dim(); }
    std::optional<size_t> index_of(const std::string& label) const;
    size_t idx(const std::string& label) const;  // throws if missing

    bool lie_expected = false;
    bool associative_expected = false;

    void set_product(size_t i, size_t j, const Vec& v);
    void set_product(size_t i, size_t j, SparseVec v);
    const SparseVec& product(size_t i, size_t j) const { return mult_[i * dim() + j]; }
    Scalar coeff(size_t i, size_t j, size_t k) const;

    Vec multiply(const Vec& x, const Vec& y) const;
    SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
    Vec basis_product(size_t i, size_t j) const { return to_dense(product(i, j), dim()); }

    // c_ij^k != 0 only if parity(k) = parity(i) + parity(j); throws StructureError otherwise
    void check_parity_additivity() const;

    // left multiplication operator L_x as a matrix
    Mat left_mult(const Vec& x) const;
    Mat ad(size_t i) const;  // left multiplication by basis element i

    // New algebra whose basis vectors are the given columns (old coordinates); each
    // column must be parity-homogeneous.
    SuperAlgebra change_basis(const std::vector<Vec>& new_basis, std::vector<std::string> new_labels) const;

    friend bool operator==(const SuperAlgebra& a, const SuperAlgebra& b);

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<int> parity_;
    std::vector<SparseVec> mult_;
};

using AlgPtr = std::shared_ptr<const SuperAlgebra>;

struct LinMap {
    AlgPtr source;
    AlgPtr target;
    Mat matrix;  // target.dim x source.dim
    int parity = 0;
};

// Homomorphism check on all basis pairs: f(e_i e_j) = f(e_i) f(e_j).
struct HomReport {
    bool ok = true;
    std::string witness;
};
HomReport check_homomorphism(const LinMap& f);
bool is_bijective(const LinMap& f);

struct LieReport {
    bool anticommutativity_ok = true;
    bool jacobi_ok = true;
    std::string witness;  // first failing pair or triple
    bool ok() const { return anticommutativity_ok && jacobi_ok; }
};
LieReport check_lie_super(const SuperAlgebra& a);

struct AssocReport {
    bool ok = true;
    std::string witness;
};
AssocReport check_associative(const SuperAlgebra& a);

// Representation of an even Lie algebra g0 on a space M with parities.
struct ModuleAction {
    AlgPtr algebra;
    size_t dim = 0;
    std::vector<int> parity;
    std::vector<Mat> rho;  // rho[a] acts on M, one per basis element of algebra
    std::vector<std::string> labels;

    // rho([x_a, x_b]) = rho_a rho_b - (-1)^{|a||b|} rho_b rho_a on all basis pairs
    bool is_representation(std::string* witness = nullptr) const;
    Mat act(const Vec& x) const;
};

ModuleAction adjoint_action(const AlgPtr& g0);
// restriction of the adjoint action to an ideal spanned by the given basis indices
ModuleAction ideal_action(const AlgPtr& g0, const std::vector<size_t>& ideal);

struct DerivationAlgebra {
    SuperAlgebra algebra;
    std::vector<Mat> maps;  // matrices of the basis derivations
    size_t even_count = 0;
};
DerivationAlgebra derivations(const SuperAlgebra& a);

// Bilinear map M x M -> T stored densely as B[(i*dimM + j)*dimT + k].
struct Pairing {
    size_t dim_m = 0, dim_t = 0;
    std::vector<Scalar> data;
    Scalar& at(size_t i, size_t j, size_t k) { return data[(i * dim_m + j) * dim_t + k]; }
    const Scalar& at(size_t i, size_t j, size_t k) const { return data[(i * dim_m + j) * dim_t + k]; }
    Vec value(size_t i, size_t j) const;
};

// Basis of g0-invariant maps B with B(m,n) = -(-1)^{|m||n|} B(n,m) (symmetric on odd M).
std::vector<Pairing> invariant_pairings(const ModuleAction& m, const ModuleAction& target);

// g0 + M with [x,m] = x.m and [m,n] = B(m,n)
SuperAlgebra assemble_superalgebra(const std::string& name, const ModuleAction& act, const Pairing& bracket);

// Linear condition on the completed bracket:
// coefficient of g0 basis k1 in [m_i1, m_j1] equals ratio times coefficient of k2 in [m_i2, m_j2].
struct BracketConstraint {
    size_t i1, j1, k1;
    size_t i2, j2, k2;
    Scalar ratio;
};

struct Completion {
    SuperAlgebra algebra;
    std::vector<Pairing> pairings;
    Vec coefficients;
    size_t solution_dim = 0;  // dimension of the linear solution space before normalization
};

Completion complete_superalgebra(const std::string& name, const ModuleAction& act,
                                 const std::vector<BracketConstraint>& constraints = {});

// Multiply every odd-odd product by s (second calibration point).
SuperAlgebra rescale_odd_bracket(const SuperAlgebra& a, const Scalar& s);

// Subalgebra generated by the given vectors (span closure under the product).
std::vector<Vec> generated_subalgebra(const SuperAlgebra& a, const std::vector<Vec>& gens);

// Plain-text serialization; load(store(a)) == a.
std::string store_superalgebra(const SuperAlgebra& a);
SuperAlgebra load_superalgebra(const std::string& text);

}  // namespace finegrad
