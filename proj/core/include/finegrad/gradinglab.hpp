#pragma once

#include "finegrad/abgroup.hpp"
#include "finegrad/superalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace finegrad {

// Degree map on a designated homogeneous basis. `algebra` is expressed in that
// basis; `ambient` and `to_ambient` relate it to the coordinates the algebra was
// originally built in, so gradings obtained by a change of basis can be compared.
struct Grading {
    std::string name;
    AlgPtr algebra;
    GradingGroup group;
    std::vector<GroupElement> degrees;
    AlgPtr ambient;
    Mat to_ambient;  // columns: designated basis vectors in ambient coordinates

    // grading of `a` in its own basis
    static Grading on_basis(std::string name, AlgPtr a, GradingGroup g, std::vector<GroupElement> degrees);

    // components as lists of basis indices, ordered by degree
    std::vector<std::pair<GroupElement, std::vector<size_t>>> components() const;
    std::vector<GroupElement> support() const;
};

struct GradingReport {
    bool ok = true;
    std::string witness;
};
GradingReport verify_grading(const Grading& g);

using TypeVector = std::vector<size_t>;
TypeVector grading_type(const Grading& g);
std::string type_str(const TypeVector& t);

// true iff every component of `fine` lies inside a component of `coarse`
bool is_refinement(const Grading& fine, const Grading& coarse);

// forget the torsion part of every degree
Grading coarsen_to_free(const Grading& g);

struct TorusElement {
    Mat matrix;           // semisimple with integer eigenvalues
    long min_weight = -4;  // candidate eigenvalue range
    long max_weight = 4;
};

struct FiniteAuto {
    std::string name;
    Mat matrix;
    long order;  // must divide 12
};

struct DiagGenerators {
    std::vector<std::vector<long>> torus_weights;  // integer weight per basis vector
    std::vector<TorusElement> torus;             // semisimple derivations
    std::vector<FiniteAuto> finite_autos;
};

struct DiagError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grading by common eigenspaces. Group: Z^(weights + torus) x prod Z_order.
Grading grading_from_diag(const std::string& name, const AlgPtr& a, const DiagGenerators& d);

struct CatalogEntry {
    std::string name;
    Grading grading;
    TypeVector expected_type;
    AbelianInvariants expected_group;
};

struct CatalogResult {
    std::string name;
    bool verified = false;
    std::string witness;
    TypeVector type;
    TypeVector expected_type;
    AbelianInvariants group;
    AbelianInvariants expected_group;
    bool pass() const { return verified && type == expected_type && group == expected_group; }
};

CatalogResult check_entry(const CatalogEntry& e);

enum class CatalogTarget { F4, G3, D21 };
// alpha: symbolic Scalar::alpha() or a constant; special values add entries.
std::vector<CatalogEntry> catalog(CatalogTarget target, const Scalar& alpha = Scalar::alpha());

struct LemmaReport {
    bool ok = true;
    size_t rank = 0;
    bool lands_in_so = true;
    bool bijective = false;
    bool bracket_preserved = false;
    std::string witness;
};
// Isomorphism from the non-a1 ideal of tkk(K10)_0 onto so(U,Q), U = Q0 + V(x)V.
LemmaReport verify_tkk_iso_lemma();

}  // namespace finegrad
