// Prints PASS/FAIL for each acceptance criterion; exit status 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "finegrad/cliffordlab.hpp"
#include "finegrad/constructions.hpp"
#include "finegrad/gradinglab.hpp"
#include "finegrad/groupslab.hpp"
#include "finegrad/superalg.hpp"

using namespace finegrad;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;  // printed under the criterion on failure
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

using Expected = std::multiset<std::pair<TypeVector, std::string>>;

void check_catalog(Outcome& o, CatalogTarget t, const Scalar& alpha, const Expected& want, const std::string& label) {
    Expected got;
    for (const auto& e : catalog(t, alpha)) {
        auto r = check_entry(e);
        o.require(r.pass(), label + ": " + e.name + " does not verify (" + r.witness + ")");
        got.insert({r.type, r.group.str()});
    }
    if (got != want) {
        std::ostringstream os;
        os << label << ": got";
        for (const auto& [ty, g] : got) os << " " << type_str(ty) << "/" << g;
        o.require(false, os.str());
    }
}

Outcome criterion1() {
    Outcome o;
    check_catalog(o, CatalogTarget::F4, Scalar::alpha(),
                  {{{36, 0, 0, 1}, "Z^4"},
                   {{19, 0, 7}, "Z x Z_2 x Z_2 x Z_2"},
                   {{32, 4}, "Z^2 x Z_2 x Z_2"},
                   {{31, 0, 3}, "Z x Z_2 x Z_2 x Z_2"},
                   {{24, 6, 0, 1}, "Z_2 x Z_2 x Z_2 x Z_4"}},
                  "F(4)");
    return o;
}

Outcome criterion2() {
    Outcome o;
    check_catalog(o, CatalogTarget::G3, Scalar::alpha(), {{{28, 0, 1}, "Z^3"}, {{17, 7}, "Z x Z_2 x Z_2 x Z_2"}}, "G(3)");
    return o;
}

Outcome criterion3() {
    Outcome o;
    const Expected generic = {{{14, 0, 1}, "Z^3"},
                              {{14, 0, 1}, "Z_2 x Z_2 x Z_4"},
                              {{11, 3}, "Z x Z_2 x Z_2"},
                              {{11, 3}, "Z x Z_2 x Z_2"},
                              {{11, 3}, "Z x Z_2 x Z_2"}};
    check_catalog(o, CatalogTarget::D21, Scalar::alpha(), generic, "alpha symbolic");
    Expected omega = generic;
    omega.insert({{17}, "Z x Z_3"});
    check_catalog(o, CatalogTarget::D21, Scalar::zeta(4), omega, "alpha = omega");
    Expected half = generic;
    half.insert({{17}, "Z x Z_2 x Z_2 x Z_2"});
    half.insert({{15, 1}, "Z^2 x Z_2"});
    half.insert({{13, 2}, "Z_4 x Z_4"});
    check_catalog(o, CatalogTarget::D21, Scalar::rational(-1, 2), half, "alpha = -1/2");
    return o;
}

void axioms(Outcome& o, const std::string& name, const SuperAlgebra& a, size_t even, size_t odd) {
    auto r = check_lie_super(a);
    o.require(r.ok(), name + ": " + r.witness);
    o.require(a.even_dim() == even && a.odd_dim() == odd,
              name + ": split " + std::to_string(a.even_dim()) + "+" + std::to_string(a.odd_dim()));
}

Outcome criterion4() {
    Outcome o;
    axioms(o, "D(2,1;alpha)", *build_D21(Scalar::alpha()).built.algebra, 9, 8);
    axioms(o, "G(3)", *build_G3().built.algebra, 17, 14);
    for (auto m : {F4Model::Cayley, F4Model::Tkk, F4Model::Quaternion})
        axioms(o, "F(4) " + model_name(m), *build_F4(m).built.algebra, 24, 16);
    return o;
}

Outcome criterion5() {
    Outcome o;
    const std::map<std::string, DivisionClass> want = {
        {"m3_z3", DivisionClass::F},      {"m2", DivisionClass::Q},
        {"m1_rank3", DivisionClass::Q},   {"m1_rank4", DivisionClass::QQ},
        {"m0_r6", DivisionClass::QQQ},    {"m0_r5a", DivisionClass::QQ},
        {"m0_r5b", DivisionClass::QQ},    {"m0_r4a", DivisionClass::QQ},
        {"m0_r4b_quaternion_cube", DivisionClass::Q}, {"m0_r3_cayley", DivisionClass::F},
    };
    for (const auto& [name, cls] : want) {
        auto u = normalize_quadratic_basis(load_quadratic_config(std::string(FINEGRAD_DATA_DIR) + "/clifford/" + name + ".cfg"));
        auto cl = build_even_clifford(u);
        auto d = division_class(cl.even.grading("induced"));
        auto c = dim7_case_classify(u);
        o.require(d.cls == cls && c.cls == cls,
                  name + ": division " + to_string(d.cls) + ", case table " + to_string(c.cls) + ", expected " + to_string(cls));
    }
    return o;
}

Outcome criterion6() {
    Outcome o;
    auto c = verify_cayley_clifford();
    o.require(c.ok(), "Cl0(C0,-N) = End(C): " + c.witness);
    auto q = verify_quaternion_cube();
    o.require(q.ok(), "QxQxQ = End_Q(QxQ): " + q.witness);
    auto l = verify_tkk_iso_lemma();
    o.require(l.ok && l.bijective && l.bracket_preserved && l.lands_in_so, "tkk(K10)_0 -> so(U,Q): " + l.witness);
    return o;
}

Outcome criterion7() {
    Outcome o;
    auto q = maximal_abelian_Q83K();
    o.require(q.types == std::vector<std::vector<long>>{{2, 2, 4}}, "Q8^3/K: a maximal abelian subgroup is not Z2^2 x Z4");
    o.require(q.orbit_count == 3, "Q8^3/K: " + std::to_string(q.orbit_count) + " orbits");
    o.require(q.ok_q83k(), "Q8^3/K: report not ok");
    for (int b : {2, 3}) {
        auto s = f2_subspace_cases(b);
        o.require(s.exhaustive && s.exclusive && s.ok(), "F2 lemma with " + std::to_string(b) + " blocks");
    }
    auto f = maximal_abelian_FxQ82K();
    o.require(f.orbit_count == 2 && f.ok_fxq82k(), "(F^x x Q8^2)/K: " + std::to_string(f.orbit_count) + " families");
    return o;
}

Outcome criterion8() {
    Outcome o;
    auto kp = build_kac();
    const auto& k10 = *kp.k10.algebra;
    o.require(grading_type(kp.k10.grading("Z^2")) == TypeVector{8, 1}, "K10 Z^2 type");
    o.require(grading_type(kp.k10.grading("ZxZ2")) == TypeVector{7, 0, 1}, "K10 ZxZ2 type");
    for (const auto& g : kp.k10.gradings) o.require(verify_grading(g).ok, "K10 grading " + g.name);
    const Vec& e1 = kp.k10.elements.at("E1");
    const Vec& e2 = kp.k10.elements.at("E2");
    o.require(k10.multiply(e1, e1) == e1 && k10.multiply(e2, e2) == e2, "E1, E2 idempotent");
    o.require(is_zero(k10.multiply(e1, e2)), "E1 E2 = 0");
    o.require(add(e1, e2) == unit_vec(k10.dim(), k10.idx("1")), "E1 + E2 = 1");
    return o;
}

Outcome criterion9() {
    Outcome o;
    // Hom_g0(g1 x g1, a1) for F(4) via the command line layer
    auto rep = cli::theorem_check("f4", std::nullopt);
    auto it = std::find_if(rep.checks.begin(), rep.checks.end(),
                           [](const cli::Check& c) { return c.name.rfind("pairings/", 0) == 0; });
    o.require(it != rep.checks.end() && it->status == "pass", "F(4) invariant pairing dimension");

    // refinement: reflexive everywhere, antisymmetric up to equal partitions
    auto es = catalog(CatalogTarget::D21, Scalar::rational(-1, 2));
    for (const auto& e : es) {
        o.require(is_refinement(e.grading, e.grading), e.name + " does not refine itself");
        Grading coarse = coarsen_to_free(e.grading);
        o.require(is_refinement(e.grading, coarse), e.name + " does not refine its free coarsening");
    }
    for (const auto& a : es)
        for (const auto& b : es)
            if (is_refinement(a.grading, b.grading) && is_refinement(b.grading, a.grading))
                o.require(grading_type(a.grading) == grading_type(b.grading),
                          a.name + " and " + b.name + " refine each other with different types");

    // negative controls
    for (const auto& e : es) {
        Grading g = e.grading;
        size_t j = 1;
        while (j < g.degrees.size() && g.degrees[j] == g.degrees[0]) ++j;
        if (j == g.degrees.size()) continue;
        g.degrees[0] = g.degrees[j];
        auto r = verify_grading(g);
        o.require(!r.ok && !r.witness.empty(), e.name + ": corrupted degree still verifies");
    }
    auto other = cli::theorem_check("d21a", std::string("1/3"));
    o.require(other.all_pass(), "d21a at alpha = 1/3");
    bool usage = false;
    try {
        cli::theorem_check("d21a", std::string("-1"));
    } catch (const cli::UsageError&) {
        usage = true;
    }
    o.require(usage, "alpha = -1 not rejected");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"F(4) grading types", criterion1},
        {"G(3) grading types", criterion2},
        {"D(2,1;alpha) grading types", criterion3},
        {"axiom suite", criterion4},
        {"Clifford classification", criterion5},
        {"structural isomorphisms", criterion6},
        {"finite-group propositions", criterion7},
        {"K10 gradings and idempotents", criterion8},
        {"property suite", criterion9},
    };
    bool all = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << s
                  << "s)\n";
        for (const auto& n : o.notes) std::cout << "     " << n << "\n";
        all = all && o.ok;
    }
    return all ? 0 : 1;
}
