#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "finegrad/cliffordlab.hpp"
#include "finegrad/constructions.hpp"
#include "finegrad/gradinglab.hpp"
#include "finegrad/groupslab.hpp"
#include "finegrad/superalg.hpp"

#ifndef FINEGRAD_VERSION
#define FINEGRAD_VERSION "0.0.0"
#endif

namespace finegrad::cli {

void Report::add(std::string name, bool ok, std::string expected, std::string actual, std::string witness) {
    Check c{std::move(name), ok ? "pass" : "fail", std::move(expected), std::move(actual), {}, {}};
    if (!ok) c.witness = witness.empty() ? "actual differs from expected" : std::move(witness);
    checks.push_back(std::move(c));
}

void Report::add_error(std::string name, std::string expected, std::string message) {
    checks.push_back({std::move(name), "error", std::move(expected), "", std::move(message), {}});
}

void Report::sort() {
    std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
}

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == "pass"; });
}

std::string Report::text() const {
    std::ostringstream os;
    os << "finegrad " << version() << ": " << command << "\n";
    for (const auto& c : checks) {
        std::string tag = c.status == "pass" ? "PASS " : c.status == "fail" ? "FAIL " : "ERROR";
        os << tag << " " << c.name << "\n";
        os << "      expected: " << c.expected << "\n";
        os << "      actual:   " << c.actual << "\n";
        if (!c.witness.empty()) os << "      witness:  " << c.witness << "\n";
        for (const auto& d : c.details) os << "      " << d << "\n";
    }
    size_t passed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.status == "pass"; });
    os << passed << "/" << checks.size() << " checks passed in " << std::fixed;
    os.precision(2);
    os << seconds << "s\n";
    return os.str();
}

nlohmann::json Report::json() const {
    nlohmann::json j;
    j["command"] = command;
    j["version"] = version();
    j["seconds"] = seconds;
    j["status"] = all_pass() ? "pass" : "fail";
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json r{{"name", c.name}, {"status", c.status}, {"expected", c.expected}, {"actual", c.actual}};
        if (!c.witness.empty()) r["witness"] = c.witness;
        if (!c.details.empty()) r["details"] = c.details;
        j["checks"].push_back(std::move(r));
    }
    return j;
}

std::string version() { return FINEGRAD_VERSION; }

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string yes(bool b) { return b ? "yes" : "no"; }

Scalar parse_alpha(const std::optional<std::string>& text) {
    if (!text) return Scalar::alpha();
    Scalar a;
    try {
        a = parse_scalar(*text);
    } catch (const ParseError& e) {
        throw UsageError("--alpha: " + std::string(e.what()));
    }
    if (a == Scalar(0) || a == Scalar(-1)) throw UsageError("--alpha must not be 0 or -1 (D(2,1;alpha) degenerates)");
    return a;
}

std::string type_and_group(const TypeVector& t, const AbelianInvariants& g) {
    return "type " + type_str(t) + " on " + g.str();
}

void catalog_checks(Report& r, CatalogTarget target, const Scalar& alpha) {
    for (const auto& e : catalog(target, alpha)) {
        auto res = check_entry(e);
        std::string witness = res.verified ? "" : res.witness;
        r.add("catalog/" + e.name, res.pass(), type_and_group(res.expected_type, res.expected_group),
              type_and_group(res.type, res.group) + (res.verified ? "" : ", grading axiom violated"), witness);
    }
}

void axiom_check(Report& r, const std::string& name, const SuperAlgebra& a, size_t even, size_t odd) {
    auto lie = check_lie_super(a);
    std::ostringstream want, got;
    want << "dim " << even + odd << " = " << even << "+" << odd << ", anticommutativity and Jacobi exact";
    got << "dim " << a.dim() << " = " << a.even_dim() << "+" << a.odd_dim()
        << ", anticommutativity " << (lie.anticommutativity_ok ? "exact" : "violated") << ", Jacobi "
        << (lie.jacobi_ok ? "exact" : "violated");
    bool ok = lie.ok() && a.dim() == even + odd && a.even_dim() == even;
    r.add("axioms/" + name, ok, want.str(), got.str(), lie.witness);
}

// g0 acting on g1 by the bracket; returns dim Hom_g0(g1 x g1, ideal) for an ideal of g0 given by even positions
size_t odd_pairing_dim(const SuperAlgebra& a, const std::vector<size_t>& ideal_even_positions) {
    std::vector<size_t> ev, od;
    for (size_t i = 0; i < a.dim(); ++i) (a.parity(i) ? od : ev).push_back(i);
    std::vector<std::string> labels;
    for (auto i : ev) labels.push_back(a.label(i));
    auto g0 = std::make_shared<SuperAlgebra>(SuperAlgebra::from_products(
        "g0", labels, std::vector<int>(ev.size(), 0), [&](size_t i, size_t j) {
            Vec full = a.basis_product(ev[i], ev[j]);
            Vec out;
            for (auto k : ev) out.push_back(full[k]);
            return out;
        }));
    ModuleAction m;
    m.algebra = g0;
    m.dim = od.size();
    m.parity.assign(od.size(), 1);
    for (auto i : od) m.labels.push_back(a.label(i));
    for (auto x : ev) {
        Mat rho(od.size(), od.size());
        for (size_t c = 0; c < od.size(); ++c) {
            Vec img = a.basis_product(x, od[c]);
            for (size_t r = 0; r < od.size(); ++r) rho(r, c) = img[od[r]];
        }
        m.rho.push_back(rho);
    }
    return invariant_pairings(m, ideal_action(g0, ideal_even_positions)).size();
}

void f4_support(Report& r) {
    for (auto model : {F4Model::Cayley, F4Model::Tkk, F4Model::Quaternion}) {
        auto f = build_F4(model);
        axiom_check(r, "F(4) " + model_name(model), *f.built.algebra, 24, 16);
        if (model == F4Model::Cayley) {
            size_t d = odd_pairing_dim(*f.built.algebra, f.a1);
            r.add("pairings/F(4) odd x odd -> a1", d == 1, "dim 1", "dim " + std::to_string(d));
        }
    }
    auto cc = verify_cayley_clifford();
    r.add("structure/Cl0(C0,-N) = End(C)", cc.ok(), "l_x^2 = -N(x), span 64, bar = N-adjoint",
          "squares " + yes(cc.squares_ok) + ", span " + std::to_string(cc.span_dim) + ", adjoint " + yes(cc.adjoint_ok),
          cc.witness);
    auto qc = verify_quaternion_cube();
    std::ostringstream sq;
    for (size_t i = 0; i < qc.w_squares.size(); ++i) sq << (i ? "," : "") << qc.w_squares[i];
    r.add("structure/QxQxQ = End_Q(QxQ)", qc.ok(),
          "Phi iso of rank 64, w anticommute, degrees match, h skew-hermitian and bar-compatible",
          "Phi hom " + yes(qc.phi_hom) + " rank " + std::to_string(qc.phi_rank) + ", w anticommute " +
              yes(qc.w_anticommute) + ", w^2 (" + sq.str() + "), degrees " + yes(qc.degrees_ok) +
              ", skew-hermitian " + yes(qc.skew_hermitian) + ", right-linear " + yes(qc.right_linear) +
              ", bar " + yes(qc.intertwines_bar),
          qc.witness);
    auto lem = verify_tkk_iso_lemma();
    r.add("structure/tkk(K10)_0 ideal -> so(U,Q)", lem.ok && lem.bijective && lem.bracket_preserved,
          "bijective Lie homomorphism into so(U,Q)",
          "rank " + std::to_string(lem.rank) + ", in so " + yes(lem.lands_in_so) + ", bijective " + yes(lem.bijective) +
              ", brackets " + yes(lem.bracket_preserved),
          lem.witness);
}

std::string invariants_str(const std::vector<std::vector<long>>& types) {
    std::string s;
    for (const auto& t : types) {
        if (!s.empty()) s += "; ";
        std::string f;
        for (auto x : t) f += (f.empty() ? "Z_" : " x Z_") + std::to_string(x);
        s += f;
    }
    return s;
}

void groups_support(Report& r) {
    auto q = maximal_abelian_Q83K();
    r.add("groups/Q8^3/K maximal abelian", q.ok_q83k(), "135 subgroups, all Z_2 x Z_2 x Z_4, contain center, 3 orbits",
          std::to_string(q.subgroup_count) + " subgroups, " + invariants_str(q.types) + ", contain center " +
              yes(q.all_contain_center) + ", " + std::to_string(q.orbit_count) + " orbits, representatives " +
              yes(q.representatives_cover_orbits) + ", quotient match " + yes(q.lift_matches_subspaces));
    auto f = maximal_abelian_FxQ82K();
    r.add("groups/(F^x x Q8^2)/K maximal abelian", f.ok_fxq82k(), "2 families, each containing the center",
          std::to_string(f.orbit_count) + " families of " + std::to_string(f.subgroup_count) + " subgroups, contain center " +
              yes(f.all_contain_center) + ", representatives " + yes(f.representatives_cover_orbits));
    for (int blocks : {2, 3}) {
        auto c = f2_subspace_cases(blocks);
        std::string counts;
        for (auto n : c.family_counts) counts += (counts.empty() ? "" : "/") + std::to_string(n);
        r.add("groups/F2 subspaces, " + std::to_string(blocks) + " blocks", c.ok(), "families exhaustive and exclusive",
              std::to_string(c.classified) + " classified, families " + counts + ", exhaustive " + yes(c.exhaustive) +
                  ", exclusive " + yes(c.exclusive));
    }
}

struct Target {
    AlgPtr algebra;
    std::vector<Grading> gradings;
};

Target make_target(const std::string& target, const std::string& model, const std::optional<std::string>& alpha) {
    if (alpha && target != "d21a") throw UsageError("--alpha applies only to d21a");
    if (target == "k10") {
        auto kp = build_kac();
        return {kp.k10.algebra, kp.k10.gradings};
    }
    if (target == "g3") {
        auto g = build_G3();
        return {g.built.algebra, g.built.gradings};
    }
    if (target == "f4") {
        F4Model m;
        try {
            m = parse_f4_model(model.empty() ? "cayley" : model);
        } catch (const std::exception& e) {
            throw UsageError(std::string("--model: ") + e.what());
        }
        auto f = build_F4(m);
        return {f.built.algebra, f.built.gradings};
    }
    if (target == "d21a") {
        auto d = build_D21(parse_alpha(alpha));
        return {d.built.algebra, d.built.gradings};
    }
    throw UsageError("unknown target '" + target + "' (expected k10, g3, f4 or d21a)");
}

}  // namespace

Report theorem_check(const std::string& target, const std::optional<std::string>& alpha) {
    auto t0 = Clock::now();
    Report r;
    r.command = "theorem-check " + target + (alpha ? " --alpha " + *alpha : "");
    if (alpha && target != "d21a") throw UsageError("--alpha applies only to d21a");
    if (target == "f4") {
        catalog_checks(r, CatalogTarget::F4, Scalar::alpha());
        f4_support(r);
    } else if (target == "g3") {
        catalog_checks(r, CatalogTarget::G3, Scalar::alpha());
        axiom_check(r, "G(3)", *build_G3().built.algebra, 17, 14);
    } else if (target == "d21a") {
        Scalar a = parse_alpha(alpha);
        catalog_checks(r, CatalogTarget::D21, a);
        axiom_check(r, "D(2,1;" + a.str() + ")", *build_D21(a).built.algebra, 9, 8);
        groups_support(r);
    } else {
        throw UsageError("unknown target '" + target + "' (expected f4, g3 or d21a)");
    }
    r.sort();
    r.seconds = since(t0);
    return r;
}

Report clifford_class(const std::string& config_path) {
    auto t0 = Clock::now();
    Report r;
    r.command = "clifford-class " + config_path;
    auto raw = load_quadratic_config(config_path);
    auto u = normalize_quadratic_basis(raw);

    std::vector<std::string> trace;
    trace.push_back("input: dim " + std::to_string(raw.names.size()) + " over " + raw.group.str());
    trace.push_back("shift: " + u.shift.str());
    trace.push_back("m = " + std::to_string(u.m()) + ", l = " + std::to_string(u.l()));
    for (size_t i = 0; i < u.m(); ++i) trace.push_back("g" + std::to_string(i + 1) + " = " + u.g[i].str());
    for (size_t j = 0; j < u.h.size(); ++j) trace.push_back("h" + std::to_string(j + 1) + " = " + u.h[j].str());

    auto cl = build_even_clifford(u);
    bool structural = cl.bar_antiautomorphism && cl.bar_involutive && cl.so_image_closed && cl.bracket_identity;
    r.add("even Clifford algebra", structural, "bar anti-automorphism and involution, so(U) image closed",
          "dim " + std::to_string(cl.even.algebra->dim()) + ", bar " + yes(cl.bar_antiautomorphism && cl.bar_involutive) +
              ", so closed " + yes(cl.so_image_closed) + ", bracket identity " + yes(cl.bracket_identity),
          cl.witness);

    auto div = division_class(cl.even.grading("induced"));
    Check& dc = r.checks.emplace_back();
    dc.name = "division class";
    dc.status = "pass";
    dc.expected = "computed from a minimal graded left ideal";
    dc.actual = to_string(div.cls) + " (ideal dim " + std::to_string(div.ideal_dim) + ", |Supp eRe| = " +
                std::to_string(div.support_size) + ", seed " + div.ideal_generator + ")";
    dc.details = trace;

    if (u.dim() == 7) {
        auto c = dim7_case_classify(u);
        std::string perm;
        for (auto p : c.permutation) perm += (perm.empty() ? "" : ",") + std::to_string(p + 1);
        r.add("case table agreement", c.cls == div.cls, "case table class = division class " + to_string(div.cls),
              "case m=" + std::to_string(c.m) + " rank=" + std::to_string(c.rank) + " [" + c.pattern + "] w order (" +
                  perm + ") -> " + to_string(c.cls),
              "classifiers disagree");
    }
    if (u.m() >= 1) {
        auto f = check_uuv_factorization(u);
        r.add("matrix factor peeling", f.ok(), "each hyperbolic pair splits off M2(F)",
              std::to_string(f.steps.size()) + " steps, residual dim " + std::to_string(f.residual_dim), f.witness);
    }
    r.seconds = since(t0);
    return r;
}

BuildOutput build(const std::string& target, const std::string& model, const std::optional<std::string>& alpha) {
    auto t0 = Clock::now();
    BuildOutput out;
    auto t = make_target(target, model, alpha);
    out.report.command = "build " + target + (model.empty() ? "" : " --model " + model) + (alpha ? " --alpha " + *alpha : "");
    out.serialized = store_superalgebra(*t.algebra);
    auto back = load_superalgebra(out.serialized);
    out.report.add("round trip", back == *t.algebra, "reloaded structure constants identical",
                   back == *t.algebra ? "identical" : "different");
    out.report.add("dimension", true, "", "dim " + std::to_string(t.algebra->dim()) + " = " +
                                              std::to_string(t.algebra->even_dim()) + "+" +
                                              std::to_string(t.algebra->odd_dim()));
    out.report.checks.back().expected = out.report.checks.back().actual;
    out.report.sort();
    out.report.seconds = since(t0);
    return out;
}

Report grading_report(const std::string& target, const std::optional<std::string>& alpha) {
    auto t0 = Clock::now();
    Report r;
    r.command = "grading-report " + target + (alpha ? " --alpha " + *alpha : "");
    std::vector<Grading> gradings;
    if (target == "k10") {
        gradings = make_target(target, "", alpha).gradings;
    } else {
        std::optional<CatalogTarget> ct;
        if (target == "f4") ct = CatalogTarget::F4;
        if (target == "g3") ct = CatalogTarget::G3;
        if (target == "d21a") ct = CatalogTarget::D21;
        if (!ct) throw UsageError("unknown target '" + target + "' (expected k10, g3, f4 or d21a)");
        if (alpha && target != "d21a") throw UsageError("--alpha applies only to d21a");
        for (auto& e : catalog(*ct, parse_alpha(alpha))) gradings.push_back(std::move(e.grading));
    }
    for (const auto& g : gradings) {
        auto v = verify_grading(g);
        auto inv = subgroup_invariants(g.support());
        r.add(g.name, v.ok, "valid grading", type_and_group(grading_type(g), inv) + " (group " + g.group.str() + ")",
              v.witness);
        auto& details = r.checks.back().details;
        for (const auto& [deg, idx] : g.components()) {
            std::string line = deg.str() + ":";
            for (auto i : idx) line += " " + g.algebra->label(i);
            details.push_back(line);
        }
    }
    r.sort();
    r.seconds = since(t0);
    return r;
}

}  // namespace finegrad::cli
