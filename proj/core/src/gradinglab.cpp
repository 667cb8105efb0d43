#include "finegrad/gradinglab.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace finegrad {

Grading Grading::on_basis(std::string name, AlgPtr a, GradingGroup g, std::vector<GroupElement> degrees) {
    Grading gr;
    gr.name = std::move(name);
    gr.ambient = a;
    gr.to_ambient = Mat::identity(a->dim());
    gr.algebra = std::move(a);
    gr.group = std::move(g);
    gr.degrees = std::move(degrees);
    return gr;
}

std::vector<std::pair<GroupElement, std::vector<size_t>>> Grading::components() const {
    std::map<GroupElement, std::vector<size_t>> m;
    for (size_t i = 0; i < degrees.size(); ++i) m[degrees[i]].push_back(i);
    return {m.begin(), m.end()};
}

std::vector<GroupElement> Grading::support() const {
    std::vector<GroupElement> out;
    for (auto& c : components()) out.push_back(c.first);
    return out;
}

GradingReport verify_grading(const Grading& g) {
    GradingReport r;
    const SuperAlgebra& a = *g.algebra;
    if (g.degrees.size() != a.dim()) {
        r.ok = false;
        r.witness = "degree map has " + std::to_string(g.degrees.size()) + " entries for dimension " +
                    std::to_string(a.dim());
        return r;
    }
    for (size_t i = 0; i < a.dim(); ++i)
        if (g.degrees[i].group() != g.group) {
            r.ok = false;
            r.witness = "degree of " + a.label(i) + " is not in " + g.group.str();
            return r;
        }
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j) {
            GroupElement s = g.degrees[i] + g.degrees[j];
            for (auto& t : a.product(i, j)) {
                if (g.degrees[t.k] != s) {
                    r.ok = false;
                    r.witness = a.label(i) + " * " + a.label(j) + " has a term on " + a.label(t.k) + " of degree " +
                                g.degrees[t.k].str() + ", expected " + s.str();
                    return r;
                }
                if (a.parity(t.k) != (a.parity(i) + a.parity(j)) % 2) {
                    r.ok = false;
                    r.witness = a.label(i) + " * " + a.label(j) + " breaks parity";
                    return r;
                }
            }
        }
    return r;
}

TypeVector grading_type(const Grading& g) {
    TypeVector t;
    for (auto& c : g.components()) {
        size_t d = c.second.size();
        if (t.size() < d) t.resize(d);
        ++t[d - 1];
    }
    return t;
}

std::string type_str(const TypeVector& t) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ')';
    return os.str();
}

bool is_refinement(const Grading& fine, const Grading& coarse) {
    if (fine.ambient != coarse.ambient && !(fine.ambient && coarse.ambient && *fine.ambient == *coarse.ambient))
        throw std::invalid_argument("is_refinement: gradings live on different algebras");
    bool same_basis = fine.algebra == coarse.algebra || fine.to_ambient == coarse.to_ambient;
    if (same_basis) {
        for (auto& c : fine.components()) {
            const GroupElement& d = coarse.degrees[c.second.front()];
            for (size_t i : c.second)
                if (coarse.degrees[i] != d) return false;
        }
        return true;
    }
    // different homogeneous bases: compare component subspaces in ambient coordinates
    size_t n = fine.to_ambient.rows();
    std::vector<IncrementalSpan> spans;
    for (auto& c : coarse.components()) {
        IncrementalSpan s(n);
        for (size_t i : c.second) s.add(coarse.to_ambient.column(i));
        spans.push_back(std::move(s));
    }
    for (auto& c : fine.components()) {
        bool found = false;
        for (auto& s : spans) {
            bool all = true;
            for (size_t i : c.second)
                if (!s.contains(fine.to_ambient.column(i))) {
                    all = false;
                    break;
                }
            if (all) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

Grading coarsen_to_free(const Grading& g) {
    Grading c = g;
    c.name = g.name + "/torsion";
    c.group = GradingGroup(g.group.free_rank, {});
    for (auto& d : c.degrees) d = GroupElement(c.group, d.free_part(), {});
    return c;
}

Grading grading_from_diag(const std::string& name, const AlgPtr& a, const DiagGenerators& d) {
    size_t n = a->dim();
    std::vector<Mat> mats;
    std::vector<std::vector<Scalar>> cands;
    std::vector<std::vector<long>> values;  // integer eigenvalue per candidate, free factors only

    for (auto& w : d.torus_weights) {
        if (w.size() != n) throw DiagError("torus weight has wrong length");
        Mat m(n, n);
        std::set<long> vals(w.begin(), w.end());
        for (size_t i = 0; i < n; ++i) m(i, i) = w[i];
        mats.push_back(m);
        values.emplace_back(vals.begin(), vals.end());
    }
    for (auto& t : d.torus) {
        if (t.matrix.rows() != n || t.matrix.cols() != n) throw DiagError("torus element has wrong shape");
        mats.push_back(t.matrix);
        std::vector<long> v;
        for (long x = t.min_weight; x <= t.max_weight; ++x) v.push_back(x);
        values.push_back(v);
    }
    for (auto& v : values) {
        std::vector<Scalar> c;
        for (long x : v) c.emplace_back(x);
        cands.push_back(c);
    }
    std::vector<long> orders;
    for (auto& f : d.finite_autos) {
        if (f.order < 1 || 12 % f.order != 0) throw DiagError("automorphism order must divide 12: " + f.name);
        if (f.matrix.rows() != n || f.matrix.cols() != n) throw DiagError("automorphism has wrong shape: " + f.name);
        mats.push_back(f.matrix);
        std::vector<Scalar> c;
        for (long k = 0; k < f.order; ++k) c.push_back(Scalar::zeta(k * (12 / f.order)));
        cands.push_back(c);
        orders.push_back(f.order);
    }
    // parity operator keeps every eigenvector homogeneous
    Mat par(n, n);
    for (size_t i = 0; i < n; ++i) par(i, i) = a->parity(i) ? -1 : 1;
    mats.push_back(par);
    cands.push_back({Scalar(1), Scalar(-1)});

    auto blocks = joint_eigenspaces(mats, cands);
    size_t total = 0;
    for (auto& b : blocks) total += b.basis.size();
    if (total != n) throw DiagError(name + ": generators are not simultaneously diagonalizable over the candidates");

    GradingGroup group(static_cast<int>(values.size()), orders);
    std::vector<Vec> basis;
    std::vector<std::string> labels;
    std::vector<GroupElement> degrees;
    std::set<std::string> used;
    size_t fresh = 0;
    for (auto& b : blocks) {
        std::vector<long> fp, tp;
        for (size_t k = 0; k < values.size(); ++k) fp.push_back(values[k][b.indices[k]]);
        for (size_t k = 0; k < orders.size(); ++k) tp.push_back(static_cast<long>(b.indices[values.size() + k]));
        GroupElement deg(group, fp, tp);
        for (auto v : b.basis) {
            size_t nz = 0, pos = 0;
            for (size_t i = 0; i < n; ++i)
                if (!v[i].is_zero()) {
                    ++nz;
                    pos = i;
                }
            std::string label;
            if (nz == 1) {
                v = scale(v, v[pos].inv());
                label = a->label(pos);
            } else {
                do label = "y" + std::to_string(++fresh);
                while (a->index_of(label) || used.count(label));
            }
            used.insert(label);
            basis.push_back(v);
            labels.push_back(label);
            degrees.push_back(deg);
        }
    }
    Grading g;
    g.name = name;
    g.algebra = std::make_shared<SuperAlgebra>(a->change_basis(basis, labels));
    g.group = group;
    g.degrees = degrees;
    g.ambient = a;
    g.to_ambient = Mat::from_columns(basis, n);
    return g;
}

CatalogResult check_entry(const CatalogEntry& e) {
    CatalogResult r;
    r.name = e.name;
    auto rep = verify_grading(e.grading);
    r.verified = rep.ok;
    r.witness = rep.witness;
    r.type = grading_type(e.grading);
    r.expected_type = e.expected_type;
    r.group = subgroup_invariants(e.grading.support());
    r.expected_group = e.expected_group;
    return r;
}

}  // namespace finegrad
