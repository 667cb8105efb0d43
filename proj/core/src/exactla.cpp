#include "finegrad/exactla.hpp"

#include <sstream>

namespace finegrad {

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, size_t rows) {
    Mat m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw LinAlgError("column length mismatch");
        for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, size_t cols) {
    Mat m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw LinAlgError("row length mismatch");
        for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vec Mat::column(size_t j) const {
    Vec v(r_);
    for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Mat::row(size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Mat Mat::transpose() const {
    Mat t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Mat Mat::operator*(const Mat& o) const {
    if (c_ != o.r_) throw LinAlgError("matrix product shape mismatch");
    Mat p(r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.c_; ++j) {
                const Scalar& b = o(k, j);
                if (!b.is_zero()) p(i, j) += a * b;
            }
        }
    return p;
}

Vec Mat::operator*(const Vec& v) const {
    if (c_ != v.size()) throw LinAlgError("matrix-vector shape mismatch");
    Vec out(r_);
    for (size_t j = 0; j < c_; ++j) {
        if (v[j].is_zero()) continue;
        for (size_t i = 0; i < r_; ++i) {
            const Scalar& a = (*this)(i, j);
            if (!a.is_zero()) out[i] += a * v[j];
        }
    }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw LinAlgError("matrix sum shape mismatch");
    Mat s(*this);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
    return s;
}

Mat Mat::operator-(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw LinAlgError("matrix difference shape mismatch");
    Mat s(*this);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
    return s;
}

Mat Mat::scaled(const Scalar& s) const {
    Mat m(*this);
    for (auto& x : m.a_) x *= s;
    return m;
}

std::string Mat::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < r_; ++i) {
        os << "[";
        for (size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
        os << "]\n";
    }
    return os.str();
}

std::vector<size_t> rref(Mat& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = m(r, c).inv();
        for (size_t j = c; j < m.cols(); ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank(Mat m) { return rref(m).size(); }

std::vector<Vec> kernel(const Mat& m0) {
    Mat m(m0);
    auto piv = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (size_t c : piv) is_piv[c] = true;
    std::vector<Vec> out;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        Vec v(m.cols());
        v[f] = Scalar(1);
        for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m(k, f);
        out.push_back(std::move(v));
    }
    return out;
}

SolveResult solve(const Mat& m, const Vec& b) {
    if (b.size() != m.rows()) throw LinAlgError("right-hand side length mismatch");
    Mat aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto piv = rref(aug);
    SolveResult res;
    if (!piv.empty() && piv.back() == m.cols()) return res;
    res.consistent = true;
    res.x = Vec(m.cols());
    for (size_t k = 0; k < piv.size(); ++k) res.x[piv[k]] = aug(k, m.cols());
    return res;
}

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw LinAlgError("inverse of non-square matrix");
    size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar(1);
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw LinAlgError("singular matrix");
    Mat inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::optional<std::vector<Vec>> coordinates(const std::vector<Vec>& basis, const std::vector<Vec>& targets) {
    std::vector<Vec> out;
    if (basis.empty()) {
        for (const auto& t : targets)
            if (!is_zero(t)) return std::nullopt;
        return std::vector<Vec>(targets.size());
    }
    size_t n = basis[0].size(), b = basis.size(), t = targets.size();
    Mat aug(n, b + t);
    for (size_t j = 0; j < b; ++j)
        for (size_t i = 0; i < n; ++i) aug(i, j) = basis[j][i];
    for (size_t j = 0; j < t; ++j)
        for (size_t i = 0; i < n; ++i) aug(i, b + j) = targets[j][i];
    auto piv = rref(aug);
    size_t pb = 0;
    while (pb < piv.size() && piv[pb] < b) ++pb;
    if (pb != b) throw LinAlgError("coordinates: basis is linearly dependent");
    if (pb != piv.size()) return std::nullopt;
    for (size_t j = 0; j < t; ++j) {
        Vec c(b);
        for (size_t k = 0; k < b; ++k) c[k] = aug(k, b + j);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<EigenBlock> joint_eigenspaces(const std::vector<Mat>& mats, const std::vector<Scalar>& candidates) {
    return joint_eigenspaces(mats, std::vector<std::vector<Scalar>>(mats.size(), candidates));
}

std::vector<EigenBlock> joint_eigenspaces(const std::vector<Mat>& mats,
                                          const std::vector<std::vector<Scalar>>& candidates) {
    if (mats.empty()) throw LinAlgError("joint_eigenspaces: no matrices");
    if (candidates.size() != mats.size()) throw LinAlgError("joint_eigenspaces: one candidate list per matrix required");
    size_t n = mats[0].rows();
    for (const auto& m : mats)
        if (m.rows() != n || m.cols() != n) throw LinAlgError("joint_eigenspaces: shape mismatch");
    for (size_t a = 0; a < mats.size(); ++a)
        for (size_t b = a + 1; b < mats.size(); ++b)
            if (mats[a] * mats[b] != mats[b] * mats[a])
                throw LinAlgError("joint_eigenspaces: matrices " + std::to_string(a) + " and " + std::to_string(b) +
                                  " do not commute");
    for (size_t a = 0; a < mats.size(); ++a) {
        Mat p = Mat::identity(n);
        for (const auto& l : candidates[a]) p = p * (mats[a] - Mat::identity(n).scaled(l));
        if (!p.is_zero())
            throw LinAlgError("joint_eigenspaces: matrix " + std::to_string(a) +
                              " is not annihilated by the product over its candidate eigenvalues");
    }
    std::vector<EigenBlock> blocks(1);
    for (size_t i = 0; i < n; ++i) blocks[0].basis.push_back(unit_vec(n, i));
    for (size_t a = 0; a < mats.size(); ++a) {
        std::vector<EigenBlock> next;
        for (const auto& blk : blocks) {
            Mat bm = Mat::from_columns(blk.basis, n);
            size_t total = 0;
            for (size_t li = 0; li < candidates[a].size(); ++li) {
                Mat shifted = (mats[a] - Mat::identity(n).scaled(candidates[a][li])) * bm;
                auto ker = kernel(shifted);
                if (ker.empty()) continue;
                EigenBlock nb;
                nb.eigenvalues = blk.eigenvalues;
                nb.eigenvalues.push_back(candidates[a][li]);
                nb.indices = blk.indices;
                nb.indices.push_back(li);
                for (const auto& c : ker) nb.basis.push_back(bm * c);
                total += ker.size();
                next.push_back(std::move(nb));
            }
            if (total != blk.basis.size())
                throw LinAlgError("joint_eigenspaces: eigenvalue set insufficient for matrix " + std::to_string(a) +
                                  " (eigenspaces span " + std::to_string(total) + " of " +
                                  std::to_string(blk.basis.size()) + " dimensions)");
        }
        blocks = std::move(next);
    }
    std::vector<Vec> all;
    for (const auto& b : blocks)
        for (const auto& v : b.basis) all.push_back(v);
    if (all.size() != n || rank(Mat::from_columns(all, n)) != n)
        throw LinAlgError("joint_eigenspaces: blocks do not sum to the whole space");
    return blocks;
}

Vec IncrementalSpan::reduce(Vec v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& f = v[lead_[r]];
        if (f.is_zero()) continue;
        Scalar ff = f;
        const Vec& row = rows_[r];
        for (size_t j = lead_[r]; j < n_; ++j)
            if (!row[j].is_zero()) v[j] -= ff * row[j];
    }
    return v;
}

bool IncrementalSpan::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool IncrementalSpan::add(const Vec& v) {
    if (v.size() != n_) throw LinAlgError("IncrementalSpan: length mismatch");
    Vec r = reduce(v);
    size_t lead = 0;
    while (lead < n_ && r[lead].is_zero()) ++lead;
    if (lead == n_) return false;
    Scalar inv = r[lead].inv();
    for (size_t j = lead; j < n_; ++j)
        if (!r[j].is_zero()) r[j] *= inv;
    // keep rows sorted by leading column so reduce() works in one pass
    size_t pos = 0;
    while (pos < lead_.size() && lead_[pos] < lead) ++pos;
    // keep fully reduced form: clear the new lead column in the other rows
    for (size_t q = 0; q < rows_.size(); ++q) {
        const Scalar& f = rows_[q][lead];
        if (f.is_zero()) continue;
        Scalar ff = f;
        for (size_t j = lead; j < n_; ++j)
            if (!r[j].is_zero()) rows_[q][j] -= ff * r[j];
    }
    rows_.insert(rows_.begin() + pos, std::move(r));
    lead_.insert(lead_.begin() + pos, lead);
    original_.push_back(v);
    return true;
}

CoordinateSolver::CoordinateSolver(const std::vector<Vec>& basis) : basis_(basis) {
    if (basis_.empty()) return;
    size_t n = basis_[0].size();
    Mat t = Mat::from_rows(basis_, n);  // rows are basis vectors
    rows_ = rref(t);
    if (rows_.size() != basis_.size()) throw LinAlgError("CoordinateSolver: basis is linearly dependent");
    Mat sub(rows_.size(), rows_.size());
    for (size_t r = 0; r < rows_.size(); ++r)
        for (size_t c = 0; c < basis_.size(); ++c) sub(r, c) = basis_[c][rows_[r]];
    inv_ = inverse(sub);
}

std::optional<Vec> CoordinateSolver::solve(const Vec& target) const {
    size_t k = basis_.size();
    if (k == 0) {
        if (is_zero(target)) return Vec{};
        return std::nullopt;
    }
    Vec sel(k);
    for (size_t r = 0; r < k; ++r) sel[r] = target[rows_[r]];
    Vec x = inv_ * sel;
    Vec back(target.size());
    for (size_t c = 0; c < k; ++c)
        if (!x[c].is_zero()) axpy(back, x[c], basis_[c]);
    if (back != target) return std::nullopt;
    return x;
}

Vec zero_vec(size_t n) { return Vec(n); }

Vec unit_vec(size_t n, size_t i) {
    Vec v(n);
    v[i] = Scalar(1);
    return v;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Vec& a, const Scalar& s) {
    Vec r(a);
    for (auto& x : r) x *= s;
    return r;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
    if (a.is_zero()) return;
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i] += a * x[i];
}

}  // namespace finegrad
