#pragma once

#include "finegrad/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace finegrad {

using Vec = std::vector<Scalar>;

struct LinAlgError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    static Mat identity(size_t n);
    static Mat from_columns(const std::vector<Vec>& cols, size_t rows);
    static Mat from_rows(const std::vector<Vec>& rows, size_t cols);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    Scalar& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const Scalar& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    Vec column(size_t j) const;
    Vec row(size_t i) const;
    Mat transpose() const;
    bool is_zero() const;

    Mat operator*(const Mat& o) const;
    Vec operator*(const Vec& v) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Scalar& s) const;
    friend bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    std::string str() const;

private:
    size_t r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

// Reduced row echelon form in place; returns pivot columns.
// Pivot choice: first nonzero entry scanning columns left to right.
std::vector<size_t> rref(Mat& m);
size_t rank(Mat m);
std::vector<Vec> kernel(const Mat& m);

struct SolveResult {
    bool consistent = false;
    Vec x;
};
SolveResult solve(const Mat& m, const Vec& b);

// Inverse of a square matrix; throws LinAlgError when singular.
Mat inverse(const Mat& m);

// Express each target vector in the span of basis; nullopt if some target is outside.
std::optional<std::vector<Vec>> coordinates(const std::vector<Vec>& basis, const std::vector<Vec>& targets);

struct EigenBlock {
    std::vector<Scalar> eigenvalues;  // one per matrix
    std::vector<size_t> indices;      // position of each eigenvalue in its candidate list
    std::vector<Vec> basis;
};

// Simultaneous eigenspace decomposition of commuting diagonalizable matrices with
// supplied candidate eigenvalues (one list per matrix). Empty blocks are dropped.
std::vector<EigenBlock> joint_eigenspaces(const std::vector<Mat>& mats,
                                          const std::vector<std::vector<Scalar>>& candidates);
std::vector<EigenBlock> joint_eigenspaces(const std::vector<Mat>& mats, const std::vector<Scalar>& candidates);

// Incrementally built span with echelon reduction; add() returns true when the
// vector was independent of everything added before.
class IncrementalSpan {
public:
    explicit IncrementalSpan(size_t n) : n_(n) {}
    bool add(const Vec& v);
    bool contains(const Vec& v) const;
    size_t dim() const { return original_.size(); }
    const std::vector<Vec>& basis() const { return original_; }  // vectors as added

private:
    Vec reduce(Vec v) const;
    size_t n_;
    std::vector<Vec> rows_;  // echelon rows, leading entry 1
    std::vector<size_t> lead_;
    std::vector<Vec> original_;
};

// Coordinates relative to a fixed linearly independent family, reusable for many
// targets: picks independent rows once and inverts that square block.
class CoordinateSolver {
public:
    explicit CoordinateSolver(const std::vector<Vec>& basis);
    size_t dim() const { return basis_.size(); }
    // nullopt when the target is outside the span
    std::optional<Vec> solve(const Vec& target) const;

private:
    std::vector<Vec> basis_;
    std::vector<size_t> rows_;
    Mat inv_;
};

// vector helpers
Vec zero_vec(size_t n);
Vec unit_vec(size_t n, size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Scalar& s);
void axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a x

}  // namespace finegrad
