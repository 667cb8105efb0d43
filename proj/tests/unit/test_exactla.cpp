#include "finegrad/exactla.hpp"

#include <gtest/gtest.h>

using namespace finegrad;

namespace {
Mat diag(std::vector<long> d) {
    Mat m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = Scalar(d[i]);
    return m;
}
}  // namespace

TEST(Kernel, ZeroAndIdentity) {
    EXPECT_EQ(kernel(Mat(2, 2)).size(), 2u);
    EXPECT_TRUE(kernel(Mat::identity(3)).empty());
}

TEST(Kernel, VectorsAreInKernel) {
    Scalar a = Scalar::alpha();
    Mat m = Mat::from_rows({{Scalar(1), a, Scalar(0), Scalar(2)}, {a, a * a, Scalar(1), Scalar(0)}}, 4);
    auto k = kernel(m);
    EXPECT_EQ(k.size(), 4 - rank(m));
    for (const auto& v : k) EXPECT_TRUE(is_zero(m * v));
}

TEST(Solve, Cases) {
    Vec b{Scalar(3), Scalar::alpha()};
    auto r = solve(Mat::identity(2), b);
    ASSERT_TRUE(r.consistent);
    EXPECT_EQ(r.x, b);
    EXPECT_FALSE(solve(Mat(2, 2), b).consistent);
}

TEST(Inverse, RoundTrip) {
    Scalar a = Scalar::alpha();
    Mat m = Mat::from_rows({{Scalar(1), a}, {Scalar::zeta(3), Scalar(2)}}, 2);
    EXPECT_EQ(m * inverse(m), Mat::identity(2));
    EXPECT_THROW(inverse(Mat(2, 2)), LinAlgError);
}

TEST(Coordinates, InsideAndOutside) {
    std::vector<Vec> basis{{Scalar(1), Scalar(0), Scalar(1)}, {Scalar(0), Scalar(1), Scalar(1)}};
    auto c = coordinates(basis, {{Scalar(2), Scalar(3), Scalar(5)}});
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ((*c)[0], (Vec{Scalar(2), Scalar(3)}));
    EXPECT_FALSE(coordinates(basis, {{Scalar(0), Scalar(0), Scalar(1)}}).has_value());
}

TEST(JointEigenspaces, Identity) {
    auto b = joint_eigenspaces({Mat::identity(3)}, std::vector<Scalar>{Scalar(1)});
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0].basis.size(), 3u);
}

TEST(JointEigenspaces, TwoDiagonals) {
    auto b = joint_eigenspaces({diag({1, -1}), diag({-1, 1})}, std::vector<Scalar>{Scalar(1), Scalar(-1)});
    ASSERT_EQ(b.size(), 2u);
    size_t total = 0;
    for (auto& blk : b) {
        EXPECT_EQ(blk.basis.size(), 1u);
        total += blk.basis.size();
    }
    EXPECT_EQ(total, 2u);
}

TEST(JointEigenspaces, Errors) {
    Mat x = Mat::from_rows({{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}, 2);
    EXPECT_THROW(joint_eigenspaces({x, diag({1, -1})}, std::vector<Scalar>{Scalar(1), Scalar(-1)}), LinAlgError);
    EXPECT_THROW(joint_eigenspaces({diag({1, 2})}, std::vector<Scalar>{Scalar(1)}), LinAlgError);
}

TEST(JointEigenspaces, CyclotomicEigenvalues) {
    // rotation of order 4 has eigenvalues +-i
    Mat r = Mat::from_rows({{Scalar(0), Scalar(-1)}, {Scalar(1), Scalar(0)}}, 2);
    std::vector<Scalar> cands{Scalar(1), Scalar::zeta(3), Scalar(-1), Scalar::zeta(9)};
    auto b = joint_eigenspaces({r}, cands);
    ASSERT_EQ(b.size(), 2u);
    for (auto& blk : b) EXPECT_EQ(r * blk.basis[0], scale(blk.basis[0], blk.eigenvalues[0]));
}

TEST(IncrementalSpan, ReducesAgainstAllRows) {
    IncrementalSpan s(3);
    EXPECT_TRUE(s.add({Scalar(0), Scalar(1), Scalar(1)}));
    EXPECT_TRUE(s.add({Scalar(1), Scalar(1), Scalar(0)}));
    EXPECT_FALSE(s.add({Scalar(1), Scalar(2), Scalar(1)}));
    EXPECT_TRUE(s.contains({Scalar(1), Scalar(0), Scalar(-1)}));
    EXPECT_FALSE(s.contains({Scalar(0), Scalar(0), Scalar(1)}));
    EXPECT_TRUE(s.add({Scalar(0), Scalar(0), Scalar(1)}));
    EXPECT_EQ(s.dim(), 3u);
}
