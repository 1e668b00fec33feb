#pragma once

#include <cstdint>
#include <vector>

#include "clp/gf.hpp"
#include "clp/partition.hpp"

namespace clp {

/* Dense row-major matrix of field element codes; plenty for the tiny
 * dimensions the enumerators handle. */
struct Mat {
    int rows = 0, cols = 0;
    std::vector<std::uint8_t> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}

    std::uint8_t& at(int i, int j) { return a[size_t(i) * cols + j]; }
    std::uint8_t at(int i, int j) const { return a[size_t(i) * cols + j]; }

    static Mat identity(int n);

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

Mat mat_mul(const Field& F, const Mat& x, const Mat& y);
Mat mat_sub(const Field& F, const Mat& x, const Mat& y);
Mat transpose(const Mat& x);

int rank(const Field& F, Mat m);
inline int kernel_dim(const Field& F, const Mat& m) { return m.cols - rank(F, m); }

/* dim ker (g - 1)^j for j = 1, 2, ... until the sequence stabilizes. */
std::vector<int> nullity_sequence(const Field& F, const Mat& g);

/* Sizes of the Jordan blocks of g at the eigenvalue 1: the increments of the
 * nullity sequence form the conjugate partition. */
Partition jordan_partition_at_1(const Field& F, const Mat& g);

}  // namespace clp
