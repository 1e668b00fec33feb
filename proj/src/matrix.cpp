#include "clp/matrix.hpp"

#include <stdexcept>

namespace clp {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat mat_mul(const Field& F, const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            std::uint8_t v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                out.at(i, j) = F.add(out.at(i, j), F.mul(v, y.at(k, j)));
        }
    return out;
}

Mat mat_sub(const Field& F, const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("mat_sub: shape mismatch");
    Mat out(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) out.a[i] = F.sub(x.a[i], y.a[i]);
    return out;
}

Mat transpose(const Mat& x) {
    Mat out(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
    return out;
}

int rank(const Field& F, Mat m) {
    int r = 0;
    for (int col = 0; col < m.cols && r < m.rows; ++col) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pivot, j));
        std::uint8_t scale = F.inv(m.at(r, col));
        for (int j = col; j < m.cols; ++j) m.at(r, j) = F.mul(scale, m.at(r, j));
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            std::uint8_t v = m.at(i, col);
            if (v == 0) continue;
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(v, m.at(r, j)));
        }
        ++r;
    }
    return r;
}

std::vector<int> nullity_sequence(const Field& F, const Mat& g) {
    if (g.rows != g.cols) throw std::invalid_argument("nullity_sequence: square matrix required");
    Mat b = mat_sub(F, g, Mat::identity(g.rows));
    std::vector<int> dims;
    Mat power = b;
    int prev = 0;
    while (true) {
        int d = kernel_dim(F, power);
        if (d == prev) break;
        dims.push_back(d);
        prev = d;
        if (d == g.rows) break;
        power = mat_mul(F, power, b);
    }
    return dims;
}

Partition jordan_partition_at_1(const Field& F, const Mat& g) {
    std::vector<int> dims = nullity_sequence(F, g);
    std::vector<int> dual;
    int prev = 0;
    for (int d : dims) {
        dual.push_back(d - prev);
        prev = d;
    }
    return conjugate(Partition(std::move(dual)));
}

}  // namespace clp
