#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace textmine {

// x*log(x) with the convention 0*log(0) = 0.
inline double xlogx(double x) {
    return x > 0.0 ? x * std::log(x) : 0.0;
}

// Digamma via the recurrence psi(x) = psi(x+1) - 1/x and the asymptotic
// series for x >= 6 (same scheme as lda-c). Valid for x > 0.
double digamma(double x);

// log(sum(exp(v))) with max subtraction.
double log_sum_exp(const double* v, int n);

// Small dense row-major matrix. Enough for topic models at desk scale.
struct Mat {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<double> data;

    Mat() = default;
    Mat(int r, int c, double fill = 0.0)
        : n_rows(r), n_cols(c), data(static_cast<std::size_t>(r) * c, fill) {}

    double* row(int r) { return data.data() + static_cast<std::size_t>(r) * n_cols; }
    const double* row(int r) const { return data.data() + static_cast<std::size_t>(r) * n_cols; }

    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * n_cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * n_cols + c]; }

    double row_sum(int r) const {
        const double* p = row(r);
        double s = 0.0;
        for (int c = 0; c < n_cols; ++c) s += p[c];
        return s;
    }

    // Divides each row by its sum. Rows summing to zero are left untouched.
    void normalize_rows() {
        for (int r = 0; r < n_rows; ++r) {
            double s = row_sum(r);
            if (s <= 0.0) continue;
            double* p = row(r);
            for (int c = 0; c < n_cols; ++c) p[c] /= s;
        }
    }

    bool same_shape(const Mat& o) const { return n_rows == o.n_rows && n_cols == o.n_cols; }
};

} // namespace textmine
