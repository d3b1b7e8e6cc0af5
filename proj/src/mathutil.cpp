#include "textmine/mathutil.hpp"

namespace textmine {

double digamma(double x) {
    double r = 0.0;
    while (x < 6.0) {
        r -= 1.0 / x;
        x += 1.0;
    }
    double f = 1.0 / (x * x);
    double t = f * (-1.0 / 12.0 +
               f * (1.0 / 120.0 +
               f * (-1.0 / 252.0 +
               f * (1.0 / 240.0 +
               f * (-1.0 / 132.0 +
               f * (691.0 / 32760.0 +
               f * (-1.0 / 12.0)))))));
    return r + std::log(x) - 0.5 / x + t;
}

double log_sum_exp(const double* v, int n) {
    double m = v[0];
    for (int i = 1; i < n; ++i)
        if (v[i] > m) m = v[i];
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += std::exp(v[i] - m);
    return m + std::log(s);
}

} // namespace textmine
