#include "textmine/rng.hpp"

#include <cmath>

namespace textmine {

double Rng::gamma(double shape) {
    if (shape < 1.0) {
        double u = uniform_pos();
        return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        double u = uniform_pos();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

std::vector<double> Rng::dirichlet(double conc, int n) {
    std::vector<double> g(n);
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        g[i] = gamma(conc);
        s += g[i];
    }
    for (int i = 0; i < n; ++i) g[i] /= s;
    return g;
}

int Rng::categorical(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double u = uniform() * total;
    double acc = 0.0;
    int last = static_cast<int>(weights.size()) - 1;
    for (int i = 0; i < last; ++i) {
        acc += weights[i];
        if (u < acc) return i;
    }
    return last;
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over (seed advanced by stream+1 increments)
    std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace textmine
