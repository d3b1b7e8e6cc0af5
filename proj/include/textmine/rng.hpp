#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace textmine {

// Seeded generator with explicit draw algorithms. std::*_distribution is
// implementation-defined, so uniform/normal/gamma are spelled out here to
// keep seeded runs reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // Uniform in (0, 1); never returns 0.
    double uniform_pos() {
        double u;
        do { u = uniform(); } while (u <= 0.0);
        return u;
    }

    // Box-Muller.
    double normal() {
        double u1 = uniform_pos();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    // Unit-scale gamma draw, Marsaglia & Tsang (2000); the shape<1 case
    // boosts via gamma(shape+1) * u^(1/shape).
    double gamma(double shape);

    // Symmetric Dirichlet of dimension n with concentration conc.
    std::vector<double> dirichlet(double conc, int n);

    // Index draw proportional to weights (need not be normalized).
    int categorical(const std::vector<double>& weights);

private:
    std::mt19937_64 gen_;
};

// Derives a substream seed from a base seed and a stream index
// (splitmix64 mix), so e.g. each topic or document gets its own stream.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace textmine
