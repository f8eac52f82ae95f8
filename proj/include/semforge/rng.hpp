#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace semforge {

// Stateless 64-bit mixer used to derive independent seed substreams.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic substream key: order-sensitive mix of the master seed and tags.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                    std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ (a + 0x632be59bd9b4e019ULL));
    s = splitmix64(s ^ (b + 0x9e3779b97f4a7c15ULL));
    s = splitmix64(s ^ (c + 0xd1b54a32d192ed03ULL));
    return s;
}

// Substream tags; keep values stable, they are part of the reproducibility contract.
enum class StreamTag : std::uint64_t {
    kEquation = 1,
    kStageOneColumn = 2,
    kBootstrapResample = 3,
    kBootstrapFit = 4,
    kNetworkGen = 5,
    kDatasetGen = 6,
    kExperimentCell = 7,
    kCvFolds = 8,
};

constexpr std::uint64_t derive_seed(std::uint64_t master, StreamTag tag,
                                    std::uint64_t b = 0, std::uint64_t c = 0) {
    return derive_seed(master, static_cast<std::uint64_t>(tag), b, c);
}

// mt19937_64 with explicit, engine-only transforms so draws are reproducible
// across standard libraries (std::*_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Unbiased integer on [0, n) via rejection.
    std::uint64_t uniform_int(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return x % n;
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Box-Muller without the cached spare, two uniforms per draw.
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    // Student t with integer df, built from df+1 normals.
    double student_t(int df) {
        const double z = normal();
        double chi2 = 0.0;
        for (int i = 0; i < df; ++i) {
            const double g = normal();
            chi2 += g * g;
        }
        return z / std::sqrt(chi2 / static_cast<double>(df));
    }

    // F2 genotype: 0, 1, 2 with probabilities 0.25, 0.5, 0.25.
    double f2_genotype() {
        const double u = uniform();
        if (u < 0.25) return 0.0;
        if (u < 0.75) return 1.0;
        return 2.0;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace semforge
