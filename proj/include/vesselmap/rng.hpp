#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace vmap {

/// Seeded generator with explicitly coded distributions. The standard
/// distribution objects are implementation-defined, which would break
/// byte-identical artifacts across compilers; mt19937_64 itself is exact.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t integer(std::uint64_t n) { return gen_() % n; }

    /// Standard normal via Box-Muller, one value per call.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * 3.14159265358979323846 * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace vmap
