#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "higs/tensor.hpp"

namespace higs {

/// Deterministic Gaussian generator: mt19937_64 uniforms + Box-Muller.
/// std::normal_distribution is implementation-defined, so byte-exact
/// reproducibility of runs requires rolling the transform ourselves.
class GaussianRng {
  public:
    explicit GaussianRng(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream for batch element `index` under a run seed.
    static GaussianRng for_element(std::uint64_t seed, std::uint64_t index) {
        return GaussianRng(mix(seed, index));
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0,1]: avoids log(0)
        double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
        double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    Tensor normal_tensor(const Shape& shape, double stddev = 1.0) {
        Tensor t(shape);
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = stddev * normal();
        return t;
    }

  private:
    // splitmix64 finalizer; decorrelates (seed, index) pairs
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace higs
