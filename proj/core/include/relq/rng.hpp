#pragma once

#include <cstdint>
#include <random>

namespace relq {

/// Seeded deterministic random stream. Draws bypass std::*_distribution so
/// the sequence is identical across standard library implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1). One engine draw.
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). One engine draw.
    int next_below(int n) {
        return static_cast<int>(next_unit() * n);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace relq
