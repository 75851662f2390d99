#pragma once

#include <cstdint>
#include <random>

#include "dichroma/errors.hpp"

namespace dichroma {

/// Seeded RNG with hand-rolled sampling: identical seeds give identical draws
/// everywhere (the std distributions are not portable across libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound), rejection-sampled.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw ContractViolation("empty sampling range");
        const std::uint64_t residue = (UINT64_MAX % bound + 1) % bound;
        std::uint64_t x = next();
        while (residue != 0 && x > UINT64_MAX - residue) x = next();
        return x % bound;
    }

    double real01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return real01() < p; }

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i)
            std::swap(values[i - 1], values[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace dichroma
