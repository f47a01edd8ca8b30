#pragma once

#include <cstdint>
#include <stdexcept>

namespace syzlab {

/// Deterministic splittable generator (splitmix64 core). Identical seeds give
/// identical streams on every platform; split() derives independent
/// sub-streams so parallel and serial sweeps agree.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Sub-generator for (this stream, index); stable under call order.
    Rng split(uint64_t index) const {
        Rng probe(state_ ^ (0x9E3779B97F4A7C15ull * (index + 1)));
        return Rng(probe.next());
    }

    /// Uniform integer in [lo, hi], inclusive, by rejection.
    long uniform(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % span + 1) % span;
        uint64_t v;
        do {
            v = next();
        } while (v > limit);
        return lo + static_cast<long>(v % span);
    }

    bool coin() { return (next() & 1) != 0; }

private:
    uint64_t state_;
};

}  // namespace syzlab
