#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace syzlab {

/// Outcome of a seeded verification sweep. Violations are human-readable,
/// one per failed check, in deterministic order.
struct SweepResult {
    std::string suite;
    int trials = 0;
    uint64_t seed = 0;
    int checks = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Classification sweep for the maximal-Tjurina families
/// (L, C1, CL1..CL5): tau = d^2-3d+3, mdr = 1, Free(1, d-2), bounds hold.
SweepResult verify_max_tau(int trials, uint64_t seed);

/// Minimal-Tjurina families (C2, CL6): tau = d^2-3d+2, mdr = 1,
/// NearlyFree(1, d-1).
SweepResult verify_min_tau(int trials, uint64_t seed);

/// Seeded instances of all families plus fixed reference curves: the
/// degree/syzygy bounds hold for every reduced non-concurrent instance.
SweepResult verify_dpw(int trials, uint64_t seed);

/// Random coprime factored pairs: max(r1,r2) <= mdr(f1 f2) <=
/// min(r1+d2, r2+d1), and the lifted syzygy is a nonzero syzygy of the
/// product.
SweepResult verify_thm_product(int trials, uint64_t seed);

/// Eigenscheme dichotomy over the nine families: the tensor construction is
/// expected to succeed exactly on L and CL2 (and on y(x^3-y^2z)) and fail
/// with a reason elsewhere.
SweepResult verify_eigen_dichotomy(int trials, uint64_t seed);

/// Round-trip recognition: recognize(generate(tag)) = tag in normal and
/// random coordinates, and a perturbed control per tag recognizes as None.
SweepResult verify_recognizer(int trials, uint64_t seed);

/// Dispatch by suite name (max-tau, min-tau, dpw, thm-product,
/// eigen-dichotomy, recognizer); throws std::invalid_argument on an unknown
/// name.
SweepResult run_sweep(const std::string& suite, int trials, uint64_t seed);

/// Worker cap: SYZLAB_THREADS when set (>= 1), else hardware concurrency.
int thread_budget();

}  // namespace syzlab
