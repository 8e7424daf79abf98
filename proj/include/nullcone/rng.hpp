#pragma once

#include <cstdint>

#include "nullcone/exact_matrix.hpp"

namespace nullcone {

/// Deterministic splittable RNG (splitmix64 core). Identical seeds give
/// identical streams on every platform. Suites derive one independent
/// child per trial with derive(master_seed, trial_index).
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : state_(seed) {}

    /// Child seed for trial `index`: mix(master ^ golden*(index+1)).
    static std::uint64_t derive(std::uint64_t master_seed, std::uint64_t index);

    std::uint64_t next_u64();

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_;
};

/// (a + b*i)/den with a, b uniform in [-2, 2].
GaussianRational random_scalar(SplitRng& rng, std::int64_t den = 1);

/// Matrix with random_scalar entries; one denominator from {1,2,3} per matrix.
ExactMatrix random_matrix(SplitRng& rng, std::size_t rows, std::size_t cols);

/// Random invertible square matrix (bounded rejection sampling).
ExactMatrix random_invertible(SplitRng& rng, std::size_t n);

/// Random rows x cols matrix of exact rank `target_rank`.
ExactMatrix random_matrix_of_rank(SplitRng& rng, std::size_t rows, std::size_t cols,
                                  std::size_t target_rank);

} // namespace nullcone
