#include "nullcone/rng.hpp"

#include "nullcone/errors.hpp"

namespace nullcone {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr int kMaxRejects = 64;

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t SplitRng::derive(std::uint64_t master_seed, std::uint64_t index) {
    return mix(master_seed ^ (kGolden * (index + 1)));
}

std::uint64_t SplitRng::next_u64() {
    state_ += kGolden;
    return mix(state_);
}

std::int64_t SplitRng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw InvalidRequest("empty uniform range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_u64() % span);
}

GaussianRational random_scalar(SplitRng& rng, std::int64_t den) {
    Rational re(rng.uniform(-2, 2), den);
    Rational im(rng.uniform(-2, 2), den);
    re.canonicalize();
    im.canonicalize();
    return {re, im};
}

ExactMatrix random_matrix(SplitRng& rng, std::size_t rows, std::size_t cols) {
    const std::int64_t den = rng.uniform(1, 3);
    ExactMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = random_scalar(rng, den);
    }
    return m;
}

ExactMatrix random_invertible(SplitRng& rng, std::size_t n) {
    for (int attempt = 0; attempt < kMaxRejects; ++attempt) {
        ExactMatrix m = random_matrix(rng, n, n);
        if (rank(m) == n) return m;
    }
    throw SampleError("failed to sample an invertible matrix");
}

ExactMatrix random_matrix_of_rank(SplitRng& rng, std::size_t rows, std::size_t cols,
                                  std::size_t target_rank) {
    if (target_rank > rows || target_rank > cols) {
        throw RankError("requested rank exceeds matrix shape");
    }
    if (target_rank == 0) return ExactMatrix(rows, cols);
    for (int attempt = 0; attempt < kMaxRejects; ++attempt) {
        ExactMatrix left = random_matrix(rng, rows, target_rank);
        ExactMatrix right = random_matrix(rng, target_rank, cols);
        if (rank(left) < target_rank || rank(right) < target_rank) continue;
        return matmul(left, right);
    }
    throw SampleError("failed to sample a matrix of the requested rank");
}

} // namespace nullcone
