#pragma once

#include "nullcone/isotropic.hpp"

namespace nullcone {

/// Data of the orthogonal/symplectic cases: the formed space V and the
/// number of columns m; r = min(m, floor(n/2)) is derived.
struct OrthSympSetting {
    OrthSympSetting(FormedSpace space, std::size_t m_) : v(std::move(space)), m(m_) {
        if (v.dim() < 1 || m < 1) throw InvalidRequest("need n >= 1 and m >= 1");
    }

    FormedSpace v;
    std::size_t m;

    std::size_t n() const { return v.dim(); }
    std::size_t r() const { return std::min(m, v.dim() / 2); }
};

/// Data of the general linear case; the whole section assumes n >= s + m.
struct GlSetting {
    GlSetting(std::size_t n_, std::size_t s_, std::size_t m_) : n(n_), s(s_), m(m_) {
        if (n < s + m) throw InvalidRequest("the general linear case needs n >= s + m");
        if (s < 1 || m < 1) throw InvalidRequest("need s >= 1 and m >= 1");
    }

    std::size_t n;
    std::size_t s;
    std::size_t m;
};

/// t^t G t: the m x m matrix of invariant quadratics at t.
ExactMatrix eval_Q(const OrthSympSetting& setting, const ExactMatrix& t);

/// a * b: the s x m matrix of invariant contractions at (a, b).
ExactMatrix eval_phi(const GlSetting& setting, const ExactMatrix& a, const ExactMatrix& b);

bool is_null(const OrthSympSetting& setting, const ExactMatrix& t);
bool is_null(const GlSetting& setting, const ExactMatrix& a, const ExactMatrix& b);

/// Q(g t) == Q(t) and Q(t h) == h^t Q(t) h, exactly.
bool check_equivariance(const OrthSympSetting& setting, const ExactMatrix& t,
                        const ExactMatrix& g, const ExactMatrix& h);

/// phi(a g2^-1, g2 b) == phi(a, b) and phi(g1 a, b g3^-1) == g1 phi(a, b) g3^-1.
bool check_equivariance(const GlSetting& setting, const ExactMatrix& a, const ExactMatrix& b,
                        const ExactMatrix& g1, const ExactMatrix& g2, const ExactMatrix& g3);

/// Null point of exact rank `target_rank`, built through a sampled
/// isotropic subspace (no quadratic solving).
ExactMatrix sample_null(const OrthSympSetting& setting, std::size_t target_rank, SplitRng& rng);

struct GlNullPair {
    ExactMatrix a;
    ExactMatrix b;
};

/// Null pair with rank(a) = rank_a and rank(b) = rank_b, built through a
/// sampled two-step flag.
GlNullPair sample_null(const GlSetting& setting, std::size_t rank_a, std::size_t rank_b,
                       SplitRng& rng);

/// Exact kernel dimension of the differential x -> x^t G t + t^t G x at a
/// null point (scheme tangent space).
std::size_t tangent_dim_at(const OrthSympSetting& setting, const ExactMatrix& t);

/// Exact kernel dimension of (x, y) -> x b + a y at a null pair.
std::size_t tangent_dim_at(const GlSetting& setting, const ExactMatrix& a, const ExactMatrix& b);

/// Component of a maximal-rank null point in the disconnected case
/// (orthogonal, n = 2m): the label of its image subspace.
ComponentLabel component_label_null(const OrthSympSetting& setting, const ExactMatrix& t,
                                    const IsotropicSubspace& reference);

} // namespace nullcone
