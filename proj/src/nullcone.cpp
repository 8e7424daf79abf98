#include "nullcone/nullcone.hpp"

namespace nullcone {

ExactMatrix eval_Q(const OrthSympSetting& setting, const ExactMatrix& t) {
    if (t.rows() != setting.n() || t.cols() != setting.m) {
        throw DimensionError("expected an n x m matrix");
    }
    return matmul(t.transpose(), matmul(setting.v.gram(), t));
}

ExactMatrix eval_phi(const GlSetting& setting, const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != setting.s || a.cols() != setting.n || b.rows() != setting.n ||
        b.cols() != setting.m) {
        throw DimensionError("expected shapes s x n and n x m");
    }
    return matmul(a, b);
}

bool is_null(const OrthSympSetting& setting, const ExactMatrix& t) {
    return eval_Q(setting, t).is_zero();
}

bool is_null(const GlSetting& setting, const ExactMatrix& a, const ExactMatrix& b) {
    return eval_phi(setting, a, b).is_zero();
}

bool check_equivariance(const OrthSympSetting& setting, const ExactMatrix& t,
                        const ExactMatrix& g, const ExactMatrix& h) {
    if (g.rows() != setting.n() || g.cols() != setting.n() || h.rows() != setting.m ||
        h.cols() != setting.m) {
        throw DimensionError("expected g of size n and h of size m");
    }
    const ExactMatrix q = eval_Q(setting, t);
    if (eval_Q(setting, matmul(g, t)) != q) return false;
    return eval_Q(setting, matmul(t, h)) == matmul(h.transpose(), matmul(q, h));
}

bool check_equivariance(const GlSetting& setting, const ExactMatrix& a, const ExactMatrix& b,
                        const ExactMatrix& g1, const ExactMatrix& g2, const ExactMatrix& g3) {
    const ExactMatrix phi = eval_phi(setting, a, b);
    auto g2_inv = inverse(g2);
    auto g3_inv = inverse(g3);
    if (!g2_inv || !g3_inv) throw InvalidRequest("group elements must be invertible");
    if (eval_phi(setting, matmul(a, *g2_inv), matmul(g2, b)) != phi) return false;
    const ExactMatrix lhs = eval_phi(setting, matmul(g1, a), matmul(b, *g3_inv));
    return lhs == matmul(g1, matmul(phi, *g3_inv));
}

ExactMatrix sample_null(const OrthSympSetting& setting, std::size_t target_rank, SplitRng& rng) {
    if (target_rank > setting.r()) {
        throw RankError("null points have rank at most min(m, floor(n/2))");
    }
    if (target_rank == 0) return ExactMatrix(setting.n(), setting.m);
    IsotropicSubspace u = sample_isotropic(setting.v, target_rank, rng);
    ExactMatrix coeff = random_matrix_of_rank(rng, target_rank, setting.m, target_rank);
    return matmul(u.sub().basis(), coeff);
}

GlNullPair sample_null(const GlSetting& setting, std::size_t rank_a, std::size_t rank_b,
                       SplitRng& rng) {
    if (rank_a > setting.s || rank_b > setting.m) {
        throw RankError("rank(a) <= s and rank(b) <= m are required");
    }
    // Through a flag U1 (dim m) inside U2 (dim n - s): b maps into U1 and
    // a kills U2, so a b = 0 at exactly the requested ranks.
    Flag2 flag = sample_flag2(setting.n, setting.m, setting.n - setting.s, rng);
    ExactMatrix b = matmul(flag.u1().basis(), random_matrix_of_rank(rng, setting.m, setting.m, rank_b));
    ExactMatrix ann = kernel_basis(flag.u2().basis().transpose());
    ExactMatrix a = matmul(random_matrix_of_rank(rng, setting.s, setting.s, rank_a),
                           ann.transpose());
    return {std::move(a), std::move(b)};
}

std::size_t tangent_dim_at(const OrthSympSetting& setting, const ExactMatrix& t) {
    if (!is_null(setting, t)) throw DomainError("tangent oracle expects a null point");
    const std::size_t n = setting.n();
    const std::size_t m = setting.m;
    // Equations indexed by entries of x^t G t + t^t G x; unknowns by x.
    const ExactMatrix gt = matmul(setting.v.gram(), t);
    const ExactMatrix tg = matmul(t.transpose(), setting.v.gram());
    ExactMatrix system(m * m, n * m);
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = 0; q < m; ++q) {
            const std::size_t eq = p * m + q;
            for (std::size_t k = 0; k < n; ++k) {
                system.at(eq, k * m + p) += gt.at(k, q);
                system.at(eq, k * m + q) += tg.at(p, k);
            }
        }
    }
    return n * m - rank(system);
}

std::size_t tangent_dim_at(const GlSetting& setting, const ExactMatrix& a,
                           const ExactMatrix& b) {
    if (!is_null(setting, a, b)) throw DomainError("tangent oracle expects a null point");
    const std::size_t n = setting.n;
    const std::size_t s = setting.s;
    const std::size_t m = setting.m;
    // Differential (x, y) -> x b + a y into s x m matrices.
    ExactMatrix system(s * m, s * n + n * m);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t eq = i * m + j;
            for (std::size_t k = 0; k < n; ++k) {
                system.at(eq, i * n + k) += b.at(k, j);
                system.at(eq, s * n + k * m + j) += a.at(i, k);
            }
        }
    }
    return s * n + n * m - rank(system);
}

ComponentLabel component_label_null(const OrthSympSetting& setting, const ExactMatrix& t,
                                    const IsotropicSubspace& reference) {
    if (setting.v.kind() != FormKind::symmetric || setting.n() != 2 * setting.m) {
        throw InvalidRequest("component labels need the orthogonal case with n = 2m");
    }
    Subspace image = column_space(t);
    if (image.dim() != setting.r()) {
        throw InvalidRequest("component labels need a maximal-rank null point");
    }
    return component_label(IsotropicSubspace(setting.v, image), reference);
}

} // namespace nullcone
