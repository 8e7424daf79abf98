#include "nullcone/isotropic.hpp"

#include <vector>

namespace nullcone {

namespace {

bool is_standard(const FormedSpace& space) {
    return space.form() == standard_form(space.kind(), space.dim());
}

// Gram pairing of two column vectors.
GaussianRational pair(const FormedSpace& space, const ExactMatrix& x, const ExactMatrix& y) {
    return form_eval(space, x, y);
}

// Isometry of span(x, y) extended by identity on the form-complement;
// maps x to y exactly. Needs (x, y) != 0 and x, y isotropic, so the
// plane is hyperbolic and the decomposition V = P + P^perp is direct.
ExactMatrix hyperbolic_swap(const FormedSpace& space, const ExactMatrix& x,
                            const ExactMatrix& y) {
    const std::size_t n = space.dim();
    const GaussianRational c = pair(space, x, y);
    ExactMatrix g(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        ExactMatrix v = ExactMatrix::basis_vector(n, col);
        GaussianRational a, b;
        if (space.kind() == FormKind::symmetric) {
            a = pair(space, v, y) / c;
            b = pair(space, v, x) / c;
        } else {
            a = pair(space, v, y) / c;
            b = -(pair(space, v, x) / c);
        }
        // v = (a x + b y) + v_perp; swap the plane component.
        ExactMatrix plane = a * x + b * y;
        ExactMatrix swapped = space.kind() == FormKind::symmetric ? (a * y + b * x)
                                                                  : (a * y - b * x);
        ExactMatrix image = v - plane + swapped;
        for (std::size_t row = 0; row < n; ++row) g.at(row, col) = image.at(row, 0);
    }
    return g;
}

// Vector in the column space of `candidates` pairing nontrivially with
// both x and y. Scans single columns, then a cross sum.
std::optional<ExactMatrix> pairing_witness(const FormedSpace& space, const ExactMatrix& x,
                                           const ExactMatrix& y, const ExactMatrix& candidates) {
    std::optional<ExactMatrix> hit_x, hit_y;
    for (std::size_t c = 0; c < candidates.cols(); ++c) {
        ExactMatrix w = candidates.column(c);
        const bool px = !pair(space, x, w).is_zero();
        const bool py = !pair(space, y, w).is_zero();
        if (px && py) return w;
        if (px && !hit_x) hit_x = w;
        if (py && !hit_y) hit_y = w;
    }
    if (hit_x && hit_y) return *hit_x + *hit_y;
    return std::nullopt;
}

} // namespace

IsotropicSubspace::IsotropicSubspace(FormedSpace space, Subspace sub)
    : space_(std::move(space)), sub_(std::move(sub)) {
    if (sub_.ambient_dim() != space_.dim()) {
        throw DimensionError("subspace ambient does not match the formed space");
    }
    if (!is_isotropic(space_, sub_)) throw InvalidRequest("subspace is not isotropic");
    if (sub_.dim() > max_isotropic_dim(space_)) {
        throw EmptinessError("isotropic dimension exceeds floor(n/2)");
    }
}

Flag2::Flag2(Subspace u1, Subspace u2) : u1_(std::move(u1)), u2_(std::move(u2)) {
    if (u1_.ambient_dim() != u2_.ambient_dim()) throw DimensionError("flag ambient mismatch");
    if (!u2_.contains(u1_)) throw InvalidRequest("flag steps are not nested");
}

bool is_isotropic(const FormedSpace& space, const Subspace& sub) {
    if (sub.ambient_dim() != space.dim()) {
        throw DimensionError("subspace ambient does not match the formed space");
    }
    if (sub.dim() == 0) return true;
    const ExactMatrix& b = sub.basis();
    return matmul(b.transpose(), matmul(space.gram(), b)).is_zero();
}

std::size_t max_isotropic_dim(const FormedSpace& space) {
    return space.dim() / 2;
}

std::size_t dim_isotropic_grassmannian(std::size_t n, std::size_t r, FormKind kind) {
    if (2 * r > n) throw EmptinessError("no isotropic subspaces of dimension r > n/2");
    if (kind == FormKind::symmetric) {
        return r * (2 * n - 3 * r - 1) / 2;
    }
    return r * (2 * n - 3 * r + 1) / 2;
}

long long isotropic_dim_uniform_formula(std::size_t n, std::size_t r) {
    const long long nn = static_cast<long long>(n);
    const long long rr = static_cast<long long>(r);
    return rr * (2 * nn - 3 * rr - 1) / 2;
}

std::size_t tangent_dim_isotropic_at(const IsotropicSubspace& u) {
    const std::size_t n = u.space().dim();
    const std::size_t r = u.dim();
    if (r == 0) return 0;
    // First-order deformations: C in Hom(C^r, C^n) with
    // B^t G C + C^t G B = 0; basis reparametrizations C = B M are gauge.
    const ExactMatrix btg = matmul(u.sub().basis().transpose(), u.space().gram());
    const ExactMatrix gb = matmul(u.space().gram(), u.sub().basis());
    ExactMatrix system(r * r, n * r);
    for (std::size_t p = 0; p < r; ++p) {
        for (std::size_t q = 0; q < r; ++q) {
            const std::size_t eq = p * r + q;
            for (std::size_t k = 0; k < n; ++k) {
                system.at(eq, k * r + q) += btg.at(p, k);
                system.at(eq, k * r + p) += gb.at(k, q);
            }
        }
    }
    const std::size_t solutions = n * r - rank(system);
    return solutions - r * r;
}

std::pair<ExactMatrix, ExactMatrix> hyperbolic_seed_pair(const FormedSpace& space,
                                                         std::size_t k) {
    if (!is_standard(space)) {
        throw InvalidRequest("hyperbolic seed pairs are defined for the standard forms");
    }
    const std::size_t n = space.dim();
    if (2 * k + 1 >= n && space.kind() == FormKind::symmetric) {
        throw EmptinessError("seed pair index out of range");
    }
    if (space.kind() == FormKind::symplectic && k >= n / 2) {
        throw EmptinessError("seed pair index out of range");
    }
    if (space.kind() == FormKind::symmetric) {
        // s = e_{2k} + i e_{2k+1}, s' = (e_{2k} - i e_{2k+1}) / 2: (s, s') = 1.
        ExactMatrix s(n, 1), sp(n, 1);
        s.at(2 * k, 0) = GaussianRational(1);
        s.at(2 * k + 1, 0) = GaussianRational::i();
        sp.at(2 * k, 0) = GaussianRational(Rational(1, 2));
        sp.at(2 * k + 1, 0) = GaussianRational(Rational(0), Rational(-1, 2));
        return {std::move(s), std::move(sp)};
    }
    const std::size_t p = n / 2;
    return {ExactMatrix::basis_vector(n, k), ExactMatrix::basis_vector(n, p + k)};
}

Subspace standard_isotropic_seed(const FormedSpace& space, std::size_t r) {
    if (r > max_isotropic_dim(space)) {
        throw EmptinessError("no isotropic subspaces of dimension r > n/2");
    }
    ExactMatrix basis(space.dim(), r);
    for (std::size_t k = 0; k < r; ++k) {
        ExactMatrix s = hyperbolic_seed_pair(space, k).first;
        for (std::size_t row = 0; row < space.dim(); ++row) basis.at(row, k) = s.at(row, 0);
    }
    return Subspace::span_of(space.dim(), basis);
}

IsotropicSubspace sample_isotropic(const FormedSpace& space, std::size_t r, SplitRng& rng) {
    Subspace seed = standard_isotropic_seed(space, r);
    const DetSign sign = space.kind() == FormKind::symmetric ? DetSign::any : DetSign::plus;
    ExactMatrix g = sample_isometry(space, rng, sign);
    return {space, Subspace::span_of(space.dim(), matmul(g, seed.basis()))};
}

std::size_t dim_grassmannian(std::size_t k, std::size_t n) {
    if (k > n) throw DimensionError("subspace dimension exceeds ambient");
    return k * (n - k);
}

std::size_t dim_flag2(std::size_t m, std::size_t s, std::size_t n) {
    if (m + s > n) throw DimensionError("flag dimensions exceed ambient");
    const std::size_t q = n - s - m;
    return (n * n - s * s - q * q - m * m) / 2;
}

Flag2 sample_flag2(std::size_t n, std::size_t d1, std::size_t d2, SplitRng& rng) {
    if (d1 > d2 || d2 > n) throw DimensionError("flag dimensions must satisfy d1 <= d2 <= n");
    ExactMatrix g = random_invertible(rng, n);
    Subspace u1 = column_space(g.columns(0, d1));
    Subspace u2 = column_space(g.columns(0, d2));
    return {std::move(u1), std::move(u2)};
}

char component_label_char(ComponentLabel label) {
    return label == ComponentLabel::plus ? '+' : '-';
}

ComponentLabel component_label(const IsotropicSubspace& u, const IsotropicSubspace& reference) {
    const FormedSpace& space = u.space();
    if (space.kind() != FormKind::symmetric) {
        throw InvalidRequest("component labels exist only in the orthogonal case");
    }
    if (space.dim() != 2 * u.dim()) {
        throw InvalidRequest("component labels exist only for maximal isotropics with n = 2m");
    }
    if (!(reference.space().form() == space.form()) || reference.dim() != u.dim()) {
        throw InvalidRequest("reference must be a maximal isotropic of the same space");
    }
    const std::size_t meet = subspace_intersect(u.sub(), reference.sub()).dim();
    return (u.dim() - meet) % 2 == 0 ? ComponentLabel::plus : ComponentLabel::minus;
}

ExactMatrix isometry_moving_line(const FormedSpace& space, const ExactMatrix& x,
                                 const ExactMatrix& y, const ExactMatrix& candidates) {
    if (x.is_zero() || y.is_zero()) throw InvalidRequest("cannot move the zero line");
    if (rank(hstack(x, y)) == 1) return ExactMatrix::identity(space.dim());
    if (!pair(space, x, x).is_zero() || !pair(space, y, y).is_zero()) {
        throw InvalidRequest("line transport is implemented for isotropic vectors");
    }
    const GaussianRational c = pair(space, x, y);
    if (!c.is_zero()) return hyperbolic_swap(space, x, y);
    // (x, y) = 0: route through an isotropic z with (x,z) != 0 != (y,z).
    auto w = pairing_witness(space, x, y, candidates);
    if (!w) throw InvalidRequest("candidate space pairs trivially with x or y");
    ExactMatrix z = *w;
    if (space.kind() == FormKind::symmetric) {
        // z := w - (w,w)/(2(x,w)) x is isotropic and keeps both pairings.
        const GaussianRational ww = pair(space, z, z);
        if (!ww.is_zero()) {
            z = z - ((ww / (GaussianRational(2) * pair(space, x, z))) * x);
        }
    }
    return matmul(hyperbolic_swap(space, z, y), hyperbolic_swap(space, x, z));
}

ExactMatrix steer_to_seed(const FormedSpace& space, const Subspace& u0) {
    if (!is_isotropic(space, u0)) throw InvalidRequest("steering requires an isotropic subspace");
    const std::size_t n = space.dim();
    const std::size_t k = u0.dim();
    ExactMatrix g = ExactMatrix::identity(n);
    std::vector<ExactMatrix> vecs;
    vecs.reserve(k);
    for (std::size_t j = 0; j < k; ++j) vecs.push_back(u0.basis().column(j));

    std::vector<ExactMatrix> seeds, duals;
    for (std::size_t i = 0; i < k; ++i) {
        auto [s, sp] = hyperbolic_seed_pair(space, i);
        seeds.push_back(std::move(s));
        duals.push_back(std::move(sp));
    }

    for (std::size_t i = 0; i < k; ++i) {
        // Push the remaining vectors into the complement of the placed
        // hyperbolic pairs; adding seed multiples keeps the span.
        for (std::size_t j = i; j < k; ++j) {
            for (std::size_t l = 0; l < i; ++l) {
                const GaussianRational lambda =
                    pair(space, vecs[j], duals[l]) / pair(space, seeds[l], duals[l]);
                if (!lambda.is_zero()) vecs[j] = vecs[j] - (lambda * seeds[l]);
            }
        }
        // Candidates for the auxiliary vector: everything orthogonal to the
        // placed pairs (the whole space when i = 0).
        ExactMatrix candidates = ExactMatrix::identity(n);
        if (i > 0) {
            ExactMatrix constraints(2 * i, n);
            for (std::size_t l = 0; l < i; ++l) {
                ExactMatrix rs = matmul(seeds[l].transpose(), space.gram());
                ExactMatrix rd = matmul(duals[l].transpose(), space.gram());
                for (std::size_t col = 0; col < n; ++col) {
                    constraints.at(2 * l, col) = rs.at(0, col);
                    constraints.at(2 * l + 1, col) = rd.at(0, col);
                }
            }
            candidates = kernel_basis(constraints);
        }
        ExactMatrix h = isometry_moving_line(space, vecs[i], seeds[i], candidates);
        g = matmul(h, g);
        for (std::size_t j = i; j < k; ++j) vecs[j] = matmul(h, vecs[j]);
        vecs[i] = seeds[i];
    }
    return g;
}

Subspace extend_isotropic(const FormedSpace& space, const Subspace& u0, std::size_t r) {
    return extend_isotropic_two_ways(space, u0, r).first;
}

std::pair<Subspace, Subspace> extend_isotropic_two_ways(const FormedSpace& space,
                                                        const Subspace& u0, std::size_t r) {
    if (r > max_isotropic_dim(space)) {
        throw EmptinessError("no isotropic subspaces of dimension r > n/2");
    }
    if (u0.dim() >= r) throw InvalidRequest("extension needs dim(u0) < r");
    const ExactMatrix g = steer_to_seed(space, u0);
    const ExactMatrix ginv = *inverse(g);
    const std::size_t n = space.dim();
    ExactMatrix first(n, r), second(n, r);
    for (std::size_t col = 0; col < r; ++col) {
        auto [s, sp] = hyperbolic_seed_pair(space, col);
        for (std::size_t row = 0; row < n; ++row) {
            first.at(row, col) = s.at(row, 0);
            second.at(row, col) = (col + 1 == r) ? sp.at(row, 0) : s.at(row, 0);
        }
    }
    Subspace w1 = Subspace::span_of(n, matmul(ginv, first));
    Subspace w2 = Subspace::span_of(n, matmul(ginv, second));
    return {std::move(w1), std::move(w2)};
}

} // namespace nullcone
