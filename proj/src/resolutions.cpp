#include "nullcone/resolutions.hpp"

namespace nullcone {

namespace {

// Annihilator rows: full-rank matrix p with p * basis(u) = 0; a vector v
// lies in u iff p * v = 0.
ExactMatrix annihilator_rows(const Subspace& u) {
    return kernel_basis(u.basis().transpose()).transpose();
}

// Columns of hi that extend lo to a basis of hi (greedy relative
// complement; each kept column strictly increases the rank).
std::vector<ExactMatrix> relative_complement(const Subspace& lo, const Subspace& hi) {
    std::vector<ExactMatrix> picked;
    ExactMatrix acc = lo.basis();
    std::size_t current = lo.dim();
    for (std::size_t c = 0; c < hi.basis().cols(); ++c) {
        ExactMatrix candidate = hi.basis().column(c);
        ExactMatrix widened = acc.cols() == 0 ? candidate : hstack(acc, candidate);
        if (rank(widened) == current) continue;
        acc = std::move(widened);
        ++current;
        picked.push_back(hi.basis().column(c));
    }
    return picked;
}

Subspace lo_plus(const Subspace& lo, const std::vector<ExactMatrix>& extra) {
    ExactMatrix acc = lo.basis();
    for (const ExactMatrix& v : extra) acc = acc.cols() == 0 ? v : hstack(acc, v);
    return Subspace::span_of(lo.ambient_dim(), acc);
}

Subspace between(const Subspace& lo, const Subspace& hi, std::size_t d) {
    if (!hi.contains(lo)) throw InvalidRequest("bounds are not nested");
    if (lo.dim() > d || d > hi.dim()) throw InvalidRequest("no subspace of that dimension fits");
    std::vector<ExactMatrix> complement = relative_complement(lo, hi);
    complement.resize(d - lo.dim());
    return lo_plus(lo, complement);
}

// Two distinct d-dimensional subspaces between lo and hi; requires
// dim lo < d < dim hi so the choice space is positive-dimensional.
std::pair<Subspace, Subspace> two_between(const Subspace& lo, const Subspace& hi,
                                          std::size_t d) {
    if (!hi.contains(lo)) throw InvalidRequest("bounds are not nested");
    if (!(lo.dim() < d && d < hi.dim())) {
        throw InvalidRequest("the fiber direction has no freedom");
    }
    const std::vector<ExactMatrix> complement = relative_complement(lo, hi);
    const std::size_t take = d - lo.dim();
    std::vector<ExactMatrix> head(complement.begin(), complement.begin() + take);
    Subspace first = lo_plus(lo, head);
    // Swap the last chosen vector for one genuinely outside `first`; some
    // leftover complement vector must do, since dim hi > d.
    for (std::size_t j = take; j < complement.size(); ++j) {
        if (first.contains(complement[j])) continue;
        head.back() = complement[j];
        return {std::move(first), lo_plus(lo, head)};
    }
    throw InvalidRequest("complement vectors do not leave the first choice");
}

bool square_zero(const ExactMatrix& g) {
    return matmul(g, g).is_zero();
}

} // namespace

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::nc0: return "nc0";
        case Variant::nc: return "nc";
        case Variant::nc1: return "nc1";
        case Variant::nc2: return "nc2";
    }
    return "?";
}

Variant parse_variant(const std::string& name) {
    if (name == "nc0") return Variant::nc0;
    if (name == "nc") return Variant::nc;
    if (name == "nc1") return Variant::nc1;
    if (name == "nc2") return Variant::nc2;
    throw ParseError("unknown variant '" + name + "'");
}

ResolutionPointOS::ResolutionPointOS(const OrthSympSetting& setting, ExactMatrix t,
                                     IsotropicSubspace u)
    : t_(std::move(t)), u_(std::move(u)) {
    if (!is_null(setting, t_)) throw DomainError("resolution point needs a null t");
    if (u_.dim() != setting.r()) throw DimensionError("u must have dimension r");
    if (u_.space().dim() != setting.n()) throw DimensionError("u lives in the wrong space");
    if (!u_.sub().contains(column_space(t_))) {
        throw InvalidRequest("u must contain the image of t");
    }
}

ResolutionPointGL::ResolutionPointGL(const GlSetting& setting, ExactMatrix a, ExactMatrix b,
                                     Subspace u1, Subspace u2)
    : a_(std::move(a)), b_(std::move(b)), u1_(std::move(u1)), u2_(std::move(u2)) {
    if (!is_null(setting, a_, b_)) throw DomainError("resolution point needs a null pair");
    if (u1_.dim() != setting.m || u2_.dim() != setting.n - setting.s) {
        throw DimensionError("flag dimensions must be (m, n - s)");
    }
    if (!u1_.contains(column_space(b_)) || !u2_.contains(u1_) ||
        !kernel(a_).contains(u2_)) {
        throw InvalidRequest("containment chain Im b <= u1 <= u2 <= ker a fails");
    }
}

ResolutionPointGL1::ResolutionPointGL1(const GlSetting& setting, ExactMatrix a, ExactMatrix b,
                                       Subspace u)
    : a_(std::move(a)), b_(std::move(b)), u_(std::move(u)) {
    if (!is_null(setting, a_, b_)) throw DomainError("resolution point needs a null pair");
    if (u_.dim() != setting.m) throw DimensionError("u must have dimension m");
    if (!u_.contains(column_space(b_)) || !kernel(a_).contains(u_)) {
        throw InvalidRequest("containment chain Im b <= u <= ker a fails");
    }
}

ResolutionPointGL2::ResolutionPointGL2(const GlSetting& setting, ExactMatrix a, ExactMatrix b,
                                       Subspace u)
    : a_(std::move(a)), b_(std::move(b)), u_(std::move(u)) {
    if (!is_null(setting, a_, b_)) throw DomainError("resolution point needs a null pair");
    if (u_.dim() != setting.n - setting.s) throw DimensionError("u must have dimension n - s");
    if (!u_.contains(column_space(b_)) || !kernel(a_).contains(u_)) {
        throw InvalidRequest("containment chain Im b <= u <= ker a fails");
    }
}

const ExactMatrix& mu(const ResolutionPointOS& p) {
    return p.t();
}
GlNullPair mu(const ResolutionPointGL& p) {
    return {p.a(), p.b()};
}
GlNullPair mu(const ResolutionPointGL1& p) {
    return {p.a(), p.b()};
}
GlNullPair mu(const ResolutionPointGL2& p) {
    return {p.a(), p.b()};
}

ResolutionPointOS unique_preimage(const OrthSympSetting& setting, const ExactMatrix& t) {
    if (!is_null(setting, t)) throw DomainError("unique preimage needs a null point");
    if (rank(t) < setting.r()) {
        throw NotUniqueError("fiber over a rank-deficient point is not a single point");
    }
    Subspace image = column_space(t);
    return {setting, t, IsotropicSubspace(setting.v, std::move(image))};
}

ResolutionPointGL unique_preimage(const GlSetting& setting, const ExactMatrix& a,
                                  const ExactMatrix& b) {
    if (!is_null(setting, a, b)) throw DomainError("unique preimage needs a null pair");
    if (rank(b) < setting.m || rank(a) < setting.s) {
        throw NotUniqueError("fiber over a rank-deficient pair is not a single point");
    }
    return {setting, a, b, column_space(b), kernel(a)};
}

ResolutionPointGL1 unique_preimage_gl1(const GlSetting& setting, const ExactMatrix& a,
                                       const ExactMatrix& b) {
    if (!is_null(setting, a, b)) throw DomainError("unique preimage needs a null pair");
    if (rank(b) < setting.m) {
        throw NotUniqueError("fiber over a rank-deficient pair is not a single point");
    }
    return {setting, a, b, column_space(b)};
}

ResolutionPointGL2 unique_preimage_gl2(const GlSetting& setting, const ExactMatrix& a,
                                       const ExactMatrix& b) {
    if (!is_null(setting, a, b)) throw DomainError("unique preimage needs a null pair");
    if (rank(a) < setting.s) {
        throw NotUniqueError("fiber over a rank-deficient pair is not a single point");
    }
    return {setting, a, b, kernel(a)};
}

std::pair<ResolutionPointOS, ResolutionPointOS> fiber_witnesses(const OrthSympSetting& setting,
                                                                const ExactMatrix& t) {
    if (!is_null(setting, t)) throw DomainError("fiber witnesses need a null point");
    Subspace image = column_space(t);
    if (image.dim() >= setting.r()) throw InvalidRequest("point has a unique preimage");
    auto [w1, w2] = extend_isotropic_two_ways(setting.v, image, setting.r());
    return {ResolutionPointOS(setting, t, IsotropicSubspace(setting.v, w1)),
            ResolutionPointOS(setting, t, IsotropicSubspace(setting.v, w2))};
}

std::pair<ResolutionPointGL, ResolutionPointGL> fiber_witnesses(const GlSetting& setting,
                                                                const ExactMatrix& a,
                                                                const ExactMatrix& b) {
    if (!is_null(setting, a, b)) throw DomainError("fiber witnesses need a null pair");
    const Subspace im_b = column_space(b);
    const Subspace ker_a = kernel(a);
    const std::size_t m = setting.m;
    const std::size_t d2 = setting.n - setting.s;
    if (im_b.dim() >= m && ker_a.dim() <= d2) {
        throw InvalidRequest("pair has a unique preimage");
    }
    // Vary u1 below a fixed u2, else vary u2 above a fixed u1, else vary
    // the collapsed middle subspace.
    if (im_b.dim() < m && m < d2) {
        Subspace u2 = between(im_b, ker_a, d2);
        auto [x, y] = two_between(im_b, u2, m);
        return {ResolutionPointGL(setting, a, b, x, u2),
                ResolutionPointGL(setting, a, b, y, u2)};
    }
    if (m < d2 && d2 < ker_a.dim()) {
        Subspace u1 = between(im_b, ker_a, m);
        auto [x, y] = two_between(u1, ker_a, d2);
        return {ResolutionPointGL(setting, a, b, u1, x),
                ResolutionPointGL(setting, a, b, u1, y)};
    }
    if (m == d2 && im_b.dim() < m && m < ker_a.dim()) {
        auto [x, y] = two_between(im_b, ker_a, m);
        return {ResolutionPointGL(setting, a, b, x, x),
                ResolutionPointGL(setting, a, b, y, y)};
    }
    throw InvalidRequest("the fiber over this pair is a single point");
}

std::pair<ResolutionPointGL1, ResolutionPointGL1> fiber_witnesses_gl1(const GlSetting& setting,
                                                                      const ExactMatrix& a,
                                                                      const ExactMatrix& b) {
    if (!is_null(setting, a, b)) throw DomainError("fiber witnesses need a null pair");
    auto [x, y] = two_between(column_space(b), kernel(a), setting.m);
    return {ResolutionPointGL1(setting, a, b, x), ResolutionPointGL1(setting, a, b, y)};
}

std::pair<ResolutionPointGL2, ResolutionPointGL2> fiber_witnesses_gl2(const GlSetting& setting,
                                                                      const ExactMatrix& a,
                                                                      const ExactMatrix& b) {
    if (!is_null(setting, a, b)) throw DomainError("fiber witnesses need a null pair");
    auto [x, y] = two_between(column_space(b), kernel(a), setting.n - setting.s);
    return {ResolutionPointGL2(setting, a, b, x), ResolutionPointGL2(setting, a, b, y)};
}

std::size_t fiber_dim(const OrthSympSetting& setting) {
    return setting.m * setting.r();
}

std::size_t fiber_dim(Variant variant, const GlSetting& setting) {
    const std::size_t n = setting.n, s = setting.s, m = setting.m;
    switch (variant) {
        case Variant::nc: return s * s + m * m;
        case Variant::nc1: return m * m + s * (n - m);
        case Variant::nc2: return m * (n - s) + s * s;
        case Variant::nc0: break;
    }
    throw InvalidRequest("nc0 is not a general linear variant");
}

std::size_t dim_resolution_total(const OrthSympSetting& setting) {
    return fiber_dim(setting) +
           dim_isotropic_grassmannian(setting.n(), setting.r(), setting.v.kind());
}

std::size_t dim_resolution_total(Variant variant, const GlSetting& setting) {
    const std::size_t n = setting.n, s = setting.s, m = setting.m;
    switch (variant) {
        case Variant::nc: return dim_flag2(m, s, n) + fiber_dim(variant, setting);
        case Variant::nc1: return dim_grassmannian(m, n) + fiber_dim(variant, setting);
        case Variant::nc2: return dim_grassmannian(n - s, n) + fiber_dim(variant, setting);
        case Variant::nc0: break;
    }
    throw InvalidRequest("nc0 is not a general linear variant");
}

std::size_t fiber_dim_oracle(const OrthSympSetting& setting, const Subspace& u) {
    const std::size_t n = setting.n(), m = setting.m;
    const ExactMatrix p = annihilator_rows(u);
    // Unknowns: entries of t (n x m); equations: p * t = 0.
    ExactMatrix system(p.rows() * m, n * m);
    for (std::size_t e = 0; e < p.rows(); ++e) {
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                system.at(e * m + j, k * m + j) = p.at(e, k);
            }
        }
    }
    return n * m - rank(system);
}

std::size_t fiber_dim_oracle(const GlSetting& setting, const Subspace& u1, const Subspace& u2) {
    const std::size_t n = setting.n, s = setting.s, m = setting.m;
    const ExactMatrix p1 = annihilator_rows(u1);
    const ExactMatrix b2 = u2.basis();
    // Unknowns: a (s x n) then b (n x m). Constraints: a * b2 = 0, p1 * b = 0.
    const std::size_t eqs = s * b2.cols() + p1.rows() * m;
    ExactMatrix system(eqs, s * n + n * m);
    std::size_t eq = 0;
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < b2.cols(); ++j, ++eq) {
            for (std::size_t k = 0; k < n; ++k) system.at(eq, i * n + k) = b2.at(k, j);
        }
    }
    for (std::size_t e = 0; e < p1.rows(); ++e) {
        for (std::size_t j = 0; j < m; ++j, ++eq) {
            for (std::size_t k = 0; k < n; ++k) system.at(eq, s * n + k * m + j) = p1.at(e, k);
        }
    }
    return s * n + n * m - rank(system);
}

std::size_t orbit_fiber_dim_oracle(std::size_t n, const Subspace& image_bound,
                                   const Subspace& kernel_bound) {
    const ExactMatrix p = annihilator_rows(image_bound);
    const ExactMatrix c = kernel_bound.basis();
    // Unknowns: g (n x n). Constraints: p * g = 0 and g * c = 0.
    ExactMatrix system(p.rows() * n + n * c.cols(), n * n);
    std::size_t eq = 0;
    for (std::size_t e = 0; e < p.rows(); ++e) {
        for (std::size_t j = 0; j < n; ++j, ++eq) {
            for (std::size_t k = 0; k < n; ++k) system.at(eq, k * n + j) = p.at(e, k);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < c.cols(); ++j, ++eq) {
            for (std::size_t k = 0; k < n; ++k) system.at(eq, i * n + k) = c.at(k, j);
        }
    }
    return n * n - rank(system);
}

FormedSpace opposite_standard_space(const OrthSympSetting& setting) {
    const FormKind opposite = setting.v.kind() == FormKind::symmetric ? FormKind::symplectic
                                                                      : FormKind::symmetric;
    return standard_space(opposite, setting.m);
}

namespace {

void require_quotient_setting(const OrthSympSetting& setting, const FormedSpace& w) {
    if (w.dim() != setting.m) throw InvalidRequest("w must have dimension m");
    if (w.kind() == setting.v.kind()) throw InvalidRequest("w must carry the opposite kind");
    if (setting.n() < 2 * setting.m) throw InvalidRequest("the quotient setting needs n >= 2m");
    if (setting.v.kind() == FormKind::symmetric && setting.m % 2 != 0) {
        throw InvalidRequest("the orthogonal quotient setting needs even m");
    }
}

} // namespace

ExactMatrix quotient_R(const OrthSympSetting& setting, const ExactMatrix& t,
                       const FormedSpace& w) {
    require_quotient_setting(setting, w);
    if (t.rows() != setting.n() || t.cols() != setting.m) {
        throw DimensionError("expected an n x m matrix");
    }
    return matmul(t, adjoint(t, w, setting.v));
}

ExactMatrix quotient_Qtilde(const OrthSympSetting& setting, const ExactMatrix& t,
                            const FormedSpace& w) {
    require_quotient_setting(setting, w);
    if (t.rows() != setting.n() || t.cols() != setting.m) {
        throw DimensionError("expected an n x m matrix");
    }
    return matmul(adjoint(t, w, setting.v), t);
}

ExactMatrix quotient_BA(const GlSetting& setting, const ExactMatrix& a, const ExactMatrix& b) {
    if (setting.s != setting.m) throw InvalidRequest("the quotient map needs s = m");
    if (a.rows() != setting.s || a.cols() != setting.n || b.rows() != setting.n ||
        b.cols() != setting.m) {
        throw DimensionError("expected shapes s x n and n x m");
    }
    return matmul(b, a);
}

bool in_orbit_closure_os(const FormedSpace& space, const ExactMatrix& g, std::size_t m) {
    if (g.rows() != space.dim() || g.cols() != space.dim()) {
        throw DimensionError("expected an n x n matrix");
    }
    return in_lie_algebra(space, g) && rank(g) <= m &&
           is_isotropic(space, column_space(g));
}

bool in_orbit_closure_gl(const ExactMatrix& g, std::size_t m) {
    if (!g.is_square()) throw DimensionError("expected a square matrix");
    return square_zero(g) && rank(g) <= m;
}

OrbitPointOS::OrbitPointOS(const FormedSpace& space, std::size_t m, ExactMatrix g,
                           IsotropicSubspace u)
    : g_(std::move(g)), u_(std::move(u)) {
    if (!in_orbit_closure_os(space, g_, m)) {
        throw DomainError("g is not in the orbit closure");
    }
    if (u_.dim() != m) throw DimensionError("u must have dimension m");
    if (!u_.sub().contains(column_space(g_))) {
        throw InvalidRequest("u must contain the image of g");
    }
}

OrbitPointGL::OrbitPointGL(std::size_t n, std::size_t m, ExactMatrix g, Subspace u1, Subspace u2)
    : g_(std::move(g)), u1_(std::move(u1)), u2_(std::move(u2)) {
    if (g_.rows() != n || !in_orbit_closure_gl(g_, m)) {
        throw DomainError("g is not in the orbit closure");
    }
    if (u1_.dim() != m || u2_.dim() != n - m) {
        throw DimensionError("flag dimensions must be (m, n - m)");
    }
    if (!u1_.contains(column_space(g_)) || !u2_.contains(u1_) ||
        !kernel(g_).contains(u2_)) {
        throw InvalidRequest("containment chain Im g <= u1 <= u2 <= ker g fails");
    }
}

OrbitPointGL1::OrbitPointGL1(std::size_t n, std::size_t m, ExactMatrix g, Subspace u)
    : g_(std::move(g)), u_(std::move(u)) {
    if (g_.rows() != n || !in_orbit_closure_gl(g_, m)) {
        throw DomainError("g is not in the orbit closure");
    }
    if (u_.dim() != m) throw DimensionError("u must have dimension m");
    if (!u_.contains(column_space(g_)) || !kernel(g_).contains(u_)) {
        throw InvalidRequest("containment chain Im g <= u <= ker g fails");
    }
}

OrbitPointGL2::OrbitPointGL2(std::size_t n, std::size_t m, ExactMatrix g, Subspace u)
    : g_(std::move(g)), u_(std::move(u)) {
    if (g_.rows() != n || !in_orbit_closure_gl(g_, m)) {
        throw DomainError("g is not in the orbit closure");
    }
    if (u_.dim() != n - m) throw DimensionError("u must have dimension n - m");
    if (!u_.contains(column_space(g_)) || !kernel(g_).contains(u_)) {
        throw InvalidRequest("containment chain Im g <= u <= ker g fails");
    }
}

OrbitPointOS orbit_unique_preimage(const FormedSpace& space, const ExactMatrix& g,
                                   std::size_t m) {
    if (!in_orbit_closure_os(space, g, m)) throw DomainError("g is not in the orbit closure");
    if (rank(g) < m) throw NotUniqueError("fiber over a rank-deficient g is not forced");
    return {space, m, g, IsotropicSubspace(space, column_space(g))};
}

OrbitPointGL orbit_unique_preimage_gl(std::size_t n, std::size_t m, const ExactMatrix& g) {
    if (g.rows() != n || !in_orbit_closure_gl(g, m)) {
        throw DomainError("g is not in the orbit closure");
    }
    if (rank(g) < m) throw NotUniqueError("fiber over a rank-deficient g is not forced");
    return {n, m, g, column_space(g), kernel(g)};
}

OrbitPointGL1 orbit_unique_preimage_gl1(std::size_t n, std::size_t m, const ExactMatrix& g) {
    if (g.rows() != n || !in_orbit_closure_gl(g, m)) {
        throw DomainError("g is not in the orbit closure");
    }
    if (rank(g) < m) throw NotUniqueError("fiber over a rank-deficient g is not forced");
    return {n, m, g, column_space(g)};
}

OrbitPointGL2 orbit_unique_preimage_gl2(std::size_t n, std::size_t m, const ExactMatrix& g) {
    if (g.rows() != n || !in_orbit_closure_gl(g, m)) {
        throw DomainError("g is not in the orbit closure");
    }
    if (rank(g) < m) throw NotUniqueError("fiber over a rank-deficient g is not forced");
    return {n, m, g, kernel(g)};
}

std::pair<OrbitPointOS, OrbitPointOS> orbit_fiber_witnesses(const FormedSpace& space,
                                                            const ExactMatrix& g,
                                                            std::size_t m) {
    if (!in_orbit_closure_os(space, g, m)) throw DomainError("g is not in the orbit closure");
    Subspace image = column_space(g);
    if (image.dim() >= m) throw InvalidRequest("interior points have a unique preimage");
    auto [w1, w2] = extend_isotropic_two_ways(space, image, m);
    return {OrbitPointOS(space, m, g, IsotropicSubspace(space, w1)),
            OrbitPointOS(space, m, g, IsotropicSubspace(space, w2))};
}

std::pair<OrbitPointGL1, OrbitPointGL1> orbit_fiber_witnesses_gl1(std::size_t n, std::size_t m,
                                                                  const ExactMatrix& g) {
    if (g.rows() != n || !in_orbit_closure_gl(g, m)) {
        throw DomainError("g is not in the orbit closure");
    }
    auto [x, y] = two_between(column_space(g), kernel(g), m);
    return {OrbitPointGL1(n, m, g, x), OrbitPointGL1(n, m, g, y)};
}

ResolutionPointOS sample_resolution(const OrthSympSetting& setting, std::size_t rank,
                                    SplitRng& rng) {
    if (rank > setting.r()) throw RankError("rank exceeds min(m, floor(n/2))");
    IsotropicSubspace u = sample_isotropic(setting.v, setting.r(), rng);
    ExactMatrix coeff = random_matrix_of_rank(rng, setting.r(), setting.m, rank);
    ExactMatrix t = matmul(u.sub().basis(), coeff);
    return {setting, std::move(t), std::move(u)};
}

ResolutionPointGL sample_resolution(const GlSetting& setting, std::size_t rank_a,
                                    std::size_t rank_b, SplitRng& rng) {
    if (rank_a > setting.s || rank_b > setting.m) {
        throw RankError("rank(a) <= s and rank(b) <= m are required");
    }
    Flag2 flag = sample_flag2(setting.n, setting.m, setting.n - setting.s, rng);
    ExactMatrix b = matmul(flag.u1().basis(),
                           random_matrix_of_rank(rng, setting.m, setting.m, rank_b));
    ExactMatrix ann = kernel_basis(flag.u2().basis().transpose());
    ExactMatrix a = matmul(random_matrix_of_rank(rng, setting.s, setting.s, rank_a),
                           ann.transpose());
    return {setting, std::move(a), std::move(b), flag.u1(), flag.u2()};
}

bool check_diagram(const OrthSympSetting& setting, const ResolutionPointOS& point,
                   const FormedSpace& w) {
    // Down the left: the induced orbit point (t t*, u); its validity is
    // the commutativity content. Then both composite routes to the
    // closure must agree on the nose.
    const ExactMatrix g = quotient_R(setting, mu(point), w);
    try {
        OrbitPointOS induced(setting.v, setting.m, g, point.u());
        return induced.g() == quotient_R(setting, point.t(), w);
    } catch (const Error&) {
        return false;
    }
}

bool check_diagram(const GlSetting& setting, const ResolutionPointGL& point) {
    const GlNullPair base = mu(point);
    const ExactMatrix g = quotient_BA(setting, base.a, base.b);
    try {
        OrbitPointGL induced(setting.n, setting.m, g, point.u1(), point.u2());
        return induced.g() == quotient_BA(setting, point.a(), point.b());
    } catch (const Error&) {
        return false;
    }
}

bool check_diagram(const GlSetting& setting, const ResolutionPointGL1& point) {
    const GlNullPair base = mu(point);
    const ExactMatrix g = quotient_BA(setting, base.a, base.b);
    try {
        OrbitPointGL1 induced(setting.n, setting.m, g, point.u());
        return induced.g() == quotient_BA(setting, point.a(), point.b());
    } catch (const Error&) {
        return false;
    }
}

bool check_diagram(const GlSetting& setting, const ResolutionPointGL2& point) {
    const GlNullPair base = mu(point);
    const ExactMatrix g = quotient_BA(setting, base.a, base.b);
    try {
        OrbitPointGL2 induced(setting.n, setting.m, g, point.u());
        return induced.g() == quotient_BA(setting, point.a(), point.b());
    } catch (const Error&) {
        return false;
    }
}

bool check_q_triangle(const GlSetting& setting, const ResolutionPointGL& point) {
    try {
        ResolutionPointGL1 q1(setting, point.a(), point.b(), point.u1());
        ResolutionPointGL2 q2(setting, point.a(), point.b(), point.u2());
        const GlNullPair via1 = mu(q1);
        const GlNullPair via2 = mu(q2);
        const GlNullPair direct = mu(point);
        return via1.a == direct.a && via1.b == direct.b && via2.a == direct.a &&
               via2.b == direct.b;
    } catch (const Error&) {
        return false;
    }
}

bool f0_nilpotency_check(const FormedSpace& space, const ExactMatrix& g,
                         const IsotropicSubspace& u) {
    if (g.rows() != space.dim() || g.cols() != space.dim()) {
        throw DimensionError("expected an n x n matrix");
    }
    return matmul(g, u.sub().basis()).is_zero() && square_zero(g);
}

ComponentLabel very_even_split(const FormedSpace& space, const ExactMatrix& g, std::size_t m,
                               const IsotropicSubspace& reference) {
    if (space.kind() != FormKind::symmetric || space.dim() != 2 * m) {
        throw InvalidRequest("the very even case needs the orthogonal kind and n = 2m");
    }
    Subspace image = column_space(g);
    if (image.dim() != m) throw InvalidRequest("the very even split needs rank g = m");
    return component_label(IsotropicSubspace(space, std::move(image)), reference);
}

} // namespace nullcone
