#include <doctest.h>

#include "nullcone/resolutions.hpp"

using namespace nullcone;

namespace {

const GaussianRational kI = GaussianRational::i();

OrthSympSetting orth(std::size_t n, std::size_t m) {
    return {standard_space(FormKind::symmetric, n), m};
}

OrthSympSetting symp(std::size_t n, std::size_t m) {
    return {standard_space(FormKind::symplectic, n), m};
}

// Columns (1, i, 0, 0) and (0, 0, 1, i): the maximal-rank null point used
// throughout the worked examples.
ExactMatrix paired_null_42() {
    ExactMatrix t(4, 2);
    t.at(0, 0) = GaussianRational(1);
    t.at(1, 0) = kI;
    t.at(2, 1) = GaussianRational(1);
    t.at(3, 1) = kI;
    return t;
}

} // namespace

TEST_CASE("forgetful projection and unique preimage round trips") {
    SplitRng rng(401);
    OrthSympSetting o = orth(6, 2);
    for (int trial = 0; trial < 5; ++trial) {
        ExactMatrix t = sample_null(o, 2, rng);
        ResolutionPointOS point = unique_preimage(o, t);
        CHECK(mu(point) == t);
        CHECK(point.u().sub() == column_space(t));
        CHECK(unique_preimage(o, mu(point)) == point);
    }

    GlSetting gl(5, 2, 2);
    for (int trial = 0; trial < 5; ++trial) {
        auto [a, b] = sample_null(gl, 2, 2, rng);
        ResolutionPointGL point = unique_preimage(gl, a, b);
        CHECK(point.u1() == column_space(b));
        CHECK(point.u2() == kernel(a));
        CHECK(unique_preimage(gl, a, b) == point);
        ResolutionPointGL1 one = unique_preimage_gl1(gl, a, b);
        CHECK(one.u() == column_space(b));
        ResolutionPointGL2 two = unique_preimage_gl2(gl, a, b);
        CHECK(two.u() == kernel(a));
    }
}

TEST_CASE("the forced preimage in the smallest general linear case") {
    GlSetting gl(2, 1, 1);
    ExactMatrix a(1, 2), b(2, 1);
    a.at(0, 0) = GaussianRational(1);
    b.at(1, 0) = GaussianRational(1);
    ResolutionPointGL point = unique_preimage(gl, a, b);
    Subspace e2 = column_space(ExactMatrix::basis_vector(2, 1));
    CHECK(point.u1() == e2);
    CHECK(point.u2() == e2);
}

TEST_CASE("rank-deficient points raise the not-unique error with two witnesses") {
    SplitRng rng(409);
    OrthSympSetting o = orth(4, 2);
    ExactMatrix t = sample_null(o, 1, rng);
    CHECK_THROWS_AS(unique_preimage(o, t), NotUniqueError);
    auto [w1, w2] = fiber_witnesses(o, t);
    CHECK(!(w1 == w2));
    CHECK(mu(w1) == t);
    CHECK(mu(w2) == t);

    CHECK_THROWS_AS(unique_preimage(GlSetting(2, 1, 1), ExactMatrix(1, 2), ExactMatrix(2, 1)),
                    NotUniqueError);

    GlSetting gl(5, 2, 2);
    auto [a, b] = sample_null(gl, 2, 1, rng);
    CHECK_THROWS_AS(unique_preimage(gl, a, b), NotUniqueError);
    auto [g1, g2] = fiber_witnesses(gl, a, b);
    CHECK(!(g1 == g2));
    auto [h1, h2] = fiber_witnesses_gl1(gl, a, b);
    CHECK(!(h1 == h2));
    auto [ka, kb] = sample_null(gl, 1, 2, rng);
    auto [k1, k2] = fiber_witnesses_gl2(gl, ka, kb);
    CHECK(!(k1 == k2));
}

TEST_CASE("fiber witnesses stay distinct when complement columns collide modulo the image") {
    // Im b = span(e1 + e2) sits diagonally inside ker a = span(e1, e2, e3),
    // so the first two completion candidates give the same extension; the
    // witness pair must still come out distinct.
    GlSetting gl(4, 1, 2);
    ExactMatrix b(4, 2);
    b.at(0, 0) = GaussianRational(1);
    b.at(1, 0) = GaussianRational(1);
    b.at(0, 1) = GaussianRational(2);
    b.at(1, 1) = GaussianRational(2);
    ExactMatrix a(1, 4);
    a.at(0, 3) = GaussianRational(1);
    REQUIRE(is_null(gl, a, b));
    auto [w1, w2] = fiber_witnesses_gl1(gl, a, b);
    CHECK(!(w1 == w2));
    CHECK(w1.u().contains(column_space(b)));
    CHECK(w2.u().contains(column_space(b)));
}

TEST_CASE("fiber dimensions: formulas and totals") {
    OrthSympSetting o42 = orth(4, 2);
    CHECK(fiber_dim(o42) == 4);
    CHECK(dim_resolution_total(o42) == 5);

    GlSetting gl211(2, 1, 1);
    CHECK(dim_resolution_total(Variant::nc, gl211) == 3);

    // The symplectic total through the per-kind isotropic dimension:
    // mr + dim J_1(C^2) = 1 + 1.
    OrthSympSetting s21 = symp(2, 1);
    CHECK(dim_resolution_total(s21) == 2);

    GlSetting gl522(5, 2, 2);
    for (Variant v : {Variant::nc, Variant::nc1, Variant::nc2}) {
        CHECK(dim_resolution_total(v, gl522) == 16);
    }
}

TEST_CASE("fiber dimension oracles agree with the bundle formulas") {
    SplitRng rng(419);
    OrthSympSetting o = orth(5, 2);
    IsotropicSubspace u = sample_isotropic(o.v, 2, rng);
    CHECK(fiber_dim_oracle(o, u.sub()) == fiber_dim(o));

    GlSetting gl(5, 2, 2);
    Flag2 flag = sample_flag2(5, 2, 3, rng);
    CHECK(fiber_dim_oracle(gl, flag.u1(), flag.u2()) == fiber_dim(Variant::nc, gl));
}

TEST_CASE("tangent oracle equals the resolution total at maximal-rank points") {
    SplitRng rng(421);
    struct Cell {
        FormKind kind;
        std::size_t n, m;
    };
    const Cell cells[] = {{FormKind::symmetric, 4, 2}, {FormKind::symmetric, 5, 2},
                          {FormKind::symmetric, 2, 2}, {FormKind::symplectic, 4, 2},
                          {FormKind::symplectic, 6, 3}};
    for (const Cell& cell : cells) {
        OrthSympSetting setting(standard_space(cell.kind, cell.n), cell.m);
        for (int trial = 0; trial < 3; ++trial) {
            ExactMatrix t = sample_null(setting, setting.r(), rng);
            CHECK(tangent_dim_at(setting, t) == dim_resolution_total(setting));
        }
    }
    GlSetting gl(4, 2, 2);
    auto [a, b] = sample_null(gl, 2, 2, rng);
    CHECK(tangent_dim_at(gl, a, b) == dim_resolution_total(Variant::nc, gl));
}

TEST_CASE("the worked quotient example") {
    OrthSympSetting o = orth(4, 2);
    FormedSpace w = opposite_standard_space(o);
    CHECK(w.kind() == FormKind::symplectic);
    ExactMatrix t = paired_null_42();
    ExactMatrix g = quotient_R(o, t, w);

    // Exact value computed by hand from t t* with t* = -J t^t.
    ExactMatrix expected{{GaussianRational(0), GaussianRational(0), GaussianRational(-1), -kI},
                         {GaussianRational(0), GaussianRational(0), -kI, GaussianRational(1)},
                         {GaussianRational(1), kI, GaussianRational(0), GaussianRational(0)},
                         {kI, GaussianRational(-1), GaussianRational(0), GaussianRational(0)}};
    CHECK(g == expected);
    CHECK(g.transpose() == -g);
    CHECK(rank(g) == 2);
    CHECK(matmul(g, g).is_zero());
    CHECK(column_space(g) == column_space(t));
    CHECK(in_orbit_closure_os(o.v, g, 2));

    CHECK(quotient_Qtilde(o, t, w).is_zero());
    CHECK(quotient_R(o, ExactMatrix(4, 2), w).is_zero());
}

TEST_CASE("quotient preconditions") {
    OrthSympSetting o = orth(4, 2);
    CHECK_THROWS_AS(quotient_R(o, paired_null_42(), standard_space(FormKind::symmetric, 2)),
                    InvalidRequest);
    OrthSympSetting odd_m = orth(6, 3);
    CHECK_THROWS_AS(
        quotient_R(odd_m, ExactMatrix(6, 3), standard_space(FormKind::symplectic, 3)),
        ParityError);
    OrthSympSetting small_n = orth(3, 2);
    CHECK_THROWS_AS(
        quotient_R(small_n, ExactMatrix(3, 2), standard_space(FormKind::symplectic, 2)),
        InvalidRequest);
    GlSetting unbalanced(5, 3, 2);
    CHECK_THROWS_AS(quotient_BA(unbalanced, ExactMatrix(3, 5), ExactMatrix(5, 2)),
                    InvalidRequest);
}

TEST_CASE("zero fibers of the two quotient routes coincide") {
    SplitRng rng(431);
    OrthSympSetting o = symp(4, 2);
    FormedSpace w = opposite_standard_space(o);
    for (int trial = 0; trial < 10; ++trial) {
        ExactMatrix probe =
            trial % 2 == 0 ? sample_null(o, 2, rng) : random_matrix(rng, 4, 2);
        CHECK(is_null(o, probe) == quotient_Qtilde(o, probe, w).is_zero());
    }
}

TEST_CASE("quotient of the smallest pair lands on the expected matrix") {
    GlSetting gl(2, 1, 1);
    ExactMatrix a(1, 2), b(2, 1);
    a.at(0, 0) = GaussianRational(1);
    b.at(1, 0) = GaussianRational(1);
    ExactMatrix g = quotient_BA(gl, a, b);
    CHECK(g == ExactMatrix{{GaussianRational(0), GaussianRational(0)},
                           {GaussianRational(1), GaussianRational(0)}});
    CHECK(in_orbit_closure_gl(g, 1));
}

TEST_CASE("closure membership rejects a larger Jordan block") {
    ExactMatrix jordan3(3, 3);
    jordan3.at(1, 0) = GaussianRational(1);
    jordan3.at(2, 1) = GaussianRational(1);
    CHECK(!in_orbit_closure_gl(jordan3, 1));
    CHECK(in_orbit_closure_gl(ExactMatrix(3, 3), 1));
}

TEST_CASE("orbit unique preimages are the forced subspaces") {
    GlSetting gl(2, 1, 1);
    ExactMatrix g{{GaussianRational(0), GaussianRational(0)},
                  {GaussianRational(1), GaussianRational(0)}};
    Subspace e2 = column_space(ExactMatrix::basis_vector(2, 1));
    OrbitPointGL point = orbit_unique_preimage_gl(2, 1, g);
    CHECK(point.u1() == e2);
    CHECK(point.u2() == e2);
    CHECK(orbit_unique_preimage_gl1(2, 1, g).u() == e2);
    CHECK(orbit_unique_preimage_gl2(2, 1, g).u() == e2);
    CHECK_THROWS_AS(orbit_unique_preimage_gl(2, 1, ExactMatrix(2, 2)), NotUniqueError);

    OrthSympSetting o = orth(4, 2);
    ExactMatrix r = quotient_R(o, paired_null_42(), opposite_standard_space(o));
    OrbitPointOS os_point = orbit_unique_preimage(o.v, r, 2);
    CHECK(os_point.u().sub() == column_space(r));
    CHECK_THROWS_AS(orbit_unique_preimage(o.v, ExactMatrix(4, 4), 2), NotUniqueError);
}

TEST_CASE("orbit fiber witnesses over deficient points") {
    SplitRng rng(433);
    OrthSympSetting o = orth(6, 2);
    FormedSpace w = opposite_standard_space(o);
    ExactMatrix t = sample_null(o, 1, rng);
    ExactMatrix g = quotient_R(o, t, w);
    REQUIRE(rank(g) < 2);
    auto [w1, w2] = orbit_fiber_witnesses(o.v, g, 2);
    CHECK(!(w1.u() == w2.u()));

    GlSetting gl(4, 2, 2);
    auto [a, b] = sample_null(gl, 2, 1, rng);
    ExactMatrix h = quotient_BA(gl, a, b);
    REQUIRE(rank(h) < 2);
    auto [x, y] = orbit_fiber_witnesses_gl1(4, 2, h);
    CHECK(!(x.u() == y.u()));
}

TEST_CASE("diagrams commute on zero and sampled points") {
    SplitRng rng(439);
    OrthSympSetting o = orth(4, 2);
    FormedSpace w = opposite_standard_space(o);
    for (int trial = 0; trial < 6; ++trial) {
        std::size_t rank = trial == 0 ? 0 : static_cast<std::size_t>(rng.uniform(0, 2));
        ResolutionPointOS point = sample_resolution(o, rank, rng);
        CHECK(check_diagram(o, point, w));
    }

    GlSetting gl(5, 2, 2);
    for (int trial = 0; trial < 6; ++trial) {
        std::size_t ra = trial == 0 ? 0 : static_cast<std::size_t>(rng.uniform(0, 2));
        std::size_t rb = trial == 0 ? 0 : static_cast<std::size_t>(rng.uniform(0, 2));
        ResolutionPointGL point = sample_resolution(gl, ra, rb, rng);
        CHECK(check_diagram(gl, point));
        CHECK(check_q_triangle(gl, point));
        ResolutionPointGL1 one(gl, point.a(), point.b(), point.u1());
        CHECK(check_diagram(gl, one));
        ResolutionPointGL2 two(gl, point.a(), point.b(), point.u2());
        CHECK(check_diagram(gl, two));
    }
}

TEST_CASE("bundle fiber membership forces nilpotency") {
    SplitRng rng(443);
    OrthSympSetting o = orth(4, 2);
    FormedSpace w = opposite_standard_space(o);
    ExactMatrix t = sample_null(o, 2, rng);
    ExactMatrix g = quotient_R(o, t, w);
    IsotropicSubspace u(o.v, column_space(g));
    CHECK(f0_nilpotency_check(o.v, g, u));
    CHECK(f0_nilpotency_check(o.v, ExactMatrix(4, 4), u));

    // Negative control: image inside u but not an infinitesimal isometry.
    bool found_violation = false;
    for (int trial = 0; trial < 20 && !found_violation; ++trial) {
        ExactMatrix coeff = random_matrix(rng, 2, 4);
        ExactMatrix bad = matmul(u.sub().basis(), coeff);
        if (in_lie_algebra(o.v, bad)) continue;
        found_violation = !f0_nilpotency_check(o.v, bad, u);
    }
    CHECK(found_violation);
}

TEST_CASE("very even orbit points split by component") {
    SplitRng rng(449);
    OrthSympSetting o = orth(4, 2);
    FormedSpace w = opposite_standard_space(o);
    IsotropicSubspace ref(o.v, standard_isotropic_seed(o.v, 2));
    for (int trial = 0; trial < 6; ++trial) {
        ExactMatrix t = sample_null(o, 2, rng);
        ExactMatrix g = quotient_R(o, t, w);
        CHECK(very_even_split(o.v, g, 2, ref) == component_label_null(o, t, ref));
    }
    CHECK_THROWS_AS(very_even_split(o.v, ExactMatrix(4, 4), 2, ref), InvalidRequest);

    FormedSpace sym6 = standard_space(FormKind::symmetric, 6);
    CHECK_THROWS_AS(very_even_split(sym6, ExactMatrix(6, 6), 2,
                                    IsotropicSubspace(sym6, standard_isotropic_seed(sym6, 3))),
                    InvalidRequest);
}

TEST_CASE("cotangent bundle dimension identity") {
    SplitRng rng(457);
    for (auto [n, m] : {std::pair<std::size_t, std::size_t>{2, 1}, {4, 2}, {6, 3}}) {
        Subspace u = column_space(random_matrix_of_rank(rng, n, m, m));
        CHECK(dim_grassmannian(m, n) + orbit_fiber_dim_oracle(n, u, u) ==
              2 * dim_grassmannian(m, n));
    }
}
