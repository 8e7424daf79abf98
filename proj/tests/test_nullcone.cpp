#include <doctest.h>

#include "nullcone/nullcone.hpp"

using namespace nullcone;

namespace {

const GaussianRational kI = GaussianRational::i();

OrthSympSetting orth(std::size_t n, std::size_t m) {
    return {standard_space(FormKind::symmetric, n), m};
}

OrthSympSetting symp(std::size_t n, std::size_t m) {
    return {standard_space(FormKind::symplectic, n), m};
}

} // namespace

TEST_CASE("settings validate their parameters") {
    CHECK(orth(5, 2).r() == 2);
    CHECK(orth(4, 1).r() == 1);
    CHECK(orth(2, 3).r() == 1);
    CHECK_THROWS_AS(GlSetting(2, 2, 1), InvalidRequest);
    CHECK(GlSetting(3, 2, 1).n == 3);
}

TEST_CASE("invariant map evaluation") {
    OrthSympSetting o2 = orth(2, 1);
    CHECK(eval_Q(o2, ExactMatrix(2, 1)).is_zero());
    ExactMatrix t(2, 1);
    t.at(0, 0) = GaussianRational(1);
    t.at(1, 0) = kI;
    CHECK(eval_Q(o2, t).is_zero());
    CHECK(is_null(o2, t));
    CHECK(!is_null(o2, ExactMatrix::basis_vector(2, 0)));

    // The 1 x 1 antisymmetric target forces the symplectic value to vanish.
    OrthSympSetting s2 = symp(2, 1);
    CHECK(eval_Q(s2, ExactMatrix::basis_vector(2, 0)).is_zero());

    GlSetting gl(2, 1, 1);
    CHECK(eval_phi(gl, ExactMatrix(1, 2), ExactMatrix(2, 1)).is_zero());
    ExactMatrix a(1, 2), b(2, 1);
    a.at(0, 0) = GaussianRational(1);
    b.at(1, 0) = GaussianRational(1);
    CHECK(eval_phi(gl, a, b).is_zero());
    CHECK(eval_phi(gl, a, ExactMatrix::basis_vector(2, 0)) == ExactMatrix{{GaussianRational(1)}});
}

TEST_CASE("symmetry type of the invariant matrix") {
    SplitRng rng(301);
    OrthSympSetting o = orth(4, 3);
    ExactMatrix t = random_matrix(rng, 4, 3);
    ExactMatrix q = eval_Q(o, t);
    CHECK(q.transpose() == q);

    OrthSympSetting s = symp(4, 3);
    ExactMatrix qs = eval_Q(s, t);
    CHECK(qs.transpose() == -qs);
}

TEST_CASE("equivariance identities hold for sampled group elements") {
    SplitRng rng(307);
    for (int trial = 0; trial < 20; ++trial) {
        OrthSympSetting o = orth(4, 2);
        ExactMatrix t = random_matrix(rng, 4, 2);
        ExactMatrix g = sample_isometry(o.v, rng, DetSign::any);
        ExactMatrix h = random_invertible(rng, 2);
        CHECK(check_equivariance(o, t, g, h));

        OrthSympSetting s = symp(4, 2);
        ExactMatrix gs = sample_isometry(s.v, rng, DetSign::plus);
        CHECK(check_equivariance(s, random_matrix(rng, 4, 2), gs, h));

        GlSetting gl(4, 2, 2);
        CHECK(check_equivariance(gl, random_matrix(rng, 2, 4), random_matrix(rng, 4, 2),
                                 random_invertible(rng, 2), random_invertible(rng, 4),
                                 random_invertible(rng, 2)));
    }
}

TEST_CASE("a non-isometry breaks the invariance identity for some t") {
    SplitRng rng(311);
    OrthSympSetting o = orth(3, 2);
    ExactMatrix bad = ExactMatrix::identity(3);
    bad.at(0, 0) = GaussianRational(2);
    bool broke = false;
    for (int trial = 0; trial < 20 && !broke; ++trial) {
        ExactMatrix t = random_matrix(rng, 3, 2);
        broke = eval_Q(o, matmul(bad, t)) != eval_Q(o, t);
    }
    CHECK(broke);
}

TEST_CASE("null sampling hits the requested rank exactly") {
    SplitRng rng(313);
    OrthSympSetting o = orth(6, 3);
    CHECK(sample_null(o, 0, rng).is_zero());
    for (std::size_t target = 1; target <= 3; ++target) {
        ExactMatrix t = sample_null(o, target, rng);
        CHECK(is_null(o, t));
        CHECK(rank(t) == target);
    }
    CHECK_THROWS_AS(sample_null(o, 4, rng), RankError);

    OrthSympSetting s = symp(6, 2);
    ExactMatrix ts = sample_null(s, 2, rng);
    CHECK(is_null(s, ts));
    CHECK(rank(ts) == 2);

    GlSetting gl(5, 2, 2);
    for (std::size_t ra = 0; ra <= 2; ++ra) {
        for (std::size_t rb = 0; rb <= 2; ++rb) {
            auto [a, b] = sample_null(gl, ra, rb, rng);
            CHECK(is_null(gl, a, b));
            CHECK(rank(a) == ra);
            CHECK(rank(b) == rb);
        }
    }
    CHECK_THROWS_AS(sample_null(gl, 3, 1, rng), RankError);
}

TEST_CASE("membership is equivalent to isotropy of the image") {
    SplitRng rng(317);
    OrthSympSetting o = orth(5, 2);
    for (int trial = 0; trial < 15; ++trial) {
        ExactMatrix t = trial % 2 == 0 ? sample_null(o, 2, rng) : random_matrix(rng, 5, 2);
        CHECK(is_null(o, t) == is_isotropic(o.v, column_space(t)));
    }
}

TEST_CASE("null points are closed under scalar dilation") {
    SplitRng rng(331);
    OrthSympSetting o = orth(4, 2);
    ExactMatrix t = sample_null(o, 2, rng);
    GaussianRational lambda = random_scalar(rng, 3);
    CHECK(is_null(o, lambda * t));
}

TEST_CASE("tangent oracle at hand-checked points") {
    OrthSympSetting o41 = orth(4, 1);
    ExactMatrix t(4, 1);
    t.at(0, 0) = GaussianRational(1);
    t.at(1, 0) = kI;
    CHECK(tangent_dim_at(o41, t) == 3);

    GlSetting gl(2, 1, 1);
    ExactMatrix a(1, 2), b(2, 1);
    a.at(0, 0) = GaussianRational(1);
    b.at(1, 0) = GaussianRational(1);
    CHECK(tangent_dim_at(gl, a, b) == 3);

    // At zero the differential vanishes and the whole ambient is tangent.
    OrthSympSetting o21 = orth(2, 1);
    CHECK(tangent_dim_at(o21, ExactMatrix(2, 1)) == 2);

    CHECK_THROWS_AS(tangent_dim_at(o21, ExactMatrix::basis_vector(2, 0)), DomainError);
}

TEST_CASE("tangent oracle matches the dimension count when r < m") {
    SplitRng rng(337);
    OrthSympSetting o = orth(2, 2); // r = 1 < m
    ExactMatrix t = sample_null(o, 1, rng);
    CHECK(tangent_dim_at(o, t) == 2); // mr + dim J_1(C^2) = 2 + 0
}

TEST_CASE("component labels of null points") {
    OrthSympSetting o = orth(2, 1);
    IsotropicSubspace ref(o.v, standard_isotropic_seed(o.v, 1));
    ExactMatrix t(2, 1);
    t.at(0, 0) = GaussianRational(1);
    t.at(1, 0) = kI;
    CHECK(component_label_null(o, t, ref) == ComponentLabel::plus);
    ExactMatrix t2(2, 1);
    t2.at(0, 0) = GaussianRational(1);
    t2.at(1, 0) = -kI;
    CHECK(component_label_null(o, t2, ref) == ComponentLabel::minus);
    CHECK_THROWS_AS(component_label_null(o, ExactMatrix(2, 1), ref), InvalidRequest);
    OrthSympSetting o32 = orth(3, 1);
    CHECK_THROWS_AS(component_label_null(o32, ExactMatrix(3, 1), ref), InvalidRequest);
}
