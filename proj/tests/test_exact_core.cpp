#include <doctest.h>

#include "nullcone/exact_matrix.hpp"
#include "nullcone/rng.hpp"
#include "nullcone/subspace.hpp"

using namespace nullcone;

namespace {

const GaussianRational kI = GaussianRational::i();

GaussianRational gr(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return GaussianRational(q);
}

} // namespace

TEST_CASE("gaussian rational arithmetic keeps reduced parts") {
    GaussianRational a(Rational(2, 4), Rational(-6, 8));
    CHECK(a.re() == Rational(1, 2));
    CHECK(a.im() == Rational(-3, 4));
    CHECK(a.re().get_den() > 0);
    CHECK(a.im().get_den() > 0);

    GaussianRational z;
    CHECK(z.is_zero());
    CHECK(z.re().get_den() == 1);
}

TEST_CASE("field axioms hold exactly on random triples") {
    SplitRng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        GaussianRational a = random_scalar(rng, rng.uniform(1, 5));
        GaussianRational b = random_scalar(rng, rng.uniform(1, 5));
        GaussianRational c = random_scalar(rng, rng.uniform(1, 5));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * (GaussianRational(1) / a) == GaussianRational(1));
        }
    }
}

TEST_CASE("division by zero is a domain error") {
    CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(), DomainError);
}

TEST_CASE("scalar text form round-trips") {
    const char* inputs[] = {"0",   "1",        "-3/2",      "i",         "-i",
                            "2*i", "1+i",      "1-1/2*i",   "-5/7+2/3*i"};
    for (const char* s : inputs) {
        GaussianRational v = GaussianRational::parse(s);
        CHECK(GaussianRational::parse(v.str()) == v);
        CHECK(v.str() == s);
    }
    // Tolerated variants normalize to the canonical form.
    CHECK(GaussianRational::parse(" 1 + 1*i ") == GaussianRational(Rational(1), Rational(1)));
    CHECK(GaussianRational::parse("2/4") == GaussianRational(Rational(1, 2)));
    CHECK_THROWS_AS(GaussianRational::parse("1++i"), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse("--1"), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse("x"), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse(""), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse("1+2"), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse("1/0"), ParseError);
}

TEST_CASE("matmul identity and the symplectic J square") {
    SplitRng rng(7);
    ExactMatrix m = random_matrix(rng, 2, 3);
    CHECK(matmul(ExactMatrix::identity(2), m) == m);

    ExactMatrix j{{gr(0), gr(1)}, {gr(-1), gr(0)}};
    CHECK(matmul(j, j) == -ExactMatrix::identity(2));
}

TEST_CASE("matmul associativity on random triples") {
    SplitRng rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        ExactMatrix a = random_matrix(rng, 3, 3);
        ExactMatrix b = random_matrix(rng, 3, 3);
        ExactMatrix c = random_matrix(rng, 3, 3);
        CHECK(matmul(matmul(a, b), c) == matmul(a, matmul(b, c)));
    }
}

TEST_CASE("matmul rejects shape mismatch") {
    CHECK_THROWS_AS(matmul(ExactMatrix(2, 3), ExactMatrix(2, 3)), DimensionError);
}

TEST_CASE("transpose involution and anti-homomorphism") {
    SplitRng rng(17);
    ExactMatrix a = random_matrix(rng, 3, 4);
    ExactMatrix b = random_matrix(rng, 4, 2);
    CHECK(a.transpose().transpose() == a);
    CHECK(matmul(a, b).transpose() == matmul(b.transpose(), a.transpose()));
}

TEST_CASE("rank of hand-checked matrices") {
    CHECK(rank(ExactMatrix(3, 2)) == 0);

    ExactMatrix col{{gr(1)}, {kI}};
    CHECK(rank(col) == 1);

    // Second row is i times the first.
    ExactMatrix m{{gr(1), kI}, {kI, gr(-1)}};
    CHECK(rank(m) == 1);
}

TEST_CASE("determinant and inverse") {
    ExactMatrix j{{gr(0), gr(1)}, {gr(-1), gr(0)}};
    CHECK(determinant(j) == gr(1));
    CHECK(determinant(ExactMatrix{{gr(1), kI}, {kI, gr(-1)}}) == gr(0));
    CHECK(!inverse(ExactMatrix{{gr(1), kI}, {kI, gr(-1)}}).has_value());

    SplitRng rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        ExactMatrix g = random_invertible(rng, 4);
        auto gi = inverse(g);
        REQUIRE(gi.has_value());
        CHECK(matmul(g, *gi) == ExactMatrix::identity(4));
        CHECK(determinant(g) * determinant(*gi) == gr(1));
    }
}

TEST_CASE("column space of hand-checked matrices") {
    CHECK(column_space(ExactMatrix(4, 2)) == Subspace::zero(4));

    ExactMatrix m(4, 2);
    m.at(0, 0) = gr(1);
    m.at(1, 0) = kI;
    m.at(2, 1) = gr(1);
    m.at(3, 1) = kI;
    Subspace u = column_space(m);
    CHECK(u.dim() == 2);
    CHECK(u.contains(m.column(0)));
    CHECK(u.contains(m.column(1)));
}

TEST_CASE("column space is invariant under invertible column operations") {
    SplitRng rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        ExactMatrix m = random_matrix(rng, 4, 3);
        ExactMatrix h = random_invertible(rng, 3);
        CHECK(column_space(m) == column_space(matmul(m, h)));
    }
}

TEST_CASE("kernel of hand-checked matrices") {
    CHECK(kernel(ExactMatrix::identity(3)) == Subspace::zero(3));

    ExactMatrix row(1, 2);
    row.at(0, 0) = gr(1);
    Subspace k = kernel(row);
    CHECK(k.dim() == 1);
    CHECK(k.contains(ExactMatrix::basis_vector(2, 1)));

    // Kernel of [[1,i],[i,-1]] is spanned by (1, i): direct solve confirms
    // m*(1,i) = 0, while m*(i,1) = (2i,-2) != 0.
    ExactMatrix m{{gr(1), kI}, {kI, gr(-1)}};
    Subspace km = kernel(m);
    CHECK(km.dim() == 1);
    ExactMatrix v(2, 1);
    v.at(0, 0) = gr(1);
    v.at(1, 0) = kI;
    CHECK(matmul(m, v).is_zero());
    CHECK(km.contains(v));
    ExactMatrix w(2, 1);
    w.at(0, 0) = kI;
    w.at(1, 0) = gr(1);
    CHECK(!matmul(m, w).is_zero());
    CHECK(!km.contains(w));
}

TEST_CASE("rank-nullity on random matrices") {
    SplitRng rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 5));
        std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 5));
        ExactMatrix m = random_matrix(rng, rows, cols);
        CHECK(column_space(m).dim() + kernel(m).dim() == cols);
        CHECK(matmul(m, kernel(m).basis().cols() > 0 ? kernel(m).basis()
                                                     : ExactMatrix(cols, 0))
                  .is_zero());
    }
}

TEST_CASE("canonical form makes span equality syntactic") {
    SplitRng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        ExactMatrix m = random_matrix(rng, 4, 2);
        ExactMatrix h = random_invertible(rng, 2);
        Subspace a = column_space(m);
        Subspace b = column_space(matmul(m, h));
        CHECK(a == b);
        CHECK(a.basis() == b.basis());
    }
}

TEST_CASE("subspace lattice: units, trivial meets, dimension identity") {
    Subspace e1 = column_space(ExactMatrix::basis_vector(2, 0));
    Subspace e2 = column_space(ExactMatrix::basis_vector(2, 1));
    CHECK(subspace_sum(e1, Subspace::zero(2)) == e1);
    CHECK(subspace_intersect(e1, e2) == Subspace::zero(2));

    SplitRng rng(37);
    for (int trial = 0; trial < 25; ++trial) {
        Subspace u = column_space(random_matrix(rng, 4, static_cast<std::size_t>(rng.uniform(0, 3))));
        Subspace v = column_space(random_matrix(rng, 4, static_cast<std::size_t>(rng.uniform(0, 3))));
        Subspace s = subspace_sum(u, v);
        Subspace i = subspace_intersect(u, v);
        CHECK(u.dim() + v.dim() == s.dim() + i.dim());
        CHECK(s.contains(u));
        CHECK(s.contains(v));
        CHECK(u.contains(i));
        CHECK(v.contains(i));
    }
}

TEST_CASE("modular law spot-checks in C^4") {
    SplitRng rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        Subspace a = column_space(random_matrix(rng, 4, static_cast<std::size_t>(rng.uniform(1, 3))));
        Subspace b = column_space(random_matrix(rng, 4, static_cast<std::size_t>(rng.uniform(1, 3))));
        Subspace c = column_space(random_matrix(rng, 4, static_cast<std::size_t>(rng.uniform(1, 3))));
        if (!a.contains(c)) c = subspace_intersect(a, c);
        // a >= c: a ∧ (b + c) = (a ∧ b) + c.
        Subspace lhs = subspace_intersect(a, subspace_sum(b, c));
        Subspace rhs = subspace_sum(subspace_intersect(a, b), c);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("lattice operations reject ambient mismatch") {
    CHECK_THROWS_AS(subspace_sum(Subspace::zero(2), Subspace::zero(3)), DimensionError);
    CHECK_THROWS_AS(subspace_intersect(Subspace::full(2), Subspace::full(3)), DimensionError);
}
