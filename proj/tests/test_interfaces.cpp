#include <doctest.h>

#include "nullcone/suites.hpp"

using namespace nullcone;

TEST_CASE("matrix JSON round-trips byte-identically") {
    SplitRng rng(501);
    ExactMatrix m = random_matrix(rng, 3, 4);
    Json j = matrix_to_json(m);
    CHECK(matrix_from_json(j) == m);
    CHECK(matrix_to_json(matrix_from_json(j)).dump() == j.dump());

    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[\"1\"],[\"2\",\"3\"]]")), ParseError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[\"oops\"]]")), ParseError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("{\"rows\":1}")), ParseError);
}

TEST_CASE("subspace and form JSON round-trips") {
    SplitRng rng(503);
    Subspace u = column_space(random_matrix(rng, 4, 2));
    Subspace back = subspace_from_json(subspace_to_json(u));
    CHECK(back == u);

    Subspace zero = Subspace::zero(3);
    CHECK(subspace_from_json(subspace_to_json(zero)) == zero);

    BilinearForm form = standard_form(FormKind::symplectic, 4);
    BilinearForm parsed = form_from_json(form_to_json(form));
    CHECK(parsed == form);
}

TEST_CASE("null point JSON round-trips") {
    SplitRng rng(509);
    OrthSympSetting o{standard_space(FormKind::symmetric, 4), 2};
    ExactMatrix t = sample_null(o, 2, rng);
    ParsedNullPoint p = null_point_from_json(null_point_to_json(t));
    CHECK(p.is_os);
    CHECK(p.t == t);

    GlSetting gl(4, 2, 2);
    auto [a, b] = sample_null(gl, 2, 2, rng);
    ParsedNullPoint q = null_point_from_json(null_point_to_json(a, b));
    CHECK(!q.is_os);
    CHECK(q.a == a);
    CHECK(q.b == b);

    CHECK_THROWS_AS(null_point_from_json(Json::parse("{\"case\":\"??\"}")), ParseError);
    CHECK_THROWS_AS(parse_json_text("{oops"), ParseError);
}

TEST_CASE("grid cells parse and validate") {
    GridCell cell = grid_cell_from_json(Json::parse(
        R"({"kind":"gl","n":5,"m":2,"s":2,"variant":"nc1"})"));
    CHECK(cell.kind == "gl");
    CHECK(cell.variant == "nc1");
    CHECK_THROWS_AS(grid_cell_from_json(Json::parse(R"({"kind":"bad","n":2,"m":1})")),
                    ParseError);
}

TEST_CASE("suite reports are deterministic given the seed") {
    auto grid = default_grid("equivariance");
    grid.resize(2);
    SuiteReport first = run_suite("equivariance", grid, 5, 99);
    SuiteReport second = run_suite("equivariance", grid, 5, 99);
    Json a = report_to_json(first);
    Json b = report_to_json(second);
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    CHECK(a.dump() == b.dump());
    CHECK(first.ok());
}

TEST_CASE("zero trials produce an empty passing report") {
    SuiteReport report = run_suite("quotient", default_grid("quotient"), 0, 7);
    CHECK(report.trials == 0);
    CHECK(report.passes == 0);
    CHECK(report.ok());
}

TEST_CASE("every default suite passes a smoke run") {
    for (const std::string& suite : suite_names()) {
        SuiteReport report = run_suite(suite, default_grid(suite), 2, 20260808);
        INFO(suite);
        CHECK(report.ok());
    }
}

TEST_CASE("the dims table flags the symplectic discrepancy") {
    Json rows = dims_rows(default_grid("dims-symp"), 11);
    bool saw_discrepancy = false;
    for (const auto& row : rows) {
        CHECK(row["agree"].get<bool>());
        if (row["n"] == 2 && row["m"] == 1) {
            CHECK(row["isotropic_uniform_formula"].get<long long>() == 0);
            CHECK(row["isotropic_oracle"].get<std::size_t>() == 1);
            saw_discrepancy = !row["uniform_formula_agrees"].get<bool>();
        }
    }
    CHECK(saw_discrepancy);
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(run_suite("nope", {}, 1, 1), InvalidRequest);
    CHECK_THROWS_AS(default_grid("nope"), InvalidRequest);
}
