#include "nullcone/suites.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <thread>

namespace nullcone {

namespace {

struct TrialOutcome {
    bool pass = true;
    std::string description;
    Json witnesses;
};

TrialOutcome fail(std::string description, Json witnesses = Json::object()) {
    return {false, std::move(description), std::move(witnesses)};
}

FormKind kind_of(const GridCell& cell) {
    if (cell.kind == "orth") return FormKind::symmetric;
    if (cell.kind == "symp") return FormKind::symplectic;
    throw InvalidRequest("cell kind '" + cell.kind + "' is not a form kind");
}

OrthSympSetting os_setting(const GridCell& cell) {
    return {standard_space(kind_of(cell), cell.n), cell.m};
}

GlSetting gl_setting(const GridCell& cell) {
    return {cell.n, cell.s, cell.m};
}

std::string cell_tag(const GridCell& cell) {
    std::string tag = cell.kind + " n=" + std::to_string(cell.n) + " m=" + std::to_string(cell.m);
    if (cell.kind == "gl") tag += " s=" + std::to_string(cell.s);
    if (!cell.variant.empty()) tag += " variant=" + cell.variant;
    return tag;
}

using TrialBody = std::function<TrialOutcome(SplitRng&, std::size_t)>;

// Deterministic parallel map: each trial gets an independent child seed;
// results land in trial order regardless of scheduling.
void run_cell_trials(SuiteReport& report, const GridCell& cell, std::size_t cell_index,
                     std::size_t trials, std::uint64_t master_seed, const TrialBody& body) {
    const std::uint64_t cell_seed = SplitRng::derive(master_seed, cell_index);
    std::vector<TrialOutcome> outcomes(trials);
    std::vector<std::uint64_t> seeds(trials);
    for (std::size_t t = 0; t < trials; ++t) seeds[t] = SplitRng::derive(cell_seed, t);

    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), trials == 0 ? 1 : trials);
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t t = w; t < trials; t += workers) {
                SplitRng rng(seeds[t]);
                try {
                    outcomes[t] = body(rng, t);
                } catch (const Error& e) {
                    outcomes[t] = fail(std::string("error: ") + e.what());
                }
            }
        }));
    }
    for (auto& f : futures) f.get();

    for (std::size_t t = 0; t < trials; ++t) {
        ++report.trials;
        if (outcomes[t].pass) {
            ++report.passes;
        } else {
            report.failures.push_back(
                {seeds[t], cell_tag(cell) + " trial " + std::to_string(t) + ": " +
                               outcomes[t].description,
                 outcomes[t].witnesses});
        }
    }
}

// ---------------------------------------------------------------------
// Individual suites.
// ---------------------------------------------------------------------

void suite_dims_orth(SuiteReport& report, const std::vector<GridCell>& grid, std::size_t trials,
                     std::uint64_t seed) {
    for (std::size_t c = 0; c < grid.size(); ++c) {
        const OrthSympSetting setting = os_setting(grid[c]);
        const std::size_t n = setting.n(), m = setting.m, r = setting.r();
        const std::size_t expected = r * (2 * m + 2 * n - 3 * r - 1) / 2;
        run_cell_trials(report, grid[c], c, trials, seed, [&](SplitRng& rng, std::size_t) -> TrialOutcome {
            ExactMatrix t = sample_null(setting, r, rng);
            const std::size_t oracle = tangent_dim_at(setting, t);
            if (oracle != expected) {
                return fail("tangent oracle " + std::to_string(oracle) + " != formula " +
                                std::to_string(expected),
                            null_point_to_json(t));
            }
            return {};
        });
    }
}

void suite_dims_symp(SuiteReport& report, const std::vector<GridCell>& grid, std::size_t trials,
                     std::uint64_t seed) {
    for (std::size_t c = 0; c < grid.size(); ++c) {
        const OrthSympSetting setting = os_setting(grid[c]);
        const std::size_t n = setting.n(), m = setting.m, r = setting.r();
        const std::size_t jr_formula = dim_isotropic_grassmannian(n, r, FormKind::symplectic);
        const long long jr_uniform = isotropic_dim_uniform_formula(n, r);
        if (static_cast<long long>(jr_formula) != jr_uniform) {
            report.notes.push_back(
                "isotropic family (n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                "): symmetric-case closed form gives " + std::to_string(jr_uniform) +
                ", tangent oracle confirms " + std::to_string(jr_formula));
        }
        run_cell_trials(report, grid[c], c, trials, seed, [&](SplitRng& rng, std::size_t) -> TrialOutcome {
            IsotropicSubspace u = sample_isotropic(setting.v, r, rng);
            const std::size_t jr_oracle = tangent_dim_isotropic_at(u);
            if (jr_oracle != jr_formula) {
                return fail("isotropic tangent oracle " + std::to_string(jr_oracle) +
                                " != per-kind formula " + std::to_string(jr_formula),
                            subspace_to_json(u.sub()));
            }
            ExactMatrix t = sample_null(setting, r, rng);
            const std::size_t oracle = tangent_dim_at(setting, t);
            if (oracle != m * r + jr_oracle) {
                return fail("tangent oracle " + std::to_string(oracle) + " != mr + dim J_r = " +
                                std::to_string(m * r + jr_oracle),
                            null_point_to_json(t));
            }
            return {};
        });
    }
}

void suite_dims_gl(SuiteReport& report, const std::vector<GridCell>& grid, std::size_t trials,
                   std::uint64_t seed) {
    for (std::size_t c = 0; c < grid.size(); ++c) {
        const GlSetting setting = gl_setting(grid[c]);
        const std::size_t n = setting.n, s = setting.s, m = setting.m;
        const std::size_t expected = s * n + m * n - s * m;
        const std::size_t via_flag = dim_flag2(m, s, n) + s * s + m * m;
        run_cell_trials(report, grid[c], c, trials, seed, [&](SplitRng& rng, std::size_t) -> TrialOutcome {
            auto [a, b] = sample_null(setting, s, m, rng);
            const std::size_t oracle = tangent_dim_at(setting, a, b);
            if (oracle != expected || oracle != via_flag) {
                return fail("tangent oracle " + std::to_string(oracle) + " != " +
                                std::to_string(expected) + " (flag route " +
                                std::to_string(via_flag) + ")",
                            null_point_to_json(a, b));
            }
            return {};
        });
    }
}

void suite_equivariance(SuiteReport& report, const std::vector<GridCell>& grid,
                        std::size_t trials, std::uint64_t seed) {
    for (std::size_t c = 0; c < grid.size(); ++c) {
        const GridCell& cell = grid[c];
        if (cell.kind == "gl") {
            const GlSetting setting = gl_setting(cell);
            run_cell_trials(report, cell, c, trials, seed, [&](SplitRng& rng, std::size_t) -> TrialOutcome {
                ExactMatrix a = random_matrix(rng, setting.s, setting.n);
                ExactMatrix b = random_matrix(rng, setting.n, setting.m);
                ExactMatrix g1 = random_invertible(rng, setting.s);
                ExactMatrix g2 = random_invertible(rng, setting.n);
                ExactMatrix g3 = random_invertible(rng, setting.m);
                if (!check_equivariance(setting, a, b, g1, g2, g3)) {
                    return fail("general linear action identity failed",
                                null_point_to_json(a, b));
                }
                return {};
            });
            continue;
        }
        const OrthSympSetting setting = os_setting(cell);
        run_cell_trials(report, cell, c, trials, seed, [&](SplitRng& rng, std::size_t) -> TrialOutcome {
            ExactMatrix t = random_matrix(rng, setting.n(), setting.m);
            const DetSign sign =
                setting.v.kind() == FormKind::symmetric ? DetSign::any : DetSign::plus;
            ExactMatrix g = sample_isometry(setting.v, rng, sign);
            ExactMatrix h = random_invertible(rng, setting.m);
            if (!check_equivariance(setting, t, g, h)) {
                return fail("invariance identities failed", null_point_to_json(t));
            }
            return {};
        });
    }
}

void suite_birationality(SuiteReport& report, const std::vector<GridCell>& grid,
                         std::size_t trials, std::uint64_t seed) {
    for (std::size_t c = 0; c < grid.size(); ++c) {
        const GridCell& cell = grid[c];
        const Variant variant = parse_variant(cell.variant);

        if (variant == Variant::nc0) {
            const OrthSympSetting setting = os_setting(cell);
            run_cell_trials(report, cell, c, trials, seed, [&](SplitRng& rng, std::size_t trial) -> TrialOutcome {
                ExactMatrix t = sample_null(setting, setting.r(), rng);
                ResolutionPointOS point = unique_preimage(setting, t);
                if (mu(point) != t) return fail("mu(unique_preimage) != id");
                if (!(unique_preimage(setting, mu(point)) == point)) {
                    return fail("unique_preimage(mu) != id", null_point_to_json(t));
                }
                // One in five trials also exercises the rank-deficient
                // diagnostic, on top of the round trip above.
                if (trial % 5 == 4 && setting.r() >= 1) {
                    const std::size_t deficient =
                        static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(setting.r()) - 1));
                    ExactMatrix deficient_t = sample_null(setting, deficient, rng);
                    try {
                        unique_preimage(setting, deficient_t);
                        return fail("deficient point did not raise the not-unique error",
                                    null_point_to_json(deficient_t));
                    } catch (const NotUniqueError&) {
                    }
                    auto [w1, w2] = fiber_witnesses(setting, deficient_t);
                    if (w1 == w2) {
                        return fail("fiber witnesses coincide", null_point_to_json(deficient_t));
                    }
                }
                return {};
            });
            continue;
        }

        const GlSetting setting = gl_setting(cell);
        run_cell_trials(report, cell, c, trials, seed, [&](SplitRng& rng, std::size_t trial) -> TrialOutcome {
            {
                auto [a, b] = sample_null(setting, setting.s, setting.m, rng);
                switch (variant) {
                    case Variant::nc: {
                        ResolutionPointGL point = unique_preimage(setting, a, b);
                        GlNullPair back = mu(point);
                        if (back.a != a || back.b != b) return fail("mu(unique_preimage) != id");
                        if (!(unique_preimage(setting, back.a, back.b) == point)) {
                            return fail("unique_preimage(mu) != id", null_point_to_json(a, b));
                        }
                        break;
                    }
                    case Variant::nc1: {
                        ResolutionPointGL1 point = unique_preimage_gl1(setting, a, b);
                        GlNullPair back = mu(point);
                        if (back.a != a || back.b != b) return fail("mu(unique_preimage) != id");
                        if (!(unique_preimage_gl1(setting, back.a, back.b) == point)) {
                            return fail("unique_preimage(mu) != id", null_point_to_json(a, b));
                        }
                        break;
                    }
                    case Variant::nc2: {
                        ResolutionPointGL2 point = unique_preimage_gl2(setting, a, b);
                        GlNullPair back = mu(point);
                        if (back.a != a || back.b != b) return fail("mu(unique_preimage) != id");
                        if (!(unique_preimage_gl2(setting, back.a, back.b) == point)) {
                            return fail("unique_preimage(mu) != id", null_point_to_json(a, b));
                        }
                        break;
                    }
                    default: break;
                }
            }
            if (trial % 5 == 4) {
                // Drop whichever rank keeps the fiber positive-dimensional.
                std::size_t rank_a = setting.s, rank_b = setting.m;
                if (variant == Variant::nc2) {
                    rank_a = setting.s - 1;
                } else if (variant == Variant::nc1 || setting.m < setting.n - setting.s) {
                    rank_b = setting.m - 1;
                } else {
                    rank_a = setting.s - 1;
                }
                auto [a, b] = sample_null(setting, rank_a, rank_b, rng);
                try {
                    switch (variant) {
                        case Variant::nc: unique_preimage(setting, a, b); break;
                        case Variant::nc1: unique_preimage_gl1(setting, a, b); break;
                        case Variant::nc2: unique_preimage_gl2(setting, a, b); break;
                        default: break;
                    }
                    return fail("deficient pair did not raise the not-unique error",
                                null_point_to_json(a, b));
                } catch (const NotUniqueError&) {
                }
                bool distinct = false;
                switch (variant) {
                    case Variant::nc: {
                        auto [w1, w2] = fiber_witnesses(setting, a, b);
                        distinct = !(w1 == w2);
                        break;
                    }
                    case Variant::nc1: {
                        auto [w1, w2] = fiber_witnesses_gl1(setting, a, b);
                        distinct = !(w1 == w2);
                        break;
                    }
                    case Variant::nc2: {
                        auto [w1, w2] = fiber_witnesses_gl2(setting, a, b);
                        distinct = !(w1 == w2);
                        break;
                    }
                    default: break;
                }
                if (!distinct) return fail("fiber witnesses coincide", null_point_to_json(a, b));
            }
            return {};
        });
    }
}

void suite_quotient(SuiteReport& report, const std::vector<GridCell>& grid, std::size_t trials,
                    std::uint64_t seed) {
    for (std::size_t c = 0; c < grid.size(); ++c) {
        const GridCell& cell = grid[c];
        if (cell.kind == "gl") {
            const GlSetting setting = gl_setting(cell);
            run_cell_trials(report, cell, c, trials, seed, [&](SplitRng& rng, std::size_t) -> TrialOutcome {
                const std::size_t rank_a =
                    static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(setting.s)));
                const std::size_t rank_b =
                    static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(setting.m)));
                auto [a, b] = sample_null(setting, rank_a, rank_b, rng);
                const ExactMatrix g = quotient_BA(setting, a, b);
                if (!in_orbit_closure_gl(g, setting.m)) {
                    return fail("b*a escapes the closure", null_point_to_json(a, b));
                }
                return {};
            });
            continue;
        }
        const OrthSympSetting setting = os_setting(cell);
        const FormedSpace w = opposite_standard_space(setting);
        run_cell_trials(report, cell, c, trials, seed, [&](SplitRng& rng, std::size_t) -> TrialOutcome {
            const std::size_t rank =
                static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(setting.r())));
            ExactMatrix t = sample_null(setting, rank, rng);
            if (!quotient_Qtilde(setting, t, w).is_zero()) {
                return fail("t* t != 0 at a null point", null_point_to_json(t));
            }
            const ExactMatrix g = quotient_R(setting, t, w);
            if (!in_orbit_closure_os(setting.v, g, setting.m)) {
                return fail("t t* escapes the closure", null_point_to_json(t));
            }
            if (!matmul(g, g).is_zero()) {
                return fail("(t t*)^2 != 0 at a null point", null_point_to_json(t));
            }
            // The zero fibers agree: t* t = 0 iff t^t G t = 0, probed on a
            // generic (usually non-null) matrix as well.
            ExactMatrix probe = random_matrix(rng, setting.n(), setting.m);
            const bool probe_null = is_null(setting, probe);
            const bool probe_qtilde_zero = quotient_Qtilde(setting, probe, w).is_zero();
            if (probe_null != probe_qtilde_zero) {
                return fail("zero fibers of the two quotient routes differ",
                            null_point_to_json(probe));
            }
            return {};
        });
    }
}

void suite_diagrams(SuiteReport& report, const std::vector<GridCell>& grid, std::size_t trials,
                    std::uint64_t seed) {
    for (std::size_t c = 0; c < grid.size(); ++c) {
        const GridCell& cell = grid[c];
        const Variant variant = parse_variant(cell.variant);
        if (variant == Variant::nc0) {
            const OrthSympSetting setting = os_setting(cell);
            const FormedSpace w = opposite_standard_space(setting);
            run_cell_trials(report, cell, c, trials, seed, [&](SplitRng& rng, std::size_t trial) -> TrialOutcome {
                const std::size_t rank =
                    trial == 0 ? 0
                               : static_cast<std::size_t>(
                                     rng.uniform(0, static_cast<std::int64_t>(setting.r())));
                ResolutionPointOS point = sample_resolution(setting, rank, rng);
                if (!check_diagram(setting, point, w)) {
                    return fail("quotient square does not commute",
                                resolution_point_to_json(point));
                }
                return {};
            });
            continue;
        }
        const GlSetting setting = gl_setting(cell);
        run_cell_trials(report, cell, c, trials, seed, [&](SplitRng& rng, std::size_t trial) -> TrialOutcome {
            const std::size_t rank_a =
                trial == 0 ? 0
                           : static_cast<std::size_t>(
                                 rng.uniform(0, static_cast<std::int64_t>(setting.s)));
            const std::size_t rank_b =
                trial == 0 ? 0
                           : static_cast<std::size_t>(
                                 rng.uniform(0, static_cast<std::int64_t>(setting.m)));
            ResolutionPointGL point = sample_resolution(setting, rank_a, rank_b, rng);
            bool ok = true;
            std::string which;
            switch (variant) {
                case Variant::nc:
                    ok = check_diagram(setting, point);
                    which = "flag quotient square";
                    break;
                case Variant::nc1: {
                    ResolutionPointGL1 one(setting, point.a(), point.b(), point.u1());
                    ok = check_diagram(setting, one);
                    which = "one-step quotient square";
                    break;
                }
                case Variant::nc2: {
                    ResolutionPointGL2 two(setting, point.a(), point.b(), point.u2());
                    ok = check_diagram(setting, two);
                    which = "second one-step quotient square";
                    break;
                }
                default: break;
            }
            if (ok && !check_q_triangle(setting, point)) {
                ok = false;
                which = "forgetful triangle";
            }
            if (!ok) {
                return fail(which + " does not commute", resolution_point_to_json(point));
            }
            return {};
        });
    }
}

void suite_components(SuiteReport& report, const std::vector<GridCell>& grid, std::size_t trials,
                      std::uint64_t seed) {
    for (std::size_t c = 0; c < grid.size(); ++c) {
        const OrthSympSetting setting = os_setting(grid[c]);
        const IsotropicSubspace reference(setting.v,
                                          standard_isotropic_seed(setting.v, setting.r()));
        run_cell_trials(report, grid[c], c, trials, seed, [&](SplitRng& rng, std::size_t) -> TrialOutcome {
            IsotropicSubspace u = sample_isotropic(setting.v, setting.r(), rng);
            const ComponentLabel base = component_label(u, reference);
            ExactMatrix plus = sample_isometry(setting.v, rng, DetSign::plus);
            IsotropicSubspace moved_plus(
                setting.v, Subspace::span_of(setting.n(), matmul(plus, u.sub().basis())));
            if (component_label(moved_plus, reference) != base) {
                return fail("label not preserved by a det=+1 isometry",
                            subspace_to_json(u.sub()));
            }
            ExactMatrix minus = sample_isometry(setting.v, rng, DetSign::minus);
            IsotropicSubspace moved_minus(
                setting.v, Subspace::span_of(setting.n(), matmul(minus, u.sub().basis())));
            if (component_label(moved_minus, reference) == base) {
                return fail("label not flipped by a det=-1 isometry",
                            subspace_to_json(u.sub()));
            }
            return {};
        });
    }
}

void suite_orbit_fibers(SuiteReport& report, const std::vector<GridCell>& grid,
                        std::size_t trials, std::uint64_t seed) {
    for (std::size_t c = 0; c < grid.size(); ++c) {
        const GridCell& cell = grid[c];
        const Variant variant = parse_variant(cell.variant);
        if (variant == Variant::nc0) {
            const OrthSympSetting setting = os_setting(cell);
            const FormedSpace w = opposite_standard_space(setting);
            run_cell_trials(report, cell, c, trials, seed, [&](SplitRng& rng, std::size_t) -> TrialOutcome {
                ExactMatrix t = sample_null(setting, setting.r(), rng);
                const ExactMatrix g = quotient_R(setting, t, w);
                if (rank(g) != setting.m) {
                    return fail("interior construction lost rank", null_point_to_json(t));
                }
                OrbitPointOS point = orbit_unique_preimage(setting.v, g, setting.m);
                if (point.u().sub() != column_space(g)) {
                    return fail("fiber point is not the forced image subspace");
                }
                if (!f0_nilpotency_check(setting.v, g, point.u())) {
                    return fail("bundle fiber membership does not kill u / square to zero");
                }
                return {};
            });
            continue;
        }
        const GlSetting setting = gl_setting(cell);
        run_cell_trials(report, cell, c, trials, seed, [&](SplitRng& rng, std::size_t) -> TrialOutcome {
            auto [a, b] = sample_null(setting, setting.s, setting.m, rng);
            const ExactMatrix g = quotient_BA(setting, a, b);
            if (rank(g) != setting.m) {
                return fail("interior construction lost rank", null_point_to_json(a, b));
            }
            const Subspace image = column_space(g);
            const Subspace ker_g = kernel(g);
            switch (variant) {
                case Variant::nc: {
                    OrbitPointGL point = orbit_unique_preimage_gl(setting.n, setting.m, g);
                    if (point.u1() != image || point.u2() != ker_g) {
                        return fail("fiber point is not the forced (Im g, ker g)");
                    }
                    break;
                }
                case Variant::nc1: {
                    OrbitPointGL1 point = orbit_unique_preimage_gl1(setting.n, setting.m, g);
                    if (point.u() != image) return fail("fiber point is not the forced Im g");
                    break;
                }
                case Variant::nc2: {
                    OrbitPointGL2 point = orbit_unique_preimage_gl2(setting.n, setting.m, g);
                    if (point.u() != ker_g) return fail("fiber point is not the forced ker g");
                    break;
                }
                default: break;
            }
            return {};
        });
    }
}

void suite_cotangent(SuiteReport& report, const std::vector<GridCell>& grid, std::size_t trials,
                     std::uint64_t seed) {
    for (std::size_t c = 0; c < grid.size(); ++c) {
        const GridCell& cell = grid[c];
        const std::size_t n = cell.n, m = cell.m;
        run_cell_trials(report, cell, c, trials, seed, [&](SplitRng& rng, std::size_t) -> TrialOutcome {
            Subspace u = column_space(random_matrix_of_rank(rng, n, m, m));
            const std::size_t fiber = orbit_fiber_dim_oracle(n, u, u);
            const std::size_t total = dim_grassmannian(m, n) + fiber;
            if (total != 2 * dim_grassmannian(m, n)) {
                return fail("orbit bundle total " + std::to_string(total) +
                                " != twice the base dimension " +
                                std::to_string(2 * dim_grassmannian(m, n)),
                            subspace_to_json(u));
            }
            return {};
        });
    }
}

} // namespace

Json grid_cell_to_json(const GridCell& cell) {
    Json j{{"kind", cell.kind}, {"n", cell.n}, {"m", cell.m}};
    if (cell.kind == "gl") j["s"] = cell.s;
    if (!cell.variant.empty()) j["variant"] = cell.variant;
    return j;
}

GridCell grid_cell_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("n") || !j.contains("m")) {
        throw ParseError("grid cell needs kind, n, m");
    }
    GridCell cell;
    cell.kind = j["kind"].get<std::string>();
    if (cell.kind != "orth" && cell.kind != "symp" && cell.kind != "gl") {
        throw ParseError("grid cell kind must be orth, symp or gl");
    }
    cell.n = j["n"].get<std::size_t>();
    cell.m = j["m"].get<std::size_t>();
    if (j.contains("s")) cell.s = j["s"].get<std::size_t>();
    if (j.contains("variant")) cell.variant = j["variant"].get<std::string>();
    return cell;
}

Json report_to_json(const SuiteReport& report) {
    Json failures = Json::array();
    for (const auto& f : report.failures) {
        failures.push_back(
            Json{{"seed", f.seed}, {"description", f.description}, {"witnesses", f.witnesses}});
    }
    return Json{{"suite", report.suite},     {"parameters", report.parameters},
                {"trials", report.trials},   {"passes", report.passes},
                {"failures", failures},      {"notes", report.notes},
                {"elapsed_ms", report.elapsed_ms}};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "dims-orth",  "dims-symp", "dims-gl",      "equivariance", "birationality",
        "quotient",   "diagrams",  "components",   "orbit-fibers", "cotangent"};
    return names;
}

std::vector<GridCell> default_grid(const std::string& suite) {
    auto orth = [](std::size_t n, std::size_t m, std::string variant = "") {
        return GridCell{"orth", n, m, 0, std::move(variant)};
    };
    auto symp = [](std::size_t n, std::size_t m, std::string variant = "") {
        return GridCell{"symp", n, m, 0, std::move(variant)};
    };
    auto gl = [](std::size_t n, std::size_t s, std::size_t m, std::string variant = "") {
        return GridCell{"gl", n, m, s, std::move(variant)};
    };
    if (suite == "dims-orth") {
        return {orth(2, 1), orth(3, 1), orth(4, 1), orth(4, 2),
                orth(5, 2), orth(6, 2), orth(6, 3)};
    }
    if (suite == "dims-symp") {
        return {symp(2, 1), symp(4, 1), symp(4, 2), symp(6, 2), symp(6, 3)};
    }
    if (suite == "dims-gl") {
        return {gl(2, 1, 1), gl(3, 1, 1), gl(3, 2, 1), gl(4, 2, 2), gl(5, 2, 2), gl(5, 3, 2)};
    }
    if (suite == "equivariance") {
        return {orth(4, 2), orth(5, 2), symp(4, 2), symp(6, 2), gl(4, 2, 2), gl(5, 2, 2)};
    }
    if (suite == "birationality") {
        return {orth(6, 2, "nc0"), symp(6, 2, "nc0"), gl(5, 2, 2, "nc"), gl(5, 2, 2, "nc1"),
                gl(5, 2, 2, "nc2")};
    }
    if (suite == "quotient") {
        return {orth(4, 2), orth(6, 2), symp(4, 1), symp(4, 2), symp(6, 2), symp(6, 3),
                gl(4, 2, 2), gl(5, 2, 2)};
    }
    if (suite == "diagrams") {
        return {orth(4, 2, "nc0"), orth(6, 2, "nc0"), symp(4, 2, "nc0"), symp(6, 2, "nc0"),
                gl(4, 2, 2, "nc"), gl(5, 2, 2, "nc"), gl(5, 2, 2, "nc1"), gl(5, 2, 2, "nc2")};
    }
    if (suite == "components") {
        return {orth(2, 1), orth(4, 2), orth(6, 3)};
    }
    if (suite == "orbit-fibers") {
        return {orth(4, 2, "nc0"), orth(6, 2, "nc0"), symp(4, 2, "nc0"), symp(6, 2, "nc0"),
                gl(4, 2, 2, "nc"), gl(5, 2, 2, "nc"), gl(5, 2, 2, "nc1"), gl(5, 2, 2, "nc2")};
    }
    if (suite == "cotangent") {
        return {gl(2, 1, 1), gl(4, 2, 2), gl(6, 3, 3)};
    }
    throw InvalidRequest("unknown suite '" + suite + "'");
}

std::size_t default_trials(const std::string& suite) {
    if (suite == "dims-orth" || suite == "dims-symp" || suite == "dims-gl") return 20;
    if (suite == "equivariance") return 100;
    if (suite == "birationality") return 50;
    if (suite == "quotient") return 50;
    if (suite == "diagrams") return 50;
    if (suite == "components") return 50;
    if (suite == "orbit-fibers") return 20;
    if (suite == "cotangent") return 3;
    throw InvalidRequest("unknown suite '" + suite + "'");
}

namespace {

// Eager grid validation so a mismatched cell is a usage error, not a
// recorded mathematical failure.
void validate_grid(const std::string& suite, const std::vector<GridCell>& grid) {
    for (const GridCell& cell : grid) {
        const std::string tag = cell_tag(cell);
        auto need = [&](bool ok, const std::string& why) {
            if (!ok) throw InvalidRequest("suite " + suite + ": " + tag + " " + why);
        };
        const bool is_gl = cell.kind == "gl";
        if (suite == "dims-orth") need(cell.kind == "orth", "must have kind orth");
        if (suite == "dims-symp") need(cell.kind == "symp", "must have kind symp");
        if (suite == "dims-gl") need(is_gl, "must have kind gl");
        if (suite == "components") {
            need(cell.kind == "orth" && cell.n == 2 * cell.m, "needs kind orth with n = 2m");
        }
        if (suite == "cotangent") {
            need(is_gl && cell.s == cell.m && cell.n >= 2 * cell.m,
                 "needs kind gl with s = m and n >= 2m");
        }
        if (suite == "birationality" || suite == "diagrams" || suite == "orbit-fibers") {
            need(!cell.variant.empty(), "needs a variant");
            const Variant variant = parse_variant(cell.variant);
            need((variant == Variant::nc0) == !is_gl,
                 "variant nc0 goes with the orth/symp kinds, nc/nc1/nc2 with gl");
        }
        if (suite == "diagrams" || suite == "orbit-fibers" || suite == "quotient") {
            if (is_gl) {
                need(cell.s == cell.m, "needs s = m for the quotient map");
            } else {
                need(cell.n >= 2 * cell.m, "needs n >= 2m for the quotient setting");
                if (cell.kind == "orth") need(cell.m % 2 == 0, "needs even m for the orth quotient");
            }
        }
        if (!is_gl && cell.kind == "symp") need(cell.n % 2 == 0, "needs even n");
    }
}

} // namespace

SuiteReport run_suite(const std::string& suite, const std::vector<GridCell>& grid,
                      std::size_t trials, std::uint64_t master_seed) {
    validate_grid(suite, grid);
    SuiteReport report;
    report.suite = suite;
    Json cells = Json::array();
    for (const auto& cell : grid) cells.push_back(grid_cell_to_json(cell));
    report.parameters = Json{{"grid", cells}, {"seed", master_seed}, {"trials", trials}};

    const auto start = std::chrono::steady_clock::now();
    if (suite == "dims-orth") {
        suite_dims_orth(report, grid, trials, master_seed);
    } else if (suite == "dims-symp") {
        suite_dims_symp(report, grid, trials, master_seed);
    } else if (suite == "dims-gl") {
        suite_dims_gl(report, grid, trials, master_seed);
    } else if (suite == "equivariance") {
        suite_equivariance(report, grid, trials, master_seed);
    } else if (suite == "birationality") {
        suite_birationality(report, grid, trials, master_seed);
    } else if (suite == "quotient") {
        suite_quotient(report, grid, trials, master_seed);
    } else if (suite == "diagrams") {
        suite_diagrams(report, grid, trials, master_seed);
    } else if (suite == "components") {
        suite_components(report, grid, trials, master_seed);
    } else if (suite == "orbit-fibers") {
        suite_orbit_fibers(report, grid, trials, master_seed);
    } else if (suite == "cotangent") {
        suite_cotangent(report, grid, trials, master_seed);
    } else {
        throw InvalidRequest("unknown suite '" + suite + "'");
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

Json dims_rows(const std::vector<GridCell>& grid, std::uint64_t master_seed) {
    Json rows = Json::array();
    for (std::size_t c = 0; c < grid.size(); ++c) {
        const GridCell& cell = grid[c];
        SplitRng rng(SplitRng::derive(master_seed, c));
        Json row = grid_cell_to_json(cell);
        if (cell.kind == "gl") {
            const GlSetting setting = gl_setting(cell);
            const std::size_t formula = setting.s * setting.n + setting.m * setting.n -
                                        setting.s * setting.m;
            auto [a, b] = sample_null(setting, setting.s, setting.m, rng);
            const std::size_t oracle = tangent_dim_at(setting, a, b);
            row["formula"] = formula;
            row["oracle"] = oracle;
            row["flag_route"] =
                dim_flag2(setting.m, setting.s, setting.n) + setting.s * setting.s +
                setting.m * setting.m;
            row["agree"] = formula == oracle;
        } else {
            const OrthSympSetting setting = os_setting(cell);
            const std::size_t r = setting.r();
            const std::size_t jr_formula =
                dim_isotropic_grassmannian(setting.n(), r, setting.v.kind());
            IsotropicSubspace u = sample_isotropic(setting.v, r, rng);
            const std::size_t jr_oracle = tangent_dim_isotropic_at(u);
            ExactMatrix t = sample_null(setting, r, rng);
            const std::size_t total_oracle = tangent_dim_at(setting, t);
            const std::size_t total_formula = setting.m * r + jr_formula;
            row["isotropic_formula"] = jr_formula;
            row["isotropic_uniform_formula"] = isotropic_dim_uniform_formula(setting.n(), r);
            row["isotropic_oracle"] = jr_oracle;
            row["formula"] = total_formula;
            row["oracle"] = total_oracle;
            row["agree"] = jr_formula == jr_oracle && total_formula == total_oracle;
            row["uniform_formula_agrees"] =
                isotropic_dim_uniform_formula(setting.n(), r) ==
                static_cast<long long>(jr_oracle);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace nullcone
