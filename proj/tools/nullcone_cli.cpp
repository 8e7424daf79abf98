// Command-line front-end: dimension tables, verification suites over
// parameter grids, point sampling and preimage resolution, all with
// deterministic seeding and machine-readable JSON reports.
//
// Exit codes: 0 = all pass, 1 = mathematical failure, 2 = usage or parse
// error, 3 = not-unique resolve diagnostic.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nullcone/suites.hpp"

namespace {

using namespace nullcone;

constexpr std::uint64_t kDefaultSeed = 20260808;

struct CellFlags {
    std::string kind = "orth";
    std::size_t n = 4;
    std::size_t m = 2;
    std::size_t s = 0;
    std::string variant;
};

std::vector<GridCell> load_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open grid file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    Json j = parse_json_text(buffer.str());
    if (!j.is_array()) throw ParseError("grid file must hold a JSON list of parameter objects");
    std::vector<GridCell> grid;
    for (const auto& cell : j) grid.push_back(grid_cell_from_json(cell));
    return grid;
}

GridCell cell_from_flags(const CellFlags& flags) {
    GridCell cell;
    cell.kind = flags.kind;
    cell.n = flags.n;
    cell.m = flags.m;
    cell.s = flags.s;
    cell.variant = flags.variant;
    if (cell.kind == "gl" && cell.s == 0) {
        throw ParseError("the gl kind needs --s");
    }
    return cell;
}

void write_json(const std::string& path, const Json& payload) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file '" + path + "'");
    out << payload.dump(2) << "\n";
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_dims(const std::string& grid_path, const CellFlags& flags, bool cell_given,
             std::uint64_t seed, const std::string& json_path) {
    std::vector<GridCell> grid;
    if (!grid_path.empty()) {
        grid = load_grid(grid_path);
    } else if (cell_given) {
        grid = {cell_from_flags(flags)};
    } else {
        for (const char* suite : {"dims-orth", "dims-symp", "dims-gl"}) {
            auto part = default_grid(suite);
            grid.insert(grid.end(), part.begin(), part.end());
        }
    }
    Json rows = dims_rows(grid, seed);
    std::printf("%-6s %3s %3s %3s %9s %8s %7s\n", "kind", "n", "m", "s", "formula", "oracle",
                "agree");
    bool all_agree = true;
    for (const auto& row : rows) {
        const std::string kind = row["kind"].get<std::string>();
        const bool agree = row["agree"].get<bool>();
        all_agree = all_agree && agree;
        const std::string s_col =
            row.contains("s") ? std::to_string(row["s"].get<std::size_t>()) : "-";
        std::printf("%-6s %3zu %3zu %3s %9zu %8zu %7s", kind.c_str(),
                    row["n"].get<std::size_t>(), row["m"].get<std::size_t>(), s_col.c_str(),
                    row["formula"].get<std::size_t>(), row["oracle"].get<std::size_t>(),
                    agree ? "yes" : "NO");
        if (row.contains("uniform_formula_agrees") &&
            !row["uniform_formula_agrees"].get<bool>()) {
            std::printf("   [uniform closed form %lld != oracle %zu for the isotropic family]",
                        row["isotropic_uniform_formula"].get<long long>(),
                        row["isotropic_oracle"].get<std::size_t>());
        }
        std::printf("\n");
    }
    if (!json_path.empty()) write_json(json_path, rows);
    return all_agree ? 0 : 1;
}

int run_verify(const std::string& suite, const std::string& grid_path, const CellFlags& flags,
               bool cell_given, std::size_t trials, bool trials_given, std::uint64_t seed,
               const std::string& json_path) {
    std::vector<GridCell> grid;
    if (!grid_path.empty()) {
        grid = load_grid(grid_path);
    } else if (cell_given) {
        grid = {cell_from_flags(flags)};
    } else {
        grid = default_grid(suite);
    }
    const std::size_t effective_trials = trials_given ? trials : default_trials(suite);
    SuiteReport report = run_suite(suite, grid, effective_trials, seed);
    std::cout << report.suite << ": " << report.passes << "/" << report.trials << " passed ("
              << report.elapsed_ms << " ms)\n";
    for (const auto& note : report.notes) std::cout << "note: " << note << "\n";
    for (const auto& failure : report.failures) {
        std::cout << "FAIL seed=" << failure.seed << " " << failure.description << "\n";
    }
    if (!json_path.empty()) write_json(json_path, report_to_json(report));
    return report.ok() ? 0 : 1;
}

int run_sample(const CellFlags& flags, long rank, long rank_a, long rank_b, std::uint64_t seed,
               bool as_resolution, const std::string& json_path) {
    SplitRng rng(seed);
    Json out;
    if (flags.kind == "gl") {
        GlSetting setting(flags.n, flags.s, flags.m);
        const std::size_t ra = rank_a < 0 ? setting.s : static_cast<std::size_t>(rank_a);
        const std::size_t rb = rank_b < 0 ? setting.m : static_cast<std::size_t>(rank_b);
        if (as_resolution) {
            out = resolution_point_to_json(sample_resolution(setting, ra, rb, rng));
        } else {
            auto [a, b] = sample_null(setting, ra, rb, rng);
            out = null_point_to_json(a, b);
        }
    } else {
        OrthSympSetting setting(
            standard_space(flags.kind == "orth" ? FormKind::symmetric : FormKind::symplectic,
                           flags.n),
            flags.m);
        const std::size_t r = rank < 0 ? setting.r() : static_cast<std::size_t>(rank);
        if (as_resolution) {
            out = resolution_point_to_json(sample_resolution(setting, r, rng));
        } else {
            out = null_point_to_json(sample_null(setting, r, rng));
        }
    }
    std::cout << out.dump(2) << "\n";
    if (!json_path.empty()) write_json(json_path, out);
    return 0;
}

int run_resolve(const CellFlags& flags, const std::string& input_path,
                const std::string& json_path) {
    const Json parsed = parse_json_text(read_input(input_path));
    const ParsedNullPoint point = null_point_from_json(parsed);
    Json out;
    int status = 0;
    if (flags.kind == "gl") {
        if (point.is_os) throw ParseError("input point is tagged 'os' but --kind is gl");
        GlSetting setting(flags.n, flags.s, flags.m);
        const Variant variant =
            flags.variant.empty() ? Variant::nc : parse_variant(flags.variant);
        try {
            switch (variant) {
                case Variant::nc:
                    out = resolution_point_to_json(unique_preimage(setting, point.a, point.b));
                    break;
                case Variant::nc1:
                    out = resolution_point_to_json(
                        unique_preimage_gl1(setting, point.a, point.b));
                    break;
                case Variant::nc2:
                    out = resolution_point_to_json(
                        unique_preimage_gl2(setting, point.a, point.b));
                    break;
                case Variant::nc0:
                    throw ParseError("variant nc0 applies to the orth/symp kinds");
            }
        } catch (const NotUniqueError& e) {
            out = Json{{"error", "not-unique"}, {"detail", e.what()}};
            try {
                switch (variant) {
                    case Variant::nc: {
                        auto [w1, w2] = fiber_witnesses(setting, point.a, point.b);
                        out["witnesses"] = Json::array({resolution_point_to_json(w1),
                                                        resolution_point_to_json(w2)});
                        break;
                    }
                    case Variant::nc1: {
                        auto [w1, w2] = fiber_witnesses_gl1(setting, point.a, point.b);
                        out["witnesses"] = Json::array({resolution_point_to_json(w1),
                                                        resolution_point_to_json(w2)});
                        break;
                    }
                    case Variant::nc2: {
                        auto [w1, w2] = fiber_witnesses_gl2(setting, point.a, point.b);
                        out["witnesses"] = Json::array({resolution_point_to_json(w1),
                                                        resolution_point_to_json(w2)});
                        break;
                    }
                    default: break;
                }
            } catch (const Error& witness_error) {
                out["witnesses_unavailable"] = witness_error.what();
            }
            status = 3;
        }
    } else {
        if (!point.is_os) throw ParseError("input point is tagged 'gl' but --kind is orth/symp");
        OrthSympSetting setting(
            standard_space(flags.kind == "orth" ? FormKind::symmetric : FormKind::symplectic,
                           flags.n),
            flags.m);
        try {
            out = resolution_point_to_json(unique_preimage(setting, point.t));
        } catch (const NotUniqueError& e) {
            out = Json{{"error", "not-unique"}, {"detail", e.what()}};
            try {
                auto [w1, w2] = fiber_witnesses(setting, point.t);
                out["witnesses"] =
                    Json::array({resolution_point_to_json(w1), resolution_point_to_json(w2)});
            } catch (const Error& witness_error) {
                out["witnesses_unavailable"] = witness_error.what();
            }
            status = 3;
        }
    }
    std::cout << out.dump(2) << "\n";
    if (!json_path.empty()) write_json(json_path, out);
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of null cones, their resolutions, and the quotients "
                 "onto two-column conjugacy-class closures"};
    app.require_subcommand(1);

    CellFlags flags;
    std::string grid_path, json_path, input_path, suite;
    std::uint64_t seed = kDefaultSeed;
    std::size_t trials = 0;
    long rank = -1, rank_a = -1, rank_b = -1;
    bool as_resolution = false;

    auto add_cell_flags = [&](CLI::App* cmd) {
        cmd->add_option("--kind", flags.kind, "orth | symp | gl")
            ->check(CLI::IsMember({"orth", "symp", "gl"}));
        cmd->add_option("--n", flags.n, "ambient dimension n");
        cmd->add_option("--m", flags.m, "number of columns m");
        cmd->add_option("--s", flags.s, "number of rows s (gl kind)");
        cmd->add_option("--variant", flags.variant, "nc0 | nc | nc1 | nc2")
            ->check(CLI::IsMember({"nc0", "nc", "nc1", "nc2"}));
    };

    CLI::App* dims = app.add_subcommand("dims", "formula-vs-oracle dimension table");
    add_cell_flags(dims);
    dims->add_option("--grid", grid_path, "JSON grid file");
    dims->add_option("--seed", seed, "master seed");
    dims->add_option("--json", json_path, "write rows to this file");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name")->required()->check(
        CLI::IsMember(suite_names()));
    add_cell_flags(verify);
    verify->add_option("--grid", grid_path, "JSON grid file");
    verify->add_option("--trials", trials, "trial items per grid cell");
    verify->add_option("--seed", seed, "master seed");
    verify->add_option("--json", json_path, "write the report to this file");

    CLI::App* sample = app.add_subcommand("sample", "sample a null or resolution point");
    add_cell_flags(sample);
    sample->add_option("--rank", rank, "target rank (orth/symp kinds)");
    sample->add_option("--rank-a", rank_a, "target rank of a (gl kind)");
    sample->add_option("--rank-b", rank_b, "target rank of b (gl kind)");
    sample->add_option("--seed", seed, "master seed");
    sample->add_flag("--resolution", as_resolution, "emit a resolution point");
    sample->add_option("--json", json_path, "also write the point to this file");

    CLI::App* resolve = app.add_subcommand("resolve", "unique preimage of a null point");
    add_cell_flags(resolve);
    resolve->add_option("--input", input_path, "null point JSON file, or - for stdin")
        ->required();
    resolve->add_option("--json", json_path, "also write the result to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dims->parsed()) {
            const bool cell_given = dims->count("--kind") || dims->count("--n");
            return run_dims(grid_path, flags, cell_given, seed, json_path);
        }
        if (verify->parsed()) {
            const bool cell_given = verify->count("--kind") || verify->count("--n");
            return run_verify(suite, grid_path, flags, cell_given, trials,
                              verify->count("--trials") > 0, seed, json_path);
        }
        if (sample->parsed()) {
            return run_sample(flags, rank, rank_a, rank_b, seed, as_resolution, json_path);
        }
        if (resolve->parsed()) {
            return run_resolve(flags, input_path, json_path);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
