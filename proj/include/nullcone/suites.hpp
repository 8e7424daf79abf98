#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nullcone/serialization.hpp"

namespace nullcone {

/// One cell of a verification grid. `kind` is "orth", "symp" or "gl";
/// `s` is used by the gl kind only; `variant` selects a resolution where
/// the suite is variant-specific.
struct GridCell {
    std::string kind;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t s = 0;
    std::string variant;
};

Json grid_cell_to_json(const GridCell& cell);
GridCell grid_cell_from_json(const Json& j);

struct Failure {
    std::uint64_t seed = 0;
    std::string description;
    Json witnesses;
};

/// Result of one suite run; reproducible from (suite, grid, master seed)
/// up to the elapsed field.
struct SuiteReport {
    std::string suite;
    Json parameters;
    std::size_t trials = 0;
    std::size_t passes = 0;
    std::vector<Failure> failures;
    std::vector<std::string> notes;
    std::int64_t elapsed_ms = 0;

    bool ok() const { return failures.empty() && passes == trials; }
};

Json report_to_json(const SuiteReport& report);

const std::vector<std::string>& suite_names();
std::vector<GridCell> default_grid(const std::string& suite);
std::size_t default_trials(const std::string& suite);

/// Runs a named suite over the grid: `trials` trial items per cell, with
/// per-trial seeds derived from the master seed by cell and trial index.
SuiteReport run_suite(const std::string& suite, const std::vector<GridCell>& grid,
                      std::size_t trials, std::uint64_t master_seed);

/// Formula-vs-oracle dimension table rows for the dims command.
Json dims_rows(const std::vector<GridCell>& grid, std::uint64_t master_seed);

} // namespace nullcone
