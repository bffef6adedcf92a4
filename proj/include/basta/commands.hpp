#pragma once

#include <filesystem>
#include <optional>

#include "basta/config.hpp"

namespace basta {

// Process exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;          // all checks passed / nothing to check
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_io_error = 2;
inline constexpr int exit_infeasible = 3;  // invalid spec or no analytic form

struct command_options {
    std::filesystem::path out_dir = "./out";
    std::optional<std::uint64_t> seed_override;
};

// simulate: runs the model (merging replications), writes
// distributions.csv + summary.json.
int cmd_simulate(const experiment_config& config, const command_options& options);

// analytic: writes the rule's stationary pre-arrival pmf to analytic.csv
// + analytic_summary.json. Geometric/hazard service only; iid service or an
// unstable spec exits 3.
int cmd_analytic(const experiment_config& config, const command_options& options);

// verify: simulates, runs every applicable check, writes checks.csv (one row
// per check) alongside the simulate outputs. Exits 0 only when all pass.
int cmd_verify(const experiment_config& config, const command_options& options);

// sweep: verify over the config's parameter grid, one sweep.csv row per
// (cell, check); cell seeds are seed + cell_index. Cells may run concurrently
// (BASTA_THREADS caps the worker count); rows are written in cell order.
int cmd_sweep(const experiment_config& config, const command_options& options);

}  // namespace basta
