#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "basta/types.hpp"
#include "basta/verify.hpp"

namespace basta {

class config_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter grid for the sweep command; the cross product rule x alpha x beta
// overrides the base model cell by cell.
struct sweep_grid {
    std::vector<scheduling_rule> rules;
    std::vector<double> alphas;  // applied to Bernoulli arrivals
    std::vector<double> betas;   // applied to geometric service

    bool operator==(const sweep_grid&) const = default;
};

struct experiment_config {
    model_spec model;
    check_thresholds thresholds;
    std::optional<sweep_grid> sweep;

    bool operator==(const experiment_config&) const = default;
};

// Reads a JSON config file. Defaults: warmup 10000, seed 0, replications 1,
// max_tracked_state 1000, verify-default thresholds. Errors carry the
// offending field path ("service.beta: ...", "unknown rule: LIFO").
experiment_config parse_config(const std::filesystem::path& path);

// Same, from an already-parsed document; context prefixes diagnostics.
experiment_config config_from_json(const nlohmann::json& doc, const std::string& context);

// Lossless inverse of parsing: parse(serialize(c)) == c.
nlohmann::json config_to_json(const experiment_config& config);

}  // namespace basta
