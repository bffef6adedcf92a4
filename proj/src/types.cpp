#include "basta/types.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "basta/processes.hpp"

namespace basta {

namespace {

constexpr double kPmfTolerance = 1e-12;

bool is_probability(double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }

void check_pmf(const std::vector<double>& pmf, const char* what,
               std::vector<std::string>& issues) {
    if (pmf.empty()) {
        issues.push_back(std::string(what) + ": empty pmf");
        return;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < pmf.size(); ++i) {
        if (!is_probability(pmf[i])) {
            std::ostringstream os;
            os << what << "[" << i << "]: probability out of [0,1]: " << pmf[i];
            issues.push_back(os.str());
            return;
        }
        sum += pmf[i];
    }
    if (std::abs(sum - 1.0) > kPmfTolerance) {
        std::ostringstream os;
        os << what << ": pmf sums to " << sum << ", not 1";
        issues.push_back(os.str());
    }
}

std::string joined(const std::vector<std::string>& issues) {
    std::string out = "invalid model spec:";
    for (const auto& issue : issues) {
        out += "\n  - " + issue;
    }
    return out;
}

// Effective long-run arrival rate used only for the advisory stability flag.
// State-dependent arrivals have no single rate; the tail value governs the
// drift in high states.
double effective_arrival_rate(const arrival_spec& arrival) {
    if (const auto* sd = std::get_if<state_dependent_arrival>(&arrival)) {
        return sd->tail_alpha;
    }
    return mean_batch_size(arrival);
}

bool compute_stable(const model_spec& spec) {
    const double lambda = effective_arrival_rate(spec.arrival);
    if (const auto* geo = std::get_if<geometric_service>(&spec.service)) {
        return lambda < geo->beta;
    }
    if (const auto* haz = std::get_if<hazard_service>(&spec.service)) {
        return lambda < haz->hazard.tail;
    }
    const auto& pmf = std::get<iid_service>(spec.service).pmf;
    double mean_duration = 0.0;
    for (std::size_t s = 0; s < pmf.size(); ++s) {
        mean_duration += static_cast<double>(s) * pmf[s];
    }
    return lambda * mean_duration < 1.0;
}

}  // namespace

std::string_view to_string(scheduling_rule rule) {
    switch (rule) {
        case scheduling_rule::eas: return "EAS";
        case scheduling_rule::las_ia: return "LAS-IA";
        case scheduling_rule::las_da: return "LAS-DA";
        case scheduling_rule::la_af: return "LA-AF";
        case scheduling_rule::la_df: return "LA-DF";
    }
    return "?";
}

std::optional<scheduling_rule> rule_from_string(std::string_view name) {
    for (scheduling_rule rule : all_rules) {
        if (name == to_string(rule)) {
            return rule;
        }
    }
    return std::nullopt;
}

bool has_deferred_first_trial(scheduling_rule rule) {
    return rule == scheduling_rule::las_da || rule == scheduling_rule::la_af;
}

spec_error::spec_error(std::vector<std::string> issues)
    : std::runtime_error(joined(issues)), issues_(std::move(issues)) {}

std::vector<std::string> validation_issues(const model_spec& spec) {
    std::vector<std::string> issues;

    if (const auto* bern = std::get_if<bernoulli_arrival>(&spec.arrival)) {
        if (!is_probability(bern->alpha)) {
            issues.push_back("arrival.alpha: probability out of [0,1]");
        }
    } else if (const auto* batch = std::get_if<batch_arrival>(&spec.arrival)) {
        check_pmf(batch->pmf, "arrival.pmf", issues);
    } else {
        const auto& sd = std::get<state_dependent_arrival>(spec.arrival);
        if (sd.alphas.empty()) {
            issues.push_back("arrival.alphas: empty vector");
        }
        for (std::size_t i = 0; i < sd.alphas.size(); ++i) {
            if (!is_probability(sd.alphas[i])) {
                issues.push_back("arrival.alphas[" + std::to_string(i) +
                                 "]: probability out of [0,1]");
            }
        }
        if (!is_probability(sd.tail_alpha)) {
            issues.push_back("arrival.tail_alpha: probability out of [0,1]");
        }
    }

    if (const auto* geo = std::get_if<geometric_service>(&spec.service)) {
        if (!is_probability(geo->beta)) {
            issues.push_back("service.beta: probability out of [0,1]");
        }
    } else if (const auto* haz = std::get_if<hazard_service>(&spec.service)) {
        if (haz->hazard.betas.empty()) {
            issues.push_back("service.betas: empty vector");
        }
        for (std::size_t i = 0; i < haz->hazard.betas.size(); ++i) {
            if (!is_probability(haz->hazard.betas[i])) {
                issues.push_back("service.betas[" + std::to_string(i) +
                                 "]: probability out of [0,1]");
            }
        }
        if (!is_probability(haz->hazard.tail)) {
            issues.push_back("service.tail_beta: probability out of [0,1]");
        }
    } else {
        const auto& pmf = std::get<iid_service>(spec.service).pmf;
        check_pmf(pmf, "service.pmf", issues);
        if (!pmf.empty() && pmf[0] != 0.0) {
            issues.push_back("service.pmf[0]: services take at least one slot");
        }
    }

    if (spec.slots == 0) {
        issues.push_back("slots: must be positive");
    }
    if (spec.warmup >= spec.slots) {
        issues.push_back("warmup: must be smaller than slots");
    }
    if (spec.replications == 0) {
        issues.push_back("replications: must be positive");
    }
    if (spec.max_tracked_state == 0) {
        issues.push_back("max_tracked_state: must be positive");
    }

    return issues;
}

validated_spec validate_spec(const model_spec& spec) {
    auto issues = validation_issues(spec);
    if (!issues.empty()) {
        throw spec_error(std::move(issues));
    }
    return validated_spec(spec, compute_stable(spec));
}

}  // namespace basta
