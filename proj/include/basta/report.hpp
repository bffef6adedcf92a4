#pragma once

#include <cstdint>
#include <vector>

namespace basta {

// Counts and normalized estimates from one run (or a merge of replications).
// All count vectors are indexed by state 0..max_tracked_state with one extra
// trailing overflow bucket. Four epoch families are recorded per slot:
//   edge        state at the slot's opening edge
//   center      state at the slot center
//   pa          state just before the slot's potential-arrival instant
//   prearrival  state seen by an actual arrival event (one observation per
//               event, batches included)
struct empirical_report {
    std::uint64_t max_tracked_state = 0;
    std::uint64_t total_slots_observed = 0;
    std::uint64_t arrival_events = 0;

    std::vector<std::uint64_t> edge_count;
    std::vector<std::uint64_t> center_count;
    std::vector<std::uint64_t> pa_count;
    std::vector<std::uint64_t> prearrival_count;

    // Derived estimates; pi_prearrival and lambda_n_hat stay empty when no
    // arrival event was observed. lambda_n_hat(n) is NaN where pa_count(n)=0.
    std::vector<double> pi_edge;
    std::vector<double> pi_center;
    std::vector<double> pi_pa;
    std::vector<double> pi_prearrival;
    std::vector<double> lambda_n_hat;
    double lambda_hat = 0.0;

    std::size_t bucket_count() const { return static_cast<std::size_t>(max_tracked_state) + 2; }
    std::size_t overflow_index() const { return bucket_count() - 1; }
    std::size_t bucket(std::uint64_t state) const {
        return state <= max_tracked_state ? static_cast<std::size_t>(state) : overflow_index();
    }

    // Rebuilds the derived estimates from the counts.
    void recompute_estimates();

    bool operator==(const empirical_report&) const = default;
};

}  // namespace basta
