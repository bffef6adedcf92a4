#pragma once

#include <cstdint>

#include "basta/rng.hpp"
#include "basta/types.hpp"

namespace basta {

// Batch size entering at a potential-arrival instant whose pre-arrival state
// is pre_state. Consumes exactly one uniform draw.
//   bernoulli:        k = 1 iff draw < alpha (pre_state ignored)
//   batch:            inverse CDF, cumulative sums scanned in index order
//   state-dependent:  k = 1 iff draw < alpha(pre_state)
std::uint64_t sample_arrival(const arrival_spec& arrival, std::uint64_t pre_state,
                             rng_stream& rng);

// Completion outcome of one potential-departure trial with current_count
// customers present. Geometric/hazard kinds only; consumes exactly one draw
// (completes iff draw < beta(current_count)). Throws std::logic_error for
// iid services, whose departures are duration bookkeeping in the engine.
bool sample_completion(const service_spec& service, std::uint64_t current_count,
                       rng_stream& rng);

// Whole service duration drawn at commencement, iid services only; inverse
// CDF on one uniform draw. Throws std::logic_error for geometric/hazard kinds.
std::uint64_t sample_service_duration(const service_spec& service, rng_stream& rng);

// Mean batch size sum k*p(k); bernoulli/batch kinds only. State-dependent
// arrivals have no single rate — throws std::logic_error.
double mean_batch_size(const arrival_spec& arrival);

}  // namespace basta
