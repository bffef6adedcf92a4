#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "basta/report.hpp"
#include "basta/rng.hpp"
#include "basta/types.hpp"

namespace basta {

// Number in system plus head-of-line bookkeeping. Both optionals are absent
// when the system is empty. hol_commencement_slot is absent while a LAS-DA
// arrival waits for the next edge to start service; hol_remaining is used by
// iid services only and counts eligible trials left until departure.
struct queue_state {
    std::uint64_t count = 0;
    std::optional<std::uint64_t> hol_commencement_slot;
    std::optional<std::uint64_t> hol_remaining;

    bool operator==(const queue_state&) const = default;
};

// Observations taken at the defined instants of one slot.
struct epoch_record {
    std::uint64_t slot = 0;
    std::uint64_t z_edge = 0;
    std::uint64_t z_center = 0;
    std::uint64_t z_pa = 0;        // state just before the potential-arrival instant
    std::uint64_t batch_size = 0;  // 0 when no arrival event
    bool arrival_event = false;
};

struct slot_result {
    queue_state state;
    epoch_record record;
};

// Executes one slot (t-1, t] under the rule's micro-event table. Observation
// placement and RNG consumption follow the event order exactly; a completion
// draw is consumed only when an eligible trial occurs, and iid duration draws
// happen at commencement instants (arrival to a free server, LAS-DA edge
// start, FCFS promotion at a departure).
//
//   EAS     edge | pa | arrival  | center | departure trial
//   LAS-IA  edge | departure trial | center | pa | arrival
//   LAS-DA  edge+start of any waiting service | departure trial (skipped when
//           service started at this edge) | center | pa | arrival (to a free
//           server: service deferred to the next edge)
//   LA-AF   edge = center = pa | arrival | departure trial (head of line
//           eligible only if its service started in an earlier slot)
//   LA-DF   edge = center | departure trial | pa | arrival
slot_result advance_slot(queue_state state, scheduling_rule rule, const arrival_spec& arrival,
                         const service_spec& service, std::uint64_t slot, rng_stream& rng);

// Runs slots 1..slots from an empty system, discarding observations for
// slots <= warmup. The stream is rng_stream(seed, replication).
empirical_report run_simulation(const validated_spec& spec, std::uint64_t replication = 0);

// Runs spec.replications independent replications and merges them.
empirical_report run_replications(const validated_spec& spec);

// Sums counts across reports and recomputes estimates; associative and
// order-independent. Throws std::invalid_argument on mismatched
// max_tracked_state.
empirical_report merge_reports(std::span<const empirical_report> reports);

}  // namespace basta
