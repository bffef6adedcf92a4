#include "basta/engine.hpp"

#include <limits>
#include <stdexcept>

#include "basta/processes.hpp"

namespace basta {

namespace {

bool uses_iid_durations(const service_spec& service) {
    return std::holds_alternative<iid_service>(service);
}

// Service begins for the head-of-line customer. For iid services the whole
// duration is drawn here, at the commencement instant.
void commence_service(queue_state& state, const service_spec& service, std::uint64_t slot,
                      rng_stream& rng) {
    state.hol_commencement_slot = slot;
    if (uses_iid_durations(service)) {
        state.hol_remaining = sample_service_duration(service, rng);
    }
}

// Admits a batch of k customers at an arrival instant. An arrival finding a
// free server commences service immediately unless the rule defers access to
// the next edge (LAS-DA).
void admit(queue_state& state, std::uint64_t k, scheduling_rule rule,
           const service_spec& service, std::uint64_t slot, rng_stream& rng) {
    if (k == 0) {
        return;
    }
    if (state.count == 0) {
        state.count = k;
        if (rule != scheduling_rule::las_da) {
            commence_service(state, service, slot, rng);
        }
    } else {
        state.count += k;
    }
}

// One potential-departure epoch. No draw is consumed unless a trial actually
// occurs. Gating: under LAS-DA a service that commenced at this slot's edge
// is first tried one slot later; under LA-AF an arrival of this slot's
// cluster is first tried at the next cluster. The hazard uses the count
// present at the trial instant. On departure the next customer (if any)
// commences service at this very instant.
void departure_trial(queue_state& state, scheduling_rule rule, const service_spec& service,
                     std::uint64_t slot, rng_stream& rng) {
    if (state.count == 0 || !state.hol_commencement_slot.has_value()) {
        return;
    }
    if (has_deferred_first_trial(rule) && *state.hol_commencement_slot == slot) {
        return;
    }
    bool departs;
    if (uses_iid_durations(service)) {
        departs = --*state.hol_remaining == 0;
    } else {
        departs = sample_completion(service, state.count, rng);
    }
    if (!departs) {
        return;
    }
    --state.count;
    if (state.count >= 1) {
        commence_service(state, service, slot, rng);  // FCFS promotion
    } else {
        state.hol_commencement_slot.reset();
        state.hol_remaining.reset();
    }
}

}  // namespace

slot_result advance_slot(queue_state state, scheduling_rule rule, const arrival_spec& arrival,
                         const service_spec& service, std::uint64_t slot, rng_stream& rng) {
    epoch_record rec;
    rec.slot = slot;

    switch (rule) {
        case scheduling_rule::eas:
            // Arrival right after the opening edge, departure right before the
            // closing edge; a same-slot arrival is eligible to depart.
            rec.z_edge = state.count;
            rec.z_pa = state.count;
            rec.batch_size = sample_arrival(arrival, rec.z_pa, rng);
            admit(state, rec.batch_size, rule, service, slot, rng);
            rec.z_center = state.count;
            departure_trial(state, rule, service, slot, rng);
            break;

        case scheduling_rule::las_ia:
            // Departure right after the opening edge, arrival right before the
            // closing edge; an arrival to a free server starts at once and is
            // eligible at the next slot's trial.
            rec.z_edge = state.count;
            departure_trial(state, rule, service, slot, rng);
            rec.z_center = state.count;
            rec.z_pa = state.count;
            rec.batch_size = sample_arrival(arrival, rec.z_pa, rng);
            admit(state, rec.batch_size, rule, service, slot, rng);
            break;

        case scheduling_rule::las_da:
            // As LAS-IA, but an arrival to a free server only starts service at
            // the next edge, and a service that starts at an edge skips that
            // slot's trial: its first trial comes one further slot later.
            rec.z_edge = state.count;
            if (state.count >= 1 && !state.hol_commencement_slot.has_value()) {
                commence_service(state, service, slot, rng);
            }
            departure_trial(state, rule, service, slot, rng);
            rec.z_center = state.count;
            rec.z_pa = state.count;
            rec.batch_size = sample_arrival(arrival, rec.z_pa, rng);
            admit(state, rec.batch_size, rule, service, slot, rng);
            break;

        case scheduling_rule::la_af:
            // Both events in a cluster at the slot end, arrivals first. A
            // customer that commenced in this cluster is not tried in it.
            rec.z_edge = state.count;
            rec.z_center = state.count;
            rec.z_pa = state.count;
            rec.batch_size = sample_arrival(arrival, rec.z_pa, rng);
            admit(state, rec.batch_size, rule, service, slot, rng);
            departure_trial(state, rule, service, slot, rng);
            break;

        case scheduling_rule::la_df:
            // Both events in a cluster at the slot end, departures first; the
            // potential arrival observes the post-departure state.
            rec.z_edge = state.count;
            rec.z_center = state.count;
            departure_trial(state, rule, service, slot, rng);
            rec.z_pa = state.count;
            rec.batch_size = sample_arrival(arrival, rec.z_pa, rng);
            admit(state, rec.batch_size, rule, service, slot, rng);
            break;
    }

    rec.arrival_event = rec.batch_size >= 1;
    return slot_result{state, rec};
}

empirical_report run_simulation(const validated_spec& spec, std::uint64_t replication) {
    const model_spec& m = spec.spec();
    rng_stream rng(m.seed, replication);

    empirical_report report;
    report.max_tracked_state = m.max_tracked_state;
    report.edge_count.assign(report.bucket_count(), 0);
    report.center_count.assign(report.bucket_count(), 0);
    report.pa_count.assign(report.bucket_count(), 0);
    report.prearrival_count.assign(report.bucket_count(), 0);

    queue_state state;
    for (std::uint64_t t = 1; t <= m.slots; ++t) {
        auto [next, rec] = advance_slot(state, m.rule, m.arrival, m.service, t, rng);
        state = next;
        if (t <= m.warmup) {
            continue;
        }
        ++report.total_slots_observed;
        ++report.edge_count[report.bucket(rec.z_edge)];
        ++report.center_count[report.bucket(rec.z_center)];
        ++report.pa_count[report.bucket(rec.z_pa)];
        if (rec.arrival_event) {
            ++report.arrival_events;
            ++report.prearrival_count[report.bucket(rec.z_pa)];
        }
    }

    report.recompute_estimates();
    return report;
}

empirical_report run_replications(const validated_spec& spec) {
    std::vector<empirical_report> reports;
    reports.reserve(spec.spec().replications);
    for (std::uint64_t r = 0; r < spec.spec().replications; ++r) {
        reports.push_back(run_simulation(spec, r));
    }
    return merge_reports(reports);
}

empirical_report merge_reports(std::span<const empirical_report> reports) {
    if (reports.empty()) {
        throw std::invalid_argument("merge_reports: nothing to merge");
    }
    empirical_report merged = reports.front();
    for (std::size_t i = 1; i < reports.size(); ++i) {
        const empirical_report& r = reports[i];
        if (r.max_tracked_state != merged.max_tracked_state) {
            throw std::invalid_argument("merge_reports: mismatched max_tracked_state");
        }
        merged.total_slots_observed += r.total_slots_observed;
        merged.arrival_events += r.arrival_events;
        for (std::size_t b = 0; b < merged.bucket_count(); ++b) {
            merged.edge_count[b] += r.edge_count[b];
            merged.center_count[b] += r.center_count[b];
            merged.pa_count[b] += r.pa_count[b];
            merged.prearrival_count[b] += r.prearrival_count[b];
        }
    }
    merged.recompute_estimates();
    return merged;
}

}  // namespace basta
