#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace basta {

// The five slot-scheduling rules. They differ in where the potential arrival
// and potential departure of a slot sit relative to the slot edges, and in
// whether a customer that arrived to an empty system may be tried for
// departure before the next potential-arrival instant.
enum class scheduling_rule : std::uint8_t {
    eas,     // early arrivals, departures at slot end; same-slot departure possible
    las_ia,  // late arrivals, immediate access
    las_da,  // late arrivals, delayed access (service starts at the next edge)
    la_af,   // arrivals and departures at slot end, arrivals first
    la_df,   // arrivals and departures at slot end, departures first
};

inline constexpr std::array<scheduling_rule, 5> all_rules = {
    scheduling_rule::eas, scheduling_rule::las_ia, scheduling_rule::las_da,
    scheduling_rule::la_af, scheduling_rule::la_df};

std::string_view to_string(scheduling_rule rule);
std::optional<scheduling_rule> rule_from_string(std::string_view name);

// Rules under which a customer arriving to an empty system cannot be tried
// for departure before the next potential-arrival instant.
bool has_deferred_first_trial(scheduling_rule rule);

// Per-count service completion probabilities: at(j) is the probability that
// the customer in service completes at a potential-departure epoch when j
// customers are present. betas[0] holds the value for j = 1; counts past the
// vector fall back to tail.
struct hazard_fn {
    std::vector<double> betas;
    double tail = 0.0;

    double at(std::uint64_t count) const {
        return count <= betas.size() ? betas[count - 1] : tail;
    }
    bool operator==(const hazard_fn&) const = default;
};

// Arrival laws. Bernoulli and batch arrivals ignore the pre-arrival state
// (lack of anticipation); state-dependent arrivals deliberately violate it.
struct bernoulli_arrival {
    double alpha = 0.0;
    bool operator==(const bernoulli_arrival&) const = default;
};
struct batch_arrival {
    std::vector<double> pmf;  // pmf[k] = P(batch size == k), finite support
    bool operator==(const batch_arrival&) const = default;
};
struct state_dependent_arrival {
    std::vector<double> alphas;  // alphas[n] = P(single arrival | pre-arrival state n)
    double tail_alpha = 0.0;     // applied to states past the vector
    bool operator==(const state_dependent_arrival&) const = default;
};
using arrival_spec = std::variant<bernoulli_arrival, batch_arrival, state_dependent_arrival>;

// Service laws. Geometric and hazard services resolve per trial; iid services
// draw a whole duration at commencement and count down eligible trials.
struct geometric_service {
    double beta = 0.0;
    bool operator==(const geometric_service&) const = default;
};
struct hazard_service {
    hazard_fn hazard;
    bool operator==(const hazard_service&) const = default;
};
struct iid_service {
    std::vector<double> pmf;  // pmf[s] = P(duration == s slots); pmf[0] must be 0
    bool operator==(const iid_service&) const = default;
};
using service_spec = std::variant<geometric_service, hazard_service, iid_service>;

// One full experiment definition.
struct model_spec {
    scheduling_rule rule = scheduling_rule::eas;
    arrival_spec arrival = bernoulli_arrival{};
    service_spec service = geometric_service{};
    std::uint64_t slots = 0;
    std::uint64_t warmup = 10'000;
    std::uint64_t seed = 0;
    std::uint64_t replications = 1;
    std::uint64_t max_tracked_state = 1'000;

    bool operator==(const model_spec&) const = default;
};

class spec_error : public std::runtime_error {
  public:
    explicit spec_error(std::vector<std::string> issues);
    const std::vector<std::string>& issues() const { return issues_; }

  private:
    std::vector<std::string> issues_;
};

// A model_spec that passed validation, with its advisory stability flag.
// The flag never blocks a run: sample-path identities hold regardless.
class validated_spec {
  public:
    const model_spec& spec() const { return spec_; }
    bool stable() const { return stable_; }

  private:
    friend validated_spec validate_spec(const model_spec&);
    validated_spec(model_spec spec, bool stable) : spec_(std::move(spec)), stable_(stable) {}
    model_spec spec_;
    bool stable_;
};

// All validation issues for a spec, empty when valid.
std::vector<std::string> validation_issues(const model_spec& spec);

// Throws spec_error carrying the full issue list when invalid.
validated_spec validate_spec(const model_spec& spec);
inline const validated_spec& validate_spec(const validated_spec& spec) { return spec; }

}  // namespace basta
