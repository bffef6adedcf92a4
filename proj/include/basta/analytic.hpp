#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "basta/types.hpp"

namespace basta {

// Which construction produced an analytic_pmf.
enum class pmf_source : std::uint8_t {
    product_form,                  // birth-death product form, caller-resolved idle hazard
    product_form_deferred_start,   // rule group with beta(0) = 0 (LAS-DA, LA-AF)
    product_form_immediate_start,  // rule group with beta(0) = beta (EAS, LAS-IA, LA-DF)
    edge_map,                      // pre-arrival law mapped from an edge distribution
    edge_map_uniform,              // same map, state-independent arrivals
    geometric_closed_form,
};
std::string_view to_string(pmf_source source);

// Truncated stationary probability vector with explicit residual mass.
struct analytic_pmf {
    std::vector<double> probs;  // probs[n] for n = 0..probs.size()-1
    double tail_mass = 0.0;
    pmf_source source = pmf_source::product_form;
};

// Birth-death model with Bernoulli arrivals: alpha in (0,1), completion
// probabilities by count present, and the scheduling rule that fixes what
// happens to an arrival finding the system empty.
struct birth_death_spec {
    double alpha = 0.0;
    hazard_fn beta;
    scheduling_rule rule = scheduling_rule::eas;
};

// gamma(j) = alpha*(1 - beta(j)) / (beta(j+1)*(1 - alpha)), with beta(0)
// resolved from the rule: 0 for the deferred-start group (LAS-DA, LA-AF),
// the first-trial hazard beta(1) for the immediate-start group.
// Throws std::domain_error when beta(j+1) = 0.
double gamma_ratio(double alpha, const hazard_fn& beta, scheduling_rule rule, std::uint64_t j);

struct pmf_options {
    double tail_tol = 1e-12;   // stop once the geometric tail bound drops below this
    std::size_t n_max = 10'000;  // hard cap on emitted states
};

// Stationary pre-potential-arrival distribution of the birth-death model:
// pi(0) = [1 + g(0)*(1 + sum_{k>=2} prod_{j=1}^{k-1} g(j))]^{-1} and
// pi(n) = g(0)*prod_{j=1}^{n-1} g(j) * pi(0), where g(n) is the ratio of
// consecutive stationary probabilities of the chain the engine realizes.
// The potential departure between two consecutive potential-arrival instants
// always follows the arrival, so its completion draw sees the post-arrival
// count: g(n) evaluates both hazard factors at count n+1 (g(0) has the
// rule-resolved idle hazard in the numerator). For constant hazards g(j)
// equals gamma_ratio(j) at every j. Truncation: series terms stop when the
// running product's geometric bound falls below tail_tol or at n_max; the
// residual is reported as tail_mass, never dropped.
// Throws std::domain_error when the tail ratio is >= 1 (unstable spec).
analytic_pmf prearrival_pmf(const birth_death_spec& spec, pmf_options options = {});

// Same computation, source-labelled by the rule's group.
analytic_pmf prearrival_pmf_for_rule(const birth_death_spec& spec, pmf_options options = {});

// LA-DF pre-arrival law from a slot-edge distribution:
//   pi_a(n) ∝ alpha(n)*(1 - beta(n))*pi(n) + alpha(n+1)*beta(n+1)*pi(n+1)
// normalized by sum_k alpha(k)*pi(k). beta is indexed by the count present at
// the slot's departure trial, so beta(0) = 0 (an empty-at-edge system has no
// one to serve before the arrival instant). pi_edge is treated as exact and
// may be analytic or empirical. Throws std::domain_error when the normalizer
// is zero.
analytic_pmf prearrival_from_edge(std::span<const double> alphas, double tail_alpha,
                                  const hazard_fn& beta, std::span<const double> pi_edge);

// State-independent reduction: pi_a(n) = (1 - beta(n))*pi(n) + beta(n+1)*pi(n+1).
analytic_pmf prearrival_from_edge(double alpha, const hazard_fn& beta,
                                  std::span<const double> pi_edge);

// Constant-hazard closed forms, gamma = alpha*(1-beta)/(beta*(1-alpha)):
//   immediate-start group: pi_a(n) = (1 - gamma) * gamma^n
//   deferred-start group:  pi_a(0) = [1 + (alpha/(beta*(1-alpha)))/(1-gamma)]^{-1},
//                          pi_a(n) = (alpha/(beta*(1-alpha))) * gamma^{n-1} * pi_a(0)
// Agrees with prearrival_pmf_for_rule to 1e-10 per state.
// Throws std::domain_error when gamma >= 1.
analytic_pmf geometric_closed_form(double alpha, double beta, scheduling_rule rule,
                                   pmf_options options = {});

}  // namespace basta
