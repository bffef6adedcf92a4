#include "basta/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace basta {

namespace {

// beta(0): the completion probability an arrival-to-empty faces before the
// next potential-arrival instant. Zero for the deferred-start group; the
// first-trial hazard for the others.
double idle_hazard(const hazard_fn& beta, scheduling_rule rule) {
    return has_deferred_first_trial(rule) ? 0.0 : beta.at(1);
}

// Ratio pi(n+1)/pi(n) of the pre-potential-arrival chain the engine realizes.
// The potential departure between consecutive potential-arrival instants
// follows the arrival, so both hazard factors sit at the post-arrival count
// n+1; at n = 0 the numerator uses the rule-resolved idle hazard. Equals
// gamma_ratio(n) whenever the hazard is flat across n and n+1 — in
// particular for every constant-hazard model and always at n = 0.
double step_ratio(const birth_death_spec& spec, std::uint64_t n) {
    const double up_hazard = n == 0 ? idle_hazard(spec.beta, spec.rule) : spec.beta.at(n + 1);
    const double down_hazard = spec.beta.at(n + 1);
    if (down_hazard <= 0.0) {
        throw std::domain_error("birth-death ratio: beta(" + std::to_string(n + 1) +
                                ") is zero");
    }
    return spec.alpha * (1.0 - up_hazard) / (down_hazard * (1.0 - spec.alpha));
}

double tail_ratio(const birth_death_spec& spec) {
    if (spec.beta.tail <= 0.0) {
        throw std::domain_error("birth-death ratio: tail hazard is zero");
    }
    return spec.alpha * (1.0 - spec.beta.tail) / (spec.beta.tail * (1.0 - spec.alpha));
}

analytic_pmf product_form(const birth_death_spec& spec, pmf_options options,
                          pmf_source source) {
    const double g_tail = tail_ratio(spec);
    if (g_tail >= 1.0) {
        throw std::domain_error("unstable: tail ratio >= 1, stationary distribution undefined");
    }

    // Unnormalized weights w(0) = 1, w(n) = g(0) * prod_{j=1}^{n-1} g(j).
    // Once inside the flat tail the remaining weight is bounded by
    // product * g_tail / (1 - g_tail), which drives the truncation.
    std::vector<double> weights{1.0};
    double product = step_ratio(spec, 0);
    for (std::size_t n = 1; n <= options.n_max; ++n) {
        weights.push_back(product);
        const bool in_tail = n + 1 > spec.beta.betas.size();
        if (in_tail && product * g_tail / (1.0 - g_tail) < options.tail_tol) {
            break;
        }
        product *= step_ratio(spec, n);
    }

    double total = 0.0;
    for (double w : weights) {
        total += w;
    }
    // Account for the un-emitted remainder so pi(0) is exact to ~tail_tol.
    const double remainder = weights.back() * g_tail / (1.0 - g_tail);
    total += remainder;

    analytic_pmf pmf;
    pmf.source = source;
    pmf.probs.reserve(weights.size());
    double emitted = 0.0;
    for (double w : weights) {
        pmf.probs.push_back(w / total);
        emitted += w / total;
    }
    pmf.tail_mass = std::max(0.0, 1.0 - emitted);
    return pmf;
}

}  // namespace

std::string_view to_string(pmf_source source) {
    switch (source) {
        case pmf_source::product_form: return "product_form";
        case pmf_source::product_form_deferred_start: return "product_form_deferred_start";
        case pmf_source::product_form_immediate_start: return "product_form_immediate_start";
        case pmf_source::edge_map: return "edge_map";
        case pmf_source::edge_map_uniform: return "edge_map_uniform";
        case pmf_source::geometric_closed_form: return "geometric_closed_form";
    }
    return "?";
}

double gamma_ratio(double alpha, const hazard_fn& beta, scheduling_rule rule, std::uint64_t j) {
    const double beta_j = j == 0 ? idle_hazard(beta, rule) : beta.at(j);
    const double beta_next = beta.at(j + 1);
    if (beta_next <= 0.0) {
        throw std::domain_error("gamma_ratio: beta(" + std::to_string(j + 1) + ") is zero");
    }
    return alpha * (1.0 - beta_j) / (beta_next * (1.0 - alpha));
}

analytic_pmf prearrival_pmf(const birth_death_spec& spec, pmf_options options) {
    return product_form(spec, options, pmf_source::product_form);
}

analytic_pmf prearrival_pmf_for_rule(const birth_death_spec& spec, pmf_options options) {
    const pmf_source source = has_deferred_first_trial(spec.rule)
                                  ? pmf_source::product_form_deferred_start
                                  : pmf_source::product_form_immediate_start;
    return product_form(spec, options, source);
}

analytic_pmf prearrival_from_edge(std::span<const double> alphas, double tail_alpha,
                                  const hazard_fn& beta, std::span<const double> pi_edge) {
    auto alpha_at = [&](std::size_t n) {
        return n < alphas.size() ? alphas[n] : tail_alpha;
    };

    double normalizer = 0.0;
    for (std::size_t n = 0; n < pi_edge.size(); ++n) {
        normalizer += alpha_at(n) * pi_edge[n];
    }
    if (normalizer <= 0.0) {
        throw std::domain_error("prearrival_from_edge: arrival rate under pi_edge is zero");
    }

    analytic_pmf pmf;
    pmf.source = pmf_source::edge_map;
    pmf.probs.resize(pi_edge.size());
    for (std::size_t n = 0; n < pi_edge.size(); ++n) {
        const double stay = n == 0 ? 1.0 : 1.0 - beta.at(n);  // empty at the edge: no departure
        const double next_edge = n + 1 < pi_edge.size() ? pi_edge[n + 1] : 0.0;
        pmf.probs[n] =
            (alpha_at(n) * stay * pi_edge[n] + alpha_at(n + 1) * beta.at(n + 1) * next_edge) /
            normalizer;
    }

    double emitted = 0.0;
    for (double p : pmf.probs) {
        emitted += p;
    }
    pmf.tail_mass = std::max(0.0, 1.0 - emitted);
    return pmf;
}

analytic_pmf prearrival_from_edge(double alpha, const hazard_fn& beta,
                                  std::span<const double> pi_edge) {
    const std::vector<double> uniform{alpha};
    analytic_pmf pmf = prearrival_from_edge(uniform, alpha, beta, pi_edge);
    pmf.source = pmf_source::edge_map_uniform;
    return pmf;
}

analytic_pmf geometric_closed_form(double alpha, double beta, scheduling_rule rule,
                                   pmf_options options) {
    if (beta <= 0.0 || alpha >= 1.0) {
        throw std::domain_error("geometric_closed_form: degenerate parameters");
    }
    const double gamma = alpha * (1.0 - beta) / (beta * (1.0 - alpha));
    if (gamma >= 1.0) {
        throw std::domain_error("unstable: gamma >= 1");
    }

    analytic_pmf pmf;
    pmf.source = pmf_source::geometric_closed_form;
    if (alpha == 0.0) {
        pmf.probs = {1.0};
        return pmf;
    }

    double p0;
    double first;  // pi(1)
    if (has_deferred_first_trial(rule)) {
        const double c = alpha / (beta * (1.0 - alpha));
        p0 = 1.0 / (1.0 + c / (1.0 - gamma));
        first = c * p0;
    } else {
        p0 = 1.0 - gamma;
        first = gamma * p0;
    }

    pmf.probs.push_back(p0);
    double term = first;
    for (std::size_t n = 1; n <= options.n_max; ++n) {
        pmf.probs.push_back(term);
        if (term * gamma / (1.0 - gamma) < options.tail_tol) {
            break;
        }
        term *= gamma;
    }

    double emitted = 0.0;
    for (double p : pmf.probs) {
        emitted += p;
    }
    pmf.tail_mass = std::max(0.0, 1.0 - emitted);
    return pmf;
}

}  // namespace basta
