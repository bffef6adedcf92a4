#pragma once

// Test-only oracles, kept independent of the library's analytic code path:
// stationary distributions are obtained by assembling the one-step transition
// probabilities between consecutive potential-arrival epochs from the rule's
// event order and running power iteration on the full matrix. No product
// form, no closed form.

#include <cmath>
#include <functional>
#include <vector>

#include "basta/types.hpp"

namespace oracle {

using state_fn = std::function<double(std::uint64_t)>;

struct tridiagonal_chain {
    std::vector<double> up;    // P(n -> n+1)
    std::vector<double> down;  // P(n -> n-1)
};

// Power iteration on a birth-death-shaped chain truncated at n_states-1
// (excess up-flow at the boundary reflects in place).
inline std::vector<double> stationary(const tridiagonal_chain& chain, std::size_t n_states) {
    std::vector<double> pi(n_states, 1.0 / static_cast<double>(n_states));
    std::vector<double> next(n_states, 0.0);
    for (int iter = 0; iter < 500000; ++iter) {
        for (std::size_t n = 0; n < n_states; ++n) {
            const double stay = 1.0 - chain.up[n] - chain.down[n];
            next[n] = pi[n] * stay;
        }
        for (std::size_t n = 0; n + 1 < n_states; ++n) {
            next[n + 1] += pi[n] * chain.up[n];
            next[n] += pi[n + 1] * chain.down[n + 1];
        }
        next[n_states - 1] += pi[n_states - 1] * chain.up[n_states - 1];  // reflect
        double delta = 0.0;
        for (std::size_t n = 0; n < n_states; ++n) {
            delta += std::abs(next[n] - pi[n]);
        }
        pi.swap(next);
        if (delta < 1e-15) {
            break;
        }
    }
    return pi;
}

// Chain of the state just before consecutive potential-arrival instants,
// simple arrivals. Between two such instants the events are: the arrival of
// the current slot, then the next slot's potential departure, which therefore
// sees the post-arrival count. A customer arriving to an empty system cannot
// be tried before the next potential-arrival instant under LAS-DA/LA-AF.
inline std::vector<double> prearrival_stationary(basta::scheduling_rule rule,
                                                 const state_fn& alpha, const state_fn& hazard,
                                                 std::size_t n_states) {
    tridiagonal_chain chain;
    chain.up.resize(n_states);
    chain.down.resize(n_states);
    for (std::size_t n = 0; n < n_states; ++n) {
        const double a = alpha(n);
        double no_completion_given_arrival;
        if (n == 0) {
            no_completion_given_arrival =
                basta::has_deferred_first_trial(rule) ? 1.0 : 1.0 - hazard(1);
        } else {
            no_completion_given_arrival = 1.0 - hazard(n + 1);
        }
        chain.up[n] = a * no_completion_given_arrival;
        chain.down[n] = n == 0 ? 0.0 : (1.0 - a) * hazard(n);
    }
    return stationary(chain, n_states);
}

// Slot-edge chain for LA-DF: within a slot the potential departure (seeing
// the edge count) precedes the potential arrival.
inline std::vector<double> ladf_edge_stationary(double alpha, const state_fn& hazard,
                                                std::size_t n_states) {
    tridiagonal_chain chain;
    chain.up.resize(n_states);
    chain.down.resize(n_states);
    for (std::size_t n = 0; n < n_states; ++n) {
        const double completion = n == 0 ? 0.0 : hazard(n);
        chain.up[n] = alpha * (1.0 - completion);
        chain.down[n] = (1.0 - alpha) * completion;
    }
    return stationary(chain, n_states);
}

}  // namespace oracle
