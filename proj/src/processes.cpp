#include "basta/processes.hpp"

#include <stdexcept>

namespace basta {

std::uint64_t sample_arrival(const arrival_spec& arrival, std::uint64_t pre_state,
                             rng_stream& rng) {
    const double u = rng.next_uniform();
    if (const auto* bern = std::get_if<bernoulli_arrival>(&arrival)) {
        return u < bern->alpha ? 1 : 0;
    }
    if (const auto* batch = std::get_if<batch_arrival>(&arrival)) {
        double cumulative = 0.0;
        for (std::size_t k = 0; k < batch->pmf.size(); ++k) {
            cumulative += batch->pmf[k];
            if (u < cumulative) {
                return k;
            }
        }
        return batch->pmf.size() - 1;  // absorbs rounding slack at u ~ 1
    }
    const auto& sd = std::get<state_dependent_arrival>(arrival);
    const double alpha = pre_state < sd.alphas.size() ? sd.alphas[pre_state] : sd.tail_alpha;
    return u < alpha ? 1 : 0;
}

bool sample_completion(const service_spec& service, std::uint64_t current_count,
                       rng_stream& rng) {
    if (current_count == 0) {
        throw std::logic_error("sample_completion: no customer present");
    }
    double beta;
    if (const auto* geo = std::get_if<geometric_service>(&service)) {
        beta = geo->beta;
    } else if (const auto* haz = std::get_if<hazard_service>(&service)) {
        beta = haz->hazard.at(current_count);
    } else {
        throw std::logic_error("sample_completion: iid service has no per-trial hazard");
    }
    return rng.next_uniform() < beta;
}

std::uint64_t sample_service_duration(const service_spec& service, rng_stream& rng) {
    const auto* iid = std::get_if<iid_service>(&service);
    if (iid == nullptr) {
        throw std::logic_error("sample_service_duration: service is not an iid duration law");
    }
    const double u = rng.next_uniform();
    double cumulative = 0.0;
    for (std::size_t s = 0; s < iid->pmf.size(); ++s) {
        cumulative += iid->pmf[s];
        if (u < cumulative) {
            return s;
        }
    }
    return iid->pmf.size() - 1;
}

double mean_batch_size(const arrival_spec& arrival) {
    if (const auto* bern = std::get_if<bernoulli_arrival>(&arrival)) {
        return bern->alpha;
    }
    if (const auto* batch = std::get_if<batch_arrival>(&arrival)) {
        double mean = 0.0;
        for (std::size_t k = 0; k < batch->pmf.size(); ++k) {
            mean += static_cast<double>(k) * batch->pmf[k];
        }
        return mean;
    }
    throw std::logic_error("mean_batch_size: state-dependent arrivals have no single rate");
}

}  // namespace basta
