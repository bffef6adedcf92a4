#include "basta/report.hpp"

#include <limits>

#include "basta/distribution.hpp"

namespace basta {

void empirical_report::recompute_estimates() {
    pi_edge.clear();
    pi_center.clear();
    pi_pa.clear();
    pi_prearrival.clear();
    lambda_n_hat.clear();
    lambda_hat = 0.0;
    if (total_slots_observed == 0) {
        return;
    }

    pi_edge = normalize_counts(edge_count);
    pi_center = normalize_counts(center_count);
    pi_pa = normalize_counts(pa_count);
    lambda_hat = static_cast<double>(arrival_events) / static_cast<double>(total_slots_observed);

    if (arrival_events == 0) {
        return;  // pre-arrival estimates undefined; vectors stay empty
    }
    pi_prearrival = normalize_counts(prearrival_count);
    lambda_n_hat.assign(bucket_count(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t n = 0; n < bucket_count(); ++n) {
        if (pa_count[n] > 0) {
            lambda_n_hat[n] =
                static_cast<double>(prearrival_count[n]) / static_cast<double>(pa_count[n]);
        }
    }
}

}  // namespace basta
