#pragma once

#include <optional>
#include <string>
#include <vector>

#include "basta/analytic.hpp"
#include "basta/report.hpp"
#include "basta/types.hpp"

namespace basta {

struct check_result {
    std::string name;
    bool passed = false;
    double statistic = 0.0;
    double threshold = 0.0;
    std::vector<double> details;  // per-state residuals where applicable (NaN = skipped state)
};

// Default thresholds, calibrated to T = 1e6 slots (about 3e5 arrival events,
// per-cell standard error near 0.002, TV budget 0.01).
struct check_thresholds {
    double rate_identity = 1e-12;
    double basta = 0.01;
    double epoch = 0.01;
    double ladf = 0.01;
    double analytic = 0.015;
};

// Exact finite-horizon rate identity: for every state n with pa_count(n) > 0,
// lambda_n_hat(n)*pi_pa(n) equals lambda_hat*pi_prearrival(n) — both reduce
// to prearrival_count(n)/total_slots — so the statistic is the largest
// relative residual and the default threshold is 1e-12. Holds for every rule
// and every arrival law, state-dependent ones included.
// Throws std::invalid_argument when the report has no arrival events.
check_result check_rate_identity(const empirical_report& report, double threshold = 1e-12);

// Arrivals-see-time-averages: TV(pi_prearrival, pi_pa). Statistical; passes
// for any lack-of-anticipation arrival law, fails for state-dependent ones.
check_result check_basta(const empirical_report& report, double threshold = 0.01);

// Which time-average the pre-arrival law coincides with, per rule:
//   EAS              TV(pi_prearrival, pi_edge)
//   LA-AF            TV(pi_prearrival, pi_edge) and TV(pi_prearrival, pi_center)
//   LAS-IA, LAS-DA   TV(pi_prearrival, pi_center)
//   LA-DF            no epoch equality holds; routes to the edge relation below
//                    when a service hazard is available, else emits nothing.
// Caller asserts the arrival law is state-independent.
std::vector<check_result> check_epoch_equivalence(const empirical_report& report,
                                                  scheduling_rule rule,
                                                  const std::optional<hazard_fn>& service_hazard = {},
                                                  double threshold = 0.01);

// LA-DF only: TV between pi_prearrival and the edge-mapped law
// prearrival_from_edge(alpha-uniform, beta, pi_edge).
check_result check_ladf_edge_relation(const empirical_report& report, const hazard_fn& beta,
                                      double threshold = 0.01);

// TV(pi_prearrival, analytic pmf) with the analytic tail folded into the
// overflow atom. Throws std::invalid_argument when the analytic support
// cannot be aligned to the report's buckets.
check_result compare_sim_analytic(const empirical_report& report, const analytic_pmf& pmf,
                                  double threshold);

// Hazard view of a service spec: geometric -> constant hazard, hazard kind
// as-is, iid -> nullopt (no per-count completion probability exists).
std::optional<hazard_fn> service_hazard(const service_spec& service);

// Every check applicable to the spec: the rate identity always; the
// statistical checks only when the spec is stable; epoch equivalences and the
// edge relation only for state-independent arrivals; the analytic comparison
// only for Bernoulli arrivals with geometric/hazard service. Returns an empty
// list when the report saw no arrival events.
std::vector<check_result> run_standard_checks(const validated_spec& spec,
                                              const empirical_report& report,
                                              const check_thresholds& thresholds = {});

}  // namespace basta
