#include "basta/commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "basta/engine.hpp"

namespace basta {

namespace {

using nlohmann::json;

// 9 significant digits: below statistical noise, above comparison tolerances.
std::string fmt9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

std::string csv_number(double x) {
    return std::isnan(x) ? std::string() : fmt9(x);
}

bool write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    out << contents;
    return static_cast<bool>(out);
}

int io_failure(const std::filesystem::path& path) {
    std::cerr << "error: cannot write " << path.string() << "\n";
    return exit_io_error;
}

bool ensure_out_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    return !ec;
}

model_spec apply_seed(const experiment_config& config, const command_options& options) {
    model_spec m = config.model;
    if (options.seed_override.has_value()) {
        m.seed = *options.seed_override;
    }
    return m;
}

std::string distributions_csv(const empirical_report& report) {
    std::ostringstream out;
    out << "n,pi_edge,pi_center,pi_pa,pi_prearrival,lambda_n\n";
    const bool has_events = report.arrival_events > 0;
    for (std::size_t n = 0; n < report.bucket_count(); ++n) {
        if (n == report.overflow_index()) {
            out << "overflow";
        } else {
            out << n;
        }
        out << ',' << fmt9(report.pi_edge[n]) << ',' << fmt9(report.pi_center[n]) << ','
            << fmt9(report.pi_pa[n]) << ','
            << (has_events ? fmt9(report.pi_prearrival[n]) : std::string()) << ','
            << (has_events ? csv_number(report.lambda_n_hat[n]) : std::string()) << '\n';
    }
    return out.str();
}

std::string summary_json(const validated_spec& spec, const empirical_report& report) {
    const model_spec& m = spec.spec();
    json doc;
    doc["lambda_hat"] = report.lambda_hat;
    doc["arrival_events"] = report.arrival_events;
    doc["total_slots"] = report.total_slots_observed;
    doc["stable"] = spec.stable();
    doc["seed"] = m.seed;
    doc["rule"] = std::string(to_string(m.rule));
    doc["replications"] = m.replications;
    auto seeds = json::array();
    for (std::uint64_t r = 0; r < m.replications; ++r) {
        seeds.push_back(m.seed + r);
    }
    doc["replication_seeds"] = std::move(seeds);
    return doc.dump(2) + "\n";
}

std::string checks_csv(const std::vector<check_result>& checks) {
    std::ostringstream out;
    out << "name,statistic,threshold,passed\n";
    for (const check_result& check : checks) {
        out << check.name << ',' << fmt9(check.statistic) << ',' << fmt9(check.threshold) << ','
            << (check.passed ? "true" : "false") << '\n';
    }
    return out.str();
}

struct sweep_cell {
    std::size_t index = 0;
    model_spec model;
    std::optional<double> alpha;  // swept values, when applied
    std::optional<double> beta;
};

std::vector<sweep_cell> expand_grid(const experiment_config& config, const model_spec& base) {
    const sweep_grid& grid = *config.sweep;
    if (grid.rules.empty() && grid.alphas.empty() && grid.betas.empty()) {
        throw config_error("sweep: empty grid");
    }
    if (!grid.alphas.empty() && !std::holds_alternative<bernoulli_arrival>(base.arrival)) {
        throw config_error("sweep.alpha: requires bernoulli arrivals in the base model");
    }
    if (!grid.betas.empty() && !std::holds_alternative<geometric_service>(base.service)) {
        throw config_error("sweep.beta: requires geometric service in the base model");
    }

    const std::vector<scheduling_rule> rules =
        grid.rules.empty() ? std::vector<scheduling_rule>{base.rule} : grid.rules;

    std::vector<sweep_cell> cells;
    for (scheduling_rule rule : rules) {
        const std::size_t n_alpha = grid.alphas.empty() ? 1 : grid.alphas.size();
        for (std::size_t a = 0; a < n_alpha; ++a) {
            const std::size_t n_beta = grid.betas.empty() ? 1 : grid.betas.size();
            for (std::size_t b = 0; b < n_beta; ++b) {
                sweep_cell cell;
                cell.index = cells.size();
                cell.model = base;
                cell.model.rule = rule;
                if (!grid.alphas.empty()) {
                    cell.alpha = grid.alphas[a];
                    cell.model.arrival = bernoulli_arrival{*cell.alpha};
                }
                if (!grid.betas.empty()) {
                    cell.beta = grid.betas[b];
                    cell.model.service = geometric_service{*cell.beta};
                }
                cell.model.seed = base.seed + cell.index;
                cells.push_back(std::move(cell));
            }
        }
    }
    return cells;
}

std::size_t worker_cap() {
    if (const char* env = std::getenv("BASTA_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) {
            return static_cast<std::size_t>(parsed);
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

struct cell_outcome {
    bool stable = false;
    std::vector<check_result> checks;
};

}  // namespace

int cmd_simulate(const experiment_config& config, const command_options& options) {
    const validated_spec spec = validate_spec(apply_seed(config, options));
    const empirical_report report = run_replications(spec);

    if (!ensure_out_dir(options.out_dir)) {
        return io_failure(options.out_dir);
    }
    const auto dist_path = options.out_dir / "distributions.csv";
    if (!write_file(dist_path, distributions_csv(report))) {
        return io_failure(dist_path);
    }
    const auto summary_path = options.out_dir / "summary.json";
    if (!write_file(summary_path, summary_json(spec, report))) {
        return io_failure(summary_path);
    }
    return exit_ok;
}

int cmd_analytic(const experiment_config& config, const command_options& options) {
    const validated_spec spec = validate_spec(apply_seed(config, options));
    const model_spec& m = spec.spec();

    const std::optional<hazard_fn> hazard = service_hazard(m.service);
    if (!hazard.has_value()) {
        std::cerr << "error: no analytic form for general service\n";
        return exit_infeasible;
    }
    const auto* bern = std::get_if<bernoulli_arrival>(&m.arrival);
    if (bern == nullptr) {
        std::cerr << "error: analytic form requires bernoulli arrivals\n";
        return exit_infeasible;
    }

    analytic_pmf pmf;
    try {
        pmf = prearrival_pmf_for_rule(birth_death_spec{bern->alpha, *hazard, m.rule});
    } catch (const std::domain_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_infeasible;
    }

    if (!ensure_out_dir(options.out_dir)) {
        return io_failure(options.out_dir);
    }

    std::ostringstream csv;
    csv << "n,prob\n";
    for (std::size_t n = 0; n < pmf.probs.size(); ++n) {
        csv << n << ',' << fmt9(pmf.probs[n]) << '\n';
    }
    csv << "tail," << fmt9(pmf.tail_mass) << '\n';
    const auto csv_path = options.out_dir / "analytic.csv";
    if (!write_file(csv_path, csv.str())) {
        return io_failure(csv_path);
    }

    json meta;
    meta["source"] = std::string(to_string(pmf.source));
    meta["tail_mass"] = pmf.tail_mass;
    meta["states"] = pmf.probs.size();
    meta["stable"] = spec.stable();
    const auto meta_path = options.out_dir / "analytic_summary.json";
    if (!write_file(meta_path, meta.dump(2) + "\n")) {
        return io_failure(meta_path);
    }
    return exit_ok;
}

int cmd_verify(const experiment_config& config, const command_options& options) {
    const validated_spec spec = validate_spec(apply_seed(config, options));
    const empirical_report report = run_replications(spec);
    const std::vector<check_result> checks =
        run_standard_checks(spec, report, config.thresholds);

    if (!ensure_out_dir(options.out_dir)) {
        return io_failure(options.out_dir);
    }
    const auto checks_path = options.out_dir / "checks.csv";
    if (!write_file(checks_path, checks_csv(checks))) {
        return io_failure(checks_path);
    }
    const auto dist_path = options.out_dir / "distributions.csv";
    if (!write_file(dist_path, distributions_csv(report))) {
        return io_failure(dist_path);
    }
    const auto summary_path = options.out_dir / "summary.json";
    if (!write_file(summary_path, summary_json(spec, report))) {
        return io_failure(summary_path);
    }

    for (const check_result& check : checks) {
        if (!check.passed) {
            return exit_check_failed;
        }
    }
    return exit_ok;
}

int cmd_sweep(const experiment_config& config, const command_options& options) {
    if (!config.sweep.has_value()) {
        throw config_error("sweep: config has no sweep grid");
    }
    const model_spec base = apply_seed(config, options);
    const std::vector<sweep_cell> cells = expand_grid(config, base);

    // Cells are independent; run them on a capped worker pool and emit rows
    // in cell order regardless of completion order.
    std::vector<cell_outcome> outcomes(cells.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) {
                return;
            }
            const validated_spec spec = validate_spec(cells[i].model);
            const empirical_report report = run_replications(spec);
            outcomes[i].stable = spec.stable();
            outcomes[i].checks = run_standard_checks(spec, report, config.thresholds);
        }
    };
    const std::size_t workers = std::min(worker_cap(), cells.size());
    std::vector<std::future<void>> pool;
    for (std::size_t w = 1; w < workers; ++w) {
        pool.push_back(std::async(std::launch::async, work));
    }
    work();
    for (auto& f : pool) {
        f.get();
    }

    std::ostringstream out;
    out << "cell,rule,alpha,beta,seed,stable,check,statistic,threshold,passed\n";
    bool all_passed = true;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const sweep_cell& cell = cells[i];
        std::string prefix;
        {
            std::ostringstream row;
            row << cell.index << ',' << to_string(cell.model.rule) << ','
                << (cell.alpha ? fmt9(*cell.alpha) : std::string()) << ','
                << (cell.beta ? fmt9(*cell.beta) : std::string()) << ',' << cell.model.seed << ','
                << (outcomes[i].stable ? "true" : "false") << ',';
            prefix = row.str();
        }
        for (const check_result& check : outcomes[i].checks) {
            all_passed = all_passed && check.passed;
            out << prefix << check.name << ',' << fmt9(check.statistic) << ','
                << fmt9(check.threshold) << ',' << (check.passed ? "true" : "false") << '\n';
        }
    }

    if (!ensure_out_dir(options.out_dir)) {
        return io_failure(options.out_dir);
    }
    const auto sweep_path = options.out_dir / "sweep.csv";
    if (!write_file(sweep_path, out.str())) {
        return io_failure(sweep_path);
    }
    return all_passed ? exit_ok : exit_check_failed;
}

}  // namespace basta
