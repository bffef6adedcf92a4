// Command-line front end: simulate / analytic / verify / sweep over a JSON
// experiment config. See README.md for the config schema and output formats.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "basta/commands.hpp"

namespace {

struct cli_args {
    std::string config_path;
    std::string out_dir = "./out";
    std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, cli_args& args) {
    cmd->add_option("config", args.config_path, "experiment config (JSON)")->required();
    cmd->add_option("--out", args.out_dir, "output directory")->capture_default_str();
    cmd->add_option("--seed", args.seed, "override the config seed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete-time queueing laboratory: slot-scheduling rules, "
                 "epoch-indexed distributions, arrivals-see-time-averages checks"};
    app.require_subcommand(1);

    cli_args args;
    CLI::App* simulate = app.add_subcommand("simulate", "run the model, write distributions");
    CLI::App* analytic = app.add_subcommand("analytic", "write the closed-form pre-arrival pmf");
    CLI::App* verify = app.add_subcommand("verify", "run the model and every applicable check");
    CLI::App* sweep = app.add_subcommand("sweep", "verify across a parameter grid");
    for (CLI::App* cmd : {simulate, analytic, verify, sweep}) {
        add_common(cmd, args);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        const basta::experiment_config config = basta::parse_config(args.config_path);
        basta::command_options options;
        options.out_dir = args.out_dir;
        options.seed_override = args.seed;

        if (simulate->parsed()) {
            return basta::cmd_simulate(config, options);
        }
        if (analytic->parsed()) {
            return basta::cmd_analytic(config, options);
        }
        if (verify->parsed()) {
            return basta::cmd_verify(config, options);
        }
        return basta::cmd_sweep(config, options);
    } catch (const basta::spec_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return basta::exit_infeasible;
    } catch (const basta::config_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return basta::exit_infeasible;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return basta::exit_io_error;
    }
}
