#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "groupnet/config.hpp"

namespace {

struct Flags {
    std::vector<std::string> groups, families, activations;
    int n_terms = 0, max_order = 0, trials = 0;
    double p = 0.0, tol = 0.0;
    std::uint64_t seed = 0;
    std::string out_dir, config_path;
};

void add_common_options(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--group", flags.groups, "Group spec, e.g. Z4xZ6, T1@64, W2@5");
    cmd->add_option("--family", flags.families,
                    "Family spec, e.g. aut, translations, hom:Z2xZ2");
    cmd->add_option("--activation", flags.activations,
                    "Activation spec, e.g. logistic, delta0, relu, random");
    cmd->add_option("--terms", flags.n_terms, "Dictionary size / sample budget")
        ->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    cmd->add_option("--max-order", flags.max_order, "Maximum group order")
        ->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    cmd->add_option("--trials", flags.trials, "Trials per cell")
        ->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    cmd->add_option("--p", flags.p, "Lp exponent (inf for sup norm)")
        ->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    cmd->add_option("--seed", flags.seed, "Master RNG seed")
        ->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    cmd->add_option("--tol", flags.tol, "Numerical tolerance")
        ->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    cmd->add_option("--out", flags.out_dir, "Output directory")
        ->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    cmd->add_option("--config", flags.config_path, "JSON config file")
        ->multi_option_policy(CLI::MultiOptionPolicy::Throw);
}

// Precedence: flags > config file > defaults.
gn::ExperimentConfig assemble(const std::string& command, const CLI::App* cmd,
                              const Flags& flags) {
    gn::ExperimentConfig config;
    if (!flags.config_path.empty()) {
        std::ifstream in(flags.config_path);
        if (!in) throw CLI::ValidationError("--config", "cannot open config file");
        gn::json j = gn::json::parse(in);
        if (!j.contains("command")) j["command"] = command;
        config = gn::ExperimentConfig::from_json(j);
        if (config.command != command)
            throw CLI::ValidationError("--config",
                                       "config command does not match subcommand");
    }
    config.command = command;
    if (cmd->count("--group")) config.groups = flags.groups;
    if (cmd->count("--family")) config.families = flags.families;
    if (cmd->count("--activation")) config.activations = flags.activations;
    if (cmd->count("--terms")) config.n_terms = flags.n_terms;
    if (cmd->count("--max-order")) config.max_order = flags.max_order;
    if (cmd->count("--trials")) config.trials = flags.trials;
    if (cmd->count("--p")) config.p = flags.p;
    if (cmd->count("--seed")) config.seed = flags.seed;
    if (cmd->count("--tol")) config.tol = flags.tol;
    if (cmd->count("--out")) config.out_dir = flags.out_dir;
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-scale density and approximation experiments for group "
                 "neural networks"};
    app.require_subcommand(1);

    const std::vector<std::string> commands = {"density", "approx", "fourier-check",
                                               "enumerate", "counterexample"};
    std::map<std::string, Flags> flags;
    std::map<std::string, CLI::App*> cmds;
    for (const std::string& name : commands) {
        CLI::App* cmd = app.add_subcommand(name);
        add_common_options(cmd, flags[name]);
        cmds[name] = cmd;
    }

    try {
        app.parse(argc, argv);
        for (const std::string& name : commands)
            if (cmds[name]->parsed())
                return gn::run(assemble(name, cmds[name], flags[name]));
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
