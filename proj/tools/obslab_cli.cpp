// Command-line runner over the obslab C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "obslab/obslab.h"

namespace {

// Stable process contract: 0 pass, 1 fail, 2 config error, 3 precondition error.
int exit_code(obslab_status status) {
    switch (status) {
        case OBSLAB_OK: return 0;
        case OBSLAB_FAIL: return 1;
        case OBSLAB_ERR_CONFIG:
        case OBSLAB_ERR_IO: return 2;
        case OBSLAB_ERR_PRECONDITION: return 3;
        default: return 4;
    }
}

struct Options {
    std::string config;
    std::string out;
    std::string format;
    long long seed = -1;
};

int run(const std::string& command, const Options& opt) {
    obslab_experiment* experiment = nullptr;
    obslab_status status = obslab_experiment_from_file(opt.config.c_str(), &experiment);
    if (status != OBSLAB_OK) {
        std::cerr << "obslab: " << obslab_last_error() << '\n';
        return exit_code(status);
    }
    if (opt.seed >= 0) obslab_experiment_set_seed(experiment, static_cast<uint64_t>(opt.seed));

    obslab_report* report = nullptr;
    status = obslab_run(experiment, command.c_str(), &report);
    obslab_experiment_free(experiment);
    if (!report) {
        std::cerr << "obslab: " << obslab_last_error() << '\n';
        return exit_code(status);
    }

    const std::string format = opt.format.empty() ? (command == "scan-t" ? "csv" : "json") : opt.format;
    const char* text = format == "csv" ? obslab_report_csv(report) : obslab_report_json(report);
    if (!text) {
        std::cerr << "obslab: command '" << command << "' has no " << format << " output\n";
        obslab_report_free(report);
        return 2;
    }
    int code = exit_code(status);
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(opt.out, std::ios::binary);
        file << text;
        if (!file) {
            std::cerr << "obslab: cannot write '" << opt.out << "'\n";
            code = 2;
        }
    }
    if (status == OBSLAB_FAIL) std::cerr << "obslab: " << command << " FAILED\n";
    obslab_report_free(report);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of observability inequalities on rectangles"};
    app.set_version_flag("--version", std::string(obslab_version()));
    app.require_subcommand(1);

    Options opt;
    const std::pair<const char*, const char*> commands[] = {
        {"verify", "check an observability estimate on random and extremal states"},
        {"scan-t", "empirical and predicted constants over a range of T (CSV)"},
        {"constants", "extremal constants of an observation against the energy"},
        {"diophantine", "algebraic observation points and the gamma scan"},
        {"mab", "infimum of the sine-square integral over (a, b)"},
        {"symmetry", "m_p and M_p for a rational line position"},
        {"ingham", "Ingham/Mehrenberger inequality on exponential sums"},
        {"oracle-check", "Gram forms against direct quadrature"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--config", opt.config, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", opt.out, "report path (default stdout)");
        sub->add_option("--seed", opt.seed, "override the config seed")->check(CLI::NonNegativeNumber);
        sub->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return run(app.get_subcommands().front()->get_name(), opt);
}
