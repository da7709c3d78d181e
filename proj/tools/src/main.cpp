#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "commands.hpp"
#include "radwave/errors.hpp"
#include "run_config.hpp"

namespace {

struct Flags {
    std::optional<std::string> config;
    std::vector<std::string> assignments;
    std::optional<std::string> out, n, m, p, kappa, family, grid, tol, seed;
};

void add_common(CLI::App& app, Flags& f) {
    app.add_option("--config", f.config, "key=value file (a previous manifest.txt works)");
    app.add_option("--set,--param", f.assignments, "override any key, e.g. --set levels=64")
        ->take_all();
    app.add_option("--out", f.out, "output directory");
    app.add_option("--n", f.n, "spatial dimension");
    app.add_option("--m", f.m, "half dimension, or a range a:b for constants");
    app.add_option("--p", f.p, "power exponent");
    app.add_option("--kappa", f.kappa, "data decay rate");
    app.add_option("--family", f.family, "builtin|gaussian|decay|constant|zero|inverse_square");
    app.add_option("--grid", f.grid, "region grid, e.g. 64x64");
    app.add_option("--tol", f.tol, "certificate tolerance");
    app.add_option("--seed", f.seed, "random seed");
}

radwave::cli::RunConfig build_config(const Flags& f) {
    radwave::cli::RunConfig cfg =
        f.config ? radwave::cli::RunConfig::load(*f.config) : radwave::cli::RunConfig{};
    const std::pair<const char*, const std::optional<std::string>*> named[] = {
        {"out", &f.out},   {"n", &f.n},         {"m", &f.m},
        {"p", &f.p},       {"kappa", &f.kappa}, {"family", &f.family},
        {"grid", &f.grid}, {"tol", &f.tol},     {"seed", &f.seed}};
    for (const auto& [key, value] : named) {
        if (*value) cfg.set(key, **value);
    }
    for (const auto& a : f.assignments) cfg.set_assignment(a);
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"radwave: radial semilinear wave equation toolkit"};
    app.set_version_flag("--version", std::string(RADWAVE_VERSION));
    app.require_subcommand(1);
    Flags flags;
    std::string command;

    auto add = [&](CLI::App& parent, const std::string& name, const std::string& help,
                   const std::string& full) {
        CLI::App* sub = parent.add_subcommand(name, help);
        add_common(*sub, flags);
        sub->callback([&command, full] { command = full; });
        return sub;
    };

    add(app, "constants", "tabulate lemma constants", "constants");
    add(app, "free", "evaluate the free solution on an (r,t) grid", "free");
    CLI::App* verify = app.add_subcommand("verify", "run a certificate sweep");
    verify->require_subcommand(1);
    for (const char* v : {"assumption", "theta", "nfact", "dtheta", "kernel", "lower-odd",
                          "lower-even", "lower-low"}) {
        add(*verify, v, std::string("certify ") + v, std::string("verify ") + v);
    }
    add(app, "iterate", "iterate the integral equation at one kappa", "iterate");
    add(app, "sweep", "iterate over several kappa values", "sweep");
    add(app, "fdm", "finite-difference solve", "fdm");
    add(app, "compare", "compare finite differences with the representation formula", "compare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? radwave::cli::kOk : radwave::cli::kUsage;
    }

    try {
        radwave::cli::RunConfig cfg = build_config(flags);
        return radwave::cli::run_command(command, cfg, std::cout);
    } catch (const radwave::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return radwave::cli::kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return radwave::cli::kUsage;
    }
}
