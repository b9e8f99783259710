#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"

namespace {

zeno::cli::CommandArgs* add_command(CLI::App& app, const std::string& name,
                                    const std::string& description,
                                    bool with_plot,
                                    std::vector<zeno::cli::CommandArgs>& storage) {
    storage.emplace_back();
    zeno::cli::CommandArgs* args = &storage.back();
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--config", args->config_path, "experiment configuration file")
        ->required();
    sub->add_option("--out", args->out_dir, "output directory")
        ->default_val(".");
    if (with_plot)
        sub->add_flag("--plot", args->plot, "also emit an SVG line chart");
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "repeated-measurement survival laboratory: exact protocol runs, "
        "parameter sweeps, critical-window enumeration, and oracle checks"};
    app.require_subcommand(1);

    std::vector<zeno::cli::CommandArgs> storage;
    storage.reserve(5);
    add_command(app, "xx-run",
                "run the hopping-chain protocol and record the monitored-site "
                "population trace",
                true, storage);
    add_command(app, "xx-sweep",
                "sweep one chain parameter and record final-row values", true,
                storage);
    add_command(app, "generic-run",
                "run the finite-level joint-space protocol and record the "
                "monitored observable",
                true, storage);
    add_command(app, "critical",
                "enumerate critical measurement windows from pointer spectra",
                false, storage);
    add_command(app, "oracle-check",
                "compare independent simulation routes on one configured point",
                false, storage);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 2;  // usage problems are configuration errors
    }

    try {
        if (app.got_subcommand("xx-run"))
            return zeno::cli::cmd_xx_run(storage[0]);
        if (app.got_subcommand("xx-sweep"))
            return zeno::cli::cmd_xx_sweep(storage[1]);
        if (app.got_subcommand("generic-run"))
            return zeno::cli::cmd_generic_run(storage[2]);
        if (app.got_subcommand("critical"))
            return zeno::cli::cmd_critical(storage[3]);
        if (app.got_subcommand("oracle-check"))
            return zeno::cli::cmd_oracle_check(storage[4]);
    } catch (const zeno::cli::ConfigError& error) {
        if (error.line > 0)
            std::cerr << "config error (line " << error.line
                      << "): " << error.what() << "\n";
        else
            std::cerr << "config error: " << error.what() << "\n";
        return 2;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 2;
}
