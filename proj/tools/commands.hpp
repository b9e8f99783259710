// Subcommand entry points.  Each loads its configuration, drives the shared
// library through the C interface, and returns the process exit code:
// 0 ok, 1 internal failure, 2 configuration error, 3 numeric drift,
// 4 oracle disagreement.

#ifndef ZENO_CLI_COMMANDS_HPP
#define ZENO_CLI_COMMANDS_HPP

#include <string>

namespace zeno::cli {

struct CommandArgs {
    std::string config_path;
    std::string out_dir = ".";
    bool plot = false;
};

int cmd_xx_run(const CommandArgs& args);
int cmd_xx_sweep(const CommandArgs& args);
int cmd_generic_run(const CommandArgs& args);
int cmd_critical(const CommandArgs& args);
int cmd_oracle_check(const CommandArgs& args);

}  // namespace zeno::cli

#endif  // ZENO_CLI_COMMANDS_HPP
