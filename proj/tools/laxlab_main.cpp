#include <string>

#include <CLI11.hpp>

#include "laxlab/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"laxlab: structure-equation / Lax-pair verification, sine-Gordon solving, "
                 "and surface reconstruction"};
    app.require_subcommand(1);

    std::string scenario_path, out_dir;
    for (const char* name : {"verify", "solve", "reconstruct", "report"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--scenario", scenario_path, "scenario JSON file")->required();
        sub->add_option("--out", out_dir, "output directory (overrides scenario)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    return laxlab::run_command(app.get_subcommands().front()->get_name(), scenario_path, out_dir);
}
