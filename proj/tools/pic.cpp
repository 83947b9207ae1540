#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pic/run.hpp"

int main(int argc, char** argv) {
    CLI::App app{"proper interval completion solver"};
    app.require_subcommand(1);

    pic::RunConfig config;
    std::string mode = "fpt";

    auto* solve = app.add_subcommand("solve", "solve a completion instance");
    solve->add_option("--input", config.input_path, "edge-list file")->required();
    solve->add_option("--budget", config.budget, "maximum number of added edges")->required();
    solve->add_option("--mode", mode, "fpt, baseline or oracle")
        ->check(CLI::IsMember({"fpt", "baseline", "oracle"}));
    solve->add_option("--tau", config.tau_override, "override the expensiveness threshold");
    solve->add_option("--ceiling", config.ceiling, "enumeration tick budget per pass");
    solve->add_option("--jobs", config.jobs, "worker threads");
    solve->add_option("--output", config.output_path, "write the result document here");
    solve->add_flag("--assume-kernelized", config.assume_kernelized,
                    "suppress the kernelization notice");

    auto* recognize = app.add_subcommand("recognize", "test for proper interval");
    recognize->add_option("--input", config.input_path, "edge-list file")->required();

    auto* verify = app.add_subcommand("verify", "re-check a result document");
    verify->add_option("--input", config.input_path, "edge-list file")->required();
    verify->add_option("--result", config.result_path, "result document to check")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    if (solve->parsed()) {
        if (mode == "fpt") config.mode = pic::RunMode::fpt;
        else if (mode == "baseline") config.mode = pic::RunMode::baseline;
        else config.mode = pic::RunMode::oracle;
    } else if (recognize->parsed()) {
        config.mode = pic::RunMode::recognize;
    } else {
        config.mode = pic::RunMode::verify;
    }
    return pic::run(config);
}
