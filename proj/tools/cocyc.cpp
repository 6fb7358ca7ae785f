#include <iostream>

#include "CLI11.hpp"
#include "cocyc/cli.hpp"

int main(int argc, char** argv) {
    using namespace cocyc;
    CLI::App app{"Representative cocycles of binary image objects"};
    app.require_subcommand(1);
    auto* compute = app.add_subcommand("compute", "run the pipeline on a PBM image");

    cli::RunConfig cfg;
    std::string mode = "fast";
    std::vector<std::string> anchors;
    int level = -1;
    compute->add_option("--input", cfg.input, "P1 or P4 image")->required();
    compute->add_option("--mode", mode)->check(CLI::IsMember({"fast", "invariant"}));
    compute->add_option("--seed", cfg.seed, "kernel selection seed (fast mode)");
    compute->add_option("--level", level, "also emit the cocycles of this pyramid level");
    compute->add_option("--anchor", anchors, "X,Y anchor pixel; once per object (invariant mode)");
    compute->add_option("--output", cfg.output, "JSON output, - for stdout")->required();
    compute->add_option("--svg", cfg.svg, "SVG overlay");
    compute->add_flag("--verify", cfg.verify, "check the result with the GF(2) oracle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::kInputError;
    }

    cfg.mode = mode == "invariant" ? Mode::Invariant : Mode::Fast;
    if (level >= 0) cfg.level = level;
    try {
        for (const auto& a : anchors) cfg.anchors.push_back(cli::parse_pixel(a));
    } catch (const std::invalid_argument& e) {
        std::cerr << "cocyc: --anchor: " << e.what() << '\n';
        return cli::kInputError;
    }

    const auto r = cli::run(cfg);
    if (r.status == cli::kInputError) std::cerr << "cocyc: " << r.message << '\n';
    if (r.status == cli::kVerifyFailed) std::cerr << "cocyc: verification failed\n";
    return r.status;
}
