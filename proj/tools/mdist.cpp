#include <CLI11.hpp>
#include <iostream>

#include "mdist/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact matching distance of 2-parameter persistence modules"};
    app.require_subcommand(1);
    mdist::RunConfig cfg;
    std::optional<int> digits;

    auto pair_command = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("A", cfg.first, "first fpres file")->required();
        sub->add_option("B", cfg.second, "second fpres file")->required();
        sub->add_option("--decimal", digits, "print D rounded digits instead of the exact value");
        return sub;
    };
    auto* compute = pair_command("compute", "print d_M");
    compute->add_option("--seed", cfg.seed, "seed of the random plane order")->capture_default_str();
    auto* decide = pair_command("decide", "answer d_M <= lambda with yes/no (exit 0/1)");
    decide->add_option("--lambda", cfg.lambda, "rational threshold, e.g. 3/2 or 0.75")->required();
    auto* bottleneck = pair_command("bottleneck", "bottleneck distance of the slice barcodes");
    bottleneck->add_option("--slice", cfg.slice, "dual point a,b of the slice y = a x + b, 0 < a <= 1")->required();
    auto* sample = pair_command("sample", "grid-sampled lower bound with per-slice TSV");
    std::string grid = "50x50";
    sample->add_option("--grid", grid, "NAxNB")->capture_default_str();
    sample->add_option("--brange", cfg.brange, "lo,hi range of the b coordinate");
    auto* validate = app.add_subcommand("validate", "parse and validate one fpres file");
    validate->add_option("A", cfg.first, "fpres file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    if (compute->parsed()) cfg.command = mdist::Command::compute;
    if (decide->parsed()) cfg.command = mdist::Command::decide;
    if (bottleneck->parsed()) cfg.command = mdist::Command::bottleneck;
    if (validate->parsed()) cfg.command = mdist::Command::validate;
    if (sample->parsed()) {
        cfg.command = mdist::Command::sample;
        try {
            std::tie(cfg.grid_a, cfg.grid_b) = mdist::parse_grid(grid);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        }
    }
    cfg.decimal_digits = digits;
    return mdist::run(cfg, std::cout, std::cerr);
}
