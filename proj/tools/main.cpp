#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qgi/cli.hpp"

int main(int argc, char** argv) {
    using qgi::cli::Command;

    CLI::App app{"Exact generalized inverses of quaternion matrices"};
    app.require_subcommand(1);

    Command cmd;

    const auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("--in,input", cmd.input_path, "matrix JSON file ('-' for stdin)")
                ->required();
        sub->add_option("--cap", cmd.cap, "size cap for a single row/column determinant");
        sub->add_flag("--canonical", cmd.canonical, "omit timing from the report");
    };

    auto* inverse = app.add_subcommand("inverse", "compute a generalized inverse");
    inverse->add_option("--kind", cmd.kind,
                        "mp|drazin|group|core-r|core-l|corep-r|corep-l|dmp|mpd|cmp")
        ->required();
    inverse->add_option("--method", cmd.method, "determinantal|oracle|both");
    inverse->add_option("--form", cmd.form,
                        "auto|column|row|hermitian-column|hermitian-row");
    inverse->add_option("--l", cmd.cmp_l, "cmp variant l (1 or 2)");
    add_common(inverse, true);

    auto* rank = app.add_subcommand("rank", "matrix rank");
    rank->add_option("--method", cmd.method, "determinantal|oracle|both");
    add_common(rank, true);

    auto* index = app.add_subcommand("index", "matrix index");
    add_common(index, true);

    auto* det = app.add_subcommand("det", "row/column/Hermitian determinant");
    det->add_option("--row", cmd.det_row, "row determinant anchor");
    det->add_option("--col", cmd.det_col, "column determinant anchor");
    add_common(det, true);

    auto* split = app.add_subcommand("split", "core-nilpotent decomposition");
    split->add_option("--method", cmd.method, "determinantal|oracle|both");
    add_common(split, true);

    auto* verify = app.add_subcommand("verify", "check defining equations");
    verify->add_option("--kind", cmd.kind, "system to check (see inverse --kind)");
    verify->add_option("--in", cmd.input_path, "matrix JSON file");
    verify->add_option("--x", cmd.x_path, "candidate inverse JSON file");
    verify->add_option("--random", cmd.random_count,
                       "run a randomized determinantal-vs-oracle suite of N samples");
    verify->add_option("--sizes", cmd.random_sizes, "sizes for --random");
    verify->add_option("--seed", cmd.seed, "seed for --random");
    verify->add_option("--cap", cmd.cap, "size cap for a single row/column determinant");
    verify->add_flag("--canonical", cmd.canonical, "omit timing from the report");

    auto* demo = app.add_subcommand("demo", "reproduce the built-in worked example");
    demo->add_flag("--json", cmd.json_output, "machine-readable transcript");
    demo->add_option("--golden", cmd.golden_path, "alternative golden table");
    demo->add_flag("--dump-golden", cmd.dump_golden, "print the built-in golden table");
    demo->add_option("--cap", cmd.cap, "size cap for a single row/column determinant");

    CLI11_PARSE(app, argc, argv);

    if (inverse->parsed()) cmd.verb = Command::Verb::Inverse;
    else if (rank->parsed()) cmd.verb = Command::Verb::Rank;
    else if (index->parsed()) cmd.verb = Command::Verb::Index;
    else if (det->parsed()) cmd.verb = Command::Verb::Det;
    else if (split->parsed()) cmd.verb = Command::Verb::Split;
    else if (verify->parsed()) cmd.verb = Command::Verb::Verify;
    else cmd.verb = Command::Verb::Demo;

    return qgi::cli::run(cmd, std::cout);
}
