#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qgi/qmatrix.hpp"

namespace qgi::cli {

// Exit-code contract: 0 success, 2 method disagreement / failed verification
// / demo mismatch, 3 precondition errors (index too large, shape, not
// Hermitian, ...), 4 size cap exceeded, 5 parse errors, 1 anything else.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitSizeCap = 4;
inline constexpr int kExitParse = 5;
inline constexpr int kExitOther = 1;

struct Command {
    enum class Verb { Inverse, Rank, Index, Det, Split, Verify, Demo };

    Verb verb = Verb::Demo;
    // mp | drazin | group | core-r | core-l | corep-r | corep-l | dmp | mpd | cmp
    std::string kind;
    // determinantal | oracle | both
    std::string method = "both";
    // auto | column | row | hermitian-column | hermitian-row
    std::string form = "auto";
    int cmp_l = 1;

    std::string input_path; // matrix JSON file, "-" for stdin
    std::string x_path;     // candidate matrix for `verify`
    std::string golden_path; // alternative golden table for `demo`
    bool dump_golden = false;
    bool json_output = false; // `demo --json`
    bool canonical = false;   // omit timing from reports
    int cap = 0;              // 0 keeps the current determinant cap

    // `verify --random`: sample count, sizes and seed.
    long random_count = 0;
    std::vector<int> random_sizes{2, 3, 4};
    unsigned long seed = 1;

    int det_row = 0; // `det --row`
    int det_col = 0; // `det --col`
};

// Reads the matrix for a command (file or stdin).
QMatrix load_matrix(const std::string& path);

// Executes the command, writing the report to `out`. Returns the exit code;
// never throws for input-level failures (they become error reports).
int run(const Command& command, std::ostream& out);

} // namespace qgi::cli
