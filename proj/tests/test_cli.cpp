#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qgi/cli.hpp"
#include "qgi/json_io.hpp"
#include "qgi/ncdet.hpp"
#include "support/fixtures.hpp"

using namespace qgi;
using cli::Command;
using nlohmann::json;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = "qgi_test_tmp_" + std::to_string(counter++) + ".json";
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

std::pair<int, std::string> run_command(const Command& cmd) {
    std::ostringstream out;
    const int code = cli::run(cmd, out);
    return {code, out.str()};
}

Command base(Command::Verb verb) {
    Command cmd;
    cmd.verb = verb;
    cmd.canonical = true;
    return cmd;
}

const std::string example_json = emit_matrix(fixtures::example_a());
const std::string nilpotent_json = emit_matrix(fixtures::nilpotent_2x2());

} // namespace

TEST_CASE("demo succeeds and its json transcript parses") {
    auto [code, text] = run_command(base(Command::Verb::Demo));
    CHECK(code == cli::kExitOk);
    CHECK(text.find("all values reproduced") != std::string::npos);

    Command jcmd = base(Command::Verb::Demo);
    jcmd.json_output = true;
    auto [jcode, jtext] = run_command(jcmd);
    CHECK(jcode == cli::kExitOk);
    const json report = json::parse(jtext);
    CHECK(report["ok"] == true);
    CHECK(report["steps"].size() >= 10);
}

TEST_CASE("demo detects a corrupted golden table") {
    Command dump = base(Command::Verb::Demo);
    dump.dump_golden = true;
    auto [dcode, golden_text] = run_command(dump);
    REQUIRE(dcode == cli::kExitOk);
    json golden = json::parse(golden_text);
    golden["mp"]["data"][0][0][0] = "7"; // corrupt one entry
    TempFile corrupted(golden.dump());

    Command demo = base(Command::Verb::Demo);
    demo.golden_path = corrupted.path;
    auto [code, text] = run_command(demo);
    CHECK(code == cli::kExitDisagreement);
    CHECK(text.find("MISMATCH") != std::string::npos);
}

TEST_CASE("inverse with both methods on the worked example") {
    TempFile input(example_json);
    Command cmd = base(Command::Verb::Inverse);
    cmd.kind = "core-r";
    cmd.method = "both";
    cmd.input_path = input.path;
    auto [code, text] = run_command(cmd);
    CHECK(code == cli::kExitOk);
    const json report = json::parse(text);
    CHECK(report["agree"] == true);
    CHECK(matrix_from_json(report["result"]) == fixtures::example_core_right());
    CHECK(report["verification"]["ok"] == true);
}

TEST_CASE("every inverse kind runs to completion") {
    TempFile input(example_json);
    for (const char* kind : {"mp", "drazin", "group", "core-r", "core-l", "corep-r",
                             "corep-l", "dmp", "mpd", "cmp"}) {
        Command cmd = base(Command::Verb::Inverse);
        cmd.kind = kind;
        cmd.method = "both";
        cmd.input_path = input.path;
        auto [code, text] = run_command(cmd);
        CAPTURE(kind);
        CHECK(code == cli::kExitOk);
        CHECK(json::parse(text)["agree"] == true);
    }
}

TEST_CASE("explicit forms select the same value") {
    TempFile input(example_json);
    for (const char* form : {"column", "row"}) {
        Command cmd = base(Command::Verb::Inverse);
        cmd.kind = "mp";
        cmd.method = "both";
        cmd.form = form;
        cmd.input_path = input.path;
        auto [code, text] = run_command(cmd);
        CAPTURE(form);
        CHECK(code == cli::kExitOk);
        CHECK(matrix_from_json(json::parse(text)["result"]) == fixtures::example_mp());
    }
    Command bad = base(Command::Verb::Inverse);
    bad.kind = "mp";
    bad.method = "determinantal";
    bad.form = "hermitian-column";
    bad.input_path = input.path; // worked example is not Hermitian
    CHECK(run_command(bad).first == cli::kExitPrecondition);
}

TEST_CASE("index verb") {
    TempFile input(example_json);
    Command cmd = base(Command::Verb::Index);
    cmd.input_path = input.path;
    auto [code, text] = run_command(cmd);
    CHECK(code == cli::kExitOk);
    CHECK(json::parse(text)["index"] == 1);
}

TEST_CASE("group inverse of an index-two matrix exits with the precondition code") {
    TempFile input(nilpotent_json);
    Command cmd = base(Command::Verb::Inverse);
    cmd.kind = "group";
    cmd.method = "determinantal";
    cmd.input_path = input.path;
    auto [code, text] = run_command(cmd);
    CHECK(code == cli::kExitPrecondition);
    CHECK(json::parse(text)["error"]["type"] == "index_too_large");
}

TEST_CASE("parse failures exit with the parse code") {
    TempFile bad("{\"rows\": 1}");
    Command cmd = base(Command::Verb::Rank);
    cmd.input_path = bad.path;
    auto [code, text] = run_command(cmd);
    CHECK(code == cli::kExitParse);
    CHECK(json::parse(text)["error"]["type"] == "parse");
}

TEST_CASE("cap violations exit with the size-cap code") {
    std::ostringstream big;
    big << "{\"rows\":8,\"cols\":8,\"data\":[";
    for (int i = 0; i < 8; ++i) {
        big << (i ? "," : "") << "[";
        for (int j = 0; j < 8; ++j)
            big << (j ? "," : "") << "[\"" << (i == j ? 1 : 0) << "\",\"0\",\"0\",\"0\"]";
        big << "]";
    }
    big << "]}";
    TempFile input(big.str());
    Command cmd = base(Command::Verb::Inverse);
    cmd.kind = "mp";
    cmd.method = "determinantal";
    cmd.input_path = input.path;
    auto [code, text] = run_command(cmd);
    CHECK(code == cli::kExitSizeCap);
    CHECK(json::parse(text)["error"]["type"] == "size_cap");

    cmd.cap = 8; // explicit opt-in clears the failure
    auto [raised_code, raised_text] = run_command(cmd);
    CHECK(raised_code == cli::kExitOk);
    qgi::set_det_cap(7);
}

TEST_CASE("rank and det verbs") {
    TempFile input(example_json);
    Command rank = base(Command::Verb::Rank);
    rank.input_path = input.path;
    auto [rcode, rtext] = run_command(rank);
    CHECK(rcode == cli::kExitOk);
    const json rreport = json::parse(rtext);
    CHECK(rreport["rank"] == 2);
    CHECK(rreport["det_rank"] == 2);
    CHECK(rreport["elim_rank"] == 2);

    Command det = base(Command::Verb::Det);
    det.input_path = input.path;
    det.det_row = 1;
    auto [dcode, dtext] = run_command(det);
    CHECK(dcode == cli::kExitOk);
    CHECK(json::parse(dtext)["rdet"] == json::array({"0", "0", "0", "0"}));

    TempFile gram(emit_matrix(fixtures::example_a_star_a()));
    Command hdet_cmd = base(Command::Verb::Det);
    hdet_cmd.input_path = gram.path;
    auto [hcode, htext] = run_command(hdet_cmd);
    CHECK(hcode == cli::kExitOk);
    CHECK(json::parse(htext)["hdet"] == "0");

    Command bad_hdet = base(Command::Verb::Det);
    bad_hdet.input_path = input.path;
    auto [bcode, btext] = run_command(bad_hdet);
    CHECK(bcode == cli::kExitPrecondition);
}

TEST_CASE("split verb") {
    TempFile input(nilpotent_json);
    Command cmd = base(Command::Verb::Split);
    cmd.input_path = input.path;
    auto [code, text] = run_command(cmd);
    CHECK(code == cli::kExitOk);
    const json report = json::parse(text);
    CHECK(matrix_from_json(report["core_part"]).is_zero());
    CHECK(matrix_from_json(report["nilpotent_part"]) == fixtures::nilpotent_2x2());
    CHECK(report["checks"]["nilpotent"] == true);
}

TEST_CASE("verify verb with files") {
    TempFile input(example_json);
    TempFile good(emit_matrix(fixtures::example_mp()));
    Command cmd = base(Command::Verb::Verify);
    cmd.kind = "mp";
    cmd.input_path = input.path;
    cmd.x_path = good.path;
    auto [code, text] = run_command(cmd);
    CHECK(code == cli::kExitOk);
    CHECK(json::parse(text)["verification"]["ok"] == true);

    TempFile bad(emit_matrix(QMatrix::zero(3, 3)));
    cmd.x_path = bad.path;
    auto [bad_code, bad_text] = run_command(cmd);
    CHECK(bad_code == cli::kExitDisagreement);
    CHECK(json::parse(bad_text)["verification"]["ok"] == false);
}

TEST_CASE("randomized verification suite") {
    Command cmd = base(Command::Verb::Verify);
    cmd.random_count = 12;
    cmd.random_sizes = {2, 3};
    cmd.seed = 424242;
    auto [code, text] = run_command(cmd);
    CHECK(code == cli::kExitOk);
    const json report = json::parse(text);
    CHECK(report["samples"] == 12);
    CHECK(report["failures"] == 0);
}

TEST_CASE("reports are byte-identical across runs in canonical mode") {
    TempFile input(example_json);
    Command cmd = base(Command::Verb::Inverse);
    cmd.kind = "mp";
    cmd.input_path = input.path;
    const auto first = run_command(cmd);
    const auto second = run_command(cmd);
    CHECK(first.first == cli::kExitOk);
    CHECK(first.second == second.second);
}
