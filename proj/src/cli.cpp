#include "qgi/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "qgi/coreinv.hpp"
#include "qgi/errors.hpp"
#include "qgi/geninv.hpp"
#include "qgi/json_io.hpp"
#include "qgi/ncdet.hpp"
#include "qgi/oracle.hpp"

namespace qgi::cli {

using nlohmann::ordered_json;

namespace {

Quaternion q(long w, long x, long y, long z) {
    return {Rational(w), Rational(x), Rational(y), Rational(z)};
}

Quaternion qh(long w2, long x2, long y2, long z2) {
    // components given in halves
    return {Rational(w2, 2), Rational(x2, 2), Rational(y2, 2), Rational(z2, 2)};
}

QMatrix worked_example_matrix() {
    return {{q(0, 0, 0, 0), q(0, 0, 0, 1), q(0, 0, 0, 0)},
            {q(0, 1, 0, 0), q(0, 0, 0, 0), q(0, 0, -1, 0)},
            {q(0, 0, 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 0)}};
}

ordered_json builtin_golden() {
    ordered_json g;
    g["input"] = matrix_to_json(worked_example_matrix());
    g["a_star_a"] = matrix_to_json({{q(1, 0, 0, 0), q(0, 0, 0, 0), q(0, 0, 0, 1)},
                                    {q(0, 0, 0, 0), q(2, 0, 0, 0), q(0, 0, 0, 0)},
                                    {q(0, 0, 0, -1), q(0, 0, 0, 0), q(1, 0, 0, 0)}});
    g["rank"] = 2;
    g["a_squared"] = matrix_to_json({{q(0, 0, 1, 0), q(0, 0, 0, 0), q(0, 1, 0, 0)},
                                     {q(0, 0, 0, 0), q(1, 0, -1, 0), q(0, 0, 0, 0)},
                                     {q(0, 0, 0, -1), q(0, 0, 0, 0), q(1, 0, 0, 0)}});
    g["a_squared_gram"] = matrix_to_json({{q(2, 0, 0, 0), q(0, 0, 0, 0), q(0, 2, 0, 0)},
                                          {q(0, 0, 0, 0), q(2, 0, 0, 0), q(0, 0, 0, 0)},
                                          {q(0, -2, 0, 0), q(0, 0, 0, 0), q(2, 0, 0, 0)}});
    g["index"] = 1;
    g["core_right_numerators"] =
        matrix_to_json({{q(0, 0, 0, 0), q(0, -4, 0, 4), q(0, 0, 0, 0)},
                        {q(0, 0, 0, -4), q(0, 0, 0, 0), q(0, 0, -4, 0)},
                        {q(0, 0, 0, 0), q(-4, 0, 4, 0), q(0, 0, 0, 0)}});
    g["core_right"] = matrix_to_json({{qh(0, 0, 0, 0), qh(0, -1, 0, 1), qh(0, 0, 0, 0)},
                                      {qh(0, 0, 0, -1), qh(0, 0, 0, 0), qh(0, 0, -1, 0)},
                                      {qh(0, 0, 0, 0), qh(-1, 0, 1, 0), qh(0, 0, 0, 0)}});
    g["core_left"] = matrix_to_json({{qh(0, 0, 0, 0), qh(0, -1, 0, 0), qh(0, 0, 0, 0)},
                                     {qh(0, 1, 0, -1), qh(0, 0, 0, 0), qh(1, 0, -1, 0)},
                                     {qh(0, 0, 0, 0), qh(0, 0, 1, 0), qh(0, 0, 0, 0)}});
    g["mp"] = matrix_to_json({{qh(0, 0, 0, 0), qh(0, -1, 0, 0), qh(0, 0, 0, 0)},
                              {qh(0, 0, 0, -1), qh(0, 0, 0, 0), qh(0, 0, -1, 0)},
                              {qh(0, 0, 0, 0), qh(0, 0, 1, 0), qh(0, 0, 0, 0)}});
    g["mp_of_core_left"] =
        matrix_to_json({{qh(0, 0, 0, 0), qh(0, -1, 0, 1), qh(0, 0, 0, 0)},
                        {qh(0, 2, 0, 0), qh(0, 0, 0, 0), qh(0, 0, -2, 0)},
                        {qh(0, 0, 0, 0), qh(1, 0, 1, 0), qh(0, 0, 0, 0)}});
    g["q_projector_times_a"] = g["mp_of_core_left"];
    return g;
}

Form parse_form(const std::string& name) {
    if (name == "auto") return Form::Auto;
    if (name == "column") return Form::Column;
    if (name == "row") return Form::Row;
    if (name == "hermitian-column") return Form::HermitianColumn;
    if (name == "hermitian-row") return Form::HermitianRow;
    throw ParseError("unknown form \"" + name + "\"");
}

System system_for_kind(const std::string& kind) {
    if (kind == "mp") return System::Penrose;
    if (kind == "drazin" || kind == "group") return System::Drazin;
    if (kind == "core-r") return System::CoreRight;
    if (kind == "core-l") return System::CoreLeft;
    if (kind == "corep-r") return System::CoreEpRight;
    if (kind == "corep-l") return System::CoreEpLeft;
    if (kind == "dmp") return System::Dmp;
    if (kind == "mpd") return System::Mpd;
    if (kind == "cmp") return System::Cmp;
    throw ParseError("unknown inverse kind \"" + kind + "\"");
}

QMatrix determinantal_route(const std::string& kind, const QMatrix& a, Form form, int cmp_l) {
    if (kind == "mp") return mp_inverse(a, form);
    if (kind == "drazin") return drazin(a, form);
    if (kind == "group") return group_inverse(a, form);
    if (kind == "core-r") return right_core(a, CoreMethod::Direct);
    if (kind == "core-l") return left_core(a, CoreMethod::Direct);
    if (kind == "corep-r") return core_ep(a, Side::Right, PathMethod::Determinantal);
    if (kind == "corep-l") return core_ep(a, Side::Left, PathMethod::Determinantal);
    if (kind == "dmp") return dmp(a, form);
    if (kind == "mpd") return mpd(a, form);
    if (kind == "cmp") {
        CmpVariant variant;
        variant.l = cmp_l;
        variant.rdet_form = (form == Form::Row || form == Form::HermitianRow);
        variant.hermitian =
            (form == Form::HermitianColumn || form == Form::HermitianRow) ||
            (form == Form::Auto && a.is_hermitian());
        return cmp(a, variant);
    }
    throw ParseError("unknown inverse kind \"" + kind + "\"");
}

QMatrix oracle_route(const std::string& kind, const QMatrix& a) {
    if (kind == "mp") return mp_oracle(a);
    if (kind == "drazin") return drazin_oracle(a);
    if (kind == "group") {
        if (elim_index(a) > 1) throw IndexTooLarge("group inverse: matrix index exceeds 1");
        return drazin_oracle(a);
    }
    if (kind == "core-r" || kind == "core-l") {
        if (elim_index(a) > 1)
            throw IndexTooLarge("core inverse: matrix index exceeds 1");
        const QMatrix d = drazin_oracle(a);
        const QMatrix mp = mp_oracle(a);
        return kind == "core-r" ? d * a * mp : mp * a * d;
    }
    if (kind == "corep-r" || kind == "corep-l") {
        const int k = elim_index(a);
        const QMatrix ak = a.pow(k);
        if (ak.is_zero()) return QMatrix::zero(a.rows(), a.cols());
        const QMatrix mp_power = mp_oracle(a.pow(k + 1));
        return kind == "corep-r" ? ak * mp_power : mp_power * ak;
    }
    if (kind == "dmp") return drazin_oracle(a) * a * mp_oracle(a);
    if (kind == "mpd") return mp_oracle(a) * a * drazin_oracle(a);
    if (kind == "cmp") {
        const QMatrix mp = mp_oracle(a);
        return mp * a * drazin_oracle(a) * a * mp;
    }
    throw ParseError("unknown inverse kind \"" + kind + "\"");
}

ordered_json report_to_json(const VerificationReport& report) {
    ordered_json out;
    out["system"] = system_name(report.system);
    out["ok"] = report.ok();
    ordered_json eqs = ordered_json::array();
    for (const auto& eq : report.equations) {
        ordered_json e;
        e["name"] = eq.name;
        e["ok"] = eq.ok;
        if (!eq.message.empty()) e["message"] = eq.message;
        if (!eq.ok && !eq.residual.is_empty()) e["residual"] = matrix_to_json(eq.residual);
        eqs.push_back(std::move(e));
    }
    out["equations"] = std::move(eqs);
    return out;
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void attach_timing(ordered_json& report, const Command& cmd, const Timer& timer) {
    if (!cmd.canonical) report["timing_ms"] = timer.elapsed_ms();
}

int run_inverse(const Command& cmd, const QMatrix& a, ordered_json& report) {
    const Form form = parse_form(cmd.form);
    const bool want_det = cmd.method == "determinantal" || cmd.method == "both";
    const bool want_oracle = cmd.method == "oracle" || cmd.method == "both";
    if (!want_det && !want_oracle) throw ParseError("unknown method \"" + cmd.method + "\"");
    std::optional<QMatrix> det_result, oracle_result;
    if (want_det) det_result = determinantal_route(cmd.kind, a, form, cmd.cmp_l);
    if (want_oracle) oracle_result = oracle_route(cmd.kind, a);
    ordered_json methods = ordered_json::array();
    if (want_det) methods.push_back("determinantal");
    if (want_oracle) methods.push_back("oracle");
    report["methods"] = std::move(methods);
    const QMatrix& result = want_det ? *det_result : *oracle_result;
    if (want_det && want_oracle && *det_result != *oracle_result) {
        report["agree"] = false;
        report["determinantal"] = matrix_to_json(*det_result);
        report["oracle"] = matrix_to_json(*oracle_result);
        report["diff"] = matrix_to_json(*det_result - *oracle_result);
        return kExitDisagreement;
    }
    if (want_det && want_oracle) report["agree"] = true;
    report["result"] = matrix_to_json(result);
    if (cmd.method == "both") {
        VerifyOptions options;
        if (cmd.kind == "group") options.index = 1;
        const VerificationReport vr = verify(system_for_kind(cmd.kind), a, result, options);
        report["verification"] = report_to_json(vr);
        if (!vr.ok()) return kExitDisagreement;
    }
    return kExitOk;
}

int run_rank(const Command& cmd, const QMatrix& a, ordered_json& report) {
    const bool want_det = cmd.method == "determinantal" || cmd.method == "both";
    const bool want_oracle = cmd.method == "oracle" || cmd.method == "both";
    if (!want_det && !want_oracle) throw ParseError("unknown method \"" + cmd.method + "\"");
    std::optional<int> det_r, elim_r;
    if (want_det) det_r = det_rank(a);
    if (want_oracle) elim_r = elim_rank(a);
    if (det_r) report["det_rank"] = *det_r;
    if (elim_r) report["elim_rank"] = *elim_r;
    if (det_r && elim_r && *det_r != *elim_r) {
        report["agree"] = false;
        return kExitDisagreement;
    }
    report["rank"] = det_r ? *det_r : *elim_r;
    return kExitOk;
}

int run_det(const Command& cmd, const QMatrix& a, ordered_json& report) {
    if (cmd.det_row > 0 && cmd.det_col > 0)
        throw ParseError("det: choose either --row or --col, not both");
    if (cmd.det_row > 0) {
        report["rdet"] = quaternion_to_json(rdet(a, cmd.det_row));
    } else if (cmd.det_col > 0) {
        report["cdet"] = quaternion_to_json(cdet(a, cmd.det_col));
    } else {
        report["hdet"] = to_string(hdet(a, /*cross_check=*/true));
    }
    return kExitOk;
}

int run_split(const Command& cmd, const QMatrix& a, ordered_json& report) {
    const bool want_det = cmd.method == "determinantal" || cmd.method == "both";
    const bool want_oracle = cmd.method == "oracle" || cmd.method == "both";
    if (!want_det && !want_oracle) throw ParseError("unknown method \"" + cmd.method + "\"");
    std::optional<std::pair<QMatrix, QMatrix>> det_split, oracle_split;
    if (want_det) det_split = core_nilpotent_split(a, Backend::Determinantal);
    if (want_oracle) oracle_split = core_nilpotent_split(a, Backend::Oracle);
    if (det_split && oracle_split && *det_split != *oracle_split) {
        report["agree"] = false;
        return kExitDisagreement;
    }
    const auto& [core, nilpotent] = det_split ? *det_split : *oracle_split;
    report["core_part"] = matrix_to_json(core);
    report["nilpotent_part"] = matrix_to_json(nilpotent);
    const int n = a.rows();
    ordered_json checks;
    checks["products_vanish"] =
        (core * nilpotent).is_zero() && (nilpotent * core).is_zero();
    checks["nilpotent"] = nilpotent.pow(n).is_zero();
    checks["sum_restores"] = (core + nilpotent) == a;
    report["checks"] = checks;
    for (const auto& [key, ok] : checks.items())
        if (!ok.get<bool>()) return kExitDisagreement;
    return kExitOk;
}

int run_verify_files(const Command& cmd, ordered_json& report) {
    if (cmd.kind.empty()) throw ParseError("verify: --kind is required");
    const QMatrix a = load_matrix(cmd.input_path);
    const QMatrix x = load_matrix(cmd.x_path);
    report["input"] = matrix_to_json(a);
    report["candidate"] = matrix_to_json(x);
    VerifyOptions options;
    if (cmd.kind == "group") options.index = 1;
    const VerificationReport vr = verify(system_for_kind(cmd.kind), a, x, options);
    report["verification"] = report_to_json(vr);
    return vr.ok() ? kExitOk : kExitDisagreement;
}

QMatrix random_matrix(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> comp(-2, 2);
    QMatrix m(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m.at(i, j) = q(comp(rng), comp(rng), comp(rng), comp(rng));
    return m;
}

int run_verify_random(const Command& cmd, ordered_json& report) {
    if (cmd.random_sizes.empty()) throw ParseError("verify --random: no sizes given");
    for (int n : cmd.random_sizes)
        if (n < 1) throw ParseError("verify --random: sizes must be positive");
    std::mt19937 rng(static_cast<std::mt19937::result_type>(cmd.seed));
    const bool do_mp = cmd.kind.empty() || cmd.kind == "all" || cmd.kind == "mp";
    const bool do_drazin = cmd.kind.empty() || cmd.kind == "all" || cmd.kind == "drazin";
    long failures = 0;
    long samples = 0;
    for (long t = 0; t < cmd.random_count; ++t) {
        const int n = cmd.random_sizes[static_cast<std::size_t>(t) % cmd.random_sizes.size()];
        const QMatrix a = random_matrix(rng, n);
        ++samples;
        if (do_mp) {
            const QMatrix det = mp_inverse(a);
            if (det != mp_oracle(a) || !verify(System::Penrose, a, det).ok()) ++failures;
        }
        if (do_drazin) {
            const QMatrix det = drazin(a);
            if (det != drazin_oracle(a) || !verify(System::Drazin, a, det).ok()) ++failures;
        }
    }
    report["samples"] = samples;
    report["failures"] = failures;
    report["seed"] = cmd.seed;
    return failures == 0 ? kExitOk : kExitDisagreement;
}

struct DemoStep {
    std::string name;
    bool ok;
    std::string expected;
    std::string computed;
};

void demo_compare(std::vector<DemoStep>& steps, const std::string& name,
                  const ordered_json& expected, const ordered_json& computed) {
    steps.push_back({name, expected == computed, expected.dump(), computed.dump()});
}

int run_demo(const Command& cmd, std::ostream& out) {
    ordered_json golden = builtin_golden();
    if (cmd.dump_golden) {
        out << golden.dump(2) << "\n";
        return kExitOk;
    }
    if (!cmd.golden_path.empty()) {
        std::ifstream in(cmd.golden_path);
        if (!in) throw ParseError("cannot open golden file " + cmd.golden_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        try {
            golden = ordered_json::parse(buffer.str());
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("invalid golden JSON: ") + e.what());
        }
    }

    const QMatrix a = worked_example_matrix();
    std::vector<DemoStep> steps;

    const QMatrix a_star_a = a.adjoint() * a;
    demo_compare(steps, "A* A", golden["a_star_a"], matrix_to_json(a_star_a));

    const int rank = elim_rank(a);
    demo_compare(steps, "rank", golden["rank"], ordered_json(rank));
    demo_compare(steps, "determinantal rank", golden["rank"], ordered_json(det_rank(a)));

    const QMatrix a2 = a.pow(2);
    demo_compare(steps, "A^2", golden["a_squared"], matrix_to_json(a2));
    const QMatrix a2_gram = a2 * a2.adjoint();
    demo_compare(steps, "A^2 (A^2)*", golden["a_squared_gram"], matrix_to_json(a2_gram));

    demo_compare(steps, "index", golden["index"], ordered_json(matrix_index(a)));

    const QMatrix hat = a * a2.adjoint();
    QMatrix numerators(3, 3);
    for (int i = 1; i <= 3; ++i) {
        const std::vector<Quaternion> row = hat.row(i);
        for (int j = 1; j <= 3; ++j)
            numerators.at(i, j) = anchored_rdet_sum(a2_gram, j, row, rank);
    }
    demo_compare(steps, "right core numerator sums", golden["core_right_numerators"],
                 matrix_to_json(numerators));

    const QMatrix core_right = right_core_verified(a);
    demo_compare(steps, "right core inverse", golden["core_right"],
                 matrix_to_json(core_right));

    const QMatrix core_left = left_core_verified(a);
    demo_compare(steps, "left core inverse", golden["core_left"], matrix_to_json(core_left));

    const QMatrix mp = mp_inverse_verified(a);
    demo_compare(steps, "Moore-Penrose inverse", golden["mp"], matrix_to_json(mp));

    const QMatrix mp_core_left = mp_inverse(core_left);
    demo_compare(steps, "MP inverse of left core inverse", golden["mp_of_core_left"],
                 matrix_to_json(mp_core_left));

    const QMatrix qa_a = projector_q(a) * a;
    demo_compare(steps, "Q_A A", golden["q_projector_times_a"], matrix_to_json(qa_a));
    steps.push_back({"Q_A A equals MP inverse of left core inverse", qa_a == mp_core_left,
                     "equal", qa_a == mp_core_left ? "equal" : "different"});

    bool all_ok = true;
    for (const auto& s : steps) all_ok = all_ok && s.ok;

    if (cmd.json_output) {
        ordered_json report;
        report["verb"] = "demo";
        report["input"] = matrix_to_json(a);
        ordered_json list = ordered_json::array();
        for (const auto& s : steps) {
            ordered_json e;
            e["name"] = s.name;
            e["ok"] = s.ok;
            if (!s.ok) {
                e["expected"] = ordered_json::parse(s.expected);
                e["computed"] = ordered_json::parse(s.computed);
            }
            list.push_back(std::move(e));
        }
        report["steps"] = std::move(list);
        report["ok"] = all_ok;
        out << report.dump(2) << "\n";
    } else {
        out << "worked example: A =\n" << a.str() << "\n";
        for (const auto& s : steps) {
            if (s.ok) {
                out << "ok       " << s.name << "\n";
            } else {
                out << "MISMATCH " << s.name << "\n  expected: " << s.expected
                    << "\n  computed: " << s.computed << "\n";
            }
        }
        out << (all_ok ? "all values reproduced\n" : "mismatches found\n");
    }
    return all_ok ? kExitOk : kExitDisagreement;
}

} // namespace

QMatrix load_matrix(const std::string& path) {
    if (path.empty()) throw ParseError("no input matrix given");
    std::stringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open " + path);
        buffer << in.rdbuf();
    }
    return parse_matrix(buffer.str());
}

int run(const Command& command, std::ostream& out) {
    const Timer timer;
    ordered_json report;
    try {
        if (command.cap > 0) set_det_cap(command.cap);
        switch (command.verb) {
            case Command::Verb::Demo:
                return run_demo(command, out);
            case Command::Verb::Verify: {
                report["verb"] = "verify";
                int code;
                if (command.random_count > 0) {
                    code = run_verify_random(command, report);
                } else {
                    report["kind"] = command.kind;
                    code = run_verify_files(command, report);
                }
                attach_timing(report, command, timer);
                out << report.dump(2) << "\n";
                return code;
            }
            default:
                break;
        }
        const QMatrix a = load_matrix(command.input_path);
        int code = kExitOk;
        switch (command.verb) {
            case Command::Verb::Inverse: {
                report["verb"] = "inverse";
                report["kind"] = command.kind;
                report["method"] = command.method;
                report["form"] = command.form;
                report["input"] = matrix_to_json(a);
                code = run_inverse(command, a, report);
                break;
            }
            case Command::Verb::Rank: {
                report["verb"] = "rank";
                report["input"] = matrix_to_json(a);
                code = run_rank(command, a, report);
                break;
            }
            case Command::Verb::Index: {
                report["verb"] = "index";
                report["input"] = matrix_to_json(a);
                report["index"] = matrix_index(a);
                break;
            }
            case Command::Verb::Det: {
                report["verb"] = "det";
                report["input"] = matrix_to_json(a);
                code = run_det(command, a, report);
                break;
            }
            case Command::Verb::Split: {
                report["verb"] = "split";
                report["input"] = matrix_to_json(a);
                code = run_split(command, a, report);
                break;
            }
            default:
                break;
        }
        attach_timing(report, command, timer);
        out << report.dump(2) << "\n";
        return code;
    } catch (const Error& e) {
        ordered_json error_report;
        int code = kExitOther;
        const auto classify = [&](const char* type, int c) {
            error_report["error"]["type"] = type;
            code = c;
        };
        if (dynamic_cast<const ParseError*>(&e)) classify("parse", kExitParse);
        else if (dynamic_cast<const SizeCapExceeded*>(&e)) classify("size_cap", kExitSizeCap);
        else if (dynamic_cast<const MethodDisagreement*>(&e)) classify("method_disagreement", kExitDisagreement);
        else if (dynamic_cast<const InternalInconsistency*>(&e)) classify("internal_inconsistency", kExitDisagreement);
        else if (dynamic_cast<const IndexTooLarge*>(&e)) classify("index_too_large", kExitPrecondition);
        else if (dynamic_cast<const NotHermitian*>(&e)) classify("not_hermitian", kExitPrecondition);
        else if (dynamic_cast<const ShapeError*>(&e)) classify("shape", kExitPrecondition);
        else if (dynamic_cast<const RankZero*>(&e)) classify("rank_zero", kExitPrecondition);
        else if (dynamic_cast<const DivisionByZero*>(&e)) classify("division_by_zero", kExitPrecondition);
        else classify("error", kExitOther);
        error_report["error"]["message"] = e.what();
        out << error_report.dump(2) << "\n";
        return code;
    } catch (const std::exception& e) {
        ordered_json error_report;
        error_report["error"]["type"] = "error";
        error_report["error"]["message"] = e.what();
        out << error_report.dump(2) << "\n";
        return kExitOther;
    }
}

} // namespace qgi::cli
