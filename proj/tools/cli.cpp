#include "cli.hpp"

#include <charconv>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ric/bench.hpp"
#include "ric/io.hpp"
#include "ric/planner.hpp"
#include "ric/ric.hpp"

namespace ric::cli {

namespace {

struct PlanFlags {
    std::optional<std::size_t> n;
    std::optional<std::size_t> c;
    std::optional<unsigned> q;
    std::optional<unsigned> p;

    void attach(CLI::App& cmd) {
        cmd.add_option("--n", n, "Total length N");
        cmd.add_option("--c", c, "Compressed length C (must divide N, 2 <= C <= N/2)");
        cmd.add_option("--q", q, "log2(N); use together with --p instead of --n/--c");
        cmd.add_option("--p", p, "log2(C); use together with --q");
    }

    bool has_explicit_length() const { return n.has_value() || q.has_value(); }

    /// `input_length` stands in for --n when neither --n nor --q is given.
    RicPlan resolve(std::optional<std::size_t> input_length = std::nullopt) const {
        if (q || p) {
            if (n || c) {
                throw Error(ErrorCode::Config, "give either --n/--c or --q/--p, not both");
            }
            if (!q || !p) {
                throw Error(ErrorCode::Config, "--q and --p must be given together");
            }
            return plan_from_exponents(*q, *p);
        }
        if (!c) {
            throw Error(ErrorCode::Config, "--c (or --q/--p) is required");
        }
        const auto length = n ? n : input_length;
        if (!length) {
            throw Error(ErrorCode::Config, "--n (or --q/--p) is required");
        }
        return make_plan(*length, *c);
    }
};

void require_length(const ComplexSequence& x, const RicPlan& plan) {
    if (x.size() != plan.n()) {
        throw Error(ErrorCode::LengthMismatch, "input has " + std::to_string(x.size()) +
                                                   " samples, plan expects N=" + std::to_string(plan.n()));
    }
}

/// Resolves the plan before touching the input when the length is known.
std::pair<RicPlan, ComplexSequence> load_input(const PlanFlags& flags, const std::string& path, SignalFormat fmt) {
    if (flags.has_explicit_length()) {
        RicPlan plan = flags.resolve();
        ComplexSequence x = read_signal(path, fmt);
        require_length(x, plan);
        return {plan, std::move(x)};
    }
    ComplexSequence x = read_signal(path, fmt);
    RicPlan plan = flags.resolve(x.size());
    return {plan, std::move(x)};
}

template <typename Enum>
CLI::Transformer enum_map(const std::map<std::string, Enum>& values) {
    return CLI::Transformer(values, CLI::ignore_case);
}

const std::map<std::string, SignalFormat> kSignalFormats{{"csv", SignalFormat::Csv}, {"raw", SignalFormat::RawF64}};
const std::map<std::string, SpectrumFormat> kSpectrumFormats{{"csv", SpectrumFormat::Csv},
                                                             {"json", SpectrumFormat::Json}};
const std::vector<std::string> kModeNames{"none", "recip-n", "unitary"};
const std::vector<std::string> kDirectionNames{"forward", "inverse"};
const std::map<std::string, ReportFormat> kReportFormats{
    {"csv", ReportFormat::Csv}, {"json", ReportFormat::Json}, {"md", ReportFormat::Markdown}};
const std::map<std::string, CompressionPolicy> kPolicies{{"all", CompressionPolicy::AllDivisors},
                                                         {"pow2", CompressionPolicy::PowersOfTwo},
                                                         {"list", CompressionPolicy::Explicit}};

Tone parse_tone(const std::string& spec) {
    // bin[:amplitude[:phase]]
    Tone tone{};
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty() || parts.size() > 3) {
        throw Error(ErrorCode::Config, "tone '" + spec + "' is not bin[:amplitude[:phase]]");
    }
    try {
        std::size_t used = 0;
        const long long bin = std::stoll(parts[0], &used);
        if (used != parts[0].size() || bin < 0) throw std::invalid_argument("bin");
        tone.bin = static_cast<std::size_t>(bin);
        if (parts.size() > 1) {
            tone.amplitude = std::stod(parts[1], &used);
            if (used != parts[1].size()) throw std::invalid_argument("amplitude");
        }
        if (parts.size() > 2) {
            tone.phase = std::stod(parts[2], &used);
            if (used != parts[2].size()) throw std::invalid_argument("phase");
        }
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::Config, "tone '" + spec + "' is not bin[:amplitude[:phase]]");
    }
    return tone;
}

nlohmann::json assignment_json(const BinAssignment& a) {
    return {{"target_hz", a.target_hz},
            {"k", a.k},
            {"bin_index", a.bin_index},
            {"achieved_hz", a.achieved_hz},
            {"rel_error", a.rel_error}};
}

nlohmann::json proposal_json(const PlanProposal& p, const std::vector<BinAssignment>& coverage) {
    nlohmann::json doc{{"n", p.plan.n()},
                       {"c", p.plan.c()},
                       {"l", p.plan.l()},
                       {"sample_rate", p.sample_rate},
                       {"bin_width", p.bin_width},
                       {"assignments", nlohmann::json::array()}};
    for (const auto& a : p.assignments) doc["assignments"].push_back(assignment_json(a));
    if (!coverage.empty()) {
        doc["coverage"] = nlohmann::json::array();
        for (const auto& a : coverage) doc["coverage"].push_back(assignment_json(a));
    }
    return doc;
}

void print_proposal_table(std::ostream& out, const PlanProposal& p, const std::vector<BinAssignment>& coverage) {
    out << "N=" << p.plan.n() << " C=" << p.plan.c() << " L=" << p.plan.l()
        << " sample_rate=" << format_double(p.sample_rate) << " bin_width=" << format_double(p.bin_width) << '\n';
    auto rows = [&out](const char* title, const std::vector<BinAssignment>& list) {
        out << title << '\n';
        out << std::left << std::setw(26) << "target_hz" << std::setw(8) << "k" << std::setw(10) << "bin"
            << std::setw(26) << "achieved_hz" << "rel_error\n";
        for (const auto& a : list) {
            out << std::left << std::setw(26) << format_double(a.target_hz) << std::setw(8) << a.k << std::setw(10)
                << a.bin_index << std::setw(26) << format_double(a.achieved_hz) << format_double(a.rel_error)
                << '\n';
        }
    };
    rows("assignments:", p.assignments);
    if (!coverage.empty()) rows("coverage:", coverage);
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::Io:
        case ErrorCode::Parse:
        case ErrorCode::Empty:
        case ErrorCode::NonFinite: return kIoError;
        default: return kUsageError;
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rectangular-index DFT coefficients: fold N samples to C and transform only those bins", "ric"};
    app.require_subcommand(1);

    // compress
    auto* compress = app.add_subcommand("compress", "Fold an N-point signal into C column sums");
    std::string c_in;
    std::string c_out;
    SignalFormat c_fmt = SignalFormat::Csv;
    std::optional<SignalFormat> c_out_fmt;
    PlanFlags c_plan;
    compress->add_option("--in", c_in, "Input signal")->required();
    compress->add_option("--out", c_out, "Output C-point signal")->required();
    compress->add_option("--format", c_fmt, "Input format: csv|raw")->transform(enum_map(kSignalFormats));
    compress->add_option("--out-format", c_out_fmt, "Output format (default: same as input)")
        ->transform(enum_map(kSignalFormats));
    c_plan.attach(*compress);

    // dft / idft
    struct TransformFlags {
        std::string in;
        std::string out;
        SignalFormat fmt = SignalFormat::Csv;
        SpectrumFormat out_fmt = SpectrumFormat::Csv;
        std::string mode = "none";
        PlanFlags plan;
    };
    TransformFlags dft_flags;
    TransformFlags idft_flags;
    idft_flags.mode = "recip-n";
    auto add_transform = [&](const char* name, const char* help, TransformFlags& f) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("--in", f.in, "Input signal (N samples)")->required();
        cmd->add_option("--out", f.out, "Output RIC spectrum")->required();
        cmd->add_option("--format", f.fmt, "Input format: csv|raw")->transform(enum_map(kSignalFormats));
        cmd->add_option("--out-format", f.out_fmt, "Output format: csv|json")->transform(enum_map(kSpectrumFormats));
        cmd->add_option("--mode", f.mode, "Normalization: none|recip-n|unitary")
            ->check(CLI::IsMember(kModeNames))
            ->capture_default_str();
        f.plan.attach(*cmd);
        return cmd;
    };
    auto* dft = add_transform("dft", "RIC DFT: X[kL] for k in [0, C)", dft_flags);
    auto* idft = add_transform("idft", "RIC IDFT: x[nL] for n in [0, C)", idft_flags);

    // plan
    auto* plan = app.add_subcommand("plan", "Choose N and C so target frequencies fall on RIC bins");
    double sample_rate = 0.0;
    std::vector<double> targets;
    std::vector<double> extra_targets;
    PlannerOptions planner_opts;
    bool plan_json = false;
    plan->add_option("--sample-rate", sample_rate, "Sampling rate in Hz")->required();
    plan->add_option("--targets", targets, "Target frequencies in Hz")->required()->expected(1, -1);
    plan->add_option("--extra", extra_targets, "Further frequencies to report nearest bins for");
    plan->add_option("--max-n", planner_opts.max_n, "Largest N to consider")->capture_default_str();
    plan->add_option("--tol", planner_opts.tol, "Relative frequency tolerance")->capture_default_str();
    plan->add_flag("--pow2", planner_opts.power_of_two_only, "Only consider power-of-two N");
    plan->add_flag("--json", plan_json, "Emit JSON instead of a table");

    // bench
    auto* bench = app.add_subcommand("bench", "Compare full-length and RIC transforms by op count and time");
    BenchConfig bench_cfg;
    std::string bench_out;
    ReportFormat bench_fmt = ReportFormat::Csv;
    bool counts_only = false;
    bench->add_option("--n", bench_cfg.n_list, "Signal lengths")->required()->expected(1, -1);
    bench->add_option("--c-policy", bench_cfg.policy, "Compressed lengths: all|pow2|list")
        ->transform(enum_map(kPolicies));
    bench->add_option("--c", bench_cfg.explicit_c, "Compressed lengths for --c-policy list");
    bench->add_option("--trials", bench_cfg.trials, "Timed trials per method")->capture_default_str();
    bench->add_option("--warmup", bench_cfg.warmup, "Discarded warm-up runs")->capture_default_str();
    bench->add_option("--seed", bench_cfg.seed, "Input seed")->capture_default_str();
    bench->add_option("--direct-max-n", bench_cfg.direct_max_n, "Largest N for the direct DFT row")
        ->capture_default_str();
    bench->add_flag("--counts-only", counts_only, "Skip timing; gather counts and errors only");
    bench->add_option("--out", bench_out, "Report path (default: stdout)");
    bench->add_option("--format", bench_fmt, "Report format: csv|json|md")->transform(enum_map(kReportFormats));

    // verify
    auto* verify = app.add_subcommand("verify", "Check the RIC path against a direct full-length evaluation");
    std::string v_in;
    SignalFormat v_fmt = SignalFormat::Csv;
    std::optional<std::uint64_t> v_random;
    PlanFlags v_plan;
    std::string v_mode_name = "none";
    std::string v_dir_name = "forward";
    VerifyOptions v_opts;
    auto* v_in_opt = verify->add_option("--in", v_in, "Input signal");
    verify->add_option("--format", v_fmt, "Input format: csv|raw")->transform(enum_map(kSignalFormats));
    verify->add_option("--random", v_random, "Use a pseudorandom input with this seed (needs --n or --q)")
        ->excludes(v_in_opt);
    verify->add_option("--mode", v_mode_name, "Normalization: none|recip-n|unitary")
        ->check(CLI::IsMember(kModeNames))
        ->capture_default_str();
    verify->add_option("--dir", v_dir_name, "Direction: forward|inverse")
        ->check(CLI::IsMember(kDirectionNames))
        ->capture_default_str();
    verify->add_option("--tol", v_opts.tolerance, "Relative l-inf tolerance")->capture_default_str();
    verify->add_option("--perturb", v_opts.perturbation, "Inject this corruption into the RIC path");
    v_plan.attach(*verify);

    // synthesize
    auto* synth = app.add_subcommand("synthesize", "Write a sum of complex tones");
    std::size_t s_n = 0;
    std::vector<std::string> s_tones;
    std::string s_out;
    SignalFormat s_fmt = SignalFormat::Csv;
    synth->add_option("--n", s_n, "Number of samples")->required();
    synth->add_option("--tone", s_tones, "Tone as bin[:amplitude[:phase]]; repeatable")->required();
    synth->add_option("--out", s_out, "Output signal")->required();
    synth->add_option("--format", s_fmt, "Output format: csv|raw")->transform(enum_map(kSignalFormats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (compress->parsed()) {
            auto [p, x] = load_input(c_plan, c_in, c_fmt);
            const auto folded = fold(x, p);
            write_signal(folded.samples(), c_out, c_out_fmt.value_or(c_fmt));
            return kSuccess;
        }
        for (auto [cmd, flags, dir] : {std::tuple{dft, &dft_flags, Direction::Forward},
                                       std::tuple{idft, &idft_flags, Direction::Inverse}}) {
            if (!cmd->parsed()) continue;
            auto [p, x] = load_input(flags->plan, flags->in, flags->fmt);
            OpCounter counter;
            const auto spectrum = ric_transform(x, p, *parse_normalization(flags->mode), dir, counter);
            write_spectrum(spectrum, flags->out, flags->out_fmt);
            return kSuccess;
        }
        if (plan->parsed()) {
            try {
                const auto proposal = plan_for_frequencies(sample_rate, targets, planner_opts);
                const auto coverage = coverage_report(proposal, extra_targets);
                if (plan_json) {
                    out << proposal_json(proposal, coverage).dump(2) << '\n';
                } else {
                    print_proposal_table(out, proposal, coverage);
                }
                return kSuccess;
            } catch (const InfeasiblePlanError& e) {
                err << "ric: " << e.what() << '\n';
                if (e.best()) {
                    if (plan_json) {
                        auto doc = proposal_json(*e.best(), {});
                        doc["feasible"] = false;
                        doc["best_error"] = e.best_error();
                        out << doc.dump(2) << '\n';
                    } else {
                        out << "best effort (infeasible):\n";
                        print_proposal_table(out, *e.best(), {});
                    }
                }
                return kUsageError;
            }
        }
        if (bench->parsed()) {
            bench_cfg.timing = !counts_only;
            const auto report = run_benchmark(bench_cfg);
            if (bench_out.empty()) {
                out << render_report(report, bench_fmt);
            } else {
                emit_report(report, bench_out, bench_fmt);
            }
            return kSuccess;
        }
        if (verify->parsed()) {
            std::optional<std::pair<RicPlan, ComplexSequence>> input;
            if (v_random) {
                const RicPlan p = v_plan.resolve();
                input.emplace(p, random_signal(p.n(), *v_random));
            } else if (!v_in.empty()) {
                input.emplace(load_input(v_plan, v_in, v_fmt));
            } else {
                throw Error(ErrorCode::Config, "verify needs --in or --random");
            }
            const auto& [p, x] = *input;
            const Normalization v_mode = *parse_normalization(v_mode_name);
            const Direction v_dir = *parse_direction(v_dir_name);
            const auto report = verify_against_oracle(x, p, v_mode, v_dir, v_opts);
            out << (report.pass ? "PASS" : "FAIL") << " n=" << p.n() << " c=" << p.c() << " l=" << p.l()
                << " mode=" << to_string(v_mode) << " dir=" << to_string(v_dir)
                << " max_abs_error=" << format_double(report.max_abs_error)
                << " max_rel_error=" << format_double(report.max_rel_error)
                << " tolerance=" << format_double(report.tolerance) << '\n';
            return report.pass ? kSuccess : kVerificationFailed;
        }
        if (synth->parsed()) {
            std::vector<Tone> tones;
            for (const auto& t : s_tones) tones.push_back(parse_tone(t));
            write_signal(synthesize_tones(s_n, tones), s_out, s_fmt);
            return kSuccess;
        }
    } catch (const Error& e) {
        err << "ric: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return kUsageError;
}

}  // namespace ric::cli
