#include "ric/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "ric/engine.hpp"
#include "ric/io.hpp"
#include "ric/ric.hpp"

namespace ric {

std::string_view to_string(BenchMethod method) noexcept {
    switch (method) {
        case BenchMethod::Direct: return "direct";
        case BenchMethod::FullSelect: return "full_select";
        case BenchMethod::Ric: return "ric";
    }
    return "ric";
}

std::optional<BenchMethod> parse_bench_method(std::string_view text) noexcept {
    if (text == "direct") return BenchMethod::Direct;
    if (text == "full_select") return BenchMethod::FullSelect;
    if (text == "ric") return BenchMethod::Ric;
    return std::nullopt;
}

std::optional<ReportFormat> parse_report_format(std::string_view text) noexcept {
    if (text == "csv") return ReportFormat::Csv;
    if (text == "json") return ReportFormat::Json;
    if (text == "md" || text == "markdown") return ReportFormat::Markdown;
    return std::nullopt;
}

std::vector<std::size_t> compression_candidates(std::size_t n, CompressionPolicy policy,
                                                const std::vector<std::size_t>& explicit_c) {
    std::vector<std::size_t> out;
    if (n < 4) return out;
    auto valid = [n](std::size_t c) { return c >= 2 && c <= n / 2 && n % c == 0; };
    switch (policy) {
        case CompressionPolicy::AllDivisors:
            for (std::size_t c = 2; c <= n / 2; ++c) {
                if (valid(c)) out.push_back(c);
            }
            break;
        case CompressionPolicy::PowersOfTwo:
            for (std::size_t c = 2; c <= n / 2; c <<= 1) {
                if (valid(c)) out.push_back(c);
            }
            break;
        case CompressionPolicy::Explicit:
            for (const std::size_t c : explicit_c) {
                if (valid(c)) out.push_back(c);
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            break;
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double median_time_ns(Fn&& fn, const BenchConfig& config) {
    if (!config.timing) return 0.0;
    for (std::size_t i = 0; i < config.warmup; ++i) fn();
    std::vector<double> samples;
    samples.reserve(config.trials);
    for (std::size_t i = 0; i < config.trials; ++i) {
        const auto t0 = Clock::now();
        fn();
        const auto t1 = Clock::now();
        samples.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
    }
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    return samples.size() % 2 == 1 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
}

double relative_error(const std::vector<Complex>& got, const std::vector<Complex>& oracle) {
    double err = 0.0;
    double norm = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        err = std::max(err, std::abs(got[i] - oracle[i]));
        norm = std::max(norm, std::abs(oracle[i]));
    }
    return norm > 0.0 ? err / norm : err;
}

std::vector<Complex> select(const ComplexSequence& full, const std::vector<std::size_t>& indices) {
    std::vector<Complex> out;
    out.reserve(indices.size());
    for (const std::size_t i : indices) out.push_back(full[i]);
    return out;
}

// Keeps timed results observable so the work cannot be discarded.
volatile double g_sink = 0.0;

void consume(const std::vector<Complex>& v) {
    if (!v.empty()) g_sink = g_sink + v.front().real();
}

}  // namespace

BenchReport run_benchmark(const BenchConfig& config) {
    if (config.n_list.empty()) {
        throw Error(ErrorCode::Config, "benchmark grid has no lengths");
    }
    if (config.trials == 0) {
        throw Error(ErrorCode::Config, "benchmark needs at least one trial");
    }
    if (config.policy == CompressionPolicy::Explicit && config.explicit_c.empty()) {
        throw Error(ErrorCode::Config, "explicit compression policy given no lengths");
    }

    BenchReport report;
    for (const std::size_t n : config.n_list) {
        const auto candidates = compression_candidates(n, config.policy, config.explicit_c);
        if (candidates.empty()) {
            throw Error(ErrorCode::Config, "n=" + std::to_string(n) + " admits no valid compressed length");
        }
        const ComplexSequence x = random_signal(n, config.seed + n);
        const std::size_t trials = config.timing ? config.trials : 0;

        for (const std::size_t c : candidates) {
            const RicPlan plan = make_plan(n, c);
            const auto indices = ric_index_set(plan);
            const auto oracle = dft_direct_at(x, indices, Direction::Forward, Normalization::None);

            {
                OpCounter counter;
                const auto values = ric_dft(x, plan, Normalization::None, counter).values();
                BenchRow row;
                row.n = n;
                row.c = c;
                row.l = plan.l();
                row.method = BenchMethod::Ric;
                row.engine = std::string(to_string(engine_for_length(c)));
                row.complex_adds = counter.complex_adds;
                row.complex_mults = counter.complex_mults;
                row.fold_adds = static_cast<std::uint64_t>(c) * (plan.l() - 1);
                row.max_rel_error = relative_error(values, oracle);
                row.trials = trials;
                row.wall_time_ns = median_time_ns([&] { consume(ric_dft(x, plan).values()); }, config);
                report.rows.push_back(row);
            }
            {
                OpCounter counter;
                const auto values = select(transform(x, Direction::Forward, Normalization::None, counter), indices);
                BenchRow row;
                row.n = n;
                row.c = c;
                row.l = plan.l();
                row.method = BenchMethod::FullSelect;
                row.engine = std::string(to_string(engine_for_length(n)));
                row.complex_adds = counter.complex_adds;
                row.complex_mults = counter.complex_mults;
                row.max_rel_error = relative_error(values, oracle);
                row.trials = trials;
                row.wall_time_ns = median_time_ns(
                    [&] { consume(select(transform(x, Direction::Forward, Normalization::None), indices)); },
                    config);
                report.rows.push_back(row);
            }
            if (n <= config.direct_max_n) {
                OpCounter counter;
                const auto values = select(dft_direct(x, Direction::Forward, Normalization::None, counter), indices);
                BenchRow row;
                row.n = n;
                row.c = c;
                row.l = plan.l();
                row.method = BenchMethod::Direct;
                row.engine = "direct";
                row.complex_adds = counter.complex_adds;
                row.complex_mults = counter.complex_mults;
                row.max_rel_error = relative_error(values, oracle);
                row.trials = trials;
                row.wall_time_ns = median_time_ns(
                    [&] { consume(select(dft_direct(x, Direction::Forward, Normalization::None), indices)); },
                    config);
                report.rows.push_back(row);
            }
        }
    }

    std::stable_sort(report.rows.begin(), report.rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::make_tuple(a.n, a.c, to_string(a.method)) < std::make_tuple(b.n, b.c, to_string(b.method));
    });
    return report;
}

namespace {

constexpr std::string_view kCsvHeader =
    "n,c,l,method,engine,complex_adds,complex_mults,fold_adds,wall_time_ns,trials,max_rel_error";

std::string render_csv(const BenchReport& report) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& r : report.rows) {
        out += std::to_string(r.n) + ',' + std::to_string(r.c) + ',' + std::to_string(r.l) + ',' +
               std::string(to_string(r.method)) + ',' + r.engine + ',' + std::to_string(r.complex_adds) + ',' +
               std::to_string(r.complex_mults) + ',' + std::to_string(r.fold_adds) + ',' +
               format_double(r.wall_time_ns) + ',' + std::to_string(r.trials) + ',' +
               format_double(r.max_rel_error) + '\n';
    }
    return out;
}

std::string render_json(const BenchReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"n", r.n},
                        {"c", r.c},
                        {"l", r.l},
                        {"method", std::string(to_string(r.method))},
                        {"engine", r.engine},
                        {"complex_adds", r.complex_adds},
                        {"complex_mults", r.complex_mults},
                        {"fold_adds", r.fold_adds},
                        {"wall_time_ns", r.wall_time_ns},
                        {"trials", r.trials},
                        {"max_rel_error", r.max_rel_error}});
    }
    return rows.dump(2) + '\n';
}

std::string render_markdown(const BenchReport& report) {
    std::ostringstream out;
    out << "| n | c | l | method | engine | complex adds | complex mults | fold adds | median ns | trials | "
           "max rel error |\n";
    out << "|---:|---:|---:|:---|:---|---:|---:|---:|---:|---:|---:|\n";
    for (const auto& r : report.rows) {
        char err[32];
        std::snprintf(err, sizeof err, "%.3e", r.max_rel_error);
        char ns[32];
        std::snprintf(ns, sizeof ns, "%.0f", r.wall_time_ns);
        out << "| " << r.n << " | " << r.c << " | " << r.l << " | " << to_string(r.method) << " | " << r.engine
            << " | " << r.complex_adds << " | " << r.complex_mults << " | " << r.fold_adds << " | " << ns << " | "
            << r.trials << " | " << err << " |\n";
    }
    return out.str();
}

template <typename T>
T parse_unsigned(std::string_view text, std::size_t line_no) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": bad integer '" + std::string(text) + "'");
    }
    return value;
}

double parse_real(std::string_view text, std::size_t line_no) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": bad number '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

std::string render_report(const BenchReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Csv: return render_csv(report);
        case ReportFormat::Json: return render_json(report);
        case ReportFormat::Markdown: return render_markdown(report);
    }
    return render_csv(report);
}

void emit_report(const BenchReport& report, const std::filesystem::path& path, ReportFormat format) {
    write_text_file(path, render_report(report, format));
}

BenchReport parse_report_csv(std::string_view text) {
    BenchReport report;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1) {
            if (line != kCsvHeader) {
                throw Error(ErrorCode::Parse, "line 1: unexpected report header");
            }
            continue;
        }
        std::vector<std::string_view> f;
        std::string_view rest(line);
        while (true) {
            const auto comma = rest.find(',');
            f.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (f.size() != 11) {
            throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected 11 fields");
        }
        BenchRow r;
        r.n = parse_unsigned<std::size_t>(f[0], line_no);
        r.c = parse_unsigned<std::size_t>(f[1], line_no);
        r.l = parse_unsigned<std::size_t>(f[2], line_no);
        const auto method = parse_bench_method(f[3]);
        if (!method) {
            throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": unknown method");
        }
        r.method = *method;
        r.engine = std::string(f[4]);
        r.complex_adds = parse_unsigned<std::uint64_t>(f[5], line_no);
        r.complex_mults = parse_unsigned<std::uint64_t>(f[6], line_no);
        r.fold_adds = parse_unsigned<std::uint64_t>(f[7], line_no);
        r.wall_time_ns = parse_real(f[8], line_no);
        r.trials = parse_unsigned<std::size_t>(f[9], line_no);
        r.max_rel_error = parse_real(f[10], line_no);
        report.rows.push_back(std::move(r));
    }
    return report;
}

}  // namespace ric
