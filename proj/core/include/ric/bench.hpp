#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ric {

enum class CompressionPolicy { AllDivisors, PowersOfTwo, Explicit };

struct BenchConfig {
    std::vector<std::size_t> n_list;
    CompressionPolicy policy = CompressionPolicy::PowersOfTwo;
    std::vector<std::size_t> explicit_c;  // used with CompressionPolicy::Explicit
    std::size_t trials = 9;
    std::size_t warmup = 1;
    std::uint64_t seed = 1;
    /// The full direct DFT row is only produced up to this length.
    std::size_t direct_max_n = 1024;
    /// When false, only counts and errors are gathered (wall_time_ns = 0).
    bool timing = true;
};

/// Method names as they appear in reports:
///   direct      - full N-point direct DFT, then pick indices kL
///   full_select - full N-point transform (radix-2 when possible), then pick kL
///   ric         - fold to C points, C-point transform
enum class BenchMethod { Direct, FullSelect, Ric };

std::string_view to_string(BenchMethod method) noexcept;
std::optional<BenchMethod> parse_bench_method(std::string_view text) noexcept;

struct BenchRow {
    std::size_t n = 0;
    std::size_t c = 0;
    std::size_t l = 0;
    BenchMethod method = BenchMethod::Ric;
    std::string engine;  // "radix2" or "direct": which count convention applies
    std::uint64_t complex_adds = 0;
    std::uint64_t complex_mults = 0;
    std::uint64_t fold_adds = 0;  // part of complex_adds spent folding
    double wall_time_ns = 0.0;    // median over trials
    std::size_t trials = 0;
    double max_rel_error = 0.0;   // vs direct evaluation at RIC indices

    friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchReport {
    std::vector<BenchRow> rows;  // sorted by (n, c, method name)

    friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

/// Valid compressed lengths of `n` under the policy, ascending. Explicit
/// values that are not valid for n are dropped.
std::vector<std::size_t> compression_candidates(std::size_t n, CompressionPolicy policy,
                                                const std::vector<std::size_t>& explicit_c = {});

/// Throws Error{Config} on an empty grid, zero trials, or an n without any
/// valid compressed length.
BenchReport run_benchmark(const BenchConfig& config);

enum class ReportFormat { Csv, Json, Markdown };
std::optional<ReportFormat> parse_report_format(std::string_view text) noexcept;

std::string render_report(const BenchReport& report, ReportFormat format);
void emit_report(const BenchReport& report, const std::filesystem::path& path, ReportFormat format);

/// Parses the CSV produced by render_report. Throws Error{Parse}.
BenchReport parse_report_csv(std::string_view text);

}  // namespace ric
