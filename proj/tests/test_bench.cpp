#include <doctest.h>

#include <algorithm>
#include <map>

#include <json.hpp>

#include "ric/bench.hpp"
#include "ric/io.hpp"
#include "temp_dir.hpp"

using namespace ric;

namespace {

BenchConfig count_only(std::vector<std::size_t> n_list, CompressionPolicy policy) {
    BenchConfig cfg;
    cfg.n_list = std::move(n_list);
    cfg.policy = policy;
    cfg.timing = false;
    return cfg;
}

const BenchRow& find_row(const BenchReport& r, std::size_t n, std::size_t c, BenchMethod m) {
    const auto it = std::find_if(r.rows.begin(), r.rows.end(),
                                 [&](const BenchRow& row) { return row.n == n && row.c == c && row.method == m; });
    REQUIRE(it != r.rows.end());
    return *it;
}

}  // namespace

TEST_CASE("compression candidates") {
    CHECK(compression_candidates(24, CompressionPolicy::AllDivisors) == std::vector<std::size_t>{2, 3, 4, 6, 8, 12});
    CHECK(compression_candidates(32, CompressionPolicy::PowersOfTwo) == std::vector<std::size_t>{2, 4, 8, 16});
    CHECK(compression_candidates(24, CompressionPolicy::PowersOfTwo) == std::vector<std::size_t>{2, 4, 8});
    CHECK(compression_candidates(32, CompressionPolicy::Explicit, {16, 5, 4, 32, 4}) ==
          std::vector<std::size_t>{4, 16});
    CHECK(compression_candidates(3, CompressionPolicy::AllDivisors).empty());
}

TEST_CASE("fold additions for n=8, c=4") {
    const auto report = run_benchmark(count_only({8}, CompressionPolicy::PowersOfTwo));
    const auto& ric_row = find_row(report, 8, 4, BenchMethod::Ric);
    CHECK(ric_row.fold_adds == 4);
    CHECK(ric_row.l == 2);
    CHECK(ric_row.engine == "radix2");
}

TEST_CASE("square point multiplies less than the full FFT") {
    BenchConfig cfg;
    cfg.n_list = {1024};
    cfg.policy = CompressionPolicy::Explicit;
    cfg.explicit_c = {32};
    cfg.trials = 3;
    const auto report = run_benchmark(cfg);
    const auto& ric_row = find_row(report, 1024, 32, BenchMethod::Ric);
    const auto& full = find_row(report, 1024, 32, BenchMethod::FullSelect);
    CHECK(ric_row.complex_mults <= full.complex_mults);
    CHECK(ric_row.complex_mults == 16 * 5);
    CHECK(full.complex_mults == 512 * 10);
    CHECK(ric_row.trials == 3);
    CHECK(ric_row.wall_time_ns > 0.0);
}

TEST_CASE("benchmark config errors") {
    auto expect_config = [](const BenchConfig& cfg) {
        try {
            (void)run_benchmark(cfg);
            FAIL("expected Config");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Config);
        }
    };
    BenchConfig zero_trials = count_only({16}, CompressionPolicy::PowersOfTwo);
    zero_trials.trials = 0;
    expect_config(zero_trials);
    expect_config(count_only({}, CompressionPolicy::PowersOfTwo));
    expect_config(count_only({7}, CompressionPolicy::AllDivisors));
    expect_config(count_only({16}, CompressionPolicy::Explicit));
}

TEST_CASE("report invariants over a mixed grid") {
    const auto report = run_benchmark(count_only({16, 24, 64, 256}, CompressionPolicy::AllDivisors));
    std::map<std::size_t, std::uint64_t> last_ric_mults;
    for (const auto& row : report.rows) {
        CHECK(row.max_rel_error <= 1e-9);
        if (row.method == BenchMethod::Ric) {
            CHECK(row.fold_adds == row.c * (row.l - 1));
        } else {
            CHECK(row.fold_adds == 0);
        }
    }
    // Within a power-of-two n, compressed-path multiplications grow with c.
    for (std::size_t n : {16UL, 64UL, 256UL}) {
        std::uint64_t prev = 0;
        for (const std::size_t c : compression_candidates(n, CompressionPolicy::PowersOfTwo)) {
            const auto mults = find_row(report, n, c, BenchMethod::Ric).complex_mults;
            CHECK(mults >= prev);
            prev = mults;
        }
    }
    CHECK(std::is_sorted(report.rows.begin(), report.rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::make_tuple(a.n, a.c, to_string(a.method)) < std::make_tuple(b.n, b.c, to_string(b.method));
    }));
}

TEST_CASE("count columns are identical across runs with a fixed seed") {
    auto cfg = count_only({32, 48}, CompressionPolicy::AllDivisors);
    cfg.seed = 99;
    CHECK(run_benchmark(cfg) == run_benchmark(cfg));
}

TEST_CASE("emit_report formats") {
    ric::testing::TempDir dir;
    BenchReport one;
    one.rows.push_back({8, 4, 2, BenchMethod::Ric, "radix2", 12, 4, 4, 1234.5, 9, 1.25e-16});

    const auto csv = render_report(one, ReportFormat::Csv);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
    const auto md = render_report(one, ReportFormat::Markdown);
    CHECK(std::count(md.begin(), md.end(), '\n') == 3);  // header, rule, one row
    CHECK(md.find("| 8 | 4 | 2 | ric | radix2 |") != std::string::npos);

    const auto report = run_benchmark(count_only({16, 12}, CompressionPolicy::AllDivisors));
    emit_report(report, dir / "r.csv", ReportFormat::Csv);
    CHECK(parse_report_csv(read_text_file(dir / "r.csv")) == report);

    emit_report(report, dir / "r.json", ReportFormat::Json);
    const auto doc = nlohmann::json::parse(read_text_file(dir / "r.json"));
    REQUIRE(doc.size() == report.rows.size());
    CHECK(doc[0]["n"] == report.rows[0].n);
    CHECK(doc[0]["method"] == std::string(to_string(report.rows[0].method)));

    CHECK_THROWS_AS(emit_report(report, "", ReportFormat::Csv), Error);
}
