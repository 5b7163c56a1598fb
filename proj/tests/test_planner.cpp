#include <doctest.h>

#include <random>

#include "planner_oracle.hpp"
#include "ric/planner.hpp"

using namespace ric;

TEST_CASE("three harmonics of 100 Hz at 800 Hz sampling") {
    const std::vector<double> targets{100, 200, 300};
    PlannerOptions opts;
    opts.max_n = 64;
    opts.power_of_two_only = true;
    const auto proposal = plan_for_frequencies(800.0, targets, opts);
    CHECK(proposal.plan.n() == 16);
    CHECK(proposal.plan.c() == 8);
    CHECK(proposal.plan.l() == 2);
    CHECK(proposal.bin_width == 50.0);
    REQUIRE(proposal.assignments.size() == 3);
    CHECK(proposal.assignments[0].bin_index == 2);
    CHECK(proposal.assignments[1].bin_index == 4);
    CHECK(proposal.assignments[2].bin_index == 6);
    for (const auto& a : proposal.assignments) {
        CHECK(a.rel_error == 0.0);
        CHECK(a.achieved_hz == a.target_hz);
    }

    const auto brute = ric::testing::brute_force_plan(800.0, targets, 64, true, 0.0);
    REQUIRE(brute);
    CHECK(brute->n == 16);
    CHECK(brute->c == 8);
}

TEST_CASE("a quarter-rate target needs C = 4") {
    const std::vector<double> targets{250.0};
    PlannerOptions opts;
    opts.max_n = 64;
    const auto proposal = plan_for_frequencies(1000.0, targets, opts);
    const auto brute = ric::testing::brute_force_plan(1000.0, targets, 64, false, 0.0);
    REQUIRE(brute);
    CHECK(proposal.plan.n() == brute->n);
    CHECK(proposal.plan.c() == brute->c);
    CHECK(proposal.plan.n() == 8);
    CHECK(proposal.plan.c() == 4);
    CHECK(proposal.assignments[0].bin_index == 2);
}

TEST_CASE("infeasible targets report the best effort") {
    const std::vector<double> targets{1000.0 / std::sqrt(2.0) / 3.0};
    PlannerOptions opts;
    opts.max_n = 64;
    try {
        (void)plan_for_frequencies(1000.0, targets, opts);
        FAIL("expected InfeasiblePlanError");
    } catch (const InfeasiblePlanError& e) {
        CHECK(e.code() == ErrorCode::Infeasible);
        REQUIRE(e.best());
        CHECK(e.best_error() > 0.0);
        CHECK(e.best_error() < 0.1);
        CHECK(std::string(e.what()).find("best achievable") != std::string::npos);
    }
}

TEST_CASE("planner input validation") {
    const std::vector<double> none;
    const std::vector<double> high{600.0};
    const std::vector<double> ok{100.0};
    PlannerOptions opts;
    CHECK_THROWS_AS(plan_for_frequencies(1000.0, none, opts), Error);
    CHECK_THROWS_AS(plan_for_frequencies(1000.0, high, opts), Error);
    CHECK_THROWS_AS(plan_for_frequencies(0.0, ok, opts), Error);
    opts.max_n = 3;
    CHECK_THROWS_AS(plan_for_frequencies(1000.0, ok, opts), Error);
}

TEST_CASE("proposal invariants and optimality against exhaustive search") {
    std::mt19937_64 rng(77);
    const std::vector<double> rates{800.0, 1000.0, 44100.0, 48000.0};
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const double fs = rates[rng() % rates.size()];
        const bool pow2 = (rng() % 2) == 0;
        const std::size_t max_n = std::size_t{32} << (rng() % 3);
        const double tol = (rng() % 3 == 0) ? 0.0 : 0.02;
        const std::size_t base_c = 2 + rng() % 12;
        std::vector<double> targets;
        const std::size_t count = 1 + rng() % 3;
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t k = 1 + rng() % std::max<std::size_t>(1, base_c / 2 - 1);
            double t = static_cast<double>(k) * fs / static_cast<double>(base_c);
            if (t >= fs / 2) t = fs / 4;
            targets.push_back(t);
        }

        PlannerOptions opts{max_n, pow2, tol};
        const auto brute = ric::testing::brute_force_plan(fs, targets, max_n, pow2, tol);
        try {
            const auto proposal = plan_for_frequencies(fs, targets, opts);
            REQUIRE(brute);
            CHECK(proposal.plan.c() == brute->c);
            CHECK(proposal.plan.n() == brute->n);
            for (const auto& a : proposal.assignments) {
                CHECK(a.bin_index % proposal.plan.l() == 0);
                CHECK(a.bin_index < proposal.plan.n());
                CHECK(a.rel_error <= tol);
            }
            // Identical inputs give identical proposals.
            const auto again = plan_for_frequencies(fs, targets, opts);
            CHECK(again.plan == proposal.plan);
            ++checked;
        } catch (const InfeasiblePlanError&) {
            CHECK_FALSE(brute);
        }
    }
    CHECK(checked > 10);
}

TEST_CASE("coverage_report") {
    const std::vector<double> targets{100, 200, 300};
    PlannerOptions opts;
    opts.max_n = 64;
    const auto proposal = plan_for_frequencies(800.0, targets, opts);

    const std::vector<double> same{200.0};
    const auto rows = coverage_report(proposal, same);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].bin_index == proposal.assignments[1].bin_index);
    CHECK(rows[0].achieved_hz == proposal.assignments[1].achieved_hz);
    CHECK(rows[0].rel_error == proposal.assignments[1].rel_error);

    // RIC bins sit every 100 Hz; 150 Hz is a tie and goes to the lower bin.
    const std::vector<double> midway{150.0};
    CHECK(coverage_report(proposal, midway)[0].achieved_hz == 100.0);

    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> dist(0.0, 800.0);
    std::vector<double> random_targets(200);
    for (auto& t : random_targets) t = dist(rng);
    const auto random_rows = coverage_report(proposal, random_targets);
    for (std::size_t i = 0; i < random_targets.size(); ++i) {
        const auto k = ric::testing::brute_nearest_k(proposal.plan.n(), proposal.plan.c(), 800.0, random_targets[i]);
        CHECK(random_rows[i].k == k);
    }
}
