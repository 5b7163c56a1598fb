#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "ric/fold.hpp"
#include "ric/io.hpp"

using namespace ric;
using ric::testing::naive_fold;

TEST_CASE("fold reproduces the worked example exactly") {
    const ComplexSequence x(ric::testing::worked_example_signal());
    OpCounter counter;
    const auto folded = fold(x, make_plan(8, 4), counter);
    const std::vector<Complex> expected{{-4, -4}, {-4, 8}, {10, -4}, {4, 4}};
    CHECK(folded.samples().vector() == expected);
    CHECK(folded.source_n() == 8);
    CHECK(counter.complex_adds == 4);
    CHECK(counter.complex_mults == 0);
    // Each compressed sample costs L-1 = 1 addition.
    CHECK(counter.complex_adds / folded.size() == 1);
}

TEST_CASE("fold trivial inputs") {
    const auto plan = make_plan(16, 4);
    CHECK(fold(ComplexSequence::zeros(16), plan).samples() == ComplexSequence::zeros(4));

    std::vector<Complex> impulse(16);
    impulse[0] = 1.0;
    CHECK(fold(ComplexSequence(impulse), plan).samples().vector() == std::vector<Complex>{1.0, 0.0, 0.0, 0.0});
}

TEST_CASE("fold_spectrum") {
    const auto plan = make_plan(8, 4);
    const ComplexSequence ones(std::vector<Complex>(8, Complex{1.0, 0.0}));
    CHECK(fold_spectrum(ones, plan).samples().vector() == std::vector<Complex>(4, Complex{2.0, 0.0}));
    CHECK(fold_spectrum(ComplexSequence::zeros(8), plan).samples() == ComplexSequence::zeros(4));

    const auto spectrum = random_signal(8, 7);
    CHECK(fold_spectrum(spectrum, plan).samples().vector() == naive_fold(spectrum.vector(), 4));
}

TEST_CASE("fold rejects a length that does not match the plan") {
    OpCounter counter;
    try {
        (void)fold(ComplexSequence::zeros(7), make_plan(8, 4), counter);
        FAIL("expected LengthMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LengthMismatch);
    }
    CHECK(counter == OpCounter{});
}

TEST_CASE("fold matches a double-loop oracle and counts C*(L-1) additions") {
    std::uint64_t seed = 11;
    for (std::size_t n : {4UL, 8UL, 12UL, 24UL, 36UL, 64UL, 96UL, 1024UL}) {
        for (std::size_t c = 2; c <= n / 2; ++c) {
            if (n % c != 0) continue;
            const auto plan = make_plan(n, c);
            const auto x = random_signal(n, ++seed);
            OpCounter counter{5, 7};
            const auto folded = fold(x, plan, counter);
            // Ascending-l summation matches the oracle bit for bit.
            CHECK(folded.samples().vector() == naive_fold(x.vector(), c));
            CHECK(counter.complex_adds == 5 + c * (plan.l() - 1));
            CHECK(counter.complex_mults == 7);
        }
    }
}

TEST_CASE("fold is linear") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    const auto plan = make_plan(256, 16);
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = random_signal(256, 100 + trial);
        const auto y = random_signal(256, 200 + trial);
        const Complex a{coef(rng), coef(rng)};
        const Complex b{coef(rng), coef(rng)};
        std::vector<Complex> combo(256);
        for (std::size_t i = 0; i < 256; ++i) combo[i] = a * x[i] + b * y[i];

        const auto lhs = fold(ComplexSequence(combo), plan).samples();
        const auto fx = fold(x, plan).samples();
        const auto fy = fold(y, plan).samples();
        for (std::size_t c = 0; c < 16; ++c) {
            const Complex rhs = a * fx[c] + b * fy[c];
            CHECK(std::abs(lhs[c].real() - rhs.real()) <= 1e-12);
            CHECK(std::abs(lhs[c].imag() - rhs.imag()) <= 1e-12);
        }
    }
}

TEST_CASE("folding composes over nested compressed lengths") {
    // Integer-valued samples keep every partial sum exact.
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> dist(-1000, 1000);
    std::vector<Complex> raw(96);
    for (auto& v : raw) v = {static_cast<double>(dist(rng)), static_cast<double>(dist(rng))};
    const ComplexSequence x(raw);

    for (const auto [c, c2] : {std::pair<std::size_t, std::size_t>{48, 12}, {24, 6}, {12, 2}, {32, 4}, {48, 2}}) {
        const auto twice = fold(fold(x, make_plan(96, c)).samples(), make_plan(c, c2)).samples();
        const auto once = fold(x, make_plan(96, c2)).samples();
        CHECK(twice == once);
    }
}

TEST_CASE("a tone on a RIC bin concentrates into one folded exponential") {
    const auto plan = make_plan(64, 8);
    const double n = 64.0;
    for (std::size_t m = 0; m < plan.c(); ++m) {
        std::vector<Complex> x(64);
        for (std::size_t i = 0; i < 64; ++i) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((m * plan.l() * i) % 64) / n;
            x[i] = std::polar(1.0, angle);
        }
        const auto folded = fold(ComplexSequence(x), plan).samples();
        for (std::size_t c = 0; c < plan.c(); ++c) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((m * c) % 8) / 8.0;
            const Complex expected = static_cast<double>(plan.l()) * std::polar(1.0, angle);
            CHECK(std::abs(folded[c] - expected) <= 1e-10 * std::abs(expected));
        }
    }
}
