#include "ric/types.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace ric {

namespace {

void require_finite(const std::vector<Complex>& samples) {
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!std::isfinite(samples[i].real()) || !std::isfinite(samples[i].imag())) {
            throw Error(ErrorCode::NonFinite, "sample " + std::to_string(i) + " is not finite");
        }
    }
}

}  // namespace

ComplexSequence::ComplexSequence(std::vector<Complex> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) {
        throw Error(ErrorCode::Empty, "a complex sequence needs at least one sample");
    }
    require_finite(samples_);
}

ComplexSequence::ComplexSequence(std::initializer_list<Complex> samples)
    : ComplexSequence(std::vector<Complex>(samples)) {}

ComplexSequence ComplexSequence::zeros(std::size_t length) {
    return ComplexSequence(std::vector<Complex>(length));
}

unsigned log2_exact(std::size_t v) noexcept {
    return static_cast<unsigned>(std::countr_zero(v));
}

RicPlan::RicPlan(std::size_t n, std::size_t c) : n_(n), c_(c), l_(n / c) {
    if (is_power_of_two(n) && is_power_of_two(c)) {
        q_ = log2_exact(n);
        p_ = log2_exact(c);
    }
}

RicPlan make_plan(std::size_t n, std::size_t c) {
    if (n < 4) {
        throw Error(ErrorCode::Range, "n must be at least 4, got " + std::to_string(n));
    }
    if (c < 2 || c > n / 2) {
        throw Error(ErrorCode::Range,
                    "c must lie in [2, " + std::to_string(n / 2) + "], got " + std::to_string(c));
    }
    if (n % c != 0) {
        throw Error(ErrorCode::NonDivisor, std::to_string(c) + " does not divide " + std::to_string(n));
    }
    return RicPlan(n, c);
}

RicPlan plan_from_exponents(unsigned q, unsigned p) {
    constexpr unsigned max_exponent = std::numeric_limits<std::size_t>::digits - 1;
    if (q < 2 || q > max_exponent) {
        throw Error(ErrorCode::Range, "q must lie in [2, " + std::to_string(max_exponent) + "], got " +
                                          std::to_string(q));
    }
    if (p < 1 || p > q - 1) {
        throw Error(ErrorCode::Range,
                    "p must lie in [1, " + std::to_string(q - 1) + "], got " + std::to_string(p));
    }
    return make_plan(std::size_t{1} << q, std::size_t{1} << p);
}

std::size_t rect_to_flat(RectIndex idx, const RicPlan& plan) {
    if (idx.row >= plan.l() || idx.column >= plan.c()) {
        throw Error(ErrorCode::Range, "rectangular index (" + std::to_string(idx.row) + ", " +
                                          std::to_string(idx.column) + ") outside " +
                                          std::to_string(plan.l()) + "x" + std::to_string(plan.c()));
    }
    return idx.row * plan.c() + idx.column;
}

RectIndex flat_to_rect(std::size_t flat, const RicPlan& plan) {
    if (flat >= plan.n()) {
        throw Error(ErrorCode::Range,
                    "flat index " + std::to_string(flat) + " outside [0, " + std::to_string(plan.n()) + ")");
    }
    return {flat / plan.c(), flat % plan.c()};
}

std::string_view to_string(Direction dir) noexcept {
    return dir == Direction::Forward ? "forward" : "inverse";
}

std::string_view to_string(Normalization mode) noexcept {
    switch (mode) {
        case Normalization::None: return "none";
        case Normalization::ReciprocalN: return "recip-n";
        case Normalization::Unitary: return "unitary";
    }
    return "none";
}

std::optional<Direction> parse_direction(std::string_view text) noexcept {
    if (text == "forward") return Direction::Forward;
    if (text == "inverse") return Direction::Inverse;
    return std::nullopt;
}

std::optional<Normalization> parse_normalization(std::string_view text) noexcept {
    if (text == "none") return Normalization::None;
    if (text == "recip-n") return Normalization::ReciprocalN;
    if (text == "unitary") return Normalization::Unitary;
    return std::nullopt;
}

double engine_scale(Normalization mode, Direction dir, std::size_t length) noexcept {
    switch (mode) {
        case Normalization::None: return 1.0;
        case Normalization::ReciprocalN:
            return dir == Direction::Inverse ? 1.0 / static_cast<double>(length) : 1.0;
        case Normalization::Unitary: return 1.0 / std::sqrt(static_cast<double>(length));
    }
    return 1.0;
}

double correction_factor(Normalization mode, Direction dir, const RicPlan& plan) noexcept {
    // The engine scales by a function of C; K restores the N-point scaling.
    return engine_scale(mode, dir, plan.l());
}

}  // namespace ric
