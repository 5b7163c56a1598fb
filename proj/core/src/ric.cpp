#include "ric/ric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ric {

RicSpectrum::RicSpectrum(const RicPlan& plan, Normalization mode, Direction dir, std::vector<Complex> values)
    : plan_(plan), mode_(mode), direction_(dir) {
    if (values.size() != plan.c()) {
        throw Error(ErrorCode::LengthMismatch, "spectrum has " + std::to_string(values.size()) +
                                                   " values, plan expects " + std::to_string(plan.c()));
    }
    entries_.reserve(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        entries_.push_back({k * plan.l(), values[k]});
    }
}

std::vector<Complex> RicSpectrum::values() const {
    std::vector<Complex> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.value);
    return out;
}

std::vector<std::size_t> ric_index_set(const RicPlan& plan) {
    std::vector<std::size_t> indices(plan.c());
    for (std::size_t k = 0; k < plan.c(); ++k) indices[k] = k * plan.l();
    return indices;
}

namespace {

RicSpectrum run_pipeline(const FoldedSequence& folded, Normalization mode, Direction dir, OpCounter& counter) {
    const RicPlan& plan = folded.plan();
    std::vector<Complex> values = transform(folded.samples(), dir, mode, counter).vector();
    const double k = correction_factor(mode, dir, plan);
    if (k != 1.0) {
        for (auto& v : values) v *= k;
    }
    return RicSpectrum(plan, mode, dir, std::move(values));
}

}  // namespace

RicSpectrum ric_dft(const ComplexSequence& x, const RicPlan& plan, Normalization mode, OpCounter& counter) {
    return run_pipeline(fold(x, plan, counter), mode, Direction::Forward, counter);
}

RicSpectrum ric_dft(const ComplexSequence& x, const RicPlan& plan, Normalization mode) {
    OpCounter scratch;
    return ric_dft(x, plan, mode, scratch);
}

RicSpectrum ric_idft(const ComplexSequence& spectrum, const RicPlan& plan, Normalization mode, OpCounter& counter) {
    return run_pipeline(fold_spectrum(spectrum, plan, counter), mode, Direction::Inverse, counter);
}

RicSpectrum ric_idft(const ComplexSequence& spectrum, const RicPlan& plan, Normalization mode) {
    OpCounter scratch;
    return ric_idft(spectrum, plan, mode, scratch);
}

RicSpectrum ric_transform(const ComplexSequence& x, const RicPlan& plan, Normalization mode, Direction dir,
                          OpCounter& counter) {
    return dir == Direction::Forward ? ric_dft(x, plan, mode, counter) : ric_idft(x, plan, mode, counter);
}

VerificationReport verify_against_oracle(const ComplexSequence& x, const RicPlan& plan, Normalization mode,
                                         Direction dir, const VerifyOptions& options) {
    OpCounter counter;
    std::vector<Complex> fast = ric_transform(x, plan, mode, dir, counter).values();
    const auto indices = ric_index_set(plan);
    const std::vector<Complex> oracle = dft_direct_at(x, indices, dir, mode);

    double oracle_norm = 0.0;
    for (const auto& v : oracle) oracle_norm = std::max(oracle_norm, std::abs(v));

    if (options.perturbation != 0.0) {
        const double shift = options.perturbation * std::max(1.0, oracle_norm);
        for (auto& v : fast) v += shift;
    }

    VerificationReport report;
    report.tolerance = options.tolerance;
    for (std::size_t k = 0; k < fast.size(); ++k) {
        report.max_abs_error = std::max(report.max_abs_error, std::abs(fast[k] - oracle[k]));
    }
    report.max_rel_error = oracle_norm > 0.0 ? report.max_abs_error / oracle_norm : report.max_abs_error;
    report.pass = report.max_rel_error <= options.tolerance;
    return report;
}

}  // namespace ric
