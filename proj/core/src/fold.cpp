#include "ric/fold.hpp"

#include <string>

namespace ric {

namespace {

std::vector<Complex> column_sums(const ComplexSequence& x, const RicPlan& plan, OpCounter& counter) {
    if (x.size() != plan.n()) {
        throw Error(ErrorCode::LengthMismatch, "input has " + std::to_string(x.size()) +
                                                   " samples, plan expects " + std::to_string(plan.n()));
    }
    const std::size_t columns = plan.c();
    const std::size_t rows = plan.l();
    const auto in = x.samples();

    // Row 0 seeds the accumulators; each later row is one addition per column.
    std::vector<Complex> out(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(columns));
    for (std::size_t row = 1; row < rows; ++row) {
        const Complex* src = in.data() + row * columns;
        for (std::size_t col = 0; col < columns; ++col) {
            out[col] += src[col];
        }
    }
    counter.complex_adds += columns * (rows - 1);
    return out;
}

}  // namespace

FoldedSequence::FoldedSequence(ComplexSequence samples, const RicPlan& plan)
    : samples_(std::move(samples)), plan_(plan) {
    if (samples_.size() != plan_.c()) {
        throw Error(ErrorCode::LengthMismatch, "folded sequence has " + std::to_string(samples_.size()) +
                                                   " samples, plan expects " + std::to_string(plan_.c()));
    }
}

FoldedSequence fold(const ComplexSequence& x, const RicPlan& plan, OpCounter& counter) {
    return FoldedSequence(ComplexSequence(column_sums(x, plan, counter)), plan);
}

FoldedSequence fold(const ComplexSequence& x, const RicPlan& plan) {
    OpCounter scratch;
    return fold(x, plan, scratch);
}

FoldedSequence fold_spectrum(const ComplexSequence& spectrum, const RicPlan& plan, OpCounter& counter) {
    return FoldedSequence(ComplexSequence(column_sums(spectrum, plan, counter)), plan);
}

FoldedSequence fold_spectrum(const ComplexSequence& spectrum, const RicPlan& plan) {
    OpCounter scratch;
    return fold_spectrum(spectrum, plan, scratch);
}

}  // namespace ric
