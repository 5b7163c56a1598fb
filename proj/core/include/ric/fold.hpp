#pragma once

#include "ric/types.hpp"

namespace ric {

/// C-point column sums of an N-point sequence laid out as L rows of C.
class FoldedSequence {
public:
    FoldedSequence(ComplexSequence samples, const RicPlan& plan);

    [[nodiscard]] const ComplexSequence& samples() const noexcept { return samples_; }
    [[nodiscard]] const RicPlan& plan() const noexcept { return plan_; }
    [[nodiscard]] std::size_t source_n() const noexcept { return plan_.n(); }
    [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }

private:
    ComplexSequence samples_;
    RicPlan plan_;
};

/// out[c] = sum over l of x[l*C + c], summed in ascending l. Costs exactly
/// C*(L-1) complex additions and no multiplications.
/// Throws Error{LengthMismatch} if x.size() != plan.n().
FoldedSequence fold(const ComplexSequence& x, const RicPlan& plan, OpCounter& counter);
FoldedSequence fold(const ComplexSequence& x, const RicPlan& plan);

/// Same kernel as fold(), applied to a spectrum on the inverse path.
FoldedSequence fold_spectrum(const ComplexSequence& spectrum, const RicPlan& plan, OpCounter& counter);
FoldedSequence fold_spectrum(const ComplexSequence& spectrum, const RicPlan& plan);

}  // namespace ric
