#pragma once

#include <vector>

#include "ric/engine.hpp"
#include "ric/fold.hpp"
#include "ric/types.hpp"

namespace ric {

/// One coefficient of the compressed transform, tagged with its position
/// in the N-point transform.
struct RicEntry {
    std::size_t index;  // k * L
    Complex value;

    friend bool operator==(const RicEntry&, const RicEntry&) = default;
};

/// The C coefficients X_{kL} (or x_{nL} on the inverse path) of an N-point
/// transform.
class RicSpectrum {
public:
    /// `values[k]` becomes the entry at index k*L. Throws
    /// Error{LengthMismatch} unless values.size() == plan.c().
    RicSpectrum(const RicPlan& plan, Normalization mode, Direction dir, std::vector<Complex> values);

    [[nodiscard]] const std::vector<RicEntry>& entries() const noexcept { return entries_; }
    [[nodiscard]] const RicPlan& plan() const noexcept { return plan_; }
    [[nodiscard]] Normalization mode() const noexcept { return mode_; }
    [[nodiscard]] Direction direction() const noexcept { return direction_; }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] const RicEntry& operator[](std::size_t k) const { return entries_[k]; }
    [[nodiscard]] std::vector<Complex> values() const;

private:
    RicPlan plan_;
    Normalization mode_;
    Direction direction_;
    std::vector<RicEntry> entries_;
};

/// {0, L, 2L, ..., (C-1)L}.
std::vector<std::size_t> ric_index_set(const RicPlan& plan);

/// X_{kL} for k in [0, C): fold x to C points, run a C-point forward
/// transform, scale by K. Under Unitary, K = 1/sqrt(L) so that the result
/// equals the 1/sqrt(N)-normalized N-point DFT.
RicSpectrum ric_dft(const ComplexSequence& x, const RicPlan& plan, Normalization mode, OpCounter& counter);
RicSpectrum ric_dft(const ComplexSequence& x, const RicPlan& plan, Normalization mode = Normalization::None);

/// x_{nL} for n in [0, C) from an N-point spectrum: K = 1/L for
/// ReciprocalN, 1/sqrt(L) for Unitary, 1 for None.
RicSpectrum ric_idft(const ComplexSequence& spectrum, const RicPlan& plan, Normalization mode, OpCounter& counter);
RicSpectrum ric_idft(const ComplexSequence& spectrum, const RicPlan& plan,
                     Normalization mode = Normalization::ReciprocalN);

/// Dispatches to ric_dft / ric_idft.
RicSpectrum ric_transform(const ComplexSequence& x, const RicPlan& plan, Normalization mode, Direction dir,
                          OpCounter& counter);

struct VerificationReport {
    double max_abs_error = 0.0;
    double max_rel_error = 0.0;
    bool pass = false;
    double tolerance = 0.0;
};

struct VerifyOptions {
    double tolerance = 1e-9;
    /// Corruption injected into the compressed-path values before the
    /// comparison, scaled by max(1, |oracle|_inf). Zero disables it.
    double perturbation = 0.0;
};

/// Runs the compressed path and a full-length direct evaluation at the RIC
/// indices and compares them. Relative error is the l-inf error divided by
/// the l-inf norm of the oracle (absolute error when the oracle is zero).
VerificationReport verify_against_oracle(const ComplexSequence& x, const RicPlan& plan, Normalization mode,
                                         Direction dir, const VerifyOptions& options = {});

}  // namespace ric
