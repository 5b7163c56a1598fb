#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ric/types.hpp"

namespace ric {

/// A target frequency matched to the RIC bin k*L of a plan.
struct BinAssignment {
    double target_hz;
    std::size_t k;
    std::size_t bin_index;  // k * L
    double achieved_hz;     // bin_index * sample_rate / N
    double rel_error;       // |achieved - target| / target, 0 when target is 0
};

struct PlanProposal {
    RicPlan plan;
    double sample_rate;
    double bin_width;  // sample_rate / N
    std::vector<BinAssignment> assignments;
};

struct PlannerOptions {
    std::size_t max_n = 4096;
    bool power_of_two_only = false;
    double tol = 0.0;
};

/// Raised when no plan within max_n meets the tolerance. Carries the plan
/// with the smallest worst-case error as a best-effort answer.
class InfeasiblePlanError : public Error {
public:
    InfeasiblePlanError(const std::string& message, std::optional<PlanProposal> best, double best_error);

    [[nodiscard]] const std::optional<PlanProposal>& best() const noexcept { return best_; }
    [[nodiscard]] double best_error() const noexcept { return best_error_; }

private:
    std::optional<PlanProposal> best_;
    double best_error_;
};

/// Nearest RIC bin of `plan` to `target_hz`; ties go to the lower bin.
BinAssignment nearest_ric_bin(const RicPlan& plan, double sample_rate, double target_hz);

/// Smallest-C plan (ties: smallest N) whose RIC bins cover every target
/// within `tol` relative error. Searches all valid (N, C) with N <= max_n.
///
/// Throws Error{Range} for a non-positive sample rate, max_n < 4, an empty
/// target list or a target outside (0, sample_rate/2); InfeasiblePlanError
/// when nothing qualifies.
PlanProposal plan_for_frequencies(double sample_rate, std::span<const double> targets,
                                  const PlannerOptions& options = {});

/// Nearest-bin lookup of further targets against an existing proposal.
std::vector<BinAssignment> coverage_report(const PlanProposal& proposal, std::span<const double> extra_targets);

}  // namespace ric
