#include "ric/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace ric {

InfeasiblePlanError::InfeasiblePlanError(const std::string& message, std::optional<PlanProposal> best,
                                         double best_error)
    : Error(ErrorCode::Infeasible, message), best_(std::move(best)), best_error_(best_error) {}

namespace {

double bin_frequency(const RicPlan& plan, double sample_rate, std::size_t k) {
    // One rounding step, so exactly representable hits compare equal.
    return static_cast<double>(k * plan.l()) * sample_rate / static_cast<double>(plan.n());
}

BinAssignment make_assignment(const RicPlan& plan, double sample_rate, double target, std::size_t k) {
    const double achieved = bin_frequency(plan, sample_rate, k);
    const double rel = target == 0.0 ? 0.0 : std::abs(achieved - target) / std::abs(target);
    return {target, k, k * plan.l(), achieved, rel};
}

void validate(double sample_rate, std::span<const double> targets, const PlannerOptions& options) {
    if (!(sample_rate > 0.0) || !std::isfinite(sample_rate)) {
        throw Error(ErrorCode::Range, "sample rate must be positive and finite");
    }
    if (targets.empty()) {
        throw Error(ErrorCode::Range, "at least one target frequency is required");
    }
    if (options.max_n < 4) {
        throw Error(ErrorCode::Range, "max_n must be at least 4");
    }
    if (!(options.tol >= 0.0)) {
        throw Error(ErrorCode::Range, "tolerance must be non-negative");
    }
    const double nyquist = sample_rate / 2.0;
    for (const double t : targets) {
        if (!(t > 0.0 && t < nyquist)) {
            std::ostringstream msg;
            msg << "target " << t << " Hz outside (0, " << nyquist << ") Hz";
            throw Error(ErrorCode::Range, msg.str());
        }
    }
}

PlanProposal propose(const RicPlan& plan, double sample_rate, std::span<const double> targets) {
    PlanProposal proposal{plan, sample_rate, sample_rate / static_cast<double>(plan.n()), {}};
    proposal.assignments.reserve(targets.size());
    for (const double t : targets) {
        proposal.assignments.push_back(nearest_ric_bin(plan, sample_rate, t));
    }
    return proposal;
}

double worst_error(const PlanProposal& proposal) {
    double worst = 0.0;
    for (const auto& a : proposal.assignments) worst = std::max(worst, a.rel_error);
    return worst;
}

}  // namespace

BinAssignment nearest_ric_bin(const RicPlan& plan, double sample_rate, double target_hz) {
    const double cols = static_cast<double>(plan.c());
    const double estimate = std::floor(target_hz * cols / sample_rate);
    const double clamped = std::clamp(estimate, 0.0, cols - 1.0);
    const auto centre = static_cast<std::size_t>(clamped);

    const std::size_t lo = centre > 0 ? centre - 1 : 0;
    const std::size_t hi = std::min(centre + 2, plan.c() - 1);
    std::size_t best_k = lo;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t k = lo; k <= hi; ++k) {
        const double dist = std::abs(bin_frequency(plan, sample_rate, k) - target_hz);
        if (dist < best_dist) {  // strict: ties keep the lower bin
            best_dist = dist;
            best_k = k;
        }
    }
    return make_assignment(plan, sample_rate, target_hz, best_k);
}

PlanProposal plan_for_frequencies(double sample_rate, std::span<const double> targets,
                                  const PlannerOptions& options) {
    validate(sample_rate, targets, options);

    std::optional<PlanProposal> best;
    double best_err = std::numeric_limits<double>::infinity();

    // Candidates in (C, N) order, so the first feasible one is optimal.
    for (std::size_t c = 2; c <= options.max_n / 2; ++c) {
        for (std::size_t n = 2 * c; n <= options.max_n; n += c) {
            if (options.power_of_two_only && !is_power_of_two(n)) continue;
            PlanProposal candidate = propose(make_plan(n, c), sample_rate, targets);
            const double err = worst_error(candidate);
            if (err <= options.tol) {
                return candidate;
            }
            if (err < best_err) {
                best_err = err;
                best = std::move(candidate);
            }
        }
    }

    std::ostringstream msg;
    msg.precision(17);
    msg << "no plan with N <= " << options.max_n << " meets tolerance " << options.tol;
    if (best) {
        msg << "; best achievable relative error " << best_err << " with N=" << best->plan.n()
            << ", C=" << best->plan.c();
    }
    throw InfeasiblePlanError(msg.str(), std::move(best), best_err);
}

std::vector<BinAssignment> coverage_report(const PlanProposal& proposal, std::span<const double> extra_targets) {
    std::vector<BinAssignment> rows;
    rows.reserve(extra_targets.size());
    for (const double t : extra_targets) {
        rows.push_back(nearest_ric_bin(proposal.plan, proposal.sample_rate, t));
    }
    return rows;
}

}  // namespace ric
