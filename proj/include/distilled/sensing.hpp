#ifndef DISTILLED_SENSING_HPP
#define DISTILLED_SENSING_HPP

#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Core>

#include "distilled/error.hpp"
#include "distilled/random.hpp"
#include "distilled/signal_model.hpp"

namespace distilled {

/// Relative slack allowed when comparing spent precision against the budget.
inline constexpr double kBudgetSlack = 1e-9;

/// Per-step precision budgets R_1..R_k and the total they must respect.
struct PrecisionAllocation {
    int steps = 0;
    Eigen::VectorXd budgets;
    double total_budget = 0.0;

    /// Throws ParameterError unless every budget is positive, the sum fits the
    /// total, and R_{j+1}/R_j > 1/2 for all but the last transition.
    void validate() const;

    double first() const { return budgets[0]; }
    double last() const { return budgets[steps - 1]; }
};

/// max(ceil(log2(ln p)), 0) + 2.
int steps_k(Index p);

/// Geometric schedule R_j = decay^(j-1) R_1 (j < k), R_k = R_1, scaled so the
/// budgets sum to total_budget.
PrecisionAllocation plan_allocation(Index p, double total_budget, double decay = 0.75);

/// Wraps explicit budgets and validates them.
PrecisionAllocation make_allocation(Eigen::VectorXd budgets, double total_budget);

/// Observations taken on a set of coordinates; values[t] belongs to indices[t].
struct Observations {
    IndexSet indices;
    Eigen::VectorXd values;

    Index size() const noexcept { return static_cast<Index>(indices.size()); }
    bool empty() const noexcept { return indices.empty(); }
};

/// y_i = x_i + gamma^{-1/2} w_i with gamma = step_budget / |index_set|.
/// Noise is drawn in ascending index order.
template <NoiseSource N>
Observations observe(const SparseSignal& signal, const IndexSet& index_set, double step_budget,
                     N& noise)
{
    require(!index_set.empty(), "observe: index set is empty");
    require(step_budget > 0.0, "observe: step budget must be > 0");
    const double precision = step_budget / static_cast<double>(index_set.size());
    const double scale = 1.0 / std::sqrt(precision);

    Observations obs{index_set, Eigen::VectorXd(static_cast<Index>(index_set.size()))};
    for (Index t = 0; t < obs.size(); ++t)
        obs.values[t] = signal.values[index_set[static_cast<std::size_t>(t)]] + scale * noise();
    return obs;
}

/// Keeps the coordinates whose observation is strictly positive.
IndexSet refine(const Observations& obs);

struct DistillStep {
    Observations obs;
    double precision = 0.0; ///< common precision of every observation in the step

    double budget_spent() const { return precision * static_cast<double>(obs.size()); }
};

struct DistillTrace {
    Index p = 0;
    PrecisionAllocation allocation;
    std::vector<DistillStep> steps;

    const IndexSet& index_set(int step) const { return steps[static_cast<std::size_t>(step)].obs.indices; }
    const Observations& final_observations() const { return steps.back().obs; }

    double budget_spent() const;
    /// Total number of scalar measurements, sum_j |I_j|.
    Index measurements() const;
};

/// Throws InvariantError if the trace breaks nesting, budget, or
/// empty-tail rules.
void check_trace(const DistillTrace& trace);

template <NoiseSource N>
DistillTrace run_distilled_sensing(const SparseSignal& signal, const PrecisionAllocation& allocation,
                                   N& noise)
{
    allocation.validate();
    require(allocation.steps >= 1, "run_distilled_sensing: need at least one step");

    DistillTrace trace;
    trace.p = signal.size();
    trace.allocation = allocation;
    trace.steps.reserve(static_cast<std::size_t>(allocation.steps));

    IndexSet current(static_cast<std::size_t>(signal.size()));
    std::iota(current.begin(), current.end(), Index{0});

    for (int j = 0; j < allocation.steps; ++j) {
        DistillStep step;
        if (current.empty()) {
            // nothing left to measure; the step's budget goes unspent
            trace.steps.push_back(std::move(step));
            continue;
        }
        const double budget = allocation.budgets[j];
        step.precision = budget / static_cast<double>(current.size());
        step.obs = observe(signal, current, budget, noise);
        if (j + 1 < allocation.steps)
            current = refine(step.obs);
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

/// Single unit-precision observation of every coordinate.
struct NonadaptiveRun {
    Eigen::VectorXd observations;
    double budget_spent = 0.0;

    Index measurements() const noexcept { return observations.size(); }
};

template <NoiseSource N>
NonadaptiveRun run_nonadaptive(const SparseSignal& signal, N& noise)
{
    NonadaptiveRun run;
    run.observations.resize(signal.size());
    for (Index i = 0; i < signal.size(); ++i)
        run.observations[i] = signal.values[i] + noise();
    run.budget_spent = static_cast<double>(signal.size());
    return run;
}

} // namespace distilled

#endif // DISTILLED_SENSING_HPP
