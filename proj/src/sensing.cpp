#include "distilled/sensing.hpp"

#include <algorithm>
#include <string>

namespace distilled {

void PrecisionAllocation::validate() const
{
    require(steps >= 1, "allocation needs at least one step");
    require(budgets.size() == steps, "allocation budget count does not match step count");
    require(total_budget > 0.0, "total budget must be > 0");
    require((budgets.array() > 0.0).all(), "every step budget must be > 0");
    require(budgets.sum() <= total_budget * (1.0 + kBudgetSlack), "step budgets exceed the total budget");
    for (int j = 0; j + 2 < steps; ++j)
        require(budgets[j + 1] / budgets[j] > 0.5,
                "budget ratio R_" + std::to_string(j + 2) + "/R_" + std::to_string(j + 1) +
                    " must exceed 1/2");
}

int steps_k(Index p)
{
    require(p >= 2, "steps_k: p must be >= 2");
    const double c = std::ceil(std::log2(std::log(static_cast<double>(p))));
    return static_cast<int>(std::max(c, 0.0)) + 2;
}

PrecisionAllocation plan_allocation(Index p, double total_budget, double decay)
{
    require(total_budget > 0.0, "plan_allocation: total budget must be > 0");
    require(decay > 0.5 && decay <= 1.0, "plan_allocation: decay must lie in (1/2, 1]");
    const int k = steps_k(p);

    Eigen::VectorXd weights(k);
    for (int j = 0; j + 1 < k; ++j)
        weights[j] = std::pow(decay, j);
    weights[k - 1] = 1.0;

    PrecisionAllocation allocation;
    allocation.steps = k;
    allocation.total_budget = total_budget;
    allocation.budgets = weights * (total_budget / weights.sum());
    allocation.validate();
    return allocation;
}

PrecisionAllocation make_allocation(Eigen::VectorXd budgets, double total_budget)
{
    PrecisionAllocation allocation;
    allocation.steps = static_cast<int>(budgets.size());
    allocation.budgets = std::move(budgets);
    allocation.total_budget = total_budget;
    allocation.validate();
    return allocation;
}

IndexSet refine(const Observations& obs)
{
    IndexSet kept;
    kept.reserve(obs.indices.size() / 2 + 1);
    for (Index t = 0; t < obs.size(); ++t)
        if (obs.values[t] > 0.0)
            kept.push_back(obs.indices[static_cast<std::size_t>(t)]);
    return kept;
}

double DistillTrace::budget_spent() const
{
    double spent = 0.0;
    for (const auto& step : steps)
        spent += step.budget_spent();
    return spent;
}

Index DistillTrace::measurements() const
{
    Index count = 0;
    for (const auto& step : steps)
        count += step.obs.size();
    return count;
}

void check_trace(const DistillTrace& trace)
{
    if (static_cast<int>(trace.steps.size()) != trace.allocation.steps)
        throw InvariantError("trace step count differs from allocation");
    if (trace.steps.front().obs.size() != trace.p)
        throw InvariantError("first step must observe every coordinate");

    bool emptied = false;
    for (std::size_t j = 0; j < trace.steps.size(); ++j) {
        const auto& step = trace.steps[j];
        if (!std::is_sorted(step.obs.indices.begin(), step.obs.indices.end()))
            throw InvariantError("index set is not sorted");
        if (step.obs.values.size() != step.obs.size())
            throw InvariantError("observation count differs from index set size");
        if (emptied && (!step.obs.empty() || step.precision != 0.0))
            throw InvariantError("budget spent after the index set emptied");
        if (step.obs.empty())
            emptied = true;
        if (j > 0) {
            const auto& prev = trace.steps[j - 1].obs.indices;
            if (!std::includes(prev.begin(), prev.end(), step.obs.indices.begin(),
                               step.obs.indices.end()))
                throw InvariantError("index sets are not nested");
        }
    }
    const double total = trace.allocation.total_budget;
    if (trace.budget_spent() > total * (1.0 + kBudgetSlack))
        throw InvariantError("precision budget exceeded");
}

} // namespace distilled
