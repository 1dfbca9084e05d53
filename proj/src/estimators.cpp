#include "distilled/estimators.hpp"

#include <cmath>

namespace distilled {

namespace {

template <typename Keep>
SupportEstimate select(const Observations& obs, double tau, Keep keep)
{
    SupportEstimate estimate{{}, tau};
    for (Index t = 0; t < obs.size(); ++t)
        if (keep(obs.values[t]))
            estimate.indices.push_back(obs.indices[static_cast<std::size_t>(t)]);
    return estimate;
}

} // namespace

SupportEstimate threshold_support(const Observations& obs, double tau)
{
    require(tau > 0.0, "threshold_support: tau must be > 0");
    return select(obs, tau, [tau](double y) { return y >= tau; });
}

SupportEstimate strict_threshold_support(const Observations& obs, double tau)
{
    return select(obs, tau, [tau](double y) { return y > tau; });
}

double ds_threshold(const PrecisionAllocation& allocation, Index p)
{
    require(p >= 1, "ds_threshold: p must be >= 1");
    const double ck = allocation.last() / static_cast<double>(p);
    return std::sqrt(2.0 / ck);
}

SupportEstimate ds_support_estimate(const DistillTrace& trace)
{
    const double tau = ds_threshold(trace.allocation, trace.p);
    return strict_threshold_support(trace.final_observations(), tau);
}

bool detect(const DistillTrace& trace)
{
    return !ds_support_estimate(trace).empty();
}

double nonadaptive_threshold(Index p, double r, double beta, std::optional<double> alpha)
{
    require(p >= 2, "nonadaptive_threshold: p must be >= 2");
    require(beta > 0.0 && beta < 1.0, "nonadaptive_threshold: beta must lie in (0, 1)");
    require(r > beta, "nonadaptive_threshold: r <= beta, support is not recoverable by thresholding");
    const double a = alpha.value_or(0.5 * (beta + r));
    require(a > beta && a < r, "nonadaptive_threshold: alpha must lie strictly between beta and r");
    return std::sqrt(2.0 * a * std::log(static_cast<double>(p)));
}

} // namespace distilled
