#ifndef DISTILLED_ESTIMATORS_HPP
#define DISTILLED_ESTIMATORS_HPP

#include <optional>

#include <Eigen/Core>

#include "distilled/error.hpp"
#include "distilled/sensing.hpp"
#include "distilled/signal_model.hpp"

namespace distilled {

struct SupportEstimate {
    IndexSet indices;
    double threshold = 0.0;

    bool empty() const noexcept { return indices.empty(); }
};

/// Coordinate-wise thresholding over a dense observation vector:
/// {i : y_i >= tau}, tau > 0.
template <typename Derived>
SupportEstimate threshold_support(const Eigen::DenseBase<Derived>& y, double tau)
{
    require(tau > 0.0, "threshold_support: tau must be > 0");
    SupportEstimate estimate{{}, tau};
    for (Index i = 0; i < y.size(); ++i)
        if (y[i] >= tau)
            estimate.indices.push_back(i);
    return estimate;
}

/// Same rule over observations restricted to a subset of coordinates.
SupportEstimate threshold_support(const Observations& obs, double tau);

/// {i : y_i > tau}; the rule applied to the last distillation step.
SupportEstimate strict_threshold_support(const Observations& obs, double tau);

/// sqrt(2 / c_k), c_k = R_k / p.
double ds_threshold(const PrecisionAllocation& allocation, Index p);

/// Strict threshold sqrt(2/c_k) applied to the final step's observations.
SupportEstimate ds_support_estimate(const DistillTrace& trace);

/// True when the distilled support estimate is nonempty.
bool detect(const DistillTrace& trace);

/// sqrt(2 alpha ln p) for beta < alpha < r; alpha defaults to (beta + r) / 2.
double nonadaptive_threshold(Index p, double r, double beta, std::optional<double> alpha = {});

} // namespace distilled

#endif // DISTILLED_ESTIMATORS_HPP
