#ifndef DISTILLED_METRICS_HPP
#define DISTILLED_METRICS_HPP

#include <span>
#include <vector>

#include <Eigen/Core>

#include "distilled/estimators.hpp"
#include "distilled/sensing.hpp"
#include "distilled/signal_model.hpp"

namespace distilled {

/// |estimate \ truth| / |estimate|; 0 for an empty estimate.
double fdp(const IndexSet& estimate, const IndexSet& truth);
/// |truth \ estimate| / |truth|; 0 for an empty truth.
double ndp(const IndexSet& estimate, const IndexSet& truth);

inline double fdp(const SupportEstimate& estimate, const SparseSignal& truth)
{
    return fdp(estimate.indices, truth.support);
}
inline double ndp(const SupportEstimate& estimate, const SparseSignal& truth)
{
    return ndp(estimate.indices, truth.support);
}

struct TrialMetrics {
    double fdp = 0.0;
    double ndp = 0.0;
    bool detected = false;
    Index measurements_used = 0;
    double budget_spent = 0.0;
    // set when fdp / ndp fell back to the 0/0 := 0 convention
    bool empty_estimate = false;
    bool empty_support = false;
};

TrialMetrics evaluate(const SupportEstimate& estimate, const SparseSignal& truth,
                      Index measurements_used, double budget_spent);

struct RateSummary {
    double fdr = 0.0;
    double ndr = 0.0;
    double detection_rate = 0.0;
    std::size_t trials = 0;
};

/// Arithmetic means over trials; throws on an empty list.
RateSummary aggregate(std::span<const TrialMetrics> trials);

struct OperatingPoint {
    double fdp = 0.0;
    double ndp = 0.0;
    Index discoveries = 0;
    Index true_discoveries = 0;
};

/// All thresholded outcomes of one set of observations, answerable in
/// O(log n) per threshold. Values are kept sorted ascending together with the
/// number of signal coordinates at or above each position.
class OperatingCurve {
public:
    OperatingCurve() = default;

    /// values[t] is labelled as signal when is_signal[t] != 0; total_signal is
    /// |S|, which may exceed the signal count among the values.
    OperatingCurve(const Eigen::Ref<const Eigen::VectorXd>& values, std::span<const char> is_signal,
                   Index total_signal);

    static OperatingCurve from_observations(const Observations& obs, const SparseSignal& truth);
    static OperatingCurve from_dense(const Eigen::Ref<const Eigen::VectorXd>& y, const SparseSignal& truth);

    /// strict: count y > tau; otherwise y >= tau.
    OperatingPoint at(double tau, bool strict) const;

    /// Cut minimizing max(FDP, NDP) over every achievable threshold, the
    /// empty estimate included.
    OperatingPoint best_cut() const;
    double best_max_error() const;

    Index size() const noexcept { return static_cast<Index>(sorted_.size()); }
    Index total_signal() const noexcept { return total_signal_; }
    double min_value() const;
    double max_value() const;

private:
    OperatingPoint point(std::size_t first_kept) const;

    std::vector<double> sorted_;
    std::vector<Index> signal_from_; // signal count in sorted_[pos..]
    Index total_signal_ = 0;
};

} // namespace distilled

#endif // DISTILLED_METRICS_HPP
