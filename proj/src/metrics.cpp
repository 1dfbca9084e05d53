#include "distilled/metrics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "distilled/error.hpp"

namespace distilled {

namespace {

Index intersection_size(const IndexSet& a, const IndexSet& b)
{
    Index count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

} // namespace

double fdp(const IndexSet& estimate, const IndexSet& truth)
{
    if (estimate.empty())
        return 0.0;
    const auto n = static_cast<double>(estimate.size());
    return (n - static_cast<double>(intersection_size(estimate, truth))) / n;
}

double ndp(const IndexSet& estimate, const IndexSet& truth)
{
    if (truth.empty())
        return 0.0;
    const auto n = static_cast<double>(truth.size());
    return (n - static_cast<double>(intersection_size(estimate, truth))) / n;
}

TrialMetrics evaluate(const SupportEstimate& estimate, const SparseSignal& truth,
                      Index measurements_used, double budget_spent)
{
    TrialMetrics m;
    m.fdp = fdp(estimate, truth);
    m.ndp = ndp(estimate, truth);
    m.detected = !estimate.empty();
    m.measurements_used = measurements_used;
    m.budget_spent = budget_spent;
    m.empty_estimate = estimate.empty();
    m.empty_support = truth.support.empty();
    return m;
}

RateSummary aggregate(std::span<const TrialMetrics> trials)
{
    require(!trials.empty(), "aggregate: no trials");
    RateSummary summary;
    for (const auto& t : trials) {
        summary.fdr += t.fdp;
        summary.ndr += t.ndp;
        summary.detection_rate += t.detected ? 1.0 : 0.0;
    }
    const auto n = static_cast<double>(trials.size());
    summary.fdr /= n;
    summary.ndr /= n;
    summary.detection_rate /= n;
    summary.trials = trials.size();
    return summary;
}

OperatingCurve::OperatingCurve(const Eigen::Ref<const Eigen::VectorXd>& values,
                               std::span<const char> is_signal, Index total_signal)
    : total_signal_(total_signal)
{
    require(static_cast<Index>(is_signal.size()) == values.size(), "OperatingCurve: label count mismatch");
    const auto n = static_cast<std::size_t>(values.size());
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return values[static_cast<Index>(a)] < values[static_cast<Index>(b)];
    });

    sorted_.resize(n);
    signal_from_.assign(n + 1, 0);
    for (std::size_t pos = 0; pos < n; ++pos)
        sorted_[pos] = values[static_cast<Index>(order[pos])];
    for (std::size_t pos = n; pos-- > 0;)
        signal_from_[pos] = signal_from_[pos + 1] + (is_signal[order[pos]] ? 1 : 0);
    require(signal_from_[0] <= total_signal_, "OperatingCurve: more labelled signals than |S|");
}

OperatingCurve OperatingCurve::from_observations(const Observations& obs, const SparseSignal& truth)
{
    const auto mask = truth.support_mask();
    std::vector<char> labels(obs.indices.size());
    for (std::size_t t = 0; t < labels.size(); ++t)
        labels[t] = mask[static_cast<std::size_t>(obs.indices[t])];
    return OperatingCurve(obs.values, labels, static_cast<Index>(truth.support.size()));
}

OperatingCurve OperatingCurve::from_dense(const Eigen::Ref<const Eigen::VectorXd>& y, const SparseSignal& truth)
{
    require(y.size() == truth.size(), "OperatingCurve: observation length differs from signal length");
    const auto mask = truth.support_mask();
    return OperatingCurve(y, mask, static_cast<Index>(truth.support.size()));
}

OperatingPoint OperatingCurve::point(std::size_t first_kept) const
{
    OperatingPoint pt;
    pt.discoveries = static_cast<Index>(sorted_.size() - first_kept);
    pt.true_discoveries = signal_from_[first_kept];
    if (pt.discoveries > 0)
        pt.fdp = static_cast<double>(pt.discoveries - pt.true_discoveries) / static_cast<double>(pt.discoveries);
    if (total_signal_ > 0)
        pt.ndp = static_cast<double>(total_signal_ - pt.true_discoveries) / static_cast<double>(total_signal_);
    return pt;
}

OperatingPoint OperatingCurve::at(double tau, bool strict) const
{
    const auto it = strict ? std::upper_bound(sorted_.begin(), sorted_.end(), tau)
                           : std::lower_bound(sorted_.begin(), sorted_.end(), tau);
    return point(static_cast<std::size_t>(it - sorted_.begin()));
}

OperatingPoint OperatingCurve::best_cut() const
{
    OperatingPoint best = point(sorted_.size());
    double best_error = std::max(best.fdp, best.ndp);
    for (std::size_t pos = 0; pos < sorted_.size(); ++pos) {
        // ties cannot be split by any threshold
        if (pos > 0 && sorted_[pos - 1] == sorted_[pos])
            continue;
        const auto pt = point(pos);
        const double error = std::max(pt.fdp, pt.ndp);
        if (error < best_error) {
            best = pt;
            best_error = error;
        }
    }
    return best;
}

double OperatingCurve::best_max_error() const
{
    const auto pt = best_cut();
    return std::max(pt.fdp, pt.ndp);
}

double OperatingCurve::min_value() const
{
    return sorted_.empty() ? std::numeric_limits<double>::quiet_NaN() : sorted_.front();
}

double OperatingCurve::max_value() const
{
    return sorted_.empty() ? std::numeric_limits<double>::quiet_NaN() : sorted_.back();
}

} // namespace distilled
