#include "distilled/signal_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "distilled/error.hpp"

namespace distilled {

void SignalParams::validate() const
{
    require(p >= 1, "signal dimension p must be >= 1");
    require(num_nonzero >= 0 && num_nonzero <= p, "num_nonzero must lie in [0, p]");
    require(std::isfinite(amplitude) && amplitude >= 0.0, "amplitude must be finite and >= 0");
}

std::vector<char> SparseSignal::support_mask() const
{
    std::vector<char> mask(static_cast<std::size_t>(size()), 0);
    for (Index i : support)
        mask[static_cast<std::size_t>(i)] = 1;
    return mask;
}

Index sparsity_from_beta(Index p, double beta)
{
    require(p >= 2, "sparsity_from_beta: p must be >= 2");
    require(beta > 0.0 && beta < 1.0, "sparsity_from_beta: beta must lie in (0, 1)");
    const double s = std::round(std::pow(static_cast<double>(p), 1.0 - beta));
    return std::max<Index>(1, static_cast<Index>(s));
}

double amplitude_from_r(Index p, double r)
{
    require(p >= 2, "amplitude_from_r: p must be >= 2");
    require(r > 0.0, "amplitude_from_r: r must be > 0");
    return std::sqrt(2.0 * r * std::log(static_cast<double>(p)));
}

double r_from_amplitude(Index p, double amplitude)
{
    require(p >= 2, "r_from_amplitude: p must be >= 2");
    return amplitude * amplitude / (2.0 * std::log(static_cast<double>(p)));
}

double amplitude_from_snr(double snr)
{
    require(std::isfinite(snr) && snr >= 0.0, "SNR must be finite and >= 0");
    return std::sqrt(snr);
}

double beta_from_sparsity(Index p, Index num_nonzero)
{
    require(p >= 2, "beta_from_sparsity: p must be >= 2");
    require(num_nonzero >= 1 && num_nonzero < p, "beta_from_sparsity: need 1 <= s < p");
    return 1.0 - std::log(static_cast<double>(num_nonzero)) / std::log(static_cast<double>(p));
}

SparseSignal generate_sparse_signal(const SignalParams& params, Rng& rng)
{
    params.validate();
    IndexSet all(static_cast<std::size_t>(params.p));
    std::iota(all.begin(), all.end(), Index{0});
    IndexSet support;
    support.reserve(static_cast<std::size_t>(params.num_nonzero));
    // selection sampling keeps the relative order, so the result is sorted
    std::sample(all.begin(), all.end(), std::back_inserter(support), params.num_nonzero, rng);
    return make_sparse_signal(params.p, std::move(support), params.amplitude);
}

SparseSignal make_sparse_signal(Index p, IndexSet support, double amplitude)
{
    require(p >= 1, "signal dimension p must be >= 1");
    require(amplitude >= 0.0, "amplitude must be >= 0");
    std::sort(support.begin(), support.end());
    require(std::adjacent_find(support.begin(), support.end()) == support.end(),
            "support contains duplicate indices");
    require(support.empty() || (support.front() >= 0 && support.back() < p),
            "support index out of range");
    SparseSignal signal;
    signal.values = Eigen::VectorXd::Zero(p);
    for (Index i : support)
        signal.values[i] = amplitude;
    signal.support = std::move(support);
    signal.amplitude = amplitude;
    return signal;
}

} // namespace distilled
