#ifndef DISTILLED_SIGNAL_MODEL_HPP
#define DISTILLED_SIGNAL_MODEL_HPP

#include <vector>

#include <Eigen/Core>

#include "distilled/random.hpp"

namespace distilled {

using Index = Eigen::Index;

/// Sorted, duplicate-free list of zero-based coordinates.
using IndexSet = std::vector<Index>;

struct SignalParams {
    Index p = 0;
    Index num_nonzero = 0;
    double amplitude = 0.0;

    void validate() const;
};

/// Nonnegative sparse vector with a common amplitude on its support.
///
/// The support is carried explicitly: with amplitude 0 the values vector is
/// identically zero but the support still names the "signal" coordinates.
struct SparseSignal {
    Eigen::VectorXd values;
    IndexSet support;
    double amplitude = 0.0;

    Index size() const noexcept { return values.size(); }

    /// 1 at support coordinates, 0 elsewhere.
    std::vector<char> support_mask() const;
};

/// round(p^(1-beta)), clamped to at least 1.
Index sparsity_from_beta(Index p, double beta);

/// sqrt(2 r ln p).
double amplitude_from_r(Index p, double r);

/// Inverse of amplitude_from_r: mu^2 / (2 ln p).
double r_from_amplitude(Index p, double amplitude);

/// mu = sqrt(SNR).
double amplitude_from_snr(double snr);

/// beta such that s = p^(1-beta); requires 1 <= s < p.
double beta_from_sparsity(Index p, Index num_nonzero);

/// Uniformly placed support of the requested size.
SparseSignal generate_sparse_signal(const SignalParams& params, Rng& rng);

/// Builds a signal from an explicit support (sorted on return).
SparseSignal make_sparse_signal(Index p, IndexSet support, double amplitude);

} // namespace distilled

#endif // DISTILLED_SIGNAL_MODEL_HPP
