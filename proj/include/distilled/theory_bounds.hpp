#ifndef DISTILLED_THEORY_BOUNDS_HPP
#define DISTILLED_THEORY_BOUNDS_HPP

#include <vector>

#include <Eigen/Core>

#include "distilled/signal_model.hpp"

namespace distilled {

/// A bound value together with a flag telling whether its preconditions hold.
/// The raw value is kept; clamping happens only for display.
struct BoundReport {
    double value = 0.0;
    bool valid = true;
    int failing_step = 0; ///< 1-based step whose precondition failed, 0 if none

    double clamped() const;
};

struct TailBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// Mills-ratio sandwich for Pr(Z > gamma), Z standard normal, gamma > 0.
TailBounds gaussian_tail_bounds(double gamma);

/// 1 - 2 exp(-2 m eps^2): probability that a fraction within 1/2 +- eps of m
/// pure-noise observations is positive. Requires 0 < eps < 1/2.
double null_retention_bound(Index m, double eps);

struct SignalRetention {
    double eps_prime = 0.0; ///< sigma / (mu sqrt(2 pi))
    double prob = 0.0;      ///< 1 - exp(-mu m / (4 sigma sqrt(2 pi)))
    bool valid = true;      ///< mu >= 2 sigma
};

SignalRetention signal_retention_bound(Index m, double mu, double sigma);

/// Chernoff upper bound on Pr(Bin(m, q) <= b) for 0 < b < m q.
double binomial_lower_tail_bound(Index m, double q, double b);

/// sqrt((s1 + (1/2 + eps)^(step-1) z1) / (2 pi mu^2 R_step)), step is 1-based.
double epsilon_j(Index s1, Index z1, double eps, double mu, double budget, int step);

/// Probability lower bound that the retained signal and null counts stay in
/// their envelopes for every step. budgets holds R_1..R_k; the per-step
/// condition R_j > 4/mu^2 (s1 + (1/2+eps)^(j-1) z1) is checked for j < k
/// when s1 > 0.
BoundReport ds_success_prob_bound(Index s1, Index z1, double eps, double mu,
                                  const Eigen::Ref<const Eigen::VectorXd>& budgets);

/// Envelopes for s_j and z_j, j = 1..k (element 0 is the initial step).
struct RetentionEnvelope {
    std::vector<double> signal_lower;
    std::vector<double> null_lower;
    std::vector<double> null_upper;
};

RetentionEnvelope retention_envelope(Index s1, Index z1, double eps, double mu,
                                     const Eigen::Ref<const Eigen::VectorXd>& budgets);

/// Detection boundary rho(beta) for non-adaptive sampling.
double detection_boundary_rho(double beta);

/// max(sqrt(4/c1), 2 sqrt(2/ck)).
double min_detect_amplitude(double c1, double ck);

/// Closed-form lower bound on prod_{j=1..k} (1 - a^{-j}/g); needs a > 1 and
/// g > a^{-1}(1 + 1e-6).
double product_lower_bound(double a, double g, int k);

struct LimitSandwich {
    double plus_power = 0.0;  ///< (1+f)^g
    double upper = 0.0;       ///< e^{f g}
    double minus_power = 0.0; ///< (1-f)^g
    double lower = 0.0;       ///< e^{-2 f g}
};

/// (1+f)^g <= e^{fg} and (1-f)^g >= e^{-2fg} for 0 <= f <= 1/2, g >= 0.
LimitSandwich limit_lemma_check(double f, double g);

/// p^{-1/3}, the default eps for evaluating the step envelopes.
double default_envelope_epsilon(Index p);

} // namespace distilled

#endif // DISTILLED_THEORY_BOUNDS_HPP
