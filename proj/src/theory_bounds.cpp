#include "distilled/theory_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "distilled/error.hpp"

namespace distilled {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310002;

} // namespace

double BoundReport::clamped() const
{
    return std::clamp(value, 0.0, 1.0);
}

TailBounds gaussian_tail_bounds(double gamma)
{
    require(gamma > 0.0, "gaussian_tail_bounds: gamma must be > 0");
    const double g2 = gamma * gamma;
    const double upper = std::exp(-0.5 * g2) / (kSqrt2Pi * gamma);
    return {(1.0 - 1.0 / g2) * upper, upper};
}

double null_retention_bound(Index m, double eps)
{
    require(m >= 1, "null_retention_bound: m must be >= 1");
    require(eps > 0.0 && eps < 0.5, "null_retention_bound: eps must lie in (0, 1/2)");
    return 1.0 - 2.0 * std::exp(-2.0 * static_cast<double>(m) * eps * eps);
}

SignalRetention signal_retention_bound(Index m, double mu, double sigma)
{
    require(m >= 1, "signal_retention_bound: m must be >= 1");
    require(sigma > 0.0 && mu > 0.0, "signal_retention_bound: mu and sigma must be > 0");
    SignalRetention r;
    r.eps_prime = sigma / (mu * kSqrt2Pi);
    r.prob = 1.0 - std::exp(-mu * static_cast<double>(m) / (4.0 * sigma * kSqrt2Pi));
    r.valid = mu >= 2.0 * sigma;
    return r;
}

double binomial_lower_tail_bound(Index m, double q, double b)
{
    require(m >= 1, "binomial_lower_tail_bound: m must be >= 1");
    require(q > 0.0 && q <= 1.0, "binomial_lower_tail_bound: q must lie in (0, 1]");
    const double n = static_cast<double>(m);
    const double mean = n * q;
    require(b > 0.0 && b < mean, "binomial_lower_tail_bound: need 0 < b < m q");
    // log space; at q = 1 the first factor is 0^(m-b) = 0
    const double log_bound = (n - b) * std::log((n - mean) / (n - b)) + b * std::log(mean / b);
    return std::exp(log_bound);
}

double epsilon_j(Index s1, Index z1, double eps, double mu, double budget, int step)
{
    require(mu > 0.0 && budget > 0.0, "epsilon_j: mu and budget must be > 0");
    require(step >= 1, "epsilon_j: step is 1-based");
    const double active = static_cast<double>(s1) +
                          std::pow(0.5 + eps, step - 1) * static_cast<double>(z1);
    return std::sqrt(active / (2.0 * std::numbers::pi * mu * mu * budget));
}

BoundReport ds_success_prob_bound(Index s1, Index z1, double eps, double mu,
                                  const Eigen::Ref<const Eigen::VectorXd>& budgets)
{
    require(eps > 0.0 && eps < 0.5, "ds_success_prob_bound: eps must lie in (0, 1/2)");
    require(mu > 0.0, "ds_success_prob_bound: mu must be > 0");
    require(budgets.size() >= 1, "ds_success_prob_bound: need at least one step");
    const int k = static_cast<int>(budgets.size());

    BoundReport report;
    double failure = 0.0;
    double survived = 1.0; // prod_{l < j} (1 - eps_l)
    for (int j = 1; j <= k - 1; ++j) {
        const double z_weight = std::pow(0.5 - eps, j - 1);
        failure += 2.0 * std::exp(-2.0 * static_cast<double>(z1) * z_weight * eps * eps);
        if (s1 > 0) {
            const double active = static_cast<double>(s1) +
                                  std::pow(0.5 + eps, j - 1) * static_cast<double>(z1);
            if (!(budgets[j - 1] > 4.0 / (mu * mu) * active) && report.valid) {
                report.valid = false;
                report.failing_step = j;
            }
            failure += std::exp(-static_cast<double>(s1) * survived / (2.0 * kSqrt2Pi));
            survived *= 1.0 - epsilon_j(s1, z1, eps, mu, budgets[j - 1], j);
        }
    }
    report.value = 1.0 - failure;
    return report;
}

RetentionEnvelope retention_envelope(Index s1, Index z1, double eps, double mu,
                                     const Eigen::Ref<const Eigen::VectorXd>& budgets)
{
    require(eps > 0.0 && eps < 0.5, "retention_envelope: eps must lie in (0, 1/2)");
    const int k = static_cast<int>(budgets.size());
    RetentionEnvelope env;
    double survived = 1.0;
    for (int j = 1; j <= k; ++j) {
        env.signal_lower.push_back(survived * static_cast<double>(s1));
        env.null_lower.push_back(std::pow(0.5 - eps, j - 1) * static_cast<double>(z1));
        env.null_upper.push_back(std::pow(0.5 + eps, j - 1) * static_cast<double>(z1));
        if (j < k && s1 > 0)
            survived *= 1.0 - epsilon_j(s1, z1, eps, mu, budgets[j - 1], j);
    }
    return env;
}

double detection_boundary_rho(double beta)
{
    require(beta > 0.0 && beta < 1.0, "detection_boundary_rho: beta must lie in (0, 1)");
    if (beta <= 0.5)
        return 0.0;
    if (beta <= 0.75)
        return beta - 0.5;
    const double t = 1.0 - std::sqrt(1.0 - beta);
    return t * t;
}

double min_detect_amplitude(double c1, double ck)
{
    require(c1 > 0.0 && ck > 0.0, "min_detect_amplitude: fractions must be > 0");
    return std::max(std::sqrt(4.0 / c1), 2.0 * std::sqrt(2.0 / ck));
}

double product_lower_bound(double a, double g, int k)
{
    require(a > 1.0, "product_lower_bound: a must be > 1");
    require(k >= 1, "product_lower_bound: k must be >= 1");
    const double inv_a = 1.0 / a;
    require(g > inv_a * (1.0 + 1e-6), "product_lower_bound: g must exceed 1/a");
    const double geometric = inv_a * (1.0 - std::pow(a, -k)) / (1.0 - inv_a);
    return std::exp(-geometric / (g - inv_a));
}

LimitSandwich limit_lemma_check(double f, double g)
{
    require(f >= 0.0 && f <= 0.5, "limit_lemma_check: f must lie in [0, 1/2]");
    require(g >= 0.0, "limit_lemma_check: g must be >= 0");
    return {std::pow(1.0 + f, g), std::exp(f * g), std::pow(1.0 - f, g), std::exp(-2.0 * f * g)};
}

double default_envelope_epsilon(Index p)
{
    require(p >= 2, "default_envelope_epsilon: p must be >= 2");
    return std::pow(static_cast<double>(p), -1.0 / 3.0);
}

} // namespace distilled
