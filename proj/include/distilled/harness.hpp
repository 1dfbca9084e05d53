#ifndef DISTILLED_HARNESS_HPP
#define DISTILLED_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distilled/metrics.hpp"
#include "distilled/sensing.hpp"
#include "distilled/signal_model.hpp"

namespace distilled {

enum class Method { distilled, nonadaptive };
enum class MethodSelection { ds, nonadaptive, both };

std::string_view to_string(Method method);
std::string_view to_string(MethodSelection selection);
MethodSelection parse_method_selection(std::string_view text);

/// Lowest threshold a sweep or calibration will try; thresholding needs tau > 0.
inline constexpr double kGridFloor = 1e-3;
inline constexpr std::size_t kDefaultGridPoints = 200;

struct ExperimentConfig {
    Index p = 16384;
    std::optional<double> beta;        ///< sparsity exponent; 0.5 when neither is given
    std::optional<Index> num_nonzero;  ///< overrides beta
    double snr = 0.0;                  ///< mu^2
    Index trials = 1000;
    double decay = 0.75;
    std::uint64_t master_seed = 0;
    MethodSelection method = MethodSelection::both;
    std::vector<double> threshold_grid; ///< empty: per-trial log grid
    std::optional<double> target_fdr;
    unsigned workers = 0; ///< 0: hardware concurrency; not part of the result

    void validate() const;
    Index support_size() const;
    double amplitude() const { return amplitude_from_snr(snr); }
    /// beta when given, otherwise derived from num_nonzero.
    double sparsity_exponent() const;
    std::vector<Method> methods() const;
};

struct MethodOutcome {
    Method method = Method::distilled;
    OperatingCurve curve;
    bool strict = false; ///< distilled output is thresholded with y > tau
    double default_threshold = 0.0;
    bool oracle_threshold = false; ///< default came from the best grid cut
    TrialMetrics metrics;
};

struct TrialOutcome {
    Index trial = 0;
    SparseSignal signal;
    std::optional<DistillTrace> trace;
    std::optional<NonadaptiveRun> nonadaptive;
    std::vector<MethodOutcome> methods;

    const MethodOutcome& outcome(Method method) const;
};

/// One Monte Carlo replicate: signal from derive_seed(master, trial, signal),
/// noise from a per-method stream. Every run is budget-audited and throws
/// InvariantError on violation.
TrialOutcome run_trial(const ExperimentConfig& config, Index trial_index);

/// Like run_trial for a single method, keeping only the reduced outcome.
MethodOutcome run_method(const ExperimentConfig& config, Index trial_index, Method method);

/// n log-spaced points over [max(lo, kGridFloor), max(hi, that)].
std::vector<double> log_grid(double lo, double hi, std::size_t n = kDefaultGridPoints);

struct SweepRow {
    Method method = Method::distilled;
    double snr = 0.0;
    Index trial = 0;
    double threshold = 0.0;
    double fdp = 0.0;
    double ndp = 0.0;
    bool detected = false;
};

struct SweepResult {
    std::vector<SweepRow> rows;
};

/// (FDP, NDP) for every trial, method, and grid threshold. Rows are ordered
/// by trial, then method, then threshold.
SweepResult sweep_thresholds(const ExperimentConfig& config);

struct Calibration {
    double tau = 0.0;
    double pilot_fdr = 0.0;
    double pilot_ndr = 0.0;
    int iterations = 0;
    bool reached = false; ///< |pilot FDR - target| within tolerance
};

inline constexpr double kCalibrationTolerance = 0.005;
inline constexpr int kCalibrationMaxSteps = 40;

/// Bisection on tau over pilot trials that share their random numbers across
/// iterations. Pilot seeds are derived from master_seed and never overlap the
/// evaluation trials.
Calibration calibrate_threshold_for_fdr(const ExperimentConfig& config, Method method,
                                        double target_fdr = 0.05, Index pilot_trials = 500);

/// Bisection over precomputed curves.
Calibration calibrate_on_curves(std::span<const OperatingCurve> curves, bool strict, double target_fdr);

struct SnrRow {
    Method method = Method::distilled;
    Index p = 0;
    double snr = 0.0;
    double calibrated_tau = 0.0;
    double fdr = 0.0;
    double ndr = 0.0;
    bool calibrated = false;
};

/// Per (method, snr): calibrate on pilots, then evaluate config.trials fresh trials.
std::vector<SnrRow> snr_sweep(const ExperimentConfig& config, std::span<const double> snr_list,
                              double target_fdr = 0.05, Index pilot_trials = 500);

struct PhaseRow {
    double r = 0.0;
    bool recoverable = false;  ///< r > beta
    double tau = 0.0;          ///< threshold construction, NaN when r < beta
    double median_fdp = 0.0;   ///< at tau, or at the best cut when r < beta
    double median_ndp = 0.0;
    double median_best_error = 0.0;  ///< median over trials of min_tau max(FDP, NDP)
    double fraction_within = 0.0;    ///< trials whose best cut has max(FDP, NDP) < tolerance
};

struct PhaseConfig {
    Index p = 65536;
    double beta = 0.5;
    std::vector<double> r_list;
    Index trials = 200;
    std::uint64_t master_seed = 0;
    double tolerance = 0.3;
    unsigned workers = 0;
};

std::vector<PhaseRow> validate_phase_transition(const PhaseConfig& config);

struct LemmaCheck {
    std::string lemma;
    std::string params;
    double bound = 0.0;
    double empirical = 0.0;
    bool pass = false;
};

struct LemmaSuiteConfig {
    std::uint64_t master_seed = 0;
    Index null_replicates = 10000;
    Index signal_replicates = 10000;
    Index envelope_runs = 500;
    unsigned workers = 0;
};

/// Monte Carlo and exact-oracle checks of every closed-form bound.
std::vector<LemmaCheck> validate_lemmas(const LemmaSuiteConfig& config);

/// Pr(Bin(m, q) <= b), summed exactly in log space.
double binomial_cdf(Index m, double q, Index b);

/// Pr(Z > x) for Z standard normal.
double normal_upper_tail(double x);

} // namespace distilled

#endif // DISTILLED_HARNESS_HPP
