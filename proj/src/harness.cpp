#include "distilled/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "distilled/error.hpp"
#include "distilled/estimators.hpp"
#include "distilled/parallel.hpp"
#include "distilled/random.hpp"
#include "distilled/theory_bounds.hpp"

namespace distilled {

std::string_view to_string(Method method)
{
    return method == Method::distilled ? "ds" : "nonadaptive";
}

std::string_view to_string(MethodSelection selection)
{
    switch (selection) {
    case MethodSelection::ds:
        return "ds";
    case MethodSelection::nonadaptive:
        return "nonadaptive";
    case MethodSelection::both:
        break;
    }
    return "both";
}

MethodSelection parse_method_selection(std::string_view text)
{
    if (text == "ds")
        return MethodSelection::ds;
    if (text == "nonadaptive")
        return MethodSelection::nonadaptive;
    if (text == "both")
        return MethodSelection::both;
    throw ParameterError("unknown method '" + std::string(text) + "' (expected ds, nonadaptive, or both)");
}

void ExperimentConfig::validate() const
{
    require(p >= 2, "p must be >= 2");
    if (num_nonzero)
        require(*num_nonzero >= 0 && *num_nonzero <= p, "num_nonzero must lie in [0, p]");
    else if (beta)
        require(*beta > 0.0 && *beta < 1.0, "beta must lie in (0, 1)");
    require(std::isfinite(snr) && snr >= 0.0, "snr must be >= 0");
    require(trials >= 1, "trials must be >= 1");
    require(decay > 0.5 && decay <= 1.0, "decay must lie in (1/2, 1]");
    for (double tau : threshold_grid)
        require(tau > 0.0, "threshold_grid entries must be > 0");
    if (target_fdr)
        require(*target_fdr >= 0.0 && *target_fdr < 1.0, "target_fdr must lie in [0, 1)");
}

Index ExperimentConfig::support_size() const
{
    if (num_nonzero)
        return *num_nonzero;
    return sparsity_from_beta(p, beta.value_or(0.5));
}

double ExperimentConfig::sparsity_exponent() const
{
    if (!num_nonzero)
        return beta.value_or(0.5);
    if (*num_nonzero < 1 || *num_nonzero >= p)
        return std::numeric_limits<double>::quiet_NaN();
    return beta_from_sparsity(p, *num_nonzero);
}

std::vector<Method> ExperimentConfig::methods() const
{
    switch (method) {
    case MethodSelection::ds:
        return {Method::distilled};
    case MethodSelection::nonadaptive:
        return {Method::nonadaptive};
    case MethodSelection::both:
        break;
    }
    return {Method::distilled, Method::nonadaptive};
}

const MethodOutcome& TrialOutcome::outcome(Method method) const
{
    for (const auto& m : methods)
        if (m.method == method)
            return m;
    throw ParameterError("trial did not run method " + std::string(to_string(method)));
}

std::vector<double> log_grid(double lo, double hi, std::size_t n)
{
    require(n >= 1, "log_grid: need at least one point");
    const double a = std::isfinite(lo) ? std::max(lo, kGridFloor) : kGridFloor;
    const double b = std::isfinite(hi) ? std::max(hi, a) : a;
    std::vector<double> grid(n, a);
    if (n == 1)
        return grid;
    const double ratio = std::log(b / a);
    for (std::size_t t = 0; t < n; ++t)
        grid[t] = a * std::exp(ratio * static_cast<double>(t) / static_cast<double>(n - 1));
    grid.back() = b;
    return grid;
}

namespace {

SparseSignal trial_signal(const ExperimentConfig& config, Index trial)
{
    Rng rng(derive_seed(config.master_seed, static_cast<std::uint64_t>(trial), StreamTag::signal));
    return generate_sparse_signal({config.p, config.support_size(), config.amplitude()}, rng);
}

void audit_budget(double spent, Index p)
{
    if (!(spent <= static_cast<double>(p) * (1.0 + kBudgetSlack)))
        throw InvariantError("precision budget exceeded: spent " + std::to_string(spent) + " of " +
                             std::to_string(p));
}

DistillTrace run_ds(const ExperimentConfig& config, const SparseSignal& signal, Index trial)
{
    const auto allocation = plan_allocation(config.p, static_cast<double>(config.p), config.decay);
    GaussianNoise noise(derive_seed(config.master_seed, static_cast<std::uint64_t>(trial), StreamTag::distilled));
    auto trace = run_distilled_sensing(signal, allocation, noise);
    check_trace(trace);
    audit_budget(trace.budget_spent(), config.p);
    return trace;
}

NonadaptiveRun run_na(const ExperimentConfig& config, const SparseSignal& signal, Index trial)
{
    GaussianNoise noise(derive_seed(config.master_seed, static_cast<std::uint64_t>(trial), StreamTag::nonadaptive));
    auto run = run_nonadaptive(signal, noise);
    audit_budget(run.budget_spent, config.p);
    return run;
}

MethodOutcome reduce(const ExperimentConfig&, const SparseSignal& signal, const DistillTrace& trace)
{
    MethodOutcome out;
    out.method = Method::distilled;
    out.curve = OperatingCurve::from_observations(trace.final_observations(), signal);
    out.strict = true;
    const auto estimate = ds_support_estimate(trace);
    out.default_threshold = estimate.threshold;
    out.metrics = evaluate(estimate, signal, trace.measurements(), trace.budget_spent());
    return out;
}

MethodOutcome reduce(const ExperimentConfig& config, const SparseSignal& signal, const NonadaptiveRun& run)
{
    MethodOutcome out;
    out.method = Method::nonadaptive;
    out.curve = OperatingCurve::from_dense(run.observations, signal);
    out.strict = false;

    const double beta = config.sparsity_exponent();
    const double r = config.snr > 0.0 ? r_from_amplitude(config.p, config.amplitude()) : 0.0;
    if (std::isfinite(beta) && r > beta) {
        out.default_threshold = nonadaptive_threshold(config.p, r, beta);
    } else {
        // no consistent construction exists; fall back to the best grid point
        const auto grid = config.threshold_grid.empty()
                              ? log_grid(out.curve.min_value(), out.curve.max_value())
                              : config.threshold_grid;
        double best = std::numeric_limits<double>::infinity();
        for (double tau : grid) {
            const auto pt = out.curve.at(tau, false);
            const double error = std::max(pt.fdp, pt.ndp);
            if (error < best) {
                best = error;
                out.default_threshold = tau;
            }
        }
        out.oracle_threshold = true;
    }
    const auto estimate = threshold_support(run.observations, out.default_threshold);
    out.metrics = evaluate(estimate, signal, run.measurements(), run.budget_spent);
    return out;
}

double mean(const std::vector<double>& v)
{
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double median(std::vector<double> v)
{
    require(!v.empty(), "median of an empty sample");
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    const double upper = v[mid];
    if (v.size() % 2 == 1)
        return upper;
    const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

std::vector<OperatingCurve> collect_curves(const ExperimentConfig& config, Method method, Index trials)
{
    return parallel_map(static_cast<std::size_t>(trials), config.workers, [&](std::size_t t) {
        return run_method(config, static_cast<Index>(t), method).curve;
    });
}

} // namespace

MethodOutcome run_method(const ExperimentConfig& config, Index trial_index, Method method)
{
    config.validate();
    const auto signal = trial_signal(config, trial_index);
    if (method == Method::distilled)
        return reduce(config, signal, run_ds(config, signal, trial_index));
    return reduce(config, signal, run_na(config, signal, trial_index));
}

TrialOutcome run_trial(const ExperimentConfig& config, Index trial_index)
{
    config.validate();
    TrialOutcome out;
    out.trial = trial_index;
    out.signal = trial_signal(config, trial_index);
    for (Method method : config.methods()) {
        if (method == Method::distilled) {
            out.trace = run_ds(config, out.signal, trial_index);
            out.methods.push_back(reduce(config, out.signal, *out.trace));
        } else {
            out.nonadaptive = run_na(config, out.signal, trial_index);
            out.methods.push_back(reduce(config, out.signal, *out.nonadaptive));
        }
    }
    return out;
}

SweepResult sweep_thresholds(const ExperimentConfig& config)
{
    config.validate();
    auto per_trial = parallel_map(static_cast<std::size_t>(config.trials), config.workers, [&](std::size_t t) {
        const auto trial = static_cast<Index>(t);
        const auto outcome = run_trial(config, trial);

        std::vector<double> grid = config.threshold_grid;
        if (grid.empty()) {
            double lo = std::numeric_limits<double>::infinity();
            double hi = -std::numeric_limits<double>::infinity();
            for (const auto& m : outcome.methods) {
                if (m.curve.size() == 0)
                    continue;
                lo = std::min(lo, m.curve.min_value());
                hi = std::max(hi, m.curve.max_value());
            }
            grid = log_grid(lo, hi);
        }

        std::vector<SweepRow> rows;
        rows.reserve(grid.size() * outcome.methods.size());
        for (const auto& m : outcome.methods)
            for (double tau : grid) {
                const auto pt = m.curve.at(tau, m.strict);
                rows.push_back({m.method, config.snr, trial, tau, pt.fdp, pt.ndp, pt.discoveries > 0});
            }
        return rows;
    });

    SweepResult result;
    for (auto& rows : per_trial)
        result.rows.insert(result.rows.end(), rows.begin(), rows.end());
    return result;
}

Calibration calibrate_on_curves(std::span<const OperatingCurve> curves, bool strict, double target_fdr)
{
    require(!curves.empty(), "calibration needs at least one pilot trial");
    require(target_fdr >= 0.0 && target_fdr < 1.0, "target_fdr must lie in [0, 1)");

    auto rates = [&](double tau) {
        double fdr = 0.0;
        double ndr = 0.0;
        for (const auto& curve : curves) {
            const auto pt = curve.at(tau, strict);
            fdr += pt.fdp;
            ndr += pt.ndp;
        }
        const auto n = static_cast<double>(curves.size());
        return std::pair{fdr / n, ndr / n};
    };
    auto finish = [&](double tau, int iterations) {
        const auto [fdr, ndr] = rates(tau);
        return Calibration{tau, fdr, ndr, iterations, std::abs(fdr - target_fdr) <= kCalibrationTolerance};
    };

    double hi = kGridFloor;
    for (const auto& curve : curves)
        if (curve.size() > 0)
            hi = std::max(hi, curve.max_value());
    hi += 1.0; // above every observation: all estimates empty, FDR 0
    double lo = kGridFloor;

    if (target_fdr <= 0.0)
        return finish(hi, 0);
    if (rates(lo).first <= target_fdr)
        return finish(lo, 0); // target above the largest reachable FDR

    for (int step = 1; step <= kCalibrationMaxSteps; ++step) {
        const double mid = 0.5 * (lo + hi);
        const double fdr = rates(mid).first;
        if (std::abs(fdr - target_fdr) <= kCalibrationTolerance)
            return finish(mid, step);
        if (fdr > target_fdr)
            lo = mid;
        else
            hi = mid;
    }
    return finish(hi, kCalibrationMaxSteps);
}

Calibration calibrate_threshold_for_fdr(const ExperimentConfig& config, Method method, double target_fdr,
                                        Index pilot_trials)
{
    config.validate();
    require(pilot_trials >= 1, "pilot_trials must be >= 1");
    ExperimentConfig pilot = config;
    pilot.master_seed = derive_seed(config.master_seed, 0, StreamTag::pilot);
    const auto curves = collect_curves(pilot, method, pilot_trials);
    return calibrate_on_curves(curves, method == Method::distilled, target_fdr);
}

std::vector<SnrRow> snr_sweep(const ExperimentConfig& config, std::span<const double> snr_list,
                              double target_fdr, Index pilot_trials)
{
    require(!snr_list.empty(), "snr_sweep: empty SNR list");
    std::vector<SnrRow> rows;
    for (Method method : config.methods())
        for (double snr : snr_list) {
            ExperimentConfig cfg = config;
            cfg.snr = snr;
            const auto cal = calibrate_threshold_for_fdr(cfg, method, target_fdr, pilot_trials);
            const auto curves = collect_curves(cfg, method, cfg.trials);
            std::vector<double> fdps;
            std::vector<double> ndps;
            for (const auto& curve : curves) {
                const auto pt = curve.at(cal.tau, method == Method::distilled);
                fdps.push_back(pt.fdp);
                ndps.push_back(pt.ndp);
            }
            rows.push_back({method, cfg.p, snr, cal.tau, mean(fdps), mean(ndps), cal.reached});
        }
    return rows;
}

std::vector<PhaseRow> validate_phase_transition(const PhaseConfig& config)
{
    require(config.p >= 2, "phase transition: p must be >= 2");
    require(config.beta > 0.0 && config.beta < 1.0, "phase transition: beta must lie in (0, 1)");
    require(!config.r_list.empty(), "phase transition: empty r list");
    require(config.trials >= 1, "phase transition: trials must be >= 1");

    std::vector<PhaseRow> rows;
    for (double r : config.r_list) {
        require(r > 0.0, "phase transition: r must be > 0");
        require(std::abs(r - config.beta) > 1e-12, "phase transition: r = beta is not covered");

        ExperimentConfig cfg;
        cfg.p = config.p;
        cfg.beta = config.beta;
        cfg.snr = std::pow(amplitude_from_r(config.p, r), 2);
        cfg.master_seed = config.master_seed;
        cfg.workers = config.workers;

        PhaseRow row;
        row.r = r;
        row.recoverable = r > config.beta;
        row.tau = row.recoverable ? nonadaptive_threshold(config.p, r, config.beta)
                                  : std::numeric_limits<double>::quiet_NaN();

        struct Sample {
            double fdp, ndp, best;
        };
        const auto samples = parallel_map(static_cast<std::size_t>(config.trials), config.workers, [&](std::size_t t) {
            const auto trial = static_cast<Index>(t);
            const auto signal = trial_signal(cfg, trial);
            const auto curve = OperatingCurve::from_dense(run_na(cfg, signal, trial).observations, signal);
            const auto best = curve.best_cut();
            const auto pt = row.recoverable ? curve.at(row.tau, false) : best;
            return Sample{pt.fdp, pt.ndp, std::max(best.fdp, best.ndp)};
        });

        std::vector<double> fdps, ndps, bests;
        Index within = 0;
        for (const auto& s : samples) {
            fdps.push_back(s.fdp);
            ndps.push_back(s.ndp);
            bests.push_back(s.best);
            within += s.best < config.tolerance ? 1 : 0;
        }
        row.median_fdp = median(fdps);
        row.median_ndp = median(ndps);
        row.median_best_error = median(bests);
        row.fraction_within = static_cast<double>(within) / static_cast<double>(samples.size());
        rows.push_back(row);
    }
    return rows;
}

double normal_upper_tail(double x)
{
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double binomial_cdf(Index m, double q, Index b)
{
    require(m >= 0, "binomial_cdf: m must be >= 0");
    require(q >= 0.0 && q <= 1.0, "binomial_cdf: q must lie in [0, 1]");
    if (b < 0)
        return 0.0;
    if (b >= m)
        return 1.0;
    if (q == 0.0)
        return 1.0;
    if (q == 1.0)
        return 0.0;
    const double n = static_cast<double>(m);
    double total = 0.0;
    for (Index i = 0; i <= b; ++i) {
        const double x = static_cast<double>(i);
        const double log_pmf = std::lgamma(n + 1) - std::lgamma(x + 1) - std::lgamma(n - x + 1) +
                               x * std::log(q) + (n - x) * std::log1p(-q);
        total += std::exp(log_pmf);
    }
    return std::min(total, 1.0);
}

namespace {

std::string describe(std::initializer_list<std::pair<const char*, double>> params)
{
    std::ostringstream os;
    os.precision(10);
    bool first = true;
    for (const auto& [key, value] : params) {
        if (!first)
            os << ';';
        os << key << '=' << value;
        first = false;
    }
    return os.str();
}

// Fraction of replicates in which fn(replicate rng) reports a violation.
template <typename Fn>
double violation_frequency(const LemmaSuiteConfig& config, std::uint64_t salt, Index replicates, Fn&& fn)
{
    const auto flags = parallel_map(static_cast<std::size_t>(replicates), config.workers, [&](std::size_t r) {
        GaussianNoise noise(derive_seed(config.master_seed ^ salt, r, StreamTag::lemma));
        return fn(noise) ? 1 : 0;
    });
    return static_cast<double>(std::accumulate(flags.begin(), flags.end(), 0)) / static_cast<double>(replicates);
}

LemmaCheck margin_check(std::string lemma, std::string params, double min_margin)
{
    return {std::move(lemma), std::move(params), 0.0, min_margin, min_margin >= -1e-12};
}

} // namespace

std::vector<LemmaCheck> validate_lemmas(const LemmaSuiteConfig& config)
{
    require(config.null_replicates >= 1 && config.signal_replicates >= 1 && config.envelope_runs >= 1,
            "validate_lemmas: replicate counts must be >= 1");
    std::vector<LemmaCheck> checks;

    {
        const Index m = 10000;
        const double eps = 0.02;
        const double bound = 1.0 - null_retention_bound(m, eps);
        const double freq = violation_frequency(config, 1, config.null_replicates, [&](GaussianNoise& w) {
            Index kept = 0;
            for (Index i = 0; i < m; ++i)
                kept += w() > 0.0 ? 1 : 0;
            const auto k = static_cast<double>(kept);
            return k < (0.5 - eps) * m || k > (0.5 + eps) * m;
        });
        checks.push_back({"null_retention",
                          describe({{"m", m}, {"eps", eps}, {"replicates", static_cast<double>(config.null_replicates)}}),
                          bound, freq, freq <= bound + 0.004});
    }
    {
        const Index m = 1000;
        const double mu = 2.0;
        const double sigma = 1.0;
        const auto ret = signal_retention_bound(m, mu, sigma);
        const double bound = 1.0 - ret.prob;
        const double freq = violation_frequency(config, 2, config.signal_replicates, [&](GaussianNoise& w) {
            Index kept = 0;
            for (Index i = 0; i < m; ++i)
                kept += mu + sigma * w() > 0.0 ? 1 : 0;
            return static_cast<double>(kept) < (1.0 - ret.eps_prime) * m;
        });
        checks.push_back({"signal_retention",
                          describe({{"m", m}, {"mu", mu}, {"sigma", sigma},
                                    {"replicates", static_cast<double>(config.signal_replicates)}}),
                          bound, freq, ret.valid && freq <= bound + 0.01});
    }
    {
        const double bound = binomial_lower_tail_bound(10, 0.9, 5.0);
        const double exact = binomial_cdf(10, 0.9, 5);
        checks.push_back({"binomial_chernoff", describe({{"m", 10}, {"q", 0.9}, {"b", 5}}), bound, exact,
                          exact <= bound});

        Rng rng(derive_seed(config.master_seed, 3, StreamTag::lemma));
        std::uniform_int_distribution<Index> m_dist(2, 400);
        std::uniform_real_distribution<double> q_dist(0.02, 0.99);
        double worst = std::numeric_limits<double>::infinity();
        int drawn = 0;
        while (drawn < 100) {
            const Index m = m_dist(rng);
            const double q = q_dist(rng);
            const double mean = static_cast<double>(m) * q;
            const auto top = static_cast<Index>(std::ceil(mean)) - 1;
            if (top < 1)
                continue;
            std::uniform_int_distribution<Index> b_dist(1, top);
            const Index b = b_dist(rng);
            worst = std::min(worst, binomial_lower_tail_bound(m, q, static_cast<double>(b)) - binomial_cdf(m, q, b));
            ++drawn;
        }
        checks.push_back(margin_check("binomial_chernoff_grid", "triples=100", worst));
    }
    {
        const auto tb = gaussian_tail_bounds(2.0);
        const double exact = normal_upper_tail(2.0);
        checks.push_back({"gaussian_tail_upper", "gamma=2", tb.upper, exact, exact <= tb.upper});
        checks.push_back({"gaussian_tail_lower", "gamma=2", tb.lower, exact, tb.lower <= exact});

        double worst = std::numeric_limits<double>::infinity();
        const int points = 500;
        for (int t = 0; t < points; ++t) {
            const double g = 1.01 + (6.0 - 1.01) * t / (points - 1);
            const auto b = gaussian_tail_bounds(g);
            const double e = normal_upper_tail(g);
            worst = std::min({worst, b.upper - e, e - b.lower});
        }
        checks.push_back(margin_check("gaussian_tail_grid", "gamma=[1.01;6];points=500", worst));
    }
    {
        const Index p = 16384;
        const Index s1 = 128;
        const Index z1 = p - s1;
        const double mu = 4.5;
        const double eps = 0.05;
        const auto allocation = plan_allocation(p, static_cast<double>(p));
        const auto bound = ds_success_prob_bound(s1, z1, eps, mu, allocation.budgets);
        const auto env = retention_envelope(s1, z1, eps, mu, allocation.budgets);

        ExperimentConfig cfg;
        cfg.p = p;
        cfg.num_nonzero = s1;
        cfg.snr = mu * mu;
        cfg.master_seed = derive_seed(config.master_seed, 4, StreamTag::lemma);
        cfg.method = MethodSelection::ds;
        cfg.workers = config.workers;

        const auto flags = parallel_map(static_cast<std::size_t>(config.envelope_runs), config.workers, [&](std::size_t t) {
            const auto outcome = run_trial(cfg, static_cast<Index>(t));
            const auto mask = outcome.signal.support_mask();
            for (int j = 1; j < allocation.steps; ++j) {
                Index s = 0;
                for (Index i : outcome.trace->index_set(j))
                    s += mask[static_cast<std::size_t>(i)];
                const auto z = static_cast<double>(outcome.trace->index_set(j).size()) - static_cast<double>(s);
                const auto sj = static_cast<double>(s);
                const auto js = static_cast<std::size_t>(j);
                if (sj < env.signal_lower[js] || z < env.null_lower[js] || z > env.null_upper[js])
                    return 1;
            }
            return 0;
        });
        const double freq = static_cast<double>(std::accumulate(flags.begin(), flags.end(), 0)) /
                            static_cast<double>(flags.size());
        const double failure_bound = 1.0 - bound.value;
        checks.push_back({"ds_envelope",
                          describe({{"p", p}, {"s1", s1}, {"mu", mu}, {"eps", eps},
                                    {"runs", static_cast<double>(config.envelope_runs)}}),
                          failure_bound, freq, bound.valid && freq <= failure_bound + 0.02});
    }
    {
        double exact = 1.0;
        for (int j = 1; j <= 10; ++j)
            exact *= 1.0 - std::pow(2.0, -j) / 4.0;
        const double bound = product_lower_bound(2.0, 4.0, 10);
        checks.push_back({"product_lower_bound", "a=2;g=4;k=10", bound, exact, exact >= bound});

        Rng rng(derive_seed(config.master_seed, 5, StreamTag::lemma));
        std::uniform_real_distribution<double> a_dist(1.05, 4.0);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        std::uniform_int_distribution<int> k_dist(1, 60);
        double worst = std::numeric_limits<double>::infinity();
        for (int t = 0; t < 200; ++t) {
            const double a = a_dist(rng);
            const double g = (1.0 / a) * (1.0 + 1e-3) + 10.0 * u(rng);
            const int k = k_dist(rng);
            double prod = 1.0;
            for (int j = 1; j <= k; ++j)
                prod *= 1.0 - std::pow(a, -j) / g;
            worst = std::min(worst, prod - product_lower_bound(a, g, k));
        }
        checks.push_back(margin_check("product_lower_bound_grid", "draws=200", worst));
    }
    {
        const auto s = limit_lemma_check(0.1, 5.0);
        checks.push_back({"limit_upper", "f=0.1;g=5", s.upper, s.plus_power, s.plus_power <= s.upper});
        checks.push_back({"limit_lower", "f=0.1;g=5", s.lower, s.minus_power, s.minus_power >= s.lower});

        Rng rng(derive_seed(config.master_seed, 6, StreamTag::lemma));
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double worst = std::numeric_limits<double>::infinity();
        for (int t = 0; t < 500; ++t) {
            const double f = 0.5 * u(rng);
            const double g = f > 0.0 ? std::min(10.0 / f, 1e6) * u(rng) : 100.0 * u(rng);
            const auto b = limit_lemma_check(f, g);
            worst = std::min({worst, b.upper - b.plus_power, b.minus_power - b.lower});
        }
        checks.push_back(margin_check("limit_grid", "draws=500;fg<=10", worst));
    }
    return checks;
}

} // namespace distilled
