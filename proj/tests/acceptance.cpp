// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "distilled/estimators.hpp"
#include "distilled/harness.hpp"
#include "distilled/parallel.hpp"
#include "distilled/sensing.hpp"
#include "distilled/theory_bounds.hpp"

using namespace distilled;

namespace {

constexpr Index kP = 1 << 14;
constexpr Index kSparsity = 128;
constexpr Index kTrials = 500;
constexpr std::uint64_t kSeed = 20240601;

int failures = 0;
std::map<int, std::string> lines;
double worst_budget_ratio = 0.0;
long audited_runs = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail)
{
    char head[64];
    std::snprintf(head, sizeof head, "[%s] %2d %-28s ", pass ? "PASS" : "FAIL", id, name.c_str());
    lines[id] = head + detail;
    if (!pass)
        ++failures;
}

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

void audit(double spent)
{
    worst_budget_ratio = std::max(worst_budget_ratio, spent / static_cast<double>(kP));
    ++audited_runs;
}

ExperimentConfig base_config(double snr)
{
    ExperimentConfig c;
    c.p = kP;
    c.num_nonzero = kSparsity;
    c.snr = snr;
    c.trials = kTrials;
    c.master_seed = kSeed;
    return c;
}

void step_count()
{
    const int a = steps_k(1 << 14), b = steps_k(1 << 17), c = steps_k(1 << 20);
    report(1, "step count", a == 6 && b == 6 && c == 6, fmt("k = %d, %d, %d", a, b, c));
}

void allocation()
{
    const auto alloc = plan_allocation(kP, static_cast<double>(kP), 0.75);
    const double r1 = alloc.first();
    const double sum = alloc.budgets.sum();
    const double snr = 2.0 * kP / r1;
    const bool pass = std::abs(r1 - kP / 4.05078125) <= 1e-6 && std::abs(sum - kP) <= 1e-9 * kP &&
                      std::abs(snr - 8.1) <= 0.01;
    report(2, "allocation closed form", pass, fmt("R1 = %.10f, sum = %.12f, 2p/R1 = %.6f", r1, sum, snr));
}

void high_snr()
{
    auto c = base_config(20.0);
    const auto sweep = sweep_thresholds(c);
    std::map<std::pair<Index, Method>, bool> ok;
    for (const auto& row : sweep.rows) {
        auto& hit = ok[{row.trial, row.method}];
        hit = hit || (row.fdp <= 0.05 && row.ndp <= 0.05);
    }
    double frac[2] = {0.0, 0.0};
    for (const auto& [key, hit] : ok)
        frac[key.second == Method::distilled ? 0 : 1] += hit ? 1.0 / kTrials : 0.0;
    for (Index t = 0; t < kTrials; ++t) {
        const auto out = run_method(c, t, Method::distilled);
        audit(out.metrics.budget_spent);
        audit(run_method(c, t, Method::nonadaptive).metrics.budget_spent);
    }
    report(3, "high SNR both succeed", frac[0] >= 0.9 && frac[1] >= 0.9,
           fmt("fraction with FDP<=0.05 and NDP<=0.05: ds = %.3f, nonadaptive = %.3f (need >= 0.9)", frac[0],
               frac[1]));
}

std::vector<SnrRow> calibrated(double snr)
{
    auto c = base_config(snr);
    const std::vector<double> list{snr};
    return snr_sweep(c, list, 0.05, kTrials);
}

double row_ndr(const std::vector<SnrRow>& rows, Method m)
{
    for (const auto& r : rows)
        if (r.method == m)
            return r.ndr;
    return std::nan("");
}

void mid_snr()
{
    const auto rows = calibrated(8.0);
    const double ds = row_ndr(rows, Method::distilled);
    const double na = row_ndr(rows, Method::nonadaptive);
    report(4, "mid SNR separation", ds <= 0.15 && na >= 0.5,
           fmt("NDR at FDR 0.05: ds = %.4f (need <= 0.15), nonadaptive = %.4f (need >= 0.5)", ds, na));
}

void low_snr()
{
    const auto rows = calibrated(2.0);
    const double ds = row_ndr(rows, Method::distilled);
    report(5, "low SNR anchor", std::abs(ds - 0.80) <= 0.10,
           fmt("ds NDR at FDR 0.05 = %.4f (need 0.80 +- 0.10)", ds));
}

void null_runs()
{
    const auto alloc = plan_allocation(kP, static_cast<double>(kP));
    const auto x = make_sparse_signal(kP, {}, 0.0);
    struct Run {
        bool alarm;
        Index measurements;
        double spent;
    };
    const auto runs = parallel_map(static_cast<std::size_t>(kTrials), 0, [&](std::size_t t) {
        GaussianNoise w(derive_seed(kSeed, t, StreamTag::distilled));
        const auto trace = run_distilled_sensing(x, alloc, w);
        check_trace(trace);
        return Run{detect(trace), trace.measurements(), trace.budget_spent()};
    });
    int alarms = 0, under = 0;
    double mean_m = 0.0;
    for (const auto& r : runs) {
        alarms += r.alarm ? 1 : 0;
        under += r.measurements < 2.2 * kP ? 1 : 0;
        mean_m += static_cast<double>(r.measurements) / kTrials;
        audit(r.spent);
    }
    const double rate = static_cast<double>(alarms) / kTrials;
    report(6, "null false alarm", rate <= 0.05, fmt("Pr(nonempty estimate) = %.4f (need <= 0.05)", rate));
    const double frac = static_cast<double>(under) / kTrials;
    report(9, "measurement count", frac >= 0.99,
           fmt("fraction under 2.2p = %.4f (need >= 0.99), mean measurements = %.1f p", frac, mean_m / kP));
}

void power()
{
    const auto alloc = plan_allocation(kP, static_cast<double>(kP));
    const double c1 = alloc.first() / kP, ck = alloc.last() / kP;
    const double mu = 1.1 * min_detect_amplitude(c1, ck);
    auto c = base_config(mu * mu);
    c.method = MethodSelection::ds;
    const auto detected = parallel_map(static_cast<std::size_t>(kTrials), 0, [&](std::size_t t) {
        const auto out = run_method(c, static_cast<Index>(t), Method::distilled);
        return std::pair{out.metrics.detected, out.metrics.budget_spent};
    });
    double rate = 0.0;
    for (const auto& [d, spent] : detected) {
        rate += d ? 1.0 / kTrials : 0.0;
        audit(spent);
    }
    report(7, "detection power", rate >= 0.95, fmt("mu = %.4f, detection rate = %.4f (need >= 0.95)", mu, rate));
}

void phase()
{
    PhaseConfig pc;
    pc.p = 1 << 16;
    pc.beta = 0.5;
    pc.r_list = {0.25, 0.8};
    pc.trials = 200;
    pc.master_seed = kSeed;
    const auto rows = validate_phase_transition(pc);
    const auto& low = rows[0];
    const auto& high = rows[1];
    const bool pass_high = high.median_fdp < 0.1 && high.median_ndp < 0.1;
    const bool pass_low = low.fraction_within <= 0.5;
    report(10, "phase transition", pass_high && pass_low,
           fmt("r=0.8: tau = %.4f, median FDP = %.4f, median NDP = %.4f (need both < 0.1); "
               "r=0.25: best-cut success fraction = %.3f (need <= 0.5)",
               high.tau, high.median_fdp, high.median_ndp, low.fraction_within));
}

void boundary()
{
    const double a = detection_boundary_rho(0.5), b = detection_boundary_rho(0.75);
    bool monotone = true;
    double max_jump = 0.0, prev = 0.0;
    const int n = 10000;
    for (int t = 1; t <= n; ++t) {
        const double rho = detection_boundary_rho(static_cast<double>(t) / (n + 1));
        if (t > 1) {
            monotone = monotone && rho >= prev;
            max_jump = std::max(max_jump, rho - prev);
        }
        prev = rho;
    }
    // the steepest slope on the grid is below 2 / sqrt(1 - beta_max)
    const bool continuous = max_jump < 0.02;
    report(11, "boundary values", a == 0.0 && b == 0.25 && monotone && continuous,
           fmt("rho(0.5) = %g, rho(0.75) = %g, non-decreasing = %d, largest step = %.2e", a, b, monotone ? 1 : 0,
               max_jump));
}

void lemmas()
{
    LemmaSuiteConfig lc;
    lc.master_seed = kSeed;
    const auto checks = validate_lemmas(lc);
    int failed = 0;
    std::string names;
    for (const auto& ch : checks)
        if (!ch.pass) {
            ++failed;
            names += " " + ch.lemma;
        }
    report(12, "lemma suite", failed == 0, fmt("%zu checks, %d failed%s", checks.size(), failed, names.c_str()));
}

} // namespace

int main()
{
    try {
        step_count();
        allocation();
        high_snr();
        mid_snr();
        low_snr();
        null_runs();
        power();
        phase();
        boundary();
        lemmas();
        const bool ok = worst_budget_ratio <= 1.0 + 1e-9;
        report(8, "budget audit", ok,
               fmt("%ld audited runs, max spent / p = %.15f (need <= 1 + 1e-9)", audited_runs, worst_budget_ratio));
    } catch (const std::exception& e) {
        for (const auto& [id, line] : lines)
            std::printf("%s\n", line.c_str());
        std::printf("[FAIL] acceptance aborted: %s\n", e.what());
        return 2;
    }
    for (const auto& [id, line] : lines)
        std::printf("%s\n", line.c_str());
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
