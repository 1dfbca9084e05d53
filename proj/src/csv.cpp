#include "distilled/csv.hpp"

#include <charconv>
#include <cmath>

#include "distilled/error.hpp"
#include "distilled/theory_bounds.hpp"

namespace distilled {

std::string format_real(double value)
{
    if (std::isnan(value))
        return "nan";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

namespace {

const char* flag(bool b) { return b ? "1" : "0"; }

} // namespace

void write_sweep_csv(std::ostream& out, const SweepResult& result)
{
    out << "method,snr,trial,threshold,fdp,ndp,detected\n";
    for (const auto& r : result.rows)
        out << to_string(r.method) << ',' << format_real(r.snr) << ',' << r.trial << ','
            << format_real(r.threshold) << ',' << format_real(r.fdp) << ',' << format_real(r.ndp) << ','
            << flag(r.detected) << '\n';
}

void write_snr_csv(std::ostream& out, std::span<const SnrRow> rows)
{
    out << "method,p,snr,calibrated_tau,fdr,ndr\n";
    for (const auto& r : rows)
        out << to_string(r.method) << ',' << r.p << ',' << format_real(r.snr) << ','
            << format_real(r.calibrated_tau) << ',' << format_real(r.fdr) << ',' << format_real(r.ndr) << '\n';
}

void write_boundary_csv(std::ostream& out, int points)
{
    require(points >= 2, "boundary grid needs at least 2 points");
    out << "beta,rho\n";
    // interior grid of (0, 1): beta_t = t / (points + 1), t = 1..points
    for (int t = 1; t <= points; ++t) {
        const double beta = static_cast<double>(t) / static_cast<double>(points + 1);
        out << format_real(beta) << ',' << format_real(detection_boundary_rho(beta)) << '\n';
    }
}

void write_lemma_csv(std::ostream& out, std::span<const LemmaCheck> checks)
{
    out << "lemma,params,bound,empirical,pass\n";
    for (const auto& c : checks)
        out << c.lemma << ',' << c.params << ',' << format_real(c.bound) << ',' << format_real(c.empirical) << ','
            << flag(c.pass) << '\n';
}

void write_phase_csv(std::ostream& out, std::span<const PhaseRow> rows)
{
    out << "r,recoverable,tau,median_fdp,median_ndp,median_best_error,fraction_within\n";
    for (const auto& r : rows)
        out << format_real(r.r) << ',' << flag(r.recoverable) << ',' << format_real(r.tau) << ','
            << format_real(r.median_fdp) << ',' << format_real(r.median_ndp) << ','
            << format_real(r.median_best_error) << ',' << format_real(r.fraction_within) << '\n';
}

void write_trials_csv(std::ostream& out, std::span<const TrialOutcome> trials)
{
    out << "method,trial,threshold,fdp,ndp,detected,measurements,budget_spent,empty_estimate,empty_support\n";
    for (const auto& t : trials)
        for (const auto& m : t.methods)
            out << to_string(m.method) << ',' << t.trial << ',' << format_real(m.default_threshold) << ','
                << format_real(m.metrics.fdp) << ',' << format_real(m.metrics.ndp) << ','
                << flag(m.metrics.detected) << ',' << m.metrics.measurements_used << ','
                << format_real(m.metrics.budget_spent) << ',' << flag(m.metrics.empty_estimate) << ','
                << flag(m.metrics.empty_support) << '\n';
}

void write_calibration_csv(std::ostream& out, std::span<const CalibrationRow> rows)
{
    out << "method,p,snr,target_fdr,calibrated_tau,pilot_fdr,pilot_ndr,reached\n";
    for (const auto& r : rows)
        out << to_string(r.method) << ',' << r.p << ',' << format_real(r.snr) << ',' << format_real(r.target_fdr)
            << ',' << format_real(r.calibration.tau) << ',' << format_real(r.calibration.pilot_fdr) << ','
            << format_real(r.calibration.pilot_ndr) << ',' << flag(r.calibration.reached) << '\n';
}

} // namespace distilled
