#ifndef DISTILLED_CSV_HPP
#define DISTILLED_CSV_HPP

#include <ostream>
#include <span>
#include <string>

#include "distilled/harness.hpp"

namespace distilled {

/// Shortest form with 17 significant digits; round-trips bit-exactly.
std::string format_real(double value);

void write_sweep_csv(std::ostream& out, const SweepResult& result);
void write_snr_csv(std::ostream& out, std::span<const SnrRow> rows);
void write_boundary_csv(std::ostream& out, int points);
void write_lemma_csv(std::ostream& out, std::span<const LemmaCheck> checks);
void write_phase_csv(std::ostream& out, std::span<const PhaseRow> rows);
void write_trials_csv(std::ostream& out, std::span<const TrialOutcome> trials);
struct CalibrationRow {
    Method method = Method::distilled;
    Index p = 0;
    double snr = 0.0;
    double target_fdr = 0.0;
    Calibration calibration;
};

void write_calibration_csv(std::ostream& out, std::span<const CalibrationRow> rows);

} // namespace distilled

#endif // DISTILLED_CSV_HPP
