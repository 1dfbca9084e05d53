#ifndef DISTILLED_CONFIG_HPP
#define DISTILLED_CONFIG_HPP

#include <istream>
#include <string>
#include <string_view>

#include "distilled/harness.hpp"

namespace distilled {

/// Flat `key = value` format, one entry per line, `#` starts a comment.
/// Keys: p, beta, num_nonzero, snr, trials, decay, master_seed, method,
/// target_fdr, threshold_grid (comma-separated reals).
void apply_config_entry(ExperimentConfig& config, std::string_view key, std::string_view value);
ExperimentConfig parse_config(std::istream& in, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});

/// Writes every key, so the output reloads into an identical config.
std::string render_config(const ExperimentConfig& config);

} // namespace distilled

#endif // DISTILLED_CONFIG_HPP
