#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tds/attribute_set.hpp"
#include "tds/measurement.hpp"

namespace tds {

/// One phase of the mastication cycle: over [start_frac, end_frac) of
/// normalized time, selections are drawn proportionally to `weights`
/// (one non-negative weight per attribute, not all zero).
struct SimulatorPhase {
    double start_frac = 0.0;
    double end_frac = 1.0;
    std::vector<double> weights;
};

/// Synthetic panel model: per measurement, a truncated-normal mastication
/// time T and first-selection lag L, then a semi-Markov selection process
/// with exponential dwell times and phase-dependent attribute weights.
/// Consecutive re-selections of the same attribute are collapsed (dominance
/// already persists, so they are unobservable). All randomness derives from
/// (seed, panelist, repetition, sample) substreams; see rng.hpp.
struct SimulatorConfig {
    AttributeSet attributes;
    int n_p = 1;
    int n_r = 1;
    double duration_mean_s = 40.8;
    double duration_sd_s = 9.7;
    double lag_mean_s = 3.4;
    double lag_sd_s = 2.3;
    double dwell_mean_s = 4.0;
    std::vector<SimulatorPhase> phases;
    std::uint64_t seed = 0;
    std::vector<std::string> samples{"synthetic"}; // sample ids to generate

    /// Throws DomainError unless phases exactly partition [0, 1], all rates
    /// and counts are in range, and every weight vector matches N_a.
    void validate() const;

    /// Phase containing `fraction` of normalized time (fraction 1 maps to the
    /// last phase).
    const SimulatorPhase& phase_at(double fraction) const;
};

/// JSON config document mirroring SimulatorConfig.
SimulatorConfig parse_simulator_config(std::string_view text);
std::string write_simulator_config(const SimulatorConfig& config);

/// Draws one measurement. T ~ Normal(duration) truncated to > 0 (resampled up
/// to 100 times, then the mean); L ~ Normal(lag) truncated to >= 0 likewise,
/// then clamped to 0.9 T. First event at L; later onsets add exponential gaps
/// until they pass T. Deterministic in (config.seed, ids).
Measurement sample_measurement(const SimulatorConfig& config, std::string_view panelist_id,
                               int repetition_idx, std::string_view sample_id);

/// n_p x n_r measurements for one sample (panelists "p1".."p<n_p>"); the
/// result passes validate_dataset with zero errors.
TdsDataset generate_panel(const SimulatorConfig& config, std::string_view sample_id);

/// Monte Carlo ground truth: distribution of the dominant attribute at
/// normalized time tau over n_mc independent simulated measurements, using a
/// stream disjoint from generate_panel's. Measurements still in their lag at
/// tau are excluded from the normalization; if all are, throws NoDataError.
/// Standard error is at most 0.5 / sqrt(n_mc) per component.
std::vector<double> empirical_truth(const SimulatorConfig& config, double tau, int n_mc);

} // namespace tds
