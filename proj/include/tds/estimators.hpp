#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tds/dominance_grid.hpp"

namespace tds {

enum class Estimator { Plugin, ChaoShen };
enum class DenominatorMode { Panel, Active };

std::string_view to_string(Estimator e);
std::string_view to_string(DenominatorMode m);
std::optional<Estimator> estimator_from_string(std::string_view s);
std::optional<DenominatorMode> denominator_from_string(std::string_view s);

// Per-point provenance flags.
inline constexpr unsigned kFlagNoData = 1u << 0;            // N(tau) = 0, value forced to 0
inline constexpr unsigned kFlagClamped = 1u << 1;           // estimate exceeded 1, clamped
inline constexpr unsigned kFlagSingletonFallback = 1u << 2; // all-singleton m -> N-1 fallback

/// Fixed-order ";"-joined flag names, empty string when none.
std::string flags_to_string(unsigned flags);
/// Inverse of flags_to_string; throws ParseError on unknown names.
unsigned flags_from_string(std::string_view text);

struct CurvePoint {
    double tau = 0.0;
    double value = 0.0;
    unsigned flags = 0;

    bool operator==(const CurvePoint&) const = default;
};

struct EntropyCurve {
    std::string sample_id;
    Estimator estimator = Estimator::ChaoShen;
    DenominatorMode denominator = DenominatorMode::Active;
    std::vector<CurvePoint> points; // one per grid point, value in [0, 1]
};

struct ComplexityCurve {
    std::string sample_id;
    Estimator source_estimator = Estimator::ChaoShen;
    DenominatorMode denominator = DenominatorMode::Active;
    std::vector<CurvePoint> points; // value in [0, 0.25]
};

/// Selection probabilities p(a | tau_i) over all declared attributes.
/// Panel mode divides by the panel denominator (sums to N/denominator <= 1,
/// strictly less during the lag); active mode divides by N(tau_i) (sums to 1)
/// and throws NoDataError when N(tau_i) = 0.
std::vector<double> selection_probabilities(const DominanceGrid& grid, std::size_t tau_index,
                                            DenominatorMode mode);

/// Unnormalized Shannon entropy -sum p log2 p in bits, with 0 log 0 = 0.
/// Exposed for testing; plugin_entropy divides this by log2(N_a).
double shannon_entropy_bits(std::span<const double> probabilities);

/// Normalized plugin entropy in [0, 1]. Trailing zero probabilities may be
/// omitted: only n_attributes enters the normalization. Rounding residue
/// within 1e-12 of the [0, 1] bounds is clamped; a genuinely larger value
/// (possible for sub-probability input) is returned as computed and clamped
/// with a flag at curve level. Throws DomainError for n_attributes < 2,
/// negative probabilities, or sum > 1 + 1e-12.
double plugin_entropy(std::span<const double> probabilities, std::size_t n_attributes);

struct ChaoShenResult {
    double value = 0.0;
    unsigned flags = 0;
};

/// Coverage-adjusted entropy estimate from integer counts.
///
/// m = number of attributes with count exactly 1; the degenerate all-singleton
/// case (m = N) falls back to m = N - 1 and sets kFlagSingletonFallback.
/// Each observed attribute contributes -p_hat log2 p_hat / (1 - (1-p_hat)^N)
/// with p_hat = (1 - m/N) * count/N, normalized by log2(N_a). Estimates above
/// 1 are clamped and flagged. Throws NoDataError when all counts are zero.
ChaoShenResult chao_shen_entropy(std::span<const int> counts, std::size_t n_attributes);

/// Entropy at every grid point. Points with N(tau) = 0 carry value 0 and
/// kFlagNoData instead of aborting the curve. Chao-Shen is defined on active
/// counts only; combining it with panel mode throws DomainError.
EntropyCurve entropy_curve(const DominanceGrid& grid, Estimator estimator,
                           DenominatorMode mode);

/// C = H (1 - H), in [0, 0.25]. Throws DomainError for H outside [0, 1].
double complexity_value(double entropy);

/// Pointwise complexity of an entropy curve; flags carry over (no-data points
/// keep value 0).
ComplexityCurve complexity_curve(const EntropyCurve& entropy);

} // namespace tds
