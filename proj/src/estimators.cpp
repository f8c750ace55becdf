#include "tds/estimators.hpp"

#include <cmath>

#include "tds/errors.hpp"

namespace tds {

namespace {

constexpr double kResidueTolerance = 1e-12;

} // namespace

std::string_view to_string(Estimator e) {
    return e == Estimator::Plugin ? "plugin" : "chao-shen";
}

std::string_view to_string(DenominatorMode m) {
    return m == DenominatorMode::Panel ? "panel" : "active";
}

std::optional<Estimator> estimator_from_string(std::string_view s) {
    if (s == "plugin") {
        return Estimator::Plugin;
    }
    if (s == "chao-shen") {
        return Estimator::ChaoShen;
    }
    return std::nullopt;
}

std::optional<DenominatorMode> denominator_from_string(std::string_view s) {
    if (s == "panel") {
        return DenominatorMode::Panel;
    }
    if (s == "active") {
        return DenominatorMode::Active;
    }
    return std::nullopt;
}

std::string flags_to_string(unsigned flags) {
    std::string out;
    auto append = [&out](std::string_view name) {
        if (!out.empty()) {
            out += ';';
        }
        out += name;
    };
    if (flags & kFlagNoData) {
        append("no-data");
    }
    if (flags & kFlagClamped) {
        append("clamped");
    }
    if (flags & kFlagSingletonFallback) {
        append("singleton-fallback");
    }
    return out;
}

unsigned flags_from_string(std::string_view text) {
    unsigned flags = 0;
    std::size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
        std::size_t next = text.find(';', pos);
        std::string_view name = text.substr(pos, next == std::string_view::npos ? next : next - pos);
        if (name == "no-data") {
            flags |= kFlagNoData;
        } else if (name == "clamped") {
            flags |= kFlagClamped;
        } else if (name == "singleton-fallback") {
            flags |= kFlagSingletonFallback;
        } else {
            throw ParseError("unknown flag '" + std::string(name) + "'");
        }
        if (next == std::string_view::npos) {
            break;
        }
        pos = next + 1;
    }
    return flags;
}

std::vector<double> selection_probabilities(const DominanceGrid& grid, std::size_t tau_index,
                                            DenominatorMode mode) {
    if (tau_index >= grid.point_count()) {
        throw DomainError("grid point index " + std::to_string(tau_index) + " out of range");
    }
    double denominator;
    if (mode == DenominatorMode::Panel) {
        denominator = static_cast<double>(grid.panel_denominator);
        if (!(denominator > 0.0)) {
            throw DomainError("panel denominator must be positive");
        }
    } else {
        denominator = static_cast<double>(grid.totals[tau_index]);
        if (!(denominator > 0.0)) {
            throw NoDataError("no attribute selected at tau = " +
                              std::to_string(grid.tau_value(tau_index)));
        }
    }
    std::vector<double> probabilities(grid.n_attributes, 0.0);
    for (std::size_t a = 0; a < grid.n_attributes; ++a) {
        probabilities[a] = static_cast<double>(grid.counts[a][tau_index]) / denominator;
    }
    return probabilities;
}

double shannon_entropy_bits(std::span<const double> probabilities) {
    double sum = 0.0;
    for (double p : probabilities) {
        if (p < 0.0 || !std::isfinite(p)) {
            throw DomainError("probabilities must be finite and non-negative");
        }
        if (p > 0.0) {
            sum -= p * std::log2(p);
        }
    }
    return sum;
}

double plugin_entropy(std::span<const double> probabilities, std::size_t n_attributes) {
    if (n_attributes < 2) {
        throw DomainError("plugin entropy needs N_a >= 2");
    }
    double total = 0.0;
    for (double p : probabilities) {
        if (p < 0.0 || !std::isfinite(p)) {
            throw DomainError("probabilities must be finite and non-negative");
        }
        total += p;
    }
    if (total > 1.0 + kResidueTolerance) {
        throw DomainError("probabilities sum to " + std::to_string(total) + " > 1");
    }
    double h = shannon_entropy_bits(probabilities) / std::log2(static_cast<double>(n_attributes));
    if (h < 0.0 && h > -kResidueTolerance) {
        h = 0.0;
    } else if (h > 1.0 && h < 1.0 + kResidueTolerance) {
        h = 1.0;
    }
    return h;
}

ChaoShenResult chao_shen_entropy(std::span<const int> counts, std::size_t n_attributes) {
    if (n_attributes < 2) {
        throw DomainError("Chao-Shen entropy needs N_a >= 2");
    }
    long n_total = 0;
    long singletons = 0;
    for (int c : counts) {
        if (c < 0) {
            throw DomainError("counts must be non-negative");
        }
        n_total += c;
        if (c == 1) {
            ++singletons;
        }
    }
    if (n_total == 0) {
        throw NoDataError("Chao-Shen entropy undefined on all-zero counts");
    }

    ChaoShenResult result;
    long m = singletons;
    if (m == n_total) {
        // Every observation a singleton would zero out all p_hat and leave
        // each term 0/0; the conventional fallback drops m by one.
        m = n_total - 1;
        result.flags |= kFlagSingletonFallback;
    }
    const double n = static_cast<double>(n_total);
    const double coverage = 1.0 - static_cast<double>(m) / n;

    double sum = 0.0;
    for (int c : counts) {
        if (c == 0) {
            continue;
        }
        const double p_hat = coverage * (static_cast<double>(c) / n);
        if (p_hat <= 0.0) {
            continue;
        }
        const double inclusion = 1.0 - std::pow(1.0 - p_hat, n);
        sum += (-p_hat * std::log2(p_hat)) / inclusion;
    }
    result.value = sum / std::log2(static_cast<double>(n_attributes));
    if (result.value < 0.0 && result.value > -kResidueTolerance) {
        result.value = 0.0;
    }
    if (result.value > 1.0) {
        result.value = 1.0;
        result.flags |= kFlagClamped;
    }
    return result;
}

EntropyCurve entropy_curve(const DominanceGrid& grid, Estimator estimator, DenominatorMode mode) {
    if (estimator == Estimator::ChaoShen && mode == DenominatorMode::Panel) {
        throw DomainError("chao-shen is defined on active counts; the panel denominator applies "
                          "to plugin curves and dominance rates");
    }
    EntropyCurve curve;
    curve.sample_id = grid.sample_id;
    curve.estimator = estimator;
    curve.denominator = mode;
    curve.points.reserve(grid.point_count());

    std::vector<int> counts(grid.n_attributes, 0);
    for (std::size_t i = 0; i < grid.point_count(); ++i) {
        CurvePoint point{grid.tau_value(i), 0.0, 0};
        if (grid.totals[i] == 0) {
            point.flags = kFlagNoData;
        } else if (estimator == Estimator::Plugin) {
            point.value = plugin_entropy(selection_probabilities(grid, i, mode),
                                         grid.n_attributes);
            if (point.value > 1.0) { // sub-probability panel input can overshoot
                point.value = 1.0;
                point.flags |= kFlagClamped;
            }
        } else {
            for (std::size_t a = 0; a < grid.n_attributes; ++a) {
                counts[a] = grid.counts[a][i];
            }
            ChaoShenResult r = chao_shen_entropy(counts, grid.n_attributes);
            point.value = r.value;
            point.flags |= r.flags;
        }
        curve.points.push_back(point);
    }
    return curve;
}

double complexity_value(double entropy) {
    if (!(entropy >= 0.0) || entropy > 1.0) {
        throw DomainError("entropy " + std::to_string(entropy) + " outside [0, 1]");
    }
    return entropy * (1.0 - entropy);
}

ComplexityCurve complexity_curve(const EntropyCurve& entropy) {
    ComplexityCurve curve;
    curve.sample_id = entropy.sample_id;
    curve.source_estimator = entropy.estimator;
    curve.denominator = entropy.denominator;
    curve.points.reserve(entropy.points.size());
    for (const auto& point : entropy.points) {
        curve.points.push_back({point.tau, complexity_value(point.value), point.flags});
    }
    return curve;
}

} // namespace tds
