#include "dysco/hfed.hpp"

#include <stdexcept>
#include <string>

namespace dysco {

void HfedConfig::validate(long lookback_len) const {
    if (horizons.empty()) throw std::invalid_argument("hfed: need at least one scale");
    if (horizons.size() != kernels.size()) {
        throw std::invalid_argument("hfed: horizons and kernels must have equal length");
    }
    for (size_t i = 0; i < horizons.size(); ++i) {
        if (horizons[i] < 1) throw std::invalid_argument("hfed: horizons must be >= 1");
        if (kernels[i] < 1) throw std::invalid_argument("hfed: kernels must be >= 1");
        if (i > 0 && horizons[i] <= horizons[i - 1]) {
            throw std::invalid_argument("hfed: horizons must be strictly increasing");
        }
        if (i > 0 && kernels[i] < kernels[i - 1]) {
            throw std::invalid_argument("hfed: kernels must be nondecreasing");
        }
    }
    if (horizons.back() > lookback_len) {
        throw std::invalid_argument("hfed: largest horizon (" + std::to_string(horizons.back()) +
                                    ") exceeds lookback length (" + std::to_string(lookback_len) + ")");
    }
}

SeriesMatrix moving_average(SeriesView x, long k) {
    if (k < 1) throw std::invalid_argument("moving_average: kernel must be >= 1");
    SeriesMatrix out(x.rows, x.cols);
    if (x.rows == 0) return out;

    // running sum per channel, widened accumulator; window [t-k+1, t] with
    // indices below zero reading the replicated first row
    std::vector<long double> acc(static_cast<size_t>(x.cols));
    for (long c = 0; c < x.cols; ++c) acc[static_cast<size_t>(c)] = static_cast<long double>(k) * x.at(0, c);
    const double inv_k = 1.0 / static_cast<double>(k);
    for (long t = 0; t < x.rows; ++t) {
        if (t > 0) {
            const long drop = t - k;  // row leaving the window; < 0 means padding
            for (long c = 0; c < x.cols; ++c) {
                acc[static_cast<size_t>(c)] += x.at(t, c) - x.at(drop < 0 ? 0 : drop, c);
            }
        }
        for (long c = 0; c < x.cols; ++c) {
            out(t, c) = static_cast<double>(acc[static_cast<size_t>(c)]) * inv_k;
        }
    }
    return out;
}

SeriesMatrix crop_recent(SeriesView x, long horizon) {
    if (horizon > x.rows) {
        throw std::invalid_argument("crop_recent: horizon " + std::to_string(horizon) +
                                    " exceeds series length " + std::to_string(x.rows));
    }
    if (horizon < 1) throw std::invalid_argument("crop_recent: horizon must be >= 1");
    return x.slice(x.rows - horizon, x.rows).to_matrix();
}

std::vector<PyramidLevel> build_pyramid(SeriesView x, const HfedConfig& cfg) {
    cfg.validate(x.rows);
    std::vector<PyramidLevel> levels;
    levels.reserve(cfg.horizons.size());
    for (size_t i = 0; i < cfg.horizons.size(); ++i) {
        PyramidLevel level;
        level.scale_index = static_cast<long>(i);
        level.horizon = cfg.horizons[i];
        level.kernel = cfg.kernels[i];
        SeriesMatrix filtered = moving_average(x, cfg.kernels[i]);
        level.data = crop_recent(SeriesView(filtered), cfg.horizons[i]);
        levels.push_back(std::move(level));
    }
    return levels;
}

}  // namespace dysco
