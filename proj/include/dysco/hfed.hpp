#pragma once

#include <vector>

#include "dysco/series.hpp"

namespace dysco {

// Multi-granularity pyramid configuration. Horizons are strictly increasing
// and the last one equals the active lookback length; kernels are
// nondecreasing so larger horizons get heavier smoothing.
struct HfedConfig {
    std::vector<long> horizons;
    std::vector<long> kernels;

    long n_scales() const { return static_cast<long>(horizons.size()); }
    void validate(long lookback_len) const;

    static HfedConfig defaults() { return HfedConfig{{720, 1440, 2440}, {8, 24, 36}}; }
};

// One pyramid scale: causal moving average followed by a crop to the most
// recent `horizon` steps.
struct PyramidLevel {
    long scale_index = 0;
    long horizon = 0;
    long kernel = 1;
    SeriesMatrix data;
};

// Causal length-preserving moving average; the first value is replicated
// k-1 times as left padding.
SeriesMatrix moving_average(SeriesView x, long k);

// Last `horizon` rows, order preserved.
SeriesMatrix crop_recent(SeriesView x, long horizon);

std::vector<PyramidLevel> build_pyramid(SeriesView x, const HfedConfig& cfg);

}  // namespace dysco
