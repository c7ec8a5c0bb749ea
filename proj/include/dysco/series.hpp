#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dysco {

// Dense block of real values, rows = time steps oldest first, cols = channels.
// The universal carrier for raw series, pyramid levels, compressed sequences
// and predictions.
class SeriesMatrix {
public:
    SeriesMatrix() = default;
    SeriesMatrix(long rows, long cols, double fill = 0.0)
        : rows_(rows), cols_(cols), values_(static_cast<size_t>(rows * cols), fill) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    double& operator()(long t, long c) { return values_[static_cast<size_t>(t * cols_ + c)]; }
    double operator()(long t, long c) const { return values_[static_cast<size_t>(t * cols_ + c)]; }

    double* row(long t) { return values_.data() + t * cols_; }
    const double* row(long t) const { return values_.data() + t * cols_; }

    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }

    bool operator==(const SeriesMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && values_ == o.values_;
    }

private:
    long rows_ = 0;
    long cols_ = 0;
    std::vector<double> values_;
};

// Non-owning const view of a contiguous row range. The parent matrix must
// outlive the view.
struct SeriesView {
    const double* data = nullptr;
    long rows = 0;
    long cols = 0;

    SeriesView() = default;
    SeriesView(const SeriesMatrix& m) : data(m.values().data()), rows(m.rows()), cols(m.cols()) {}
    SeriesView(const double* d, long r, long c) : data(d), rows(r), cols(c) {}

    const double* row(long t) const { return data + t * cols; }
    double at(long t, long c) const { return data[t * cols + c]; }

    // rows [begin, end)
    SeriesView slice(long begin, long end) const {
        return SeriesView(data + begin * cols, end - begin, cols);
    }

    SeriesMatrix to_matrix() const;
};

// Chronological three-way partition, either by fractions (floor train and
// val, remainder to test) or by explicit end-of-train / end-of-val indices.
struct SplitSpec {
    double train_fraction = 0.7;
    double val_fraction = 0.1;
    double test_fraction = 0.2;
    std::optional<std::pair<long, long>> boundaries;
};

struct SplitResult {
    SeriesMatrix train, val, test;
};

// One supervised sample: lookback ends exactly one step before target begins.
// origin_index is the position of the first target step in the parent series.
struct WindowPair {
    SeriesMatrix lookback;
    SeriesMatrix target;
    long origin_index = 0;
};

// Index-based window enumeration over a parent series; avoids materializing
// per-window copies during training and evaluation.
struct WindowPlan {
    const SeriesMatrix* series = nullptr;
    long lookback_len = 0;
    long horizon = 0;
    std::vector<long> origins;

    size_t size() const { return origins.size(); }
    SeriesView lookback(size_t i) const {
        return SeriesView(*series).slice(origins[i] - lookback_len, origins[i]);
    }
    SeriesView target(size_t i) const {
        return SeriesView(*series).slice(origins[i], origins[i] + horizon);
    }
};

// Per-channel z-score statistics computed on the training split
// (population variance).
struct NormStats {
    std::vector<double> mean;
    std::vector<double> stddev;
};

struct Sinusoid {
    double amplitude = 1.0;
    double period = 24.0;
    double phase = 0.0;
};

// Smooth one-lobe bump of the given width; amplitude * sin^2(pi*(t-start)/width)
// added to every channel.
struct Burst {
    long start = 0;
    long width = 1;
    double amplitude = 0.0;
};

struct SynthSpec {
    long length = 0;
    long channels = 1;
    std::vector<Sinusoid> sinusoids;
    double trend_slope = 0.0;
    double noise_std = 0.0;
    std::vector<Burst> bursts;
    // phase offset applied per channel index so channels are not identical
    double channel_phase_shift = 0.0;
};

// CSV loader for the standard benchmark layout: header row, column 0 an
// opaque timestamp string, columns 1..C real-valued channels.
SeriesMatrix load_csv(const std::string& path);
void write_csv(const std::string& path, const SeriesMatrix& m);

SplitResult split(const SeriesMatrix& series, const SplitSpec& spec);

NormStats fit_normalizer(const SeriesMatrix& train);
SeriesMatrix apply_normalizer(const NormStats& stats, const SeriesMatrix& m);
SeriesMatrix invert_normalizer(const NormStats& stats, const SeriesMatrix& m);

std::vector<WindowPair> make_windows(const SeriesMatrix& series, long lookback_len,
                                     long horizon, long stride);

// Origins restricted to [origin_lo, origin_hi); a lookback may reach rows
// before origin_lo, which is how evaluation windows get context from
// preceding splits.
WindowPlan plan_windows(const SeriesMatrix& series, long lookback_len, long horizon,
                        long stride, long origin_lo, long origin_hi);

SeriesMatrix synth_generate(const SynthSpec& spec, uint64_t seed);

}  // namespace dysco
