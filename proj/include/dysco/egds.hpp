#pragma once

#include <vector>

#include "dysco/hfed.hpp"
#include "dysco/series.hpp"

namespace dysco {

struct EgdsConfig {
    long n_segments = 24;
    long k_base = 8;
    double beta = 0.8;        // semantic sensitivity weight, in [0,1)
    double target_rate = 0.2; // compressed fraction of each horizon, in (0,1]
    long scorer_hidden = 16;

    void validate() const;
};

// Importance scorer: time-mean pool -> dense C->h -> ReLU -> dense h->1
// -> sigmoid. Shared across scales.
struct ScorerParams {
    long channels = 0;
    long hidden = 0;
    std::vector<double> hidden_w;  // channels x hidden, row-major
    std::vector<double> hidden_b;  // hidden
    std::vector<double> out_w;     // hidden
    double out_b = 0.0;
};

// Contiguous slice [begin, end) of a pyramid level. j is the temporal index:
// j = n for the oldest segment, j = 1 for the most recent.
struct SegmentSlice {
    long begin = 0;
    long end = 0;
    long j = 0;
};

struct SegmentRecord {
    long j = 0;
    long begin = 0;
    long end = 0;
    double alpha = 0.0;   // importance score in (0,1)
    double kernel = 0.0;  // dynamic pooling kernel (real-valued)
    long lambda = 0;      // pooled output length
};

// One compressed scale: pooled segments concatenated oldest-first, with
// per-segment bookkeeping retained for diagnostics and scorer training.
struct CompressedScale {
    long scale_index = 0;
    SeriesMatrix data;
    std::vector<SegmentRecord> segments;
};

// Near-equal split into n slices; the oldest (H mod n) slices get the extra
// row. Returned oldest-first.
std::vector<SegmentSlice> segment(long level_rows, long n);

std::vector<double> segment_mean(SeriesView seg);

double score_segment(SeriesView seg, const ScorerParams& params);

// Trace variant used by backpropagation: also emits the pooled mean and the
// hidden pre-activations.
double score_segment_trace(SeriesView seg, const ScorerParams& params,
                           std::vector<double>& mean_out, std::vector<double>& preact_out);

// k_j = k_base * (1 + j/n) * (1 - beta * alpha): linear distance decay
// counterbalanced by semantic modulation.
double dynamic_kernel(long j, long n, double alpha, const EgdsConfig& cfg);

// Largest-remainder apportionment of T_target proportional to len_j / k_j,
// with 1 <= lambda_j <= len_j and an exact total. Ties go to the more recent
// segment (smaller j; entries are ordered oldest-first, so j = n - index).
std::vector<long> apportion_budget(const std::vector<long>& segment_lengths,
                                   const std::vector<double>& kernels, long t_target);

// Mean pooling into lambda bins: output row p averages input rows
// [floor(p*m/lambda), floor((p+1)*m/lambda)). Compression only (lambda <= m).
SeriesMatrix adaptive_pool(SeriesView seg, long lambda);

long scale_budget(const EgdsConfig& cfg, long horizon);

CompressedScale compress(const PyramidLevel& level, const EgdsConfig& cfg,
                         const ScorerParams& params);

}  // namespace dysco
