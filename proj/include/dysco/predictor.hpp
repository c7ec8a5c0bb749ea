#pragma once

#include <string>
#include <vector>

#include "dysco/egds.hpp"
#include "dysco/series.hpp"

namespace dysco {

// Channel-shared temporal linear map: one input_len x horizon weight matrix
// applied to every channel, plus a per-step bias.
struct LinearPredictorParams {
    long input_len = 0;
    long horizon = 0;
    std::vector<double> weight;  // input_len x horizon, row-major
    std::vector<double> bias;    // horizon
};

struct ScalePrediction {
    long scale_index = 0;
    SeriesMatrix data;  // horizon x channels
};

// y[:,c] = weight^T x[:,c] + bias for every channel c.
SeriesMatrix predict_linear(SeriesView x, const LinearPredictorParams& params);

ScalePrediction predict_scale(const CompressedScale& scale, const LinearPredictorParams& params);

// Analytic parameter / FLOP accounting for a named configuration.
struct ComplexityReport {
    std::string quantity;
    long long baseline = 0;
    long long compressed = 0;
    double reduction_pct = 0.0;
    std::string note;
};

// Per-channel parameter counts: baseline lookback*horizon versus the sum of
// per-scale budget*horizon. Bias excluded by default to match the reference
// accounting; pass include_bias for the trained model's true count.
ComplexityReport count_params(long lookback_len, long horizon, const std::vector<long>& budgets,
                              bool include_bias = false);

// Self-attention cost model: baseline L^2*d versus N*T^2*d.
ComplexityReport count_attention_flops(long lookback_len, long budget, long n_scales,
                                       long head_dim);

}  // namespace dysco
