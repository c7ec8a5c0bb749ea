#pragma once

#include <vector>

#include "dysco/predictor.hpp"
#include "dysco/series.hpp"

namespace dysco {

// Context-aware gate over per-scale predictions. The gate input is each
// scale's per-channel temporal mean (N*C features, scale-major); the output
// is one scalar weight per scale.
struct GateParams {
    long n_scales = 0;
    long channels = 0;
    std::vector<double> weight;  // (N*C) x N, row-major
    std::vector<double> bias;    // N
};

struct GateOutput {
    std::vector<double> weights;  // nonnegative, sums to 1
    SeriesMatrix fused;
};

// Numerically stable softmax (max subtraction).
std::vector<double> softmax(const std::vector<double>& logits);

std::vector<double> gate_features(const std::vector<ScalePrediction>& preds);

GateOutput fuse(const std::vector<ScalePrediction>& preds, const GateParams& params);

// Unweighted mean of the per-scale predictions; the gate-ablated fusion.
SeriesMatrix mean_fuse(const std::vector<ScalePrediction>& preds);

}  // namespace dysco
