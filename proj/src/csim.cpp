#include "dysco/csim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dysco {

std::vector<double> softmax(const std::vector<double>& logits) {
    const double peak = *std::max_element(logits.begin(), logits.end());
    std::vector<double> out(logits.size());
    double sum = 0.0;
    for (size_t i = 0; i < logits.size(); ++i) {
        out[i] = std::exp(logits[i] - peak);
        sum += out[i];
    }
    for (auto& v : out) v /= sum;
    return out;
}

static void check_shapes(const std::vector<ScalePrediction>& preds) {
    if (preds.empty()) throw std::invalid_argument("csim: need at least one scale prediction");
    for (const auto& p : preds) {
        if (p.data.rows() != preds[0].data.rows() || p.data.cols() != preds[0].data.cols()) {
            throw std::invalid_argument("csim: inconsistent prediction shapes");
        }
    }
}

std::vector<double> gate_features(const std::vector<ScalePrediction>& preds) {
    check_shapes(preds);
    const long out_len = preds[0].data.rows(), channels = preds[0].data.cols();
    std::vector<double> features;
    features.reserve(preds.size() * static_cast<size_t>(channels));
    for (const auto& p : preds) {
        for (long c = 0; c < channels; ++c) {
            double acc = 0.0;
            for (long o = 0; o < out_len; ++o) acc += p.data(o, c);
            features.push_back(acc / static_cast<double>(out_len));
        }
    }
    return features;
}

GateOutput fuse(const std::vector<ScalePrediction>& preds, const GateParams& params) {
    check_shapes(preds);
    const long n = static_cast<long>(preds.size());
    const long channels = preds[0].data.cols();
    if (params.n_scales != n || params.channels != channels) {
        throw std::invalid_argument("fuse: gate sized for " + std::to_string(params.n_scales) +
                                    " scales x " + std::to_string(params.channels) +
                                    " channels, got " + std::to_string(n) + " x " +
                                    std::to_string(channels));
    }
    const auto features = gate_features(preds);
    std::vector<double> logits(params.bias);
    for (size_t f = 0; f < features.size(); ++f) {
        const double* w_row = params.weight.data() + f * static_cast<size_t>(n);
        for (long i = 0; i < n; ++i) logits[static_cast<size_t>(i)] += w_row[i] * features[f];
    }

    GateOutput out;
    out.weights = softmax(logits);
    const long out_len = preds[0].data.rows();
    out.fused = SeriesMatrix(out_len, channels);
    for (long i = 0; i < n; ++i) {
        const double w = out.weights[static_cast<size_t>(i)];
        const auto& y = preds[static_cast<size_t>(i)].data;
        for (long o = 0; o < out_len; ++o) {
            for (long c = 0; c < channels; ++c) out.fused(o, c) += w * y(o, c);
        }
    }
    return out;
}

SeriesMatrix mean_fuse(const std::vector<ScalePrediction>& preds) {
    check_shapes(preds);
    const long out_len = preds[0].data.rows(), channels = preds[0].data.cols();
    SeriesMatrix fused(out_len, channels);
    const double inv_n = 1.0 / static_cast<double>(preds.size());
    for (const auto& p : preds) {
        for (long o = 0; o < out_len; ++o) {
            for (long c = 0; c < channels; ++c) fused(o, c) += inv_n * p.data(o, c);
        }
    }
    return fused;
}

}  // namespace dysco
