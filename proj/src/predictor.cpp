#include "dysco/predictor.hpp"

#include <stdexcept>

namespace dysco {

SeriesMatrix predict_linear(SeriesView x, const LinearPredictorParams& params) {
    if (x.rows != params.input_len) {
        throw std::invalid_argument("predict_linear: input has " + std::to_string(x.rows) +
                                    " rows, weight expects " + std::to_string(params.input_len));
    }
    const long out_len = params.horizon, channels = x.cols;
    SeriesMatrix y(out_len, channels);
    for (long o = 0; o < out_len; ++o) {
        const double b = params.bias[static_cast<size_t>(o)];
        for (long c = 0; c < channels; ++c) y(o, c) = b;
    }
    for (long t = 0; t < params.input_len; ++t) {
        const double* w_row = params.weight.data() + t * out_len;
        const double* x_row = x.row(t);
        for (long o = 0; o < out_len; ++o) {
            const double w = w_row[o];
            double* y_row = y.row(o);
            for (long c = 0; c < channels; ++c) y_row[c] += w * x_row[c];
        }
    }
    return y;
}

ScalePrediction predict_scale(const CompressedScale& scale, const LinearPredictorParams& params) {
    return ScalePrediction{scale.scale_index, predict_linear(SeriesView(scale.data), params)};
}

ComplexityReport count_params(long lookback_len, long horizon, const std::vector<long>& budgets,
                              bool include_bias) {
    ComplexityReport report;
    report.quantity = "parameters_per_channel";
    report.baseline = static_cast<long long>(lookback_len) * horizon;
    for (long t : budgets) report.compressed += static_cast<long long>(t) * horizon;
    if (include_bias) {
        report.baseline += horizon;
        report.compressed += static_cast<long long>(budgets.size()) * horizon;
        report.note = "bias terms included";
    } else {
        report.note = "bias terms excluded from the comparison";
    }
    report.reduction_pct =
        100.0 * (1.0 - static_cast<double>(report.compressed) / static_cast<double>(report.baseline));
    return report;
}

ComplexityReport count_attention_flops(long lookback_len, long budget, long n_scales,
                                       long head_dim) {
    if (lookback_len < 1 || budget < 1 || n_scales < 1 || head_dim < 1) {
        throw std::invalid_argument("count_attention_flops: arguments must be positive");
    }
    ComplexityReport report;
    report.quantity = "attention_flops";
    report.baseline = static_cast<long long>(lookback_len) * lookback_len * head_dim;
    report.compressed = static_cast<long long>(n_scales) * budget * budget * head_dim;
    report.reduction_pct =
        100.0 * (1.0 - static_cast<double>(report.compressed) / static_cast<double>(report.baseline));
    return report;
}

}  // namespace dysco
