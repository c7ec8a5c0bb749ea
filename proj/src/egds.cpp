#include "dysco/egds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dysco {

void EgdsConfig::validate() const {
    if (n_segments < 1) throw std::invalid_argument("egds: n_segments must be >= 1");
    if (k_base < 1) throw std::invalid_argument("egds: k_base must be >= 1");
    if (beta < 0.0 || beta >= 1.0) throw std::invalid_argument("egds: beta must be in [0,1)");
    if (target_rate <= 0.0 || target_rate > 1.0) {
        throw std::invalid_argument("egds: target_rate must be in (0,1]");
    }
    if (scorer_hidden < 1) throw std::invalid_argument("egds: scorer_hidden must be >= 1");
}

std::vector<SegmentSlice> segment(long level_rows, long n) {
    if (n < 1) throw std::invalid_argument("segment: n must be >= 1");
    if (level_rows < n) {
        throw std::invalid_argument("segment: level has " + std::to_string(level_rows) +
                                    " rows, fewer than n = " + std::to_string(n));
    }
    const long base = level_rows / n;
    const long extra = level_rows % n;  // oldest segments absorb the remainder
    std::vector<SegmentSlice> slices;
    slices.reserve(static_cast<size_t>(n));
    long pos = 0;
    for (long s = 0; s < n; ++s) {
        const long len = base + (s < extra ? 1 : 0);
        slices.push_back(SegmentSlice{pos, pos + len, n - s});
        pos += len;
    }
    return slices;
}

std::vector<double> segment_mean(SeriesView seg) {
    std::vector<double> mean(static_cast<size_t>(seg.cols), 0.0);
    for (long t = 0; t < seg.rows; ++t) {
        const double* row = seg.row(t);
        for (long c = 0; c < seg.cols; ++c) mean[static_cast<size_t>(c)] += row[c];
    }
    for (auto& v : mean) v /= static_cast<double>(seg.rows);
    return mean;
}

static double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

double score_segment_trace(SeriesView seg, const ScorerParams& params,
                           std::vector<double>& mean_out, std::vector<double>& preact_out) {
    if (seg.rows < 1) throw std::invalid_argument("score_segment: empty segment");
    if (params.channels != seg.cols) {
        throw std::invalid_argument("score_segment: scorer expects " +
                                    std::to_string(params.channels) + " channels, segment has " +
                                    std::to_string(seg.cols));
    }
    const long h = params.hidden;
    mean_out = segment_mean(seg);
    preact_out.assign(static_cast<size_t>(h), 0.0);
    for (long u = 0; u < h; ++u) {
        double a = params.hidden_b[static_cast<size_t>(u)];
        for (long c = 0; c < params.channels; ++c) {
            a += params.hidden_w[static_cast<size_t>(c * h + u)] * mean_out[static_cast<size_t>(c)];
        }
        preact_out[static_cast<size_t>(u)] = a;
    }
    double z = params.out_b;
    for (long u = 0; u < h; ++u) {
        z += params.out_w[static_cast<size_t>(u)] * std::max(0.0, preact_out[static_cast<size_t>(u)]);
    }
    return sigmoid(z);
}

double score_segment(SeriesView seg, const ScorerParams& params) {
    std::vector<double> mean, preact;
    return score_segment_trace(seg, params, mean, preact);
}

double dynamic_kernel(long j, long n, double alpha, const EgdsConfig& cfg) {
    return static_cast<double>(cfg.k_base) *
           (1.0 + static_cast<double>(j) / static_cast<double>(n)) * (1.0 - cfg.beta * alpha);
}

std::vector<long> apportion_budget(const std::vector<long>& segment_lengths,
                                   const std::vector<double>& kernels, long t_target) {
    const long n = static_cast<long>(segment_lengths.size());
    if (n == 0 || kernels.size() != segment_lengths.size()) {
        throw std::invalid_argument("apportion_budget: inconsistent inputs");
    }
    if (t_target < n) {
        throw std::invalid_argument("apportion_budget: budget " + std::to_string(t_target) +
                                    " below segment count " + std::to_string(n));
    }
    long total_rows = 0;
    for (long len : segment_lengths) total_rows += len;
    if (t_target > total_rows) {
        throw std::invalid_argument("apportion_budget: budget exceeds available rows");
    }

    std::vector<double> share(static_cast<size_t>(n));
    double weight_sum = 0.0;
    for (long i = 0; i < n; ++i) {
        if (kernels[static_cast<size_t>(i)] <= 0.0) {
            throw std::invalid_argument("apportion_budget: kernels must be positive");
        }
        weight_sum += static_cast<double>(segment_lengths[static_cast<size_t>(i)]) /
                      kernels[static_cast<size_t>(i)];
    }
    for (long i = 0; i < n; ++i) {
        const double w = static_cast<double>(segment_lengths[static_cast<size_t>(i)]) /
                         kernels[static_cast<size_t>(i)];
        share[static_cast<size_t>(i)] = static_cast<double>(t_target) * w / weight_sum;
    }

    std::vector<long> lambda(static_cast<size_t>(n));
    long assigned = 0;
    for (long i = 0; i < n; ++i) {
        long v = static_cast<long>(std::floor(share[static_cast<size_t>(i)]));
        v = std::clamp(v, 1L, segment_lengths[static_cast<size_t>(i)]);
        lambda[static_cast<size_t>(i)] = v;
        assigned += v;
    }

    // entries are oldest-first, so j = n - index; ties favor smaller j
    auto j_of = [n](long idx) { return n - idx; };
    while (assigned < t_target) {
        long best = -1;
        double best_rem = 0.0;
        for (long i = 0; i < n; ++i) {
            if (lambda[static_cast<size_t>(i)] >= segment_lengths[static_cast<size_t>(i)]) continue;
            const double rem = share[static_cast<size_t>(i)] -
                               static_cast<double>(lambda[static_cast<size_t>(i)]);
            if (best < 0 || rem > best_rem || (rem == best_rem && j_of(i) < j_of(best))) {
                best = i;
                best_rem = rem;
            }
        }
        ++lambda[static_cast<size_t>(best)];
        ++assigned;
    }
    while (assigned > t_target) {
        long best = -1;
        double best_rem = 0.0;
        for (long i = 0; i < n; ++i) {
            if (lambda[static_cast<size_t>(i)] <= 1) continue;
            const double rem = share[static_cast<size_t>(i)] -
                               static_cast<double>(lambda[static_cast<size_t>(i)]);
            if (best < 0 || rem < best_rem || (rem == best_rem && j_of(i) > j_of(best))) {
                best = i;
                best_rem = rem;
            }
        }
        --lambda[static_cast<size_t>(best)];
        --assigned;
    }
    return lambda;
}

SeriesMatrix adaptive_pool(SeriesView seg, long lambda) {
    const long m = seg.rows;
    if (lambda < 1 || lambda > m) {
        throw std::invalid_argument("adaptive_pool: output length " + std::to_string(lambda) +
                                    " not in [1, " + std::to_string(m) + "]");
    }
    SeriesMatrix out(lambda, seg.cols);
    for (long p = 0; p < lambda; ++p) {
        const long lo = (p * m) / lambda;
        const long hi = ((p + 1) * m) / lambda;
        for (long c = 0; c < seg.cols; ++c) {
            double acc = 0.0;
            for (long t = lo; t < hi; ++t) acc += seg.at(t, c);
            out(p, c) = acc / static_cast<double>(hi - lo);
        }
    }
    return out;
}

long scale_budget(const EgdsConfig& cfg, long horizon) {
    return static_cast<long>(std::llround(cfg.target_rate * static_cast<double>(horizon)));
}

CompressedScale compress(const PyramidLevel& level, const EgdsConfig& cfg,
                         const ScorerParams& params) {
    cfg.validate();
    const long budget = scale_budget(cfg, level.horizon);
    if (budget < cfg.n_segments) {
        throw std::invalid_argument("compress: budget " + std::to_string(budget) +
                                    " below n_segments " + std::to_string(cfg.n_segments));
    }
    const auto slices = segment(level.data.rows(), cfg.n_segments);
    const SeriesView level_view(level.data);

    std::vector<long> lengths;
    std::vector<double> kernels;
    std::vector<double> alphas;
    lengths.reserve(slices.size());
    kernels.reserve(slices.size());
    alphas.reserve(slices.size());
    for (const auto& s : slices) {
        const double alpha = score_segment(level_view.slice(s.begin, s.end), params);
        alphas.push_back(alpha);
        kernels.push_back(dynamic_kernel(s.j, cfg.n_segments, alpha, cfg));
        lengths.push_back(s.end - s.begin);
    }
    const auto lambdas = apportion_budget(lengths, kernels, budget);

    CompressedScale out;
    out.scale_index = level.scale_index;
    out.data = SeriesMatrix(budget, level.data.cols());
    long row = 0;
    for (size_t i = 0; i < slices.size(); ++i) {
        const auto& s = slices[i];
        SeriesMatrix pooled = adaptive_pool(level_view.slice(s.begin, s.end), lambdas[i]);
        std::copy(pooled.values().begin(), pooled.values().end(), out.data.row(row));
        row += pooled.rows();
        out.segments.push_back(SegmentRecord{s.j, s.begin, s.end, alphas[i], kernels[i], lambdas[i]});
    }
    return out;
}

}  // namespace dysco
