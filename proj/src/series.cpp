#include "dysco/series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dysco/rng.hpp"

namespace dysco {

SeriesMatrix SeriesView::to_matrix() const {
    SeriesMatrix m(rows, cols);
    std::copy(data, data + rows * cols, m.values().begin());
    return m;
}

namespace {

double parse_cell(const std::string& cell, long row, long col) {
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end > begin && (end[-1] == ' ' || end[-1] == '\t' || end[-1] == '\r')) --end;
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || ptr != end || begin == end) {
        throw std::runtime_error("load_csv: non-numeric cell \"" + cell + "\" at row " +
                                 std::to_string(row) + ", column " + std::to_string(col));
    }
    if (!std::isfinite(out)) {
        throw std::runtime_error("load_csv: non-finite value at row " + std::to_string(row) +
                                 ", column " + std::to_string(col));
    }
    return out;
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    cells.push_back(cur);
    return cells;
}

}  // namespace

SeriesMatrix load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_csv: cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("load_csv: empty file " + path);
    const long n_columns = static_cast<long>(split_line(line).size());
    if (n_columns < 2) throw std::runtime_error("load_csv: need a timestamp column plus data columns");

    std::vector<double> values;
    long n_rows = 0;
    // data rows are numbered from 1, header excluded
    while (std::getline(in, line)) {
        if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
        ++n_rows;
        auto cells = split_line(line);
        if (static_cast<long>(cells.size()) != n_columns) {
            throw std::runtime_error("load_csv: ragged row " + std::to_string(n_rows) + " has " +
                                     std::to_string(cells.size()) + " cells, expected " +
                                     std::to_string(n_columns));
        }
        for (long c = 1; c < n_columns; ++c) {
            values.push_back(parse_cell(cells[static_cast<size_t>(c)], n_rows, c));
        }
    }
    if (n_rows < 2) throw std::runtime_error("load_csv: need at least 2 data rows in " + path);

    SeriesMatrix m(n_rows, n_columns - 1);
    m.values() = std::move(values);
    return m;
}

void write_csv(const std::string& path, const SeriesMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    out << "date";
    for (long c = 0; c < m.cols(); ++c) out << ",ch" << c;
    out << "\n";
    char buf[40];
    for (long t = 0; t < m.rows(); ++t) {
        out << t;
        for (long c = 0; c < m.cols(); ++c) {
            std::snprintf(buf, sizeof(buf), "%.17g", m(t, c));
            out << ',' << buf;
        }
        out << "\n";
    }
}

SplitResult split(const SeriesMatrix& series, const SplitSpec& spec) {
    const long n = series.rows();
    long train_end = 0, val_end = 0;
    if (spec.boundaries) {
        train_end = spec.boundaries->first;
        val_end = spec.boundaries->second;
        if (!(0 < train_end && train_end <= val_end && val_end <= n)) {
            throw std::invalid_argument("split: boundaries must satisfy 0 < train_end <= val_end <= n_steps");
        }
    } else {
        const double sum = spec.train_fraction + spec.val_fraction + spec.test_fraction;
        if (std::abs(sum - 1.0) > 1e-9) {
            throw std::invalid_argument("split: fractions must sum to 1");
        }
        if (spec.train_fraction <= 0 || spec.val_fraction <= 0 || spec.test_fraction <= 0) {
            throw std::invalid_argument("split: fractions must be positive");
        }
        // floor train and val, remainder to test
        train_end = static_cast<long>(std::floor(spec.train_fraction * static_cast<double>(n)));
        val_end = train_end + static_cast<long>(std::floor(spec.val_fraction * static_cast<double>(n)));
    }
    if (train_end < 1 || val_end - train_end < 1 || n - val_end < 1) {
        throw std::invalid_argument("split: every split must be non-empty");
    }

    auto take = [&](long begin, long end) {
        SeriesMatrix part(end - begin, series.cols());
        std::copy(series.row(begin), series.row(begin) + (end - begin) * series.cols(),
                  part.values().begin());
        return part;
    };
    return SplitResult{take(0, train_end), take(train_end, val_end), take(val_end, n)};
}

NormStats fit_normalizer(const SeriesMatrix& train) {
    if (train.rows() < 1) throw std::invalid_argument("fit_normalizer: empty training split");
    const long n = train.rows(), c_count = train.cols();
    NormStats stats;
    stats.mean.resize(static_cast<size_t>(c_count));
    stats.stddev.resize(static_cast<size_t>(c_count));
    for (long c = 0; c < c_count; ++c) {
        long double acc = 0.0L;
        for (long t = 0; t < n; ++t) acc += train(t, c);
        const double mean = static_cast<double>(acc / n);
        long double sq = 0.0L;
        for (long t = 0; t < n; ++t) {
            const double d = train(t, c) - mean;
            sq += d * d;
        }
        const double var = static_cast<double>(sq / n);  // population variance
        if (var <= 0.0) {
            throw std::invalid_argument("fit_normalizer: channel " + std::to_string(c) +
                                        " has zero variance");
        }
        stats.mean[static_cast<size_t>(c)] = mean;
        stats.stddev[static_cast<size_t>(c)] = std::sqrt(var);
    }
    return stats;
}

SeriesMatrix apply_normalizer(const NormStats& stats, const SeriesMatrix& m) {
    if (static_cast<long>(stats.mean.size()) != m.cols()) {
        throw std::invalid_argument("apply_normalizer: channel count mismatch");
    }
    SeriesMatrix out(m.rows(), m.cols());
    for (long t = 0; t < m.rows(); ++t) {
        for (long c = 0; c < m.cols(); ++c) {
            const size_t sc = static_cast<size_t>(c);
            out(t, c) = (m(t, c) - stats.mean[sc]) / stats.stddev[sc];
        }
    }
    return out;
}

SeriesMatrix invert_normalizer(const NormStats& stats, const SeriesMatrix& m) {
    if (static_cast<long>(stats.mean.size()) != m.cols()) {
        throw std::invalid_argument("invert_normalizer: channel count mismatch");
    }
    SeriesMatrix out(m.rows(), m.cols());
    for (long t = 0; t < m.rows(); ++t) {
        for (long c = 0; c < m.cols(); ++c) {
            const size_t sc = static_cast<size_t>(c);
            out(t, c) = m(t, c) * stats.stddev[sc] + stats.mean[sc];
        }
    }
    return out;
}

std::vector<WindowPair> make_windows(const SeriesMatrix& series, long lookback_len,
                                     long horizon, long stride) {
    if (lookback_len < 1 || horizon < 1 || stride < 1) {
        throw std::invalid_argument("make_windows: lookback, horizon and stride must be >= 1");
    }
    if (series.rows() < lookback_len + horizon) {
        throw std::invalid_argument("make_windows: series too short (" +
                                    std::to_string(series.rows()) + " rows, need >= " +
                                    std::to_string(lookback_len + horizon) + ")");
    }
    std::vector<WindowPair> out;
    SeriesView view(series);
    for (long origin = lookback_len; origin + horizon <= series.rows(); origin += stride) {
        WindowPair w;
        w.lookback = view.slice(origin - lookback_len, origin).to_matrix();
        w.target = view.slice(origin, origin + horizon).to_matrix();
        w.origin_index = origin;
        out.push_back(std::move(w));
    }
    return out;
}

WindowPlan plan_windows(const SeriesMatrix& series, long lookback_len, long horizon,
                        long stride, long origin_lo, long origin_hi) {
    if (stride < 1) throw std::invalid_argument("plan_windows: stride must be >= 1");
    WindowPlan plan;
    plan.series = &series;
    plan.lookback_len = lookback_len;
    plan.horizon = horizon;
    const long lo = std::max(lookback_len, origin_lo);
    const long hi = std::min(origin_hi, series.rows() - horizon + 1);
    for (long origin = lo; origin < hi; origin += stride) plan.origins.push_back(origin);
    return plan;
}

SeriesMatrix synth_generate(const SynthSpec& spec, uint64_t seed) {
    if (spec.length < 1 || spec.channels < 1) {
        throw std::invalid_argument("synth_generate: length and channels must be >= 1");
    }
    for (const auto& b : spec.bursts) {
        if (b.start < 0 || b.width < 1 || b.start + b.width > spec.length) {
            throw std::invalid_argument("synth_generate: burst [" + std::to_string(b.start) + ", " +
                                        std::to_string(b.start + b.width) +
                                        ") outside series bounds");
        }
    }

    // shared additive burst track
    std::vector<double> burst_track(static_cast<size_t>(spec.length), 0.0);
    for (const auto& b : spec.bursts) {
        for (long t = b.start; t < b.start + b.width; ++t) {
            const double s = std::sin(M_PI * static_cast<double>(t - b.start) / static_cast<double>(b.width));
            burst_track[static_cast<size_t>(t)] += b.amplitude * s * s;
        }
    }

    Rng rng(derive_seed(seed, "synth"));
    SeriesMatrix m(spec.length, spec.channels);
    for (long t = 0; t < spec.length; ++t) {
        const double base = spec.trend_slope * static_cast<double>(t) + burst_track[static_cast<size_t>(t)];
        for (long c = 0; c < spec.channels; ++c) {
            double v = base;
            for (const auto& s : spec.sinusoids) {
                v += s.amplitude * std::sin(2.0 * M_PI * static_cast<double>(t) / s.period +
                                            s.phase + spec.channel_phase_shift * static_cast<double>(c));
            }
            if (spec.noise_std > 0.0) v += spec.noise_std * rng.normal();
            m(t, c) = v;
        }
    }
    return m;
}

}  // namespace dysco
