#include "dysco/pipeline.hpp"

#include <cmath>
#include <stdexcept>

namespace dysco {

Strategy strategy_from_string(const std::string& s) {
    if (s == "egds") return Strategy::Egds;
    if (s == "uniform") return Strategy::Uniform;
    if (s == "random") return Strategy::Random;
    if (s == "topk") return Strategy::TopkFrequency;
    if (s == "identity") return Strategy::Identity;
    throw std::invalid_argument("unknown strategy \"" + s +
                                "\" (expected egds|uniform|random|topk)");
}

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::Egds: return "egds";
        case Strategy::Uniform: return "uniform";
        case Strategy::Random: return "random";
        case Strategy::TopkFrequency: return "topk";
        case Strategy::Identity: return "identity";
    }
    return "?";
}

Ablation ablation_from_string(const std::string& s) {
    if (s == "full") return Ablation::Full;
    if (s == "no-hfed") return Ablation::NoHfed;
    if (s == "no-egds") return Ablation::NoEgds;
    if (s == "no-csim") return Ablation::NoCsim;
    throw std::invalid_argument("unknown ablation \"" + s +
                                "\" (expected full|no-hfed|no-egds|no-csim)");
}

std::string to_string(Ablation a) {
    switch (a) {
        case Ablation::Full: return "full";
        case Ablation::NoHfed: return "no-hfed";
        case Ablation::NoEgds: return "no-egds";
        case Ablation::NoCsim: return "no-csim";
    }
    return "?";
}

long PipelineConfig::topk_for(long i) const {
    const long h = hfed.horizons[static_cast<size_t>(i)];
    long k = topk_bins > 0 ? topk_bins
                           : static_cast<long>(std::llround(0.1 * static_cast<double>(h) / 2.0));
    if (k < 1) k = 1;
    if (k > h / 2) k = h / 2;
    return k;
}

void PipelineConfig::validate() const {
    hfed.validate(lookback_len());
    egds.validate();
    if (horizon < 1) throw std::invalid_argument("pipeline: horizon must be >= 1");
    if (channels < 1) throw std::invalid_argument("pipeline: channels must be >= 1");
    for (long i = 0; i < n_scales(); ++i) {
        const long h = hfed.horizons[static_cast<size_t>(i)];
        if (strategy == Strategy::Egds) {
            if (h < egds.n_segments) {
                throw std::invalid_argument("pipeline: horizon " + std::to_string(h) +
                                            " smaller than egds.n_segments " +
                                            std::to_string(egds.n_segments));
            }
            if (budget(i) < egds.n_segments) {
                throw std::invalid_argument("pipeline: budget " + std::to_string(budget(i)) +
                                            " for horizon " + std::to_string(h) +
                                            " below egds.n_segments " +
                                            std::to_string(egds.n_segments));
            }
        } else if (budget(i) < 1) {
            throw std::invalid_argument("pipeline: empty budget for horizon " + std::to_string(h));
        }
    }
}

}  // namespace dysco
