#pragma once

#include <string>
#include <vector>

#include "dysco/egds.hpp"
#include "dysco/hfed.hpp"

namespace dysco {

// Sampling strategy applied to each pyramid level. Identity is the
// no-compression variant used by the EGDS ablation.
enum class Strategy { Egds, Uniform, Random, TopkFrequency, Identity };

enum class FuseMode { Gated, Mean };

enum class Ablation { Full, NoHfed, NoEgds, NoCsim };

Strategy strategy_from_string(const std::string& s);
std::string to_string(Strategy s);
Ablation ablation_from_string(const std::string& s);
std::string to_string(Ablation a);

// Everything the forward pass needs besides parameters.
struct PipelineConfig {
    HfedConfig hfed = HfedConfig::defaults();
    EgdsConfig egds;
    long horizon = 96;
    long channels = 1;
    Strategy strategy = Strategy::Egds;
    FuseMode fuse_mode = FuseMode::Gated;
    long topk_bins = 0;  // 0 = round(0.1 * H_i / 2) per scale

    long n_scales() const { return hfed.n_scales(); }
    long lookback_len() const { return hfed.horizons.back(); }

    // compressed length of scale i
    long budget(long i) const {
        return strategy == Strategy::Identity ? hfed.horizons[static_cast<size_t>(i)]
                                              : scale_budget(egds, hfed.horizons[static_cast<size_t>(i)]);
    }

    long topk_for(long i) const;

    void validate() const;
};

}  // namespace dysco
