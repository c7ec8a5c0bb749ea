#pragma once

#include <cstdint>
#include <vector>

#include "dysco/egds.hpp"
#include "dysco/hfed.hpp"
#include "dysco/pipeline.hpp"

namespace dysco {

// Fixed-stride mean pooling of the whole level down to T rows.
CompressedScale uniform_sample(const PyramidLevel& level, long t_budget);

// T distinct rows drawn without replacement, gathered in chronological order.
CompressedScale random_sample(const PyramidLevel& level, long t_budget, uint64_t seed);

// Per channel: keep the DC bin plus the k_freq largest-magnitude frequency
// bins (conjugate-symmetric), reconstruct, then pool uniformly to T rows.
CompressedScale topk_frequency_sample(const PyramidLevel& level, long t_budget, long k_freq);

// Level passed through untouched; the EGDS-ablation path.
CompressedScale identity_sample(const PyramidLevel& level);

// Spectral truncation of one channel, exposed for testing.
std::vector<double> spectral_truncate(const std::vector<double>& x, long k_freq);

// Leave-one-out pipeline variants:
//   no-hfed: single scale covering the raw lookback (kernel 1), EGDS active
//   no-egds: per-scale identity compression, predictors sized to H_i
//   no-csim: gate replaced by an unweighted mean
PipelineConfig build_variant(Ablation ablation, const PipelineConfig& base);

}  // namespace dysco
