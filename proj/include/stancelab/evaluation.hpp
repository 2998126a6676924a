#pragma once
// Prediction metrics: macro-F1, confusion matrices by agent partition, and
// the group comparisons over neighborhood statistics.

#include <span>
#include <string>
#include <vector>

#include "stancelab/records.hpp"
#include "stancelab/stats.hpp"

namespace stancelab {

struct ConfusionMatrix {
    std::string partition;  // all, pro_to_anti, anti_to_pro, bots, non_bots
    int64_t tp = 0, fp = 0, tn = 0, fn = 0;

    int64_t population() const { return tp + fp + tn + fn; }
};

struct MetricsReport {
    int variant = 0;
    double macro_f1 = 0.0;
    double accuracy = 0.0;
    double precision_flip = 0.0, recall_flip = 0.0, f1_flip = 0.0;
    double precision_noflip = 0.0, recall_noflip = 0.0, f1_noflip = 0.0;
};

// Unweighted mean of per-class F1 over {flip, no-flip}; a class absent from
// the truth contributes F1 = 0 with a warning.
MetricsReport macro_f1(std::span<const char> predictions,
                       std::span<const char> truths);

struct AgentPartitions {
    // Per-agent attributes aligned with the prediction/truth vectors.
    std::vector<FlipDirection> truth_direction;
    std::vector<char> is_bot;
};

// One matrix per partition tag: all, the two flip directions (true flippers
// only), bots and non-bots.
std::vector<ConfusionMatrix> confusion(std::span<const char> predictions,
                                       std::span<const char> truths,
                                       const AgentPartitions& partitions);

struct NeighborhoodComparisonRow {
    std::string criterion;
    double mean_flip = 0.0, sd_flip = 0.0;
    double mean_noflip = 0.0, sd_noflip = 0.0;
    double t = 0.0, df = 0.0, p = 1.0;
    bool significant = false;
    bool degenerate = false;  // t-test preconditions failed
};

// Five criteria comparing flippers against non-flippers: the agents' own bot
// share and the four neighborhood proportions. Column arrays are aligned
// with `truth_flip`.
std::vector<NeighborhoodComparisonRow> compare_neighborhoods(
    std::span<const char> truth_flip, std::span<const char> is_bot,
    std::span<const double> prop_neighbor_bots,
    std::span<const double> prop_opposite, std::span<const double> prop_collective,
    std::span<const double> prop_collective_opposite);

}  // namespace stancelab
