#include "stancelab/evaluation.hpp"

#include <cmath>

#include "stancelab/errors.hpp"
#include "stancelab/log.hpp"

namespace stancelab {

namespace {

struct ClassScores {
    double precision = 0.0, recall = 0.0, f1 = 0.0;
};

ClassScores class_scores(int64_t tp, int64_t fp, int64_t fn) {
    ClassScores s;
    if (tp + fp > 0) s.precision = static_cast<double>(tp) / (tp + fp);
    if (tp + fn > 0) s.recall = static_cast<double>(tp) / (tp + fn);
    if (s.precision + s.recall > 0)
        s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
    return s;
}

}  // namespace

MetricsReport macro_f1(std::span<const char> predictions,
                       std::span<const char> truths) {
    if (predictions.size() != truths.size())
        throw DomainError("macro_f1: prediction/truth length mismatch");

    int64_t tp = 0, fp = 0, tn = 0, fn = 0;
    for (size_t i = 0; i < truths.size(); ++i) {
        if (truths[i] && predictions[i]) ++tp;
        else if (!truths[i] && predictions[i]) ++fp;
        else if (truths[i] && !predictions[i]) ++fn;
        else ++tn;
    }
    if (tp + fn == 0)
        log_warn("macro_f1: no positive examples in truth; flip F1 counted as 0");
    if (tn + fp == 0)
        log_warn("macro_f1: no negative examples in truth; no-flip F1 counted as 0");

    ClassScores flip = class_scores(tp, fp, fn);
    ClassScores noflip = class_scores(tn, fn, fp);

    MetricsReport report;
    report.precision_flip = flip.precision;
    report.recall_flip = flip.recall;
    report.f1_flip = flip.f1;
    report.precision_noflip = noflip.precision;
    report.recall_noflip = noflip.recall;
    report.f1_noflip = noflip.f1;
    report.macro_f1 = (flip.f1 + noflip.f1) / 2.0;
    report.accuracy = truths.empty()
                          ? 0.0
                          : static_cast<double>(tp + tn) / static_cast<double>(truths.size());
    return report;
}

std::vector<ConfusionMatrix> confusion(std::span<const char> predictions,
                                       std::span<const char> truths,
                                       const AgentPartitions& partitions) {
    const size_t n = truths.size();
    if (predictions.size() != n || partitions.truth_direction.size() != n ||
        partitions.is_bot.size() != n)
        throw DomainError("confusion: input arrays must align");

    ConfusionMatrix all{"all"}, pro{"pro_to_anti"}, anti{"anti_to_pro"},
        bots{"bots"}, non_bots{"non_bots"};

    auto tally = [](ConfusionMatrix& m, bool pred, bool truth) {
        if (truth && pred) ++m.tp;
        else if (!truth && pred) ++m.fp;
        else if (truth && !pred) ++m.fn;
        else ++m.tn;
    };

    for (size_t i = 0; i < n; ++i) {
        bool pred = predictions[i];
        bool truth = truths[i];
        tally(all, pred, truth);
        if (truth) {
            if (partitions.truth_direction[i] == FlipDirection::pro_to_anti)
                tally(pro, pred, truth);
            else if (partitions.truth_direction[i] == FlipDirection::anti_to_pro)
                tally(anti, pred, truth);
        }
        tally(partitions.is_bot[i] ? bots : non_bots, pred, truth);
    }
    return {all, pro, anti, bots, non_bots};
}

std::vector<NeighborhoodComparisonRow> compare_neighborhoods(
    std::span<const char> truth_flip, std::span<const char> is_bot,
    std::span<const double> prop_neighbor_bots,
    std::span<const double> prop_opposite, std::span<const double> prop_collective,
    std::span<const double> prop_collective_opposite) {
    const size_t n = truth_flip.size();
    if (is_bot.size() != n || prop_neighbor_bots.size() != n ||
        prop_opposite.size() != n || prop_collective.size() != n ||
        prop_collective_opposite.size() != n)
        throw DomainError("compare_neighborhoods: input arrays must align");

    size_t flippers = 0;
    for (char f : truth_flip) flippers += f ? 1 : 0;
    if (flippers == 0 || flippers == n)
        throw DomainError("compare_neighborhoods: both groups must be nonempty");

    std::vector<double> bot_indicator(n);
    for (size_t i = 0; i < n; ++i) bot_indicator[i] = is_bot[i] ? 1.0 : 0.0;

    struct Criterion {
        const char* name;
        std::span<const double> values;
    };
    const Criterion criteria[] = {
        {"proportion_of_bots", bot_indicator},
        {"proportion_of_neighbors_that_are_bots", prop_neighbor_bots},
        {"proportion_of_neighbors_of_opposite_stance", prop_opposite},
        {"proportion_of_neighbors_in_collective_expression", prop_collective},
        {"proportion_of_neighbors_in_collective_expression_and_opposite_stance",
         prop_collective_opposite},
    };

    std::vector<NeighborhoodComparisonRow> rows;
    for (const auto& c : criteria) {
        std::vector<double> flip_vals, noflip_vals;
        for (size_t i = 0; i < n; ++i)
            (truth_flip[i] ? flip_vals : noflip_vals).push_back(c.values[i]);

        NeighborhoodComparisonRow row;
        row.criterion = c.name;
        row.mean_flip = mean(flip_vals);
        row.sd_flip = sample_stddev(flip_vals);
        row.mean_noflip = mean(noflip_vals);
        row.sd_noflip = sample_stddev(noflip_vals);
        try {
            TTestResult test = welch_ttest(flip_vals, noflip_vals);
            row.t = test.t;
            row.df = test.df;
            row.p = test.p;
            row.significant = test.significant;
        } catch (const DomainError&) {
            row.degenerate = true;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace stancelab
