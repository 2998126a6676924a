#include "stancelab/influence.hpp"

#include <algorithm>
#include <cmath>

#include "stancelab/errors.hpp"
#include "stancelab/log.hpp"

namespace stancelab {

namespace {

constexpr const char* kFeatureNames[kFeatureCount] = {
    // Endogenous (linguistic) block
    "tweet_count",
    "avg_word_length",
    "reading_difficulty",
    "positive_sentiment",
    "negative_sentiment",
    "own_stance",
    "num_identities",
    "num_pronouns",
    "first_person_pronouns",
    "second_person_pronouns",
    "third_person_pronouns",
    "num_exclamations",
    "num_family",
    "num_exclusive",
    "num_abusive",
    // Exogenous (network) block
    "followers",
    "eigenvector_centrality",
    "total_degree",
    "super_spreader",
    "betweenness_centrality",
    "super_friend",
};

double dot(std::span<const double> x, std::span<const double> b) {
    if (x.size() != b.size())
        throw DomainError("feature/coefficient dimension mismatch: " +
                          std::to_string(x.size()) + " vs " +
                          std::to_string(b.size()));
    double sum = 0.0;
    for (size_t i = 0; i < x.size(); ++i) sum += x[i] * b[i];
    return sum;
}

double base_magnitude(std::span<const double> x, std::span<const double> b,
                      double gamma, double c, int variant) {
    if (variant < 1 || variant > 5)
        throw DomainError("model variant must be in 1..5");
    double xb = dot(x, b);
    double value = xb;
    if (variant >= 3) value *= gamma;
    if (variant >= 4) value *= c;
    return std::fabs(value);
}

}  // namespace

std::span<const char* const> feature_names() {
    return {kFeatureNames, kFeatureCount};
}

int feature_index(const std::string& name) {
    for (int i = 0; i < kFeatureCount; ++i)
        if (name == kFeatureNames[i]) return i;
    return -1;
}

double stance_strength(std::span<const int> stances, double stance_weight) {
    if (stance_weight < 0)
        throw DomainError("stance_strength: weight must be nonnegative");
    int labeled = 0, final_stance = 0;
    for (int s : stances)
        if (s != 0) {
            ++labeled;
            final_stance = s;
        }
    if (labeled == 0)
        throw DomainError("stance_strength: no labeled tweets");
    int matching = 0;
    for (int s : stances)
        if (s == final_stance) ++matching;
    return (static_cast<double>(matching) / static_cast<double>(labeled)) *
           stance_weight;
}

double stance_strength(const AgentTimeline& timeline, double stance_weight) {
    return stance_strength(std::span<const int>(timeline.stances), stance_weight);
}

double agent_score(std::span<const double> x, std::span<const double> b,
                   double gamma, double c, int variant, int stance_sign) {
    if (stance_sign == 0) return 0.0;
    double sign = stance_sign > 0 ? 1.0 : -1.0;
    return sign * base_magnitude(x, b, gamma, c, variant);
}

double neighbor_score(std::span<const double> x, std::span<const double> b,
                      double gamma, double c, double r, int variant,
                      int stance_sign) {
    if (stance_sign == 0) return 0.0;
    double sign = stance_sign > 0 ? 1.0 : -1.0;
    double magnitude = base_magnitude(x, b, gamma, c, variant);
    if (variant == 5) magnitude += r;
    return sign * magnitude;
}

InfluenceResult influence(const TwoHopView& view,
                          const std::function<double(int)>& score_of,
                          int variant) {
    if (variant < 1 || variant > 5)
        throw DomainError("model variant must be in 1..5");
    InfluenceResult result;
    if (view.n == 0) {
        result.isolated = true;
        return result;
    }
    for (const auto& e : view.first_degree)
        result.value += e.weight * score_of(e.node);
    if (variant >= 2)
        for (const auto& e : view.second_degree)
            result.value += e.weight * score_of(e.node);
    return result;
}

double susceptibility(double influence_score, double agent_score) {
    double diff = influence_score - agent_score;
    return diff * diff;
}

std::vector<std::string> predict_flips(std::vector<SusceptibilityScore> scores,
                                       double flag_fraction) {
    if (scores.empty())
        throw DomainError("predict_flips: no susceptibility scores");
    if (flag_fraction <= 0.0 || flag_fraction > 1.0)
        throw DomainError("predict_flips: flag fraction must be in (0, 1]");
    std::sort(scores.begin(), scores.end(),
              [](const SusceptibilityScore& a, const SusceptibilityScore& b) {
                  if (a.score != b.score) return a.score > b.score;
                  return a.agent_id < b.agent_id;
              });
    size_t n = static_cast<size_t>(
        std::ceil(flag_fraction * static_cast<double>(scores.size())));
    n = std::min(n, scores.size());
    std::vector<std::string> flagged;
    flagged.reserve(n);
    for (size_t i = 0; i < n; ++i) flagged.push_back(scores[i].agent_id);
    std::sort(flagged.begin(), flagged.end());
    return flagged;
}

std::vector<PredictionTask> prepare_prediction_task(
    const std::map<std::string, AgentTimeline>& timelines) {
    std::vector<PredictionTask> tasks;
    for (const auto& [agent, timeline] : timelines) {
        if (!timeline.eligible) continue;
        // Locate the final labeled tweet.
        int last = -1;
        for (int i = static_cast<int>(timeline.stances.size()) - 1; i >= 0; --i)
            if (timeline.stances[i] != 0) {
                last = i;
                break;
            }
        if (last < 0) continue;

        PredictionTask task;
        task.agent_id = agent;
        task.held_out_stance = timeline.stances[last];
        task.history.agent_id = agent;
        for (size_t i = 0; i < timeline.tweets.size(); ++i) {
            if (static_cast<int>(i) == last) continue;
            task.history.tweets.push_back(timeline.tweets[i]);
            task.history.stances.push_back(timeline.stances[i]);
            if (timeline.stances[i] != 0) {
                ++task.history.labeled_count;
                task.last_history_stance = timeline.stances[i];
            }
        }
        task.history.eligible = task.history.labeled_count >= 2;
        if (task.history.labeled_count == 0) {
            log_warn("agent '" + agent +
                     "' left with no labeled history; excluded from prediction");
            continue;
        }
        task.truth_flip = task.held_out_stance != task.last_history_stance;
        tasks.push_back(std::move(task));
    }
    return tasks;
}

Standardizer Standardizer::fit(std::span<const std::vector<double>> rows) {
    Standardizer s;
    if (rows.empty()) return s;
    size_t k = rows.front().size();
    s.means.assign(k, 0.0);
    s.sigmas.assign(k, 0.0);
    double n = static_cast<double>(rows.size());
    for (const auto& row : rows)
        for (size_t j = 0; j < k; ++j) s.means[j] += row[j];
    for (size_t j = 0; j < k; ++j) s.means[j] /= n;
    for (const auto& row : rows)
        for (size_t j = 0; j < k; ++j) {
            double d = row[j] - s.means[j];
            s.sigmas[j] += d * d;
        }
    for (size_t j = 0; j < k; ++j) s.sigmas[j] = std::sqrt(s.sigmas[j] / n);
    return s;
}

std::vector<double> Standardizer::apply(std::span<const double> row) const {
    std::vector<double> out(row.size(), 0.0);
    for (size_t j = 0; j < row.size() && j < means.size(); ++j)
        out[j] = sigmas[j] > 0 ? (row[j] - means[j]) / sigmas[j] : 0.0;
    return out;
}

}  // namespace stancelab
