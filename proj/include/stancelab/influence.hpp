#pragma once
// The incremental influence models: agent/neighbor stance scores, two-hop
// influence, susceptibility and the top-quantile flip rule.
//
// Variant ladder:
//   1  first-degree influence only, Y = X.B, flag fraction 0.10
//   2  adds second-degree neighbors, flag fraction 0.01
//   3  adds stance strength gamma:        Y = gamma * X.B
//   4  adds connection C:                 Y = gamma * C * X.B
//   5  adds reciprocity R to neighbors:   Y_nb = sign * (|gamma*C*X.B| + R)
//
// A score's sign is the agent's stance (pro +, anti -); the model formula
// supplies the magnitude.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "stancelab/graph.hpp"
#include "stancelab/records.hpp"

namespace stancelab {

// Canonical feature order shared by the feature matrix, the trained
// coefficient vector and every artifact that serializes either.
inline constexpr int kFeatureCount = 21;
std::span<const char* const> feature_names();
int feature_index(const std::string& name);  // -1 when unknown

struct CoefficientVector {
    std::vector<double> values;  // kFeatureCount entries, nonnegative
};

struct ModelConfig {
    int variant = 5;
    // Fraction of eligible agents flagged; defaults to the variant rule.
    double flag_fraction = 0.0;
    // Importance weight w_s applied inside gamma.
    double stance_weight = 1.0;

    static double default_flag_fraction(int variant) {
        return variant == 1 ? 0.10 : 0.01;
    }
};

// gamma = (labeled tweets expressing the final stance / labeled tweets) * w_s
double stance_strength(const AgentTimeline& timeline, double stance_weight);
double stance_strength(std::span<const int> stances, double stance_weight);

// Y for the agent in focus. `stance_sign` is the agent's stance (+1/-1; 0
// yields 0).
double agent_score(std::span<const double> x, std::span<const double> b,
                   double gamma, double c, int variant, int stance_sign);

// Y for a neighbor; adds the pairwise reciprocity R at variant 5.
double neighbor_score(std::span<const double> x, std::span<const double> b,
                      double gamma, double c, double r, int variant,
                      int stance_sign);

struct InfluenceResult {
    double value = 0.0;
    bool isolated = false;
};

// Weighted sum of neighbor scores over the two-hop view. Variant 1 uses the
// first degree only. `score_of` maps a node index to its neighbor score with
// respect to the focal agent.
InfluenceResult influence(const TwoHopView& view,
                          const std::function<double(int)>& score_of,
                          int variant);

double susceptibility(double influence_score, double agent_score);

struct SusceptibilityScore {
    std::string agent_id;
    double influence_score = 0.0;
    double score = 0.0;  // S = (I - Y)^2
};

// Flags the ceil(fraction * N) highest-S agents; ties resolved by ascending
// agent id. Depends only on S ranks.
std::vector<std::string> predict_flips(std::vector<SusceptibilityScore> scores,
                                       double flag_fraction);

// Leave-out-last-stance protocol: withhold each eligible agent's final
// labeled tweet; the remaining history drives gamma, C and X.
struct PredictionTask {
    std::string agent_id;
    AgentTimeline history;       // timeline minus the final labeled tweet
    int held_out_stance = 0;     // the withheld label
    int last_history_stance = 0; // final labeled stance within the history
    bool truth_flip = false;     // held_out_stance != last_history_stance
};

std::vector<PredictionTask> prepare_prediction_task(
    const std::map<std::string, AgentTimeline>& timelines);

// Columnwise z-scoring; sigma is the population deviation over the rows
// passed in, constant columns map to zero.
struct Standardizer {
    std::vector<double> means, sigmas;

    static Standardizer fit(std::span<const std::vector<double>> rows);
    std::vector<double> apply(std::span<const double> row) const;
};

}  // namespace stancelab
