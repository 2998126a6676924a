#pragma once
// Synthetic dataset generator with known ground truth. Produces the exact
// input formats of the ingest stage plus a ground-truth table, sized for
// desk-scale end-to-end runs.
//
// Planted structure:
//   - flippers: opposite-stance neighborhoods with reciprocal ties to
//     high-conviction influencers; their final tweet flips stance.
//   - conviction bait: same shape, but the opposite-stance neighbors waver
//     (low stance strength) and never reciprocate.
//   - connection bait: opposite-stance neighbors are firm but isolated in
//     mostly same-as-bait surroundings (low connection), no reciprocation.
//   - tie bait: firm, well-connected opposite neighbors, one-way ties only.
//   - coordinated pairs: influencers co-posting the same hashtag in bursts.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stancelab/records.hpp"

namespace stancelab {

enum class NetworkModel { preferential_attachment, erdos_renyi };

struct SynthConfig {
    int agents = 5000;
    double pro_fraction = 0.90;         // final-stance share
    double bot_fraction = 0.32;
    double flip_fraction = 0.01;
    double pro_to_anti_share = 0.612;   // of flippers
    NetworkModel network = NetworkModel::preferential_attachment;
    int mean_attach_degree = 3;         // PA edges per joining node
    double tweets_per_agent = 3.0;      // authored baseline mean
    int coordinated_pairs = -1;         // -1: half the flipper count
    uint64_t seed = 42;

    // Cohort shaping; defaults tuned for the acceptance-scale runs.
    int influencers_per_flipper = 6;
    int reciprocal_interactions = 3;    // per flipper-influencer pair
    double bait_share = 0.35;           // per bait cohort, of flipper count
    int coordinated_posts = 30;         // bursts per coordinated pair
    double cross_camp_fraction = 0.05;
    double background_reciprocal = 0.01;
    double flipper_bot_rate = 0.537;
    double self_declared_bot_share = 0.05;  // of bots
    double singleton_share = 0.03;      // agents with a one-tweet timeline
};

struct GroundTruthRow {
    std::string agent_id;
    int innate_stance = 0;        // pre-flip stance
    bool is_bot = false;
    bool flipped = false;
    FlipDirection direction = FlipDirection::none;
    bool coordinated = false;
    std::string cohort;           // background, flipper, bait_*, influencer, waverer
};

struct SynthDataset {
    std::vector<TweetRecord> tweets;   // time-sorted
    std::vector<AgentRecord> agents;   // sorted by agent_id
    std::vector<GroundTruthRow> truth; // sorted by agent_id
};

// Pure function of the config; identical configs yield identical datasets.
SynthDataset generate(const SynthConfig& config);

// Writers for the ingest input formats.
void write_tweets_jsonl(const SynthDataset& data, const std::string& path);
void write_agents_csv(const SynthDataset& data, const std::string& path);
void write_ground_truth_csv(const SynthDataset& data, const std::string& path);

std::vector<GroundTruthRow> read_ground_truth_csv(const std::string& path);

struct RecoveryReport {
    double stance_recovery = 0.0;        // final-stance label agreement
    double flip_recovery = 0.0;          // recall of planted flippers
    double coordination_recovery = 0.0;  // recall of planted coordinated agents
};

// Compares pipeline outputs against the planted truth. Maps are keyed by
// agent_id; ids in the truth must exist in `final_stance`.
RecoveryReport verify_recovery(
    const std::vector<GroundTruthRow>& truth,
    const std::map<std::string, int>& final_stance,
    const std::map<std::string, bool>& predicted_flip,
    const std::map<std::string, bool>& collective_flag);

}  // namespace stancelab
