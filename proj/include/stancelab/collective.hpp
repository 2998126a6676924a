#pragma once
// Collective expression: synchronized same-hashtag posting between agent
// pairs and the neighborhood proportions built on top of the flags.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "stancelab/graph.hpp"
#include "stancelab/records.hpp"

namespace stancelab {

struct ActionEvent {
    std::string agent_id;
    std::string hashtag;  // lowercase
    int64_t timestamp = 0;
};

// One event per (tweet, hashtag).
std::vector<ActionEvent> collect_events(std::span<const TweetRecord> tweets);

struct PairSimilarity {
    std::string agent_a;  // a < b
    std::string agent_b;
    int64_t count = 0;
};

// For each hashtag, counts unordered pairs of events by distinct agents with
// |dt| <= window seconds; aggregated over hashtags per agent pair. Sorted by
// (agent_a, agent_b).
std::vector<PairSimilarity> pair_counts(std::vector<ActionEvent> events,
                                        int64_t window_seconds = 300);

// Keeps pairs with count >= mean + population standard deviation of counts.
std::vector<PairSimilarity> threshold_pairs(std::span<const PairSimilarity> pairs);

// Agents appearing in at least one retained pair.
std::unordered_set<std::string> flag_agents(std::span<const PairSimilarity> retained);

struct NeighborhoodStats {
    int neighbor_count = 0;  // distinct 1- and 2-degree neighbors
    double prop_bots = 0.0;
    double prop_opposite = 0.0;
    double prop_collective = 0.0;
    double prop_collective_opposite = 0.0;
    bool empty_neighborhood = false;
};

// Proportions over the agent's combined 1- and 2-degree neighborhood.
// `stances` maps node index to -1/0/+1; bots and collective flags likewise
// by node index.
NeighborhoodStats neighborhood_stats(const InteractionGraph& graph, int agent,
                                     int agent_stance,
                                     std::span<const int> stances,
                                     std::span<const char> is_bot,
                                     std::span<const char> is_collective);

}  // namespace stancelab
