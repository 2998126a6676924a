#include "stancelab/collective.hpp"

#include <algorithm>
#include <cmath>

#include "stancelab/stats.hpp"

namespace stancelab {

std::vector<ActionEvent> collect_events(std::span<const TweetRecord> tweets) {
    std::vector<ActionEvent> events;
    for (const auto& t : tweets)
        for (const auto& h : t.hashtags)
            events.push_back({t.agent_id, h, t.timestamp});
    return events;
}

std::vector<PairSimilarity> pair_counts(std::vector<ActionEvent> events,
                                        int64_t window_seconds) {
    std::sort(events.begin(), events.end(),
              [](const ActionEvent& a, const ActionEvent& b) {
                  if (a.hashtag != b.hashtag) return a.hashtag < b.hashtag;
                  if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
                  return a.agent_id < b.agent_id;
              });

    std::map<std::pair<std::string, std::string>, int64_t> counts;
    size_t start = 0;
    for (size_t j = 0; j < events.size(); ++j) {
        if (j > 0 && events[j].hashtag != events[j - 1].hashtag) start = j;
        while (events[j].timestamp - events[start].timestamp > window_seconds)
            ++start;
        for (size_t i = start; i < j; ++i) {
            if (events[i].agent_id == events[j].agent_id) continue;
            auto key = events[i].agent_id < events[j].agent_id
                           ? std::make_pair(events[i].agent_id, events[j].agent_id)
                           : std::make_pair(events[j].agent_id, events[i].agent_id);
            counts[key] += 1;
        }
    }

    std::vector<PairSimilarity> out;
    out.reserve(counts.size());
    for (const auto& [key, count] : counts)
        out.push_back({key.first, key.second, count});
    return out;
}

std::vector<PairSimilarity> threshold_pairs(std::span<const PairSimilarity> pairs) {
    if (pairs.empty()) return {};
    std::vector<double> counts;
    counts.reserve(pairs.size());
    for (const auto& p : pairs) counts.push_back(static_cast<double>(p.count));
    double mu = mean(counts);
    double sigma = population_stddev(counts);
    double cutoff = mu + sigma;

    std::vector<PairSimilarity> retained;
    for (const auto& p : pairs)
        if (static_cast<double>(p.count) >= cutoff) retained.push_back(p);
    return retained;
}

std::unordered_set<std::string> flag_agents(
    std::span<const PairSimilarity> retained) {
    std::unordered_set<std::string> engaged;
    for (const auto& p : retained) {
        engaged.insert(p.agent_a);
        engaged.insert(p.agent_b);
    }
    return engaged;
}

NeighborhoodStats neighborhood_stats(const InteractionGraph& graph, int agent,
                                     int agent_stance,
                                     std::span<const int> stances,
                                     std::span<const char> is_bot,
                                     std::span<const char> is_collective) {
    NeighborhoodStats stats;
    TwoHopView view = two_hop_view(graph, agent);
    std::vector<int> hood;
    for (const auto& e : view.first_degree) hood.push_back(e.node);
    for (const auto& e : view.second_degree) hood.push_back(e.node);

    if (hood.empty()) {
        stats.empty_neighborhood = true;
        return stats;
    }
    stats.neighbor_count = static_cast<int>(hood.size());
    int bots = 0, opposite = 0, collective = 0, collective_opposite = 0;
    for (int nb : hood) {
        bool opp = agent_stance != 0 && stances[nb] == -agent_stance;
        if (is_bot[nb]) ++bots;
        if (opp) ++opposite;
        if (is_collective[nb]) {
            ++collective;
            if (opp) ++collective_opposite;
        }
    }
    double n = static_cast<double>(hood.size());
    stats.prop_bots = bots / n;
    stats.prop_opposite = opposite / n;
    stats.prop_collective = collective / n;
    stats.prop_collective_opposite = collective_opposite / n;
    return stats;
}

}  // namespace stancelab
