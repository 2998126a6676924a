#pragma once
// Stance labeling: seed hashtag lexicons per time period and clamped-seed
// label propagation over the user-hashtag bipartite graph.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "stancelab/records.hpp"

namespace stancelab {

struct LexiconPeriod {
    int64_t start = 0;  // inclusive, epoch seconds
    int64_t end = 0;    // exclusive
    std::set<std::string> pro;
    std::set<std::string> anti;
};

class HashtagLexicon {
public:
    static HashtagLexicon load(std::istream& in, const std::string& what);
    static HashtagLexicon load_file(const std::string& path);
    // The built-in seed lists covering April 2020 through March 2021.
    static const HashtagLexicon& bundled_default();

    const std::vector<LexiconPeriod>& periods() const { return periods_; }

    // +1/-1 if the hashtag is a seed in the period covering `timestamp`
    // (nearest period when outside all), 0 otherwise.
    int seed_sign(const std::string& hashtag, int64_t timestamp) const;

    // Union over periods; a hashtag seeded in opposite camps across periods
    // is not usable as a seed and yields 0.
    int seed_sign_any(const std::string& hashtag) const;

private:
    size_t period_for(int64_t timestamp) const;

    std::vector<LexiconPeriod> periods_;  // sorted by start
};

struct BipartiteStanceGraph {
    struct Edge {
        int user = 0;
        int hashtag = 0;
        int64_t count = 0;
    };

    std::vector<std::string> users;     // index -> agent_id
    std::vector<std::string> hashtags;  // index -> hashtag
    std::vector<Edge> edges;
    std::vector<std::vector<int>> user_edges;     // per-user edge indices
    std::vector<std::vector<int>> hashtag_edges;  // per-hashtag edge indices

    int user_index(const std::string& id) const;
    int hashtag_index(const std::string& tag) const;

    // Earliest observed usage timestamp per hashtag, used for period lookup.
    std::vector<int64_t> hashtag_first_use;
};

// Edge weight = number of times the user posted the hashtag.
BipartiteStanceGraph build_bipartite(std::span<const TweetRecord> tweets);

struct StanceScore {
    double value = 0.0;       // in [-1, 1]
    double confidence = 0.0;  // |value|
    int label = 0;            // sign(value) if |value| >= tau else 0
};

struct PropagationParams {
    double tau = 0.001;
    int max_iter = 100;
    double tol = 1e-6;
};

struct PropagationResult {
    std::unordered_map<std::string, StanceScore> user_scores;
    std::unordered_map<std::string, StanceScore> hashtag_scores;
    std::unordered_map<std::string, StanceScore> tweet_scores;
    int iterations = 0;
    bool converged = false;
    bool no_seeds = false;
};

// Synchronous double-buffered averaging with seeds clamped to +/-1 every
// iteration. Tweet score = mean of the tweet's hashtag scores.
PropagationResult propagate(const BipartiteStanceGraph& graph,
                            const HashtagLexicon& lexicon,
                            std::span<const TweetRecord> tweets,
                            const PropagationParams& params = {});

// Label of the last tweet with a nonzero label; 0 when none.
int agent_final_stance(
    const AgentTimeline& timeline,
    const std::unordered_map<std::string, StanceScore>& tweet_scores);

}  // namespace stancelab
