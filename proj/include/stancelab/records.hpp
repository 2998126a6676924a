#pragma once
// Canonical record types and input parsing: tweets, agent metadata,
// per-agent timelines and ground-truth flip labels.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace stancelab {

enum class TweetKind { original, retweet, quote, reply };

const char* tweet_kind_name(TweetKind kind);
std::optional<TweetKind> tweet_kind_from(const std::string& name);

struct TweetRecord {
    std::string tweet_id;
    std::string agent_id;
    int64_t timestamp = 0;  // UTC epoch seconds
    std::string text;
    std::vector<std::string> hashtags;  // lowercase, '#'-stripped
    TweetKind kind = TweetKind::original;
    std::vector<std::string> mentioned_agents;
    std::optional<std::string> target_agent;
};

struct AgentRecord {
    std::string agent_id;
    std::string username;
    int64_t follower_count = 0;
    std::optional<double> bot_probability;
    bool self_declared_bot = false;  // "bot" in username, case-insensitive
};

// Chronological authored tweets of one agent with parallel stance labels
// (+1 pro, -1 anti, 0 unlabeled).
struct AgentTimeline {
    std::string agent_id;
    std::vector<TweetRecord> tweets;
    std::vector<int> stances;
    int labeled_count = 0;   // tweets with a nonzero stance
    bool eligible = false;   // >= 2 labeled tweets; others still lend influence

    // Stance of the last labeled tweet, 0 when none are labeled.
    int final_stance() const;
};

enum class FlipDirection { none, pro_to_anti, anti_to_pro };

const char* flip_direction_name(FlipDirection d);

struct FlipLabel {
    bool flipped = false;
    FlipDirection direction = FlipDirection::none;
    int flip_count = 0;  // adjacent sign changes in the labeled subsequence
};

struct ParseOptions {
    // Skip malformed lines with a warning instead of aborting the parse.
    bool skip_malformed = false;
};

// One JSON object per line; see README for the field schema. Hashtags are
// normalized to lowercase with '#' stripped. Duplicate tweet_id is always an
// error.
std::vector<TweetRecord> parse_tweets(std::istream& in,
                                      const ParseOptions& opts = {});
std::vector<TweetRecord> parse_tweets_file(const std::string& path,
                                           const ParseOptions& opts = {});

// CSV with header agent_id,username,follower_count,bot_probability.
std::vector<AgentRecord> parse_agents(std::istream& in);
std::vector<AgentRecord> parse_agents_file(const std::string& path);

// Keeps tweets with "vaccine" as a substring of any hashtag.
std::vector<TweetRecord> filter_vaccine(const std::vector<TweetRecord>& tweets);

// Originals and replies carry the author's own stance; retweets and quotes
// only feed the interaction graph.
struct OriginalSplit {
    std::vector<TweetRecord> stance_tweets;
    std::vector<TweetRecord> edge_tweets;
};
OriginalSplit filter_original(const std::vector<TweetRecord>& tweets);

// Assembles time-sorted per-agent timelines. `stance_by_tweet` maps tweet_id
// to a label; missing ids default to 0, unknown ids are an error.
std::map<std::string, AgentTimeline> build_timelines(
    const std::vector<TweetRecord>& tweets,
    const std::unordered_map<std::string, int>& stance_by_tweet);

// Flip label from the first/last nonzero stances; throws DomainError for
// timelines with fewer than two labeled tweets.
FlipLabel label_flips(const AgentTimeline& timeline);

}  // namespace stancelab
