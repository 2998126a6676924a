#include "stancelab/records.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "stancelab/errors.hpp"
#include "stancelab/log.hpp"
#include "stancelab/util.hpp"

namespace stancelab {

using nlohmann::json;

const char* tweet_kind_name(TweetKind kind) {
    switch (kind) {
        case TweetKind::original: return "original";
        case TweetKind::retweet: return "retweet";
        case TweetKind::quote: return "quote";
        case TweetKind::reply: return "reply";
    }
    return "?";
}

std::optional<TweetKind> tweet_kind_from(const std::string& name) {
    if (name == "original") return TweetKind::original;
    if (name == "retweet") return TweetKind::retweet;
    if (name == "quote") return TweetKind::quote;
    if (name == "reply") return TweetKind::reply;
    return std::nullopt;
}

int AgentTimeline::final_stance() const {
    for (auto it = stances.rbegin(); it != stances.rend(); ++it)
        if (*it != 0) return *it;
    return 0;
}

const char* flip_direction_name(FlipDirection d) {
    switch (d) {
        case FlipDirection::none: return "none";
        case FlipDirection::pro_to_anti: return "pro_to_anti";
        case FlipDirection::anti_to_pro: return "anti_to_pro";
    }
    return "?";
}

namespace {

std::string require_string(const json& j, const char* field, size_t lineno) {
    auto it = j.find(field);
    if (it == j.end() || !it->is_string() || it->get<std::string>().empty())
        throw ParseError("line " + std::to_string(lineno) +
                         ": missing or empty field '" + field + "'");
    return it->get<std::string>();
}

TweetRecord parse_tweet_json(const json& j, size_t lineno) {
    TweetRecord t;
    t.tweet_id = require_string(j, "tweet_id", lineno);
    t.agent_id = require_string(j, "agent_id", lineno);

    auto ts = j.find("timestamp");
    if (ts == j.end())
        throw ParseError("line " + std::to_string(lineno) +
                         ": missing field 'timestamp'");
    if (ts->is_number_integer()) {
        t.timestamp = ts->get<int64_t>();
    } else if (ts->is_string()) {
        auto parsed = parse_timestamp(ts->get<std::string>());
        if (!parsed)
            throw ParseError("line " + std::to_string(lineno) +
                             ": unparseable field 'timestamp': " +
                             ts->get<std::string>());
        t.timestamp = *parsed;
    } else {
        throw ParseError("line " + std::to_string(lineno) +
                         ": field 'timestamp' must be epoch seconds or ISO-8601");
    }
    if (t.timestamp <= 0)
        throw ParseError("line " + std::to_string(lineno) +
                         ": field 'timestamp' must be positive");

    if (auto it = j.find("text"); it != j.end() && it->is_string())
        t.text = it->get<std::string>();

    if (auto it = j.find("hashtags"); it != j.end()) {
        if (!it->is_array())
            throw ParseError("line " + std::to_string(lineno) +
                             ": field 'hashtags' must be an array");
        for (const auto& h : *it) {
            if (!h.is_string())
                throw ParseError("line " + std::to_string(lineno) +
                                 ": field 'hashtags' must contain strings");
            std::string tag = normalize_tag(h.get<std::string>());
            if (!tag.empty()) t.hashtags.push_back(tag);
        }
    }

    if (auto it = j.find("kind"); it != j.end()) {
        if (!it->is_string())
            throw ParseError("line " + std::to_string(lineno) +
                             ": field 'kind' must be a string");
        auto kind = tweet_kind_from(it->get<std::string>());
        if (!kind)
            throw ParseError("line " + std::to_string(lineno) +
                             ": unknown kind '" + it->get<std::string>() + "'");
        t.kind = *kind;
    }

    if (auto it = j.find("mentioned_agents"); it != j.end() && it->is_array())
        for (const auto& m : *it)
            if (m.is_string() && !m.get<std::string>().empty())
                t.mentioned_agents.push_back(m.get<std::string>());

    if (auto it = j.find("target_agent");
        it != j.end() && it->is_string() && !it->get<std::string>().empty())
        t.target_agent = it->get<std::string>();

    if ((t.kind == TweetKind::retweet || t.kind == TweetKind::quote) &&
        !t.target_agent)
        throw ParseError("line " + std::to_string(lineno) + ": kind '" +
                         tweet_kind_name(t.kind) + "' requires 'target_agent'");
    return t;
}

}  // namespace

std::vector<TweetRecord> parse_tweets(std::istream& in, const ParseOptions& opts) {
    std::vector<TweetRecord> out;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        try {
            json j = json::parse(line, nullptr, true);
            if (!j.is_object())
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected a JSON object");
            out.push_back(parse_tweet_json(j, lineno));
        } catch (const json::parse_error& e) {
            if (!opts.skip_malformed)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": invalid JSON: " + e.what());
            log_warn("skipping malformed line " + std::to_string(lineno));
            continue;
        } catch (const ParseError& e) {
            if (!opts.skip_malformed) throw;
            log_warn(std::string("skipping: ") + e.what());
            continue;
        }
        if (!seen_ids.insert(out.back().tweet_id).second)
            throw ParseError("line " + std::to_string(lineno) +
                             ": duplicate tweet_id '" + out.back().tweet_id + "'");
    }
    return out;
}

std::vector<TweetRecord> parse_tweets_file(const std::string& path,
                                           const ParseOptions& opts) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open tweet file: " + path);
    return parse_tweets(in, opts);
}

std::vector<AgentRecord> parse_agents(std::istream& in) {
    std::vector<AgentRecord> out;
    std::string line;
    size_t lineno = 0;
    std::vector<std::string> header;
    std::unordered_set<std::string> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        auto fields = split(line, ',');
        if (header.empty()) {
            header = fields;
            continue;
        }
        if (fields.size() < 3)
            throw ParseError("agents line " + std::to_string(lineno) +
                             ": expected agent_id,username,follower_count[,bot_probability]");
        AgentRecord a;
        a.agent_id = trim(fields[0]);
        a.username = trim(fields[1]);
        if (a.agent_id.empty())
            throw ParseError("agents line " + std::to_string(lineno) +
                             ": empty agent_id");
        if (!seen.insert(a.agent_id).second)
            throw ParseError("agents line " + std::to_string(lineno) +
                             ": duplicate agent_id '" + a.agent_id + "'");
        try {
            a.follower_count = std::stoll(trim(fields[2]));
        } catch (const std::exception&) {
            throw ParseError("agents line " + std::to_string(lineno) +
                             ": bad follower_count '" + fields[2] + "'");
        }
        if (a.follower_count < 0)
            throw ParseError("agents line " + std::to_string(lineno) +
                             ": negative follower_count");
        if (fields.size() > 3 && !trim(fields[3]).empty()) {
            double p = 0;
            try {
                p = std::stod(trim(fields[3]));
            } catch (const std::exception&) {
                throw ParseError("agents line " + std::to_string(lineno) +
                                 ": bad bot_probability '" + fields[3] + "'");
            }
            if (p < 0.0 || p > 1.0)
                throw ParseError("agents line " + std::to_string(lineno) +
                                 ": bot_probability outside [0,1]");
            a.bot_probability = p;
        }
        a.self_declared_bot = contains_ci(a.username, "bot");
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<AgentRecord> parse_agents_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open agent file: " + path);
    return parse_agents(in);
}

std::vector<TweetRecord> filter_vaccine(const std::vector<TweetRecord>& tweets) {
    std::vector<TweetRecord> out;
    for (const auto& t : tweets) {
        bool keep = std::any_of(t.hashtags.begin(), t.hashtags.end(),
                                [](const std::string& h) {
                                    return h.find("vaccine") != std::string::npos;
                                });
        if (keep) out.push_back(t);
    }
    return out;
}

OriginalSplit filter_original(const std::vector<TweetRecord>& tweets) {
    OriginalSplit split;
    for (const auto& t : tweets) {
        if (t.kind == TweetKind::original || t.kind == TweetKind::reply)
            split.stance_tweets.push_back(t);
        else
            split.edge_tweets.push_back(t);
    }
    return split;
}

std::map<std::string, AgentTimeline> build_timelines(
    const std::vector<TweetRecord>& tweets,
    const std::unordered_map<std::string, int>& stance_by_tweet) {
    std::unordered_set<std::string> known;
    for (const auto& t : tweets) known.insert(t.tweet_id);
    for (const auto& [id, stance] : stance_by_tweet) {
        if (!known.count(id))
            throw DomainError("stance map references unknown tweet_id '" + id + "'");
        if (stance < -1 || stance > 1)
            throw DomainError("stance for tweet '" + id + "' must be -1, 0 or +1");
    }

    std::map<std::string, AgentTimeline> timelines;
    for (const auto& t : tweets) {
        auto& tl = timelines[t.agent_id];
        tl.agent_id = t.agent_id;
        tl.tweets.push_back(t);
    }
    for (auto& [agent, tl] : timelines) {
        std::stable_sort(tl.tweets.begin(), tl.tweets.end(),
                         [](const TweetRecord& a, const TweetRecord& b) {
                             if (a.timestamp != b.timestamp)
                                 return a.timestamp < b.timestamp;
                             return a.tweet_id < b.tweet_id;
                         });
        tl.stances.reserve(tl.tweets.size());
        for (const auto& t : tl.tweets) {
            auto it = stance_by_tweet.find(t.tweet_id);
            int s = it == stance_by_tweet.end() ? 0 : it->second;
            tl.stances.push_back(s);
            if (s != 0) ++tl.labeled_count;
        }
        tl.eligible = tl.labeled_count >= 2;
    }
    return timelines;
}

FlipLabel label_flips(const AgentTimeline& timeline) {
    std::vector<int> labeled;
    for (int s : timeline.stances)
        if (s != 0) labeled.push_back(s);
    if (labeled.size() < 2)
        throw DomainError("agent '" + timeline.agent_id +
                          "' is ineligible: fewer than two labeled tweets");
    FlipLabel label;
    for (size_t i = 1; i < labeled.size(); ++i)
        if (labeled[i] != labeled[i - 1]) ++label.flip_count;
    label.flipped = labeled.front() != labeled.back();
    if (label.flipped)
        label.direction = labeled.front() > 0 ? FlipDirection::pro_to_anti
                                              : FlipDirection::anti_to_pro;
    return label;
}

}  // namespace stancelab
