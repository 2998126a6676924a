#include "stancelab/stance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stancelab/errors.hpp"
#include "stancelab/log.hpp"
#include "stancelab/util.hpp"

namespace stancelab {

using nlohmann::json;

// Raw JSON of data/lexicons/stance_hashtags.json, embedded at build time.
extern const char* const kBundledStanceLexiconJson;

HashtagLexicon HashtagLexicon::load(std::istream& in, const std::string& what) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(what + ": invalid JSON: " + e.what());
    }
    if (!j.is_object() || !j.contains("periods") || !j["periods"].is_array())
        throw ConfigError(what + ": expected an object with a 'periods' array");

    HashtagLexicon lex;
    for (const auto& p : j["periods"]) {
        LexiconPeriod period;
        auto start = parse_date(p.value("start", std::string()));
        auto end = parse_date(p.value("end", std::string()));
        if (!start || !end || *start >= *end)
            throw ConfigError(what + ": each period needs ISO 'start' < 'end'");
        period.start = *start;
        period.end = *end;
        for (const char* side : {"pro", "anti"}) {
            if (!p.contains(side) || !p[side].is_array())
                throw ConfigError(what + ": period missing '" +
                                  std::string(side) + "' array");
            for (const auto& h : p[side]) {
                std::string tag = normalize_tag(h.get<std::string>());
                if (tag.empty()) continue;
                (side == std::string("pro") ? period.pro : period.anti).insert(tag);
            }
        }
        for (const auto& tag : period.pro)
            if (period.anti.count(tag))
                throw ConfigError(what + ": hashtag '" + tag +
                                  "' listed pro and anti in the same period");
        lex.periods_.push_back(std::move(period));
    }
    if (lex.periods_.empty()) throw ConfigError(what + ": no periods defined");
    std::sort(lex.periods_.begin(), lex.periods_.end(),
              [](const LexiconPeriod& a, const LexiconPeriod& b) {
                  return a.start < b.start;
              });
    for (size_t i = 1; i < lex.periods_.size(); ++i)
        if (lex.periods_[i].start < lex.periods_[i - 1].end)
            throw ConfigError(what + ": periods overlap");
    return lex;
}

HashtagLexicon HashtagLexicon::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open stance lexicon: " + path);
    return load(in, path);
}

const HashtagLexicon& HashtagLexicon::bundled_default() {
    static const HashtagLexicon lex = [] {
        std::istringstream in(kBundledStanceLexiconJson);
        return load(in, "bundled stance lexicon");
    }();
    return lex;
}

size_t HashtagLexicon::period_for(int64_t timestamp) const {
    size_t best = 0;
    int64_t best_dist = INT64_MAX;
    for (size_t i = 0; i < periods_.size(); ++i) {
        const auto& p = periods_[i];
        if (timestamp >= p.start && timestamp < p.end) return i;
        int64_t dist = timestamp < p.start ? p.start - timestamp
                                           : timestamp - (p.end - 1);
        if (dist < best_dist) {
            best_dist = dist;
            best = i;
        }
    }
    return best;
}

int HashtagLexicon::seed_sign(const std::string& hashtag, int64_t timestamp) const {
    const auto& p = periods_[period_for(timestamp)];
    if (p.pro.count(hashtag)) return 1;
    if (p.anti.count(hashtag)) return -1;
    return 0;
}

int HashtagLexicon::seed_sign_any(const std::string& hashtag) const {
    bool pro = false, anti = false;
    for (const auto& p : periods_) {
        pro = pro || p.pro.count(hashtag) > 0;
        anti = anti || p.anti.count(hashtag) > 0;
    }
    if (pro && anti) return 0;
    return pro ? 1 : anti ? -1 : 0;
}

int BipartiteStanceGraph::user_index(const std::string& id) const {
    auto it = std::lower_bound(users.begin(), users.end(), id);
    if (it == users.end() || *it != id) return -1;
    return static_cast<int>(it - users.begin());
}

int BipartiteStanceGraph::hashtag_index(const std::string& tag) const {
    auto it = std::lower_bound(hashtags.begin(), hashtags.end(), tag);
    if (it == hashtags.end() || *it != tag) return -1;
    return static_cast<int>(it - hashtags.begin());
}

BipartiteStanceGraph build_bipartite(std::span<const TweetRecord> tweets) {
    BipartiteStanceGraph g;
    std::set<std::string> user_set, tag_set;
    for (const auto& t : tweets) {
        if (t.hashtags.empty()) continue;
        user_set.insert(t.agent_id);
        for (const auto& h : t.hashtags) tag_set.insert(h);
    }
    g.users.assign(user_set.begin(), user_set.end());
    g.hashtags.assign(tag_set.begin(), tag_set.end());
    g.hashtag_first_use.assign(g.hashtags.size(), INT64_MAX);

    std::map<std::pair<int, int>, int64_t> counts;
    for (const auto& t : tweets) {
        if (t.hashtags.empty()) continue;
        int u = g.user_index(t.agent_id);
        for (const auto& h : t.hashtags) {
            int hi = g.hashtag_index(h);
            counts[{u, hi}] += 1;
            g.hashtag_first_use[hi] = std::min(g.hashtag_first_use[hi], t.timestamp);
        }
    }
    g.user_edges.resize(g.users.size());
    g.hashtag_edges.resize(g.hashtags.size());
    for (const auto& [key, count] : counts) {
        int idx = static_cast<int>(g.edges.size());
        g.edges.push_back({key.first, key.second, count});
        g.user_edges[key.first].push_back(idx);
        g.hashtag_edges[key.second].push_back(idx);
    }
    return g;
}

namespace {

StanceScore make_score(double value, double tau) {
    StanceScore s;
    s.value = value;
    s.confidence = std::fabs(value);
    if (s.confidence >= tau) s.label = value > 0 ? 1 : -1;
    return s;
}

}  // namespace

PropagationResult propagate(const BipartiteStanceGraph& graph,
                            const HashtagLexicon& lexicon,
                            std::span<const TweetRecord> tweets,
                            const PropagationParams& params) {
    PropagationResult result;
    const size_t nu = graph.users.size();
    const size_t nh = graph.hashtags.size();

    // Seed signs resolved through the period of the hashtag's first observed
    // use; hashtags seeded in opposite camps across periods are dropped.
    std::vector<int> seed(nh, 0);
    int seed_count = 0;
    for (size_t i = 0; i < nh; ++i) {
        int sign = lexicon.seed_sign_any(graph.hashtags[i]);
        if (sign == 0 && graph.hashtag_first_use[i] != INT64_MAX) {
            sign = lexicon.seed_sign(graph.hashtags[i], graph.hashtag_first_use[i]);
        }
        seed[i] = sign;
        if (sign != 0) ++seed_count;
    }
    if (seed_count == 0) {
        log_warn("stance propagation: no seed hashtags present; "
                 "all scores remain unlabeled");
        result.no_seeds = true;
    }

    std::vector<double> user(nu, 0.0), tag(nh, 0.0);
    std::vector<double> user_next(nu), tag_next(nh);
    for (size_t i = 0; i < nh; ++i) tag[i] = seed[i];

    for (int iter = 0; iter < params.max_iter && !result.no_seeds; ++iter) {
        double max_delta = 0.0;
        // One synchronous sweep: everyone reads the previous buffers.
        for (size_t u = 0; u < nu; ++u) {
            double num = 0.0, den = 0.0;
            for (int e : graph.user_edges[u]) {
                const auto& edge = graph.edges[e];
                num += static_cast<double>(edge.count) * tag[edge.hashtag];
                den += static_cast<double>(edge.count);
            }
            user_next[u] = den > 0 ? num / den : 0.0;
            max_delta = std::max(max_delta, std::fabs(user_next[u] - user[u]));
        }
        for (size_t h = 0; h < nh; ++h) {
            if (seed[h] != 0) {
                tag_next[h] = seed[h];
                continue;
            }
            double num = 0.0, den = 0.0;
            for (int e : graph.hashtag_edges[h]) {
                const auto& edge = graph.edges[e];
                num += static_cast<double>(edge.count) * user[edge.user];
                den += static_cast<double>(edge.count);
            }
            tag_next[h] = den > 0 ? num / den : 0.0;
            max_delta = std::max(max_delta, std::fabs(tag_next[h] - tag[h]));
        }
        user.swap(user_next);
        tag.swap(tag_next);
        result.iterations = iter + 1;
        if (max_delta < params.tol) {
            result.converged = true;
            break;
        }
    }
    if (!result.converged && !result.no_seeds)
        log_warn("stance propagation did not converge after " +
                 std::to_string(result.iterations) + " iterations");

    for (size_t u = 0; u < nu; ++u)
        result.user_scores[graph.users[u]] = make_score(user[u], params.tau);
    for (size_t h = 0; h < nh; ++h)
        result.hashtag_scores[graph.hashtags[h]] = make_score(tag[h], params.tau);

    for (const auto& t : tweets) {
        if (t.hashtags.empty()) {
            result.tweet_scores[t.tweet_id] = StanceScore{};
            continue;
        }
        double sum = 0.0;
        for (const auto& h : t.hashtags) {
            int hi = graph.hashtag_index(h);
            sum += hi >= 0 ? tag[hi] : 0.0;
        }
        result.tweet_scores[t.tweet_id] =
            make_score(sum / static_cast<double>(t.hashtags.size()), params.tau);
    }
    return result;
}

int agent_final_stance(
    const AgentTimeline& timeline,
    const std::unordered_map<std::string, StanceScore>& tweet_scores) {
    for (auto it = timeline.tweets.rbegin(); it != timeline.tweets.rend(); ++it) {
        auto score = tweet_scores.find(it->tweet_id);
        if (score != tweet_scores.end() && score->second.label != 0)
            return score->second.label;
    }
    return 0;
}

}  // namespace stancelab
