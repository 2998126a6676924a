#pragma once
// Directed agent interaction multigraph with hop-decayed influence weights,
// centralities, connection and reciprocity.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "stancelab/records.hpp"

namespace stancelab {

enum class EdgeKind { mention = 0, retweet = 1, quote = 2, reply = 3 };
inline constexpr int kEdgeKinds = 4;

const char* edge_kind_name(EdgeKind kind);

class InteractionGraph {
public:
    // One edge per (src, dst, kind) with aggregated counts. Mentions,
    // retweet/quote targets and reply targets all create edges; self-loops
    // are dropped. Nodes referenced only as targets are created on the fly.
    static InteractionGraph build(std::span<const TweetRecord> tweets);

    int add_node(const std::string& id);
    void add_edge(const std::string& src, const std::string& dst, EdgeKind kind,
                  int64_t count = 1);

    int node_count() const { return static_cast<int>(ids_.size()); }
    const std::string& id(int node) const { return ids_[node]; }
    std::optional<int> index(const std::string& id) const;

    // Undirected simple neighbor set (union of edge directions), sorted.
    const std::vector<int>& neighbors(int node) const;

    int64_t edge_count(int src, int dst, EdgeKind kind) const;
    // Sum of directed counts over all kinds.
    int64_t edge_count_total(int src, int dst) const;

    // Directed simple degree: distinct out-neighbors plus distinct
    // in-neighbors.
    int total_degree(int node) const;
    // Outgoing interaction volume over retweet, mention and quote edges.
    int64_t out_interactions(int node) const;

    struct EdgeRow {
        int src;
        int dst;
        EdgeKind kind;
        int64_t count;
    };
    std::vector<EdgeRow> edge_rows() const;  // sorted by (src, dst, kind)

    void write_dot(std::ostream& out) const;
    void write_edge_csv(std::ostream& out) const;

private:
    void finalize();

    std::vector<std::string> ids_;
    std::unordered_map<std::string, int> index_;
    std::map<std::pair<int, int>, std::array<int64_t, kEdgeKinds>> edges_;
    std::vector<std::vector<int>> neighbors_;
    std::vector<int> out_degree_, in_degree_;
    std::vector<int64_t> out_rmq_;
    bool finalized_ = false;
};

// Hop-decayed neighbor weights around one agent, cut at two hops. Every
// first-degree neighbor carries weight alpha = 1/n. A second-degree neighbor
// reached through first-degree neighbor f adds alpha * 1/m_f, where m_f
// counts f's neighbors that are neither the focal agent nor first-degree;
// contributions through multiple branches accumulate.
struct TwoHopView {
    struct Entry {
        int node;
        double weight;
    };
    int agent = -1;
    int n = 0;  // first-degree count
    std::vector<Entry> first_degree;
    std::vector<Entry> second_degree;  // aggregated per node, sorted by node
};

TwoHopView two_hop_view(const InteractionGraph& graph, int agent);

// Per-hop weight flow for the hop-decay elbow analysis. Weight starts at 1
// on the focal agent; each BFS frontier node splits its weight equally among
// its next-hop neighbors.
struct HopWeightSummary {
    int hop = 0;
    int node_count = 0;
    double total_weight = 0.0;
    double mean_weight = 0.0;  // per neighbor at this hop
};

std::vector<HopWeightSummary> influence_weights(const InteractionGraph& graph,
                                                int agent, int max_depth);

// Power iteration on the undirected simple adjacency, all-ones start,
// max-normalized to 1.
std::vector<double> eigenvector_centrality(const InteractionGraph& graph,
                                           double tol = 1e-8, int max_iter = 1000);

// Brandes shortest-path betweenness on the undirected simple projection,
// unnormalized, counting each unordered pair once.
std::vector<double> betweenness(const InteractionGraph& graph);

struct SuperScores {
    std::vector<double> spreader;     // outgoing retweet+mention+quote volume
    std::vector<double> mutual_friend;  // reciprocated neighbor pairs
};

SuperScores super_scores(const InteractionGraph& graph);

struct ConnectionResult {
    double value = 0.0;
    bool no_labeled_neighbors = false;
};

// Fraction of stance-labeled first-degree neighbors sharing the agent's
// stance. `stances` maps node index to -1/0/+1.
ConnectionResult connection(const InteractionGraph& graph, int agent,
                            std::span<const int> stances, int agent_stance);

struct ReciprocityCount {
    int64_t reciprocal_interactions = 0;
    int64_t r() const { return 2 * reciprocal_interactions; }
};

// Kind-wise minimum of the two directed counts, summed over kinds.
ReciprocityCount reciprocity(const InteractionGraph& graph, int a, int b);

}  // namespace stancelab
