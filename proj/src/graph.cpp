#include "stancelab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <ostream>
#include <set>

#include "stancelab/errors.hpp"
#include "stancelab/log.hpp"

namespace stancelab {

const char* edge_kind_name(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::mention: return "mention";
        case EdgeKind::retweet: return "retweet";
        case EdgeKind::quote: return "quote";
        case EdgeKind::reply: return "reply";
    }
    return "?";
}

int InteractionGraph::add_node(const std::string& id) {
    auto it = index_.find(id);
    if (it != index_.end()) return it->second;
    int idx = static_cast<int>(ids_.size());
    ids_.push_back(id);
    index_.emplace(id, idx);
    finalized_ = false;
    return idx;
}

void InteractionGraph::add_edge(const std::string& src, const std::string& dst,
                                EdgeKind kind, int64_t count) {
    if (src == dst) return;  // no self-loops
    int s = add_node(src);
    int d = add_node(dst);
    edges_[{s, d}][static_cast<int>(kind)] += count;
    finalized_ = false;
}

InteractionGraph InteractionGraph::build(std::span<const TweetRecord> tweets) {
    InteractionGraph g;
    for (const auto& t : tweets) g.add_node(t.agent_id);
    for (const auto& t : tweets) {
        for (const auto& m : t.mentioned_agents)
            g.add_edge(t.agent_id, m, EdgeKind::mention);
        if (t.target_agent) {
            EdgeKind kind = t.kind == TweetKind::retweet ? EdgeKind::retweet
                            : t.kind == TweetKind::quote ? EdgeKind::quote
                                                         : EdgeKind::reply;
            g.add_edge(t.agent_id, *t.target_agent, kind);
        }
    }
    g.finalize();
    return g;
}

void InteractionGraph::finalize() {
    neighbors_.assign(ids_.size(), {});
    out_degree_.assign(ids_.size(), 0);
    in_degree_.assign(ids_.size(), 0);
    out_rmq_.assign(ids_.size(), 0);
    std::vector<std::set<int>> sets(ids_.size());
    for (const auto& [key, counts] : edges_) {
        sets[key.first].insert(key.second);
        sets[key.second].insert(key.first);
        ++out_degree_[key.first];
        ++in_degree_[key.second];
        out_rmq_[key.first] += counts[static_cast<int>(EdgeKind::retweet)] +
                               counts[static_cast<int>(EdgeKind::mention)] +
                               counts[static_cast<int>(EdgeKind::quote)];
    }
    for (size_t i = 0; i < sets.size(); ++i)
        neighbors_[i].assign(sets[i].begin(), sets[i].end());
    finalized_ = true;
}

std::optional<int> InteractionGraph::index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const std::vector<int>& InteractionGraph::neighbors(int node) const {
    if (!finalized_)
        const_cast<InteractionGraph*>(this)->finalize();
    return neighbors_[node];
}

int64_t InteractionGraph::edge_count(int src, int dst, EdgeKind kind) const {
    auto it = edges_.find({src, dst});
    if (it == edges_.end()) return 0;
    return it->second[static_cast<int>(kind)];
}

int64_t InteractionGraph::edge_count_total(int src, int dst) const {
    auto it = edges_.find({src, dst});
    if (it == edges_.end()) return 0;
    int64_t total = 0;
    for (int64_t c : it->second) total += c;
    return total;
}

int InteractionGraph::total_degree(int node) const {
    if (!finalized_) const_cast<InteractionGraph*>(this)->finalize();
    return out_degree_[node] + in_degree_[node];
}

int64_t InteractionGraph::out_interactions(int node) const {
    if (!finalized_) const_cast<InteractionGraph*>(this)->finalize();
    return out_rmq_[node];
}

std::vector<InteractionGraph::EdgeRow> InteractionGraph::edge_rows() const {
    std::vector<EdgeRow> rows;
    for (const auto& [key, counts] : edges_)
        for (int k = 0; k < kEdgeKinds; ++k)
            if (counts[k] > 0)
                rows.push_back({key.first, key.second, static_cast<EdgeKind>(k),
                                counts[k]});
    return rows;
}

void InteractionGraph::write_dot(std::ostream& out) const {
    out << "digraph interactions {\n";
    for (int i = 0; i < node_count(); ++i)
        out << "  \"" << ids_[i] << "\";\n";
    for (const auto& row : edge_rows())
        out << "  \"" << ids_[row.src] << "\" -> \"" << ids_[row.dst]
            << "\" [label=\"" << edge_kind_name(row.kind) << " x" << row.count
            << "\"];\n";
    out << "}\n";
}

void InteractionGraph::write_edge_csv(std::ostream& out) const {
    out << "src,dst,kind,count\n";
    for (const auto& row : edge_rows())
        out << ids_[row.src] << ',' << ids_[row.dst] << ','
            << edge_kind_name(row.kind) << ',' << row.count << '\n';
}

TwoHopView two_hop_view(const InteractionGraph& graph, int agent) {
    TwoHopView view;
    view.agent = agent;
    const auto& first = graph.neighbors(agent);
    view.n = static_cast<int>(first.size());
    if (view.n == 0) return view;

    double alpha = 1.0 / static_cast<double>(view.n);
    std::set<int> first_set(first.begin(), first.end());
    for (int f : first) view.first_degree.push_back({f, alpha});

    std::map<int, double> second;
    for (int f : first) {
        // Branch count: f's neighbors that are genuinely second degree.
        std::vector<int> forward;
        for (int d : graph.neighbors(f)) {
            if (d == agent || first_set.count(d)) continue;
            forward.push_back(d);
        }
        if (forward.empty()) continue;
        double beta = 1.0 / static_cast<double>(forward.size());
        for (int d : forward) second[d] += alpha * beta;
    }
    for (const auto& [node, weight] : second)
        view.second_degree.push_back({node, weight});
    return view;
}

std::vector<HopWeightSummary> influence_weights(const InteractionGraph& graph,
                                                int agent, int max_depth) {
    if (max_depth < 1) throw DomainError("influence_weights: max_depth must be >= 1");
    const int n = graph.node_count();
    std::vector<int> level(n, -1);
    std::vector<double> weight(n, 0.0);
    level[agent] = 0;
    weight[agent] = 1.0;

    std::vector<HopWeightSummary> out;
    std::vector<int> frontier = {agent};
    for (int hop = 1; hop <= max_depth && !frontier.empty(); ++hop) {
        // Discover the next BFS level first so branch counts are exact.
        std::vector<int> next;
        for (int u : frontier)
            for (int v : graph.neighbors(u))
                if (level[v] == -1) {
                    level[v] = hop;
                    next.push_back(v);
                }
        for (int u : frontier) {
            int branches = 0;
            for (int v : graph.neighbors(u))
                if (level[v] == hop) ++branches;
            if (branches == 0) continue;
            double share = weight[u] / static_cast<double>(branches);
            for (int v : graph.neighbors(u))
                if (level[v] == hop) weight[v] += share;
        }
        HopWeightSummary summary;
        summary.hop = hop;
        summary.node_count = static_cast<int>(next.size());
        for (int v : next) summary.total_weight += weight[v];
        summary.mean_weight =
            next.empty() ? 0.0 : summary.total_weight / static_cast<double>(next.size());
        out.push_back(summary);
        frontier = std::move(next);
    }
    while (static_cast<int>(out.size()) < max_depth)
        out.push_back({static_cast<int>(out.size()) + 1, 0, 0.0, 0.0});
    return out;
}

std::vector<double> eigenvector_centrality(const InteractionGraph& graph,
                                           double tol, int max_iter) {
    const int n = graph.node_count();
    if (n == 0) return {};
    std::vector<double> x(n, 1.0), next(n, 0.0);
    bool converged = false;
    for (int iter = 0; iter < max_iter; ++iter) {
        for (int i = 0; i < n; ++i) {
            double sum = 0.0;
            for (int j : graph.neighbors(i)) sum += x[j];
            next[i] = sum;
        }
        double norm = 0.0;
        for (double v : next) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0.0) {
            // Edgeless graph: everything collapses to zero.
            return std::vector<double>(n, 0.0);
        }
        double delta = 0.0;
        for (int i = 0; i < n; ++i) {
            next[i] /= norm;
            delta = std::max(delta, std::fabs(next[i] - x[i]));
        }
        x.swap(next);
        if (delta < tol) {
            converged = true;
            break;
        }
    }
    if (!converged)
        log_warn("eigenvector centrality did not converge; returning last iterate");
    double max_val = *std::max_element(x.begin(), x.end());
    if (max_val > 0)
        for (double& v : x) v /= max_val;
    return x;
}

std::vector<double> betweenness(const InteractionGraph& graph) {
    const int n = graph.node_count();
    std::vector<double> score(n, 0.0);
    std::vector<int> dist(n), sigma(n), order;
    std::vector<double> delta(n);
    std::vector<std::vector<int>> preds(n);
    order.reserve(n);

    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();
        order.clear();

        dist[s] = 0;
        sigma[s] = 1;
        std::deque<int> queue = {s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (int w : graph.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int w = *it;
            for (int v : preds[w])
                delta[v] += (static_cast<double>(sigma[v]) / sigma[w]) * (1.0 + delta[w]);
            if (w != s) score[w] += delta[w];
        }
    }
    // Each unordered pair was seen from both endpoints.
    for (double& v : score) v /= 2.0;
    return score;
}

SuperScores super_scores(const InteractionGraph& graph) {
    const int n = graph.node_count();
    SuperScores scores;
    scores.spreader.resize(n, 0.0);
    scores.mutual_friend.resize(n, 0.0);
    for (int i = 0; i < n; ++i) {
        scores.spreader[i] = static_cast<double>(graph.out_interactions(i));
        int mutual = 0;
        for (int j : graph.neighbors(i))
            if (reciprocity(graph, i, j).reciprocal_interactions >= 1) ++mutual;
        scores.mutual_friend[i] = mutual;
    }
    return scores;
}

ConnectionResult connection(const InteractionGraph& graph, int agent,
                            std::span<const int> stances, int agent_stance) {
    ConnectionResult result;
    int labeled = 0, same = 0;
    for (int nb : graph.neighbors(agent)) {
        int s = stances[nb];
        if (s == 0) continue;
        ++labeled;
        if (s == agent_stance) ++same;
    }
    if (labeled == 0) {
        result.no_labeled_neighbors = true;
        return result;
    }
    result.value = static_cast<double>(same) / static_cast<double>(labeled);
    return result;
}

ReciprocityCount reciprocity(const InteractionGraph& graph, int a, int b) {
    ReciprocityCount rc;
    for (int k = 0; k < kEdgeKinds; ++k) {
        EdgeKind kind = static_cast<EdgeKind>(k);
        rc.reciprocal_interactions +=
            std::min(graph.edge_count(a, b, kind), graph.edge_count(b, a, kind));
    }
    return rc;
}

}  // namespace stancelab
