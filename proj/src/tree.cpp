#include "stancelab/tree.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

#include "stancelab/csv.hpp"
#include "stancelab/errors.hpp"
#include "stancelab/log.hpp"
#include "stancelab/util.hpp"

namespace stancelab {

std::vector<int> stratified_folds(std::span<const int> labels, int k,
                                  uint64_t seed) {
    if (k < 2) throw DomainError("stratified_folds: k must be >= 2");
    std::map<int, std::vector<int>> by_class;
    for (size_t i = 0; i < labels.size(); ++i)
        by_class[labels[i]].push_back(static_cast<int>(i));
    if (by_class.size() < 2)
        throw DomainError("stratified_folds: need at least two classes");
    for (const auto& [cls, members] : by_class)
        if (static_cast<int>(members.size()) < k)
            throw DomainError("stratified_folds: class " + std::to_string(cls) +
                              " has only " + std::to_string(members.size()) +
                              " members for " + std::to_string(k) + " folds");

    std::vector<int> folds(labels.size(), 0);
    Rng rng(seed);
    for (auto& [cls, members] : by_class) {
        rng.shuffle(members);
        for (size_t i = 0; i < members.size(); ++i)
            folds[members[i]] = static_cast<int>(i % static_cast<size_t>(k));
    }
    return folds;
}

namespace {

double gini(int samples, int positives) {
    if (samples == 0) return 0.0;
    double p = static_cast<double>(positives) / samples;
    return 2.0 * p * (1.0 - p);
}

struct SplitChoice {
    int feature = -1;
    double threshold = 0.0;
    double gain = 0.0;
    bool found = false;
};

}  // namespace

DecisionTree DecisionTree::fit(const TrainingMatrix& data,
                               std::span<const int> sample_indices,
                               const TreeParams& params) {
    if (sample_indices.empty())
        throw DomainError("DecisionTree::fit: empty training split");
    const int k = static_cast<int>(data.rows.front().size());

    DecisionTree tree;
    tree.total_samples_ = static_cast<int>(sample_indices.size());

    struct Work {
        std::vector<int> samples;
        int depth;
        int node;
    };

    auto make_node = [&](const std::vector<int>& samples) {
        Node node;
        node.samples = static_cast<int>(samples.size());
        for (int i : samples) node.positives += data.labels[i];
        node.impurity = gini(node.samples, node.positives);
        tree.nodes_.push_back(node);
        return static_cast<int>(tree.nodes_.size() - 1);
    };

    std::vector<Work> stack;
    {
        std::vector<int> root(sample_indices.begin(), sample_indices.end());
        int idx = make_node(root);
        stack.push_back({std::move(root), 0, idx});
    }

    while (!stack.empty()) {
        Work work = std::move(stack.back());
        stack.pop_back();
        Node& node = tree.nodes_[work.node];

        bool can_split = work.depth < params.max_depth &&
                         node.samples >= 2 * params.min_samples_leaf &&
                         node.positives != 0 && node.positives != node.samples;
        if (!can_split) continue;

        SplitChoice best;
        std::vector<std::pair<double, int>> column(node.samples);
        for (int f = 0; f < k; ++f) {
            for (int i = 0; i < node.samples; ++i) {
                int s = work.samples[i];
                column[i] = {data.rows[s][f], data.labels[s]};
            }
            std::sort(column.begin(), column.end());

            int left_n = 0, left_pos = 0;
            for (int i = 0; i + 1 < node.samples; ++i) {
                ++left_n;
                left_pos += column[i].second;
                if (column[i].first == column[i + 1].first) continue;
                int right_n = node.samples - left_n;
                if (left_n < params.min_samples_leaf ||
                    right_n < params.min_samples_leaf)
                    continue;
                int right_pos = node.positives - left_pos;
                double weighted =
                    (left_n * gini(left_n, left_pos) +
                     right_n * gini(right_n, right_pos)) /
                    node.samples;
                double gain = node.impurity - weighted;
                if (gain > best.gain + 1e-12) {
                    best.found = true;
                    best.gain = gain;
                    best.feature = f;
                    best.threshold = (column[i].first + column[i + 1].first) / 2.0;
                }
            }
        }
        if (!best.found) continue;  // degenerate split: stay a leaf

        std::vector<int> left, right;
        for (int s : work.samples) {
            if (data.rows[s][best.feature] <= best.threshold)
                left.push_back(s);
            else
                right.push_back(s);
        }
        int left_idx = make_node(left);
        int right_idx = make_node(right);
        // make_node may reallocate nodes_, so re-reference.
        Node& parent = tree.nodes_[work.node];
        parent.feature = best.feature;
        parent.threshold = best.threshold;
        parent.left = left_idx;
        parent.right = right_idx;
        stack.push_back({std::move(left), work.depth + 1, left_idx});
        stack.push_back({std::move(right), work.depth + 1, right_idx});
    }
    return tree;
}

int DecisionTree::predict(std::span<const double> row) const {
    int node = 0;
    while (nodes_[node].feature >= 0) {
        node = row[nodes_[node].feature] <= nodes_[node].threshold
                   ? nodes_[node].left
                   : nodes_[node].right;
    }
    const Node& leaf = nodes_[node];
    return leaf.positives * 2 > leaf.samples ? 1 : 0;
}

std::vector<double> DecisionTree::raw_importance(int feature_count) const {
    std::vector<double> imp(feature_count, 0.0);
    for (const Node& node : nodes_) {
        if (node.feature < 0) continue;
        const Node& l = nodes_[node.left];
        const Node& r = nodes_[node.right];
        double weighted_child =
            (l.samples * l.impurity + r.samples * r.impurity) / node.samples;
        double decrease = node.impurity - weighted_child;
        imp[node.feature] += decrease * node.samples / total_samples_;
    }
    return imp;
}

std::vector<double> feature_importance(std::span<const DecisionTree> trees,
                                       int feature_count) {
    if (trees.empty())
        throw DomainError("feature_importance: no fitted trees");
    std::vector<double> sum(feature_count, 0.0);
    for (const auto& tree : trees) {
        auto raw = tree.raw_importance(feature_count);
        for (int i = 0; i < feature_count; ++i) sum[i] += raw[i];
    }
    double total = 0.0;
    for (double v : sum) total += v;
    if (total <= 0.0) {
        log_warn("all trees are single leaves; importances fall back to uniform");
        return std::vector<double>(feature_count, 1.0 / feature_count);
    }
    for (double& v : sum) v /= total;
    return sum;
}

CoefficientVector to_coefficients(std::span<const double> importance) {
    if (static_cast<int>(importance.size()) != kFeatureCount)
        throw DomainError("coefficient vector has " +
                          std::to_string(importance.size()) +
                          " entries, expected " + std::to_string(kFeatureCount));
    for (double v : importance)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw DomainError("coefficient entries must be finite and nonnegative");
    CoefficientVector coeffs;
    coeffs.values.assign(importance.begin(), importance.end());
    return coeffs;
}

void save_coefficients(std::ostream& out, const CoefficientVector& coeffs) {
    out << "feature,importance\n";
    auto names = feature_names();
    for (int i = 0; i < kFeatureCount; ++i)
        out << names[i] << ',' << format_double(coeffs.values[i]) << '\n';
}

CoefficientVector load_coefficients(std::istream& in, const std::string& what) {
    CsvTable table = read_csv(in, what);
    size_t fcol = table.col("feature");
    size_t icol = table.col("importance");
    std::vector<double> values(kFeatureCount, 0.0);
    std::vector<bool> present(kFeatureCount, false);
    for (const auto& row : table.rows) {
        int idx = feature_index(row[fcol]);
        if (idx < 0)
            throw ConfigError(what + ": unknown feature name '" + row[fcol] + "'");
        if (present[idx])
            throw ConfigError(what + ": duplicate feature '" + row[fcol] + "'");
        present[idx] = true;
        values[idx] = std::strtod(row[icol].c_str(), nullptr);
    }
    auto names = feature_names();
    for (int i = 0; i < kFeatureCount; ++i)
        if (!present[i])
            log_warn(what + ": feature '" + std::string(names[i]) +
                     "' missing, defaulting to 0");
    return to_coefficients(values);
}

CoefficientVector load_coefficients_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open coefficient file: " + path);
    return load_coefficients(in, path);
}

}  // namespace stancelab
