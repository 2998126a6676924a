#pragma once
// Coefficient learning: CART decision tree with Gini impurity under
// stratified k-fold cross-validation; the fold-averaged feature importances
// become the influence model's coefficient vector.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "stancelab/influence.hpp"

namespace stancelab {

struct TrainingMatrix {
    std::vector<std::vector<double>> rows;  // one row per eligible agent
    std::vector<int> labels;                // 1 = flipped, 0 = not
};

// Fold index per sample; every fold's class counts stay within one sample of
// the exact proportion. Deterministic in (labels, k, seed).
std::vector<int> stratified_folds(std::span<const int> labels, int k,
                                  uint64_t seed);

struct TreeParams {
    int max_depth = 8;
    int min_samples_leaf = 5;
};

class DecisionTree {
public:
    struct Node {
        int feature = -1;        // -1 for leaves
        double threshold = 0.0;  // midpoint of adjacent observed values
        int left = -1, right = -1;
        int samples = 0;
        int positives = 0;
        double impurity = 0.0;
    };

    // Greedy best-split CART; exhaustive threshold search per feature.
    static DecisionTree fit(const TrainingMatrix& data,
                            std::span<const int> sample_indices,
                            const TreeParams& params = {});

    int predict(std::span<const double> row) const;

    // Impurity decrease weighted by node sample fraction, summed per
    // feature; not normalized.
    std::vector<double> raw_importance(int feature_count) const;

    const std::vector<Node>& nodes() const { return nodes_; }

private:
    std::vector<Node> nodes_;
    int total_samples_ = 0;
};

// Mean of per-tree raw importances over folds, normalized to sum 1. All-leaf
// trees yield a uniform vector with a warning.
std::vector<double> feature_importance(std::span<const DecisionTree> trees,
                                       int feature_count);

// Importance vector -> coefficient vector, checking the canonical feature
// order contract.
CoefficientVector to_coefficients(std::span<const double> importance);

// Two-column table (feature,importance); values round-trip bit-exactly.
// Features absent from the file default to 0 with a warning; unknown feature
// names are an error.
void save_coefficients(std::ostream& out, const CoefficientVector& coeffs);
CoefficientVector load_coefficients(std::istream& in, const std::string& what);
CoefficientVector load_coefficients_file(const std::string& path);

}  // namespace stancelab
