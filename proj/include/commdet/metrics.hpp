#pragma once

#include <vector>

#include "commdet/graph.hpp"
#include "commdet/partition.hpp"

namespace commdet {

// Contingency counts between two labelings of the same nodes. Labels are
// interned to dense indices, so arbitrary (sparse, unordered) ids are fine.
struct ConfusionTable {
    std::vector<std::vector<long>> counts;  // rows: first labeling
    std::vector<long> row_sums, col_sums;
    long total = 0;

    int rows() const { return static_cast<int>(row_sums.size()); }
    int cols() const { return static_cast<int>(col_sums.size()); }
};

ConfusionTable confusion_table(const std::vector<int>& a, const std::vector<int>& b);

// Normalized mutual information with natural logarithms; 0*log(0) terms
// contribute nothing, and a single-cluster side yields 0 by convention.
double nmi(const std::vector<int>& a, const std::vector<int>& b);
double nmi(const Partition& a, const Partition& b);

// NMI against ground truth, restricted to the labeled nodes.
double nmi_labeled(const Partition& p, const GroundTruth& gt);

// Agreement-maximizing one-to-one matching between row and column clusters
// (optimal assignment, not greedy). Returns, per column, the matched row or
// -1 when the column is unmatched.
std::vector<int> optimal_matching(const ConfusionTable& t);

// Labeled nodes whose computed cluster, under the optimal matching, does not
// map to their true community. 1-based ids, sorted.
std::vector<int> misclustered(const Partition& p, const GroundTruth& gt);

}  // namespace commdet
