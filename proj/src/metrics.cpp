#include "commdet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "commdet/errors.hpp"

namespace commdet {

namespace {

std::vector<int> intern(const std::vector<int>& labels) {
    std::map<int, int> ids;
    std::vector<int> out;
    out.reserve(labels.size());
    for (int lab : labels) {
        auto [it, inserted] = ids.try_emplace(lab, static_cast<int>(ids.size()));
        (void)inserted;
        out.push_back(it->second);
    }
    return out;
}

// Minimum-cost assignment for a rows x cols matrix with rows <= cols.
// Returns, per row, the assigned column.
std::vector<int> min_cost_assignment(const std::vector<std::vector<long>>& cost) {
    const int n = static_cast<int>(cost.size());
    const int m = n == 0 ? 0 : static_cast<int>(cost.front().size());
    const long inf = std::numeric_limits<long>::max() / 4;
    std::vector<long> u(n + 1, 0), v(m + 1, 0);
    std::vector<int> p(m + 1, 0), way(m + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<long> minv(m + 1, inf);
        std::vector<char> used(m + 1, 0);
        do {
            used[j0] = 1;
            int i0 = p[j0], j1 = 0;
            long delta = inf;
            for (int j = 1; j <= m; ++j) {
                if (used[j]) continue;
                long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> row_to_col(n, -1);
    for (int j = 1; j <= m; ++j)
        if (p[j] != 0) row_to_col[static_cast<size_t>(p[j] - 1)] = j - 1;
    return row_to_col;
}

}  // namespace

ConfusionTable confusion_table(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw data_error("mismatched node sets in partition comparison");
    std::vector<int> ia = intern(a), ib = intern(b);
    int k1 = ia.empty() ? 0 : *std::max_element(ia.begin(), ia.end()) + 1;
    int k2 = ib.empty() ? 0 : *std::max_element(ib.begin(), ib.end()) + 1;
    ConfusionTable t;
    t.counts.assign(static_cast<size_t>(k1), std::vector<long>(static_cast<size_t>(k2), 0));
    t.row_sums.assign(static_cast<size_t>(k1), 0);
    t.col_sums.assign(static_cast<size_t>(k2), 0);
    t.total = static_cast<long>(a.size());
    for (size_t i = 0; i < ia.size(); ++i) {
        t.counts[static_cast<size_t>(ia[i])][static_cast<size_t>(ib[i])]++;
        t.row_sums[static_cast<size_t>(ia[i])]++;
        t.col_sums[static_cast<size_t>(ib[i])]++;
    }
    return t;
}

double nmi(const std::vector<int>& a, const std::vector<int>& b) {
    ConfusionTable t = confusion_table(a, b);
    if (t.total == 0) throw data_error("cannot compare empty partitions");
    const double n = static_cast<double>(t.total);
    double h1 = 0.0, h2 = 0.0;
    for (long r : t.row_sums)
        if (r > 0) h1 += static_cast<double>(r) * std::log(static_cast<double>(r) / n);
    for (long c : t.col_sums)
        if (c > 0) h2 += static_cast<double>(c) * std::log(static_cast<double>(c) / n);
    if (h1 == 0.0 || h2 == 0.0) return 0.0;  // single-cluster convention
    double mi = 0.0;
    for (int i = 0; i < t.rows(); ++i) {
        for (int j = 0; j < t.cols(); ++j) {
            long nij = t.counts[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (nij == 0) continue;
            mi += static_cast<double>(nij) *
                  std::log(static_cast<double>(nij) * n /
                           (static_cast<double>(t.row_sums[static_cast<size_t>(i)]) *
                            static_cast<double>(t.col_sums[static_cast<size_t>(j)])));
        }
    }
    return mi / std::sqrt(h1 * h2);
}

double nmi(const Partition& a, const Partition& b) { return nmi(a.assign, b.assign); }

double nmi_labeled(const Partition& p, const GroundTruth& gt) {
    std::vector<int> truth, computed;
    truth.reserve(gt.labels.size());
    computed.reserve(gt.labels.size());
    for (const auto& [node, lab] : gt.labels) {
        if (node >= p.size())
            throw data_error("partition does not cover labeled node " + std::to_string(node + 1));
        truth.push_back(lab);
        computed.push_back(p.assign[static_cast<size_t>(node)]);
    }
    return nmi(truth, computed);
}

std::vector<int> optimal_matching(const ConfusionTable& t) {
    const int k1 = t.rows(), k2 = t.cols();
    std::vector<int> col_to_row(static_cast<size_t>(k2), -1);
    if (k1 == 0 || k2 == 0) return col_to_row;
    if (k1 <= k2) {
        std::vector<std::vector<long>> cost(static_cast<size_t>(k1),
                                            std::vector<long>(static_cast<size_t>(k2), 0));
        for (int i = 0; i < k1; ++i)
            for (int j = 0; j < k2; ++j)
                cost[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    -t.counts[static_cast<size_t>(i)][static_cast<size_t>(j)];
        std::vector<int> row_to_col = min_cost_assignment(cost);
        for (int i = 0; i < k1; ++i)
            if (row_to_col[static_cast<size_t>(i)] >= 0)
                col_to_row[static_cast<size_t>(row_to_col[static_cast<size_t>(i)])] = i;
    } else {
        std::vector<std::vector<long>> cost(static_cast<size_t>(k2),
                                            std::vector<long>(static_cast<size_t>(k1), 0));
        for (int j = 0; j < k2; ++j)
            for (int i = 0; i < k1; ++i)
                cost[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                    -t.counts[static_cast<size_t>(i)][static_cast<size_t>(j)];
        std::vector<int> c2r = min_cost_assignment(cost);
        for (int j = 0; j < k2; ++j) col_to_row[static_cast<size_t>(j)] = c2r[static_cast<size_t>(j)];
    }
    return col_to_row;
}

std::vector<int> misclustered(const Partition& p, const GroundTruth& gt) {
    std::vector<int> truth, computed, nodes;
    for (const auto& [node, lab] : gt.labels) {
        if (node >= p.size())
            throw data_error("partition does not cover labeled node " + std::to_string(node + 1));
        truth.push_back(lab);
        computed.push_back(p.assign[static_cast<size_t>(node)]);
        nodes.push_back(node);
    }
    if (nodes.empty()) return {};

    // Work in interned label space so the matching indices line up with the
    // confusion table rows/columns (intern is idempotent on its own output).
    std::vector<int> dense_truth = intern(truth);
    std::vector<int> dense_comp = intern(computed);
    ConfusionTable t = confusion_table(dense_truth, dense_comp);
    std::vector<int> col_to_row = optimal_matching(t);

    std::vector<int> out;
    for (size_t i = 0; i < nodes.size(); ++i)
        if (col_to_row[static_cast<size_t>(dense_comp[i])] != dense_truth[i])
            out.push_back(nodes[i] + 1);
    return out;  // gt.labels iterates in node order, so already sorted
}

}  // namespace commdet
