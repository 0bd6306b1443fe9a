#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace commdet {

using Matrix = Eigen::MatrixXd;

// Undirected simple graph. Edges are kept canonical: u < v, sorted, unique.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    bool operator==(const Graph&) const = default;
};

// Node labels from a ground-truth file. Community ids are interned in
// first-appearance order; `names` maps id back to the original token.
// Nodes without a label (marked "-") are simply absent from `labels`.
struct GroundTruth {
    std::map<int, int> labels;       // node -> community id
    std::vector<std::string> names;  // community id -> label token

    int communities() const { return static_cast<int>(names.size()); }
    int labeled_count() const { return static_cast<int>(labels.size()); }
    std::vector<int> labeled_nodes() const;
};

// Canonicalizes an edge set: 0-based ids, dedup, u < v. Throws data_error
// on self-loops or endpoints outside [0, n).
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

// Edge-list format: "u v" per line, 1-based ids, '#' comments.
Graph load_edge_list(std::istream& in);
void save_edge_list(const Graph& g, std::ostream& out);
Graph load_edge_list_file(const std::string& path);
void save_edge_list_file(const Graph& g, const std::string& path);

// Label format: "node<TAB>label" per line, 1-based ids, label "-" = unlabeled.
GroundTruth load_labels(std::istream& in);
void save_labels(const GroundTruth& gt, int n, std::ostream& out);
GroundTruth load_labels_file(const std::string& path);
void save_labels_file(const GroundTruth& gt, int n, const std::string& path);

// Throws data_error if any labeled node id falls outside [0, n).
void validate_labels(const GroundTruth& gt, int n);

// Dense adjacency matrix with unit diagonal: A[i][j] = 1 iff {i,j} is an
// edge or i == j.
Matrix adjacency(const Graph& g);

}  // namespace commdet
