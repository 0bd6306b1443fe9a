#include "commdet/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "commdet/errors.hpp"

namespace commdet {

std::vector<int> GroundTruth::labeled_nodes() const {
    std::vector<int> out;
    out.reserve(labels.size());
    for (const auto& [node, lab] : labels) {
        (void)lab;
        out.push_back(node);
    }
    return out;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    for (auto& [u, v] : edges) {
        if (u == v) throw data_error("self-loop on node " + std::to_string(u + 1));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw data_error("edge endpoint out of range: " + std::to_string(u + 1) + " " +
                             std::to_string(v + 1));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    return g;
}

namespace {

bool parse_int(const std::string& tok, long& out) {
    try {
        size_t pos = 0;
        out = std::stol(tok, &pos);
        return pos == tok.size();
    } catch (const std::exception&) {
        return false;
    }
}

// Strips a trailing '#' comment and surrounding whitespace.
std::string strip(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

}  // namespace

Graph load_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int max_id = 0;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty()) continue;
        std::istringstream ls(s);
        std::string a, b, extra;
        ls >> a >> b;
        if (b.empty() || (ls >> extra))
            throw data_error("line " + std::to_string(lineno) + ": expected \"u v\"");
        long u, v;
        if (!parse_int(a, u) || !parse_int(b, v))
            throw data_error("line " + std::to_string(lineno) + ": non-integer node id");
        if (u < 1 || v < 1)
            throw data_error("line " + std::to_string(lineno) + ": node ids are 1-based");
        if (u == v)
            throw data_error("line " + std::to_string(lineno) + ": self-loop on node " +
                             std::to_string(u));
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
        edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    return make_graph(max_id, std::move(edges));
}

void save_edge_list(const Graph& g, std::ostream& out) {
    for (const auto& [u, v] : g.edges) out << u + 1 << ' ' << v + 1 << '\n';
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open " + path);
    return load_edge_list(in);
}

void save_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot open " + path + " for writing");
    save_edge_list(g, out);
}

GroundTruth load_labels(std::istream& in) {
    GroundTruth gt;
    std::map<std::string, int> interned;
    std::set<int> seen;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty()) continue;
        std::istringstream ls(s);
        std::string a, lab, extra;
        ls >> a >> lab;
        if (lab.empty() || (ls >> extra))
            throw data_error("line " + std::to_string(lineno) + ": expected \"node<TAB>label\"");
        long node;
        if (!parse_int(a, node) || node < 1)
            throw data_error("line " + std::to_string(lineno) + ": bad node id");
        int idx = static_cast<int>(node - 1);
        if (!seen.insert(idx).second)
            throw data_error("line " + std::to_string(lineno) + ": duplicate row for node " +
                             std::to_string(node));
        if (lab == "-") continue;
        auto [it, inserted] = interned.try_emplace(lab, static_cast<int>(gt.names.size()));
        if (inserted) gt.names.push_back(lab);
        gt.labels.emplace(idx, it->second);
    }
    return gt;
}

void save_labels(const GroundTruth& gt, int n, std::ostream& out) {
    for (int i = 0; i < n; ++i) {
        auto it = gt.labels.find(i);
        out << i + 1 << '\t' << (it == gt.labels.end() ? "-" : gt.names[it->second]) << '\n';
    }
}

GroundTruth load_labels_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open " + path);
    return load_labels(in);
}

void save_labels_file(const GroundTruth& gt, int n, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot open " + path + " for writing");
    save_labels(gt, n, out);
}

void validate_labels(const GroundTruth& gt, int n) {
    for (const auto& [node, lab] : gt.labels) {
        (void)lab;
        if (node < 0 || node >= n)
            throw data_error("labeled node " + std::to_string(node + 1) +
                             " outside graph of size " + std::to_string(n));
    }
}

Matrix adjacency(const Graph& g) {
    Matrix a = Matrix::Identity(g.n, g.n);
    for (const auto& [u, v] : g.edges) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return a;
}

}  // namespace commdet
