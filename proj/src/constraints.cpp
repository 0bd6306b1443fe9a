#include "commdet/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "commdet/errors.hpp"
#include "commdet/rng.hpp"

namespace commdet {

namespace {

void validate_pair(const NodePair& p, int n, const char* kind) {
    if (p.first == p.second)
        throw data_error(std::string(kind) + " pair with identical endpoints: node " +
                         std::to_string(p.first + 1));
    if (p.first < 0 || p.second < 0 || p.first >= n || p.second >= n)
        throw data_error(std::string(kind) + " pair out of range: " +
                         std::to_string(p.first + 1) + " " + std::to_string(p.second + 1));
}

// Union-find over the must-link relation.
class DisjointSet {
public:
    explicit DisjointSet(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

// For conflict witnesses: an ML neighbour of `a` inside its class, or `a`
// itself when the offending pair is a direct ML edge.
int witness_pivot(const ConstraintSet& s, int a, int b) {
    if (s.ml.count(canonical_pair(a, b))) return a;
    for (const auto& [u, v] : s.ml) {
        if (u == a) return v;
        if (v == a) return u;
    }
    return a;
}

}  // namespace

ConstraintSet make_constraints(int n, PairSet ml, PairSet cl) {
    ConstraintSet s;
    s.n = n;
    for (const auto& p : ml) {
        NodePair q = canonical_pair(p.first, p.second);
        validate_pair(q, n, "ML");
        s.ml.insert(q);
    }
    for (const auto& p : cl) {
        NodePair q = canonical_pair(p.first, p.second);
        validate_pair(q, n, "CL");
        if (s.ml.count(q))
            throw data_error("pair " + std::to_string(q.first + 1) + " " +
                             std::to_string(q.second + 1) + " is both ML and CL");
        s.cl.insert(q);
    }
    return s;
}

ConstraintSet sample_constraints(const GroundTruth& gt, int n, double fraction,
                                 std::uint64_t seed) {
    if (fraction < 0.0 || fraction > 1.0)
        throw data_error("constraint fraction must lie in [0,1]");
    validate_labels(gt, n);
    const std::vector<int> nodes = gt.labeled_nodes();
    const long long m = static_cast<long long>(nodes.size());
    if (m < 2) throw data_error("need at least two labeled nodes to sample constraints");
    const long long total = m * (m - 1) / 2;
    const long long count = static_cast<long long>(std::floor(fraction * static_cast<double>(total) + 0.5));

    // Floyd's algorithm: `count` distinct pair indices, uniform without
    // replacement.
    Rng rng(seed);
    std::unordered_set<long long> picked;
    picked.reserve(static_cast<size_t>(count) * 2 + 8);
    for (long long j = total - count; j < total; ++j) {
        long long t = std::uniform_int_distribution<long long>(0, j)(rng);
        if (!picked.insert(t).second) picked.insert(j);
    }

    // Lexicographic unranking of pair index -> (i, j), i < j, over the m
    // labeled nodes. F(i) = i*(2m-i-1)/2 pairs precede row i.
    auto row_offset = [m](long long i) { return i * (2 * m - i - 1) / 2; };
    ConstraintSet s;
    s.n = n;
    for (long long idx : picked) {
        double disc = static_cast<double>(2 * m - 1) * static_cast<double>(2 * m - 1) -
                      8.0 * static_cast<double>(idx);
        long long i = static_cast<long long>((2 * m - 1 - std::sqrt(std::max(0.0, disc))) / 2.0);
        i = std::clamp(i, 0LL, m - 2);
        while (i > 0 && row_offset(i) > idx) --i;
        while (i < m - 2 && row_offset(i + 1) <= idx) ++i;
        long long j = idx - row_offset(i) + i + 1;
        int u = nodes[static_cast<size_t>(i)];
        int v = nodes[static_cast<size_t>(j)];
        if (gt.labels.at(u) == gt.labels.at(v))
            s.ml.insert(canonical_pair(u, v));
        else
            s.cl.insert(canonical_pair(u, v));
    }
    return s;
}

std::vector<ConstraintConflict> check_consistency(const ConstraintSet& s) {
    DisjointSet ds(s.n);
    for (const auto& [u, v] : s.ml) ds.unite(u, v);
    std::vector<ConstraintConflict> out;
    for (const auto& [u, v] : s.cl)
        if (ds.find(u) == ds.find(v)) out.push_back({witness_pivot(s, u, v), u, v});
    return out;
}

std::pair<ConstraintSet, ClosureReport> enhance(const ConstraintSet& s) {
    DisjointSet ds(s.n);
    for (const auto& [u, v] : s.ml) ds.unite(u, v);

    // Classes over the nodes that actually appear in some constraint.
    std::map<int, std::vector<int>> by_root;
    std::set<int> touched;
    for (const auto& [u, v] : s.ml) {
        touched.insert(u);
        touched.insert(v);
    }
    for (const auto& [u, v] : s.cl) {
        touched.insert(u);
        touched.insert(v);
    }
    for (int node : touched) by_root[ds.find(node)].push_back(node);

    ClosureReport report;
    std::map<int, int> class_index;  // root -> index in report.ml_classes
    for (auto& [root, members] : by_root) {
        class_index[root] = static_cast<int>(report.ml_classes.size());
        std::sort(members.begin(), members.end());
        report.ml_classes.push_back(members);
    }

    ConstraintSet out;
    out.n = s.n;
    for (const auto& members : report.ml_classes)
        for (size_t a = 0; a < members.size(); ++a)
            for (size_t b = a + 1; b < members.size(); ++b)
                out.ml.insert({members[a], members[b]});

    for (const auto& [u, v] : s.cl) {
        int cu = class_index.at(ds.find(u));
        int cv = class_index.at(ds.find(v));
        if (cu == cv) {
            ConstraintConflict c{witness_pivot(s, u, v), u, v};
            throw data_error("contradictory constraints: nodes " + std::to_string(c.a + 1) +
                             " and " + std::to_string(c.b + 1) +
                             " are cannot-link but share a must-link class (via node " +
                             std::to_string(c.pivot + 1) + ")");
        }
        report.class_cl.insert(canonical_pair(cu, cv));
    }

    for (const auto& [ci, cj] : report.class_cl)
        for (int p : report.ml_classes[static_cast<size_t>(ci)])
            for (int q : report.ml_classes[static_cast<size_t>(cj)])
                out.cl.insert(canonical_pair(p, q));

    report.added_ml = static_cast<long>(out.ml.size() - s.ml.size());
    report.added_cl = static_cast<long>(out.cl.size() - s.cl.size());
    return {std::move(out), std::move(report)};
}

ConstraintSet filter(const ConstraintSet& s, FilterMode mode) {
    ConstraintSet out;
    out.n = s.n;
    if (mode != FilterMode::cl_only) out.ml = s.ml;
    if (mode != FilterMode::ml_only) out.cl = s.cl;
    return out;
}

ConstraintSet load_constraints(std::istream& in, int n) {
    PairSet ml, cl;
    int max_id = 0;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream ls(stripped);
        std::string a, b, kind;
        if (!(ls >> a)) continue;
        ls >> b >> kind;
        long u = 0, v = 0;
        try {
            u = std::stol(a);
            v = std::stol(b);
        } catch (const std::exception&) {
            throw data_error("line " + std::to_string(lineno) + ": non-integer node id");
        }
        if (u < 1 || v < 1)
            throw data_error("line " + std::to_string(lineno) + ": node ids are 1-based");
        max_id = static_cast<int>(std::max<long>(max_id, std::max(u, v)));
        NodePair p = canonical_pair(static_cast<int>(u - 1), static_cast<int>(v - 1));
        if (kind == "ML")
            ml.insert(p);
        else if (kind == "CL")
            cl.insert(p);
        else
            throw data_error("line " + std::to_string(lineno) + ": constraint type must be ML or CL");
    }
    return make_constraints(n > 0 ? n : max_id, std::move(ml), std::move(cl));
}

void save_constraints(const ConstraintSet& s, std::ostream& out) {
    for (const auto& [u, v] : s.ml) out << u + 1 << '\t' << v + 1 << "\tML\n";
    for (const auto& [u, v] : s.cl) out << u + 1 << '\t' << v + 1 << "\tCL\n";
}

ConstraintSet load_constraints_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open " + path);
    return load_constraints(in, n);
}

void save_constraints_file(const ConstraintSet& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot open " + path + " for writing");
    save_constraints(s, out);
}

}  // namespace commdet
