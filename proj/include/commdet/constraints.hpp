#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "commdet/graph.hpp"

namespace commdet {

using NodePair = std::pair<int, int>;
using PairSet = std::set<NodePair>;

inline NodePair canonical_pair(int u, int v) { return u < v ? NodePair{u, v} : NodePair{v, u}; }

// Pairwise supervision over nodes [0, n): must-link pairs (same community)
// and cannot-link pairs (different communities). Pairs are canonical (i < j)
// and the two sets are disjoint.
struct ConstraintSet {
    int n = 0;
    PairSet ml, cl;

    long total() const { return static_cast<long>(ml.size() + cl.size()); }
    bool operator==(const ConstraintSet&) const = default;
};

// Witness for a pair forced to be both ML and CL: ML(pivot,a) holds (pivot
// lies in a's must-link class) while CL(a,b) was asserted with b in the
// same class.
struct ConstraintConflict {
    int pivot = -1, a = -1, b = -1;
};

// What the closure did: the must-link equivalence classes (every class with
// two or more members, plus singletons that participate in a cannot-link),
// the class pairs related by cannot-link, and how many pairs were added.
struct ClosureReport {
    std::vector<std::vector<int>> ml_classes;
    std::set<std::pair<int, int>> class_cl;  // index pairs into ml_classes
    long added_ml = 0;
    long added_cl = 0;
};

// Validates endpoints, canonicalizes pairs, rejects ml/cl overlap.
ConstraintSet make_constraints(int n, PairSet ml, PairSet cl);

// Draws round(fraction * m(m-1)/2) distinct unordered pairs uniformly
// without replacement among the m labeled nodes of gt; equal labels -> ML,
// different -> CL. `n` is the universe (node count of the graph).
ConstraintSet sample_constraints(const GroundTruth& gt, int n, double fraction,
                                 std::uint64_t seed);

// Least fixpoint of the two inference rules:
//   (i)  ML is transitive ("the friend of my friend is my friend");
//   (ii) ML(i,t) and CL(i,k) imply CL(t,k) ("the friend of my enemy is my
//        enemy"), lifted to whole must-link classes.
// Throws data_error when a cannot-link pair lands inside a must-link class.
std::pair<ConstraintSet, ClosureReport> enhance(const ConstraintSet& s);

// Empty result means the set is consistent (enhance will not throw).
std::vector<ConstraintConflict> check_consistency(const ConstraintSet& s);

enum class FilterMode { both, ml_only, cl_only };

ConstraintSet filter(const ConstraintSet& s, FilterMode mode);

// File format: "i<TAB>j<TAB>ML|CL" per line, 1-based ids, '#' comments.
// Pass n = 0 to size the universe from the largest id seen.
ConstraintSet load_constraints(std::istream& in, int n = 0);
void save_constraints(const ConstraintSet& s, std::ostream& out);
ConstraintSet load_constraints_file(const std::string& path, int n = 0);
void save_constraints_file(const ConstraintSet& s, const std::string& path);

}  // namespace commdet
