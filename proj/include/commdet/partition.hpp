#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace commdet {

// Total assignment node -> community index in [0, k). k is the configured
// community count; some of the k slots may end up empty.
struct Partition {
    std::vector<int> assign;
    int k = 0;

    int size() const { return static_cast<int>(assign.size()); }
    int realized_communities() const;

    bool operator==(const Partition&) const = default;
};

// File format: "node<TAB>community" per line, 1-based node ids, nonnegative
// community ids. Nodes must form a gapless range 1..n. Round-trips exactly.
Partition load_partition(std::istream& in);
void save_partition(const Partition& p, std::ostream& out);
Partition load_partition_file(const std::string& path);
void save_partition_file(const Partition& p, const std::string& path);

}  // namespace commdet
