#include "commdet/partition.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "commdet/errors.hpp"

namespace commdet {

int Partition::realized_communities() const {
    std::set<int> distinct(assign.begin(), assign.end());
    return static_cast<int>(distinct.size());
}

Partition load_partition(std::istream& in) {
    std::vector<std::pair<long, long>> rows;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream ls(stripped);
        long node, comm;
        if (!(ls >> node)) continue;
        if (!(ls >> comm))
            throw data_error("line " + std::to_string(lineno) + ": expected \"node<TAB>community\"");
        if (node < 1) throw data_error("line " + std::to_string(lineno) + ": node ids are 1-based");
        if (comm < 0)
            throw data_error("line " + std::to_string(lineno) + ": negative community id");
        rows.emplace_back(node, comm);
    }
    long max_node = 0;
    for (const auto& [node, comm] : rows) max_node = std::max(max_node, node);
    Partition p;
    p.assign.assign(static_cast<size_t>(max_node), -1);
    for (const auto& [node, comm] : rows) {
        auto& slot = p.assign[static_cast<size_t>(node - 1)];
        if (slot != -1) throw data_error("duplicate row for node " + std::to_string(node));
        slot = static_cast<int>(comm);
        p.k = std::max(p.k, static_cast<int>(comm) + 1);
    }
    for (size_t i = 0; i < p.assign.size(); ++i)
        if (p.assign[i] == -1)
            throw data_error("partition file missing node " + std::to_string(i + 1));
    return p;
}

void save_partition(const Partition& p, std::ostream& out) {
    for (size_t i = 0; i < p.assign.size(); ++i) out << i + 1 << '\t' << p.assign[i] << '\n';
}

Partition load_partition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open " + path);
    return load_partition(in);
}

void save_partition_file(const Partition& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot open " + path + " for writing");
    save_partition(p, out);
}

}  // namespace commdet
