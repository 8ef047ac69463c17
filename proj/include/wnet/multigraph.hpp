#pragma once

#include <cstdint>
#include <vector>

namespace wnet {

struct MultiGraphEdge {
    std::int64_t id = 0;
    std::int64_t source = 0;
    std::int64_t target = 0;
    bool self_loop = false;
};

// Undirected multigraph. Parallel edges are permitted; self-loops exist
// only as initialization markers and are excluded from analysis unless
// explicitly requested.
struct MultiGraph {
    std::int64_t node_count = 0;
    std::vector<MultiGraphEdge> edges;

    // Number of non-self-loop edges.
    std::int64_t link_count() const {
        std::int64_t n = 0;
        for (const auto& e : edges) n += e.self_loop ? 0 : 1;
        return n;
    }

    std::int64_t self_loop_count() const {
        return static_cast<std::int64_t>(edges.size()) - link_count();
    }

    // One entry per node. A self-loop contributes 1 to its node when
    // included, 0 when excluded.
    std::vector<std::int64_t> degree_sequence(bool include_self_loops) const;
};

}  // namespace wnet
