/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TREELADDER_GUARD_GRAPH_HH
#define TREELADDER_GUARD_GRAPH_HH 1

#include <span>
#include <utility>
#include <vector>

namespace treeladder
{
    using NodeId = int;

    /**
     * Simple undirected graph on vertices 0..size()-1, adjacency lists kept
     * sorted so that every traversal visits neighbours in id order.
     */
    class Graph
    {
        private:
            std::vector<std::vector<NodeId>> _adjacency;
            long _edge_count = 0;

        public:
            Graph() = default;
            explicit Graph(int size);

            auto size() const noexcept -> int { return static_cast<int>(_adjacency.size()); }
            auto edge_count() const noexcept -> long { return _edge_count; }

            /// Returns false if the edge was already present. Loops are rejected.
            auto add_edge(NodeId u, NodeId v) -> bool;
            auto remove_edge(NodeId u, NodeId v) -> bool;
            auto adjacent(NodeId u, NodeId v) const -> bool;
            auto neighbours(NodeId v) const -> std::span<const NodeId>;
            auto degree(NodeId v) const -> int;
            auto max_degree() const -> int;

            /// Every edge once, as (smaller id, larger id), in lexicographic order.
            auto edges() const -> std::vector<std::pair<NodeId, NodeId>>;

            /// Induced subgraph on `keep`; vertex i of the result is keep[i].
            auto induced(std::span<const NodeId> keep) const -> Graph;

            auto operator== (const Graph &) const -> bool = default;
    };
}

#endif
