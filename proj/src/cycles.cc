/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <treeladder/analysis.hh>
#include <treeladder/error.hh>

#include "flow.hh"

#include <algorithm>
#include <set>

using std::optional;
using std::vector;

namespace treeladder
{
    namespace
    {
        /// Two internally disjoint monotone a -> b paths inside the chain
        /// from a up to b, if they exist.
        auto two_arcs(const Tree & tree, const Graph & graph, NodeId a, NodeId b) -> optional<SpecialCycle>
        {
            vector<NodeId> interval;
            for (NodeId v = b ; ; v = *tree.parent(v)) {
                interval.push_back(v);
                if (v == a)
                    break;
            }
            std::reverse(interval.begin(), interval.end());

            int k = static_cast<int>(interval.size());
            detail::FlowNetwork network(2 * k);
            for (int i = 0 ; i < k ; ++i)
                network.add_arc(2 * i, 2 * i + 1, (i == 0 || i == k - 1) ? 2 : 1);
            for (int i = 0 ; i < k ; ++i)
                for (int j = i + 1 ; j < k ; ++j)
                    if (graph.adjacent(interval[i], interval[j]))
                        network.add_arc(2 * i + 1, 2 * j, 1);

            if (network.max_flow(1, 2 * (k - 1), 2) < 2)
                return std::nullopt;

            std::set<int> used;
            vector<Path> arcs;
            for (int round = 0 ; round < 2 ; ++round) {
                Path arc{ a };
                int at = 0;
                while (at != k - 1) {
                    for (int e : network.out_arcs(2 * at + 1))
                        if (network.is_forward(e) && network.flow(e) > 0 && ! used.contains(e)) {
                            used.insert(e);
                            at = network.target(e) / 2;
                            break;
                        }
                    arc.push_back(interval[at]);
                }
                arcs.push_back(std::move(arc));
            }

            if (arcs[0].size() < arcs[1].size() || (arcs[0].size() == arcs[1].size() && arcs[1] < arcs[0]))
                std::swap(arcs[0], arcs[1]);
            return SpecialCycle{ std::move(arcs[0]), std::move(arcs[1]) };
        }
    }

    auto find_special_cycle(const Tree & tree, const Graph & graph) -> optional<SpecialCycle>
    {
        if (graph.size() != tree.size())
            throw Error{ ErrorKind::InvalidArgument, "graph does not match the tree" };

        for (auto b : tree.canonical_order()) {
            if (graph.degree(b) < 2)
                continue;
            for (auto a : tree.ancestors(b)) {
                if (graph.degree(a) < 2)
                    continue;
                if (auto cycle = two_arcs(tree, graph, a, b))
                    return cycle;
            }
        }
        return std::nullopt;
    }

    auto find_triangle(const Graph & graph) -> optional<std::array<NodeId, 3>>
    {
        for (auto & [u, v] : graph.edges())
            for (auto w : graph.neighbours(v))
                if (w > v && graph.adjacent(u, w))
                    return std::array<NodeId, 3>{ u, v, w };
        return std::nullopt;
    }

    auto is_h_embedding(const Graph & graph, const HEmbedding & h) -> bool
    {
        std::size_t m = h.x.size();
        if (m == 0 || h.y.size() != m)
            return false;

        std::set<NodeId> seen;
        auto fresh = [&] (NodeId v) { return v >= 0 && v < graph.size() && seen.insert(v).second; };
        for (std::size_t i = 0 ; i < m ; ++i)
            if (! fresh(h.x[i]) || ! fresh(h.y[i]))
                return false;
        if (! fresh(h.z) || ! fresh(h.z_prime))
            return false;

        for (std::size_t i = 0 ; i < m ; ++i) {
            if (! graph.adjacent(h.x[i], h.z) || ! graph.adjacent(h.x[i], h.z_prime))
                return false;
            for (std::size_t j = i ; j < m ; ++j)
                if (! graph.adjacent(h.x[i], h.y[j]))
                    return false;
        }
        return true;
    }

    namespace
    {
        struct HSearch
        {
            const Tree & tree;
            const Graph & graph;
            int m;
            HEmbedding h;
            vector<char> used;

            auto common_free_neighbours(int upto) const -> int
            {
                int count = 0;
                for (auto w : graph.neighbours(h.x[0])) {
                    if (used[w])
                        continue;
                    bool all = true;
                    for (int i = 1 ; i < upto && all ; ++i)
                        all = graph.adjacent(h.x[i], w);
                    if (all)
                        ++count;
                }
                return count;
            }

            /// x_i needs z, z' and y_i .. y_{m-1}.
            auto x_candidates(int i) const -> vector<NodeId>
            {
                vector<NodeId> result;
                for (NodeId v = 0 ; v < graph.size() ; ++v)
                    if (! used[v] && graph.degree(v) >= m - i + 2)
                        result.push_back(v);

                // x's comparable with those already placed come first
                std::stable_sort(result.begin(), result.end(), [&] (NodeId a, NodeId b) {
                        auto score = [&] (NodeId v) {
                            int s = 0;
                            for (int j = 0 ; j < i ; ++j)
                                s += tree.comparable(v, h.x[j]);
                            return s;
                        };
                        return score(a) > score(b);
                        });
                return result;
            }

            auto adjacent_to_x(NodeId v, int from, int to) const -> bool
            {
                for (int i = from ; i < to ; ++i)
                    if (! graph.adjacent(h.x[i], v))
                        return false;
                return true;
            }

            auto place_y(int j) -> bool
            {
                if (j < 0)
                    return place_z();
                for (auto v : graph.neighbours(h.x[j])) {
                    if (used[v] || graph.degree(v) < j + 1 || ! adjacent_to_x(v, 0, j + 1))
                        continue;
                    used[v] = 1;
                    h.y[j] = v;
                    if (place_y(j - 1))
                        return true;
                    used[v] = 0;
                }
                return false;
            }

            auto place_z() -> bool
            {
                vector<NodeId> candidates;
                for (auto v : graph.neighbours(h.x[0]))
                    if (! used[v] && adjacent_to_x(v, 1, m))
                        candidates.push_back(v);
                if (candidates.size() < 2)
                    return false;
                h.z = candidates[0];
                h.z_prime = candidates[1];
                return true;
            }

            auto place_x(int i) -> bool
            {
                if (i == m)
                    return place_y(m - 1);
                for (auto v : x_candidates(i)) {
                    h.x[i] = v;
                    used[v] = 1;
                    // z, z' and y_{m-1} all see every x
                    if (common_free_neighbours(i + 1) >= 3 && place_x(i + 1))
                        return true;
                    used[v] = 0;
                }
                return false;
            }
        };
    }

    auto find_h_pattern(const Tree & tree, const Graph & graph, int m) -> optional<HEmbedding>
    {
        if (m < 1)
            throw Error{ ErrorKind::InvalidArgument, "pattern size must be at least 1" };
        if (graph.size() != tree.size())
            throw Error{ ErrorKind::InvalidArgument, "graph does not match the tree" };
        if (graph.size() < 2 * m + 2)
            return std::nullopt;

        HSearch search{ tree, graph, m, HEmbedding{ vector<NodeId>(m), vector<NodeId>(m), -1, -1 },
            vector<char>(graph.size(), 0) };
        if (search.place_x(0))
            return search.h;
        return std::nullopt;
    }
}
