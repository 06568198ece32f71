/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <treeladder/analysis.hh>
#include <treeladder/error.hh>
#include <treeladder/kernels.hh>

#include <algorithm>
#include <string>

using std::vector;

namespace treeladder
{
    auto Coloring::from_colors(vector<int> colors) -> Coloring
    {
        Coloring result;
        for (auto c : colors) {
            if (c < 0)
                throw Error{ ErrorKind::InvalidArgument, "colours are natural numbers, got " + std::to_string(c) };
            result.palette = std::max(result.palette, c + 1);
        }
        result.colors = std::move(colors);
        return result;
    }

    auto Coloring::constant(int size, int color) -> Coloring
    {
        return from_colors(vector<int>(size, color));
    }

    auto is_proper(const Graph & graph, const Coloring & coloring) -> bool
    {
        if (coloring.size() != graph.size())
            throw Error{ ErrorKind::InvalidArgument, "colouring size does not match the graph" };
        for (auto & [u, v] : graph.edges())
            if (coloring[u] == coloring[v])
                return false;
        return true;
    }

    namespace
    {
        auto check_sizes(const Tree & tree, const Graph & graph) -> void
        {
            if (graph.size() != tree.size())
                throw Error{ ErrorKind::InvalidArgument, "graph has " + std::to_string(graph.size())
                    + " vertices but the tree has " + std::to_string(tree.size()) + " nodes" };
        }
    }

    auto cover_floors(const Tree & tree, const Graph & graph) -> vector<Label>
    {
        return parallel::cover_floors(tree, graph);
    }

    auto gamma_covered(const Tree & tree, const Graph & graph, NodeId v, Label gamma) -> Coverage
    {
        check_sizes(tree, graph);
        tree.check(v);

        vector<NodeId> towards(tree.size(), -1);
        vector<NodeId> frontier{ v };
        towards[v] = v;

        while (! frontier.empty()) {
            auto hit = std::find_if(frontier.begin(), frontier.end(),
                    [&] (NodeId u) { return tree.label(u) <= gamma; });
            if (hit != frontier.end()) {
                Path path;
                for (NodeId u = *hit ; ; u = towards[u]) {
                    path.push_back(u);
                    if (u == v)
                        break;
                }
                return Coverage{ true, path };
            }

            vector<NodeId> next;
            for (auto u : frontier)
                for (auto w : graph.neighbours(u))
                    if (towards[w] == -1 && tree.less(w, u)) {
                        towards[w] = u;
                        next.push_back(w);
                    }
            std::sort(next.begin(), next.end(), [&] (NodeId a, NodeId b) { return tree.canonical_less(a, b); });
            frontier = std::move(next);
        }

        return Coverage{ false, std::nullopt };
    }
}
