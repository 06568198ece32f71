/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <treeladder/kernels.hh>
#include <treeladder/error.hh>

#include <limits>
#include <string>

using std::vector;

namespace treeladder::serial
{
    auto cover_floors(const Tree & tree, const Graph & graph) -> vector<Label>
    {
        if (graph.size() != tree.size())
            throw Error{ ErrorKind::InvalidArgument, "graph has " + std::to_string(graph.size())
                + " vertices but the tree has " + std::to_string(tree.size()) + " nodes" };

        // canonical order lists shallower nodes first, so every strict
        // ancestor is final before it is read
        vector<Label> floor(tree.size());
        for (auto v : tree.canonical_order()) {
            floor[v] = tree.label(v);
            for (auto u : graph.neighbours(v))
                if (tree.less(u, v))
                    floor[v] = std::min(floor[v], floor[u]);
        }
        return floor;
    }

    auto min_pair_connectivity_over(const Graph & graph, const NodeSet & set) -> PairConnectivity
    {
        if (set.size() < 2)
            throw Error{ ErrorKind::InvalidArgument, "need at least two vertices" };

        auto ids = set.ids();
        PairConnectivity best{ std::numeric_limits<int>::max(), -1, -1 };
        for (std::size_t i = 0 ; i < ids.size() ; ++i)
            for (std::size_t j = i + 1 ; j < ids.size() ; ++j) {
                int value = pair_connectivity(graph, ids[i], ids[j]);
                if (value < best.value)
                    best = PairConnectivity{ value, ids[i], ids[j] };
            }
        return best;
    }

    auto defeat_colorings(const Tree & tree, const LadderSystem & ladder, const vector<Coloring> & colorings,
            const DefeatOptions & options) -> DefeatReport
    {
        DefeatReport report;
        for (auto & f : colorings)
            report.rows.push_back(defeat_one(tree, ladder, f, options));
        return report;
    }
}
