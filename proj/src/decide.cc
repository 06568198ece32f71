/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <treeladder/builder.hh>
#include <treeladder/error.hh>
#include <treeladder/kernels.hh>

#include <algorithm>
#include <cstdint>

using std::int64_t;
using std::vector;

namespace treeladder
{
    auto to_string(Alternative alternative) -> std::string
    {
        switch (alternative) {
            case Alternative::Neither:   return "neither";
            case Alternative::Unbounded: return "unbounded";
            case Alternative::Covered:   return "covered";
            case Alternative::Both:      return "both";
        }
        return "?";
    }

    namespace
    {
        constexpr int64_t none = -2;

        /// Per colour: the highest cover floor of that colour inside each
        /// subtree, and the least such value over all subtrees at or above a
        /// node, where a subtree lacking the colour counts as none.
        struct ColourTables
        {
            vector<int64_t> highest, weakest;
        };

        auto tables_for(const Tree & tree, const vector<Label> & floors, const Coloring & f, int colour) -> ColourTables
        {
            ColourTables result{ vector<int64_t>(tree.size(), none), vector<int64_t>(tree.size(), none) };
            auto order = tree.canonical_order();
            for (auto it = order.rbegin() ; it != order.rend() ; ++it) {
                NodeId v = *it;
                if (f[v] == colour)
                    result.highest[v] = std::max(result.highest[v], floors[v].raw());
                result.weakest[v] = result.highest[v];
                for (auto c : tree.children(v))
                    result.weakest[v] = std::min(result.weakest[v], result.weakest[c]);
                if (auto p = tree.parent(v))
                    result.highest[*p] = std::max(result.highest[*p], result.highest[v]);
            }
            return result;
        }

        auto verdict(const Tree & tree, const ColourTables & tables, NodeId t0, Label bound) -> Alternative
        {
            bool unbounded = bound.raw() <= 0 || tables.weakest[t0] >= bound.raw();
            bool covered = tables.highest[t0] <= tree.label(t0).raw();
            if (unbounded && covered)
                return Alternative::Both;
            if (unbounded)
                return Alternative::Unbounded;
            if (covered)
                return Alternative::Covered;
            return Alternative::Neither;
        }
    }

    auto alternatives_at(const Tree & tree, const Graph & graph, const Coloring & f, NodeId t0, Label bound) -> vector<Alternative>
    {
        tree.check(t0);
        if (f.size() != tree.size())
            throw Error{ ErrorKind::InvalidArgument, "colouring size does not match the tree" };
        auto floors = cover_floors(tree, graph);
        vector<Alternative> result;
        for (int colour = 0 ; colour < f.palette ; ++colour)
            result.push_back(verdict(tree, tables_for(tree, floors, f, colour), t0, bound));
        return result;
    }

    auto decide_coloring(const Tree & tree, const Graph & graph, const Coloring & f, Label bound) -> Decision
    {
        if (f.size() != tree.size())
            throw Error{ ErrorKind::InvalidArgument, "colouring size does not match the tree" };
        auto floors = cover_floors(tree, graph);
        vector<ColourTables> tables;
        for (int colour = 0 ; colour < f.palette ; ++colour)
            tables.push_back(tables_for(tree, floors, f, colour));

        for (auto t : tree.canonical_order()) {
            vector<Alternative> verdicts;
            for (auto & table : tables)
                verdicts.push_back(verdict(tree, table, t, bound));
            if (std::find(verdicts.begin(), verdicts.end(), Alternative::Neither) == verdicts.end())
                return Decision{ t, verdicts };
        }
        return Decision{ std::nullopt, { } };
    }
}
