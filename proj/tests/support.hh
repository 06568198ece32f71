/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TREELADDER_GUARD_TESTS_SUPPORT_HH
#define TREELADDER_GUARD_TESTS_SUPPORT_HH 1

#include <treeladder/analysis.hh>
#include <treeladder/ladder.hh>
#include <treeladder/tree.hh>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace treeladder::test
{
    /// All increasing sequences over {1, 2, 3}: eight nodes.
    inline auto tree_a() -> Tree
    {
        std::vector<std::int64_t> values{ 1, 2, 3 };
        return generate_ts_tree(values, 3);
    }

    /// Sequences over {1..6} of length at most 3: 42 nodes.
    inline auto base_42() -> Tree
    {
        std::vector<std::int64_t> values{ 1, 2, 3, 4, 5, 6 };
        return generate_ts_tree(values, 3);
    }

    inline auto node(const Tree & tree, std::vector<std::int64_t> sequence) -> NodeId
    {
        for (NodeId v = 0 ; v < tree.size() ; ++v)
            if (tree.sequence(v) == sequence)
                return v;
        throw std::logic_error("no such node");
    }

    /// C_[1,2] = ([1]), C_[1,2,3] = ([1],[1,2]).
    inline auto ladder_a(const Tree & t) -> LadderSystem
    {
        return make_ladder(t, { { node(t, { 1, 2 }), { node(t, { 1 }) } },
                { node(t, { 1, 2, 3 }), { node(t, { 1 }), node(t, { 1, 2 }) } } });
    }

    /// C_[1,2] = C_[1,3] = ([1]), C_[2,3] = ([2]), C_[1,2,3] = ([1,2]).
    inline auto ladder_b(const Tree & t) -> LadderSystem
    {
        return make_ladder(t, { { node(t, { 1, 2 }), { node(t, { 1 }) } },
                { node(t, { 1, 3 }), { node(t, { 1 }) } },
                { node(t, { 2, 3 }), { node(t, { 2 }) } },
                { node(t, { 1, 2, 3 }), { node(t, { 1, 2 }) } } });
    }
}

#endif
