/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TREELADDER_GUARD_GENERATE_HH
#define TREELADDER_GUARD_GENERATE_HH 1

#include <treeladder/analysis.hh>
#include <treeladder/ladder.hh>
#include <treeladder/tree.hh>

#include <cstdint>
#include <random>
#include <span>

namespace treeladder
{
    using Rng = std::mt19937_64;

    /// A random subtree of generate_ts_tree(values, depth) with `size` nodes
    /// (fewer if the full tree is smaller), closed under parents.
    auto random_ts_subtree(std::span<const std::int64_t> values, int depth, int size, Rng & rng) -> Tree;

    /// Each node gets a rung with probability `density`: a random ancestor c
    /// together with a random part of C_c, at most `max_rung` members.
    /// Every transitive system arises this way.
    auto random_transitive(const Tree & tree, Rng & rng, int max_rung, double density) -> LadderSystem;

    /// Mostly full-chain rungs, a random support with eta a prefix of the
    /// rung; support members are dropped until the result is coherent.
    auto random_coherent(const Tree & tree, Rng & rng, int max_rung, double density, double supp_rate) -> LadderSystem;

    /// Rungs grown upward, keeping a candidate only when it is not covered
    /// at the label of the previous member, so the result is sparse.
    auto random_sparse(const Tree & tree, Rng & rng, int max_rung, double density) -> LadderSystem;

    /// Random chains of ancestors with no further structure.
    auto random_ladder(const Tree & tree, Rng & rng, int max_rung, double density) -> LadderSystem;

    auto random_coloring(int size, int palette, Rng & rng) -> Coloring;
}

#endif
