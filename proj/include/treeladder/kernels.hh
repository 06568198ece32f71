/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TREELADDER_GUARD_KERNELS_HH
#define TREELADDER_GUARD_KERNELS_HH 1

#include <treeladder/analysis.hh>
#include <treeladder/builder.hh>

#include <vector>

// The data-parallel loops exist twice. The serial versions are the
// reference the tests compare against; the public entry points in
// analysis.hh and builder.hh use the parallel ones.

namespace treeladder::serial
{
    auto cover_floors(const Tree & tree, const Graph & graph) -> std::vector<Label>;

    auto min_pair_connectivity_over(const Graph & graph, const NodeSet & set) -> PairConnectivity;

    auto defeat_colorings(const Tree & tree, const LadderSystem & ladder, const std::vector<Coloring> & colorings,
            const DefeatOptions & options) -> DefeatReport;
}

namespace treeladder::parallel
{
    /// One depth level at a time, nodes within a level in parallel.
    auto cover_floors(const Tree & tree, const Graph & graph) -> std::vector<Label>;

    /// Pairs in parallel; ties resolved to the lexicographically first pair.
    auto min_pair_connectivity_over(const Graph & graph, const NodeSet & set) -> PairConnectivity;

    /// Colourings in parallel; if any build throws, the exception of the
    /// first failing colouring is rethrown.
    auto defeat_colorings(const Tree & tree, const LadderSystem & ladder, const std::vector<Coloring> & colorings,
            const DefeatOptions & options) -> DefeatReport;

    /// Threads OpenMP would use, 1 without OpenMP.
    auto thread_count() -> int;
}

#endif
