/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TREELADDER_GUARD_ANALYSIS_HH
#define TREELADDER_GUARD_ANALYSIS_HH 1

#include <treeladder/graph.hh>
#include <treeladder/ladder.hh>
#include <treeladder/tree.hh>

#include <array>
#include <optional>
#include <vector>

namespace treeladder
{
    /// Consecutive entries adjacent, no repeats.
    using Path = std::vector<NodeId>;

    /// Total map node -> colour, with every colour below the palette size.
    struct Coloring
    {
        std::vector<int> colors;
        int palette = 0;

        /// Palette is one more than the largest colour used.
        static auto from_colors(std::vector<int> colors) -> Coloring;
        static auto constant(int size, int color = 0) -> Coloring;

        auto size() const noexcept -> int { return static_cast<int>(colors.size()); }
        auto operator[] (NodeId v) const -> int { return colors.at(v); }

        auto operator== (const Coloring &) const -> bool = default;
    };

    auto is_proper(const Graph & graph, const Coloring & coloring) -> bool;

    // ---- monotone coverage ----

    /**
     * For each v, the least label of a node w from which a monotone
     * increasing path in `graph` reaches v (v itself counts, via the
     * zero-edge path). v is gamma-covered iff its floor is <= gamma.
     */
    auto cover_floors(const Tree & tree, const Graph & graph) -> std::vector<Label>;

    struct Coverage
    {
        bool covered = false;
        std::optional<Path> witness;
    };

    /// Witness path runs upward from the low point to v, fewest edges first.
    auto gamma_covered(const Tree & tree, const Graph & graph, NodeId v, Label gamma) -> Coverage;

    // ---- paths ----

    auto is_path(const Graph & graph, const Path & path) -> bool;

    /// A chain in the tree order, strictly increasing along the path.
    auto is_monotone_increasing(const Tree & tree, const Path & path) -> bool;

    /// Index of the lowest point when the path falls strictly then rises
    /// strictly in the tree order.
    auto vee_pivot(const Tree & tree, const Path & path) -> std::optional<std::size_t>;
    auto is_vee(const Tree & tree, const Path & path) -> bool;

    /// Shortest path between the ends of `path` using only its vertices,
    /// ties broken by canonical node order. Requires a transitive ladder.
    auto reduce_path(const Tree & tree, const LadderSystem & ladder, const Path & path) -> Path;

    // ---- separation and connectivity ----

    /// F_t: all of C_t for ordinary t; for t in the support, the members of
    /// C_t at or below the least eta_t point above meet(t, t').
    auto separator(const Tree & tree, const LadderSystem & ladder, NodeId t, NodeId t_prime) -> NodeSet;

    auto separates(const Graph & graph, const NodeSet & cut, NodeId s, NodeId t) -> bool;

    /// Maximum number of internally vertex-disjoint s-t paths (a direct
    /// edge counts as one such path).
    auto pair_connectivity(const Graph & graph, NodeId s, NodeId t) -> int;

    struct PairConnectivity
    {
        int value;
        NodeId s, t;

        auto operator== (const PairConnectivity &) const -> bool = default;
    };

    /// Minimising pair, first in lexicographic order of (s, t) with s < t.
    auto min_pair_connectivity_over(const Graph & graph, const NodeSet & set) -> PairConnectivity;

    // ---- cycles and forbidden patterns ----

    /// A cycle formed by two monotone paths from `low` to `high`. Both arcs
    /// are listed upward; `long_arc` has at least one interior vertex.
    struct SpecialCycle
    {
        Path long_arc, short_arc;
    };

    auto find_special_cycle(const Tree & tree, const Graph & graph) -> std::optional<SpecialCycle>;

    auto find_triangle(const Graph & graph) -> std::optional<std::array<NodeId, 3>>;

    /// An embedding of H_{m,m+2}: edges x_i y_j (i <= j), x_i z, x_i z'.
    struct HEmbedding
    {
        std::vector<NodeId> x, y;
        NodeId z, z_prime;
    };

    auto is_h_embedding(const Graph & graph, const HEmbedding & h) -> bool;

    auto find_h_pattern(const Tree & tree, const Graph & graph, int m) -> std::optional<HEmbedding>;

    // ---- colouring ----

    struct ChromaticOptions
    {
        int vertex_budget = 200;
        long search_budget = 20'000'000;
    };

    struct ChromaticResult
    {
        int value;
        Coloring witness;
    };

    /// Exact, by DSATUR branch and bound between a clique lower bound and a
    /// DSATUR upper bound. Throws ResourceLimitError past either budget.
    auto chromatic_number(const Graph & graph, const ChromaticOptions & options = { }) -> ChromaticResult;

    /// A maximum clique, members ascending by id.
    auto max_clique(const Graph & graph) -> std::vector<NodeId>;

    struct DefeaterColoring
    {
        Coloring flattened;
        std::vector<int> level;
        int max_level = 0;
    };

    /// g(t) = (f(t), g1(t)) where g1(t) is one more than the largest g1 over
    /// same-coloured members of C_t; flattened as f * (1 + max g1) + g1.
    auto defeater_coloring(const Tree & tree, const LadderSystem & ladder, const Coloring & f) -> DefeaterColoring;

    struct MonoClique
    {
        NodeId t;
        Chain members;
    };

    auto find_mono_clique(const Tree & tree, const LadderSystem & ladder, const Coloring & f) -> std::optional<MonoClique>;

    /// A maximal clique whose members below its top are not all in C_top.
    struct CliqueChainWitness
    {
        Chain clique;
        std::optional<NodeId> offender;
    };

    auto clique_chain_check(const Tree & tree, const LadderSystem & ladder, const Graph & graph) -> Verdict<CliqueChainWitness>;
}

#endif
