/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TREELADDER_GUARD_LADDER_HH
#define TREELADDER_GUARD_LADDER_HH 1

#include <treeladder/graph.hh>
#include <treeladder/tree.hh>

#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace treeladder
{
    /// Ordered list of node ids; for chains, ascending by tree order.
    using Chain = std::vector<NodeId>;

    /// Per-node chains eta_t: [t] for ordinary nodes, a chain of strict
    /// ancestors for limit-role nodes.
    struct TrueLadder
    {
        std::vector<Chain> chains;

        auto operator== (const TrueLadder &) const -> bool = default;
    };

    /**
     * A ladder system over a tree: for each node t a chain C_t of strict
     * ancestors, a set of nodes flagged as infinite-role (the support), and
     * optionally a true ladder witnessing coherence.
     */
    struct LadderSystem
    {
        std::vector<Chain> rungs;
        NodeSet supp;
        std::optional<TrueLadder> eta;

        static auto empty(const Tree & tree) -> LadderSystem;

        auto rung(NodeId t) const -> std::span<const NodeId> { return rungs.at(t); }
        auto in_supp(NodeId t) const -> bool { return supp.contains(t); }
        auto max_rung_size() const -> std::size_t;
        auto total_rung_size() const -> std::size_t;

        auto operator== (const LadderSystem &) const -> bool = default;
    };

    /// A ladder on the labels themselves: nu_delta, plus the labels whose
    /// nodes play the limit role.
    struct OrdinalLadder
    {
        std::map<Label, std::vector<Label>> nu;
        std::set<Label> limit;

        auto is_limit(Label label) const -> bool { return limit.contains(label); }

        auto operator== (const OrdinalLadder &) const -> bool = default;
    };

    /// X_C together with where each edge came from.
    struct LadderGraph
    {
        Graph graph;

        /// (lower, upper) -> (t, position of the other end within C_t)
        std::map<std::pair<NodeId, NodeId>, std::pair<NodeId, int>> provenance;
    };

    /// Absence of a witness means the predicate holds.
    template <typename Witness_>
    struct Verdict
    {
        std::optional<Witness_> witness;

        auto holds() const noexcept -> bool { return ! witness; }
        explicit operator bool() const noexcept { return holds(); }
    };

    /// Some member of C_t below s is missing from C_s.
    struct TransitivityWitness
    {
        NodeId t, s, missing;
    };

    /// Which of the three coherence conditions failed, and at which pair.
    struct CoherenceWitness
    {
        int condition;
        NodeId t, s;
    };

    struct SparsityWitness
    {
        NodeId t, r, s;
        Chain covering_path;
    };

    /// Checks every structural invariant of a ladder system and its true
    /// ladder; throws invalid-ladder naming the offending node.
    auto validate(const Tree & tree, const LadderSystem & ladder) -> void;

    /// Builds a ladder system from unsorted rungs, sorting them by depth.
    auto make_ladder(const Tree & tree, std::map<NodeId, Chain> rungs, NodeSet supp = { },
            std::optional<std::map<NodeId, Chain>> eta = std::nullopt) -> LadderSystem;

    auto graph_of(const Tree & tree, const LadderSystem & ladder) -> LadderGraph;

    auto is_transitive(const Tree & tree, const LadderSystem & ladder) -> Verdict<TransitivityWitness>;

    auto is_coherent(const Tree & tree, const LadderSystem & ladder) -> Verdict<CoherenceWitness>;

    auto is_sparse(const Tree & tree, const LadderSystem & ladder, const LadderGraph & x) -> Verdict<SparsityWitness>;

    /// Prefix cuts of t at each e in `levels`, deduplicated, ascending.
    auto prefix_cuts(const Tree & tree, NodeId t, std::span<const Label> levels) -> Chain;

    auto derive_true_ladder(const Tree & tree, const OrdinalLadder & nu) -> TrueLadder;

    auto derive_ladder_from_ordinal(const Tree & tree, const OrdinalLadder & nu) -> LadderSystem;

    /// The trivial true ladder, eta_t = [t] everywhere.
    auto trivial_true_ladder(const Tree & tree) -> TrueLadder;

    /// The ladder with one more node appended (the leaf most recently added
    /// to its tree), carrying the given rung, support flag and eta chain.
    auto extend_ladder(const LadderSystem & ladder, Chain new_rung, bool in_supp,
            std::optional<Chain> new_eta) -> LadderSystem;
}

#endif
