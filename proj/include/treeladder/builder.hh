/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TREELADDER_GUARD_BUILDER_HH
#define TREELADDER_GUARD_BUILDER_HH 1

#include <treeladder/analysis.hh>
#include <treeladder/ladder.hh>
#include <treeladder/tree.hh>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace treeladder
{
    /**
     * A finite challenge (A, f) against which one new node is built. The
     * colouring is total on the tree, but only its values on A matter. The
     * sparse builder reads t0, the coherent builder reads the chain.
     */
    struct Challenge
    {
        NodeSet a;
        Coloring f;
        std::optional<NodeId> t0;
        std::vector<NodeSet> chain;
    };

    /**
     * The psi / phi maps of one build, keyed by binary strings written as
     * "" , "0", "01", .... Strings whose branch died (no incomparable pair
     * available) simply have no psi entry.
     */
    struct BuilderState
    {
        int k = 0;
        std::map<std::string, NodeId> psi, phi;

        /// |R_x| for every x that had psi(x) and a phi level.
        std::map<std::string, int> r_sizes;

        /// l_n for n < k.
        std::vector<int> schedule;

        /// Coherent builds only: eps_{-1}, eps_0, ..., eps_{k-1}.
        std::vector<Label> markers;

        std::string x_xi;

        /// phi(x) if defined, else psi(x).
        auto top(const std::string & x) const -> NodeId;

        /// Defined phi values along the prefixes of x, shortest first.
        auto phi_chain(const std::string & x) const -> Chain;
    };

    struct BuildResult
    {
        Tree tree;
        LadderSystem ladder;
        NodeId t_xi;
        BuilderState state;
    };

    auto extend_transitive(const Tree & tree, const LadderSystem & ladder, const Challenge & challenge,
            int k, Label new_label) -> BuildResult;

    auto extend_coherent(const Tree & tree, const LadderSystem & ladder, const Challenge & challenge,
            const OrdinalLadder & nu, int k, Label new_label) -> BuildResult;

    /// With `require_decider`, challenge.t0 must decide f (bound: the
    /// largest label); otherwise the caller waives that check.
    auto extend_sparse(const Tree & tree, const LadderSystem & ladder, const Challenge & challenge,
            int k, Label new_label, bool require_decider = false) -> BuildResult;

    enum class Alternative
    {
        Neither,
        Unbounded,
        Covered,
        Both
    };

    auto to_string(Alternative alternative) -> std::string;

    /// Alternatives per colour for a candidate t0; gamma ranges over the
    /// naturals below `bound`, and covered means label(t0)-covered.
    auto alternatives_at(const Tree & tree, const Graph & graph, const Coloring & f, NodeId t0,
            Label bound) -> std::vector<Alternative>;

    struct Decision
    {
        std::optional<NodeId> t0;
        std::vector<Alternative> verdicts;
    };

    /// The canonically first node at which every colour satisfies one of
    /// the alternatives, or no node at all.
    auto decide_coloring(const Tree & tree, const Graph & graph, const Coloring & f, Label bound) -> Decision;

    enum class BuilderMode
    {
        Transitive,
        Coherent,
        Sparse
    };

    auto to_string(BuilderMode mode) -> std::string;
    auto parse_builder_mode(const std::string & name) -> BuilderMode;

    struct DefeatOptions
    {
        BuilderMode mode = BuilderMode::Transitive;
        int k = 1;
        Label new_label;

        /// Coherent mode.
        OrdinalLadder nu;
    };

    struct DefeatRow
    {
        NodeId t_xi;
        Chain rung;
        std::optional<NodeId> t0;

        /// One entry per colour of f: does C_{t_xi} hold a node of it?
        std::vector<bool> defeated;

        BuilderState state;

        auto fully_defeated() const -> bool;
    };

    struct DefeatReport
    {
        std::vector<DefeatRow> rows;

        auto defeated_fraction() const -> double;
    };

    /// The challenge used for one colouring: every non-root node below the
    /// new label, plus the mode-specific extras.
    auto defeat_challenge(const Tree & tree, const LadderSystem & ladder, const Coloring & f,
            const DefeatOptions & options) -> Challenge;

    auto defeat_one(const Tree & tree, const LadderSystem & ladder, const Coloring & f,
            const DefeatOptions & options) -> DefeatRow;

    /// Colourings are played independently, in parallel where available.
    auto defeat_colorings(const Tree & tree, const LadderSystem & ladder, const std::vector<Coloring> & colorings,
            const DefeatOptions & options) -> DefeatReport;
}

#endif
