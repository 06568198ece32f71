/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <treeladder/ladder.hh>
#include <treeladder/analysis.hh>
#include <treeladder/error.hh>

#include <algorithm>
#include <string>

using std::map;
using std::optional;
using std::pair;
using std::span;
using std::string;
using std::vector;

namespace treeladder
{
    using std::to_string;

    namespace
    {
        auto invalid(NodeId t, const string & what) -> Error
        {
            return Error{ ErrorKind::InvalidLadder, "node " + to_string(t) + ": " + what };
        }

        auto strict_chain_below(const Tree & tree, NodeId t, span<const NodeId> chain) -> bool
        {
            for (std::size_t i = 0 ; i < chain.size() ; ++i) {
                if (! tree.contains(chain[i]) || ! tree.less(chain[i], t))
                    return false;
                if (i > 0 && ! tree.less(chain[i - 1], chain[i]))
                    return false;
            }
            return true;
        }

        /// Members of the chain strictly below s, i.e. its part under s.
        auto part_below(const Tree & tree, span<const NodeId> chain, NodeId s) -> Chain
        {
            Chain result;
            for (auto c : chain)
                if (tree.less(c, s))
                    result.push_back(c);
            return result;
        }

        auto part_at_or_below(const Tree & tree, span<const NodeId> chain, NodeId m) -> Chain
        {
            Chain result;
            for (auto c : chain)
                if (tree.leq(c, m))
                    result.push_back(c);
            return result;
        }
    }

    auto LadderSystem::empty(const Tree & tree) -> LadderSystem
    {
        LadderSystem result;
        result.rungs.assign(tree.size(), Chain{ });
        return result;
    }

    auto LadderSystem::max_rung_size() const -> std::size_t
    {
        std::size_t result = 0;
        for (auto & r : rungs)
            result = std::max(result, r.size());
        return result;
    }

    auto LadderSystem::total_rung_size() const -> std::size_t
    {
        std::size_t result = 0;
        for (auto & r : rungs)
            result += r.size();
        return result;
    }

    auto validate(const Tree & tree, const LadderSystem & ladder) -> void
    {
        if (static_cast<int>(ladder.rungs.size()) != tree.size())
            throw Error{ ErrorKind::InvalidLadder, "ladder has " + to_string(ladder.rungs.size())
                + " rungs for a tree of " + to_string(tree.size()) + " nodes" };

        for (NodeId t = 0 ; t < tree.size() ; ++t)
            if (! strict_chain_below(tree, t, ladder.rungs[t]))
                throw invalid(t, "rung is not an ascending chain of strict ancestors");

        for (auto t : ladder.supp) {
            if (! tree.contains(t))
                throw invalid(t, "support flag on a node outside the tree");
            if (ladder.rungs[t].empty())
                throw invalid(t, "support flag on an empty rung");
        }

        if (ladder.eta) {
            if (static_cast<int>(ladder.eta->chains.size()) != tree.size())
                throw Error{ ErrorKind::InvalidLadder, "true ladder size does not match the tree" };
            for (NodeId t = 0 ; t < tree.size() ; ++t) {
                auto & chain = ladder.eta->chains[t];
                if (chain.size() == 1 && chain[0] == t)
                    continue;
                if (! strict_chain_below(tree, t, chain))
                    throw invalid(t, "eta is neither [t] nor an ascending chain of strict ancestors");
            }
        }
    }

    auto make_ladder(const Tree & tree, map<NodeId, Chain> rungs, NodeSet supp,
            optional<map<NodeId, Chain>> eta) -> LadderSystem
    {
        LadderSystem result = LadderSystem::empty(tree);
        for (auto & [t, chain] : rungs) {
            tree.check(t);
            for (auto c : chain)
                tree.check(c);
            tree.sort_by_depth(chain);
            result.rungs[t] = chain;
        }
        result.supp = std::move(supp);

        if (eta) {
            result.eta = trivial_true_ladder(tree);
            for (auto & [t, chain] : *eta) {
                tree.check(t);
                for (auto c : chain)
                    tree.check(c);
                tree.sort_by_depth(chain);
                result.eta->chains[t] = chain;
            }
        }

        validate(tree, result);
        return result;
    }

    auto graph_of(const Tree & tree, const LadderSystem & ladder) -> LadderGraph
    {
        validate(tree, ladder);

        LadderGraph result{ Graph(tree.size()), { } };
        for (NodeId t = 0 ; t < tree.size() ; ++t)
            for (int i = 0 ; i < static_cast<int>(ladder.rungs[t].size()) ; ++i) {
                NodeId s = ladder.rungs[t][i];
                result.graph.add_edge(s, t);
                result.provenance.emplace(pair{ std::min(s, t), std::max(s, t) }, pair{ t, i });
            }
        return result;
    }

    auto is_transitive(const Tree & tree, const LadderSystem & ladder) -> Verdict<TransitivityWitness>
    {
        validate(tree, ladder);

        for (NodeId t = 0 ; t < tree.size() ; ++t) {
            auto & rung = ladder.rungs[t];
            for (std::size_t i = 0 ; i < rung.size() ; ++i) {
                auto & lower = ladder.rungs[rung[i]];
                for (std::size_t j = 0 ; j < i ; ++j)
                    if (std::find(lower.begin(), lower.end(), rung[j]) == lower.end())
                        return { TransitivityWitness{ t, rung[i], rung[j] } };
            }
        }
        return { };
    }

    auto is_coherent(const Tree & tree, const LadderSystem & ladder) -> Verdict<CoherenceWitness>
    {
        validate(tree, ladder);
        if (! ladder.supp.empty() && ! ladder.eta)
            throw Error{ ErrorKind::MissingEta, "a nonempty support needs a true ladder" };

        for (auto t : ladder.supp) {
            auto & rung = ladder.rungs[t];
            for (auto s : rung) {
                if (! ladder.in_supp(s)) {
                    if (ladder.rungs[s] != part_below(tree, rung, s))
                        return { CoherenceWitness{ 1, t, s } };
                    continue;
                }

                auto & eta_t = ladder.eta->chains[t];
                auto & eta_s = ladder.eta->chains[s];
                auto shared = part_below(tree, eta_t, s);
                if (shared.size() > eta_s.size() || ! std::equal(shared.begin(), shared.end(), eta_s.begin()))
                    return { CoherenceWitness{ 2, t, s } };

                // agreement strictly below the successor of max(shared) towards s,
                // i.e. at or below max(shared); vacuous when shared is empty
                if (! shared.empty()) {
                    NodeId top = shared.back();
                    if (part_at_or_below(tree, rung, top) != part_at_or_below(tree, ladder.rungs[s], top))
                        return { CoherenceWitness{ 3, t, s } };
                }
            }
        }
        return { };
    }

    auto is_sparse(const Tree & tree, const LadderSystem & ladder, const LadderGraph & x) -> Verdict<SparsityWitness>
    {
        validate(tree, ladder);
        if (x.graph.size() != tree.size())
            throw Error{ ErrorKind::InvalidArgument, "graph does not match the tree" };

        auto floors = cover_floors(tree, x.graph);

        // coverage is monotone in gamma, so the nearest lower rung member is the
        // hardest test for each s
        for (NodeId t = 0 ; t < tree.size() ; ++t) {
            auto & rung = ladder.rungs[t];
            for (std::size_t i = 1 ; i < rung.size() ; ++i) {
                NodeId r = rung[i - 1], s = rung[i];
                if (floors[s] <= tree.label(r)) {
                    auto cover = gamma_covered(tree, x.graph, s, tree.label(r));
                    return { SparsityWitness{ t, r, s, *cover.witness } };
                }
            }
        }
        return { };
    }

    auto prefix_cuts(const Tree & tree, NodeId t, span<const Label> levels) -> Chain
    {
        Chain result;
        for (auto e : levels) {
            if (! (e < tree.label(t)))
                throw Error{ ErrorKind::InvalidArgument, "cut level " + to_string(e)
                    + " is not below the label of node " + to_string(t) };
            result.push_back(tree.cut(t, e));
        }
        tree.sort_by_depth(result);
        result.erase(std::unique(result.begin(), result.end()), result.end());
        return result;
    }

    namespace
    {
        auto nu_entry(const OrdinalLadder & nu, Label delta) -> const vector<Label> &
        {
            auto e = nu.nu.find(delta);
            if (e == nu.nu.end())
                throw Error{ ErrorKind::MissingLadderEntry, "no ladder entry for limit label " + to_string(delta) };
            return e->second;
        }
    }

    auto derive_true_ladder(const Tree & tree, const OrdinalLadder & nu) -> TrueLadder
    {
        TrueLadder result = trivial_true_ladder(tree);
        for (NodeId t = 1 ; t < tree.size() ; ++t)
            if (nu.is_limit(tree.label(t)))
                result.chains[t] = prefix_cuts(tree, t, nu_entry(nu, tree.label(t)));
        return result;
    }

    auto derive_ladder_from_ordinal(const Tree & tree, const OrdinalLadder & nu) -> LadderSystem
    {
        LadderSystem result = LadderSystem::empty(tree);
        vector<NodeId> supp;
        for (NodeId t = 1 ; t < tree.size() ; ++t)
            if (nu.is_limit(tree.label(t))) {
                result.rungs[t] = prefix_cuts(tree, t, nu_entry(nu, tree.label(t)));
                if (! result.rungs[t].empty())
                    supp.push_back(t);
            }
        result.supp = NodeSet{ std::move(supp) };
        result.eta = derive_true_ladder(tree, nu);
        return result;
    }

    auto trivial_true_ladder(const Tree & tree) -> TrueLadder
    {
        TrueLadder result;
        result.chains.resize(tree.size());
        for (NodeId t = 0 ; t < tree.size() ; ++t)
            result.chains[t] = Chain{ t };
        return result;
    }

    auto extend_ladder(const LadderSystem & ladder, Chain new_rung, bool in_supp, optional<Chain> new_eta) -> LadderSystem
    {
        LadderSystem result = ladder;
        NodeId t = static_cast<NodeId>(result.rungs.size());
        result.rungs.push_back(std::move(new_rung));
        if (in_supp)
            result.supp.insert(t);
        if (result.eta || new_eta) {
            if (! result.eta) {
                result.eta = TrueLadder{ };
                for (NodeId v = 0 ; v < t ; ++v)
                    result.eta->chains.push_back(Chain{ v });
            }
            result.eta->chains.push_back(new_eta ? std::move(*new_eta) : Chain{ t });
        }
        return result;
    }
}
