/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <treeladder/builder.hh>
#include <treeladder/error.hh>
#include <treeladder/kernels.hh>

#include <algorithm>
#include <functional>

using std::function;
using std::optional;
using std::span;
using std::string;
using std::vector;

namespace treeladder
{
    auto BuilderState::top(const string & x) const -> NodeId
    {
        if (auto p = phi.find(x) ; p != phi.end())
            return p->second;
        return psi.at(x);
    }

    auto BuilderState::phi_chain(const string & x) const -> Chain
    {
        Chain result;
        for (std::size_t n = 0 ; n <= x.size() ; ++n)
            if (auto p = phi.find(x.substr(0, n)) ; p != phi.end())
                result.push_back(p->second);
        return result;
    }

    namespace
    {
        auto invalid_challenge(const string & what) -> Error
        {
            return Error{ ErrorKind::InvalidChallenge, what };
        }

        auto canonical(const Tree & tree, vector<NodeId> ids) -> vector<NodeId>
        {
            std::sort(ids.begin(), ids.end(), [&] (NodeId a, NodeId b) { return tree.canonical_less(a, b); });
            return ids;
        }

        auto check_common(const Tree & tree, const Challenge & challenge, int k, Label new_label) -> void
        {
            if (k < 0)
                throw Error{ ErrorKind::InvalidArgument, "depth must be natural" };
            if (new_label.is_bottom())
                throw Error{ ErrorKind::InvalidArgument, "the new label must be a natural number" };
            if (tree.max_label() > new_label)
                throw Error{ ErrorKind::InvalidArgument, "the new label " + to_string(new_label)
                    + " does not exceed the tree's labels" };
            if (challenge.f.size() != tree.size())
                throw invalid_challenge("colouring is not total on the tree");

            auto check_set = [&] (const NodeSet & set) {
                for (auto v : set) {
                    if (! tree.contains(v))
                        throw invalid_challenge("node " + std::to_string(v) + " is not in the tree");
                    if (tree.label(v) >= new_label)
                        throw invalid_challenge("node " + std::to_string(v) + " is not below the new label");
                }
            };
            check_set(challenge.a);
            for (auto & level : challenge.chain)
                check_set(level);
        }

        /// What distinguishes the three constructions.
        struct Policy
        {
            bool require_complete = true;
            function<optional<NodeId> ()> root;
            function<vector<NodeId> (int level)> psi_pool;
            function<vector<NodeId> (int level)> r_pool;
            function<bool (const string & x, NodeId base, NodeId s, const Chain & earlier)> accept;
        };

        struct Outcome
        {
            BuilderState state;
            NodeId parent;
            Chain rung;
        };

        auto run_build(const Tree & tree, const Graph & graph, const Coloring & f, int k, Label new_label,
                const Policy & policy) -> Outcome
        {
            BuilderState state;
            state.k = k;
            for (int n = 0 ; n < k ; ++n)
                state.schedule.push_back(f.palette > 0 ? n % f.palette : 0);

            auto root = policy.root();
            if (! root)
                throw invalid_challenge("no admissible starting node");
            state.psi.emplace("", *root);

            int terminal = std::max(k - 1, 0);
            vector<string> level{ "" };
            for (int n = 0 ; n <= terminal ; ++n) {
                vector<string> next;
                auto r_pool = n < k ? policy.r_pool(n) : vector<NodeId>{ };
                auto psi_pool = n < terminal ? policy.psi_pool(n + 1) : vector<NodeId>{ };

                for (auto & x : level) {
                    if (! state.psi.contains(x))
                        continue;
                    NodeId base = state.psi.at(x);

                    if (n < k) {
                        auto earlier = n > 0 ? state.phi_chain(x.substr(0, n - 1)) : Chain{ };
                        int size = 0;
                        optional<NodeId> first;
                        for (auto s : r_pool) {
                            if (! tree.leq(base, s) || f[s] != state.schedule[n])
                                continue;
                            if (policy.require_complete && ! std::all_of(earlier.begin(), earlier.end(),
                                        [&] (NodeId c) { return graph.adjacent(c, s); }))
                                continue;
                            if (policy.accept && ! policy.accept(x, base, s, earlier))
                                continue;
                            ++size;
                            if (! first)
                                first = s;
                        }
                        state.r_sizes[x] = size;
                        if (first)
                            state.phi.emplace(x, *first);
                    }

                    if (n < terminal) {
                        NodeId top = state.top(x);
                        vector<NodeId> above;
                        for (auto v : psi_pool)
                            if (tree.less(top, v))
                                above.push_back(v);
                        bool found = false;
                        for (std::size_t i = 0 ; i < above.size() && ! found ; ++i)
                            for (std::size_t j = i + 1 ; j < above.size() && ! found ; ++j)
                                if (! tree.comparable(above[i], above[j])) {
                                    state.psi.emplace(x + "0", above[i]);
                                    state.psi.emplace(x + "1", above[j]);
                                    found = true;
                                }
                    }

                    next.push_back(x + "0");
                    next.push_back(x + "1");
                }

                if (n < terminal)
                    level = std::move(next);
            }

            bool any_branch = false;
            for (auto & x : level) {
                if (! state.psi.contains(x))
                    continue;
                any_branch = true;
                NodeId top = state.top(x);
                auto children = tree.children(top);
                if (std::none_of(children.begin(), children.end(), [&] (NodeId c) { return tree.label(c) == new_label; })) {
                    state.x_xi = x;
                    return Outcome{ state, top, state.phi_chain(x) };
                }
            }

            if (! any_branch)
                throw invalid_challenge("no branch of depth " + std::to_string(terminal) + " survives");
            throw Error{ ErrorKind::Exhausted, "every branch top already carries a node labelled " + to_string(new_label) };
        }

        auto finish(const Tree & tree, const LadderSystem & ladder, Outcome outcome, Label new_label,
                bool in_supp, optional<Chain> eta) -> BuildResult
        {
            auto [grown, t_xi] = tree.with_leaf(outcome.parent, new_label);
            auto grown_ladder = extend_ladder(ladder, outcome.rung, in_supp, std::move(eta));
            return BuildResult{ std::move(grown), std::move(grown_ladder), t_xi, std::move(outcome.state) };
        }

        auto members(const Tree & tree, const NodeSet & set) -> vector<NodeId>
        {
            return canonical(tree, vector<NodeId>(set.begin(), set.end()));
        }

        auto below_labels(span<const Label> levels, Label bound) -> vector<Label>
        {
            vector<Label> result;
            for (auto e : levels)
                if (e < bound)
                    result.push_back(e);
            return result;
        }
    }

    auto extend_transitive(const Tree & tree, const LadderSystem & ladder, const Challenge & challenge,
            int k, Label new_label) -> BuildResult
    {
        check_common(tree, challenge, k, new_label);
        if (! is_transitive(tree, ladder))
            throw Error{ ErrorKind::PreconditionViolation, "the ladder system is not transitive" };

        auto x = graph_of(tree, ladder);
        auto a = members(tree, challenge.a);

        Policy policy;
        policy.root = [&] () -> optional<NodeId> {
            if (a.empty())
                return std::nullopt;
            return a.front();
        };
        policy.psi_pool = [&] (int) { return a; };
        policy.r_pool = [&] (int) { return a; };

        return finish(tree, ladder, run_build(tree, x.graph, challenge.f, k, new_label, policy),
                new_label, false, std::nullopt);
    }

    auto extend_coherent(const Tree & tree, const LadderSystem & ladder, const Challenge & challenge,
            const OrdinalLadder & nu, int k, Label new_label) -> BuildResult
    {
        check_common(tree, challenge, k, new_label);
        if (! is_transitive(tree, ladder) || ! is_coherent(tree, ladder))
            throw Error{ ErrorKind::PreconditionViolation, "the ladder system is not transitive and coherent" };
        if (! nu.is_limit(new_label) || ! nu.nu.contains(new_label))
            throw Error{ ErrorKind::MissingLadderEntry, "no ladder entry for limit label " + to_string(new_label) };

        int levels = std::max(k, 1);
        if (static_cast<int>(challenge.chain.size()) < levels)
            throw invalid_challenge("the chain has " + std::to_string(challenge.chain.size())
                    + " sets, depth needs " + std::to_string(levels));
        for (std::size_t n = 0 ; n < challenge.chain.size() ; ++n)
            for (auto v : challenge.chain[n]) {
                if (n + 1 < challenge.chain.size() && ! challenge.chain[n + 1].contains(v))
                    throw invalid_challenge("the chain is not increasing");
                if (! challenge.a.empty() && ! challenge.a.contains(v))
                    throw invalid_challenge("a chain member lies outside A");
            }

        auto x = graph_of(tree, ladder);
        auto & nu_delta = nu.nu.at(new_label);

        vector<vector<NodeId>> chain;
        vector<Label> delta;
        for (int n = 0 ; n < levels ; ++n) {
            chain.push_back(members(tree, challenge.chain[n]));
            Label top = Label::bottom();
            for (auto v : chain.back())
                top = std::max(top, tree.label(v));
            delta.push_back(top);
        }

        // eps[n + 1] holds eps_n
        vector<Label> eps;
        {
            auto low = below_labels(nu_delta, delta[0]);
            eps.push_back(low.empty() ? Label::bottom() : *std::max_element(low.begin(), low.end()));
        }
        for (int n = 0 ; n < levels ; ++n) {
            Label next_delta = n + 1 < levels ? delta[n + 1] : new_label;
            Label e = delta[n];
            for (auto v : below_labels(nu_delta, next_delta))
                e = std::max(e, v);
            eps.push_back(e);
        }
        auto epsilon = [&] (int n) { return eps[n + 1]; };

        Policy policy;
        policy.root = [&] () -> optional<NodeId> {
            for (auto v : chain[0])
                if (tree.label(v) > epsilon(-1))
                    return v;
            return std::nullopt;
        };
        policy.psi_pool = [&] (int level) {
            vector<NodeId> result;
            for (auto v : chain[level])
                if (tree.label(v) >= epsilon(level - 1))
                    result.push_back(v);
            return result;
        };
        policy.r_pool = [&] (int n) { return chain[n]; };
        policy.accept = [&] (const string & xs, NodeId, NodeId s, const Chain & earlier) {
            int n = static_cast<int>(xs.size());
            if (! ladder.in_supp(s))
                return ladder.rungs[s] == earlier;

            auto levels_below = below_labels(nu_delta, epsilon(n - 1));
            for (auto e : levels_below)
                if (! (e < tree.label(s)))
                    return false;
            auto cuts = prefix_cuts(tree, s, levels_below);
            auto & eta_s = ladder.eta->chains[s];
            if (cuts.size() > eta_s.size() || ! std::equal(cuts.begin(), cuts.end(), eta_s.begin()))
                return false;

            NodeId r = tree.cut(s, epsilon(n - 1));
            Chain under;
            for (auto c : ladder.rungs[s])
                if (tree.less(c, r))
                    under.push_back(c);
            if (under != earlier)
                return false;

            // the new node's eta meets the part below s in exactly these cuts,
            // boundary levels included
            auto shared = prefix_cuts(tree, s, below_labels(nu_delta, tree.label(s)));
            if (shared.size() > eta_s.size() || ! std::equal(shared.begin(), shared.end(), eta_s.begin()))
                return false;
            if (! shared.empty()) {
                Chain at_or_below;
                for (auto c : ladder.rungs[s])
                    if (tree.leq(c, shared.back()))
                        at_or_below.push_back(c);
                Chain expected;
                for (auto c : earlier)
                    if (tree.leq(c, shared.back()))
                        expected.push_back(c);
                if (at_or_below != expected)
                    return false;
            }
            return true;
        };

        auto outcome = run_build(tree, x.graph, challenge.f, k, new_label, policy);
        outcome.state.markers = eps;

        bool in_supp = ! outcome.rung.empty();
        Chain eta;
        for (auto e : nu_delta) {
            if (! (e < new_label))
                throw Error{ ErrorKind::InvalidArgument, "ladder entry " + to_string(e)
                    + " is not below its label " + to_string(new_label) };
            eta.push_back(tree.cut(outcome.parent, e));
        }
        tree.sort_by_depth(eta);
        eta.erase(std::unique(eta.begin(), eta.end()), eta.end());

        return finish(tree, ladder, std::move(outcome), new_label, in_supp, eta);
    }

    auto extend_sparse(const Tree & tree, const LadderSystem & ladder, const Challenge & challenge,
            int k, Label new_label, bool require_decider) -> BuildResult
    {
        check_common(tree, challenge, k, new_label);
        auto x = graph_of(tree, ladder);
        if (! is_sparse(tree, ladder, x))
            throw Error{ ErrorKind::PreconditionViolation, "the ladder system is not sparse" };
        if (! challenge.t0 || ! challenge.a.contains(*challenge.t0))
            throw invalid_challenge("the sparse builder needs a starting node t0 inside A");
        NodeId t0 = *challenge.t0;

        if (require_decider) {
            auto verdicts = alternatives_at(tree, x.graph, challenge.f, t0, tree.max_label());
            if (std::find(verdicts.begin(), verdicts.end(), Alternative::Neither) != verdicts.end())
                throw Error{ ErrorKind::PreconditionViolation, "t0 does not decide the colouring" };
        }

        auto floors = cover_floors(tree, x.graph);
        auto a = members(tree, challenge.a);

        Policy policy;
        policy.require_complete = false;
        policy.root = [&] () -> optional<NodeId> {
            for (auto v : a)
                if (tree.less(t0, v))
                    return v;
            return std::nullopt;
        };
        policy.psi_pool = [&] (int) { return a; };
        policy.r_pool = [&] (int) { return a; };
        policy.accept = [&] (const string &, NodeId base, NodeId s, const Chain &) {
            return floors[s] > tree.label(base);
        };

        auto outcome = run_build(tree, x.graph, challenge.f, k, new_label, policy);
        return finish(tree, ladder, std::move(outcome), new_label, false, std::nullopt);
    }
}
