/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TREELADDER_GUARD_TESTS_ORACLES_HH
#define TREELADDER_GUARD_TESTS_ORACLES_HH 1

// Brute-force reference implementations, written straight from the
// definitions and sharing no code with the library beyond the data types.

#include <treeladder/analysis.hh>
#include <treeladder/builder.hh>
#include <treeladder/ladder.hh>
#include <treeladder/tree.hh>

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace treeladder::oracle
{
    inline auto adjacent(const Graph & g, NodeId u, NodeId v) -> bool
    {
        auto n = g.neighbours(u);
        return std::find(n.begin(), n.end(), v) != n.end();
    }

    /// Ancestor test by walking parent links.
    inline auto below(const Tree & tree, NodeId s, NodeId t) -> bool
    {
        for (auto p = tree.parent(t) ; p ; p = tree.parent(*p))
            if (*p == s)
                return true;
        return false;
    }

    inline auto comparable(const Tree & tree, NodeId s, NodeId t) -> bool
    {
        return s == t || below(tree, s, t) || below(tree, t, s);
    }

    /// Every simple path with at most `max_edges` edges, each direction listed.
    inline auto simple_paths(const Graph & g, int max_edges) -> std::vector<Path>
    {
        std::vector<Path> result;
        Path path;
        std::vector<char> on(g.size(), 0);
        std::function<void (NodeId)> walk = [&] (NodeId v) {
            path.push_back(v);
            on[v] = 1;
            result.push_back(path);
            if (static_cast<int>(path.size()) <= max_edges)
                for (auto w : g.neighbours(v))
                    if (! on[w])
                        walk(w);
            on[v] = 0;
            path.pop_back();
        };
        for (NodeId v = 0 ; v < g.size() ; ++v)
            walk(v);
        return result;
    }

    /// Every simple s-t path.
    inline auto paths_between(const Graph & g, NodeId s, NodeId t) -> std::vector<Path>
    {
        std::vector<Path> result;
        Path path;
        std::vector<char> on(g.size(), 0);
        std::function<void (NodeId)> walk = [&] (NodeId v) {
            path.push_back(v);
            on[v] = 1;
            if (v == t)
                result.push_back(path);
            else
                for (auto w : g.neighbours(v))
                    if (! on[w])
                        walk(w);
            on[v] = 0;
            path.pop_back();
        };
        walk(s);
        return result;
    }

    /// Does some simple s-t path avoid `cut`? Enumerates the simple paths
    /// leaving s in the graph with `cut` deleted, stopping at the first that
    /// reaches t. Gives up, returning nothing, after `budget` extensions.
    inline auto some_path_avoids(const Graph & g, const NodeSet & cut, NodeId s, NodeId t,
            long budget = 2'000'000) -> std::optional<bool>
    {
        std::vector<char> on(g.size(), 0);
        for (auto c : cut)
            on[c] = 1;
        long steps = 0;
        bool exhausted = false;
        std::function<bool (NodeId)> walk = [&] (NodeId v) -> bool {
            if (v == t)
                return true;
            if (++steps > budget) {
                exhausted = true;
                return false;
            }
            on[v] = 1;
            for (auto w : g.neighbours(v))
                if (! on[w] && walk(w))
                    return true;
            on[v] = 0;
            return false;
        };
        bool found = walk(s);
        if (! found && exhausted)
            return std::nullopt;
        return found;
    }

    /// Plain reachability with `cut` deleted.
    inline auto reachable_avoiding(const Graph & g, const NodeSet & cut, NodeId s, NodeId t) -> bool
    {
        std::vector<char> seen(g.size(), 0);
        for (auto c : cut)
            seen[c] = 1;
        std::vector<NodeId> stack{ s };
        seen[s] = 1;
        while (! stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            if (v == t)
                return true;
            for (auto w : g.neighbours(v))
                if (! seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        return false;
    }

    inline auto chromatic(const Graph & g) -> int
    {
        int n = g.size();
        if (n == 0)
            return 0;
        std::vector<int> colour(n, -1);
        for (int k = 1 ; ; ++k) {
            std::function<bool (int)> place = [&] (int v) -> bool {
                if (v == n)
                    return true;
                for (int c = 0 ; c < k ; ++c) {
                    bool ok = true;
                    for (int u = 0 ; u < v && ok ; ++u)
                        ok = ! (colour[u] == c && adjacent(g, u, v));
                    if (ok) {
                        colour[v] = c;
                        if (place(v + 1))
                            return true;
                    }
                }
                colour[v] = -1;
                return false;
            };
            if (place(0))
                return k;
        }
    }

    inline auto clique_number(const Graph & g) -> int
    {
        int n = g.size(), best = 0;
        for (unsigned mask = 0 ; mask < (1u << n) ; ++mask) {
            std::vector<int> members;
            for (int v = 0 ; v < n ; ++v)
                if (mask & (1u << v))
                    members.push_back(v);
            bool clique = true;
            for (std::size_t i = 0 ; i < members.size() && clique ; ++i)
                for (std::size_t j = i + 1 ; j < members.size() && clique ; ++j)
                    clique = adjacent(g, members[i], members[j]);
            if (clique)
                best = std::max(best, static_cast<int>(members.size()));
        }
        return best;
    }

    /// Largest family of s-t paths sharing no interior vertex.
    inline auto disjoint_paths(const Graph & g, NodeId s, NodeId t) -> int
    {
        auto paths = paths_between(g, s, t);
        std::vector<char> used(g.size(), 0);
        int best = 0;
        std::function<void (std::size_t, int)> choose = [&] (std::size_t i, int taken) {
            best = std::max(best, taken);
            if (i == paths.size() || taken + static_cast<int>(paths.size() - i) <= best)
                return;
            auto & p = paths[i];
            bool free = true;
            for (std::size_t j = 1 ; j + 1 < p.size() && free ; ++j)
                free = ! used[p[j]];
            if (free) {
                for (std::size_t j = 1 ; j + 1 < p.size() ; ++j)
                    used[p[j]] = 1;
                choose(i + 1, taken + 1);
                for (std::size_t j = 1 ; j + 1 < p.size() ; ++j)
                    used[p[j]] = 0;
            }
            choose(i + 1, taken);
        };
        choose(0, 0);
        return best;
    }

    /// Some w with label(w) <= gamma reaches v along a path that climbs the
    /// tree order at every step.
    inline auto covered(const Tree & tree, const Graph & g, NodeId v, Label gamma) -> bool
    {
        if (tree.label(v) <= gamma)
            return true;
        for (auto u : g.neighbours(v))
            if (below(tree, u, v) && covered(tree, g, u, gamma))
                return true;
        return false;
    }

    inline auto is_monotone(const Tree & tree, const Path & p) -> bool
    {
        for (std::size_t i = 1 ; i < p.size() ; ++i)
            if (! below(tree, p[i - 1], p[i]))
                return false;
        return true;
    }

    /// Some simple cycle splits into two increasing arcs with common ends.
    inline auto has_special_cycle(const Tree & tree, const Graph & g) -> bool
    {
        int n = g.size();
        bool found = false;
        Path cycle;
        std::vector<char> on(n, 0);
        auto special = [&] () {
            int k = static_cast<int>(cycle.size());
            for (int i = 0 ; i < k ; ++i)
                for (int j = 0 ; j < k ; ++j) {
                    if (i == j)
                        continue;
                    Path one, two;
                    for (int a = i ; ; a = (a + 1) % k) {
                        one.push_back(cycle[a]);
                        if (a == j)
                            break;
                    }
                    for (int a = i ; ; a = (a + k - 1) % k) {
                        two.push_back(cycle[a]);
                        if (a == j)
                            break;
                    }
                    if (is_monotone(tree, one) && is_monotone(tree, two))
                        return true;
                }
            return false;
        };
        // cycles rooted at their smallest vertex
        std::function<void (NodeId, NodeId)> walk = [&] (NodeId start, NodeId v) {
            if (found)
                return;
            for (auto w : g.neighbours(v)) {
                if (w == start && cycle.size() >= 3 && special()) {
                    found = true;
                    return;
                }
                if (w > start && ! on[w]) {
                    on[w] = 1;
                    cycle.push_back(w);
                    walk(start, w);
                    cycle.pop_back();
                    on[w] = 0;
                }
            }
        };
        for (NodeId s = 0 ; s < n && ! found ; ++s) {
            cycle = { s };
            on[s] = 1;
            walk(s, s);
            on[s] = 0;
        }
        return found;
    }

    inline auto transitive(const Tree & tree, const LadderSystem & c) -> bool
    {
        for (NodeId t = 0 ; t < tree.size() ; ++t)
            for (auto s : c.rungs[t])
                for (auto r : c.rungs[t])
                    if (below(tree, r, s) && std::find(c.rungs[s].begin(), c.rungs[s].end(), r) == c.rungs[s].end())
                        return false;
        return true;
    }

    inline auto sparse(const Tree & tree, const LadderSystem & c, const Graph & g) -> bool
    {
        for (NodeId t = 0 ; t < tree.size() ; ++t)
            for (auto r : c.rungs[t])
                for (auto s : c.rungs[t])
                    if (below(tree, r, s) && covered(tree, g, s, tree.label(r)))
                        return false;
        return true;
    }

    /// Canonically first member of a node list.
    inline auto canonical_first(const Tree & tree, const std::vector<NodeId> & nodes) -> std::optional<NodeId>
    {
        if (nodes.empty())
            return std::nullopt;
        return *std::min_element(nodes.begin(), nodes.end(),
                [&] (NodeId a, NodeId b) { return tree.canonical_rank(a) < tree.canonical_rank(b); });
    }

    inline auto earlier_phi(const BuilderState & state, const std::string & x) -> std::vector<NodeId>
    {
        std::vector<NodeId> result;
        for (std::size_t j = 0 ; j < x.size() ; ++j)
            if (auto p = state.phi.find(x.substr(0, j)) ; p != state.phi.end())
                result.push_back(p->second);
        return result;
    }

    /// R_x for the transitive builder, from its definition.
    inline auto r_transitive(const Tree & tree, const Graph & g, const Challenge & ch, const BuilderState & state,
            const std::string & x) -> std::vector<NodeId>
    {
        NodeId base = state.psi.at(x);
        int colour = state.schedule.at(x.size());
        auto earlier = earlier_phi(state, x);
        std::vector<NodeId> result;
        for (auto s : ch.a) {
            if (! (s == base || below(tree, base, s)) || ch.f[s] != colour)
                continue;
            auto all = earlier;
            all.push_back(s);
            bool complete = true;
            for (std::size_t i = 0 ; i < all.size() && complete ; ++i)
                for (std::size_t j = i + 1 ; j < all.size() && complete ; ++j)
                    complete = adjacent(g, all[i], all[j]);
            if (complete)
                result.push_back(s);
        }
        return result;
    }

    /// R_x for the sparse builder, from its definition.
    inline auto r_sparse(const Tree & tree, const Graph & g, const Challenge & ch, const BuilderState & state,
            const std::string & x) -> std::vector<NodeId>
    {
        NodeId base = state.psi.at(x);
        int colour = state.schedule.at(x.size());
        std::vector<NodeId> result;
        for (auto s : ch.a)
            if ((s == base || below(tree, base, s)) && ch.f[s] == colour && ! covered(tree, g, s, tree.label(base)))
                result.push_back(s);
        return result;
    }
    /// Deepest ancestor-or-equal of v whose label is at most e.
    inline auto cut(const Tree & tree, NodeId v, Label e) -> NodeId
    {
        while (tree.label(v) > e)
            v = *tree.parent(v);
        return v;
    }

    /// Everything a build needs to be audited.
    struct Build
    {
        BuilderMode mode;
        const Tree & tree;
        const LadderSystem & ladder;
        const Challenge & challenge;
        const OrdinalLadder * nu = nullptr;
        Label new_label;
    };

    /// R_x for the coherent builder, from its definition.
    inline auto r_coherent(const Build & b, const Graph & g, const BuilderState & state, const std::string & x) -> std::vector<NodeId>
    {
        auto & tree = b.tree;
        auto n = x.size();
        NodeId base = state.psi.at(x);
        int colour = state.schedule.at(n);
        auto earlier = earlier_phi(state, x);
        Label eps = state.markers.at(n);
        std::vector<Label> levels;
        for (auto e : b.nu->nu.at(b.new_label))
            if (e < eps)
                levels.push_back(e);

        std::vector<NodeId> result;
        for (auto s : b.challenge.chain.at(n)) {
            if (! (s == base || below(tree, base, s)) || b.challenge.f[s] != colour)
                continue;
            bool complete = true;
            for (auto c : earlier)
                complete = complete && adjacent(g, c, s);
            if (! complete)
                continue;

            auto & rung = b.ladder.rungs[s];
            if (! b.ladder.in_supp(s)) {
                if (rung == earlier)
                    result.push_back(s);
                continue;
            }

            bool ok = true;
            std::vector<NodeId> cuts;
            for (auto e : levels) {
                if (! (e < tree.label(s)))
                    ok = false;
                else if (NodeId c = cut(tree, s, e) ; std::find(cuts.begin(), cuts.end(), c) == cuts.end())
                    cuts.push_back(c);
            }
            if (! ok)
                continue;
            std::sort(cuts.begin(), cuts.end(), [&] (NodeId p, NodeId q) { return tree.depth(p) < tree.depth(q); });
            auto & eta = b.ladder.eta->chains[s];
            if (cuts.size() > eta.size() || ! std::equal(cuts.begin(), cuts.end(), eta.begin()))
                continue;

            NodeId r = cut(tree, s, eps);
            std::vector<NodeId> under;
            for (auto c : rung)
                if (below(tree, c, r))
                    under.push_back(c);
            if (under != earlier)
                continue;

            // eta of any node above s meets the part below s in the cuts of s
            // at the entry levels under label(s)
            std::vector<NodeId> shared;
            for (auto e : b.nu->nu.at(b.new_label))
                if (e < tree.label(s))
                    if (NodeId c = cut(tree, s, e) ; std::find(shared.begin(), shared.end(), c) == shared.end())
                        shared.push_back(c);
            std::sort(shared.begin(), shared.end(), [&] (NodeId p, NodeId q) { return tree.depth(p) < tree.depth(q); });
            if (shared.size() > eta.size() || ! std::equal(shared.begin(), shared.end(), eta.begin()))
                continue;
            if (! shared.empty()) {
                auto low = [&] (const std::vector<NodeId> & chain) {
                    std::vector<NodeId> part;
                    for (auto c : chain)
                        if (c == shared.back() || below(tree, c, shared.back()))
                            part.push_back(c);
                    return part;
                };
                if (low(rung) != low(earlier))
                    continue;
            }
            result.push_back(s);
        }
        return result;
    }

    inline auto r_set(const Build & b, const Graph & g, const BuilderState & state, const std::string & x) -> std::vector<NodeId>
    {
        switch (b.mode) {
            case BuilderMode::Transitive: return r_transitive(b.tree, g, b.challenge, state, x);
            case BuilderMode::Sparse:     return r_sparse(b.tree, g, b.challenge, state, x);
            case BuilderMode::Coherent:   return r_coherent(b, g, state, x);
        }
        return { };
    }

    /// Recomputes every R_x of a finished build and checks phi, the branch
    /// choices, the new rung and the output predicate. Empty means sound.
    inline auto audit(const Build & b, const BuildResult & result) -> std::string
    {
        auto & tree = b.tree;
        auto & state = result.state;
        auto g = graph_of(tree, b.ladder).graph;

        for (auto & [x, base] : state.psi) {
            if (static_cast<int>(x.size()) < state.k) {
                auto r = r_set(b, g, state, x);
                if (state.r_sizes.at(x) != static_cast<int>(r.size()))
                    return "size of R at '" + x + "'";
                auto first = canonical_first(tree, r);
                auto phi = state.phi.find(x);
                if (first.has_value() != (phi != state.phi.end()) || (first && *first != phi->second))
                    return "phi at '" + x + "'";
            }
            if (state.psi.contains(x + "0")) {
                NodeId top = state.top(x), l = state.psi.at(x + "0"), r = state.psi.at(x + "1");
                if (comparable(tree, l, r) || ! below(tree, top, l) || ! below(tree, top, r))
                    return "branch at '" + x + "'";
            }
        }

        if (result.tree.size() != tree.size() + 1 || result.t_xi != tree.size())
            return "new node";
        if (result.tree.label(result.t_xi) != b.new_label || *result.tree.parent(result.t_xi) != state.top(state.x_xi))
            return "new node placement";
        if (result.ladder.rungs[result.t_xi] != state.phi_chain(state.x_xi))
            return "new rung";

        // every level along x_xi whose R was nonempty shows up in the rung
        for (std::size_t n = 0 ; n <= state.x_xi.size() && static_cast<int>(n) < state.k ; ++n) {
            auto prefix = state.x_xi.substr(0, n);
            if (! r_set(b, g, state, prefix).empty()) {
                int colour = state.schedule[n];
                auto & rung = result.ladder.rungs[result.t_xi];
                if (std::none_of(rung.begin(), rung.end(), [&] (NodeId s) { return b.challenge.f[s] == colour; }))
                    return "colour of level " + std::to_string(n) + " missing from the rung";
            }
        }

        auto & grown = result.tree;
        auto & c = result.ladder;
        switch (b.mode) {
            case BuilderMode::Transitive:
                if (! transitive(grown, c))
                    return "output not transitive";
                break;
            case BuilderMode::Coherent:
                if (! transitive(grown, c) || ! is_coherent(grown, c))
                    return "output not transitive and coherent";
                break;
            case BuilderMode::Sparse:
                if (! sparse(grown, c, graph_of(grown, c).graph))
                    return "output not sparse";
                break;
        }
        return "";
    }

    /// Colours whose level along x_xi had a nonempty R.
    inline auto defeatable(const Build & b, const BuilderState & state, int palette) -> std::vector<bool>
    {
        auto g = graph_of(b.tree, b.ladder).graph;
        std::vector<bool> result(palette, false);
        for (std::size_t n = 0 ; n <= state.x_xi.size() && static_cast<int>(n) < state.k ; ++n)
            if (state.psi.contains(state.x_xi.substr(0, n)) && ! r_set(b, g, state, state.x_xi.substr(0, n)).empty())
                result[state.schedule[n]] = true;
        return result;
    }
}

#endif
