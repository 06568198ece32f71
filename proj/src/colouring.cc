/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <treeladder/analysis.hh>
#include <treeladder/error.hh>

#include <algorithm>
#include <string>

using std::optional;
using std::vector;

namespace treeladder
{
    namespace
    {
        auto intersect(const vector<NodeId> & a, std::span<const NodeId> b) -> vector<NodeId>
        {
            vector<NodeId> result;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(result));
            return result;
        }

        /// Bron-Kerbosch with Tomita pivoting; `visit` sees every maximal clique.
        template <typename Visit_>
        auto maximal_cliques(const Graph & graph, vector<NodeId> & clique, vector<NodeId> candidates,
                vector<NodeId> excluded, Visit_ & visit) -> void
        {
            if (candidates.empty()) {
                if (excluded.empty())
                    visit(clique);
                return;
            }

            NodeId pivot = candidates.front();
            std::size_t best = 0;
            for (auto & pool : { candidates, excluded })
                for (auto u : pool) {
                    auto hits = intersect(candidates, graph.neighbours(u)).size();
                    if (hits > best || (hits == best && u < pivot)) {
                        best = hits;
                        pivot = u;
                    }
                }

            vector<NodeId> branch;
            std::set_difference(candidates.begin(), candidates.end(),
                    graph.neighbours(pivot).begin(), graph.neighbours(pivot).end(), std::back_inserter(branch));

            for (auto v : branch) {
                clique.push_back(v);
                maximal_cliques(graph, clique, intersect(candidates, graph.neighbours(v)),
                        intersect(excluded, graph.neighbours(v)), visit);
                clique.pop_back();
                candidates.erase(std::find(candidates.begin(), candidates.end(), v));
                excluded.insert(std::upper_bound(excluded.begin(), excluded.end(), v), v);
            }
        }

        template <typename Visit_>
        auto for_each_maximal_clique(const Graph & graph, Visit_ visit) -> void
        {
            vector<NodeId> all(graph.size());
            for (NodeId v = 0 ; v < graph.size() ; ++v)
                all[v] = v;
            vector<NodeId> clique;
            maximal_cliques(graph, clique, all, { }, visit);
        }

        auto greedy_clique(const Graph & graph) -> int
        {
            int best = graph.size() > 0 ? 1 : 0;
            for (NodeId v = 0 ; v < graph.size() ; ++v) {
                vector<NodeId> clique{ v };
                for (auto w : graph.neighbours(v))
                    if (std::all_of(clique.begin(), clique.end(), [&] (NodeId c) { return graph.adjacent(c, w); }))
                        clique.push_back(w);
                best = std::max(best, static_cast<int>(clique.size()));
            }
            return best;
        }

        struct Dsatur
        {
            const Graph & graph;
            int colours;
            long budget;
            long nodes = 0;
            vector<int> colour;
            vector<vector<int>> seen;
            vector<int> saturation;

            Dsatur(const Graph & g, int k, long b) :
                graph(g), colours(k), budget(b), colour(g.size(), -1),
                seen(g.size(), vector<int>(k, 0)), saturation(g.size(), 0)
            {
            }

            auto pick() const -> NodeId
            {
                NodeId best = -1;
                for (NodeId v = 0 ; v < graph.size() ; ++v) {
                    if (colour[v] != -1)
                        continue;
                    if (best == -1 || saturation[v] > saturation[best]
                            || (saturation[v] == saturation[best] && graph.degree(v) > graph.degree(best)))
                        best = v;
                }
                return best;
            }

            auto assign(NodeId v, int c, int delta) -> void
            {
                colour[v] = delta > 0 ? c : -1;
                for (auto w : graph.neighbours(v)) {
                    if (delta > 0 && seen[w][c]++ == 0)
                        ++saturation[w];
                    else if (delta < 0 && --seen[w][c] == 0)
                        --saturation[w];
                }
            }

            /// Greedy mode takes the first free colour and never backtracks.
            auto run(int used, bool greedy) -> bool
            {
                if (++nodes > budget)
                    return false;
                NodeId v = pick();
                if (v == -1)
                    return true;

                for (int c = 0 ; c < std::min(colours, used + 1) ; ++c) {
                    if (seen[v][c])
                        continue;
                    assign(v, c, 1);
                    if (run(std::max(used, c + 1), greedy))
                        return true;
                    assign(v, c, -1);
                    if (greedy || nodes > budget)
                        return false;
                }
                return false;
            }
        };
    }

    auto chromatic_number(const Graph & graph, const ChromaticOptions & options) -> ChromaticResult
    {
        int n = graph.size();
        if (n == 0)
            return ChromaticResult{ 0, Coloring{ } };

        Dsatur greedy(graph, n, std::max<long>(options.search_budget, 2L * n));
        greedy.run(0, true);
        auto witness = Coloring::from_colors(greedy.colour);
        int upper = witness.palette;

        if (n > options.vertex_budget) {
            int lower = greedy_clique(graph);
            throw ResourceLimitError{ "graph has " + std::to_string(n) + " vertices, exact budget is "
                + std::to_string(options.vertex_budget), lower, upper };
        }

        int lower = static_cast<int>(max_clique(graph).size());
        long spent = greedy.nodes;
        for (int k = lower ; k < upper ; ++k) {
            Dsatur exact(graph, k, options.search_budget - spent);
            if (exact.run(0, false))
                return ChromaticResult{ k, Coloring::from_colors(exact.colour) };
            spent += exact.nodes;
            if (spent > options.search_budget)
                throw ResourceLimitError{ "colouring search budget exhausted", k, upper };
        }
        return ChromaticResult{ upper, witness };
    }

    auto max_clique(const Graph & graph) -> vector<NodeId>
    {
        vector<NodeId> best;
        for_each_maximal_clique(graph, [&] (const vector<NodeId> & clique) {
                if (clique.size() > best.size())
                    best = clique;
                });
        std::sort(best.begin(), best.end());
        return best;
    }

    auto defeater_coloring(const Tree & tree, const LadderSystem & ladder, const Coloring & f) -> DefeaterColoring
    {
        if (! is_transitive(tree, ladder))
            throw Error{ ErrorKind::PreconditionViolation, "defeater colouring needs a transitive ladder system" };
        if (f.size() != tree.size())
            throw Error{ ErrorKind::InvalidArgument, "colouring size does not match the tree" };

        DefeaterColoring result;
        result.level.assign(tree.size(), 0);
        for (auto t : tree.canonical_order()) {
            int level = 0;
            for (auto s : ladder.rungs[t])
                if (f[s] == f[t])
                    level = std::max(level, result.level[s] + 1);
            result.level[t] = level;
            result.max_level = std::max(result.max_level, level);
        }

        vector<int> flat(tree.size());
        for (NodeId t = 0 ; t < tree.size() ; ++t)
            flat[t] = f[t] * (1 + result.max_level) + result.level[t];
        result.flattened.colors = std::move(flat);
        result.flattened.palette = f.palette * (1 + result.max_level);
        return result;
    }

    auto find_mono_clique(const Tree & tree, const LadderSystem & ladder, const Coloring & f) -> optional<MonoClique>
    {
        if (f.size() != tree.size())
            throw Error{ ErrorKind::InvalidArgument, "colouring size does not match the tree" };
        auto x = graph_of(tree, ladder);

        optional<MonoClique> best;
        for (auto t : tree.canonical_order()) {
            vector<NodeId> same;
            for (auto s : ladder.rungs[t])
                if (f[s] == f[t])
                    same.push_back(s);
            if (same.empty() || (best && same.size() <= best->members.size()))
                continue;

            auto clique = max_clique(x.graph.induced(same));
            if (best && clique.size() <= best->members.size())
                continue;
            Chain members;
            for (auto i : clique)
                members.push_back(same[i]);
            tree.sort_by_depth(members);
            best = MonoClique{ t, std::move(members) };
        }
        return best;
    }

    auto clique_chain_check(const Tree & tree, const LadderSystem & ladder, const Graph & graph) -> Verdict<CliqueChainWitness>
    {
        validate(tree, ladder);
        if (graph.size() != tree.size())
            throw Error{ ErrorKind::InvalidArgument, "graph does not match the tree" };

        optional<CliqueChainWitness> failure;
        for_each_maximal_clique(graph, [&] (const vector<NodeId> & found) {
                if (failure || found.size() < 2)
                    return;
                Chain clique = found;
                tree.sort_by_depth(clique);
                for (std::size_t i = 1 ; i < clique.size() ; ++i)
                    if (! tree.less(clique[i - 1], clique[i])) {
                        failure = CliqueChainWitness{ clique, std::nullopt };
                        return;
                    }
                NodeId top = clique.back();
                auto & rung = ladder.rungs[top];
                for (std::size_t i = 0 ; i + 1 < clique.size() ; ++i)
                    if (std::find(rung.begin(), rung.end(), clique[i]) == rung.end()) {
                        failure = CliqueChainWitness{ clique, clique[i] };
                        return;
                    }
                });
        return { failure };
    }
}
