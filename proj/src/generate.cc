/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <treeladder/generate.hh>
#include <treeladder/error.hh>

#include <algorithm>

using std::int64_t;
using std::optional;
using std::vector;

namespace treeladder
{
    namespace
    {
        auto chance(Rng & rng, double p) -> bool
        {
            return std::bernoulli_distribution(std::clamp(p, 0.0, 1.0))(rng);
        }

        auto pick(Rng & rng, std::size_t n) -> std::size_t
        {
            return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
        }

        auto check_params(int max_rung, double density) -> void
        {
            if (max_rung < 0 || density < 0.0 || density > 1.0)
                throw Error{ ErrorKind::InvalidArgument, "rung bound must be natural and density in [0, 1]" };
        }

        /// A random sub-list of `from` with at most `limit` members, order kept.
        auto random_part(Rng & rng, const Chain & from, int limit) -> Chain
        {
            Chain result;
            for (auto v : from)
                if (chance(rng, 0.5))
                    result.push_back(v);
            while (static_cast<int>(result.size()) > limit)
                result.erase(result.begin() + pick(rng, result.size()));
            return result;
        }
    }

    auto random_ts_subtree(std::span<const int64_t> values, int depth, int size, Rng & rng) -> Tree
    {
        auto full = generate_ts_tree(values, depth);
        vector<char> kept(full.size(), 0);
        kept[0] = 1;
        vector<NodeId> frontier(full.children(0).begin(), full.children(0).end());

        for (int count = 1 ; count < size && ! frontier.empty() ; ++count) {
            auto at = pick(rng, frontier.size());
            NodeId v = frontier[at];
            frontier.erase(frontier.begin() + at);
            kept[v] = 1;
            for (auto c : full.children(v))
                frontier.push_back(c);
        }

        vector<NodeId> renumber(full.size(), -1);
        vector<optional<NodeId>> parents;
        vector<Label> labels;
        for (NodeId v = 0 ; v < full.size() ; ++v)
            if (kept[v]) {
                renumber[v] = static_cast<NodeId>(parents.size());
                auto p = full.parent(v);
                parents.push_back(p ? optional<NodeId>{ renumber[*p] } : std::nullopt);
                labels.push_back(full.label(v));
            }
        return Tree::from_parents(std::move(parents), std::move(labels));
    }

    auto random_transitive(const Tree & tree, Rng & rng, int max_rung, double density) -> LadderSystem
    {
        check_params(max_rung, density);
        auto result = LadderSystem::empty(tree);
        if (max_rung == 0)
            return result;

        for (auto t : tree.canonical_order()) {
            if (t == tree.root() || ! chance(rng, density))
                continue;
            auto below = tree.ancestors(t);
            NodeId c = below[pick(rng, below.size())];
            auto rung = random_part(rng, result.rungs[c], max_rung - 1);
            rung.push_back(c);
            result.rungs[t] = rung;
        }
        return result;
    }

    auto random_coherent(const Tree & tree, Rng & rng, int max_rung, double density, double supp_rate) -> LadderSystem
    {
        check_params(max_rung, density);
        auto result = LadderSystem::empty(tree);
        result.eta = trivial_true_ladder(tree);
        if (max_rung == 0)
            return result;

        for (auto t : tree.canonical_order()) {
            if (t == tree.root() || ! chance(rng, density))
                continue;
            auto below = tree.ancestors(t);
            NodeId c = below[pick(rng, below.size())];
            Chain rung = chance(rng, 0.8) ? result.rungs[c] : random_part(rng, result.rungs[c], max_rung - 1);
            while (static_cast<int>(rung.size()) > max_rung - 1)
                rung.erase(rung.begin());
            rung.push_back(c);
            result.rungs[t] = rung;

            if (chance(rng, supp_rate)) {
                result.supp.insert(t);
                auto length = std::uniform_int_distribution<std::size_t>(0, rung.size())(rng);
                result.eta->chains[t] = Chain(rung.begin(), rung.begin() + length);
            }
        }

        while (true) {
            auto verdict = is_coherent(tree, result);
            if (verdict)
                return result;
            NodeId t = verdict.witness->t;
            NodeSet smaller;
            for (auto v : result.supp)
                if (v != t)
                    smaller.insert(v);
            result.supp = smaller;
            result.eta->chains[t] = Chain{ t };
        }
    }

    auto random_sparse(const Tree & tree, Rng & rng, int max_rung, double density) -> LadderSystem
    {
        check_params(max_rung, density);
        auto result = LadderSystem::empty(tree);
        vector<Label> floor(tree.size());

        // rungs only add edges into t, so the floors of its ancestors are
        // already final when t is reached
        for (auto t : tree.canonical_order()) {
            floor[t] = tree.label(t);
            if (t == tree.root() || max_rung == 0 || ! chance(rng, density))
                continue;

            auto candidates = random_part(rng, tree.ancestors(t), tree.depth(t));
            if (candidates.empty()) {
                auto below = tree.ancestors(t);
                candidates.push_back(below[pick(rng, below.size())]);
            }
            Chain rung;
            for (auto s : candidates) {
                if (static_cast<int>(rung.size()) == max_rung)
                    break;
                if (rung.empty() || floor[s] > tree.label(rung.back()))
                    rung.push_back(s);
            }
            for (auto s : rung)
                floor[t] = std::min(floor[t], floor[s]);
            result.rungs[t] = rung;
        }
        return result;
    }

    auto random_ladder(const Tree & tree, Rng & rng, int max_rung, double density) -> LadderSystem
    {
        check_params(max_rung, density);
        auto result = LadderSystem::empty(tree);
        for (auto t : tree.canonical_order()) {
            if (t == tree.root() || max_rung == 0 || ! chance(rng, density))
                continue;
            auto below = tree.ancestors(t);
            auto rung = random_part(rng, below, max_rung);
            if (rung.empty())
                rung.push_back(below[pick(rng, below.size())]);
            result.rungs[t] = rung;
        }
        return result;
    }

    auto random_coloring(int size, int palette, Rng & rng) -> Coloring
    {
        if (size < 0 || palette < 1)
            throw Error{ ErrorKind::InvalidArgument, "a random colouring needs a positive palette" };
        vector<int> colors(size);
        std::uniform_int_distribution<int> colour(0, palette - 1);
        for (auto & c : colors)
            c = colour(rng);
        return Coloring::from_colors(std::move(colors));
    }
}
