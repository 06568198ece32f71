/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <treeladder/analysis.hh>
#include <treeladder/error.hh>
#include <treeladder/kernels.hh>

#include "flow.hh"

#include <algorithm>
#include <deque>
#include <limits>

using std::vector;

namespace treeladder
{
    auto separator(const Tree & tree, const LadderSystem & ladder, NodeId t, NodeId t_prime) -> NodeSet
    {
        tree.check(t);
        tree.check(t_prime);
        if (tree.comparable(t, t_prime))
            throw Error{ ErrorKind::InvalidArgument, "separator needs incomparable nodes" };
        if (! is_transitive(tree, ladder) || ! is_coherent(tree, ladder))
            throw Error{ ErrorKind::PreconditionViolation, "separator needs a transitive coherent ladder system" };

        auto & rung = ladder.rungs[t];
        if (! ladder.in_supp(t))
            return NodeSet{ vector<NodeId>(rung.begin(), rung.end()) };

        NodeId meet = tree.meet(t, t_prime);
        auto & eta = ladder.eta->chains[t];
        auto top = std::find_if(eta.begin(), eta.end(), [&] (NodeId r) { return r != t && tree.less(meet, r); });
        if (top == eta.end())
            return NodeSet{ vector<NodeId>(rung.begin(), rung.end()) };

        vector<NodeId> result;
        for (auto c : rung)
            if (tree.leq(c, *top))
                result.push_back(c);
        return NodeSet{ std::move(result) };
    }

    auto separates(const Graph & graph, const NodeSet & cut, NodeId s, NodeId t) -> bool
    {
        if (s < 0 || s >= graph.size() || t < 0 || t >= graph.size())
            throw Error{ ErrorKind::InvalidArgument, "endpoint outside the graph" };
        if (cut.contains(s) || cut.contains(t))
            throw Error{ ErrorKind::InvalidArgument, "endpoints may not lie in the separating set" };

        vector<char> seen(graph.size(), 0);
        for (auto c : cut)
            if (c >= 0 && c < graph.size())
                seen[c] = 1;
        seen[s] = 1;
        std::deque<NodeId> queue{ s };
        while (! queue.empty()) {
            NodeId u = queue.front();
            queue.pop_front();
            if (u == t)
                return false;
            for (auto w : graph.neighbours(u))
                if (! seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
        return true;
    }

    auto pair_connectivity(const Graph & graph, NodeId s, NodeId t) -> int
    {
        if (s < 0 || s >= graph.size() || t < 0 || t >= graph.size())
            throw Error{ ErrorKind::InvalidArgument, "endpoint outside the graph" };
        if (s == t)
            throw Error{ ErrorKind::InvalidArgument, "pair connectivity needs distinct endpoints" };

        // vertex v becomes in = 2v, out = 2v + 1
        int n = graph.size();
        detail::FlowNetwork network(2 * n);
        for (NodeId v = 0 ; v < n ; ++v)
            network.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1);
        for (auto & [u, v] : graph.edges()) {
            network.add_arc(2 * u + 1, 2 * v, 1);
            network.add_arc(2 * v + 1, 2 * u, 1);
        }
        return network.max_flow(2 * s + 1, 2 * t, std::numeric_limits<int>::max());
    }

    auto min_pair_connectivity_over(const Graph & graph, const NodeSet & set) -> PairConnectivity
    {
        return parallel::min_pair_connectivity_over(graph, set);
    }
}
