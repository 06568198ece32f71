/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <treeladder/analysis.hh>
#include <treeladder/error.hh>

#include <algorithm>
#include <deque>
#include <set>

using std::optional;
using std::vector;

namespace treeladder
{
    auto is_path(const Graph & graph, const Path & path) -> bool
    {
        if (path.empty())
            return false;
        std::set<NodeId> seen;
        for (std::size_t i = 0 ; i < path.size() ; ++i) {
            if (path[i] < 0 || path[i] >= graph.size() || ! seen.insert(path[i]).second)
                return false;
            if (i > 0 && ! graph.adjacent(path[i - 1], path[i]))
                return false;
        }
        return true;
    }

    auto is_monotone_increasing(const Tree & tree, const Path & path) -> bool
    {
        for (std::size_t i = 1 ; i < path.size() ; ++i)
            if (! tree.less(path[i - 1], path[i]))
                return false;
        return true;
    }

    auto vee_pivot(const Tree & tree, const Path & path) -> optional<std::size_t>
    {
        if (path.empty())
            return std::nullopt;
        for (auto v : path)
            tree.check(v);

        std::size_t pivot = 0;
        while (pivot + 1 < path.size() && tree.less(path[pivot + 1], path[pivot]))
            ++pivot;
        std::size_t i = pivot;
        while (i + 1 < path.size() && tree.less(path[i], path[i + 1]))
            ++i;
        if (i + 1 != path.size())
            return std::nullopt;
        return pivot;
    }

    auto is_vee(const Tree & tree, const Path & path) -> bool
    {
        return vee_pivot(tree, path).has_value();
    }

    auto reduce_path(const Tree & tree, const LadderSystem & ladder, const Path & path) -> Path
    {
        if (! is_transitive(tree, ladder))
            throw Error{ ErrorKind::PreconditionViolation, "path reduction needs a transitive ladder system" };
        auto x = graph_of(tree, ladder);
        if (! is_path(x.graph, path))
            throw Error{ ErrorKind::InvalidPath, "not a path in the ladder graph" };

        vector<NodeId> allowed = path;
        std::sort(allowed.begin(), allowed.end(), [&] (NodeId a, NodeId b) { return tree.canonical_less(a, b); });
        vector<char> inside(tree.size(), 0);
        for (auto v : allowed)
            inside[v] = 1;

        NodeId from = path.front(), to = path.back();
        vector<NodeId> previous(tree.size(), -1);
        previous[from] = from;
        std::deque<NodeId> queue{ from };
        while (! queue.empty() && previous[to] == -1) {
            NodeId u = queue.front();
            queue.pop_front();
            for (auto w : allowed)
                if (inside[w] && previous[w] == -1 && x.graph.adjacent(u, w)) {
                    previous[w] = u;
                    queue.push_back(w);
                }
        }

        Path result;
        for (NodeId v = to ; ; v = previous[v]) {
            result.push_back(v);
            if (v == from)
                break;
        }
        std::reverse(result.begin(), result.end());
        return result;
    }
}
