/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <treeladder/graph.hh>
#include <treeladder/error.hh>

#include <algorithm>
#include <string>

using std::pair;
using std::span;
using std::vector;

namespace treeladder
{
    namespace
    {
        auto check_vertex(const Graph & g, NodeId v) -> void
        {
            if (v < 0 || v >= g.size())
                throw Error{ ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " out of range" };
        }
    }

    Graph::Graph(int size) :
        _adjacency(size)
    {
    }

    auto Graph::add_edge(NodeId u, NodeId v) -> bool
    {
        check_vertex(*this, u);
        check_vertex(*this, v);
        if (u == v)
            throw Error{ ErrorKind::InvalidArgument, "loop at vertex " + std::to_string(u) };

        auto & a = _adjacency[u];
        auto pos = std::lower_bound(a.begin(), a.end(), v);
        if (pos != a.end() && *pos == v)
            return false;
        a.insert(pos, v);

        auto & b = _adjacency[v];
        b.insert(std::lower_bound(b.begin(), b.end(), u), u);
        ++_edge_count;
        return true;
    }

    auto Graph::remove_edge(NodeId u, NodeId v) -> bool
    {
        check_vertex(*this, u);
        check_vertex(*this, v);
        auto & a = _adjacency[u];
        auto pos = std::lower_bound(a.begin(), a.end(), v);
        if (pos == a.end() || *pos != v)
            return false;
        a.erase(pos);
        auto & b = _adjacency[v];
        b.erase(std::lower_bound(b.begin(), b.end(), u));
        --_edge_count;
        return true;
    }

    auto Graph::adjacent(NodeId u, NodeId v) const -> bool
    {
        check_vertex(*this, u);
        check_vertex(*this, v);
        return std::binary_search(_adjacency[u].begin(), _adjacency[u].end(), v);
    }

    auto Graph::neighbours(NodeId v) const -> span<const NodeId>
    {
        check_vertex(*this, v);
        return _adjacency[v];
    }

    auto Graph::degree(NodeId v) const -> int
    {
        check_vertex(*this, v);
        return static_cast<int>(_adjacency[v].size());
    }

    auto Graph::max_degree() const -> int
    {
        int result = 0;
        for (auto & a : _adjacency)
            result = std::max(result, static_cast<int>(a.size()));
        return result;
    }

    auto Graph::edges() const -> vector<pair<NodeId, NodeId>>
    {
        vector<pair<NodeId, NodeId>> result;
        result.reserve(_edge_count);
        for (NodeId u = 0 ; u < size() ; ++u)
            for (auto v : _adjacency[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::induced(span<const NodeId> keep) const -> Graph
    {
        vector<int> position(size(), -1);
        for (int i = 0 ; i < static_cast<int>(keep.size()) ; ++i) {
            check_vertex(*this, keep[i]);
            position[keep[i]] = i;
        }

        Graph result(static_cast<int>(keep.size()));
        for (int i = 0 ; i < static_cast<int>(keep.size()) ; ++i)
            for (auto w : _adjacency[keep[i]])
                if (position[w] > i)
                    result.add_edge(i, position[w]);
        return result;
    }
}
