/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <treeladder/tree.hh>
#include <treeladder/error.hh>

#include <algorithm>
#include <numeric>
#include <string>

using std::int64_t;
using std::optional;
using std::pair;
using std::span;
using std::string;
using std::vector;

namespace treeladder
{
    using std::to_string;

    auto Label::of(int64_t value) -> Label
    {
        if (value < 0)
            throw Error{ ErrorKind::InvalidArgument, "labels are natural numbers, got " + to_string(value) };
        return Label{ value, 0 };
    }

    auto Label::value() const -> int64_t
    {
        if (is_bottom())
            throw Error{ ErrorKind::InvalidArgument, "bottom label has no natural value" };
        return _value;
    }

    auto to_string(Label label) -> string
    {
        return label.is_bottom() ? string{ "bottom" } : std::to_string(label.raw());
    }

    NodeSet::NodeSet(std::initializer_list<NodeId> ids) :
        NodeSet(vector<NodeId>(ids))
    {
    }

    NodeSet::NodeSet(vector<NodeId> ids) :
        _ids(std::move(ids))
    {
        std::sort(_ids.begin(), _ids.end());
        _ids.erase(std::unique(_ids.begin(), _ids.end()), _ids.end());
    }

    auto NodeSet::contains(NodeId v) const -> bool
    {
        return std::binary_search(_ids.begin(), _ids.end(), v);
    }

    auto NodeSet::insert(NodeId v) -> bool
    {
        auto pos = std::lower_bound(_ids.begin(), _ids.end(), v);
        if (pos != _ids.end() && *pos == v)
            return false;
        _ids.insert(pos, v);
        return true;
    }

    auto NodeSet::check_against(const Tree & tree) const -> void
    {
        for (auto v : _ids)
            tree.check(v);
    }

    auto Tree::from_parents(vector<optional<NodeId>> parents, vector<Label> labels) -> Tree
    {
        auto fail = [] (const string & m) -> Error { return Error{ ErrorKind::InvalidTree, m }; };

        if (parents.empty())
            throw fail("a tree needs a root");
        if (parents.size() != labels.size())
            throw fail("parent and label arrays differ in length");

        int n = static_cast<int>(parents.size());
        if (parents[0])
            throw fail("node 0 must be the root");
        if (! labels[0].is_bottom())
            throw fail("the root label must be bottom");

        for (int v = 1 ; v < n ; ++v) {
            if (! parents[v])
                throw fail("node " + to_string(v) + " has no parent; only node 0 may be a root");
            if (*parents[v] < 0 || *parents[v] >= n || *parents[v] == v)
                throw fail("node " + to_string(v) + " has invalid parent " + to_string(*parents[v]));
            if (! (labels[*parents[v]] < labels[v]))
                throw fail("label of node " + to_string(v) + " does not exceed its parent's");
        }

        Tree result;
        result._parent = std::move(parents);
        result._label = std::move(labels);
        result.index();
        return result;
    }

    auto Tree::singleton() -> Tree
    {
        return from_parents({ std::nullopt }, { Label::bottom() });
    }

    auto Tree::index() -> void
    {
        int n = size();
        _children.assign(n, {});
        for (int v = 1 ; v < n ; ++v)
            _children[*_parent[v]].push_back(v);

        // depth by traversal from the root; anything unreached sits on a cycle
        _depth.assign(n, -1);
        _enter.assign(n, 0);
        _exit.assign(n, 0);
        int clock = 0;
        vector<pair<NodeId, std::size_t>> stack{ { 0, 0 } };
        _depth[0] = 0;
        _enter[0] = clock++;
        while (! stack.empty()) {
            auto & [v, next] = stack.back();
            if (next < _children[v].size()) {
                NodeId c = _children[v][next++];
                _depth[c] = _depth[v] + 1;
                _enter[c] = clock++;
                stack.emplace_back(c, 0);
            }
            else {
                _exit[v] = clock++;
                stack.pop_back();
            }
        }

        for (int v = 0 ; v < n ; ++v)
            if (_depth[v] < 0)
                throw Error{ ErrorKind::InvalidTree, "node " + to_string(v) + " is not reachable from the root" };

        vector<vector<int64_t>> sequences(n);
        for (int v = 0 ; v < n ; ++v)
            sequences[v] = sequence(v);

        _canonical.resize(n);
        std::iota(_canonical.begin(), _canonical.end(), 0);
        std::sort(_canonical.begin(), _canonical.end(), [&] (NodeId a, NodeId b) {
                if (_depth[a] != _depth[b])
                    return _depth[a] < _depth[b];
                if (_label[a] != _label[b])
                    return _label[a] < _label[b];
                if (sequences[a] != sequences[b])
                    return sequences[a] < sequences[b];
                return a < b;
                });
        _rank.resize(n);
        for (int i = 0 ; i < n ; ++i)
            _rank[_canonical[i]] = i;

        for (auto & c : _children)
            std::sort(c.begin(), c.end(), [&] (NodeId a, NodeId b) { return _rank[a] < _rank[b]; });
    }

    auto Tree::check(NodeId v) const -> void
    {
        if (! contains(v))
            throw Error{ ErrorKind::InvalidArgument, "node id " + to_string(v) + " is not in the tree" };
    }

    auto Tree::parent(NodeId v) const -> optional<NodeId>
    {
        check(v);
        return _parent[v];
    }

    auto Tree::label(NodeId v) const -> Label
    {
        check(v);
        return _label[v];
    }

    auto Tree::depth(NodeId v) const -> int
    {
        check(v);
        return _depth[v];
    }

    auto Tree::children(NodeId v) const -> span<const NodeId>
    {
        check(v);
        return _children[v];
    }

    auto Tree::height() const -> int
    {
        return *std::max_element(_depth.begin(), _depth.end());
    }

    auto Tree::max_label() const -> Label
    {
        return *std::max_element(_label.begin(), _label.end());
    }

    auto Tree::leq(NodeId s, NodeId t) const -> bool
    {
        check(s);
        check(t);
        return _enter[s] <= _enter[t] && _exit[t] <= _exit[s];
    }

    auto Tree::less(NodeId s, NodeId t) const -> bool
    {
        return s != t && leq(s, t);
    }

    auto Tree::comparable(NodeId s, NodeId t) const -> bool
    {
        return leq(s, t) || leq(t, s);
    }

    auto Tree::meet(NodeId s, NodeId t) const -> NodeId
    {
        check(s);
        check(t);
        while (_depth[s] > _depth[t])
            s = *_parent[s];
        while (_depth[t] > _depth[s])
            t = *_parent[t];
        while (s != t) {
            s = *_parent[s];
            t = *_parent[t];
        }
        return s;
    }

    auto Tree::ancestor_at_depth(NodeId v, int depth) const -> NodeId
    {
        check(v);
        if (depth < 0 || depth > _depth[v])
            throw Error{ ErrorKind::InvalidArgument, "no ancestor of " + to_string(v) + " at depth " + to_string(depth) };
        while (_depth[v] > depth)
            v = *_parent[v];
        return v;
    }

    auto Tree::ancestors(NodeId v) const -> vector<NodeId>
    {
        check(v);
        vector<NodeId> result;
        while (_parent[v]) {
            v = *_parent[v];
            result.push_back(v);
        }
        std::reverse(result.begin(), result.end());
        return result;
    }

    auto Tree::cut(NodeId v, Label bound) const -> NodeId
    {
        check(v);
        while (_label[v] > bound)
            v = *_parent[v];
        return v;
    }

    auto Tree::sequence(NodeId v) const -> vector<int64_t>
    {
        check(v);
        vector<int64_t> result;
        while (_parent[v]) {
            result.push_back(_label[v].raw());
            v = *_parent[v];
        }
        std::reverse(result.begin(), result.end());
        return result;
    }

    auto Tree::canonical_rank(NodeId v) const -> int
    {
        check(v);
        return _rank[v];
    }

    auto Tree::canonical_less(NodeId a, NodeId b) const -> bool
    {
        return canonical_rank(a) < canonical_rank(b);
    }

    auto Tree::sort_by_depth(vector<NodeId> & ids) const -> void
    {
        for (auto v : ids)
            check(v);
        std::sort(ids.begin(), ids.end(), [&] (NodeId a, NodeId b) {
                return _depth[a] != _depth[b] ? _depth[a] < _depth[b] : _rank[a] < _rank[b];
                });
    }

    auto Tree::with_leaf(NodeId parent, Label label) const -> pair<Tree, NodeId>
    {
        check(parent);
        auto parents = _parent;
        auto labels = _label;
        parents.emplace_back(parent);
        labels.push_back(label);
        NodeId id = size();
        return { from_parents(std::move(parents), std::move(labels)), id };
    }

    auto generate_ts_tree(span<const int64_t> values, int max_depth) -> Tree
    {
        if (values.empty())
            throw Error{ ErrorKind::InvalidArgument, "the ground set must be nonempty" };
        if (max_depth < 1)
            throw Error{ ErrorKind::InvalidArgument, "max_depth must be at least 1" };

        vector<int64_t> ground(values.begin(), values.end());
        std::sort(ground.begin(), ground.end());
        ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
        if (ground.front() < 0)
            throw Error{ ErrorKind::InvalidArgument, "the ground set must consist of naturals" };

        // enumerate sequences level by level; within a level sort by (last, sequence)
        vector<vector<int64_t>> sequences{ {} };
        vector<int> parent_of{ -1 };
        vector<vector<int64_t>> frontier{ {} };
        vector<int> frontier_ids{ 0 };
        for (int d = 1 ; d <= max_depth && ! frontier.empty() ; ++d) {
            vector<pair<vector<int64_t>, int>> next;
            for (std::size_t i = 0 ; i < frontier.size() ; ++i) {
                auto & seq = frontier[i];
                for (auto x : ground)
                    if (seq.empty() || x > seq.back()) {
                        auto ext = seq;
                        ext.push_back(x);
                        next.emplace_back(std::move(ext), frontier_ids[i]);
                    }
            }
            std::sort(next.begin(), next.end(), [] (const auto & a, const auto & b) {
                    if (a.first.back() != b.first.back())
                        return a.first.back() < b.first.back();
                    return a.first < b.first;
                    });

            frontier.clear();
            frontier_ids.clear();
            for (auto & [seq, p] : next) {
                frontier_ids.push_back(static_cast<int>(sequences.size()));
                frontier.push_back(seq);
                sequences.push_back(seq);
                parent_of.push_back(p);
            }
        }

        vector<optional<NodeId>> parents(sequences.size());
        vector<Label> labels(sequences.size());
        for (std::size_t v = 1 ; v < sequences.size() ; ++v) {
            parents[v] = parent_of[v];
            labels[v] = Label::of(sequences[v].back());
        }
        return Tree::from_parents(std::move(parents), std::move(labels));
    }

    auto level_set(const Tree & tree, Label level) -> NodeSet
    {
        vector<NodeId> ids;
        for (NodeId v = 0 ; v < tree.size() ; ++v)
            if (tree.label(v) == level)
                ids.push_back(v);
        return NodeSet{ std::move(ids) };
    }

    auto below_set(const Tree & tree, Label level) -> NodeSet
    {
        vector<NodeId> ids;
        for (NodeId v = 0 ; v < tree.size() ; ++v)
            if (tree.label(v) < level)
                ids.push_back(v);
        return NodeSet{ std::move(ids) };
    }

    auto has_branching_property(const Tree & tree, const NodeSet & set, Label bound) -> bool
    {
        set.check_against(tree);

        // the hardest e below the bound is bound - 1; none exists for bound <= 0
        if (bound.is_bottom() || bound.raw() == 0)
            return true;
        Label hardest = Label::of(bound.raw() - 1);

        for (auto t : set) {
            vector<NodeId> high;
            for (auto s : set)
                if (tree.leq(t, s) && tree.label(s) > hardest)
                    high.push_back(s);

            bool found = false;
            for (std::size_t i = 0 ; i < high.size() && ! found ; ++i)
                for (std::size_t j = i + 1 ; j < high.size() && ! found ; ++j)
                    if (! tree.comparable(high[i], high[j]))
                        found = true;
            if (! found)
                return false;
        }
        return true;
    }

    auto comparability_graph(const Tree & tree) -> Graph
    {
        Graph result(tree.size());
        for (NodeId t = 0 ; t < tree.size() ; ++t)
            for (auto s : tree.ancestors(t))
                result.add_edge(s, t);
        return result;
    }

    auto chain_tree(int length) -> Tree
    {
        if (length < 1)
            throw Error{ ErrorKind::InvalidArgument, "a chain needs at least one node" };
        vector<optional<NodeId>> parents(length);
        vector<Label> labels(length);
        for (int v = 1 ; v < length ; ++v) {
            parents[v] = v - 1;
            labels[v] = Label::of(v);
        }
        return Tree::from_parents(std::move(parents), std::move(labels));
    }
}
