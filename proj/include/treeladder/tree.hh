/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TREELADDER_GUARD_TREE_HH
#define TREELADDER_GUARD_TREE_HH 1

#include <treeladder/graph.hh>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace treeladder
{
    /**
     * Ordinal label of a tree node. Non-root nodes carry a natural number,
     * the root carries a bottom value which compares below every natural.
     */
    class Label
    {
        private:
            std::int64_t _value;

            constexpr explicit Label(std::int64_t v, int) : _value(v) { }

        public:
            constexpr Label() : _value(-1) { }

            static constexpr auto bottom() -> Label { return Label{ -1, 0 }; }
            static auto of(std::int64_t value) -> Label;

            constexpr auto is_bottom() const noexcept -> bool { return _value < 0; }

            /// Raw value, -1 for bottom.
            constexpr auto raw() const noexcept -> std::int64_t { return _value; }

            /// Natural value; throws on bottom.
            auto value() const -> std::int64_t;

            constexpr auto operator<=> (const Label &) const = default;
    };

    auto to_string(Label label) -> std::string;

    class Tree;

    /// Sorted duplicate-free set of node ids over a fixed tree.
    class NodeSet
    {
        private:
            std::vector<NodeId> _ids;

        public:
            NodeSet() = default;
            NodeSet(std::initializer_list<NodeId> ids);
            explicit NodeSet(std::vector<NodeId> ids);

            auto contains(NodeId v) const -> bool;
            auto insert(NodeId v) -> bool;
            auto size() const noexcept -> std::size_t { return _ids.size(); }
            auto empty() const noexcept -> bool { return _ids.empty(); }
            auto ids() const noexcept -> std::span<const NodeId> { return _ids; }
            auto begin() const { return _ids.begin(); }
            auto end() const { return _ids.end(); }

            /// Throws invalid-argument if an id is outside the tree.
            auto check_against(const Tree & tree) const -> void;

            auto operator== (const NodeSet &) const -> bool = default;
    };

    /**
     * Finite rooted set-theoretic tree. Node 0 is the root; every other node
     * has a parent, and labels strictly increase from parent to child.
     * Immutable once built.
     */
    class Tree
    {
        private:
            std::vector<std::optional<NodeId>> _parent;
            std::vector<Label> _label;
            std::vector<int> _depth;
            std::vector<std::vector<NodeId>> _children;
            std::vector<int> _enter, _exit;
            std::vector<NodeId> _canonical;
            std::vector<int> _rank;

            Tree() = default;
            auto index() -> void;

        public:
            /// Validates every tree invariant; throws invalid-tree.
            static auto from_parents(std::vector<std::optional<NodeId>> parents, std::vector<Label> labels) -> Tree;

            /// A single root.
            static auto singleton() -> Tree;

            auto size() const noexcept -> int { return static_cast<int>(_parent.size()); }
            auto root() const noexcept -> NodeId { return 0; }
            auto contains(NodeId v) const noexcept -> bool { return v >= 0 && v < size(); }

            /// Throws invalid-argument for a foreign id.
            auto check(NodeId v) const -> void;

            auto parent(NodeId v) const -> std::optional<NodeId>;
            auto label(NodeId v) const -> Label;
            auto depth(NodeId v) const -> int;
            auto children(NodeId v) const -> std::span<const NodeId>;
            auto height() const -> int;
            auto max_label() const -> Label;

            /// s is an ancestor of t or equal to it.
            auto leq(NodeId s, NodeId t) const -> bool;
            auto less(NodeId s, NodeId t) const -> bool;
            auto comparable(NodeId s, NodeId t) const -> bool;
            auto meet(NodeId s, NodeId t) const -> NodeId;

            /// The ancestor-or-self of v at the given depth.
            auto ancestor_at_depth(NodeId v, int depth) const -> NodeId;

            /// Strict ancestors, root first.
            auto ancestors(NodeId v) const -> std::vector<NodeId>;

            /// Deepest ancestor-or-self of v whose label is at most `bound`
            /// (the prefix cut v ∩ (bound + 1)); the root when nothing qualifies.
            auto cut(NodeId v, Label bound) const -> NodeId;

            /// Labels along the path from the root, root excluded.
            auto sequence(NodeId v) const -> std::vector<std::int64_t>;

            /// Nodes sorted by (depth, label, label sequence), ties by id.
            auto canonical_order() const noexcept -> std::span<const NodeId> { return _canonical; }
            auto canonical_rank(NodeId v) const -> int;
            auto canonical_less(NodeId a, NodeId b) const -> bool;

            /// Sorts ids by tree depth (the order used for chains of ancestors).
            auto sort_by_depth(std::vector<NodeId> & ids) const -> void;

            /// A new tree with one extra leaf; returns it with the new id.
            auto with_leaf(NodeId parent, Label label) const -> std::pair<Tree, NodeId>;

            auto parents() const noexcept -> std::span<const std::optional<NodeId>> { return _parent; }
            auto labels() const noexcept -> std::span<const Label> { return _label; }

            auto operator== (const Tree & other) const -> bool
            {
                return _parent == other._parent && _label == other._label;
            }
    };

    /// All strictly increasing sequences over `values` of length at most
    /// `max_depth`, ordered by end-extension and labelled by their last element.
    /// Node ids follow canonical order.
    auto generate_ts_tree(std::span<const std::int64_t> values, int max_depth) -> Tree;

    auto level_set(const Tree & tree, Label level) -> NodeSet;
    auto below_set(const Tree & tree, Label level) -> NodeSet;

    /// For every t in `set` and every natural e < bound there are incomparable
    /// s0, s1 in `set`, both above t, with labels exceeding e.
    auto has_branching_property(const Tree & tree, const NodeSet & set, Label bound) -> bool;

    auto comparability_graph(const Tree & tree) -> Graph;

    /// A chain of `length` nodes labelled 1..length-1 above the root.
    auto chain_tree(int length) -> Tree;
}

#endif
