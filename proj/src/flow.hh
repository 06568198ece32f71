/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TREELADDER_GUARD_SRC_FLOW_HH
#define TREELADDER_GUARD_SRC_FLOW_HH 1

#include <vector>

namespace treeladder::detail
{
    /**
     * Small integral max-flow network, augmenting along shortest paths.
     * Arcs are stored in pairs so that arc i ^ 1 is the reverse of arc i.
     */
    class FlowNetwork
    {
        private:
            struct Arc
            {
                int to, capacity;
            };

            std::vector<Arc> _arcs;
            std::vector<std::vector<int>> _out;

        public:
            explicit FlowNetwork(int size);

            /// Returns the index of the forward arc.
            auto add_arc(int from, int to, int capacity) -> int;

            /// Augments until no path remains or `limit` units have been sent.
            auto max_flow(int source, int sink, int limit) -> int;

            /// Flow currently carried by a forward arc.
            auto flow(int arc) const -> int { return _arcs[arc ^ 1].capacity; }
            auto target(int arc) const -> int { return _arcs[arc].to; }
            auto out_arcs(int v) const -> const std::vector<int> & { return _out[v]; }
            auto is_forward(int arc) const -> bool { return (arc & 1) == 0; }
    };
}

#endif
