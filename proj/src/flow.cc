/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "flow.hh"

#include <algorithm>
#include <deque>

namespace treeladder::detail
{
    FlowNetwork::FlowNetwork(int size) :
        _out(size)
    {
    }

    auto FlowNetwork::add_arc(int from, int to, int capacity) -> int
    {
        int index = static_cast<int>(_arcs.size());
        _arcs.push_back(Arc{ to, capacity });
        _arcs.push_back(Arc{ from, 0 });
        _out[from].push_back(index);
        _out[to].push_back(index + 1);
        return index;
    }

    auto FlowNetwork::max_flow(int source, int sink, int limit) -> int
    {
        int total = 0;
        std::vector<int> via(_out.size());
        while (total < limit) {
            std::fill(via.begin(), via.end(), -1);
            std::deque<int> queue{ source };
            via[source] = -2;
            while (! queue.empty() && via[sink] == -1) {
                int v = queue.front();
                queue.pop_front();
                for (int a : _out[v])
                    if (_arcs[a].capacity > 0 && via[_arcs[a].to] == -1) {
                        via[_arcs[a].to] = a;
                        queue.push_back(_arcs[a].to);
                    }
            }
            if (via[sink] == -1)
                break;

            int bottleneck = limit - total;
            for (int v = sink ; v != source ; v = _arcs[via[v] ^ 1].to)
                bottleneck = std::min(bottleneck, _arcs[via[v]].capacity);
            for (int v = sink ; v != source ; v = _arcs[via[v] ^ 1].to) {
                _arcs[via[v]].capacity -= bottleneck;
                _arcs[via[v] ^ 1].capacity += bottleneck;
            }
            total += bottleneck;
        }
        return total;
    }
}
