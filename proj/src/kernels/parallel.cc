/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <treeladder/kernels.hh>
#include <treeladder/error.hh>

#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#ifdef _OPENMP
#  include <omp.h>
#endif

using std::vector;

namespace treeladder::parallel
{
    auto thread_count() -> int
    {
#ifdef _OPENMP
        return omp_get_max_threads();
#else
        return 1;
#endif
    }

    auto cover_floors(const Tree & tree, const Graph & graph) -> vector<Label>
    {
        if (graph.size() != tree.size())
            throw Error{ ErrorKind::InvalidArgument, "graph has " + std::to_string(graph.size())
                + " vertices but the tree has " + std::to_string(tree.size()) + " nodes" };

        auto order = tree.canonical_order();
        vector<Label> floor(tree.size());

        std::size_t begin = 0;
        while (begin < order.size()) {
            std::size_t end = begin;
            int depth = tree.depth(order[begin]);
            while (end < order.size() && tree.depth(order[end]) == depth)
                ++end;

            long width = static_cast<long>(end - begin);
#pragma omp parallel for schedule(static) if (width > 512)
            for (long i = 0 ; i < width ; ++i) {
                NodeId v = order[begin + i];
                Label low = tree.label(v);
                for (auto u : graph.neighbours(v))
                    if (tree.less(u, v))
                        low = std::min(low, floor[u]);
                floor[v] = low;
            }

            begin = end;
        }
        return floor;
    }

    auto min_pair_connectivity_over(const Graph & graph, const NodeSet & set) -> PairConnectivity
    {
        if (set.size() < 2)
            throw Error{ ErrorKind::InvalidArgument, "need at least two vertices" };

        auto ids = set.ids();
        vector<std::pair<NodeId, NodeId>> pairs;
        for (std::size_t i = 0 ; i < ids.size() ; ++i)
            for (std::size_t j = i + 1 ; j < ids.size() ; ++j)
                pairs.emplace_back(ids[i], ids[j]);

        vector<int> values(pairs.size());
        long count = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 4)
        for (long p = 0 ; p < count ; ++p)
            values[p] = pair_connectivity(graph, pairs[p].first, pairs[p].second);

        PairConnectivity best{ std::numeric_limits<int>::max(), -1, -1 };
        for (std::size_t p = 0 ; p < pairs.size() ; ++p)
            if (values[p] < best.value)
                best = PairConnectivity{ values[p], pairs[p].first, pairs[p].second };
        return best;
    }

    auto defeat_colorings(const Tree & tree, const LadderSystem & ladder, const vector<Coloring> & colorings,
            const DefeatOptions & options) -> DefeatReport
    {
        long count = static_cast<long>(colorings.size());
        vector<std::optional<DefeatRow>> rows(count);
        vector<std::exception_ptr> failures(count);

#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0 ; i < count ; ++i) {
            try {
                rows[i] = defeat_one(tree, ladder, colorings[i], options);
            }
            catch (...) {
                failures[i] = std::current_exception();
            }
        }

        DefeatReport report;
        for (long i = 0 ; i < count ; ++i) {
            if (failures[i])
                std::rethrow_exception(failures[i]);
            report.rows.push_back(std::move(*rows[i]));
        }
        return report;
    }
}
