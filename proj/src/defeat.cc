/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <treeladder/builder.hh>
#include <treeladder/error.hh>
#include <treeladder/kernels.hh>

#include <algorithm>
#include <set>

using std::string;
using std::vector;

namespace treeladder
{
    auto to_string(BuilderMode mode) -> string
    {
        switch (mode) {
            case BuilderMode::Transitive: return "transitive";
            case BuilderMode::Coherent:   return "coherent";
            case BuilderMode::Sparse:     return "sparse";
        }
        return "?";
    }

    auto parse_builder_mode(const string & name) -> BuilderMode
    {
        for (auto mode : { BuilderMode::Transitive, BuilderMode::Coherent, BuilderMode::Sparse })
            if (name == to_string(mode))
                return mode;
        throw Error{ ErrorKind::InvalidArgument, "unknown builder mode '" + name + "'" };
    }

    auto DefeatRow::fully_defeated() const -> bool
    {
        return std::all_of(defeated.begin(), defeated.end(), [] (bool d) { return d; });
    }

    auto DefeatReport::defeated_fraction() const -> double
    {
        if (rows.empty())
            return 0.0;
        auto full = std::count_if(rows.begin(), rows.end(), [] (const DefeatRow & r) { return r.fully_defeated(); });
        return static_cast<double>(full) / static_cast<double>(rows.size());
    }

    auto defeat_challenge(const Tree & tree, const LadderSystem & ladder, const Coloring & f,
            const DefeatOptions & options) -> Challenge
    {
        Challenge result;
        result.f = f;

        vector<NodeId> eligible;
        for (NodeId v = 1 ; v < tree.size() ; ++v)
            if (tree.label(v) < options.new_label)
                eligible.push_back(v);
        result.a = NodeSet{ eligible };

        switch (options.mode) {
            case BuilderMode::Transitive:
                break;

            case BuilderMode::Sparse: {
                auto x = graph_of(tree, ladder);
                auto decision = decide_coloring(tree, x.graph, f, tree.max_label());
                result.t0 = decision.t0.value_or(tree.root());
                result.a.insert(*result.t0);
                break;
            }

            case BuilderMode::Coherent: {
                // split the distinct labels of A into one band per level
                std::set<Label> distinct;
                for (auto v : eligible)
                    distinct.insert(tree.label(v));
                vector<Label> labels(distinct.begin(), distinct.end());
                int levels = std::max(options.k, 1);
                for (int n = 0 ; n < levels ; ++n) {
                    vector<NodeId> band;
                    if (! labels.empty()) {
                        auto cut = labels[((n + 1) * labels.size() + levels - 1) / levels - 1];
                        for (auto v : eligible)
                            if (tree.label(v) <= cut)
                                band.push_back(v);
                    }
                    result.chain.push_back(NodeSet{ std::move(band) });
                }
                break;
            }
        }
        return result;
    }

    auto defeat_one(const Tree & tree, const LadderSystem & ladder, const Coloring & f,
            const DefeatOptions & options) -> DefeatRow
    {
        if (f.size() != tree.size())
            throw Error{ ErrorKind::InvalidArgument, "colouring size does not match the tree" };

        auto challenge = defeat_challenge(tree, ladder, f, options);
        BuildResult built = [&] {
            switch (options.mode) {
                case BuilderMode::Transitive:
                    return extend_transitive(tree, ladder, challenge, options.k, options.new_label);
                case BuilderMode::Coherent:
                    return extend_coherent(tree, ladder, challenge, options.nu, options.k, options.new_label);
                case BuilderMode::Sparse:
                    return extend_sparse(tree, ladder, challenge, options.k, options.new_label);
            }
            throw Error{ ErrorKind::InvalidArgument, "unknown builder mode" };
        }();

        DefeatRow row{ built.t_xi, built.ladder.rungs[built.t_xi], challenge.t0, { }, std::move(built.state) };
        for (int colour = 0 ; colour < f.palette ; ++colour)
            row.defeated.push_back(std::any_of(row.rung.begin(), row.rung.end(),
                        [&] (NodeId s) { return f[s] == colour; }));
        return row;
    }

    auto defeat_colorings(const Tree & tree, const LadderSystem & ladder, const vector<Coloring> & colorings,
            const DefeatOptions & options) -> DefeatReport
    {
        return parallel::defeat_colorings(tree, ladder, colorings, options);
    }
}
