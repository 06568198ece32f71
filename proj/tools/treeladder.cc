/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <treeladder/analysis.hh>
#include <treeladder/builder.hh>
#include <treeladder/error.hh>
#include <treeladder/generate.hh>
#include <treeladder/io.hh>
#include <treeladder/ladder.hh>
#include <treeladder/tree.hh>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace treeladder;

using std::cerr;
using std::cout;
using std::function;
using std::int64_t;
using std::optional;
using std::string;
using std::vector;

namespace
{
    enum ExitCode
    {
        exit_success = 0,
        exit_predicate_failed = 1,
        exit_input_error = 2,
        exit_resource_limit = 3
    };

    struct GlobalOptions
    {
        optional<std::uint64_t> seed;
        long budget = ChromaticOptions{ }.search_budget;
        long verify_budget = 2000;
        bool json = false;
    };

    struct Bundle
    {
        string tree_file, ladder_file, coloring_file, nu_file;

        auto tree() const -> Tree
        {
            return tree_from_json(read_json_file(tree_file));
        }

        auto ladder(const Tree & t) const -> LadderSystem
        {
            if (ladder_file.empty())
                return LadderSystem::empty(t);
            return ladder_from_json(t, read_json_file(ladder_file));
        }

        auto coloring(const Tree & t) const -> optional<Coloring>
        {
            if (coloring_file.empty())
                return std::nullopt;
            return coloring_from_json(read_json_file(coloring_file), t.size());
        }

        auto nu() const -> optional<OrdinalLadder>
        {
            if (nu_file.empty())
                return std::nullopt;
            return ordinal_from_json(read_json_file(nu_file));
        }
    };

    auto add_bundle(CLI::App * app, Bundle & bundle, bool with_ladder = true) -> void
    {
        app->add_option("--tree", bundle.tree_file, "Tree JSON file")->required()->check(CLI::ExistingFile);
        if (with_ladder)
            app->add_option("--ladder", bundle.ladder_file, "Ladder system JSON file (empty ladder if omitted)")->check(CLI::ExistingFile);
    }

    auto split_list(const string & text) -> vector<string>
    {
        vector<string> result;
        std::stringstream in(text);
        string item;
        while (std::getline(in, item, ','))
            if (! item.empty())
                result.push_back(item);
        return result;
    }

    /// "1..6" or "1,3,5".
    auto parse_values(const string & text) -> vector<int64_t>
    {
        vector<int64_t> result;
        try {
            if (auto dots = text.find("..") ; dots != string::npos) {
                int64_t low = std::stoll(text.substr(0, dots)), high = std::stoll(text.substr(dots + 2));
                for (int64_t v = low ; v <= high ; ++v)
                    result.push_back(v);
            }
            else
                for (auto & item : split_list(text))
                    result.push_back(std::stoll(item));
        }
        catch (const std::logic_error &) {
            throw Error{ ErrorKind::InvalidArgument, "cannot read value set '" + text + "'" };
        }
        return result;
    }

    auto emit(const GlobalOptions & global, const Json & json, const string & text) -> void
    {
        if (global.json)
            cout << json.dump(2) << '\n';
        else
            cout << text;
    }

    auto node_name(const Tree & tree, NodeId v) -> string
    {
        string result = "[";
        bool first = true;
        for (auto x : tree.sequence(v)) {
            if (! first)
                result += ",";
            result += std::to_string(x);
            first = false;
        }
        return result + "]";
    }

    auto chain_text(const Tree & tree, const Chain & chain) -> string
    {
        string result = "(";
        for (std::size_t i = 0 ; i < chain.size() ; ++i)
            result += (i ? "," : "") + node_name(tree, chain[i]);
        return result + ")";
    }

    /// Depth-first search over simple s-t paths avoiding `cut`. Returns true
    /// if none exists, false if one does, nothing if the budget ran out.
    auto brute_force_separates(const Graph & graph, const NodeSet & cut, NodeId s, NodeId t, long budget) -> optional<bool>
    {
        vector<char> on_path(graph.size(), 0);
        long steps = 0;
        bool exhausted = false;
        function<bool (NodeId)> search = [&] (NodeId v) -> bool {
            if (v == t)
                return true;
            if (++steps > budget) {
                exhausted = true;
                return false;
            }
            on_path[v] = 1;
            for (auto w : graph.neighbours(v))
                if (! on_path[w] && ! cut.contains(w) && search(w))
                    return true;
            on_path[v] = 0;
            return false;
        };
        bool found = search(s);
        if (found)
            return false;
        if (exhausted)
            return std::nullopt;
        return true;
    }

    // ---- gen ----

    struct GenOptions
    {
        string tree_kind = "ts", values = "1..3", ladder_kind = "empty", require, tree_in, nu_file;
        string out_tree, out_ladder, out_coloring;
        int depth = 3, size = 20, length = 4, max_rung = 2, attempts = 1000, palette = 0;
        double density = 0.5, supp_rate = 0.3;
    };

    auto run_gen(const GlobalOptions & global, const GenOptions & options) -> int
    {
        bool random_tree = options.tree_kind == "random-ts";
        bool random_rungs = options.ladder_kind != "empty" && options.ladder_kind != "ordinal";
        if ((random_tree || random_rungs || options.palette > 0) && ! global.seed)
            throw Error{ ErrorKind::InvalidArgument, "random generation needs --seed" };
        Rng rng(global.seed.value_or(0));

        Tree tree = [&] {
            if (! options.tree_in.empty())
                return tree_from_json(read_json_file(options.tree_in));
            if (options.tree_kind == "ts")
                return generate_ts_tree(parse_values(options.values), options.depth);
            if (options.tree_kind == "random-ts")
                return random_ts_subtree(parse_values(options.values), options.depth, options.size, rng);
            if (options.tree_kind == "chain")
                return chain_tree(options.length);
            throw Error{ ErrorKind::InvalidArgument, "unknown tree kind '" + options.tree_kind + "'" };
        }();

        auto required = split_list(options.require);
        auto satisfies = [&] (const LadderSystem & ladder) {
            for (auto & p : required) {
                if (p == "transitive" && ! is_transitive(tree, ladder))
                    return false;
                else if (p == "coherent" && ! is_coherent(tree, ladder))
                    return false;
                else if (p == "sparse" && ! is_sparse(tree, ladder, graph_of(tree, ladder)))
                    return false;
            }
            return true;
        };
        for (auto & p : required)
            if (p != "transitive" && p != "coherent" && p != "sparse")
                throw Error{ ErrorKind::InvalidArgument, "unknown predicate '" + p + "'" };

        auto sample = [&] () -> LadderSystem {
            auto & kind = options.ladder_kind;
            if (kind == "empty")
                return LadderSystem::empty(tree);
            if (kind == "ordinal") {
                if (options.nu_file.empty())
                    throw Error{ ErrorKind::InvalidArgument, "--ladder ordinal needs --nu" };
                return derive_ladder_from_ordinal(tree, ordinal_from_json(read_json_file(options.nu_file)));
            }
            if (kind == "random")
                return random_ladder(tree, rng, options.max_rung, options.density);
            if (kind == "transitive")
                return random_transitive(tree, rng, options.max_rung, options.density);
            if (kind == "coherent")
                return random_coherent(tree, rng, options.max_rung, options.density, options.supp_rate);
            if (kind == "sparse")
                return random_sparse(tree, rng, options.max_rung, options.density);
            throw Error{ ErrorKind::InvalidArgument, "unknown ladder kind '" + kind + "'" };
        };

        optional<LadderSystem> ladder;
        int attempts = random_rungs ? options.attempts : 1;
        for (int a = 0 ; a < attempts && ! ladder ; ++a)
            if (auto candidate = sample() ; satisfies(candidate))
                ladder = std::move(candidate);
        if (! ladder)
            throw Error{ ErrorKind::GenerationFailed, "no ladder satisfying '" + options.require + "' within "
                + std::to_string(attempts) + " attempts" };

        optional<Coloring> coloring;
        if (options.palette > 0)
            coloring = random_coloring(tree.size(), options.palette, rng);

        Json bundle{ { "tree", tree_to_json(tree) }, { "ladder", ladder_to_json(tree, *ladder) } };
        if (coloring)
            bundle["coloring"] = coloring_to_json(*coloring);

        bool to_files = false;
        if (! options.out_tree.empty()) {
            write_text_file(options.out_tree, bundle["tree"].dump(2) + "\n");
            to_files = true;
        }
        if (! options.out_ladder.empty()) {
            write_text_file(options.out_ladder, bundle["ladder"].dump(2) + "\n");
            to_files = true;
        }
        if (coloring && ! options.out_coloring.empty()) {
            write_text_file(options.out_coloring, bundle["coloring"].dump(2) + "\n");
            to_files = true;
        }

        if (! to_files)
            cout << bundle.dump(2) << '\n';
        else if (! global.json)
            cout << "generated " << tree.size() << " nodes, " << graph_of(tree, *ladder).graph.edge_count() << " ladder edges\n";
        else
            cout << Json{ { "nodes", tree.size() }, { "edges", graph_of(tree, *ladder).graph.edge_count() } }.dump(2) << '\n';
        return exit_success;
    }

    // ---- check ----

    auto run_check(const GlobalOptions & global, const Bundle & bundle, const string & which) -> int
    {
        auto tree = bundle.tree();
        auto ladder = bundle.ladder(tree);
        auto x = graph_of(tree, ladder);

        auto predicates = split_list(which);
        if (predicates.empty() || which == "all")
            predicates = { "transitive", "coherent", "sparse", "clique-chain" };

        Json reports = Json::array();
        std::ostringstream text;
        bool all_hold = true;
        for (auto & p : predicates) {
            Json witness = nullptr;
            bool holds;
            string detail;
            if (p == "transitive") {
                auto v = is_transitive(tree, ladder);
                holds = v.holds();
                if (! holds) {
                    witness = Json{ { "t", v.witness->t }, { "s", v.witness->s }, { "missing", v.witness->missing } };
                    detail = "t=" + node_name(tree, v.witness->t) + " s=" + node_name(tree, v.witness->s)
                        + " missing=" + node_name(tree, v.witness->missing);
                }
            }
            else if (p == "coherent") {
                auto v = is_coherent(tree, ladder);
                holds = v.holds();
                if (! holds) {
                    witness = Json{ { "condition", v.witness->condition }, { "t", v.witness->t }, { "s", v.witness->s } };
                    detail = "condition " + std::to_string(v.witness->condition) + " at t=" + node_name(tree, v.witness->t)
                        + " s=" + node_name(tree, v.witness->s);
                }
            }
            else if (p == "sparse") {
                auto v = is_sparse(tree, ladder, x);
                holds = v.holds();
                if (! holds) {
                    witness = Json{ { "t", v.witness->t }, { "r", v.witness->r }, { "s", v.witness->s },
                        { "path", v.witness->covering_path } };
                    detail = "t=" + node_name(tree, v.witness->t) + " r=" + node_name(tree, v.witness->r)
                        + " s=" + node_name(tree, v.witness->s) + " path=" + chain_text(tree, v.witness->covering_path);
                }
            }
            else if (p == "clique-chain") {
                auto v = clique_chain_check(tree, ladder, x.graph);
                holds = v.holds();
                if (! holds) {
                    witness = Json{ { "clique", v.witness->clique } };
                    witness["offender"] = v.witness->offender ? Json(*v.witness->offender) : Json(nullptr);
                    detail = "clique " + chain_text(tree, v.witness->clique);
                }
            }
            else
                throw Error{ ErrorKind::InvalidArgument, "unknown predicate '" + p + "'" };

            all_hold = all_hold && holds;
            reports.push_back(Json{ { "check", p }, { "verdict", holds }, { "witness", witness } });
            text << p << ": " << (holds ? "pass" : "fail") << (detail.empty() ? "" : ", witness " + detail) << '\n';
        }

        emit(global, reports, text.str());
        return all_hold ? exit_success : exit_predicate_failed;
    }

    // ---- analyze ----

    struct AnalyzeOptions
    {
        string which = "chromatic,special-cycle,triangle";
        int m = 1;
        vector<NodeId> pair;
    };

    auto run_analyze(const GlobalOptions & global, const Bundle & bundle, const AnalyzeOptions & options) -> int
    {
        auto tree = bundle.tree();
        auto ladder = bundle.ladder(tree);
        auto coloring = bundle.coloring(tree);
        auto x = graph_of(tree, ladder);

        auto analyses = split_list(options.which);
        if (options.which == "all")
            analyses = { "chromatic", "special-cycle", "triangle", "h-pattern", "separator", "connectivity",
                "defeater", "mono-clique", "vee" };

        Json reports = Json::array();
        std::ostringstream text;
        bool partial = false;

        for (auto & a : analyses) {
            Json verdict = nullptr, witness = nullptr;
            string line;

            if (a == "chromatic") {
                try {
                    auto result = chromatic_number(x.graph, ChromaticOptions{ ChromaticOptions{ }.vertex_budget, global.budget });
                    verdict = result.value;
                    witness = coloring_to_json(result.witness);
                    line = std::to_string(result.value);
                }
                catch (const ResourceLimitError & e) {
                    partial = true;
                    verdict = Json{ { "lower", e.lower_bound() }, { "upper", e.upper_bound() }, { "partial", true } };
                    line = "between " + std::to_string(e.lower_bound()) + " and " + std::to_string(e.upper_bound()) + " (budget exceeded)";
                }
            }
            else if (a == "special-cycle") {
                auto cycle = find_special_cycle(tree, x.graph);
                verdict = cycle.has_value();
                if (cycle) {
                    witness = Json{ { "long_arc", cycle->long_arc }, { "short_arc", cycle->short_arc } };
                    line = "arcs " + chain_text(tree, cycle->long_arc) + " and " + chain_text(tree, cycle->short_arc);
                }
                else
                    line = "absent";
            }
            else if (a == "triangle") {
                auto triangle = find_triangle(x.graph);
                verdict = triangle.has_value();
                if (triangle) {
                    witness = Json(*triangle);
                    line = chain_text(tree, Chain(triangle->begin(), triangle->end()));
                }
                else
                    line = "absent";
            }
            else if (a == "h-pattern") {
                auto h = find_h_pattern(tree, x.graph, options.m);
                verdict = h.has_value();
                if (h) {
                    witness = Json{ { "x", h->x }, { "y", h->y }, { "z", h->z }, { "z_prime", h->z_prime } };
                    line = "x=" + chain_text(tree, h->x) + " y=" + chain_text(tree, h->y) + " z=" + node_name(tree, h->z)
                        + " z'=" + node_name(tree, h->z_prime);
                }
                else
                    line = "absent for m=" + std::to_string(options.m);
            }
            else if (a == "separator") {
                Json entries = Json::array();
                bool all_separate = true;
                auto visit = [&] (NodeId t, NodeId t_prime) {
                    auto f = separator(tree, ladder, t, t_prime);
                    bool separates_bfs = separates(x.graph, f, t, t_prime);
                    auto brute = brute_force_separates(x.graph, f, t, t_prime, global.verify_budget);
                    all_separate = all_separate && separates_bfs && brute.value_or(true);
                    Json entry{ { "t", t }, { "t_prime", t_prime }, { "separator", vector<NodeId>(f.begin(), f.end()) },
                        { "separates", separates_bfs } };
                    entry["verified"] = brute ? Json(*brute) : Json(nullptr);
                    entries.push_back(entry);
                };
                if (options.pair.size() == 2)
                    visit(options.pair[0], options.pair[1]);
                else
                    for (NodeId t = 0 ; t < tree.size() ; ++t)
                        for (NodeId u = 0 ; u < tree.size() ; ++u)
                            if (u != t && ! tree.comparable(t, u))
                                visit(t, u);
                verdict = all_separate;
                witness = entries;
                line = std::to_string(entries.size()) + " pairs, " + (all_separate ? "all separated" : "SEPARATION FAILED");
            }
            else if (a == "connectivity") {
                if (options.pair.size() == 2) {
                    int value = pair_connectivity(x.graph, options.pair[0], options.pair[1]);
                    verdict = value;
                    line = std::to_string(value);
                }
                else {
                    vector<NodeId> all(tree.size());
                    for (NodeId v = 0 ; v < tree.size() ; ++v)
                        all[v] = v;
                    if (all.size() < 2)
                        line = "fewer than two vertices";
                    else {
                        auto best = min_pair_connectivity_over(x.graph, NodeSet{ all });
                        verdict = best.value;
                        witness = Json{ best.s, best.t };
                        line = std::to_string(best.value) + " at " + node_name(tree, best.s) + "," + node_name(tree, best.t);
                    }
                }
            }
            else if (a == "defeater" || a == "mono-clique") {
                auto f = coloring.value_or(Coloring::constant(tree.size(), 0));
                if (a == "defeater") {
                    auto g = defeater_coloring(tree, ladder, f);
                    bool proper = is_proper(x.graph, g.flattened);
                    verdict = proper;
                    witness = Json{ { "coloring", coloring_to_json(g.flattened) }, { "level", g.level }, { "max_level", g.max_level } };
                    line = string(proper ? "proper" : "NOT PROPER") + ", palette " + std::to_string(g.flattened.palette);
                }
                else {
                    auto clique = find_mono_clique(tree, ladder, f);
                    verdict = clique.has_value();
                    if (clique) {
                        witness = Json{ { "t", clique->t }, { "members", clique->members } };
                        line = "t=" + node_name(tree, clique->t) + " members " + chain_text(tree, clique->members);
                    }
                    else
                        line = "absent";
                }
            }
            else if (a == "vee") {
                if (! is_transitive(tree, ladder)) {
                    verdict = nullptr;
                    line = "skipped, ladder not transitive";
                }
                else {
                    long checked = 0;
                    bool all_vee = true, complete = true;
                    Path path;
                    vector<char> on_path(tree.size(), 0);
                    function<void (NodeId)> walk = [&] (NodeId v) {
                        if (checked >= global.verify_budget) {
                            complete = false;
                            return;
                        }
                        path.push_back(v);
                        on_path[v] = 1;
                        ++checked;
                        all_vee = all_vee && is_vee(tree, reduce_path(tree, ladder, path));
                        for (auto w : x.graph.neighbours(v))
                            if (! on_path[w])
                                walk(w);
                        on_path[v] = 0;
                        path.pop_back();
                    };
                    for (NodeId v = 0 ; v < tree.size() ; ++v)
                        walk(v);
                    verdict = all_vee;
                    witness = Json{ { "paths", checked }, { "complete", complete } };
                    line = std::to_string(checked) + " paths reduced, " + (all_vee ? "all vee-shaped" : "NOT ALL VEE")
                        + (complete ? "" : " (budget reached)");
                }
            }
            else
                throw Error{ ErrorKind::InvalidArgument, "unknown analysis '" + a + "'" };

            reports.push_back(Json{ { "check", a }, { "verdict", verdict }, { "witness", witness } });
            text << a << ": " << line << '\n';
        }

        emit(global, reports, text.str());
        return partial ? exit_resource_limit : exit_success;
    }

    // ---- defeat ----

    struct DefeatCliOptions
    {
        string colorings_file, mode = "transitive";
        int depth = 1;
        optional<int64_t> label;
    };

    auto run_defeat(const GlobalOptions & global, const Bundle & bundle, const DefeatCliOptions & options) -> int
    {
        auto tree = bundle.tree();
        auto ladder = bundle.ladder(tree);
        auto colorings = colorings_from_json(read_json_file(options.colorings_file), tree.size());

        DefeatOptions defeat;
        defeat.mode = parse_builder_mode(options.mode);
        defeat.k = options.depth;
        defeat.new_label = options.label ? Label::of(*options.label) : Label::of(tree.max_label().raw() + 1);
        if (auto nu = bundle.nu())
            defeat.nu = *nu;
        else if (defeat.mode == BuilderMode::Coherent)
            throw Error{ ErrorKind::MissingLadderEntry, "coherent mode needs --nu" };

        auto report = defeat_colorings(tree, ladder, colorings, defeat);

        std::ostringstream text;
        for (std::size_t i = 0 ; i < report.rows.size() ; ++i) {
            auto & row = report.rows[i];
            text << "colouring " << i << ": rung " << chain_text(tree, row.rung) << ", defeated colours";
            for (std::size_t c = 0 ; c < row.defeated.size() ; ++c)
                if (row.defeated[c])
                    text << ' ' << c;
            text << (row.fully_defeated() ? " (fully defeated)" : " (partial)") << '\n';
        }
        text << "fully defeated: " << report.defeated_fraction() << '\n';

        emit(global, defeat_to_json(report), text.str());
        return exit_success;
    }

    // ---- export ----

    auto run_export(const Bundle & bundle, const string & format, const string & out) -> int
    {
        if (format != "dot")
            throw Error{ ErrorKind::InvalidArgument, "unknown export format '" + format + "'" };
        auto tree = bundle.tree();
        auto ladder = bundle.ladder(tree);
        auto dot = to_dot(tree, ladder, bundle.coloring(tree));
        if (out.empty())
            cout << dot;
        else
            write_text_file(out, dot);
        return exit_success;
    }

    auto exit_code_for(ErrorKind kind) -> int
    {
        switch (kind) {
            case ErrorKind::ResourceLimit:
            case ErrorKind::GenerationFailed:
            case ErrorKind::Exhausted:
                return exit_resource_limit;
            default:
                return exit_input_error;
        }
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Trees, ladder systems and the graphs they define" };
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--seed", global.seed, "Seed for every random choice");
    app.add_option("--budget", global.budget, "Search budget for exact colouring");
    app.add_option("--verify-budget", global.verify_budget, "Path budget for brute-force re-verification");
    app.add_flag("--json", global.json, "Machine-readable output");

    GenOptions gen;
    auto gen_cmd = app.add_subcommand("gen", "Generate a tree and ladder system");
    gen_cmd->add_option("--tree", gen.tree_kind, "ts, random-ts or chain")->check(CLI::IsMember({ "ts", "random-ts", "chain" }));
    gen_cmd->add_option("--from-tree", gen.tree_in, "Use an existing tree file")->check(CLI::ExistingFile);
    gen_cmd->add_option("--S", gen.values, "Value set, as 1..6 or 1,3,5");
    gen_cmd->add_option("--depth", gen.depth, "Sequence length bound");
    gen_cmd->add_option("--size", gen.size, "Node count for random-ts");
    gen_cmd->add_option("--length", gen.length, "Node count for chain");
    gen_cmd->add_option("--ladder", gen.ladder_kind, "empty, ordinal, random, transitive, coherent or sparse")
        ->check(CLI::IsMember({ "empty", "ordinal", "random", "transitive", "coherent", "sparse" }));
    gen_cmd->add_option("--nu", gen.nu_file, "Ordinal ladder file for --ladder ordinal")->check(CLI::ExistingFile);
    gen_cmd->add_option("--max-rung", gen.max_rung, "Largest rung");
    gen_cmd->add_option("--density", gen.density, "Probability that a node gets a rung");
    gen_cmd->add_option("--supp-rate", gen.supp_rate, "Probability of a support flag (coherent)");
    gen_cmd->add_option("--require", gen.require, "Predicates to enforce by rejection: transitive,coherent,sparse");
    gen_cmd->add_option("--attempts", gen.attempts, "Rejection sampling attempts");
    gen_cmd->add_option("--palette", gen.palette, "Also emit a random colouring with this many colours");
    gen_cmd->add_option("--out-tree", gen.out_tree, "Tree output file");
    gen_cmd->add_option("--out-ladder", gen.out_ladder, "Ladder output file");
    gen_cmd->add_option("--out-coloring", gen.out_coloring, "Colouring output file");

    Bundle check_bundle;
    string check_which = "all";
    auto check_cmd = app.add_subcommand("check", "Check ladder predicates");
    add_bundle(check_cmd, check_bundle);
    check_cmd->add_option("--predicates", check_which, "transitive,coherent,sparse,clique-chain or all");

    Bundle analyze_bundle;
    AnalyzeOptions analyze;
    auto analyze_cmd = app.add_subcommand("analyze", "Run graph analyses");
    add_bundle(analyze_cmd, analyze_bundle);
    analyze_cmd->add_option("--coloring", analyze_bundle.coloring_file, "Colouring file")->check(CLI::ExistingFile);
    analyze_cmd->add_option("--analyses", analyze.which,
            "chromatic,special-cycle,triangle,h-pattern,separator,connectivity,defeater,mono-clique,vee or all");
    analyze_cmd->add_option("--m", analyze.m, "Pattern size for h-pattern");
    analyze_cmd->add_option("--pair", analyze.pair, "Node pair for separator or connectivity")->expected(2);

    Bundle defeat_bundle;
    DefeatCliOptions defeat;
    auto defeat_cmd = app.add_subcommand("defeat", "Play the builder against colourings");
    add_bundle(defeat_cmd, defeat_bundle);
    defeat_cmd->add_option("--colorings", defeat.colorings_file, "JSON list of colourings")->required()->check(CLI::ExistingFile);
    defeat_cmd->add_option("--mode", defeat.mode, "transitive, coherent or sparse")
        ->check(CLI::IsMember({ "transitive", "coherent", "sparse" }));
    defeat_cmd->add_option("--depth", defeat.depth, "Builder depth k");
    defeat_cmd->add_option("--label", defeat.label, "Label of the new node (default: one above the largest)");
    defeat_cmd->add_option("--nu", defeat_bundle.nu_file, "Ordinal ladder file (coherent mode)")->check(CLI::ExistingFile);

    Bundle export_bundle;
    string format = "dot", out;
    auto export_cmd = app.add_subcommand("export", "Export an instance");
    add_bundle(export_cmd, export_bundle);
    export_cmd->add_option("--coloring", export_bundle.coloring_file, "Colouring for node fills")->check(CLI::ExistingFile);
    export_cmd->add_option("--format", format, "Output format (dot)");
    export_cmd->add_option("--out", out, "Output file (stdout if omitted)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_success : exit_input_error;
    }

    try {
        if (gen_cmd->parsed())
            return run_gen(global, gen);
        if (check_cmd->parsed())
            return run_check(global, check_bundle, check_which);
        if (analyze_cmd->parsed())
            return run_analyze(global, analyze_bundle, analyze);
        if (defeat_cmd->parsed())
            return run_defeat(global, defeat_bundle, defeat);
        if (export_cmd->parsed())
            return run_export(export_bundle, format, out);
    }
    catch (const Error & e) {
        cerr << "treeladder: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    catch (const std::exception & e) {
        cerr << "treeladder: " << e.what() << '\n';
        return exit_input_error;
    }
    return exit_input_error;
}
