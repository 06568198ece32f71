/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <treeladder/io.hh>
#include <treeladder/error.hh>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

using std::map;
using std::optional;
using std::string;
using std::vector;

namespace treeladder
{
    namespace
    {
        auto parse_error(const string & what) -> Error
        {
            return Error{ ErrorKind::Parse, what };
        }

        auto expect(bool ok, const string & what) -> void
        {
            if (! ok)
                throw parse_error(what);
        }

        auto id_from_key(const string & key) -> NodeId
        {
            std::size_t used = 0;
            long value = -1;
            try {
                value = std::stol(key, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            expect(used == key.size() && value >= 0, "'" + key + "' is not a node id");
            return static_cast<NodeId>(value);
        }

        auto id_list(const Json & json, const string & what) -> vector<NodeId>
        {
            expect(json.is_array(), what + " must be a list of node ids");
            vector<NodeId> result;
            for (auto & v : json) {
                expect(v.is_number_integer() && v.get<long>() >= 0, what + " holds a non-id entry");
                result.push_back(v.get<NodeId>());
            }
            return result;
        }

        auto label_list(const Json & json, const string & what) -> vector<Label>
        {
            expect(json.is_array(), what + " must be a list of labels");
            vector<Label> result;
            for (auto & v : json) {
                expect(v.is_number_integer() && v.get<long>() >= 0, what + " holds a non-natural entry");
                result.push_back(Label::of(v.get<std::int64_t>()));
            }
            return result;
        }

        auto chains_from(const Tree & tree, const Json & json, const string & what) -> map<NodeId, Chain>
        {
            expect(json.is_object(), what + " must be an object keyed by node id");
            map<NodeId, Chain> result;
            for (auto & [key, value] : json.items()) {
                NodeId t = id_from_key(key);
                expect(tree.contains(t), what + " names node " + key + " outside the tree");
                auto chain = id_list(value, what);
                for (auto c : chain)
                    expect(tree.contains(c), what + " names node " + std::to_string(c) + " outside the tree");
                result.emplace(t, std::move(chain));
            }
            return result;
        }

        auto label_json(Label label) -> Json
        {
            return label.is_bottom() ? Json(nullptr) : Json(label.value());
        }
    }

    auto tree_to_json(const Tree & tree) -> Json
    {
        Json nodes = Json::array();
        for (NodeId v = 0 ; v < tree.size() ; ++v) {
            auto p = tree.parent(v);
            nodes.push_back({ { "id", v }, { "parent", p ? Json(*p) : Json(nullptr) }, { "label", label_json(tree.label(v)) } });
        }
        return Json{ { "nodes", nodes } };
    }

    auto tree_from_json(const Json & json) -> Tree
    {
        expect(json.is_object() && json.contains("nodes") && json["nodes"].is_array(), "tree file needs a \"nodes\" list");
        auto & nodes = json["nodes"];
        vector<optional<NodeId>> parents(nodes.size());
        vector<Label> labels(nodes.size());
        vector<char> seen(nodes.size(), 0);

        for (auto & node : nodes) {
            expect(node.is_object() && node.contains("id") && node["id"].is_number_integer(), "tree node without an integer id");
            long id = node["id"].get<long>();
            expect(id >= 0 && id < static_cast<long>(nodes.size()), "tree node ids must be contiguous from 0");
            expect(! seen[id], "tree node id " + std::to_string(id) + " repeats");
            seen[id] = 1;

            auto parent = node.value("parent", Json(nullptr));
            if (! parent.is_null()) {
                expect(parent.is_number_integer(), "parent of node " + std::to_string(id) + " is not an id");
                parents[id] = parent.get<NodeId>();
            }
            auto label = node.value("label", Json(nullptr));
            if (! label.is_null()) {
                expect(label.is_number_integer() && label.get<long>() >= 0, "label of node " + std::to_string(id) + " is not natural");
                labels[id] = Label::of(label.get<std::int64_t>());
            }
        }
        return Tree::from_parents(std::move(parents), std::move(labels));
    }

    auto ladder_to_json(const Tree & tree, const LadderSystem & ladder) -> Json
    {
        Json rungs = Json::object();
        for (NodeId t = 0 ; t < tree.size() ; ++t)
            if (! ladder.rungs[t].empty())
                rungs[std::to_string(t)] = ladder.rungs[t];

        Json result{ { "rungs", rungs }, { "supp", vector<NodeId>(ladder.supp.begin(), ladder.supp.end()) } };
        if (ladder.eta) {
            Json eta = Json::object();
            for (NodeId t = 0 ; t < tree.size() ; ++t)
                if (ladder.eta->chains[t] != Chain{ t })
                    eta[std::to_string(t)] = ladder.eta->chains[t];
            result["eta"] = eta;
        }
        return result;
    }

    auto ladder_from_json(const Tree & tree, const Json & json) -> LadderSystem
    {
        expect(json.is_object(), "ladder file must be an object");
        auto rungs = chains_from(tree, json.value("rungs", Json::object()), "rungs");

        NodeSet supp;
        if (json.contains("supp"))
            for (auto t : id_list(json["supp"], "supp")) {
                expect(tree.contains(t), "supp names node " + std::to_string(t) + " outside the tree");
                supp.insert(t);
            }

        optional<map<NodeId, Chain>> eta;
        if (json.contains("eta") && ! json["eta"].is_null())
            eta = chains_from(tree, json["eta"], "eta");

        return make_ladder(tree, std::move(rungs), std::move(supp), std::move(eta));
    }

    auto coloring_to_json(const Coloring & coloring) -> Json
    {
        Json result = Json::object();
        for (NodeId v = 0 ; v < coloring.size() ; ++v)
            result[std::to_string(v)] = coloring[v];
        return result;
    }

    auto coloring_from_json(const Json & json, int size, bool total) -> Coloring
    {
        expect(json.is_object(), "a colouring must be an object keyed by node id");
        vector<int> colors(size, -1);
        for (auto & [key, value] : json.items()) {
            NodeId v = id_from_key(key);
            expect(v < size, "colouring names node " + key + " outside the tree");
            expect(value.is_number_integer() && value.get<long>() >= 0, "colour of node " + key + " is not natural");
            colors[v] = value.get<int>();
        }
        for (NodeId v = 0 ; v < size ; ++v) {
            if (colors[v] == -1) {
                expect(! total, "colouring misses node " + std::to_string(v));
                colors[v] = 0;
            }
        }
        return Coloring::from_colors(std::move(colors));
    }

    auto colorings_from_json(const Json & json, int size) -> vector<Coloring>
    {
        expect(json.is_array(), "a colourings file must be a list of colourings");
        vector<Coloring> result;
        for (auto & c : json)
            result.push_back(coloring_from_json(c, size));
        return result;
    }

    auto ordinal_to_json(const OrdinalLadder & nu) -> Json
    {
        Json entries = Json::object();
        for (auto & [delta, levels] : nu.nu) {
            Json list = Json::array();
            for (auto e : levels)
                list.push_back(e.value());
            entries[std::to_string(delta.value())] = list;
        }
        Json limit = Json::array();
        for (auto l : nu.limit)
            limit.push_back(l.value());
        return Json{ { "nu", entries }, { "limit", limit } };
    }

    auto ordinal_from_json(const Json & json) -> OrdinalLadder
    {
        expect(json.is_object(), "ordinal ladder file must be an object");
        OrdinalLadder result;
        auto entries = json.value("nu", Json::object());
        expect(entries.is_object(), "\"nu\" must be an object keyed by label");
        for (auto & [key, value] : entries.items()) {
            Label delta = Label::of(id_from_key(key));
            auto levels = label_list(value, "nu entry " + key);
            for (auto e : levels)
                expect(e < delta, "nu entry " + key + " holds " + to_string(e) + ", not below it");
            result.nu.emplace(delta, std::move(levels));
        }
        if (json.contains("limit"))
            for (auto l : label_list(json["limit"], "limit"))
                result.limit.insert(l);
        else
            for (auto & [delta, _] : result.nu)
                result.limit.insert(delta);
        return result;
    }

    auto challenge_to_json(const Challenge & challenge) -> Json
    {
        Json f = Json::object();
        for (auto v : challenge.a)
            f[std::to_string(v)] = challenge.f[v];
        Json result{ { "A", vector<NodeId>(challenge.a.begin(), challenge.a.end()) }, { "f", f } };
        if (challenge.t0)
            result["t0"] = *challenge.t0;
        if (! challenge.chain.empty()) {
            Json chain = Json::array();
            for (auto & level : challenge.chain)
                chain.push_back(vector<NodeId>(level.begin(), level.end()));
            result["chain"] = chain;
        }
        return result;
    }

    auto challenge_from_json(const Tree & tree, const Json & json) -> Challenge
    {
        expect(json.is_object(), "challenge file must be an object");
        Challenge result;
        result.a = NodeSet{ id_list(json.value("A", Json::array()), "A") };
        result.f = coloring_from_json(json.value("f", Json::object()), tree.size(), false);
        for (auto v : result.a)
            expect(json.contains("f") && json["f"].contains(std::to_string(v)), "f misses node " + std::to_string(v) + " of A");
        if (json.contains("t0") && ! json["t0"].is_null()) {
            expect(json["t0"].is_number_integer(), "t0 must be a node id");
            result.t0 = json["t0"].get<NodeId>();
        }
        if (json.contains("chain")) {
            expect(json["chain"].is_array(), "chain must be a list of node lists");
            for (auto & level : json["chain"])
                result.chain.push_back(NodeSet{ id_list(level, "chain level") });
        }
        return result;
    }

    auto path_to_json(const Path & path) -> Json
    {
        return Json(path);
    }

    auto state_to_json(const BuilderState & state) -> Json
    {
        Json markers = Json::array();
        for (auto m : state.markers)
            markers.push_back(label_json(m));
        return Json{ { "k", state.k }, { "psi", state.psi }, { "phi", state.phi }, { "r_sizes", state.r_sizes },
            { "schedule", state.schedule }, { "markers", markers }, { "x_xi", state.x_xi } };
    }

    auto defeat_to_json(const DefeatReport & report) -> Json
    {
        Json rows = Json::array();
        for (auto & row : report.rows) {
            Json entry{ { "t_xi", row.t_xi }, { "rung", row.rung }, { "defeated", row.defeated },
                { "fully_defeated", row.fully_defeated() }, { "r_sizes", row.state.r_sizes } };
            entry["t0"] = row.t0 ? Json(*row.t0) : Json(nullptr);
            rows.push_back(entry);
        }
        return Json{ { "rows", rows }, { "defeated_fraction", report.defeated_fraction() } };
    }

    auto read_json_file(const string & path) -> Json
    {
        std::ifstream in(path);
        if (! in)
            throw Error{ ErrorKind::Io, "cannot open '" + path + "'" };
        try {
            return Json::parse(in);
        }
        catch (const Json::parse_error & e) {
            throw Error{ ErrorKind::Parse, path + ": " + e.what() };
        }
    }

    auto write_text_file(const string & path, const string & text) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw Error{ ErrorKind::Io, "cannot write '" + path + "'" };
        out << text;
        if (! out)
            throw Error{ ErrorKind::Io, "write to '" + path + "' failed" };
    }

    auto to_dot(const Tree & tree, const LadderSystem & ladder, const optional<Coloring> & coloring) -> string
    {
        validate(tree, ladder);
        if (coloring && coloring->size() != tree.size())
            throw Error{ ErrorKind::InvalidArgument, "colouring size does not match the tree" };

        std::ostringstream out;
        out << "graph treeladder {\n";
        out << "    node [shape=ellipse];\n";
        for (NodeId v = 0 ; v < tree.size() ; ++v) {
            out << "    n" << v << " [label=\"" << v << ": " << to_string(tree.label(v)) << "\"";
            if (coloring) {
                int palette = std::max(coloring->palette, 1);
                char hsv[32];
                std::snprintf(hsv, sizeof(hsv), "%.3f 0.45 0.95", static_cast<double>((*coloring)[v]) / palette);
                out << ", style=filled, fillcolor=\"" << hsv << "\"";
            }
            out << "];\n";
        }
        for (NodeId v = 1 ; v < tree.size() ; ++v)
            out << "    n" << *tree.parent(v) << " -- n" << v << " [style=dashed];\n";
        for (NodeId t = 0 ; t < tree.size() ; ++t)
            for (auto s : ladder.rungs[t])
                out << "    n" << s << " -- n" << t << " [style=solid];\n";
        out << "}\n";
        return out.str();
    }
}
