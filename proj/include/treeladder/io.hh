/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TREELADDER_GUARD_IO_HH
#define TREELADDER_GUARD_IO_HH 1

#include <treeladder/analysis.hh>
#include <treeladder/builder.hh>
#include <treeladder/ladder.hh>
#include <treeladder/tree.hh>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace treeladder
{
    using Json = nlohmann::json;

    auto tree_to_json(const Tree & tree) -> Json;
    auto tree_from_json(const Json & json) -> Tree;

    auto ladder_to_json(const Tree & tree, const LadderSystem & ladder) -> Json;
    auto ladder_from_json(const Tree & tree, const Json & json) -> LadderSystem;

    auto coloring_to_json(const Coloring & coloring) -> Json;

    /// Colours missing from a partial map are filled with 0 unless `total`.
    auto coloring_from_json(const Json & json, int size, bool total = true) -> Coloring;
    auto colorings_from_json(const Json & json, int size) -> std::vector<Coloring>;

    auto ordinal_to_json(const OrdinalLadder & nu) -> Json;
    auto ordinal_from_json(const Json & json) -> OrdinalLadder;

    auto challenge_to_json(const Challenge & challenge) -> Json;
    auto challenge_from_json(const Tree & tree, const Json & json) -> Challenge;

    auto path_to_json(const Path & path) -> Json;
    auto state_to_json(const BuilderState & state) -> Json;
    auto defeat_to_json(const DefeatReport & report) -> Json;

    /// Throws io or parse errors naming the file.
    auto read_json_file(const std::string & path) -> Json;
    auto write_text_file(const std::string & path, const std::string & text) -> void;

    /// Tree edges dashed, ladder edges solid, fill colour per node when a
    /// colouring is supplied.
    auto to_dot(const Tree & tree, const LadderSystem & ladder, const std::optional<Coloring> & coloring = std::nullopt) -> std::string;
}

#endif
