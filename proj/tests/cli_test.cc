/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <doctest.h>

#include "support.hh"

#include <treeladder/io.hh>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

using namespace treeladder;
namespace fs = std::filesystem;

namespace
{
    struct Run
    {
        int status;
        std::string out;
    };

    auto run(const std::string & args) -> Run
    {
        std::string command = std::string{ TREELADDER_CLI } + " " + args + " 2>/dev/null";
        FILE * pipe = ::popen(command.c_str(), "r");
        REQUIRE(pipe);
        std::string out;
        char buffer[4096];
        while (auto n = std::fread(buffer, 1, sizeof(buffer), pipe))
            out.append(buffer, n);
        int status = ::pclose(pipe);
        return Run{ WIFEXITED(status) ? WEXITSTATUS(status) : -1, out };
    }

    struct Workspace
    {
        fs::path dir;

        Workspace() : dir(fs::temp_directory_path() / ("treeladder-cli-" + std::to_string(::getpid())))
        {
            fs::create_directories(dir);
            auto t = test::tree_a();
            write("tree.json", tree_to_json(t).dump());
            write("ladder_a.json", ladder_to_json(t, test::ladder_a(t)).dump());
            write("ladder_b.json", ladder_to_json(t, test::ladder_b(t)).dump());
            write("constant.json", Json::array({ coloring_to_json(Coloring::constant(t.size())) }).dump());
            write("broken.json", "{ not json");
        }

        ~Workspace()
        {
            fs::remove_all(dir);
        }

        auto write(const std::string & name, const std::string & text) -> void
        {
            std::ofstream(dir / name) << text;
        }

        auto path(const std::string & name) const -> std::string
        {
            return (dir / name).string();
        }
    };
}

TEST_CASE("cli check")
{
    Workspace w;
    auto base = "check --tree " + w.path("tree.json") + " --ladder " + w.path("ladder_a.json");

    auto ok = run(base + " --predicates transitive,coherent");
    CHECK(ok.status == 0);

    auto sparse = run("--json " + base + " --predicates sparse");
    CHECK(sparse.status == 1);
    auto report = Json::parse(sparse.out);
    CHECK(report[0]["verdict"] == false);
    CHECK(report[0]["witness"]["t"] == 7);
    CHECK(report[0]["witness"]["r"] == 1);
    CHECK(report[0]["witness"]["s"] == 4);

    CHECK(run("check --tree " + w.path("tree.json")).status == 0);
    CHECK(run("check --tree " + w.path("broken.json")).status == 2);
    CHECK(run(base + " --predicates dense").status == 2);
}

TEST_CASE("cli analyze")
{
    Workspace w;
    auto a = run("--json analyze --tree " + w.path("tree.json") + " --ladder " + w.path("ladder_a.json") + " --analyses chromatic");
    CHECK(a.status == 0);
    CHECK(Json::parse(a.out)[0]["verdict"] == 3);

    auto b = run("--json analyze --tree " + w.path("tree.json") + " --ladder " + w.path("ladder_b.json") + " --analyses special-cycle");
    CHECK(b.status == 0);
    CHECK(Json::parse(b.out)[0]["verdict"] == false);

    auto edgeless = run("analyze --tree " + w.path("tree.json") + " --analyses chromatic,triangle");
    CHECK(edgeless.status == 0);
    CHECK(edgeless.out.find("chromatic: 1") != std::string::npos);

    auto tight = run("--budget 1 analyze --tree " + w.path("tree.json") + " --ladder " + w.path("ladder_a.json") + " --analyses chromatic");
    CHECK((tight.status == 0 || tight.status == 3));
}

TEST_CASE("cli gen")
{
    Workspace w;
    auto ts = run("--json gen --tree ts --S 1..3 --depth 3 --ladder empty");
    CHECK(ts.status == 0);
    auto bundle = Json::parse(ts.out);
    CHECK(bundle["tree"]["nodes"].size() == 8);
    CHECK(bundle["ladder"]["rungs"].empty());

    auto sparse = run("--seed 7 gen --tree ts --S 1..4 --depth 3 --ladder random --require sparse --out-tree "
            + w.path("g_tree.json") + " --out-ladder " + w.path("g_ladder.json"));
    CHECK(sparse.status == 0);
    CHECK(run("check --tree " + w.path("g_tree.json") + " --ladder " + w.path("g_ladder.json") + " --predicates sparse").status == 0);

    CHECK(run("gen --tree ts --S 1..3 --depth 3 --ladder random").status == 2);
    CHECK(run("--seed 1 gen --tree ts --S 1..3 --depth 3 --ladder random --max-rung 2 --density 1 --require sparse --attempts 0").status == 3);
}

TEST_CASE("cli defeat and export")
{
    Workspace w;
    auto d = run("--json defeat --tree " + w.path("tree.json") + " --colorings " + w.path("constant.json"));
    CHECK(d.status == 0);
    auto report = Json::parse(d.out);
    CHECK(report["rows"].size() == 1);

    auto dot = run("export --tree " + w.path("tree.json") + " --ladder " + w.path("ladder_a.json") + " --format dot");
    CHECK(dot.status == 0);
    CHECK(dot.out.rfind("graph treeladder {", 0) == 0);

    CHECK(run("export --tree " + w.path("tree.json") + " --format svg").status == 2);
    CHECK(run("frobnicate").status == 2);
}
