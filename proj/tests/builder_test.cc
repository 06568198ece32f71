/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <doctest.h>

#include "oracles.hh"
#include "support.hh"

#include <treeladder/builder.hh>
#include <treeladder/error.hh>
#include <treeladder/generate.hh>
#include <treeladder/kernels.hh>

using namespace treeladder;
using treeladder::test::node;

namespace
{
    auto error_kind(auto && f) -> std::optional<ErrorKind>
    {
        try {
            f();
        }
        catch (const Error & e) {
            return e.kind();
        }
        return std::nullopt;
    }

    auto shallow(const Tree & t, int depth) -> NodeSet
    {
        std::vector<NodeId> result;
        for (NodeId v = 0 ; v < t.size() ; ++v)
            if (t.depth(v) <= depth)
                result.push_back(v);
        return NodeSet{ result };
    }

    auto deep_base() -> Tree
    {
        std::vector<std::int64_t> values{ 1, 2, 3, 4, 5, 6 };
        return generate_ts_tree(values, 5);
    }

    auto non_root(const Tree & t) -> NodeSet
    {
        std::vector<NodeId> result;
        for (NodeId v = 1 ; v < t.size() ; ++v)
            result.push_back(v);
        return NodeSet{ result };
    }
}

TEST_CASE("transitive builder against a constant colouring")
{
    auto t = test::base_42();
    auto c = LadderSystem::empty(t);
    Challenge ch{ shallow(t, 2), Coloring::constant(t.size()), std::nullopt, { } };
    auto built = extend_transitive(t, c, ch, 1, Label::of(7));
    CHECK(built.tree.size() == 43);
    CHECK(built.ladder.rungs[built.t_xi].size() == 1);
    CHECK(ch.f[built.ladder.rungs[built.t_xi][0]] == 0);
    CHECK(oracle::audit({ BuilderMode::Transitive, t, c, ch, nullptr, Label::of(7) }, built) == "");
}

TEST_CASE("transitive builder with a rainbow colouring")
{
    auto t = test::tree_a();
    auto c = LadderSystem::empty(t);
    for (int shift = 0 ; shift < 8 ; ++shift) {
        std::vector<int> colours;
        for (NodeId v = 0 ; v < t.size() ; ++v)
            colours.push_back((v + shift) % 8);
        Challenge ch{ non_root(t), Coloring::from_colors(colours), std::nullopt, { } };
        auto built = extend_transitive(t, c, ch, 1, Label::of(4));
        NodeId start = built.state.psi.at("");
        bool any = false;
        for (auto s : ch.a)
            any = any || (t.leq(start, s) && ch.f[s] == 0);
        CHECK(built.ladder.rungs[built.t_xi].empty() == ! any);
        CHECK(oracle::audit({ BuilderMode::Transitive, t, c, ch, nullptr, Label::of(4) }, built) == "");
    }
}

TEST_CASE("depth zero builds add an empty rung")
{
    auto t = test::tree_a();
    auto c = test::ladder_a(t);
    Challenge ch{ non_root(t), Coloring::constant(t.size()), std::nullopt, { } };
    auto built = extend_transitive(t, c, ch, 0, Label::of(4));
    CHECK(built.ladder.rungs[built.t_xi].empty());
    CHECK(is_transitive(built.tree, built.ladder));
}

TEST_CASE("builder argument errors")
{
    auto t = test::tree_a();
    auto c = LadderSystem::empty(t);
    Challenge ch{ non_root(t), Coloring::constant(t.size()), std::nullopt, { } };
    CHECK(error_kind([&] { extend_transitive(t, c, ch, 1, Label::of(2)); }) == ErrorKind::InvalidArgument);
    CHECK(error_kind([&] { extend_transitive(t, c, Challenge{ }, 1, Label::of(4)); }) == ErrorKind::InvalidChallenge);
    CHECK(error_kind([&] { extend_transitive(t, c, ch, -1, Label::of(4)); }) == ErrorKind::InvalidArgument);
    CHECK(error_kind([&] { extend_transitive(t, c, Challenge{ NodeSet{ }, Coloring::constant(t.size()), std::nullopt, { } }, 1,
                    Label::of(4)); }) == ErrorKind::InvalidChallenge);

    auto broken = make_ladder(t, { { node(t, { 1, 2, 3 }), { node(t, { 1 }), node(t, { 1, 2 }) } } });
    CHECK(error_kind([&] { extend_transitive(t, broken, ch, 1, Label::of(4)); }) == ErrorKind::PreconditionViolation);

    // A holds nodes labelled 3, which must stay below the new label
    CHECK(error_kind([&] { extend_transitive(t, c, ch, 1, Label::of(3)); }) == ErrorKind::InvalidChallenge);
}

TEST_CASE("coherent builder with singleton ladder entries")
{
    auto t = test::base_42();
    auto c = LadderSystem::empty(t);
    OrdinalLadder nu;
    nu.limit = { Label::of(7) };
    nu.nu[Label::of(7)] = { Label::of(3) };

    std::vector<NodeId> low;
    for (NodeId v = 1 ; v < t.size() ; ++v)
        if (t.label(v) <= Label::of(3))
            low.push_back(v);
    Challenge ch{ non_root(t), Coloring::constant(t.size()), std::nullopt, { NodeSet{ low }, non_root(t) } };
    auto built = extend_coherent(t, c, ch, nu, 2, Label::of(7));
    CHECK(is_coherent(built.tree, built.ladder));
    CHECK(is_transitive(built.tree, built.ladder));
    CHECK(built.ladder.in_supp(built.t_xi) == ! built.ladder.rungs[built.t_xi].empty());
    CHECK(oracle::audit({ BuilderMode::Coherent, t, c, ch, &nu, Label::of(7) }, built) == "");

    OrdinalLadder missing;
    CHECK(error_kind([&] { extend_coherent(t, c, ch, missing, 2, Label::of(7)); }) == ErrorKind::MissingLadderEntry);

    Challenge short_chain{ non_root(t), Coloring::constant(t.size()), std::nullopt, { NodeSet{ low } } };
    CHECK(error_kind([&] { extend_coherent(t, c, short_chain, nu, 2, Label::of(7)); }) == ErrorKind::InvalidChallenge);

    Challenge shrinking{ non_root(t), Coloring::constant(t.size()), std::nullopt, { non_root(t), NodeSet{ low } } };
    CHECK(error_kind([&] { extend_coherent(t, c, shrinking, nu, 2, Label::of(7)); }) == ErrorKind::InvalidChallenge);
}

TEST_CASE("coherent builder skips a level whose colour is missing")
{
    auto t = test::base_42();
    auto c = LadderSystem::empty(t);
    OrdinalLadder nu;
    nu.limit = { Label::of(7) };
    nu.nu[Label::of(7)] = { Label::of(2) };

    // level 1 asks for colour 1, which nothing carries
    Coloring f = Coloring::constant(t.size());
    f.palette = 2;
    Challenge ch{ non_root(t), f, std::nullopt, { non_root(t), non_root(t) } };
    auto built = extend_coherent(t, c, ch, nu, 2, Label::of(7));
    CHECK(built.state.schedule == std::vector<int>{ 0, 1 });
    CHECK(! built.state.phi.contains(built.state.x_xi.substr(0, 1)));
    CHECK(built.ladder.rungs[built.t_xi].size() == 1);
    CHECK(oracle::audit({ BuilderMode::Coherent, t, c, ch, &nu, Label::of(7) }, built) == "");
}

TEST_CASE("sparse builder on an edgeless start")
{
    auto t = deep_base();
    auto c = LadderSystem::empty(t);
    Rng rng(41);
    for (int round = 0 ; round < 10 ; ++round) {
        auto f = random_coloring(t.size(), 2, rng);
        Challenge ch{ shallow(t, 5), f, t.root(), { } };
        auto built = extend_sparse(t, c, ch, 2, Label::of(7));

        // with no edges, not covered at gamma means label above gamma
        for (auto & [x, phi] : built.state.phi) {
            NodeId base = built.state.psi.at(x);
            std::vector<NodeId> closed;
            for (auto s : ch.a)
                if (t.leq(base, s) && f[s] == built.state.schedule[x.size()] && t.label(s) > t.label(base))
                    closed.push_back(s);
            CHECK(oracle::canonical_first(t, closed) == phi);
        }
        CHECK(is_sparse(built.tree, built.ladder, graph_of(built.tree, built.ladder)));
        CHECK(! find_special_cycle(built.tree, graph_of(built.tree, built.ladder).graph));
        CHECK(oracle::audit({ BuilderMode::Sparse, t, c, ch, nullptr, Label::of(7) }, built) == "");
    }
}

TEST_CASE("sparse builder errors")
{
    auto t = test::tree_a();
    Challenge ch{ non_root(t), Coloring::constant(t.size()), std::nullopt, { } };
    CHECK(error_kind([&] { extend_sparse(t, LadderSystem::empty(t), ch, 1, Label::of(4)); }) == ErrorKind::InvalidChallenge);
    ch.t0 = t.root();
    CHECK(error_kind([&] { extend_sparse(t, LadderSystem::empty(t), ch, 1, Label::of(4)); }) == ErrorKind::InvalidChallenge);
    ch.t0 = node(t, { 1 });
    CHECK(error_kind([&] { extend_sparse(t, test::ladder_a(t), ch, 1, Label::of(4)); }) == ErrorKind::PreconditionViolation);
    CHECK_NOTHROW(extend_sparse(t, LadderSystem::empty(t), ch, 1, Label::of(4)));
}

TEST_CASE("defeating a constant colouring")
{
    auto t = test::base_42();
    DefeatOptions options;
    options.k = 1;
    options.new_label = Label::of(7);
    auto report = defeat_colorings(t, LadderSystem::empty(t), { Coloring::constant(t.size()) }, options);
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].defeated == std::vector<bool>{ true });
    CHECK(report.defeated_fraction() == 1.0);

    CHECK(defeat_colorings(t, LadderSystem::empty(t), { }, options).rows.empty());
}

TEST_CASE("an unused colour stays undefeated")
{
    auto t = test::base_42();
    DefeatOptions options;
    options.k = 1;
    options.new_label = Label::of(7);
    Coloring f = Coloring::constant(t.size());
    f.palette = 2;
    auto row = defeat_one(t, LadderSystem::empty(t), f, options);
    CHECK(row.defeated == std::vector<bool>{ true, false });
    CHECK(! row.fully_defeated());
}

TEST_CASE("defeat verdicts match recomputed R sets")
{
    auto t = deep_base();
    auto c = LadderSystem::empty(t);
    Rng rng(43);
    int played = 0;
    for (auto mode : { BuilderMode::Transitive, BuilderMode::Sparse }) {
        DefeatOptions options;
        options.mode = mode;
        options.k = 3;
        options.new_label = Label::of(7);
        for (int i = 0 ; i < 10 ; ++i) {
            auto f = random_coloring(t.size(), 3, rng);
            std::optional<DefeatRow> row;
            try {
                row = defeat_one(t, c, f, options);
            }
            catch (const Error & e) {
                // a colouring may leave every branch without room to split
                CHECK(e.kind() == ErrorKind::InvalidChallenge);
                continue;
            }
            ++played;
            auto ch = defeat_challenge(t, c, f, options);
            oracle::Build b{ mode, t, c, ch, nullptr, options.new_label };
            CHECK(row->defeated == oracle::defeatable(b, row->state, f.palette));
        }
    }
    CHECK(played >= 5);
}

TEST_CASE("deciders for the sparse builder")
{
    auto t = test::base_42();
    auto c = LadderSystem::empty(t);
    auto f = Coloring::constant(t.size());
    auto decision = decide_coloring(t, Graph(t.size()), f, t.max_label());
    REQUIRE(decision.t0);
    Challenge ch{ non_root(t), f, decision.t0, { } };
    ch.a.insert(*decision.t0);
    CHECK_NOTHROW(extend_sparse(t, c, ch, 1, Label::of(7), true));
}

TEST_CASE("builder mode names")
{
    for (auto mode : { BuilderMode::Transitive, BuilderMode::Coherent, BuilderMode::Sparse })
        CHECK(parse_builder_mode(to_string(mode)) == mode);
    CHECK_THROWS_AS(parse_builder_mode("dense"), Error);
}
