#include <catch2/catch_amalgamated.hpp>

#include "basex/pathfinder.hpp"

using namespace basex;

namespace {

MultiGraph k4() {
    return MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

MultiGraph doubled_triangle() {
    return MultiGraph(3, {{0, 1}, {0, 1}, {0, 2}, {0, 2}, {1, 2}, {1, 2}});
}

// Wheel-like graph: center 0 joined to 1..4, plus the outer cycle.
MultiGraph wheel5() {
    return MultiGraph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
}

}  // namespace

TEST_CASE("cocircuit_star is the loop-free vertex star") {
    MultiGraph g = k4();
    REQUIRE(cocircuit_star(g, 0) == EdgeSet::of(6, {0, 1, 2}));
    REQUIRE(cocircuit_star(MultiGraph(3, {{0, 1}, {1, 2}}), 0) == EdgeSet::of(2, {0}));
    REQUIRE(cocircuit_star(MultiGraph(2, {{0, 1}}), 0).size() == 1);
    REQUIRE_THROWS_AS(cocircuit_star(MultiGraph(2, {{0, 0}, {0, 1}}), 0),
                      std::invalid_argument);
}

TEST_CASE("balance leaves a balanced tuple alone") {
    MultiGraph g = doubled_triangle();
    KTuple t{{Base{0, 2}, Base{1, 4}, Base{3, 5}}};
    KPath p = balance(g, t, 0);
    REQUIRE(p.length() == 0);
    REQUIRE(p.back() == t);
}

TEST_CASE("balance resolves the (3,1) profile in one step") {
    MultiGraph g = wheel5();
    KTuple t{{Base{0, 1, 2, 7}, Base{3, 4, 5, 6}}};
    REQUIRE(validate_k_tuple(g, t, 2));
    EdgeSet c = cocircuit_star(g, 0);
    REQUIRE(c_elements(t.bases[0], c).size() + c_elements(t.bases[1], c).size() == 4);

    KPath p = balance(g, t, 0);
    REQUIRE(p.length() == 1);
    // A k=2 double swap replaces both members, so step verification via a
    // shared base does not apply; check tuple validity directly.
    REQUIRE(p.tuples.front() == t);
    for (const KTuple& u : p.tuples) REQUIRE(validate_k_tuple(g, u, 2));
    for (const Base& b : p.back().bases) REQUIRE(c_elements(b, c).size() == 2);
}

TEST_CASE("matching_graph and pair_set record the doubly-meeting members") {
    MultiGraph g = doubled_triangle();
    EdgeSet c = cocircuit_star(g, 0);
    KTuple t{{Base{0, 2}, Base{1, 4}, Base{3, 5}}};
    MatchingGraph m = matching_graph(g, t, c);
    REQUIRE(m.pairs == PairSet{{0, 2}});
    REQUIRE(m.owner == std::vector<int>{0});
    REQUIRE(pair_set(t, c) == PairSet{{0, 2}});

    // Unbalanced input is rejected.
    MultiGraph w = wheel5();
    KTuple bad{{Base{0, 1, 2, 7}, Base{3, 4, 5, 6}}};
    REQUIRE_THROWS_AS(matching_graph(w, bad, cocircuit_star(w, 0)), std::invalid_argument);

    // All-singleton profile gives an empty matching.
    MultiGraph three(2, {{0, 1}, {0, 1}, {0, 1}});
    KTuple t3{{Base{0}, Base{1}, Base{2}}};
    REQUIRE(matching_graph(three, t3, cocircuit_star(three, 0)).pairs.empty());
}

TEST_CASE("enumerate_valid_moves realizes matching rewrites by short walks") {
    MultiGraph three(2, {{0, 1}, {0, 1}, {0, 1}});
    KTuple iso{{Base{0}, Base{1}, Base{2}}};
    REQUIRE(enumerate_valid_moves(three, iso, cocircuit_star(three, 0)).empty());

    MultiGraph g = doubled_triangle();
    EdgeSet c = cocircuit_star(g, 0);
    KTuple t{{Base{0, 2}, Base{1, 4}, Base{3, 5}}};
    auto moves = enumerate_valid_moves(g, t, c);
    REQUIRE_FALSE(moves.empty());
    PairSet h = pair_set(t, c);
    for (const ValidMove& mv : moves) {
        REQUIRE((mv.kind >= 1 && mv.kind <= 6));
        REQUIRE(mv.realization.tuples.front() == t);
        verify_kpath(g, 3, mv.realization, t, mv.realization.back());
        PairSet target = h;
        for (auto p : mv.removed) target.erase(std::find(target.begin(), target.end(), p));
        for (auto p : mv.added) target.push_back(p);
        std::sort(target.begin(), target.end());
        REQUIRE(pair_set(mv.realization.back(), c) == target);
    }
    // With one pair and an isolated vertex, at least one of the two
    // single-pair moves exists for each selection.
    for (int x : {1, 3}) {
        bool any = false;
        for (const ValidMove& mv : moves)
            if ((mv.kind == 1 || mv.kind == 2) && mv.selection[4] == x) any = true;
        REQUIRE(any);
    }
}

TEST_CASE("equalize_matchings drives both tuples to a common pair set") {
    MultiGraph g = doubled_triangle();
    EdgeSet c = cocircuit_star(g, 0);
    auto xg = build_k_base_graph(g, 3);
    for (const auto& va : xg.vertices)
        for (const auto& vb : xg.vertices) {
            KTuple a{va}, b{vb};
            auto [pa, pb] = equalize_matchings(g, a, b, c);
            verify_kpath(g, 3, pa, a, pa.back());
            verify_kpath(g, 3, pb, b, pb.back());
            REQUIRE(pair_set(pa.back(), c) == pair_set(pb.back(), c));
        }
}

TEST_CASE("pull_back reconstructs the parent tuple") {
    MultiGraph g = doubled_triangle();
    DerivedGraphMap ctx = unsubdivide(g, 0, {{0, 2}});
    REQUIRE(ctx.child.edge_count() == 3);
    KTuple child{{Base{0}, Base{1}, Base{2}}};
    KTuple up = pull_back(ctx, child);
    REQUIRE(validate_k_tuple(g, up, 3));
    // Synthetic member gets its two pre-edges; Z-free members get one pool
    // edge each, smallest first.
    REQUIRE(up == KTuple{{Base{0, 2}, Base{1, 4}, Base{3, 5}}});

    // A hint pins the star-edge choice of a Z-free member.
    PullHints hints{{Base{1}, Base{3, 5}}};
    KTuple hinted = pull_back(ctx, child, &hints);
    bool found = false;
    for (const Base& b : hinted.bases)
        if (b == Base{3, 5}) found = true;
    REQUIRE(found);
}

TEST_CASE("find_path_k covers the trivial shapes") {
    MultiGraph three(2, {{0, 1}, {0, 1}, {0, 1}});
    KTuple only{{Base{0}, Base{1}, Base{2}}};
    KPath p = find_path_k(three, only, only, 3);
    REQUIRE(p.length() == 0);

    REQUIRE_THROWS_AS(find_path_k(three, only, only, 2), std::invalid_argument);
    MultiGraph g = doubled_triangle();
    KTuple bad{{Base{0, 2}, Base{1, 4}, Base{3, 4}}};
    REQUIRE_THROWS_AS(find_path_k(g, bad, bad, 3), std::invalid_argument);
}

TEST_CASE("find_path_k joins every vertex pair of small 3-base graphs") {
    std::vector<MultiGraph> graphs = {
        doubled_triangle(),
        MultiGraph(3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {1, 2}, {1, 2}}),
        MultiGraph(4, {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {1, 2}, {1, 2}, {2, 3}, {2, 3}, {2, 3}})};
    for (MultiGraph& g : graphs) {
        auto xg = build_k_base_graph(g, 3);
        REQUIRE(is_connected(xg));
        for (const auto& va : xg.vertices)
            for (const auto& vb : xg.vertices) {
                KTuple a{va}, b{vb};
                KPath p = find_path_k(g, a, b, 3);
                REQUIRE(p.tuples.front() == a);
                REQUIRE(p.back() == b);
                verify_kpath(g, 3, p, a, b);
            }
    }
}

TEST_CASE("find_path_k interleaves disconnected components") {
    MultiGraph g(4, {{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3}, {2, 3}});
    KTuple from{{Base{0, 3}, Base{1, 4}, Base{2, 5}}};
    KTuple to{{Base{0, 4}, Base{1, 5}, Base{2, 3}}};
    KPath p = find_path_k(g, from, to, 3);
    verify_kpath(g, 3, p, from, to);
}

TEST_CASE("find_path_single covers the trivial shapes") {
    MultiGraph two(2, {{0, 1}, {0, 1}});
    OrderedPair p{{0}, {1}}, q{{1}, {0}};
    PairPath path = find_path_single(two, p, q);
    REQUIRE(path.length() == 1);
    verify_pair_path(two, path, p, q);

    PairPath idp = find_path_single(two, p, p);
    REQUIRE(idp.length() == 0);

    MultiGraph g = k4();
    REQUIRE_THROWS_AS(find_path_single(g, OrderedPair{{0, 1, 2}, {3, 4, 4}}, p),
                      std::invalid_argument);
}

TEST_CASE("find_path_single joins every vertex pair on K4") {
    MultiGraph g = k4();
    auto xg = build_single_exchange_graph(g);
    REQUIRE(xg.vertices.size() == 12);
    for (const auto& va : xg.vertices)
        for (const auto& vb : xg.vertices) {
            OrderedPair a{va[0], va[1]}, b{vb[0], vb[1]};
            PairPath p = find_path_single(g, a, b);
            verify_pair_path(g, p, a, b);
        }
}

TEST_CASE("find_path_single interleaves disconnected components") {
    MultiGraph g(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}});
    OrderedPair from{{0, 2}, {1, 3}}, to{{1, 2}, {0, 3}};
    PairPath p = find_path_single(g, from, to);
    verify_pair_path(g, p, from, to);
}

TEST_CASE("path verification rejects tampered paths") {
    MultiGraph g = doubled_triangle();
    auto xg = build_k_base_graph(g, 3);
    KTuple a{xg.vertices[0]}, b{xg.vertices[1]};
    KPath p = find_path_k(g, a, b, 3);
    KPath wrong_end = p;
    REQUIRE_THROWS_AS(verify_kpath(g, 3, wrong_end, a, a), std::logic_error);
    if (p.length() >= 2) {
        KPath gap = p;
        gap.tuples.erase(gap.tuples.begin() + 1);
        REQUIRE_THROWS_AS(verify_kpath(g, 3, gap, a, b), std::logic_error);
    }
}
