#include <catch2/catch.hpp>

#include "cliquesep/map_graph.hpp"

#include <cmath>

using namespace cliquesep;

namespace {

MapInstance square_block(int k) {
    MapInstance inst;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            PolygonalRegion r;
            r.boundary = {Pt(i, j), Pt(i + 1, j), Pt(i + 1, j + 1), Pt(i, j + 1)};
            r.id = static_cast<int>(inst.regions.size());
            inst.regions.push_back(r);
        }
    return inst;
}

// n wedges sharing only the center point: the map graph is K_n
MapInstance pinwheel(int n) {
    MapInstance inst;
    for (int i = 0; i < n; ++i) {
        double a0 = 2 * 3.14159265358979 * i / n;
        double a1 = 2 * 3.14159265358979 * (i + 0.72) / n;
        auto snap = [](double x) { return rat_of(std::lround(1000 * x), 100); };
        PolygonalRegion r;
        r.boundary = {Pt(0, 0), Pt(snap(std::cos(a0)), snap(std::sin(a0))),
                      Pt(snap(std::cos(a1)), snap(std::sin(a1)))};
        r.normalize();
        r.id = i;
        inst.regions.push_back(r);
    }
    return inst;
}

}  // namespace

TEST_CASE("two squares sharing an edge are adjacent") {
    MapInstance inst;
    PolygonalRegion a, b;
    a.boundary = {Pt(0, 0), Pt(1, 0), Pt(1, 1), Pt(0, 1)};
    b.boundary = {Pt(1, 0), Pt(2, 0), Pt(2, 1), Pt(1, 1)};
    a.id = 0;
    b.id = 1;
    inst.regions = {a, b};
    Graph g = build_map_graph(inst);
    CHECK(g.num_edges() == 1);
    CHECK(g.has_edge(0, 1));
}

TEST_CASE("2x2 block meets at a point and forms K4") {
    Graph g = build_map_graph(square_block(2));
    CHECK(g.n == 4);
    CHECK(g.num_edges() == 6);
}

TEST_CASE("3x3 block has 20 edges") {
    Graph g = build_map_graph(square_block(3));
    CHECK(g.n == 9);
    // brute-force oracle: count pairs whose boundaries share a point
    long expect = 0;
    const auto& rs = square_block(3).regions;
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = i + 1; j < rs.size(); ++j) {
            bool touch = false;
            for (std::size_t e1 = 0; e1 < 4 && !touch; ++e1)
                for (std::size_t e2 = 0; e2 < 4 && !touch; ++e2) {
                    auto is = seg_intersect(rs[i].boundary[e1], rs[i].boundary[(e1 + 1) % 4],
                                            rs[j].boundary[e2], rs[j].boundary[(e2 + 1) % 4]);
                    touch = is.kind != SegIntersection::None;
                }
            if (touch) ++expect;
        }
    CHECK(expect == 20);
    CHECK(g.num_edges() == expect);
}

TEST_CASE("overlapping interiors are rejected") {
    MapInstance inst;
    PolygonalRegion a, b;
    a.boundary = {Pt(0, 0), Pt(2, 0), Pt(2, 2), Pt(0, 2)};
    b.boundary = {Pt(1, 1), Pt(3, 1), Pt(3, 3), Pt(1, 3)};
    a.id = 0;
    b.id = 1;
    inst.regions = {a, b};
    CHECK_THROWS(build_map_graph(inst));
}

TEST_CASE("witness graph of two edge-adjacent squares") {
    MapInstance inst;
    PolygonalRegion a, b;
    a.boundary = {Pt(0, 0), Pt(1, 0), Pt(1, 1), Pt(0, 1)};
    b.boundary = {Pt(1, 0), Pt(2, 0), Pt(2, 1), Pt(1, 1)};
    a.id = 0;
    b.id = 1;
    inst.regions = {a, b};
    WitnessGraph wg = build_witness_graph(inst);
    // P = 2, Q = 3 (two shared corners + one mid-edge witness), arcs = 6
    CHECK(wg.num_witnesses == 3);
    CHECK(wg.h.num_nodes() == 5);
    CHECK(wg.h.num_live_edges() == 6);
}

TEST_CASE("witness graph of the 2x2 block has a degree-4 witness") {
    WitnessGraph wg = build_witness_graph(square_block(2));
    bool found = false;
    for (int v = 0; v < wg.h.num_nodes(); ++v) {
        if (v < static_cast<int>(wg.node_region.size()) && wg.node_region[v] >= 0) continue;
        // witness root degree counts its gadget children; the central vertex
        // has four incident regions
        ;
    }
    for (const auto& gad : wg.gadgets)
        if (gad.tree.degree == 4) found = true;
    CHECK(found);
}

TEST_CASE("single region witness graph is a lone node") {
    MapInstance inst = square_block(1);
    WitnessGraph wg = build_witness_graph(inst);
    CHECK(wg.h.num_nodes() == 1);
    CHECK(wg.num_witnesses == 0);
}

TEST_CASE("gadget shapes for small degrees") {
    GadgetTree t2 = build_gadget({10, 11});
    CHECK(t2.max_level == 1);
    CHECK(t2.num_nodes() == 3);

    GadgetTree t3 = build_gadget({1, 2, 3});
    CHECK(t3.max_level == 1);
    CHECK(t3.levels[1].size() == 3);

    GadgetTree t7 = build_gadget({0, 1, 2, 3, 4, 5, 6});
    CHECK(t7.max_level == 3);
    CHECK(3 * (1 << (t7.max_level - 1)) >= 7);
    CHECK_THROWS(build_gadget({5}));
}

TEST_CASE("gadget trees satisfy both height invariants up to degree 256") {
    for (int deg = 2; deg <= 256; ++deg) {
        std::vector<int> nbrs(deg);
        std::iota(nbrs.begin(), nbrs.end(), 0);
        GadgetTree t = build_gadget(nbrs);
        REQUIRE(static_cast<int>(t.leaf_region.size()) == deg);
        // all leaves at max_level
        CHECK(static_cast<int>(t.levels[t.max_level].size()) == deg);
        for (int v = 0; v < t.num_nodes(); ++v) {
            int h = t.height(v);
            if (h == 0) continue;
            long cap = 3L * (1L << (h - 1));
            CHECK(static_cast<long>(t.leaves_below(v).size()) <= cap);
            CHECK(t.tree_dist_to_nearest_leaf(v) >= h);
        }
        // root has at most 3 children, internals at most 2
        std::vector<int> child_count(t.num_nodes(), 0);
        for (int v = 1; v < t.num_nodes(); ++v) ++child_count[t.parent[v]];
        CHECK(child_count[0] <= 3);
        for (int v = 1; v < t.num_nodes(); ++v) CHECK(child_count[v] <= 2);
    }
}

TEST_CASE("map separator of a single region") {
    MapInstance inst = square_block(1);
    CliqueSeparator s = map_separator(inst);
    REQUIRE(s.cliques.size() == 1);
    CHECK(s.cliques[0] == std::vector<int>{0});
    CHECK(s.side_a.empty());
    CHECK(s.side_b.empty());
}

TEST_CASE("map separators of square blocks are valid and light") {
    for (int k : {5, 8, 11, 15}) {
        MapInstance inst = square_block(k);
        Graph g = build_map_graph(inst);
        CliqueSeparator s = map_separator(inst);
        VerifyReport rep = verify_separator(g, s);
        for (const auto& v : rep.violations) UNSCOPED_INFO(v);
        CHECK(rep.ok);
        CHECK(s.weight() <= 10.0 * k);
    }
}

TEST_CASE("pinwheel instance collapses into few cliques") {
    for (int n : {6, 12, 20}) {
        MapInstance inst = pinwheel(n);
        Graph g = build_map_graph(inst);
        REQUIRE(g.num_edges() == static_cast<long>(n) * (n - 1) / 2);  // K_n
        CliqueSeparator s = map_separator(inst);
        VerifyReport rep = verify_separator(g, s);
        for (const auto& v : rep.violations) UNSCOPED_INFO(v);
        CHECK(rep.ok);
        // K_n admits no split: one side must be empty and the weight stays at
        // the one-clique level
        CHECK((s.side_a.empty() || s.side_b.empty()));
        CHECK(s.weight() <= std::log2(n + 1.0) + 1e-9);
    }
}

TEST_CASE("disconnected instances balance by component packing") {
    // 9 far-apart unit squares: no separator needed at all
    MapInstance inst;
    for (int i = 0; i < 9; ++i) {
        PolygonalRegion r;
        r.boundary = {Pt(3 * i, 0), Pt(3 * i + 1, 0), Pt(3 * i + 1, 1), Pt(3 * i, 1)};
        r.id = i;
        inst.regions.push_back(r);
    }
    CliqueSeparator s = map_separator(inst);
    CHECK(s.cliques.empty());
    CHECK(s.side_a.size() <= 6);
    CHECK(s.side_b.size() <= 6);
    CHECK(s.side_a.size() + s.side_b.size() == 9);
}
