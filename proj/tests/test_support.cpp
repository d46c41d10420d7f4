#include <catch2/catch.hpp>

#include "cliquesep/support.hpp"

#include <cmath>
#include <random>

using namespace cliquesep;

namespace {

PolygonalRegion square(long x, long y, long side, int id) {
    PolygonalRegion r;
    r.boundary = {Pt(x, y), Pt(x + side, y), Pt(x + side, y + side), Pt(x, y + side)};
    r.id = id;
    return r;
}

PolygonalRegion disk64(Rat cx, Rat cy, Rat radius, int id) {
    static std::vector<Pt> unit;
    if (unit.empty()) {
        for (int i = 0; i < 64; ++i) {
            double a = 2 * 3.14159265358979323846 * i / 64;
            unit.push_back(Pt(rat_of(std::lround(std::cos(a) * 10000), 10000),
                              rat_of(std::lround(std::sin(a) * 10000), 10000)));
        }
    }
    PolygonalRegion r;
    for (const Pt& u : unit) r.boundary.push_back(Pt(cx + u.x * radius, cy + u.y * radius));
    r.id = id;
    return r;
}

// support property: faces inside each object induce a connected dual subgraph
void check_support_property(const std::vector<PolygonalRegion>& objs) {
    Arrangement arr = build_arrangement(objs);
    PlaneGraph dual = arr.dual();
    for (std::size_t oi = 0; oi < objs.size(); ++oi) {
        std::vector<int> inside;
        for (int f = 0; f < arr.num_faces(); ++f)
            for (int o : arr.faces[f].contains)
                if (o == static_cast<int>(oi)) inside.push_back(f);
        if (inside.empty()) continue;
        std::set<int> want(inside.begin(), inside.end());
        std::vector<int> stack{inside[0]};
        std::set<int> seen{inside[0]};
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int d : dual.rot[f]) {
                int g = dual.target(d);
                if (want.count(g) && !seen.count(g)) {
                    seen.insert(g);
                    stack.push_back(g);
                }
            }
        }
        CHECK(seen.size() == want.size());
    }
}

// stabbing completeness on the residual set: every intersecting pair shares a face
void check_stabbing(const std::vector<PolygonalRegion>& objs) {
    Graph g = build_object_graph(objs);
    Arrangement arr = build_arrangement(objs);
    std::set<std::pair<int, int>> covered;
    for (const auto& f : arr.faces)
        for (std::size_t i = 0; i < f.contains.size(); ++i)
            for (std::size_t j = i + 1; j < f.contains.size(); ++j)
                covered.insert({f.contains[i], f.contains[j]});
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) CHECK(covered.count({u, v}) == 1);
}

}  // namespace

TEST_CASE("ply peel leaves disjoint squares alone") {
    std::vector<PolygonalRegion> objs;
    for (int i = 0; i < 8; ++i) objs.push_back(square(3 * i, 0, 2, i));
    auto [cliques, residual] = ply_peel(objs, 1);
    CHECK(cliques.empty());
    CHECK(residual.size() == 8);
}

TEST_CASE("ply peel collapses identical squares into one clique") {
    std::vector<PolygonalRegion> objs;
    for (int i = 0; i < 9; ++i) objs.push_back(square(0, 0, 2, i));
    auto [cliques, residual] = ply_peel(objs, 3);  // ceil(9^(1/3)) = 3
    REQUIRE(cliques.size() == 1);
    CHECK(cliques[0].size() == 9);
    CHECK(residual.empty());
}

TEST_CASE("residual ply stays within the threshold") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> pos(0, 40);
    std::uniform_int_distribution<long> rad(5, 14);
    std::vector<PolygonalRegion> objs;
    for (int i = 0; i < 30; ++i)
        objs.push_back(disk64(Rat(pos(rng)), Rat(pos(rng)), Rat(rad(rng)), i));
    long t = 4;  // ceil(30^(1/3)) = 4
    auto [cliques, residual] = ply_peel(objs, t);
    std::vector<PolygonalRegion> rest;
    for (int i : residual) rest.push_back(objs[i]);
    if (!rest.empty()) {
        Arrangement arr = build_arrangement(rest);
        for (const auto& f : arr.faces)
            CHECK(static_cast<long>(f.contains.size()) <= t);
    }
}

TEST_CASE("support separator of two overlapping squares") {
    std::vector<PolygonalRegion> objs = {square(0, 0, 2, 0), square(1, 1, 2, 1)};
    Graph g = build_object_graph(objs);
    CliqueSeparator s = support_separator(objs);
    VerifyReport rep = verify_separator(g, s);
    for (const auto& v : rep.violations) UNSCOPED_INFO(v);
    CHECK(rep.ok);
}

TEST_CASE("chains of lens-overlapping disks separate cleanly") {
    for (int k : {10, 25, 50}) {
        std::vector<PolygonalRegion> objs;
        for (int i = 0; i < k; ++i)
            objs.push_back(disk64(Rat(18 * i), Rat(0), Rat(10), i));  // spacing 1.8 r
        Graph g = build_object_graph(objs);
        REQUIRE(g.num_edges() == k - 1);  // path graph
        CliqueSeparator s = support_separator(objs);
        VerifyReport rep = verify_separator(g, s);
        for (const auto& v : rep.violations) UNSCOPED_INFO(v);
        CHECK(rep.ok);
        check_support_property(objs);
        check_stabbing(objs);
    }
}

TEST_CASE("disjoint squares need no separator at all") {
    std::vector<PolygonalRegion> objs;
    for (int i = 0; i < 12; ++i) objs.push_back(square(3 * i, 0, 2, i));
    CliqueSeparator s = support_separator(objs);
    CHECK(s.cliques.empty());
    CHECK(s.side_a.size() + s.side_b.size() == 12);
    CHECK(s.side_a.size() <= 8);
    CHECK(s.side_b.size() <= 8);
}

TEST_CASE("pseudodisk pipeline on identical squares gives one clique") {
    std::vector<PolygonalRegion> objs;
    for (int i = 0; i < 7; ++i) objs.push_back(square(1, 1, 3, i));
    Graph g = build_object_graph(objs);
    CliqueSeparator s = pseudodisk_separator(objs);
    VerifyReport rep = verify_separator(g, s);
    CHECK(rep.ok);
    REQUIRE(s.cliques.size() == 1);
    CHECK(s.cliques[0].size() == 7);
    CHECK(s.weight() == Approx(std::log2(8.0)));
}

TEST_CASE("grid of unit disks at spacing 1.9 separates within the weight budget") {
    int side = 5;  // 25 disks
    std::vector<PolygonalRegion> objs;
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
            objs.push_back(disk64(Rat(19 * i), Rat(19 * j), Rat(10), i * side + j));
    Graph g = build_object_graph(objs);
    // grid graph: horizontal/vertical neighbors only
    REQUIRE(g.num_edges() == 2 * side * (side - 1));
    CliqueSeparator s = pseudodisk_separator(objs);
    VerifyReport rep = verify_separator(g, s);
    for (const auto& v : rep.violations) UNSCOPED_INFO(v);
    CHECK(rep.ok);
    CHECK(s.weight() <= 8.0 * side);
}

TEST_CASE("random disks pass the full pseudodisk pipeline") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<long> pos(0, 120);
    std::uniform_int_distribution<long> rad(6, 16);
    std::vector<PolygonalRegion> objs;
    for (int i = 0; i < 40; ++i)
        objs.push_back(disk64(Rat(pos(rng)), Rat(pos(rng)), Rat(rad(rng)), i));
    Graph g = build_object_graph(objs);
    CliqueSeparator s = pseudodisk_separator(objs, {}, nullptr, /*force=*/true);
    VerifyReport rep = verify_separator(g, s);
    for (const auto& v : rep.violations) UNSCOPED_INFO(v);
    CHECK(rep.ok);
    double n = 40;
    CHECK(s.weight() <= 20.0 * std::pow(n, 2.0 / 3.0) * std::log2(n));
}

TEST_CASE("pseudo-disk violations are detected") {
    // two long thin crossing rectangles cross 4 times
    PolygonalRegion h, v;
    h.boundary = {Pt(0, 4), Pt(10, 4), Pt(10, 6), Pt(0, 6)};
    h.id = 0;
    v.boundary = {Pt(4, 0), Pt(6, 0), Pt(6, 10), Pt(4, 10)};
    v.id = 1;
    CHECK_THROWS(pseudodisk_separator({h, v}));
    CHECK_NOTHROW(pseudodisk_separator({h, v}, {}, nullptr, /*force=*/true));
}

TEST_CASE("touching-only pairs are defused by a singleton clique") {
    // two squares meeting at exactly one corner point
    std::vector<PolygonalRegion> objs = {square(0, 0, 2, 0), square(2, 2, 2, 1)};
    Graph g = build_object_graph(objs);
    REQUIRE(g.num_edges() == 1);
    CliqueSeparator s = support_separator(objs);
    VerifyReport rep = verify_separator(g, s);
    for (const auto& v : rep.violations) UNSCOPED_INFO(v);
    CHECK(rep.ok);
}
