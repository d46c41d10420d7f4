#include <catch2/catch.hpp>

#include "cliquesep/vis.hpp"

#include <cmath>
#include <random>

using namespace cliquesep;

namespace {

PolygonWithHoles box(long w, long h) {
    PolygonWithHoles p;
    p.outer = {Pt(0, 0), Pt(w, 0), Pt(w, h), Pt(0, h)};
    return p;
}

VisInstance random_instance(std::mt19937& rng, int n, long w, long h, bool holes) {
    VisInstance inst;
    inst.polygon = box(w, h);
    if (holes) {
        inst.polygon.holes.push_back(
            {Pt(w / 3, h / 3), Pt(w / 3, h / 3 + 2), Pt(w / 3 + 2, h / 3 + 2), Pt(w / 3 + 2, h / 3)});
        inst.polygon.holes.push_back({Pt(2 * w / 3, h / 2), Pt(2 * w / 3, h / 2 + 1),
                                      Pt(2 * w / 3 + 1, h / 2 + 1), Pt(2 * w / 3 + 1, h / 2)});
    }
    std::uniform_int_distribution<long> px(1, 100 * w - 1), py(1, 100 * h - 1);
    std::set<std::string> seen;
    while (static_cast<int>(inst.points.size()) < n) {
        Pt p(rat_of(px(rng), 100), rat_of(py(rng), 100));
        if (point_in_polygon(p, inst.polygon) != Loc::Inside) continue;
        if (!seen.insert(pt_key(p)).second) continue;
        inst.points.push_back(p);
    }
    return inst;
}

}  // namespace

TEST_CASE("vis graph basics") {
    VisInstance inst;
    inst.polygon = box(10, 10);
    inst.points = {Pt(rat_of(20, 10), rat_of(20, 10)), Pt(rat_of(25, 10), rat_of(20, 10)),
                   Pt(rat_of(40, 10), rat_of(20, 10))};
    Graph g = build_vis_graph(inst);
    CHECK(g.has_edge(0, 1));       // distance 0.5
    CHECK(!g.has_edge(0, 2));      // distance 2
    CHECK(g.has_edge(1, 2) == false);  // distance 1.5
}

TEST_CASE("a hole blocks a short edge") {
    VisInstance inst;
    inst.polygon = box(10, 10);
    inst.polygon.holes.push_back({Pt(4, 4), Pt(4, 6), Pt(6, 6), Pt(6, 4)});
    inst.points = {Pt(rat_of(38, 10), 5), Pt(rat_of(62, 10), 5)};
    // distance 2.4 > 1 anyway; move closer via a thin hole instead
    inst.polygon.holes[0] = {Pt(Rat(9, 2), 4), Pt(Rat(9, 2), 6), Pt(Rat(11, 2), 6), Pt(Rat(11, 2), 4)};
    inst.points = {Pt(rat_of(44, 10), 5), Pt(rat_of(56, 10), 5)};
    Graph g = build_vis_graph(inst);
    CHECK(g.num_edges() == 0);  // blocked by the hole despite distance < 1
}

TEST_CASE("reflex cliques in a convex polygon are empty") {
    std::mt19937 rng(7);
    VisInstance inst = random_instance(rng, 30, 12, 9, false);
    ReflexCliques rc = reflex_cliques(inst);
    CHECK(rc.cliques.empty());
    CHECK(rc.q2.size() == 30);
}

TEST_CASE("points near a reflex vertex form verified cliques") {
    VisInstance inst;
    // L-shaped polygon with reflex vertex at (4,4)
    inst.polygon.outer = {Pt(0, 0), Pt(12, 0), Pt(12, 4), Pt(4, 4), Pt(4, 12), Pt(0, 12)};
    inst.points = {Pt(rat_of(42, 10), rat_of(38, 10)), Pt(rat_of(44, 10), rat_of(36, 10)),
                   Pt(rat_of(38, 10), rat_of(42, 10)), Pt(rat_of(45, 10), rat_of(39, 10)),
                   Pt(9, 1)};
    ReflexCliques rc = reflex_cliques(inst);
    std::size_t covered = 0;
    for (auto& c : rc.cliques) covered += c.size();
    CHECK(covered == 4);  // the four points near the corner
    CHECK(rc.q2.size() == 1);
}

TEST_CASE("planar centerpoint: exact small cases") {
    SECTION("triangle: any interior point works, including the returned one") {
        std::vector<Pt> pts = {Pt(0, 0), Pt(4, 0), Pt(0, 4)};
        Pt c = planar_centerpoint(pts);
        CHECK(detail_vis_sep::verify_centerpoint(pts, std::vector<Rat>(3, Rat(1)), c));
    }
    SECTION("3x3 grid: the middle point qualifies") {
        std::vector<Pt> pts;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) pts.push_back(Pt(i, j));
        Pt c = planar_centerpoint(pts);
        std::vector<Rat> w(9, Rat(1));
        CHECK(detail_vis_sep::verify_centerpoint(pts, w, c));
        CHECK(detail_vis_sep::verify_centerpoint(pts, w, Pt(1, 1)));
    }
    SECTION("coincident cluster") {
        std::vector<Pt> pts(5, Pt(3, 3));
        Pt c = planar_centerpoint(pts);
        CHECK(c == Pt(3, 3));
    }
    SECTION("random sets pass full verification") {
        std::mt19937 rng(15);
        std::uniform_int_distribution<long> coord(0, 60);
        for (int t = 0; t < 10; ++t) {
            std::vector<Pt> pts;
            for (int i = 0; i < 40; ++i) pts.push_back(Pt(coord(rng), coord(rng)));
            Pt c = planar_centerpoint(pts);
            CHECK(detail_vis_sep::verify_centerpoint(pts, std::vector<Rat>(pts.size(), Rat(1)), c));
        }
    }
}

TEST_CASE("chord families avoid vertices and cover the polygon") {
    std::mt19937 rng(31);
    VisInstance inst = random_instance(rng, 25, 14, 11, false);
    Pt c = planar_centerpoint(inst.points);
    ChordFamily fam = build_chords(inst.polygon, c, 5, false);
    REQUIRE(fam.chords.size() == 5);
    for (auto& ch : fam.chords) {
        REQUIRE(ch.pieces.size() == 1);
        CHECK(ch.pieces[0].first < 0);
        CHECK(ch.pieces[0].second > 0);
    }
}

TEST_CASE("vis separator on convex instances is valid") {
    std::mt19937 rng(41);
    for (int t = 0; t < 5; ++t) {
        VisInstance inst = random_instance(rng, 40 + 10 * t, 9, 7, false);
        Graph g = build_vis_graph(inst);
        CliqueSeparator s = vis_separator(inst);
        VerifyReport rep = verify_separator(g, s, static_cast<long>(inst.points.size()));
        for (auto& v : rep.violations) UNSCOPED_INFO(v);
        CHECK(rep.ok);
    }
}

TEST_CASE("vis separator with holes is valid") {
    std::mt19937 rng(43);
    for (int t = 0; t < 4; ++t) {
        VisInstance inst = random_instance(rng, 50, 12, 10, true);
        Graph g = build_vis_graph(inst);
        CliqueSeparator s = vis_separator(inst);
        VerifyReport rep = verify_separator(g, s, static_cast<long>(inst.points.size()));
        for (auto& v : rep.violations) UNSCOPED_INFO(v);
        CHECK(rep.ok);
    }
}

TEST_CASE("balance is counted over the residual population") {
    std::mt19937 rng(47);
    VisInstance inst = random_instance(rng, 60, 10, 8, false);
    ReflexCliques rc = reflex_cliques(inst);
    CliqueSeparator s = vis_separator(inst);
    std::size_t q2 = rc.q2.size();
    CHECK(3 * s.side_a.size() <= 2 * q2);
    CHECK(3 * s.side_b.size() <= 2 * q2);
}

TEST_CASE("observation: outside-grid points sit near at most two chords") {
    std::mt19937 rng(53);
    for (int t = 0; t < 4; ++t) {
        VisInstance inst = random_instance(rng, 36 + 12 * t, 16, 12, false);
        VisSeparatorTrace trace;
        vis_separator(inst, nullptr, &trace);
        const ChordFamily& fam = trace.family;
        int m = fam.m;
        for (const Pt& q : inst.points) {
            Pt loc = fam.local(q);
            Rat sx = loc.x + Rat(m) / 2, sy = loc.y + Rat(m) / 2;
            bool inside_grid = sx >= 0 && sx <= m && sy >= 0 && sy <= m;
            if (inside_grid) continue;
            int near = 0;
            for (const auto& ch : fam.chords) {
                for (auto& [t0, t1] : ch.pieces) {
                    Pt a = fam.line_point(ch, t0), b = fam.line_point(ch, t1);
                    if (point_segment_dist2(q, a, b) * 4 <= 1) {
                        ++near;
                        break;
                    }
                }
            }
            CHECK(near <= 2);
        }
    }
}

TEST_CASE("chord weights: points on one chord make a perpendicular chord cheap") {
    VisInstance inst;
    inst.polygon = box(20, 20);
    // points along a horizontal line through the middle
    for (int i = 0; i < 24; ++i)
        inst.points.push_back(Pt(rat_of(30 + i * 6, 10), rat_of(100 + (i % 3), 10)));
    VisSeparatorTrace trace;
    CliqueSeparator s = vis_separator(inst, nullptr, &trace);
    Graph g = build_vis_graph(inst);
    VerifyReport rep = verify_separator(g, s, static_cast<long>(inst.points.size()));
    CHECK(rep.ok);
    // the chosen chord is at most as heavy as the family average
    double total = 0;
    for (double w : trace.chord_weights) total += w;
    CHECK(trace.chord_weights[trace.chosen] <= total / trace.chord_weights.size() + 1e-9);
}

TEST_CASE("comb lower-bound instances") {
    SECTION("r=2 n=4: two clusters, full cross visibility") {
        VisInstance inst = gen_comb_lower_bound(2, 4);
        REQUIRE(inst.points.size() == 4);
        Graph g = build_vis_graph(inst);
        // points 0,1 top cluster; 2,3 bottom: bipartite complete plus intra-cluster
        CHECK(g.has_edge(0, 2));
        CHECK(g.has_edge(0, 3));
        CHECK(g.has_edge(1, 2));
        CHECK(g.has_edge(1, 3));
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(2, 3));
    }
    SECTION("r=8 n=64: clusters mutually invisible on each side") {
        VisInstance inst = gen_comb_lower_bound(8, 64);
        REQUIRE(inst.points.size() == 64);
        Graph g = build_vis_graph(inst);
        int per = 8;
        auto cluster_of = [&](int i) { return i / per; };  // 0..3 top, 4..7 bottom
        for (int i = 0; i < 64; ++i)
            for (int j = i + 1; j < 64; ++j) {
                int ci = cluster_of(i), cj = cluster_of(j);
                bool same_side = (ci < 4) == (cj < 4);
                if (ci == cj) CHECK(g.has_edge(i, j));            // intra-cluster
                else if (same_side) CHECK(!g.has_edge(i, j));     // mutually invisible
                else CHECK(g.has_edge(i, j));                     // full cross visibility
            }
    }
    SECTION("r=n: every point is near a reflex vertex, weight at least r/2") {
        int n = 24;
        VisInstance inst = gen_comb_lower_bound(n, n);
        Graph g = build_vis_graph(inst);
        CliqueSeparator s = vis_separator(inst);
        VerifyReport rep = verify_separator(g, s, static_cast<long>(inst.points.size()));
        CHECK(rep.ok);
        CHECK(s.weight() >= n / 2.0);
        CHECK(s.weight() <= 4.0 * n);
        // all points land in step-1 cliques
        std::size_t covered = 0;
        for (auto& c : s.cliques) covered += c.size();
        CHECK(covered == static_cast<std::size_t>(n));
    }
    SECTION("infeasible parameters rejected") {
        CHECK_THROWS(gen_comb_lower_bound(3, 9));
        CHECK_THROWS(gen_comb_lower_bound(8, 4));
    }
}

TEST_CASE("every emitted clique is pairwise visible within distance 1") {
    std::mt19937 rng(61);
    VisInstance inst = random_instance(rng, 45, 10, 10, true);
    CliqueSeparator s = vis_separator(inst);
    for (const auto& c : s.cliques)
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                CHECK(dist2(inst.points[c[i]], inst.points[c[j]]) <= 1);
                CHECK(sees(inst.points[c[i]], inst.points[c[j]], inst.polygon));
            }
}
