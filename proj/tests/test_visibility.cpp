#include <catch2/catch.hpp>

#include "cliquesep/visibility.hpp"

#include <random>

using namespace cliquesep;

namespace {

PolygonWithHoles square(long side) {
    PolygonWithHoles p;
    p.outer = {Pt(0, 0), Pt(side, 0), Pt(side, side), Pt(0, side)};
    return p;
}

}  // namespace

TEST_CASE("sees in a convex polygon is always true") {
    PolygonWithHoles p = square(10);
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(1, 9);
    for (int i = 0; i < 100; ++i) {
        Pt a(c(rng), c(rng)), b(c(rng), c(rng));
        CHECK(sees(a, b, p));
    }
}

TEST_CASE("a hole blocks visibility") {
    PolygonWithHoles p = square(10);
    p.holes = {{Pt(4, 4), Pt(4, 6), Pt(6, 6), Pt(6, 4)}};
    CHECK(!sees(Pt(2, 5), Pt(8, 5), p));
    CHECK(sees(Pt(2, 5), Pt(2, 8), p));
    CHECK(sees(Pt(2, 2), Pt(8, 2), p));
    SECTION("zero-length segment") { CHECK(sees(Pt(2, 5), Pt(2, 5), p)); }
    SECTION("grazing the hole corner is allowed") {
        CHECK(sees(Pt(2, 2), Pt(8, 8), p) == false);  // through the hole interior
        CHECK(sees(Pt(2, 6), Pt(6, 10), p));          // misses the hole
        CHECK(sees(Pt(2, 8), Pt(8, 2), p) == false);  // through hole diagonal
    }
    SECTION("endpoint outside raises") { CHECK_THROWS(sees(Pt(-1, -1), Pt(2, 2), p)); }
}

TEST_CASE("sees around an L-shaped corner") {
    PolygonWithHoles L;
    L.outer = {Pt(0, 0), Pt(4, 0), Pt(4, 1), Pt(1, 1), Pt(1, 4), Pt(0, 4)};
    Pt a(Rat(7, 2), Rat(1, 2));  // in the horizontal leg
    Pt b(Rat(1, 2), Rat(7, 2));  // in the vertical leg
    CHECK(!sees(a, b, L));
    CHECK(sees(a, Pt(Rat(1, 2), Rat(1, 2)), L));
    // touching the reflex corner counts as visible
    CHECK(sees(Pt(Rat(1, 2), Rat(1, 2)), Pt(1, 1), L));
}

TEST_CASE("visibility polygon of a convex polygon is the whole polygon") {
    PolygonWithHoles p = square(8);
    Ring vp = visibility_polygon(Pt(3, 3), p);
    // every polygon vertex visible, every exterior point not in the ring
    for (const Pt& v : p.outer) CHECK(point_in_ring(v, vp) != Loc::Outside);
    CHECK(point_in_ring(Pt(9, 9), vp) == Loc::Outside);
}

TEST_CASE("visibility polygon agrees with sees() on a sample grid") {
    auto check_agreement = [](const PolygonWithHoles& poly, const Pt& eye, int res) {
        Ring vp = visibility_polygon(eye, poly);
        BBox bb = ring_bbox(poly.outer);
        int mismatches = 0;
        for (int i = 0; i <= res; ++i) {
            for (int j = 0; j <= res; ++j) {
                Pt q(bb.xmin + (bb.xmax - bb.xmin) * rat_of(i, res),
                     bb.ymin + (bb.ymax - bb.ymin) * rat_of(j, res));
                if (point_in_polygon(q, poly) == Loc::Outside) continue;
                bool s = sees(eye, q, poly);
                bool in_vp = point_in_ring(q, vp) != Loc::Outside;
                if (s != in_vp) ++mismatches;
            }
        }
        CHECK(mismatches == 0);
    };

    SECTION("L-shaped polygon") {
        PolygonWithHoles L;
        L.outer = {Pt(0, 0), Pt(6, 0), Pt(6, 2), Pt(2, 2), Pt(2, 6), Pt(0, 6)};
        check_agreement(L, Pt(5, 1), 25);
        check_agreement(L, Pt(1, 5), 25);
        check_agreement(L, Pt(1, 1), 25);
    }
    SECTION("polygon with a hole") {
        PolygonWithHoles p = square(12);
        p.holes = {{Pt(5, 5), Pt(5, 7), Pt(7, 7), Pt(7, 5)}};
        check_agreement(p, Pt(2, 6), 24);
        check_agreement(p, Pt(6, 2), 24);
    }
    SECTION("random star-shaped polygons") {
        std::mt19937 rng(17);
        for (int t = 0; t < 6; ++t) {
            std::uniform_int_distribution<int> radius(2, 12);
            int k = 8 + static_cast<int>(rng() % 6);
            Ring outer;
            for (int i = 0; i < k; ++i) {
                // star-shaped around the origin: radial spokes at sorted angles
                double ang = 2 * 3.14159265358979 * i / k;
                int r = radius(rng);
                long x = std::lround(100.0 * r * std::cos(ang));
                long y = std::lround(100.0 * r * std::sin(ang));
                outer.push_back(Pt(rat_of(x, 100), rat_of(y, 100)));
            }
            if (!ring_is_simple(outer)) continue;
            if (!ring_is_ccw(outer)) std::reverse(outer.begin(), outer.end());
            PolygonWithHoles p;
            p.outer = outer;
            check_agreement(p, Pt(0, 0), 14);
        }
    }
}

TEST_CASE("visibility polygon rejects an outside viewpoint") {
    PolygonWithHoles p = square(4);
    CHECK_THROWS(visibility_polygon(Pt(9, 9), p));
}
