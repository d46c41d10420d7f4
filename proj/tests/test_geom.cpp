#include <catch2/catch.hpp>

#include "cliquesep/geom.hpp"
#include "cliquesep/polygon.hpp"
#include "cliquesep/rational.hpp"

#include <random>

using namespace cliquesep;

TEST_CASE("rational decimal parsing and printing round-trips") {
    CHECK(rat_from_decimal("42") == Rat(42));
    CHECK(rat_from_decimal("-3.25") == Rat(-13, 4));
    CHECK(rat_from_decimal("0.125") == Rat(1, 8));
    CHECK(rat_to_decimal(Rat(-13, 4)) == "-3.25");
    CHECK(rat_to_decimal(Rat(5)) == "5");
    CHECK(rat_to_decimal(Rat(1, 8)) == "0.125");
    CHECK(rat_has_decimal_form(Rat(1, 10)));
    CHECK(!rat_has_decimal_form(Rat(1, 3)));
    CHECK_THROWS(rat_from_decimal("1/3"));
    CHECK_THROWS(rat_from_decimal("1e5"));
}

TEST_CASE("orient matches the signed-area sign") {
    CHECK(orient(Pt(0, 0), Pt(1, 0), Pt(0, 1)) == 1);
    CHECK(orient(Pt(0, 0), Pt(1, 1), Pt(2, 2)) == 0);
    CHECK(orient(Pt(0, 0), Pt(0, 1), Pt(1, 0)) == -1);
}

TEST_CASE("orient is antisymmetric under swapping two arguments") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-20, 20);
    for (int i = 0; i < 500; ++i) {
        Pt a(coord(rng), coord(rng)), b(coord(rng), coord(rng)), c(coord(rng), coord(rng));
        CHECK(orient(a, b, c) == -orient(b, a, c));
        CHECK(orient(a, b, c) == -orient(a, c, b));
        CHECK(orient(a, b, c) == orient(b, c, a));
    }
}

TEST_CASE("segment intersection classification") {
    SECTION("proper crossing") {
        auto is = seg_intersect(Pt(0, 0), Pt(2, 2), Pt(0, 2), Pt(2, 0));
        REQUIRE(is.kind == SegIntersection::Point);
        CHECK(is.p == Pt(1, 1));
    }
    SECTION("disjoint collinear") {
        auto is = seg_intersect(Pt(0, 0), Pt(1, 0), Pt(2, 0), Pt(3, 0));
        CHECK(is.kind == SegIntersection::None);
    }
    SECTION("collinear overlap") {
        auto is = seg_intersect(Pt(0, 0), Pt(2, 0), Pt(1, 0), Pt(3, 0));
        REQUIRE(is.kind == SegIntersection::Overlap);
        CHECK(is.q0 == Pt(1, 0));
        CHECK(is.q1 == Pt(2, 0));
    }
    SECTION("endpoint touch") {
        auto is = seg_intersect(Pt(0, 0), Pt(1, 1), Pt(1, 1), Pt(2, 0));
        REQUIRE(is.kind == SegIntersection::Point);
        CHECK(is.p == Pt(1, 1));
    }
    SECTION("rational crossing point") {
        auto is = seg_intersect(Pt(0, 0), Pt(3, 1), Pt(0, 1), Pt(3, 0));
        REQUIRE(is.kind == SegIntersection::Point);
        CHECK(is.p == Pt(Rat(3, 2), Rat(1, 2)));
    }
}

TEST_CASE("segment intersection is symmetric in its arguments") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coord(-6, 6);
    for (int i = 0; i < 400; ++i) {
        Pt a(coord(rng), coord(rng)), b(coord(rng), coord(rng));
        Pt c(coord(rng), coord(rng)), d(coord(rng), coord(rng));
        if (a == b || c == d) continue;
        auto i1 = seg_intersect(a, b, c, d);
        auto i2 = seg_intersect(c, d, a, b);
        CHECK(i1.kind == i2.kind);
        if (i1.kind == SegIntersection::Point) CHECK(i1.p == i2.p);
        if (i1.kind == SegIntersection::Overlap) {
            CHECK(i1.q0 == i2.q0);
            CHECK(i1.q1 == i2.q1);
        }
    }
}

TEST_CASE("point in polygon with holes") {
    PolygonWithHoles poly;
    poly.outer = {Pt(0, 0), Pt(4, 0), Pt(4, 4), Pt(0, 4)};
    poly.holes = {{Pt(1, 1), Pt(1, 2), Pt(2, 2), Pt(2, 1)}};  // clockwise
    poly.validate();
    CHECK(point_in_polygon(Pt(3, 3), poly) == Loc::Inside);
    CHECK(point_in_polygon(Pt(0, 0), poly) == Loc::Boundary);
    CHECK(point_in_polygon(Pt(2, 0), poly) == Loc::Boundary);
    CHECK(point_in_polygon(Pt(Rat(3, 2), Rat(3, 2)), poly) == Loc::Outside);  // inside the hole
    CHECK(point_in_polygon(Pt(1, 1), poly) == Loc::Boundary);                 // hole corner
    CHECK(point_in_polygon(Pt(5, 5), poly) == Loc::Outside);
}

TEST_CASE("unit square center and vertex classification") {
    PolygonWithHoles sq;
    sq.outer = {Pt(0, 0), Pt(1, 0), Pt(1, 1), Pt(0, 1)};
    CHECK(point_in_polygon(Pt(Rat(1, 2), Rat(1, 2)), sq) == Loc::Inside);
    CHECK(point_in_polygon(Pt(1, 1), sq) == Loc::Boundary);
}

TEST_CASE("ring utilities") {
    Ring r = {Pt(0, 0), Pt(2, 0), Pt(2, 2), Pt(0, 2)};
    CHECK(ring_is_ccw(r));
    CHECK(ring_is_simple(r));
    CHECK(ring_signed_area2(r) == Rat(8));
    Ring bad = {Pt(0, 0), Pt(2, 2), Pt(2, 0), Pt(0, 2)};  // bowtie
    CHECK(!ring_is_simple(bad));
    Pt ip = ring_interior_point(r);
    CHECK(point_in_ring(ip, r) == Loc::Inside);
}

TEST_CASE("interior point of a non-convex ring") {
    Ring L = {Pt(0, 0), Pt(3, 0), Pt(3, 1), Pt(1, 1), Pt(1, 3), Pt(0, 3)};
    REQUIRE(ring_is_simple(L));
    Pt ip = ring_interior_point(L);
    CHECK(point_in_ring(ip, L) == Loc::Inside);
}

TEST_CASE("reflex vertices of an L-shape and of holes") {
    PolygonWithHoles L;
    L.outer = {Pt(0, 0), Pt(3, 0), Pt(3, 1), Pt(1, 1), Pt(1, 3), Pt(0, 3)};
    auto rv = reflex_vertices(L);
    REQUIRE(rv.size() == 1);
    CHECK(rv[0] == Pt(1, 1));

    PolygonWithHoles H;
    H.outer = {Pt(0, 0), Pt(10, 0), Pt(10, 10), Pt(0, 10)};
    H.holes = {{Pt(4, 4), Pt(4, 6), Pt(6, 6), Pt(6, 4)}};
    auto rh = reflex_vertices(H);
    CHECK(rh.size() == 4);  // every convex-hole corner is reflex for the polygon
}

TEST_CASE("angular comparison sorts a full turn") {
    std::vector<Pt> dirs = {Pt(1, 0), Pt(1, 1), Pt(0, 1),  Pt(-1, 1),
                            Pt(-1, 0), Pt(-1, -1), Pt(0, -1), Pt(1, -1)};
    for (std::size_t i = 0; i + 1 < dirs.size(); ++i) CHECK(angle_less(dirs[i], dirs[i + 1]));
    CHECK(!angle_less(dirs.back(), dirs.front()));
    CHECK(angle_equal(Pt(2, 2), Pt(5, 5)));
}
