#include <catch2/catch.hpp>

#include "cliquesep/geodesic.hpp"

#include <cmath>
#include <random>

using namespace cliquesep;

namespace {

Ring lshape() {
    return {Pt(0, 0), Pt(8, 0), Pt(8, 2), Pt(2, 2), Pt(2, 8), Pt(0, 8)};
}

Ring convex_hex() {
    return {Pt(0, 0), Pt(6, 0), Pt(9, 4), Pt(6, 8), Pt(0, 8), Pt(-2, 4)};
}

// random star-shaped polygon around the origin with integer-ish coordinates
Ring random_star(std::mt19937& rng, int k, long rmin = 3, long rmax = 12) {
    std::uniform_int_distribution<long> radius(rmin, rmax);
    Ring outer;
    for (int i = 0; i < k; ++i) {
        double ang = 2 * M_PI * i / k;
        long r = radius(rng);
        outer.push_back(Pt(rat_of(std::lround(100.0 * r * std::cos(ang)), 100),
                           rat_of(std::lround(100.0 * r * std::sin(ang)), 100)));
    }
    if (!ring_is_ccw(outer)) std::reverse(outer.begin(), outer.end());
    return outer;
}

Pt random_inside(std::mt19937& rng, const Ring& ring) {
    BBox bb = ring_bbox(ring);
    std::uniform_int_distribution<long> dx(0, 1000);
    for (int tries = 0; tries < 1000; ++tries) {
        Pt p(bb.xmin + (bb.xmax - bb.xmin) * rat_of(dx(rng), 1000),
             bb.ymin + (bb.ymax - bb.ymin) * rat_of(dx(rng), 1000));
        if (point_in_ring(p, ring) == Loc::Inside) return p;
    }
    throw std::runtime_error("no interior point found");
}

}  // namespace

TEST_CASE("triangulating simple polygons") {
    Ring L = lshape();
    PolyTriangulation t = triangulate_simple_polygon(L);
    CHECK(t.tris.size() == L.size() - 2);
    Rat area = 0;
    for (auto& T : t.tris) area += cross(L[T[0]], L[T[1]], L[T[2]]);
    CHECK(area == ring_signed_area2(L));
}

TEST_CASE("geodesic path in a convex polygon is the straight segment") {
    Ring C = convex_hex();
    GeodesicPath p = geodesic_path(Pt(1, 1), Pt(5, 6), C);
    REQUIRE(p.chain.size() == 2);
    CHECK(p.chain[0] == Pt(1, 1));
    CHECK(p.chain[1] == Pt(5, 6));
}

TEST_CASE("geodesic path bends around the reflex corner of the L") {
    Ring L = lshape();
    Pt a(7, 1), b(1, 7);
    GeodesicPath p = geodesic_path(a, b, L);
    REQUIRE(p.chain.size() == 3);
    CHECK(p.chain[1] == Pt(2, 2));
    // matches the Dijkstra oracle exactly
    GeodesicPath d = geodesic_path_dijkstra(a, b, L);
    CHECK(p.chain == d.chain);
}

TEST_CASE("zero-length geodesic") {
    Ring L = lshape();
    GeodesicPath p = geodesic_path(Pt(1, 1), Pt(1, 1), L);
    CHECK(p.chain.size() == 1);
    CHECK(p.length().zero());
}

TEST_CASE("funnel equals visibility-graph Dijkstra on random star polygons") {
    std::mt19937 rng(77);
    int checked = 0;
    for (int t = 0; t < 12; ++t) {
        Ring P = random_star(rng, 9 + static_cast<int>(rng() % 8));
        if (!ring_is_simple(P)) continue;
        for (int s = 0; s < 12; ++s) {
            Pt a = random_inside(rng, P);
            Pt b = random_inside(rng, P);
            GeodesicPath f = geodesic_path(a, b, P);
            GeodesicPath d = geodesic_path_dijkstra(a, b, P);
            // identical bend sequences imply exactly equal lengths
            CHECK(f.chain == d.chain);
            ++checked;
        }
    }
    CHECK(checked >= 100);
}

TEST_CASE("geodesic triangle inequality on random triples") {
    std::mt19937 rng(99);
    Ring P = random_star(rng, 11);
    REQUIRE(ring_is_simple(P));
    for (int t = 0; t < 40; ++t) {
        Pt a = random_inside(rng, P), b = random_inside(rng, P), c = random_inside(rng, P);
        double ab = geo_value(geodesic_distance(a, b, P));
        double bc = geo_value(geodesic_distance(b, c, P));
        double ac = geo_value(geodesic_distance(a, c, P));
        CHECK(ac <= ab + bc + 1e-9);
    }
}

TEST_CASE("geodesic disk in a convex polygon approximates the circle") {
    Ring C = convex_hex();
    Pt c(3, 4);
    Rat r(2);
    double tol = 0.05;
    GeodesicDisk d = geodisk_region(c, r, C, tol);
    REQUIRE(d.boundary_approx.boundary.size() >= 16);
    // area within the tolerance band of pi r^2
    double area = rat_to_double(ring_signed_area2(d.boundary_approx.boundary)) / 2.0;
    double exact = M_PI * 4.0;
    CHECK(area <= exact + 1e-9);
    CHECK(area >= exact - 2 * M_PI * 2.0 * tol - 1e-9);  // perimeter * tol slack
    // all vertices within radius, geodesically
    for (const Pt& v : d.boundary_approx.boundary) {
        CHECK(geo_compare(geodesic_distance(c, v, C), r) <= 0);
    }
}

TEST_CASE("radius beyond the polygon diameter returns the polygon itself") {
    Ring L = lshape();
    GeodesicDisk d = geodisk_region(Pt(1, 1), Rat(100), L, 0.05);
    CHECK(d.boundary_approx.boundary == L);
}

TEST_CASE("disk hugging a reflex corner has points served by two centers") {
    Ring L = lshape();
    Pt c(6, 1);
    Rat r(6);
    double tol = 0.05;
    GeodesicDisk d = geodisk_region(c, r, L, tol);
    // every boundary vertex within [r - 4*tol, r] geodesic distance unless it
    // lies on the polygon boundary
    PolygonWithHoles poly;
    poly.outer = L;
    int interior_pts = 0, pocket_pts = 0;
    for (const Pt& v : d.boundary_approx.boundary) {
        GeoLength gd = geodesic_distance(c, v, L);
        CHECK(geo_compare(gd, r) <= 0);
        if (point_in_polygon(v, poly) == Loc::Inside) {
            ++interior_pts;
            CHECK(geo_value(gd) >= rat_to_double(r) - 4 * tol);
            // points around the corner need the bend at (2,2)
            GeodesicPath path = geodesic_path(c, v, L);
            if (path.chain.size() == 3) ++pocket_pts;
        }
    }
    CHECK(interior_pts > 8);
    CHECK(pocket_pts > 2);  // the pocket beyond the reflex vertex is traced
}

TEST_CASE("geodisk graph in a convex polygon equals the euclidean disk graph") {
    Ring C = convex_hex();
    std::vector<Pt> centers = {Pt(1, 2), Pt(3, 2), Pt(5, 5), Pt(1, 6)};
    std::vector<Rat> radii = {Rat(1), Rat(1), Rat(1), Rat(2)};
    Graph g = geodisk_graph(centers, radii, C);
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j) {
            Rat rr = radii[i] + radii[j];
            bool expect = dist2(centers[i], centers[j]) <= rr * rr;
            CHECK(g.has_edge(static_cast<int>(i), static_cast<int>(j)) == expect);
        }
}

TEST_CASE("corridor longer than the radius sum blocks adjacency") {
    Ring L = lshape();
    // both disks would touch in euclidean distance, but the geodesic bends
    Pt a(7, 1), b(1, 7);
    // straight-line distance ~ 8.49; geodesic = |a-(2,2)| + |(2,2)-b| ~ 10.2
    std::vector<Pt> centers = {a, b};
    std::vector<Rat> radii = {Rat(9, 2), Rat(9, 2)};  // sum 9 > euclid, < geodesic
    Graph g = geodisk_graph(centers, radii, L);
    CHECK(g.num_edges() == 0);
    std::vector<Rat> radii2 = {Rat(6), Rat(6)};
    Graph g2 = geodisk_graph(centers, radii2, L);
    CHECK(g2.num_edges() == 1);
}

TEST_CASE("intersections of geodesic disks are connected (pseudo-disk behavior)") {
    std::mt19937 rng(123);
    Ring P = random_star(rng, 10);
    REQUIRE(ring_is_simple(P));
    std::vector<Pt> centers;
    std::vector<Rat> radii;
    for (int i = 0; i < 8; ++i) {
        centers.push_back(random_inside(rng, P));
        radii.push_back(rat_of(150 + static_cast<long>(rng() % 250), 100));
    }
    Graph exact = geodisk_graph(centers, radii, P);
    std::vector<PolygonalRegion> regions;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        GeodesicDisk d = geodisk_region(centers[i], radii[i], P, 0.02);
        d.boundary_approx.id = static_cast<int>(i);
        regions.push_back(d.boundary_approx);
    }
    // for every intersecting pair, the approx regions' common faces form one
    // connected component in the arrangement dual
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j) {
            if (!exact.has_edge(static_cast<int>(i), static_cast<int>(j))) continue;
            if (!regions_intersect(regions[i], regions[j])) continue;  // grazing pair
            Arrangement arr = build_arrangement({regions[i], regions[j]});
            PlaneGraph dual = arr.dual();
            std::vector<int> shared;
            for (int f = 0; f < arr.num_faces(); ++f)
                if (arr.faces[f].contains.size() == 2) shared.push_back(f);
            REQUIRE(!shared.empty());
            std::set<int> want(shared.begin(), shared.end()), seen{shared[0]};
            std::vector<int> stack{shared[0]};
            while (!stack.empty()) {
                int f = stack.back();
                stack.pop_back();
                for (int dd : dual.rot[f]) {
                    int g2 = dual.target(dd);
                    if (want.count(g2) && !seen.count(g2)) {
                        seen.insert(g2);
                        stack.push_back(g2);
                    }
                }
            }
            CHECK(seen.size() == want.size());
        }
}

TEST_CASE("geodesic disk separators verify against the exact graph") {
    std::mt19937 rng(321);
    for (int t = 0; t < 3; ++t) {
        Ring P = random_star(rng, 12);
        if (!ring_is_simple(P)) continue;
        std::vector<Pt> centers;
        std::vector<Rat> radii;
        for (int i = 0; i < 15; ++i) {
            centers.push_back(random_inside(rng, P));
            radii.push_back(rat_of(100 + static_cast<long>(rng() % 200), 100));
        }
        Graph exact = geodisk_graph(centers, radii, P);
        CliqueSeparator s = geodisk_separator(centers, radii, P);
        VerifyReport rep = verify_separator(exact, s);
        for (const auto& v : rep.violations) UNSCOPED_INFO(v);
        CHECK(rep.ok);
    }
}

TEST_CASE("all-disjoint and all-overlapping special cases") {
    Ring C = convex_hex();
    SECTION("pairwise disjoint: no cliques") {
        std::vector<Pt> centers = {Pt(0, 1), Pt(5, 1), Pt(3, 6)};
        std::vector<Rat> radii = {Rat(1, 2), Rat(1, 2), Rat(1, 2)};
        CliqueSeparator s = geodisk_separator(centers, radii, C);
        CHECK(s.cliques.empty());
        CHECK(s.side_a.size() + s.side_b.size() == 3);
    }
    SECTION("common point: one clique") {
        std::vector<Pt> centers = {Pt(3, 4), Pt(4, 4), Pt(3, 5)};
        std::vector<Rat> radii = {Rat(2), Rat(2), Rat(2)};
        Graph g = geodisk_graph(centers, radii, C);
        REQUIRE(g.num_edges() == 3);
        CliqueSeparator s = geodisk_separator(centers, radii, C);
        VerifyReport rep = verify_separator(g, s);
        CHECK(rep.ok);
        CHECK(s.cliques.size() == 1);
    }
}
