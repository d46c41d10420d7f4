#include <catch2/catch.hpp>

#include "cliquesep/arrangement.hpp"

#include <cmath>
#include <random>
#include <set>

using namespace cliquesep;

namespace {

PolygonalRegion square(long x, long y, long side, int id) {
    PolygonalRegion r;
    r.boundary = {Pt(x, y), Pt(x + side, y), Pt(x + side, y + side), Pt(x, y + side)};
    r.id = id;
    return r;
}

PolygonalRegion disk64(Rat cx, Rat cy, Rat radius, int id) {
    static std::vector<Pt> unit;  // 64-gon with denominator 10^4 coordinates
    if (unit.empty()) {
        for (int i = 0; i < 64; ++i) {
            double a = 2 * 3.14159265358979323846 * i / 64;
            unit.push_back(
                Pt(rat_of(std::lround(std::cos(a) * 10000), 10000),
                   rat_of(std::lround(std::sin(a) * 10000), 10000)));
        }
    }
    PolygonalRegion r;
    for (const Pt& u : unit) r.boundary.push_back(Pt(cx + u.x * radius, cy + u.y * radius));
    r.id = id;
    return r;
}

}  // namespace

TEST_CASE("the unit 64-gon is convex and simple") {
    PolygonalRegion d = disk64(0, 0, 1, 0);
    REQUIRE(ring_is_simple(d.boundary));
    std::size_t n = d.boundary.size();
    for (std::size_t i = 0; i < n; ++i)
        CHECK(orient(d.boundary[(i + n - 1) % n], d.boundary[i], d.boundary[(i + 1) % n]) > 0);
}

TEST_CASE("two generically overlapping squares make 3 bounded faces") {
    std::vector<PolygonalRegion> objs = {square(0, 0, 2, 0), square(1, 1, 2, 1)};
    Arrangement arr = build_arrangement(objs);
    int bounded = 0;
    for (const auto& f : arr.faces)
        if (!f.unbounded) ++bounded;
    CHECK(bounded == 3);
    CHECK(arr.num_faces() == 4);
    // containing sets: one face per single square, one shared
    std::multiset<std::size_t> sizes;
    for (const auto& f : arr.faces)
        if (!f.unbounded) sizes.insert(f.contains.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 1, 2});
}

TEST_CASE("nested squares produce one face per nesting depth") {
    int k = 5;
    std::vector<PolygonalRegion> objs;
    for (int i = 0; i < k; ++i) objs.push_back(square(i, i, 2 * (k - i), i));
    Arrangement arr = build_arrangement(objs);
    int bounded = 0;
    std::set<std::size_t> sizes;
    for (const auto& f : arr.faces)
        if (!f.unbounded) {
            ++bounded;
            sizes.insert(f.contains.size());
        }
    CHECK(bounded == k);
    std::set<std::size_t> expect;
    for (int i = 1; i <= k; ++i) expect.insert(i);
    CHECK(sizes == expect);
}

TEST_CASE("random disk arrangements satisfy the Euler audit") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> pos(0, 60);
    std::uniform_int_distribution<long> rad(4, 12);
    std::vector<PolygonalRegion> objs;
    for (int i = 0; i < 10; ++i)
        objs.push_back(disk64(Rat(pos(rng)), Rat(pos(rng)), Rat(rad(rng)), i));
    Arrangement arr = build_arrangement(objs);

    // independent planar-subdivision audit: V - E + F = 1 + number of
    // connected components of the boundary graph
    std::vector<int> parent(arr.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : arr.edge_vertex) parent[find(u)] = find(v);
    std::set<int> roots;
    for (int v = 0; v < arr.num_vertices(); ++v) roots.insert(find(v));
    long V = arr.num_vertices(), E = arr.num_edges(), F = arr.num_faces();
    CHECK(V - E + F == 1 + static_cast<long>(roots.size()));

    // every face sample agrees with its containing set at two more points
    for (const auto& f : arr.faces) {
        if (f.unbounded) continue;
        for (int obj : f.contains)
            CHECK(point_in_ring(f.sample, objs[obj].boundary) == Loc::Inside);
    }

    // dual is connected and planar (Euler checked inside)
    PlaneGraph dual = arr.dual();
    CHECK(dual.component_ids() == std::vector<int>(dual.num_nodes(), 0));
}

TEST_CASE("degenerate objects are rejected") {
    PolygonalRegion flat;
    flat.boundary = {Pt(0, 0), Pt(1, 0), Pt(2, 0)};
    flat.id = 0;
    CHECK_THROWS(build_arrangement({flat}));
}

TEST_CASE("shared edges merge into one arrangement edge") {
    std::vector<PolygonalRegion> objs = {square(0, 0, 1, 0), square(1, 0, 1, 1)};
    Arrangement arr = build_arrangement(objs);
    CHECK(arr.num_vertices() == 6);
    CHECK(arr.num_edges() == 7);
    CHECK(arr.num_faces() == 3);
}
