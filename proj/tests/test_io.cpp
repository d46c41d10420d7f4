#include <catch2/catch.hpp>

#include "cliquesep/instance.hpp"

using namespace cliquesep;

TEST_CASE("instance JSON round-trips exactly") {
    SECTION("map") {
        Instance inst = gen_map_voronoi(12, 7);
        json j = instance_to_json(inst);
        Instance back = instance_from_json(j);
        REQUIRE(back.map.regions.size() == inst.map.regions.size());
        for (std::size_t i = 0; i < inst.map.regions.size(); ++i)
            CHECK(back.map.regions[i].boundary == inst.map.regions[i].boundary);
        CHECK(instance_to_json(back) == j);
    }
    SECTION("pseudodisk") {
        Instance inst = gen_pseudodisk(10, 3);
        json j = instance_to_json(inst);
        Instance back = instance_from_json(j);
        CHECK(instance_to_json(back) == j);
    }
    SECTION("geodesic") {
        Instance inst = gen_geodesic(8, 5, 16);
        json j = instance_to_json(inst);
        Instance back = instance_from_json(j);
        CHECK(back.geo_centers == inst.geo_centers);
        CHECK(back.geo_radii == inst.geo_radii);
        CHECK(instance_to_json(back) == j);
    }
    SECTION("visibility with holes") {
        Instance inst = gen_visibility(20, 9, 2);
        json j = instance_to_json(inst);
        Instance back = instance_from_json(j);
        CHECK(back.vis.points == inst.vis.points);
        CHECK(back.vis.polygon.holes.size() == inst.vis.polygon.holes.size());
        CHECK(instance_to_json(back) == j);
    }
    SECTION("abstract") {
        Instance inst = gen_abstract(15, 2, 0.3);
        json j = instance_to_json(inst);
        Instance back = instance_from_json(j);
        CHECK(back.abstract_graph.num_edges() == inst.abstract_graph.num_edges());
        CHECK(instance_to_json(back) == j);
    }
}

TEST_CASE("generators are deterministic under the seed") {
    CHECK(instance_to_json(gen_map_voronoi(24, 7)) == instance_to_json(gen_map_voronoi(24, 7)));
    CHECK(instance_to_json(gen_pseudodisk(24, 7)) == instance_to_json(gen_pseudodisk(24, 7)));
    CHECK(instance_to_json(gen_geodesic(10, 7)) == instance_to_json(gen_geodesic(10, 7)));
    CHECK(instance_to_json(gen_visibility(24, 7, 1)) == instance_to_json(gen_visibility(24, 7, 1)));
    CHECK(instance_to_json(gen_map_voronoi(24, 8)) != instance_to_json(gen_map_voronoi(24, 7)));
}

TEST_CASE("coordinates stay exactly representable") {
    Instance inst = gen_map_voronoi(30, 11);
    for (const auto& r : inst.map.regions)
        for (const Pt& p : r.boundary) {
            CHECK(rat_has_decimal_form(p.x));
            CHECK(rat_has_decimal_form(p.y));
        }
    Instance comb = gen_comb(6, 24);
    for (const Pt& p : comb.vis.points) {
        CHECK(rat_has_decimal_form(p.x));
        CHECK(rat_has_decimal_form(p.y));
    }
    for (const Pt& p : comb.vis.polygon.outer) CHECK(rat_has_decimal_form(p.x));
}

TEST_CASE("float coordinates are rejected") {
    json j = {{"class", "visibility"},
              {"polygon", {{"outer", {{0, 0}, {4, 0}, {4, 4}, {0, 4}}}, {"holes", json::array()}}},
              {"points", {{1.5, 2.5}}}};
    CHECK_THROWS(instance_from_json(j));
}

TEST_CASE("voronoi map instances are valid and connected enough") {
    Instance inst = gen_map_voronoi(40, 13);
    Graph g = instance_graph(inst);
    CHECK(g.n == 40);
    CHECK(components(g).size() == 1);  // voronoi cells tile a region
    // separators of generated instances verify
    CliqueSeparator s = instance_separator(inst);
    VerifyReport rep = verify_instance_separator(inst, s);
    for (const auto& v : rep.violations) UNSCOPED_INFO(v);
    CHECK(rep.ok);
}

TEST_CASE("pseudodisk generator yields genuine pseudo-disks") {
    Instance inst = gen_pseudodisk(50, 21);
    for (std::size_t i = 0; i < inst.objects.size(); ++i)
        for (std::size_t j = i + 1; j < inst.objects.size(); ++j)
            CHECK(boundary_crossings(inst.objects[i].boundary, inst.objects[j].boundary) <= 2);
}
