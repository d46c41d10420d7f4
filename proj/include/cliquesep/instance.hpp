#pragma once

// Instance model over the four geometric graph classes plus an abstract-graph
// fallback: JSON schema, deterministic generators, separator dispatch and the
// independent verifier.

#include <json.hpp>

#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cliquesep/delaunay.hpp"
#include "cliquesep/geodesic.hpp"
#include "cliquesep/map_graph.hpp"
#include "cliquesep/solvers.hpp"
#include "cliquesep/support.hpp"
#include "cliquesep/vis.hpp"

namespace cliquesep {

using json = nlohmann::json;

enum class InstanceClass { Map, Pseudodisk, Geodesic, Visibility, Abstract };

inline std::string class_name(InstanceClass c) {
    switch (c) {
        case InstanceClass::Map: return "map";
        case InstanceClass::Pseudodisk: return "pseudodisk";
        case InstanceClass::Geodesic: return "geodesic";
        case InstanceClass::Visibility: return "visibility";
        case InstanceClass::Abstract: return "abstract";
    }
    return "?";
}

inline InstanceClass class_from_name(const std::string& s) {
    if (s == "map") return InstanceClass::Map;
    if (s == "pseudodisk") return InstanceClass::Pseudodisk;
    if (s == "geodesic") return InstanceClass::Geodesic;
    if (s == "visibility") return InstanceClass::Visibility;
    if (s == "abstract") return InstanceClass::Abstract;
    throw std::invalid_argument("unknown instance class: " + s);
}

struct Instance {
    InstanceClass cls = InstanceClass::Abstract;
    MapInstance map;                          // Map
    std::vector<PolygonalRegion> objects;     // Pseudodisk
    Ring geo_polygon;                         // Geodesic
    std::vector<Pt> geo_centers;
    std::vector<Rat> geo_radii;
    VisInstance vis;                          // Visibility
    Graph abstract_graph;                     // Abstract
    json meta;

    std::size_t size() const {
        switch (cls) {
            case InstanceClass::Map: return map.regions.size();
            case InstanceClass::Pseudodisk: return objects.size();
            case InstanceClass::Geodesic: return geo_centers.size();
            case InstanceClass::Visibility: return vis.points.size();
            case InstanceClass::Abstract: return static_cast<std::size_t>(abstract_graph.n);
        }
        return 0;
    }
};

// ---------------------------------------------------------------------------
// JSON schema: coordinates are integers or decimal strings

inline json coord_json(const Rat& r) {
    if (r.get_den() == 1) {
        if (r.get_num().fits_slong_p()) return json(r.get_num().get_si());
        return json(r.get_num().get_str());
    }
    return json(rat_to_decimal(r));
}

inline Rat coord_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return rat_from_decimal(j.get<std::string>());
    if (j.is_number_float()) throw std::invalid_argument("float coordinates are not exact");
    throw std::invalid_argument("bad coordinate");
}

inline json ring_json(const Ring& r) {
    json out = json::array();
    for (const Pt& p : r) out.push_back(json::array({coord_json(p.x), coord_json(p.y)}));
    return out;
}

inline Ring ring_from_json(const json& j) {
    Ring out;
    for (const auto& e : j) out.push_back(Pt(coord_from_json(e[0]), coord_from_json(e[1])));
    return out;
}

inline json instance_to_json(const Instance& inst) {
    json j;
    j["class"] = class_name(inst.cls);
    if (!inst.meta.is_null()) j["meta"] = inst.meta;
    switch (inst.cls) {
        case InstanceClass::Map: {
            json regions = json::array();
            for (const auto& r : inst.map.regions) regions.push_back(ring_json(r.boundary));
            j["regions"] = regions;
            break;
        }
        case InstanceClass::Pseudodisk: {
            json objs = json::array();
            for (const auto& r : inst.objects) objs.push_back(ring_json(r.boundary));
            j["objects"] = objs;
            break;
        }
        case InstanceClass::Geodesic: {
            j["polygon"] = ring_json(inst.geo_polygon);
            json disks = json::array();
            for (std::size_t i = 0; i < inst.geo_centers.size(); ++i)
                disks.push_back(json{{"center", json::array({coord_json(inst.geo_centers[i].x),
                                                             coord_json(inst.geo_centers[i].y)})},
                                     {"radius", coord_json(inst.geo_radii[i])}});
            j["disks"] = disks;
            break;
        }
        case InstanceClass::Visibility: {
            json poly;
            poly["outer"] = ring_json(inst.vis.polygon.outer);
            json holes = json::array();
            for (const Ring& h : inst.vis.polygon.holes) holes.push_back(ring_json(h));
            poly["holes"] = holes;
            j["polygon"] = poly;
            j["points"] = ring_json(inst.vis.points);
            break;
        }
        case InstanceClass::Abstract: {
            j["n"] = inst.abstract_graph.n;
            json edges = json::array();
            for (int v = 0; v < inst.abstract_graph.n; ++v)
                for (int w : inst.abstract_graph.adj[v])
                    if (v < w) edges.push_back(json::array({v, w}));
            j["edges"] = edges;
            break;
        }
    }
    return j;
}

inline Instance instance_from_json(const json& j) {
    Instance inst;
    inst.cls = class_from_name(j.at("class").get<std::string>());
    if (j.contains("meta")) inst.meta = j["meta"];
    switch (inst.cls) {
        case InstanceClass::Map: {
            int id = 0;
            for (const auto& rj : j.at("regions")) {
                PolygonalRegion r;
                r.boundary = ring_from_json(rj);
                r.id = id++;
                r.normalize();
                inst.map.regions.push_back(std::move(r));
            }
            break;
        }
        case InstanceClass::Pseudodisk: {
            int id = 0;
            for (const auto& rj : j.at("objects")) {
                PolygonalRegion r;
                r.boundary = ring_from_json(rj);
                r.id = id++;
                r.normalize();
                inst.objects.push_back(std::move(r));
            }
            break;
        }
        case InstanceClass::Geodesic: {
            inst.geo_polygon = ring_from_json(j.at("polygon"));
            for (const auto& d : j.at("disks")) {
                inst.geo_centers.push_back(
                    Pt(coord_from_json(d.at("center")[0]), coord_from_json(d.at("center")[1])));
                inst.geo_radii.push_back(coord_from_json(d.at("radius")));
            }
            break;
        }
        case InstanceClass::Visibility: {
            inst.vis.polygon.outer = ring_from_json(j.at("polygon").at("outer"));
            if (j.at("polygon").contains("holes"))
                for (const auto& h : j["polygon"]["holes"])
                    inst.vis.polygon.holes.push_back(ring_from_json(h));
            inst.vis.points = ring_from_json(j.at("points"));
            break;
        }
        case InstanceClass::Abstract: {
            inst.abstract_graph = Graph(j.at("n").get<int>());
            for (const auto& e : j.at("edges"))
                inst.abstract_graph.add_edge(e[0].get<int>(), e[1].get<int>());
            inst.abstract_graph.finalize();
            break;
        }
    }
    return inst;
}

// ---------------------------------------------------------------------------
// exact intersection graph and separator dispatch

inline Graph instance_graph(const Instance& inst) {
    switch (inst.cls) {
        case InstanceClass::Map: return build_map_graph(inst.map);
        case InstanceClass::Pseudodisk: return build_object_graph(inst.objects);
        case InstanceClass::Geodesic:
            return geodisk_graph(inst.geo_centers, inst.geo_radii, inst.geo_polygon);
        case InstanceClass::Visibility: return build_vis_graph(inst.vis);
        case InstanceClass::Abstract: return inst.abstract_graph;
    }
    throw std::logic_error("bad class");
}

// Geometric separator of the induced subgraph on `subset` (instance ids).
inline CliqueSeparator instance_separator(const Instance& inst,
                                          std::optional<std::vector<int>> subset = std::nullopt,
                                          const std::vector<Rat>* weights = nullptr) {
    switch (inst.cls) {
        case InstanceClass::Map:
            return map_separator(inst.map, std::move(subset), weights);
        case InstanceClass::Pseudodisk:
            return pseudodisk_separator(inst.objects, std::move(subset), weights);
        case InstanceClass::Geodesic: {
            std::vector<int> ids;
            if (subset) {
                ids = *subset;
            } else {
                ids.resize(inst.geo_centers.size());
                std::iota(ids.begin(), ids.end(), 0);
            }
            std::vector<Pt> centers;
            std::vector<Rat> radii, w;
            for (int i : ids) {
                centers.push_back(inst.geo_centers[i]);
                radii.push_back(inst.geo_radii[i]);
                if (weights) w.push_back((*weights)[i]);
            }
            CliqueSeparator local =
                geodisk_separator(centers, radii, inst.geo_polygon, 0, 4, weights ? &w : nullptr);
            // map local indices back to instance ids
            auto remap = [&](std::vector<int>& v) {
                for (int& x : v) x = ids[x];
            };
            for (auto& c : local.cliques) remap(c);
            remap(local.side_a);
            remap(local.side_b);
            return local;
        }
        case InstanceClass::Visibility: {
            std::vector<int> ids;
            if (subset) {
                ids = *subset;
            } else {
                ids.resize(inst.vis.points.size());
                std::iota(ids.begin(), ids.end(), 0);
            }
            VisInstance sub;
            sub.polygon = inst.vis.polygon;
            std::vector<Rat> w;
            for (int i : ids) {
                sub.points.push_back(inst.vis.points[i]);
                if (weights) w.push_back((*weights)[i]);
            }
            CliqueSeparator local = vis_separator(sub, weights ? &w : nullptr);
            auto remap = [&](std::vector<int>& v) {
                for (int& x : v) x = ids[x];
            };
            for (auto& c : local.cliques) remap(c);
            remap(local.side_a);
            remap(local.side_b);
            return local;
        }
        case InstanceClass::Abstract:
            throw std::invalid_argument("no geometric separator for abstract class");
    }
    throw std::logic_error("bad class");
}

// Separator oracle for the solvers; empty for abstract instances.
inline SeparatorOracle make_oracle(const Instance& inst) {
    if (inst.cls == InstanceClass::Abstract) return nullptr;
    const Instance* p = &inst;
    return [p](const std::vector<int>& subset, const std::vector<Rat>* weights) {
        return instance_separator(*p, subset, weights);
    };
}

// Independent separator verification: straightforward pairwise adjacency from
// the base predicates, then the structural checks.
inline VerifyReport verify_instance_separator(const Instance& inst, const CliqueSeparator& s) {
    int n = static_cast<int>(inst.size());
    Graph g(n);
    switch (inst.cls) {
        case InstanceClass::Map: {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const Ring& a = inst.map.regions[i].boundary;
                    const Ring& b = inst.map.regions[j].boundary;
                    bool touch = false;
                    for (std::size_t e1 = 0; e1 < a.size() && !touch; ++e1)
                        for (std::size_t e2 = 0; e2 < b.size() && !touch; ++e2)
                            touch = seg_intersect(a[e1], a[(e1 + 1) % a.size()], b[e2],
                                                  b[(e2 + 1) % b.size()])
                                        .kind != SegIntersection::None;
                    if (touch) g.add_edge(i, j);
                }
            break;
        }
        case InstanceClass::Pseudodisk: {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (regions_intersect(inst.objects[i], inst.objects[j])) g.add_edge(i, j);
            break;
        }
        case InstanceClass::Geodesic: {
            GeodesicFrame frame(inst.geo_polygon);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    GeoLength d =
                        geodesic_distance(inst.geo_centers[i], inst.geo_centers[j], frame);
                    if (geo_compare(d, inst.geo_radii[i] + inst.geo_radii[j]) <= 0) g.add_edge(i, j);
                }
            break;
        }
        case InstanceClass::Visibility: {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (dist2(inst.vis.points[i], inst.vis.points[j]) <= 1 &&
                        sees(inst.vis.points[i], inst.vis.points[j], inst.vis.polygon))
                        g.add_edge(i, j);
            break;
        }
        case InstanceClass::Abstract: g = inst.abstract_graph; break;
    }
    g.finalize();
    return verify_separator(g, s);
}

// ---------------------------------------------------------------------------
// generators (all deterministic under the seed)

namespace detail_gen {

inline Pt snap6(const Rat& x) {
    // nearest multiple of 1e-6 (round half up), exact
    static const BigInt M("1000000");
    BigInt num = x.get_num() * M * 2 + x.get_den();
    BigInt den = x.get_den() * 2;
    BigInt q = num / den;  // floor((x*M*2+den)/(2 den)) = round(x*M)
    if (num < 0 && q * den != num) q -= 1;
    Rat r(q, M);
    r.canonicalize();
    return Pt(r, r);  // caller uses .x only
}

inline Rat snap6r(const Rat& x) { return snap6(x).x; }

inline std::vector<Pt> unit_disk64() {
    std::vector<Pt> unit;
    for (int i = 0; i < 64; ++i) {
        double a = 2 * 3.14159265358979323846 * i / 64;
        unit.push_back(Pt(rat_of(std::lround(std::cos(a) * 10000), 10000),
                          rat_of(std::lround(std::sin(a) * 10000), 10000)));
    }
    return unit;
}

}  // namespace detail_gen

// Voronoi-cell map instance: cells of random integer sites in a box, clipped
// against a frame of outer sites, with vertices snapped to a 1e-6 grid so the
// file stays exactly representable; shared vertices stay welded because equal
// inputs snap equally. Degenerate snaps retry with a fresh sub-seed.
inline Instance gen_map_voronoi(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::mt19937_64 rng(seed * 1000003ULL + attempt);
        long long span = 1000LL * static_cast<long long>(std::ceil(std::sqrt(double(n)))) + 1000;
        std::uniform_int_distribution<long long> coord(0, span);
        std::vector<IntPt> sites;
        std::set<std::pair<long long, long long>> used;
        while (static_cast<int>(sites.size()) < n) {
            IntPt p{coord(rng), coord(rng)};
            if (used.insert({p.x, p.y}).second) sites.push_back(p);
        }
        // frame sites far outside the box bound every real cell
        int frame_k = 8;
        for (int i = 0; i < frame_k; ++i) {
            double a = 2 * 3.14159265358979323846 * i / frame_k;
            IntPt p{span / 2 + static_cast<long long>(2.5 * span * std::cos(a)),
                    span / 2 + static_cast<long long>(2.5 * span * std::sin(a))};
            if (used.insert({p.x, p.y}).second) sites.push_back(p);
        }
        try {
            Delaunay del(sites, 6 * span);
            auto nb = del.neighbors();
            Instance inst;
            inst.cls = InstanceClass::Map;
            // circumcenter of three sites, exact
            auto circumcenter = [&](int a, int b, int c) -> Pt {
                Rat ax(static_cast<long>(del.pts[a].x)), ay(static_cast<long>(del.pts[a].y));
                Rat bx(static_cast<long>(del.pts[b].x)), by(static_cast<long>(del.pts[b].y));
                Rat cx(static_cast<long>(del.pts[c].x)), cy(static_cast<long>(del.pts[c].y));
                Rat d = (ax - cx) * (by - cy) - (bx - cx) * (ay - cy);
                if (sgn(d) == 0) throw std::runtime_error("degenerate circumcenter");
                Rat a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
                Rat ux = ((a2 - c2) * (by - cy) - (b2 - c2) * (ay - cy)) / (d * 2);
                Rat uy = ((b2 - c2) * (ax - cx) - (a2 - c2) * (bx - cx)) / (d * 2);
                return Pt(ux, uy);
            };
            // per real site: order the incident triangles around the site
            std::map<int, std::vector<int>> site_tris;
            for (std::size_t t = 0; t < del.tris.size(); ++t) {
                if (!del.tris[t].alive) continue;
                for (int e = 0; e < 3; ++e) site_tris[del.tris[t].v[e]].push_back(static_cast<int>(t));
            }
            for (int s = 3; s < 3 + n; ++s) {
                auto it = site_tris.find(s);
                if (it == site_tris.end()) throw std::runtime_error("site with no cell");
                // order triangles by walking shared edges around the site
                std::vector<int> order;
                std::set<int> remaining(it->second.begin(), it->second.end());
                order.push_back(*remaining.begin());
                remaining.erase(remaining.begin());
                while (!remaining.empty()) {
                    const auto& T = del.tris[order.back()];
                    bool advanced = false;
                    for (int e = 0; e < 3 && !advanced; ++e) {
                        int u = T.nb[e];
                        if (u < 0 || !remaining.count(u)) continue;
                        // neighbor must share the site
                        for (int k = 0; k < 3; ++k)
                            if (del.tris[u].v[k] == s) {
                                order.push_back(u);
                                remaining.erase(u);
                                advanced = true;
                                break;
                            }
                    }
                    if (!advanced) throw std::runtime_error("cell fan not connected");
                }
                Ring cell;
                for (int t : order) {
                    Pt cc = circumcenter(del.tris[t].v[0], del.tris[t].v[1], del.tris[t].v[2]);
                    Pt snapped(detail_gen::snap6r(cc.x), detail_gen::snap6r(cc.y));
                    if (cell.empty() || cell.back() != snapped) cell.push_back(snapped);
                }
                while (cell.size() >= 2 && cell.front() == cell.back()) cell.pop_back();
                if (cell.size() < 3) throw std::runtime_error("degenerate cell after snapping");
                PolygonalRegion r;
                r.boundary = cell;
                r.id = s - 3;
                r.normalize();
                if (!ring_is_simple(r.boundary)) throw std::runtime_error("cell not simple");
                inst.map.regions.push_back(std::move(r));
            }
            // full validation happens inside the adjacency analysis
            build_map_graph(inst.map);
            inst.meta = json{{"generator", "voronoi"}, {"n", n}, {"seed", seed},
                             {"attempt", attempt}};
            return inst;
        } catch (const std::exception&) {
            continue;  // resample deterministically
        }
    }
    throw std::runtime_error("voronoi generation failed repeatedly");
}

// Pinwheel map instance: n wedges sharing exactly one point (the map graph is
// the complete graph).
inline Instance gen_map_pinwheel(int n) {
    Instance inst;
    inst.cls = InstanceClass::Map;
    for (int i = 0; i < n; ++i) {
        double a0 = 2 * 3.14159265358979323846 * i / n;
        double a1 = 2 * 3.14159265358979323846 * (i + 0.72) / n;
        auto snap = [](double x) { return rat_of(std::lround(100000.0 * x), 10000); };
        PolygonalRegion r;
        r.boundary = {Pt(0, 0), Pt(snap(std::cos(a0)), snap(std::sin(a0))),
                      Pt(snap(std::cos(a1)), snap(std::sin(a1)))};
        r.normalize();
        r.id = i;
        inst.map.regions.push_back(r);
    }
    inst.meta = json{{"generator", "pinwheel"}, {"n", n}};
    return inst;
}

// Random disks as homothets of one convex 64-gon (hence genuine pseudo-disks).
inline Instance gen_pseudodisk(int n, std::uint64_t seed, int rmin = 6, int rmax = 16) {
    Instance inst;
    inst.cls = InstanceClass::Pseudodisk;
    std::mt19937_64 rng(seed * 2000003ULL);
    long w = std::lround(std::sqrt(double(n)) * 1.45 * (rmin + rmax) / 2);
    std::uniform_int_distribution<long> pos(0, std::max(1L, w));
    std::uniform_int_distribution<int> rad(rmin, rmax);
    std::vector<Pt> unit = detail_gen::unit_disk64();
    std::set<std::tuple<long, long, int>> used;
    while (static_cast<int>(inst.objects.size()) < n) {
        long cx = pos(rng), cy = pos(rng);
        int r = rad(rng);
        if (!used.insert({cx, cy, r}).second) continue;
        PolygonalRegion reg;
        for (const Pt& u : unit)
            reg.boundary.push_back(Pt(Rat(cx) + u.x * r, Rat(cy) + u.y * r));
        reg.id = static_cast<int>(inst.objects.size());
        inst.objects.push_back(std::move(reg));
    }
    inst.meta = json{{"generator", "disks"}, {"n", n}, {"seed", seed}};
    return inst;
}

// sqrt(n) x sqrt(n) grid of unit disks at spacing 1.9 (a grid graph).
inline Instance gen_pseudodisk_grid(int side) {
    Instance inst;
    inst.cls = InstanceClass::Pseudodisk;
    std::vector<Pt> unit = detail_gen::unit_disk64();
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            PolygonalRegion reg;
            for (const Pt& u : unit)
                reg.boundary.push_back(Pt(Rat(19 * i) + u.x * 10, Rat(19 * j) + u.y * 10));
            reg.id = i * side + j;
            inst.objects.push_back(std::move(reg));
        }
    inst.meta = json{{"generator", "grid"}, {"side", side}};
    return inst;
}

// Random star-shaped simple polygon with decimal coordinates.
inline Ring gen_star_polygon(std::mt19937_64& rng, int vertices, long rmin, long rmax) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::uniform_int_distribution<long> radius(rmin, rmax);
        Ring outer;
        for (int i = 0; i < vertices; ++i) {
            double ang = 2 * 3.14159265358979323846 * i / vertices;
            long r = radius(rng);
            outer.push_back(Pt(rat_of(std::lround(100.0 * r * std::cos(ang)), 100),
                               rat_of(std::lround(100.0 * r * std::sin(ang)), 100)));
        }
        if (!ring_is_ccw(outer)) std::reverse(outer.begin(), outer.end());
        if (ring_is_simple(outer)) return outer;
    }
    throw std::runtime_error("star polygon generation failed");
}

inline Pt random_point_inside(std::mt19937_64& rng, const PolygonWithHoles& poly) {
    BBox bb = ring_bbox(poly.outer);
    std::uniform_int_distribution<long> d(0, 10000);
    for (int tries = 0; tries < 100000; ++tries) {
        Pt p(detail_gen::snap6r(bb.xmin + (bb.xmax - bb.xmin) * rat_of(d(rng), 10000)),
             detail_gen::snap6r(bb.ymin + (bb.ymax - bb.ymin) * rat_of(d(rng), 10000)));
        if (point_in_polygon(p, poly) == Loc::Inside) return p;
    }
    throw std::runtime_error("rejection sampling failed");
}

// Geodesic instance: star polygon plus disks with decimal centers and radii.
inline Instance gen_geodesic(int disks, std::uint64_t seed, int poly_vertices = 24) {
    Instance inst;
    inst.cls = InstanceClass::Geodesic;
    std::mt19937_64 rng(seed * 3000017ULL);
    inst.geo_polygon = gen_star_polygon(rng, poly_vertices, 4, 14);
    PolygonWithHoles poly;
    poly.outer = inst.geo_polygon;
    std::uniform_int_distribution<long> rad(150, 450);
    std::set<std::string> used;
    while (static_cast<int>(inst.geo_centers.size()) < disks) {
        Pt c = random_point_inside(rng, poly);
        if (!used.insert(pt_key(c)).second) continue;
        inst.geo_centers.push_back(c);
        inst.geo_radii.push_back(rat_of(rad(rng), 100));
    }
    inst.meta = json{{"generator", "geodesic"}, {"n", disks}, {"seed", seed}};
    return inst;
}

// Visibility instance: box (optionally with square holes) plus random points.
inline Instance gen_visibility(int n, std::uint64_t seed, int holes = 0, long width = 0,
                               long height = 0) {
    Instance inst;
    inst.cls = InstanceClass::Visibility;
    std::mt19937_64 rng(seed * 4000037ULL);
    if (width <= 0) width = std::max(3L, std::lround(std::sqrt(double(n)) + 1));
    if (height <= 0) height = width;
    inst.vis.polygon.outer = {Pt(0, 0), Pt(width, 0), Pt(width, height), Pt(0, height)};
    std::uniform_int_distribution<long> hx(1, std::max(1L, width - 3)),
        hy(1, std::max(1L, height - 3));
    int placed = 0, guard = 0;
    while (placed < holes && ++guard < 1000) {
        long x = hx(rng), y = hy(rng);
        Ring h = {Pt(x, y), Pt(x, y + 1), Pt(x + 1, y + 1), Pt(x + 1, y)};  // clockwise
        bool clash = false;
        for (const Ring& other : inst.vis.polygon.holes) {
            BBox b1 = ring_bbox(h), b2 = ring_bbox(other);
            b2.xmin -= 1; b2.ymin -= 1; b2.xmax += 1; b2.ymax += 1;
            if (b1.overlaps(b2)) clash = true;
        }
        if (clash) continue;
        inst.vis.polygon.holes.push_back(h);
        ++placed;
    }
    std::set<std::string> used;
    while (static_cast<int>(inst.vis.points.size()) < n) {
        Pt p = random_point_inside(rng, inst.vis.polygon);
        if (!used.insert(pt_key(p)).second) continue;
        inst.vis.points.push_back(p);
    }
    inst.meta = json{{"generator", "visibility"}, {"n", n}, {"seed", seed}, {"holes", holes}};
    return inst;
}

inline Instance gen_comb(int r, int n) {
    Instance inst;
    inst.cls = InstanceClass::Visibility;
    inst.vis = gen_comb_lower_bound(r, n);
    inst.meta = json{{"generator", "comb"}, {"r", r}, {"n", n}};
    return inst;
}

inline Instance gen_abstract(int n, std::uint64_t seed, double p = 0.2) {
    Instance inst;
    inst.cls = InstanceClass::Abstract;
    inst.abstract_graph = Graph(n);
    std::mt19937_64 rng(seed * 5000011ULL);
    std::uniform_real_distribution<double> coin(0, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) inst.abstract_graph.add_edge(i, j);
    inst.abstract_graph.finalize();
    inst.meta = json{{"generator", "gnp"}, {"n", n}, {"seed", seed}, {"p", p}};
    return inst;
}

inline Instance gen_petersen() {
    Instance inst;
    inst.cls = InstanceClass::Abstract;
    inst.abstract_graph = Graph(10);
    for (int i = 0; i < 5; ++i) {
        inst.abstract_graph.add_edge(i, (i + 1) % 5);          // outer cycle
        inst.abstract_graph.add_edge(5 + i, 5 + (i + 2) % 5);  // inner star
        inst.abstract_graph.add_edge(i, 5 + i);                // spokes
    }
    inst.abstract_graph.finalize();
    inst.meta = json{{"generator", "petersen"}};
    return inst;
}

}  // namespace cliquesep
