#pragma once

// Exact arrangement of polygon boundaries: vertices, edges, faces of the
// overlay, per-face containing-object sets, and the embedded dual graph.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cliquesep/plane_graph.hpp"
#include "cliquesep/polygon.hpp"
#include "cliquesep/spatial.hpp"

namespace cliquesep {

struct ArrFace {
    Pt sample;                  // interior point (exact)
    std::vector<int> contains;  // object ids whose closed region contains the face
    bool unbounded = false;
    std::vector<int> walks;     // walk ids bounding this face (first = outer unless unbounded)
};

struct Arrangement {
    std::vector<Pt> verts;
    std::vector<std::pair<int, int>> edge_vertex;  // per edge: endpoint vertex ids
    std::vector<int> dart_origin;                  // 2 darts per edge, twin = ^1
    std::vector<std::vector<int>> vertex_darts;    // ccw rotation at each vertex
    std::vector<int> rot_pos;
    std::vector<int> face_of_dart;
    std::vector<std::vector<int>> walk_darts;  // closed boundary walks
    std::vector<ArrFace> faces;
    int unbounded_face = -1;

    int num_vertices() const { return static_cast<int>(verts.size()); }
    int num_edges() const { return static_cast<int>(edge_vertex.size()); }
    int num_faces() const { return static_cast<int>(faces.size()); }
    int origin(int d) const { return dart_origin[d]; }
    int target(int d) const { return dart_origin[d ^ 1]; }

    // Embedded dual: one node per face (label = face id), one edge per pair of
    // distinct faces sharing at least one arrangement edge (parallel edges
    // merged). Rotations follow boundary-walk order.
    PlaneGraph dual() const;
};

namespace detail_arr {

struct RawSeg {
    Pt a, b;
    int owner;
};

inline double typical_extent(const std::vector<RawSeg>& segs) {
    BBox bb;
    for (const auto& s : segs) {
        bb.add(s.a);
        bb.add(s.b);
    }
    if (bb.empty) return 1.0;
    double w = rat_to_double(bb.xmax - bb.xmin), h = rat_to_double(bb.ymax - bb.ymin);
    double cell = std::max(w, h) / std::max(1.0, std::sqrt(static_cast<double>(segs.size())));
    return cell > 0 ? cell : 1.0;
}

}  // namespace detail_arr

inline Arrangement build_arrangement(const std::vector<PolygonalRegion>& objects) {
    using detail_arr::RawSeg;
    for (const auto& o : objects)
        if (o.boundary.size() < 3 || sgn(ring_signed_area2(o.boundary)) == 0)
            throw std::invalid_argument("degenerate object in arrangement input");

    std::vector<RawSeg> segs;
    for (int oi = 0; oi < static_cast<int>(objects.size()); ++oi) {
        const Ring& r = objects[oi].boundary;
        for (std::size_t e = 0; e < r.size(); ++e)
            segs.push_back({r[e], r[(e + 1) % r.size()], oi});
    }

    // cut points on every segment (parameters along the segment)
    std::vector<std::vector<Rat>> cuts(segs.size());
    BucketGrid grid(detail_arr::typical_extent(segs));
    for (std::size_t i = 0; i < segs.size(); ++i) {
        BBox bb;
        bb.add(segs[i].a);
        bb.add(segs[i].b);
        grid.insert(static_cast<int>(i), bb);
    }
    auto param_on = [](const RawSeg& s, const Pt& p) -> Rat {
        Rat dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
        return sgn(dx) != 0 ? (p.x - s.a.x) / dx : (p.y - s.a.y) / dy;
    };
    for (std::size_t i = 0; i < segs.size(); ++i) {
        BBox bb;
        bb.add(segs[i].a);
        bb.add(segs[i].b);
        for (int j : grid.query(bb)) {
            if (static_cast<std::size_t>(j) <= i) continue;
            SegIntersection is = seg_intersect(segs[i].a, segs[i].b, segs[j].a, segs[j].b);
            if (is.kind == SegIntersection::None) continue;
            if (is.kind == SegIntersection::Point) {
                cuts[i].push_back(param_on(segs[i], is.p));
                cuts[j].push_back(param_on(segs[j], is.p));
            } else {
                for (const Pt* q : {&is.q0, &is.q1}) {
                    cuts[i].push_back(param_on(segs[i], *q));
                    cuts[j].push_back(param_on(segs[j], *q));
                }
            }
        }
    }

    Arrangement arr;
    std::unordered_map<std::string, int> vid;
    auto vertex_id = [&](const Pt& p) {
        auto it = vid.find(pt_key(p));
        if (it != vid.end()) return it->second;
        int id = static_cast<int>(arr.verts.size());
        arr.verts.push_back(p);
        vid.emplace(pt_key(p), id);
        return id;
    };
    std::map<std::pair<int, int>, int> eid;  // vertex pair (min,max) -> edge
    auto edge_id = [&](int u, int v) -> int {
        auto key = std::minmax(u, v);
        auto it = eid.find(key);
        if (it != eid.end()) return it->second;
        int id = static_cast<int>(arr.edge_vertex.size());
        arr.edge_vertex.emplace_back(key.first, key.second);
        eid.emplace(key, id);
        return id;
    };
    for (std::size_t i = 0; i < segs.size(); ++i) {
        auto& cv = cuts[i];
        cv.push_back(Rat(0));
        cv.push_back(Rat(1));
        std::sort(cv.begin(), cv.end());
        cv.erase(std::unique(cv.begin(), cv.end()), cv.end());
        Rat dx = segs[i].b.x - segs[i].a.x, dy = segs[i].b.y - segs[i].a.y;
        for (std::size_t k = 0; k + 1 < cv.size(); ++k) {
            if (cv[k] < 0 || cv[k + 1] > 1) continue;
            Pt p(segs[i].a.x + cv[k] * dx, segs[i].a.y + cv[k] * dy);
            Pt q(segs[i].a.x + cv[k + 1] * dx, segs[i].a.y + cv[k + 1] * dy);
            int u = vertex_id(p), v = vertex_id(q);
            if (u == v) continue;
            edge_id(u, v);
        }
    }

    // rotation systems: darts sorted ccw by exact direction
    int ne = arr.num_edges();
    arr.dart_origin.assign(2 * ne, -1);
    for (int e = 0; e < ne; ++e) {
        arr.dart_origin[2 * e] = arr.edge_vertex[e].first;
        arr.dart_origin[2 * e + 1] = arr.edge_vertex[e].second;
    }
    arr.vertex_darts.assign(arr.num_vertices(), {});
    for (int d = 0; d < 2 * ne; ++d) arr.vertex_darts[arr.dart_origin[d]].push_back(d);
    arr.rot_pos.assign(2 * ne, 0);
    for (int v = 0; v < arr.num_vertices(); ++v) {
        auto& darts = arr.vertex_darts[v];
        std::sort(darts.begin(), darts.end(), [&](int d1, int d2) {
            Pt a = arr.verts[arr.target(d1)] - arr.verts[v];
            Pt b = arr.verts[arr.target(d2)] - arr.verts[v];
            if (angle_equal(a, b)) return d1 < d2;  // merged duplicates should not happen
            return angle_less(a, b);
        });
        for (std::size_t k = 0; k < darts.size(); ++k) arr.rot_pos[darts[k]] = static_cast<int>(k);
    }

    // face walks: next(d) = rot_next(twin(d))
    auto rot_next = [&](int d) {
        int v = arr.dart_origin[d];
        const auto& r = arr.vertex_darts[v];
        return r[(arr.rot_pos[d] + 1) % r.size()];
    };
    arr.face_of_dart.assign(2 * ne, -1);
    std::vector<int> walk_of_dart(2 * ne, -1);
    for (int d0 = 0; d0 < 2 * ne; ++d0) {
        if (walk_of_dart[d0] != -1) continue;
        int w = static_cast<int>(arr.walk_darts.size());
        arr.walk_darts.emplace_back();
        int d = d0;
        do {
            walk_of_dart[d] = w;
            arr.walk_darts[w].push_back(d);
            d = rot_next(d ^ 1);
        } while (d != d0);
    }

    // signed area decides bounded faces (clockwise walks under the
    // right-face convention, negative area) vs component outer boundaries
    // (counterclockwise walks, positive area)
    int nw = static_cast<int>(arr.walk_darts.size());
    std::vector<Rat> walk_area2(nw, Rat(0));
    for (int w = 0; w < nw; ++w) {
        Rat s = 0;
        for (int d : arr.walk_darts[w]) {
            const Pt& a = arr.verts[arr.origin(d)];
            const Pt& b = arr.verts[arr.target(d)];
            s += a.x * b.y - b.x * a.y;
        }
        walk_area2[w] = s;
    }

    // group walks into components of the arrangement graph
    std::vector<int> vcomp(arr.num_vertices(), -1);
    {
        int c = 0;
        std::vector<int> stack;
        for (int s = 0; s < arr.num_vertices(); ++s) {
            if (vcomp[s] != -1) continue;
            vcomp[s] = c;
            stack.push_back(s);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int d : arr.vertex_darts[v]) {
                    int u = arr.target(d);
                    if (vcomp[u] == -1) {
                        vcomp[u] = c;
                        stack.push_back(u);
                    }
                }
            }
            ++c;
        }
    }

    // bounded walks become faces; each component's cw walk is adopted as a
    // hole of the face (of another component) that contains the component,
    // or of the unbounded face
    std::vector<int> face_of_walk(nw, -1);
    for (int w = 0; w < nw; ++w)
        if (sgn(walk_area2[w]) < 0) {
            int f = static_cast<int>(arr.faces.size());
            arr.faces.emplace_back();
            arr.faces[f].walks.push_back(w);
            face_of_walk[w] = f;
        }
    arr.unbounded_face = static_cast<int>(arr.faces.size());
    arr.faces.emplace_back();
    arr.faces[arr.unbounded_face].unbounded = true;

    // ring of points of a walk, for containment tests, with double bounding
    // boxes as a conservative prefilter
    auto walk_ring = [&](int w) {
        Ring r;
        for (int d : arr.walk_darts[w]) r.push_back(arr.verts[arr.origin(d)]);
        return r;
    };
    std::vector<Ring> rings(nw);
    std::vector<std::array<double, 4>> ring_bb(nw);
    for (int w = 0; w < nw; ++w) {
        rings[w] = walk_ring(w);
        double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
        for (const Pt& p : rings[w]) {
            double x = rat_to_double(p.x), y = rat_to_double(p.y);
            x0 = std::min(x0, x);
            y0 = std::min(y0, y);
            x1 = std::max(x1, x);
            y1 = std::max(y1, y);
        }
        double pad = 1e-9 * (std::abs(x0) + std::abs(x1) + std::abs(y0) + std::abs(y1) + 1);
        ring_bb[w] = {x0 - pad, y0 - pad, x1 + pad, y1 + pad};
    }

    int ncomp = 0;
    for (int v : vcomp) ncomp = std::max(ncomp, v + 1);
    std::vector<int> comp_outer_walk(ncomp, -1);
    for (int w = 0; w < nw; ++w)
        if (sgn(walk_area2[w]) > 0) {
            int c = vcomp[arr.origin(arr.walk_darts[w][0])];
            if (comp_outer_walk[c] != -1)
                throw std::runtime_error("component with two outer walks");
            comp_outer_walk[c] = w;
        }
    for (int c = 0; c < ncomp; ++c) {
        if (comp_outer_walk[c] == -1) throw std::runtime_error("component without outer walk");
        // the innermost bounded walk of another component containing this one
        Pt probe = arr.verts[arr.origin(arr.walk_darts[comp_outer_walk[c]][0])];
        double px = rat_to_double(probe.x), py = rat_to_double(probe.y);
        int best = -1;
        for (int w = 0; w < nw; ++w) {
            if (sgn(walk_area2[w]) >= 0) continue;
            if (vcomp[arr.origin(arr.walk_darts[w][0])] == c) continue;
            const auto& bb = ring_bb[w];
            if (px < bb[0] || px > bb[2] || py < bb[1] || py > bb[3]) continue;
            if (point_in_ring(probe, rings[w]) != Loc::Inside) continue;
            if (best == -1 || abs(walk_area2[w]) < abs(walk_area2[best])) best = w;
        }
        int host = best == -1 ? arr.unbounded_face : face_of_walk[best];
        arr.faces[host].walks.push_back(comp_outer_walk[c]);
        face_of_walk[comp_outer_walk[c]] = host;
    }
    for (int w = 0; w < nw; ++w)
        for (int d : arr.walk_darts[w]) arr.face_of_dart[d] = face_of_walk[w];

    // sample point: for bounded faces, offset from the midpoint of an outer
    // walk edge into the face; exactness by rejection against all edges
    BBox global_bb;
    for (const Pt& p : arr.verts) global_bb.add(p);
    for (int f = 0; f < arr.num_faces(); ++f) {
        if (arr.faces[f].unbounded) {
            arr.faces[f].sample = Pt(global_bb.xmax + 1, global_bb.ymax + 1);
            continue;
        }
        int outer_walk = arr.faces[f].walks.front();
        std::optional<Pt> sample;
        for (int d : arr.walk_darts[outer_walk]) {
            const Pt& a = arr.verts[arr.origin(d)];
            const Pt& b = arr.verts[arr.target(d)];
            Pt mid((a.x + b.x) / 2, (a.y + b.y) / 2);
            Pt normal(b.y - a.y, -(b.x - a.x));  // right of a->b: the face side
            Rat scale(1, 4);
            for (int iter = 0; iter < 128 && !sample; ++iter, scale /= 4) {
                Pt cand(mid.x + normal.x * scale, mid.y + normal.y * scale);
                bool ok = true;
                BBox bb;
                bb.add(mid);
                bb.add(cand);
                for (int sid : grid.query(bb)) {
                    const RawSeg& s = segs[sid];
                    if (on_segment(cand, s.a, s.b)) {
                        ok = false;
                        break;
                    }
                    // the probe may touch the boundary only at mid itself
                    SegIntersection is = seg_intersect(mid, cand, s.a, s.b);
                    if (is.kind == SegIntersection::None) continue;
                    if (is.kind == SegIntersection::Point && is.p == mid) continue;
                    ok = false;
                    break;
                }
                if (ok) sample = cand;
            }
            if (sample) break;
        }
        if (!sample) throw std::runtime_error("face sample point not found");
        arr.faces[f].sample = *sample;
    }

    // containing sets by exact point location of the samples
    {
        BucketGrid ogrid(detail_arr::typical_extent(segs) * 4);
        std::vector<std::array<double, 4>> obb(objects.size());
        for (int oi = 0; oi < static_cast<int>(objects.size()); ++oi) {
            BBox b = ring_bbox(objects[oi].boundary);
            ogrid.insert(oi, b);
            double x0 = rat_to_double(b.xmin), y0 = rat_to_double(b.ymin);
            double x1 = rat_to_double(b.xmax), y1 = rat_to_double(b.ymax);
            double pad = 1e-9 * (std::abs(x0) + std::abs(x1) + std::abs(y0) + std::abs(y1) + 1);
            obb[oi] = {x0 - pad, y0 - pad, x1 + pad, y1 + pad};
        }
        for (int f = 0; f < arr.num_faces(); ++f) {
            BBox bb;
            bb.add(arr.faces[f].sample);
            double sx = rat_to_double(arr.faces[f].sample.x);
            double sy = rat_to_double(arr.faces[f].sample.y);
            for (int oi : ogrid.query(bb)) {
                if (sx < obb[oi][0] || sx > obb[oi][2] || sy < obb[oi][1] || sy > obb[oi][3])
                    continue;
                if (point_in_ring(arr.faces[f].sample, objects[oi].boundary) == Loc::Inside)
                    arr.faces[f].contains.push_back(oi);
            }
            std::sort(arr.faces[f].contains.begin(), arr.faces[f].contains.end());
        }
    }
    return arr;
}

inline PlaneGraph Arrangement::dual() const {
    PlaneGraph g;
    for (int f = 0; f < num_faces(); ++f) g.add_node(Rat(0), false, f);
    // Parallel dual edges are merged: each face pair keeps the dual edge of
    // one representative primal edge, so the result is a sub-map of the full
    // (planar) dual and stays planar.
    std::map<std::pair<int, int>, int> rep_primal;  // (fmin,fmax) -> primal edge id
    for (int f = 0; f < num_faces(); ++f)
        for (int w : faces[f].walks)
            for (int d : walk_darts[w]) {
                int f2 = face_of_dart[d ^ 1];
                if (f2 == f) continue;
                rep_primal.emplace(std::minmax(f, f2), d / 2);
            }
    std::map<std::pair<int, int>, int> pair_dart;  // (from,to) -> dual dart
    std::vector<std::vector<int>> rots(num_faces());
    for (int f = 0; f < num_faces(); ++f) {
        for (int w : faces[f].walks) {
            for (int d : walk_darts[w]) {
                int f2 = face_of_dart[d ^ 1];
                if (f2 == f) continue;
                if (rep_primal[std::minmax(f, f2)] != d / 2) continue;
                auto rit = pair_dart.find(std::make_pair(f2, f));
                int dart;
                if (rit != pair_dart.end()) {
                    dart = PlaneGraph::twin(rit->second);
                } else {
                    dart = g.add_edge(f, f2);
                }
                pair_dart[std::make_pair(f, f2)] = dart;
                rots[f].push_back(dart);
            }
        }
    }
    for (int f = 0; f < num_faces(); ++f) g.set_rotation(f, rots[f]);
    g.build_faces();
    g.check_euler();
    return g;
}

}  // namespace cliquesep
