#pragma once

// Visibility inside a polygon with holes: the sees() predicate and exact
// visibility polygons (star-shaped regions given as rings around the viewpoint).

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cliquesep/polygon.hpp"

namespace cliquesep {

// True iff the closed segment pq stays inside the closed polygon. Touching the
// boundary is allowed; crossing into the exterior or into a hole is not.
inline bool sees(const Pt& p, const Pt& q, const PolygonWithHoles& poly) {
    Loc lp = point_in_polygon(p, poly);
    Loc lq = point_in_polygon(q, poly);
    if (lp == Loc::Outside || lq == Loc::Outside)
        throw std::invalid_argument("sees: endpoint outside polygon");
    if (p == q) return true;

    // collect the parameters where pq meets the boundary, then check the
    // midpoint of every induced sub-interval
    std::vector<Rat> cuts;
    cuts.push_back(Rat(0));
    cuts.push_back(Rat(1));
    Rat dx = q.x - p.x, dy = q.y - p.y;
    auto param = [&](const Pt& z) -> Rat {
        // parameter of a collinear point z on pq
        if (sgn(dx) != 0) return (z.x - p.x) / dx;
        return (z.y - p.y) / dy;
    };
    auto handle_seg = [&](const Pt& a, const Pt& b) -> bool {
        SegIntersection is = seg_intersect(p, q, a, b);
        if (is.kind == SegIntersection::None) return true;
        if (is.kind == SegIntersection::Point) {
            cuts.push_back(param(is.p));
        } else {
            cuts.push_back(param(is.q0));
            cuts.push_back(param(is.q1));
        }
        return true;
    };
    auto scan = [&](const Ring& r) {
        for (std::size_t i = 0; i < r.size(); ++i) handle_seg(r[i], r[(i + 1) % r.size()]);
    };
    scan(poly.outer);
    for (const Ring& h : poly.holes) scan(h);

    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i] >= 1 || cuts[i + 1] <= 0) continue;
        Rat tm = (std::max(cuts[i], Rat(0)) + std::min(cuts[i + 1], Rat(1))) / 2;
        Pt m(p.x + tm * dx, p.y + tm * dy);
        if (point_in_polygon(m, poly) == Loc::Outside) return false;
    }
    return true;
}

// Internal: one boundary edge broken at the viewpoint's angular events.
namespace detail_vis {

// Intersect ray origin+s*dir (s>=0) with segment [a,b]; returns smallest s>0
// solution as exact point, together with s as a rational.
inline std::optional<std::pair<Rat, Pt>> ray_segment(const Pt& origin, const Pt& dir, const Pt& a,
                                                     const Pt& b) {
    // solve origin + s*dir = a + u*(b-a), s >= 0, 0 <= u <= 1
    Rat ex = b.x - a.x, ey = b.y - a.y;
    Rat den = dir.x * ey - dir.y * ex;
    Rat acx = a.x - origin.x, acy = a.y - origin.y;
    if (sgn(den) == 0) {
        // parallel; treat collinear case by taking the nearest endpoint ahead
        if (sgn(dir.x * acy - dir.y * acx) != 0) return std::nullopt;
        std::optional<std::pair<Rat, Pt>> best;
        for (const Pt* e : {&a, &b}) {
            Rat s = (sgn(dir.x) != 0) ? (e->x - origin.x) / dir.x : (e->y - origin.y) / dir.y;
            if (sgn(s) < 0) continue;
            if (!best || s < best->first) best = std::make_pair(s, *e);
        }
        return best;
    }
    Rat s = (acx * ey - acy * ex) / den;
    Rat u = (acx * dir.y - acy * dir.x) / den;
    if (sgn(s) < 0 || u < 0 || u > 1) return std::nullopt;
    Pt at(origin.x + s * dir.x, origin.y + s * dir.y);
    return std::make_pair(s, at);
}

}  // namespace detail_vis

// Exact visibility polygon of a point inside (or on the boundary of) a polygon
// with holes, as a star-shaped ring around p. Radial "window" edges appear
// where visibility jumps past a reflex vertex. Guarantee: for any q,
// sees(p, q, poly) iff point_in_ring(q, result) != Outside.
inline Ring visibility_polygon(const Pt& p, const PolygonWithHoles& poly) {
    if (point_in_polygon(p, poly) == Loc::Outside)
        throw std::invalid_argument("visibility_polygon: viewpoint outside polygon");

    std::vector<Segment> edges = poly.edges();

    // angular events: directions to all vertices (and their antipodes so every
    // wedge is bounded by events on both sides)
    std::vector<Pt> dirs;
    auto add_dir = [&](const Pt& v) {
        if (v == p) return;
        Pt d(v.x - p.x, v.y - p.y);
        dirs.push_back(d);
        dirs.push_back(Pt(-d.x, -d.y));
    };
    for (const Segment& e : edges) add_dir(e.a);
    std::sort(dirs.begin(), dirs.end(), angle_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end(), angle_equal), dirs.end());
    if (dirs.empty()) throw std::runtime_error("visibility_polygon: degenerate polygon");

    std::size_t m = dirs.size();

    // For the open wedge between two consecutive event directions, visibility
    // is bounded by a single edge; sample the wedge interior with a rational
    // direction and find that edge.
    auto wedge_dir = [&](const Pt& d1, const Pt& d2) -> Pt {
        // d1, d2 are consecutive in ccw order (wedge from d1 to d2)
        Pt sum(d1.x + d2.x, d1.y + d2.y);
        Rat cr = d1.x * d2.y - d1.y * d2.x;
        if (sgn(cr) > 0) return sum;                      // wedge < pi
        if (sgn(cr) < 0) return Pt(-sum.x, -sum.y);       // wedge > pi
        return Pt(-d1.y, d1.x);                           // wedge == pi
    };

    struct Piece {
        Pt from, to;  // portion of a boundary edge visible in this wedge
    };
    std::vector<Piece> pieces(m);

    for (std::size_t i = 0; i < m; ++i) {
        const Pt& d1 = dirs[i];
        const Pt& d2 = dirs[(i + 1) % m];
        Pt mid = wedge_dir(d1, d2);
        // nearest edge along the wedge interior
        std::optional<std::pair<Rat, std::size_t>> best;
        for (std::size_t k = 0; k < edges.size(); ++k) {
            auto h = detail_vis::ray_segment(p, mid, edges[k].a, edges[k].b);
            if (!h || sgn(h->first) == 0) continue;
            if (!best || h->first < best->first) best = std::make_pair(h->first, k);
        }
        if (!best) {
            // wedge points outside the polygon; happens only for boundary
            // viewpoints, where the region is pinched at p itself
            pieces[i] = {p, p};
            continue;
        }
        const Segment& e = edges[best->second];
        // clip that edge by the two bounding rays
        auto h1 = detail_vis::ray_segment(p, d1, e.a, e.b);
        auto h2 = detail_vis::ray_segment(p, d2, e.a, e.b);
        Pt from = h1 ? h1->second : (angle_less(Pt(e.a.x - p.x, e.a.y - p.y), Pt(e.b.x - p.x, e.b.y - p.y)) ? e.a : e.b);
        Pt to = h2 ? h2->second : (angle_less(Pt(e.a.x - p.x, e.a.y - p.y), Pt(e.b.x - p.x, e.b.y - p.y)) ? e.b : e.a);
        pieces[i] = {from, to};
    }

    Ring ring;
    for (std::size_t i = 0; i < m; ++i) {
        const Piece& cur = pieces[i];
        if (ring.empty() || ring.back() != cur.from) ring.push_back(cur.from);
        if (ring.back() != cur.to) ring.push_back(cur.to);
    }
    if (ring.size() >= 2 && ring.front() == ring.back()) ring.pop_back();
    // drop exact collinear chains to keep the ring lean
    Ring out;
    std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Pt& a = ring[(i + n - 1) % n];
        const Pt& b = ring[i];
        const Pt& c = ring[(i + 1) % n];
        if (orient(a, b, c) == 0 && dot(b, a, c) < 0) continue;  // b strictly between a and c
        out.push_back(b);
    }
    return out;
}

}  // namespace cliquesep
