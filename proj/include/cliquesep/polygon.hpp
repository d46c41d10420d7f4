#pragma once

// Polygon rings, polygons with holes, polygonal regions and point location.

#include <stdexcept>
#include <vector>

#include "cliquesep/geom.hpp"

namespace cliquesep {

using Ring = std::vector<Pt>;  // closed ring, last vertex implicitly joins first

inline Rat ring_signed_area2(const Ring& r) {
    Rat s = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Pt& a = r[i];
        const Pt& b = r[(i + 1) % r.size()];
        s += a.x * b.y - b.x * a.y;
    }
    return s;  // twice the signed area
}

inline bool ring_is_ccw(const Ring& r) { return sgn(ring_signed_area2(r)) > 0; }

// A ring is simple if no two non-adjacent edges intersect and adjacent edges
// meet only in their shared vertex. Vertices must be distinct.
inline bool ring_is_simple(const Ring& r) {
    std::size_t n = r.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (r[i] == r[j]) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Pt &a = r[i], &b = r[(i + 1) % n];
            const Pt &c = r[j], &d = r[(j + 1) % n];
            SegIntersection is = seg_intersect(a, b, c, d);
            if (is.kind == SegIntersection::None) continue;
            if (is.kind == SegIntersection::Overlap) return false;
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (!adjacent) return false;
            // adjacent edges may only share their common endpoint
            const Pt& shared = (j == i + 1) ? b : a;
            if (is.p != shared) return false;
        }
    }
    return true;
}

enum class Loc { Inside, Boundary, Outside };

// Crossing-number point location against a single ring, exact.
inline Loc point_in_ring(const Pt& p, const Ring& r) {
    std::size_t n = r.size();
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Pt& a = r[i];
        const Pt& b = r[(i + 1) % n];
        if (on_segment(p, a, b)) return Loc::Boundary;
        // count crossings of the upward ray from p (half-open in y to avoid
        // double-counting vertices)
        bool a_below = a.y <= p.y, b_below = b.y <= p.y;
        if (a_below != b_below) {
            int o = orient(a, b, p);
            if (b.y > a.y ? o < 0 : o > 0) inside = !inside;
        }
    }
    return inside ? Loc::Inside : Loc::Outside;
}

struct PolygonWithHoles {
    Ring outer;               // counterclockwise
    std::vector<Ring> holes;  // clockwise, pairwise disjoint, strictly inside outer

    void validate() const {
        if (outer.size() < 3 || !ring_is_simple(outer) || !ring_is_ccw(outer))
            throw std::invalid_argument("outer ring must be simple and counterclockwise");
        for (const Ring& h : holes) {
            if (h.size() < 3 || !ring_is_simple(h) || ring_is_ccw(h))
                throw std::invalid_argument("hole rings must be simple and clockwise");
            for (const Pt& v : h)
                if (point_in_ring(v, outer) != Loc::Inside)
                    throw std::invalid_argument("hole not strictly inside outer ring");
        }
        for (std::size_t i = 0; i < holes.size(); ++i)
            for (std::size_t j = i + 1; j < holes.size(); ++j) {
                for (const Pt& v : holes[i])
                    if (point_in_ring(v, holes[j]) != Loc::Outside)
                        throw std::invalid_argument("holes overlap");
                for (std::size_t a = 0; a < holes[i].size(); ++a)
                    for (std::size_t b = 0; b < holes[j].size(); ++b) {
                        SegIntersection is =
                            seg_intersect(holes[i][a], holes[i][(a + 1) % holes[i].size()],
                                          holes[j][b], holes[j][(b + 1) % holes[j].size()]);
                        if (is.kind != SegIntersection::None)
                            throw std::invalid_argument("holes intersect");
                    }
            }
    }

    std::size_t num_vertices() const {
        std::size_t n = outer.size();
        for (const Ring& h : holes) n += h.size();
        return n;
    }

    // All boundary edges (outer + holes) as segments.
    std::vector<Segment> edges() const {
        std::vector<Segment> es;
        auto add = [&](const Ring& r) {
            for (std::size_t i = 0; i < r.size(); ++i) es.emplace_back(r[i], r[(i + 1) % r.size()]);
        };
        add(outer);
        for (const Ring& h : holes) add(h);
        return es;
    }
};

// Classification inside the polygon-with-holes (holes count as outside).
inline Loc point_in_polygon(const Pt& p, const PolygonWithHoles& poly) {
    Loc lo = point_in_ring(p, poly.outer);
    if (lo != Loc::Inside) return lo;
    for (const Ring& h : poly.holes) {
        Loc lh = point_in_ring(p, h);
        if (lh == Loc::Boundary) return Loc::Boundary;
        if (lh == Loc::Inside) return Loc::Outside;
    }
    return Loc::Inside;
}

// Labelled simple polygon used for map-graph faces and polygonal pseudo-disks.
struct PolygonalRegion {
    Ring boundary;  // simple; orientation normalized to ccw on construction
    int id = -1;

    void normalize() {
        if (!ring_is_ccw(boundary)) std::reverse(boundary.begin(), boundary.end());
    }
};

inline Loc point_in_region(const Pt& p, const PolygonalRegion& r) {
    return point_in_ring(p, r.boundary);
}

inline BBox ring_bbox(const Ring& r) {
    BBox b;
    for (const Pt& p : r) b.add(p);
    return b;
}

// Reflex vertex test for a polygon-with-holes: interior angle at the vertex
// exceeds pi, measured inside the polygon (for hole rings the polygon interior
// is on the outside of the ring).
inline std::vector<Pt> reflex_vertices(const PolygonWithHoles& poly) {
    std::vector<Pt> out;
    // Both ring kinds are walked with the polygon interior on the left
    // (outer ccw, holes cw), so one turn test covers both.
    auto scan = [&](const Ring& r) {
        std::size_t n = r.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (orient(r[(i + n - 1) % n], r[i], r[(i + 1) % n]) < 0) out.push_back(r[i]);
        }
    };
    scan(poly.outer);
    for (const Ring& h : poly.holes) scan(h);
    return out;
}

// Any interior point of a simple ring (ear-based): the centroid of the first
// ear triangle. Exact.
inline Pt ring_interior_point(const Ring& r) {
    std::size_t n = r.size();
    bool ccw = ring_is_ccw(r);
    for (std::size_t i = 0; i < n; ++i) {
        const Pt& a = r[(i + n - 1) % n];
        const Pt& b = r[i];
        const Pt& c = r[(i + 1) % n];
        int o = orient(a, b, c);
        if ((ccw && o <= 0) || (!ccw && o >= 0)) continue;  // reflex or flat corner
        // ear test: no other vertex inside or on triangle a,b,c
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            if (j == i || j == (i + n - 1) % n || j == (i + 1) % n) continue;
            const Pt& p = r[j];
            int o1 = orient(a, b, p), o2 = orient(b, c, p), o3 = orient(c, a, p);
            if (ccw ? (o1 >= 0 && o2 >= 0 && o3 >= 0) : (o1 <= 0 && o2 <= 0 && o3 <= 0)) ok = false;
        }
        if (!ok) continue;
        Pt centroid((a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3);
        if (point_in_ring(centroid, r) == Loc::Inside) return centroid;
    }
    throw std::runtime_error("ring_interior_point: no ear found (ring not simple?)");
}

}  // namespace cliquesep
