#pragma once

// Exact 2D primitives: points, orientation, segment intersection, angular
// order. Everything here is a pure function of rational inputs.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliquesep/rational.hpp"

namespace cliquesep {

struct Pt {
    Rat x, y;
    Pt() : x(0), y(0) {}
    Pt(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
    Pt(long px, long py) : x(px), y(py) {}

    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Pt& o) const { return !(*this == o); }
    Pt operator+(const Pt& o) const { return Pt(x + o.x, y + o.y); }
    Pt operator-(const Pt& o) const { return Pt(x - o.x, y - o.y); }
    Pt operator*(const Rat& s) const { return Pt(x * s, y * s); }
};

inline bool lex_less(const Pt& a, const Pt& b) {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return a.y < b.y;
}

inline std::string pt_key(const Pt& p) { return rat_key(p.x) + "," + rat_key(p.y); }

inline Rat cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline Rat dot(const Pt& o, const Pt& a, const Pt& b) {
    return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y);
}

// Sign of the signed area of triangle abc: +1 ccw, 0 collinear, -1 cw.
inline int orient(const Pt& a, const Pt& b, const Pt& c) {
    return sgn(cross(a, b, c));
}

inline Rat dist2(const Pt& a, const Pt& b) {
    Rat dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// True iff p lies on the closed segment [a,b].
inline bool on_segment(const Pt& p, const Pt& a, const Pt& b) {
    if (orient(a, b, p) != 0) return false;
    return dot(p, a, b) <= 0;
}

// Minimum squared distance from p to the closed segment [a,b]; exact.
inline Rat point_segment_dist2(const Pt& p, const Pt& a, const Pt& b) {
    Rat len2 = dist2(a, b);
    if (len2 == 0) return dist2(p, a);
    Rat t = dot(a, b, p) / len2;
    if (t <= 0) return dist2(p, a);
    if (t >= 1) return dist2(p, b);
    Pt proj(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
    return dist2(p, proj);
}

struct Segment {
    Pt a, b;
    Segment() = default;
    Segment(Pt pa, Pt pb) : a(std::move(pa)), b(std::move(pb)) {}
};

// Classification of the intersection of two closed segments.
struct SegIntersection {
    enum Kind { None, Point, Overlap } kind = None;
    Pt p;       // set when kind == Point
    Pt q0, q1;  // overlap endpoints when kind == Overlap
};

// Exact segment-segment intersection. Degenerate (zero-length) segments are
// treated as points.
inline SegIntersection seg_intersect(const Pt& p1, const Pt& p2, const Pt& p3, const Pt& p4) {
    SegIntersection res;
    Rat d1 = cross(p3, p4, p1);
    Rat d2 = cross(p3, p4, p2);
    Rat d3 = cross(p1, p2, p3);
    Rat d4 = cross(p1, p2, p4);

    int s1 = sgn(d1), s2 = sgn(d2), s3 = sgn(d3), s4 = sgn(d4);

    if (s1 == 0 && s2 == 0) {
        // collinear (or one segment degenerate): project on the dominant axis
        auto lo = [&](const Pt& u, const Pt& v) { return lex_less(u, v) ? u : v; };
        auto hi = [&](const Pt& u, const Pt& v) { return lex_less(u, v) ? v : u; };
        Pt a0 = lo(p1, p2), a1 = hi(p1, p2), b0 = lo(p3, p4), b1 = hi(p3, p4);
        Pt lo2 = lex_less(a0, b0) ? b0 : a0;
        Pt hi2 = lex_less(a1, b1) ? a1 : b1;
        if (lex_less(hi2, lo2)) return res;
        if (hi2 == lo2) {
            // touching at one point; must actually lie on both segments
            if (on_segment(lo2, p1, p2) && on_segment(lo2, p3, p4)) {
                res.kind = SegIntersection::Point;
                res.p = lo2;
            }
            return res;
        }
        if (on_segment(lo2, p1, p2) && on_segment(lo2, p3, p4) && on_segment(hi2, p1, p2) &&
            on_segment(hi2, p3, p4)) {
            res.kind = SegIntersection::Overlap;
            res.q0 = lo2;
            res.q1 = hi2;
        }
        return res;
    }

    if (((s1 > 0 && s2 < 0) || (s1 < 0 && s2 > 0)) && ((s3 > 0 && s4 < 0) || (s3 < 0 && s4 > 0))) {
        // proper crossing; cross(p1,p2,.) is linear along p3->p4 and changes sign
        Rat t = d3 / (d3 - d4);
        Pt p(p3.x + t * (p4.x - p3.x), p3.y + t * (p4.y - p3.y));
        res.kind = SegIntersection::Point;
        res.p = p;
        return res;
    }

    // endpoint touching cases
    for (const Pt* e : {&p1, &p2}) {
        if (on_segment(*e, p3, p4) && on_segment(*e, p1, p2)) {
            res.kind = SegIntersection::Point;
            res.p = *e;
            return res;
        }
    }
    for (const Pt* e : {&p3, &p4}) {
        if (on_segment(*e, p1, p2) && on_segment(*e, p3, p4)) {
            res.kind = SegIntersection::Point;
            res.p = *e;
            return res;
        }
    }
    return res;
}

inline SegIntersection seg_intersect(const Segment& s, const Segment& t) {
    return seg_intersect(s.a, s.b, t.a, t.b);
}

// True iff the open interiors of the two segments cross in a single point
// (no endpoint touching, no collinear overlap).
inline bool segments_cross_properly(const Pt& p1, const Pt& p2, const Pt& p3, const Pt& p4) {
    int s1 = orient(p3, p4, p1), s2 = orient(p3, p4, p2);
    int s3 = orient(p1, p2, p3), s4 = orient(p1, p2, p4);
    return ((s1 > 0 && s2 < 0) || (s1 < 0 && s2 > 0)) && ((s3 > 0 && s4 < 0) || (s3 < 0 && s4 > 0));
}

// Half-plane index used for exact angular sorting: 0 for angle in [0,pi),
// 1 for [pi,2pi). Zero vectors are not valid directions.
inline int angle_half(const Pt& d) {
    int sy = sgn(d.y);
    if (sy != 0) return sy > 0 ? 0 : 1;
    return sgn(d.x) > 0 ? 0 : 1;
}

// Exact ccw comparison of direction vectors (angle in [0,2pi)).
inline bool angle_less(const Pt& a, const Pt& b) {
    int ha = angle_half(a), hb = angle_half(b);
    if (ha != hb) return ha < hb;
    Rat cr = a.x * b.y - a.y * b.x;
    return sgn(cr) > 0;
}

inline bool angle_equal(const Pt& a, const Pt& b) {
    return angle_half(a) == angle_half(b) && sgn(a.x * b.y - a.y * b.x) == 0;
}

struct BBox {
    Rat xmin, ymin, xmax, ymax;
    bool empty = true;
    void add(const Pt& p) {
        if (empty) {
            xmin = xmax = p.x;
            ymin = ymax = p.y;
            empty = false;
        } else {
            if (p.x < xmin) xmin = p.x;
            if (p.x > xmax) xmax = p.x;
            if (p.y < ymin) ymin = p.y;
            if (p.y > ymax) ymax = p.y;
        }
    }
    bool overlaps(const BBox& o) const {
        if (empty || o.empty) return false;
        return !(xmax < o.xmin || o.xmax < xmin || ymax < o.ymin || o.ymax < ymin);
    }
};

}  // namespace cliquesep
