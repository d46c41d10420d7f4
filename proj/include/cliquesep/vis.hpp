#pragma once

// Clique-based separator for visibility-restricted unit-disk graphs in a
// polygon with (or without) holes: reflex-vertex cliques within sqrt(2),
// centerpoint chords over a unit grid, per-chord clique families, and the
// comb-shaped lower-bound generator.

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "cliquesep/clique_separator.hpp"
#include "cliquesep/visibility.hpp"

namespace cliquesep {

struct VisInstance {
    PolygonWithHoles polygon;
    std::vector<Pt> points;  // strictly inside, pairwise distinct

    void validate() const {
        polygon.validate();
        std::set<std::string> seen;
        for (const Pt& p : points) {
            if (point_in_polygon(p, polygon) != Loc::Inside)
                throw std::invalid_argument("vis point not strictly inside the polygon");
            if (!seen.insert(pt_key(p)).second)
                throw std::invalid_argument("duplicate vis point");
        }
    }
};

// Intersection graph: arcs between points at distance <= 1 that see each other.
inline Graph build_vis_graph(const VisInstance& inst) {
    inst.validate();
    int n = static_cast<int>(inst.points.size());
    Graph g(n);
    bool convex = reflex_vertices(inst.polygon).empty() && inst.polygon.holes.empty();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (dist2(inst.points[i], inst.points[j]) > 1) continue;
            if (convex || sees(inst.points[i], inst.points[j], inst.polygon)) g.add_edge(i, j);
        }
    g.finalize();
    return g;
}

// ---------------------------------------------------------------------------
// Step 1: points that see a reflex vertex within sqrt(2)

struct ReflexCliques {
    std::vector<std::vector<int>> cliques;  // indices into inst.points
    std::vector<int> q2;                    // the residual points
};

inline ReflexCliques reflex_cliques(const VisInstance& inst) {
    ReflexCliques out;
    std::vector<Pt> reflex = reflex_vertices(inst.polygon);
    int n = static_cast<int>(inst.points.size());
    if (reflex.empty()) {
        out.q2.resize(n);
        std::iota(out.q2.begin(), out.q2.end(), 0);
        return out;
    }
    // ring predecessor of each reflex vertex, for the splitting edge
    std::unordered_map<std::string, Pt> pred;
    auto scan = [&](const Ring& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            const Pt& prev = r[(i + r.size() - 1) % r.size()];
            if (orient(prev, r[i], r[(i + 1) % r.size()]) < 0) pred.emplace(pt_key(r[i]), prev);
        }
    };
    scan(inst.polygon.outer);
    for (const Ring& h : inst.polygon.holes) scan(h);

    // group key: (reflex vertex, side of the incident-edge extension, half-unit cell)
    std::map<std::tuple<std::string, int, long, long>, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) {
        const Pt& q = inst.points[i];
        int best = -1;
        for (std::size_t u = 0; u < reflex.size(); ++u) {
            if (dist2(q, reflex[u]) > 2) continue;
            if (!sees(q, reflex[u], inst.polygon)) continue;
            if (best == -1 || dist2(q, reflex[u]) < dist2(q, reflex[best]) ||
                (dist2(q, reflex[u]) == dist2(q, reflex[best]) &&
                 lex_less(reflex[u], reflex[best])))
                best = static_cast<int>(u);
        }
        if (best == -1) {
            out.q2.push_back(i);
            continue;
        }
        const Pt& u = reflex[best];
        const Pt& e = pred.at(pt_key(u));
        int side = orient(e, u, q) >= 0 ? 1 : 0;
        // cells of side 1/2 anchored at u: diameter sqrt(2)/2 < 1
        Rat lx = (q.x - u.x) * 2, ly = (q.y - u.y) * 2;
        long cx = static_cast<long>(std::floor(rat_to_double(lx)));
        long cy = static_cast<long>(std::floor(rat_to_double(ly)));
        // exact floor fix-up against double rounding
        while (Rat(cx) > lx) --cx;
        while (Rat(cx + 1) <= lx) ++cx;
        while (Rat(cy) > ly) --cy;
        while (Rat(cy + 1) <= ly) ++cy;
        groups[{pt_key(u), side, cx, cy}].push_back(i);
    }
    for (auto& [key, members] : groups) {
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                const Pt &pa = inst.points[members[a]], &pb = inst.points[members[b]];
                if (dist2(pa, pb) > 1 || !sees(pa, pb, inst.polygon))
                    throw std::runtime_error("reflex clique verification failed");
            }
        out.cliques.push_back(members);
    }
    return out;
}

// ---------------------------------------------------------------------------
// planar centerpoint (weighted), exact at desk scale with sweep verification

namespace detail_vis_sep {

// exact count of weight strictly on each side of the line a->b
inline void side_weights(const std::vector<Pt>& pts, const std::vector<Rat>& w, const Pt& a,
                         const Pt& b, Rat& left, Rat& right) {
    left = 0;
    right = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        int o = orient(a, b, pts[i]);
        if (o > 0) left += w[i];
        if (o < 0) right += w[i];
    }
}

// Checks that every line through c leaves weight at most 2W/3 strictly on
// each side; on failure reports one violating direction. Critical directions
// are those toward the points themselves.
inline bool verify_centerpoint(const std::vector<Pt>& pts, const std::vector<Rat>& w, const Pt& c,
                               Pt* violating = nullptr) {
    Rat W = 0;
    for (const Rat& x : w) W += x;
    std::vector<Pt> dirs;
    for (const Pt& p : pts) {
        if (p == c) continue;
        Pt d(p.x - c.x, p.y - c.y);
        dirs.push_back(d);
        dirs.push_back(Pt(-d.x, -d.y));
    }
    if (dirs.empty()) return true;
    std::sort(dirs.begin(), dirs.end(), angle_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end(), angle_equal), dirs.end());
    std::size_t m = dirs.size();
    for (std::size_t i = 0; i < m; ++i) {
        // check the critical direction and the open wedge after it
        const Pt& d1 = dirs[i];
        const Pt& d2 = dirs[(i + 1) % m];
        Pt sum(d1.x + d2.x, d1.y + d2.y);
        Rat cr = d1.x * d2.y - d1.y * d2.x;
        Pt mid = sgn(cr) > 0 ? sum : (sgn(cr) < 0 ? Pt(-sum.x, -sum.y) : Pt(-d1.y, d1.x));
        for (const Pt& d : {d1, mid}) {
            Rat left, right;
            side_weights(pts, w, c, Pt(c.x + d.x, c.y + d.y), left, right);
            if (left * 3 > W * 2 || right * 3 > W * 2) {
                if (violating) *violating = d;
                return false;
            }
        }
    }
    return true;
}

}  // namespace detail_vis_sep

// A point such that every line through it has at most 2/3 of the total weight
// strictly on each side. Exact construction by halfplane constraints for small
// inputs, iterated Radon points above the cutoff (both verified; the exact
// route is the fallback).
inline Pt planar_centerpoint(const std::vector<Pt>& pts, const std::vector<Rat>* weights = nullptr,
                             std::size_t exact_cutoff = 2000) {
    if (pts.empty()) throw std::invalid_argument("centerpoint of an empty set");
    std::vector<Rat> w(pts.size(), Rat(1));
    if (weights) w = *weights;
    Rat W = 0;
    for (const Rat& x : w) W += x;
    if (pts.size() == 1) return pts[0];

    // iterated Radon points give a cheap candidate for large inputs
    if (pts.size() > exact_cutoff) {
        std::vector<Pt> pool = pts;
        std::mt19937 rng(20240311);
        while (pool.size() >= 4) {
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<Pt> next;
            std::size_t i = 0;
            for (; i + 4 <= pool.size(); i += 4) {
                // Radon point of 4 points: either the crossing of the two
                // diagonals or a point inside the triangle of the others
                const Pt &a = pool[i], &b = pool[i + 1], &c = pool[i + 2], &d = pool[i + 3];
                SegIntersection is = seg_intersect(a, c, b, d);
                if (is.kind == SegIntersection::Point) {
                    next.push_back(is.p);
                } else {
                    SegIntersection i2 = seg_intersect(a, b, c, d);
                    if (i2.kind == SegIntersection::Point)
                        next.push_back(i2.p);
                    else {
                        SegIntersection i3 = seg_intersect(a, d, b, c);
                        next.push_back(i3.kind == SegIntersection::Point ? i3.p : a);
                    }
                }
            }
            for (; i < pool.size(); ++i) next.push_back(pool[i]);
            if (next.size() == pool.size()) break;
            pool = std::move(next);
        }
        if (!pool.empty() && detail_vis_sep::verify_centerpoint(pts, w, pool[0])) return pool[0];
        // fall through to the exact construction
    }

    // exact: intersect, over all ordered point pairs whose line has more than
    // 2W/3 strictly on the left, the closed left halfplanes
    BBox bb;
    for (const Pt& p : pts) bb.add(p);
    Ring region = {Pt(bb.xmin - 1, bb.ymin - 1), Pt(bb.xmax + 1, bb.ymin - 1),
                   Pt(bb.xmax + 1, bb.ymax + 1), Pt(bb.xmin - 1, bb.ymax + 1)};
    auto clip_left = [&](const Pt& a, const Pt& b) {
        // region := region ∩ closed left halfplane of a->b
        Ring next;
        std::size_t k = region.size();
        for (std::size_t i = 0; i < k; ++i) {
            const Pt& cur = region[i];
            const Pt& nxt = region[(i + 1) % k];
            int oc = orient(a, b, cur), on = orient(a, b, nxt);
            if (oc >= 0) next.push_back(cur);
            if ((oc > 0 && on < 0) || (oc < 0 && on > 0)) {
                SegIntersection is = seg_intersect(cur, nxt, a, b);
                // the crossing with the full line: recompute directly
                Rat d1 = cross(a, b, cur), d2 = cross(a, b, nxt);
                Rat t = d1 / (d1 - d2);
                next.push_back(Pt(cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)));
                (void)is;
            }
        }
        region = std::move(next);
    };
    for (std::size_t i = 0; i < pts.size() && !region.empty(); ++i)
        for (std::size_t j = 0; j < pts.size() && !region.empty(); ++j) {
            if (i == j || pts[i] == pts[j]) continue;
            Rat left, right;
            detail_vis_sep::side_weights(pts, w, pts[i], pts[j], left, right);
            if (left * 3 > W * 2) clip_left(pts[i], pts[j]);
            if (right * 3 > W * 2) clip_left(pts[j], pts[i]);
        }
    // cutting-plane loop: the candidate is the region centroid; a violating
    // direction cuts the region by the halfplane where the count is feasible
    for (int round = 0; round < 200; ++round) {
        if (region.empty()) throw std::runtime_error("centerpoint region empty");
        Rat sx = 0, sy = 0;
        for (const Pt& p : region) {
            sx += p.x;
            sy += p.y;
        }
        Pt c(sx / static_cast<long>(region.size()), sy / static_cast<long>(region.size()));
        Pt bad;
        if (detail_vis_sep::verify_centerpoint(pts, w, c, &bad)) return c;
        // The violating count is along direction `bad`: require c on the side
        // where at most 2W/3 weight stays strictly left (and right). Cut at
        // the weighted tercile points in the normal order.
        std::vector<std::size_t> order(pts.size());
        std::iota(order.begin(), order.end(), 0);
        auto key = [&](std::size_t i) -> Rat { return bad.x * pts[i].y - bad.y * pts[i].x; };
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
        // strict-left of the line through x with direction bad = {i : key(i) > key(x)}
        Rat acc = 0;
        for (std::size_t k = 0; k < order.size(); ++k) {
            acc += w[order[k]];
            if (acc * 3 >= W) {
                // keep cross(bad, c) >= key(order[k]): closed left of the line
                // through that point in direction bad
                const Pt& p = pts[order[k]];
                clip_left(p, Pt(p.x + bad.x, p.y + bad.y));
                break;
            }
        }
        acc = 0;
        for (std::size_t k = order.size(); k-- > 0;) {
            acc += w[order[k]];
            if (acc * 3 >= W) {
                const Pt& p = pts[order[k]];
                clip_left(Pt(p.x + bad.x, p.y + bad.y), p);
                break;
            }
        }
    }
    throw std::runtime_error("centerpoint refinement did not converge");
}

// ---------------------------------------------------------------------------
// chord family over a (possibly rotated) unit grid around the centerpoint

struct ChordFamily {
    Pt center;
    Pt axis_u, axis_v;  // exact unit rotation frame
    int m = 0;          // grid is m x m unit cells
    struct Chord {
        Pt target;                         // the grid point defining the line
        std::vector<std::pair<Rat, Rat>> pieces;  // parameter intervals of line ∩ P
        int entrance_pieces = 0;
        int non_entrance_pieces = 0;
    };
    std::vector<Chord> chords;

    Pt local(const Pt& q) const {  // exact local coordinates relative to center
        Pt d(q.x - center.x, q.y - center.y);
        return Pt(d.x * axis_u.x + d.y * axis_u.y, d.x * axis_v.x + d.y * axis_v.y);
    }
    Pt line_point(const Chord& ch, const Rat& t) const {
        return Pt(center.x + t * (ch.target.x - center.x),
                  center.y + t * (ch.target.y - center.y));
    }
};

namespace detail_vis_sep {

// all parameters where the line through c and g crosses the polygon boundary
inline std::vector<Rat> line_boundary_params(const Pt& c, const Pt& g,
                                             const PolygonWithHoles& poly) {
    std::vector<Rat> params;
    Pt dir(g.x - c.x, g.y - c.y);
    auto scan = [&](const Ring& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            const Pt& a = r[i];
            const Pt& b = r[(i + 1) % r.size()];
            // solve c + t*dir on segment ab
            Rat den = dir.x * (b.y - a.y) - dir.y * (b.x - a.x);
            Rat acx = a.x - c.x, acy = a.y - c.y;
            if (sgn(den) == 0) {
                // parallel: collinear segments contribute their endpoints
                if (sgn(dir.x * acy - dir.y * acx) != 0) continue;
                for (const Pt* e : {&a, &b})
                    params.push_back(sgn(dir.x) != 0 ? (e->x - c.x) / dir.x
                                                     : (e->y - c.y) / dir.y);
                continue;
            }
            Rat t = (acx * (b.y - a.y) - acy * (b.x - a.x)) / den;
            Rat u = (acx * dir.y - acy * dir.x) / den;
            if (u < 0 || u > 1) continue;
            params.push_back(t);
        }
    };
    scan(poly.outer);
    for (const Ring& h : poly.holes) scan(h);
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());
    return params;
}

// inside-intervals of the line through c and g (parameters), by midpoint tests
inline std::vector<std::pair<Rat, Rat>> line_inside_intervals(const Pt& c, const Pt& g,
                                                              const PolygonWithHoles& poly) {
    std::vector<Rat> ps = line_boundary_params(c, g, poly);
    std::vector<std::pair<Rat, Rat>> out;
    Pt dir(g.x - c.x, g.y - c.y);
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
        Rat tm = (ps[i] + ps[i + 1]) / 2;
        Pt m(c.x + tm * dir.x, c.y + tm * dir.y);
        if (point_in_polygon(m, poly) != Loc::Outside) {
            if (!out.empty() && out.back().second == ps[i])
                out.back().second = ps[i + 1];
            else
                out.emplace_back(ps[i], ps[i + 1]);
        }
    }
    return out;
}

// does some z = line(t), t in [t0,t1], satisfy |qz| <= 1/2? exact: the squared
// distance is a rational quadratic in t
inline bool interval_within_half(const Pt& c, const Pt& g, const Rat& t0, const Rat& t1,
                                 const Pt& q) {
    Pt dir(g.x - c.x, g.y - c.y);
    // |c + t dir - q|^2 = A t^2 + B t + C
    Rat ex = c.x - q.x, ey = c.y - q.y;
    Rat A = dir.x * dir.x + dir.y * dir.y;
    Rat B = (ex * dir.x + ey * dir.y) * 2;
    Rat C = ex * ex + ey * ey - Rat(1, 4);
    auto val = [&](const Rat& t) -> Rat { return A * t * t + B * t + C; };
    if (val(t0) <= 0 || val(t1) <= 0) return true;
    if (sgn(A) > 0) {
        Rat tstar = -B / (A * 2);
        if (t0 <= tstar && tstar <= t1 && val(tstar) <= 0) return true;
    }
    return false;
}

}  // namespace detail_vis_sep

// Builds the chord family: unit grid centered at the centerpoint, one chord or
// line per rightmost-column grid point, rotated by an exact rational rotation
// until no line passes through a polygon vertex. In simple mode each chord is
// the piece of the line containing the centerpoint; with holes the whole line
// trace is kept.
inline ChordFamily build_chords(const PolygonWithHoles& poly, const Pt& c, int m,
                                bool holes_mode) {
    ChordFamily fam;
    fam.center = c;
    fam.m = m;
    std::vector<Pt> verts;
    for (const Pt& p : poly.outer) verts.push_back(p);
    for (const Ring& h : poly.holes)
        for (const Pt& p : h) verts.push_back(p);

    for (int rot_try = 0;; ++rot_try) {
        Rat t = rot_try == 0 ? Rat(0) : rat_of(1, 1024) * (1 << (rot_try - 1));
        if (rot_try > 16) throw std::runtime_error("could not rotate chords off the vertices");
        Rat den = 1 + t * t;
        fam.axis_u = Pt((1 - t * t) / den, (t * 2) / den);
        fam.axis_v = Pt(-(t * 2) / den, (1 - t * t) / den);
        fam.chords.clear();
        bool ok = true;
        for (int j = 0; j < m && ok; ++j) {
            // rightmost-column grid point in the rotated frame
            Rat lx(m, 2);
            Rat ly = Rat(j) - Rat(m - 1) / 2;
            Pt g(c.x + lx * fam.axis_u.x + ly * fam.axis_v.x,
                 c.y + lx * fam.axis_u.y + ly * fam.axis_v.y);
            // no vertex may lie on the line
            for (const Pt& v : verts)
                if (orient(c, g, v) == 0) {
                    ok = false;
                    break;
                }
            if (!ok) break;
            ChordFamily::Chord ch;
            ch.target = g;
            auto intervals = detail_vis_sep::line_inside_intervals(c, g, poly);
            if (holes_mode) {
                ch.pieces = intervals;
            } else {
                for (auto& iv : intervals)
                    if (iv.first <= 0 && iv.second >= 0) {
                        ch.pieces = {iv};
                        break;
                    }
                if (ch.pieces.empty()) throw std::logic_error("centerpoint chord not found");
            }
            fam.chords.push_back(std::move(ch));
        }
        if (ok) break;
    }
    return fam;
}

// ---------------------------------------------------------------------------
// per-chord clique families and the separator

struct ChordCliques {
    std::vector<std::vector<int>> cliques;  // indices into inst.points
    double weight = 0;
    std::vector<int> residual;  // Q2 points not on this chord's cliques
    bool balanced = true;
};

struct VisSeparatorTrace {
    ChordFamily family;
    std::vector<double> chord_weights;
    int chosen = -1;
};

namespace detail_vis_sep {

struct Q2Data {
    std::vector<int> ids;           // instance ids of Q2 points
    std::vector<Pt> local;          // exact local coordinates
    std::vector<long> cellx, celly; // grid cell or LONG_MIN when outside
    std::vector<Ring> vis;          // visibility polygon per point (lazy)
};

inline long exact_floor(const Rat& x) {
    long f = static_cast<long>(std::floor(rat_to_double(x)));
    while (Rat(f) > x) --f;
    while (Rat(f + 1) <= x) ++f;
    return f;
}

}  // namespace detail_vis_sep

// Cliques of one chord: singletons outside the grid, quartered-cell groups
// near crossed cells inside it. Every clique is verified pairwise.
inline ChordCliques chord_cliques(const VisInstance& inst, const ChordFamily& fam, int chord_id,
                                  const std::vector<int>& q2, bool holes_mode,
                                  std::vector<Ring>* vis_cache) {
    const auto& ch = fam.chords[chord_id];
    ChordCliques out;
    int m = fam.m;
    bool convex = reflex_vertices(inst.polygon).empty() && inst.polygon.holes.empty();

    // membership: exists z on a piece with |qz| <= 1/2 that q sees
    auto member = [&](int qi) -> bool {
        const Pt& q = inst.points[qi];
        // quick reject: distance to the whole line
        for (auto& [t0, t1] : ch.pieces) {
            Pt a = fam.line_point(ch, t0), b = fam.line_point(ch, t1);
            if (point_segment_dist2(q, a, b) > Rat(1, 4)) continue;
            if (convex) {
                if (detail_vis_sep::interval_within_half(fam.center, ch.target, t0, t1, q))
                    return true;
                continue;
            }
            // clip the piece against the visibility polygon of q
            Ring& vp = (*vis_cache)[qi];
            if (vp.empty()) vp = visibility_polygon(q, inst.polygon);
            // collect parameters where the piece crosses the vp boundary
            std::vector<Rat> cut{t0, t1};
            Pt dir(ch.target.x - fam.center.x, ch.target.y - fam.center.y);
            for (std::size_t e = 0; e < vp.size(); ++e) {
                const Pt& va = vp[e];
                const Pt& vb = vp[(e + 1) % vp.size()];
                Rat den = dir.x * (vb.y - va.y) - dir.y * (vb.x - va.x);
                Rat acx = va.x - fam.center.x, acy = va.y - fam.center.y;
                if (sgn(den) == 0) continue;
                Rat tt = (acx * (vb.y - va.y) - acy * (vb.x - va.x)) / den;
                Rat uu = (acx * dir.y - acy * dir.x) / den;
                if (uu < 0 || uu > 1 || tt < t0 || tt > t1) continue;
                cut.push_back(tt);
            }
            std::sort(cut.begin(), cut.end());
            cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
            for (std::size_t k2 = 0; k2 + 1 < cut.size(); ++k2) {
                Rat tm = (cut[k2] + cut[k2 + 1]) / 2;
                Pt mid = fam.line_point(ch, tm);
                if (point_in_ring(mid, vp) == Loc::Outside) continue;
                if (detail_vis_sep::interval_within_half(fam.center, ch.target, cut[k2],
                                                         cut[k2 + 1], q))
                    return true;
            }
        }
        return false;
    };

    // local frame cells of the points
    auto in_grid = [&](const Pt& loc, long& cx, long& cy) {
        Rat sx = loc.x + Rat(m) / 2, sy = loc.y + Rat(m) / 2;
        cx = detail_vis_sep::exact_floor(sx);
        cy = detail_vis_sep::exact_floor(sy);
        return cx >= 0 && cx < m && cy >= 0 && cy < m;
    };

    // cells crossed by the chord pieces, with the piece parameter interval per cell
    std::map<std::pair<long, long>, std::vector<std::pair<Rat, Rat>>> crossed;
    {
        Pt gl = fam.local(ch.target);  // local direction of the line (center at origin)
        for (auto& [t0, t1] : ch.pieces) {
            // local coordinates along the piece: p(t) = t * gl (center is origin)
            std::vector<Rat> cuts{t0, t1};
            for (int axis = 0; axis < 2; ++axis) {
                Rat d = axis == 0 ? gl.x : gl.y;
                if (sgn(d) == 0) continue;
                for (int k2 = 0; k2 <= m; ++k2) {
                    Rat tc = (Rat(k2) - Rat(m) / 2) / d;  // grid line at local k2 - m/2
                    if (tc > t0 && tc < t1) cuts.push_back(tc);
                }
            }
            std::sort(cuts.begin(), cuts.end());
            cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
            for (std::size_t k2 = 0; k2 + 1 < cuts.size(); ++k2) {
                Rat tm = (cuts[k2] + cuts[k2 + 1]) / 2;
                Pt lm(gl.x * tm + Rat(m) / 2, gl.y * tm + Rat(m) / 2);
                long cx = detail_vis_sep::exact_floor(lm.x);
                long cy = detail_vis_sep::exact_floor(lm.y);
                if (cx < 0 || cx >= m || cy < 0 || cy >= m) continue;
                auto& list = crossed[{cx, cy}];
                if (!list.empty() && list.back().second == cuts[k2])
                    list.back().second = cuts[k2 + 1];
                else
                    list.emplace_back(cuts[k2], cuts[k2 + 1]);
            }
        }
    }

    // entrance/non-entrance accounting (holes mode): per cell, the piece with
    // the smallest parameter is the entrance piece
    for (auto& [cell, list] : crossed) {
        (void)cell;
        // count maximal runs as pieces
        int pieces = static_cast<int>(list.size());
        ChordFamily::Chord& mut = const_cast<ChordFamily::Chord&>(ch);
        mut.entrance_pieces += 1;
        mut.non_entrance_pieces += pieces - 1;
    }

    // members and their grouping
    std::vector<char> used(inst.points.size(), 0);
    auto point_local = [&](int qi) { return fam.local(inst.points[qi]); };

    for (int qi : q2) {
        if (!member(qi)) continue;
        Pt loc = point_local(qi);
        long cx, cy;
        if (!in_grid(loc, cx, cy)) {
            out.cliques.push_back({qi});  // outside the grid: singleton
            used[qi] = 1;
        }
    }
    // inside the grid: per crossed cell T and neighbour cell T', quartered groups
    std::map<std::tuple<long, long, long, long>, std::vector<int>> groups;
    for (int qi : q2) {
        if (used[qi]) continue;
        Pt loc = point_local(qi);
        long cx, cy;
        if (!in_grid(loc, cx, cy)) continue;
        // find a crossed cell T in the 3x3 neighbourhood such that q sees a
        // point of s_i ∩ T within 1/2
        bool placed = false;
        for (long dx = -1; dx <= 1 && !placed; ++dx)
            for (long dy = -1; dy <= 1 && !placed; ++dy) {
                auto it = crossed.find({cx + dx, cy + dy});
                if (it == crossed.end()) continue;
                for (auto& [t0, t1] : it->second) {
                    // membership restricted to this sub-interval
                    const Pt& q = inst.points[qi];
                    Pt a = fam.line_point(ch, t0), b = fam.line_point(ch, t1);
                    if (point_segment_dist2(q, a, b) > Rat(1, 4)) continue;
                    bool sees_piece = false;
                    if (convex) {
                        sees_piece = detail_vis_sep::interval_within_half(fam.center, ch.target,
                                                                          t0, t1, q);
                    } else {
                        Ring& vp = (*vis_cache)[qi];
                        if (vp.empty()) vp = visibility_polygon(q, inst.polygon);
                        std::vector<Rat> cut{t0, t1};
                        Pt dir(ch.target.x - fam.center.x, ch.target.y - fam.center.y);
                        for (std::size_t e = 0; e < vp.size(); ++e) {
                            const Pt& va = vp[e];
                            const Pt& vb = vp[(e + 1) % vp.size()];
                            Rat den = dir.x * (vb.y - va.y) - dir.y * (vb.x - va.x);
                            Rat acx = va.x - fam.center.x, acy = va.y - fam.center.y;
                            if (sgn(den) == 0) continue;
                            Rat tt = (acx * (vb.y - va.y) - acy * (vb.x - va.x)) / den;
                            Rat uu = (acx * dir.y - acy * dir.x) / den;
                            if (uu < 0 || uu > 1 || tt < t0 || tt > t1) continue;
                            cut.push_back(tt);
                        }
                        std::sort(cut.begin(), cut.end());
                        cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
                        for (std::size_t k2 = 0; k2 + 1 < cut.size() && !sees_piece; ++k2) {
                            Rat tm = (cut[k2] + cut[k2 + 1]) / 2;
                            if (point_in_ring(fam.line_point(ch, tm), vp) == Loc::Outside)
                                continue;
                            sees_piece = detail_vis_sep::interval_within_half(
                                fam.center, ch.target, cut[k2], cut[k2 + 1], q);
                        }
                    }
                    if (!sees_piece) continue;
                    // quartered subcell of the point's own cell
                    long sx = detail_vis_sep::exact_floor((loc.x + Rat(m) / 2) * 2);
                    long sy = detail_vis_sep::exact_floor((loc.y + Rat(m) / 2) * 2);
                    groups[{cx + dx, cy + dy, sx, sy}].push_back(qi);
                    used[qi] = 1;
                    placed = true;
                    break;
                }
            }
    }
    for (auto& [key, members] : groups) {
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                const Pt &pa = inst.points[members[a]], &pb = inst.points[members[b]];
                if (dist2(pa, pb) > 1 || !sees(pa, pb, inst.polygon))
                    throw std::runtime_error("chord clique verification failed");
            }
        out.cliques.push_back(members);
    }
    for (int qi : q2)
        if (!used[qi]) out.residual.push_back(qi);
    for (const auto& c2 : out.cliques) out.weight += std::log2(static_cast<double>(c2.size()) + 1);
    return out;
}

// Sides of the residual points relative to the chord (simple mode: the two
// half-polygons; holes mode: strictly above/below the full line).
inline bool chord_split(const VisInstance& inst, const ChordFamily& fam, int chord_id,
                        const std::vector<int>& residual, bool holes_mode, std::vector<int>& a,
                        std::vector<int>& b) {
    const auto& ch = fam.chords[chord_id];
    a.clear();
    b.clear();
    if (holes_mode) {
        for (int qi : residual) {
            int o = orient(fam.center, ch.target, inst.points[qi]);
            if (o > 0)
                a.push_back(qi);
            else
                b.push_back(qi);
        }
        return true;
    }
    // simple polygon: split the outer ring at the chord endpoints
    const auto& piece = ch.pieces.front();
    Pt z1 = fam.line_point(ch, piece.first);
    Pt z2 = fam.line_point(ch, piece.second);
    const Ring& outer = inst.polygon.outer;
    std::size_t n = outer.size();
    // insert z1/z2 into the ring walk
    std::vector<Pt> walk;
    for (std::size_t i = 0; i < n; ++i) {
        const Pt& u = outer[i];
        const Pt& v = outer[(i + 1) % n];
        walk.push_back(u);
        std::vector<Pt> hits;
        for (const Pt* z : {&z1, &z2})
            if (*z != u && *z != v && on_segment(*z, u, v)) hits.push_back(*z);
        if (hits.size() == 2 && dist2(u, hits[0]) > dist2(u, hits[1])) std::swap(hits[0], hits[1]);
        for (const Pt& h : hits) walk.push_back(h);
    }
    std::size_t i1 = walk.size(), i2 = walk.size();
    for (std::size_t i = 0; i < walk.size(); ++i) {
        if (walk[i] == z1) i1 = i;
        if (walk[i] == z2) i2 = i;
    }
    if (i1 == walk.size() || i2 == walk.size()) return false;
    if (i1 > i2) std::swap(i1, i2);
    Ring half1(walk.begin() + i1, walk.begin() + i2 + 1);
    Ring half2;
    for (std::size_t i = i2; i < walk.size(); ++i) half2.push_back(walk[i]);
    for (std::size_t i = 0; i <= i1; ++i) half2.push_back(walk[i]);
    for (int qi : residual) {
        Loc l1 = point_in_ring(inst.points[qi], half1);
        if (l1 != Loc::Outside)
            a.push_back(qi);
        else
            b.push_back(qi);
    }
    return true;
}

// Full separator: reflex cliques plus the lightest balanced chord family.
inline CliqueSeparator vis_separator(const VisInstance& inst,
                                     const std::vector<Rat>* weights = nullptr,
                                     VisSeparatorTrace* trace = nullptr) {
    inst.validate();
    CliqueSeparator out;
    int n = static_cast<int>(inst.points.size());
    if (n == 0) return out;

    ReflexCliques rc = reflex_cliques(inst);
    for (auto& c : rc.cliques) out.cliques.push_back(c);
    if (rc.q2.empty()) {
        out.dedupe();
        return out;
    }

    bool holes_mode = !inst.polygon.holes.empty();
    std::vector<Pt> q2pts;
    std::vector<Rat> q2w;
    for (int qi : rc.q2) {
        q2pts.push_back(inst.points[qi]);
        q2w.push_back(weights ? (*weights)[qi] : Rat(1));
    }
    Pt c = planar_centerpoint(q2pts, weights ? &q2w : nullptr);
    int m = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    while (m * m < n) ++m;
    ChordFamily fam = build_chords(inst.polygon, c, m, holes_mode);

    std::vector<Ring> vis_cache(inst.points.size());
    int best = -1;
    ChordCliques best_cc;
    std::vector<int> best_a, best_b;
    Rat q2total = 0;
    for (const Rat& x : q2w) q2total += x;
    std::vector<double> all_weights;
    for (std::size_t i = 0; i < fam.chords.size(); ++i) {
        ChordCliques cc =
            chord_cliques(inst, fam, static_cast<int>(i), rc.q2, holes_mode, &vis_cache);
        all_weights.push_back(cc.weight);
        std::vector<int> a, b;
        if (!chord_split(inst, fam, static_cast<int>(i), cc.residual, holes_mode, a, b)) continue;
        Rat wa = 0, wb = 0;
        for (int qi : a) wa += weights ? (*weights)[qi] : Rat(1);
        for (int qi : b) wb += weights ? (*weights)[qi] : Rat(1);
        bool balanced = wa * 3 <= q2total * 2 && wb * 3 <= q2total * 2;
        if (!balanced) continue;
        if (best == -1 || cc.weight < best_cc.weight) {
            best = static_cast<int>(i);
            best_cc = std::move(cc);
            best_a = std::move(a);
            best_b = std::move(b);
        }
    }
    if (best == -1) throw std::runtime_error("no balanced chord found");
    for (auto& c2 : best_cc.cliques) out.cliques.push_back(std::move(c2));
    out.side_a = std::move(best_a);
    out.side_b = std::move(best_b);
    out.dedupe();
    if (trace) {
        trace->family = fam;
        trace->chord_weights = all_weights;
        trace->chosen = best;
    }
    return out;
}

// ---------------------------------------------------------------------------
// comb-shaped lower-bound instance (r/2 top and r/2 bottom teeth; clusters see
// the whole far side but not each other)

inline VisInstance gen_comb_lower_bound(int r, int n) {
    if (r < 2 || r % 2 != 0 || n < r)
        throw std::invalid_argument("comb generator needs even r >= 2 and n >= r");
    VisInstance inst;
    int r2 = r / 2;
    // slot pitch: a decimal number <= 3/(5 r2)
    Rat pitch = 0;
    {
        long denom = 10;
        while (true) {
            BigInt num = (BigInt(3) * denom) / (5 * r2);
            if (num > 0) {
                pitch = Rat(num, denom);
                pitch.canonicalize();
                break;
            }
            denom *= 10;
        }
    }
    Rat W = pitch * r2;
    Rat H = rat_of(6, 10);
    Rat delta = pitch / 16;
    delta.canonicalize();

    // outer ring, counterclockwise: bottom side with notches, right, top side
    // with notches (right to left), left
    Ring ring;
    ring.push_back(Pt(Rat(0), Rat(0)));
    for (int i = 0; i < r2; ++i) {
        Rat x0 = pitch * i + pitch / 4;
        Rat x1 = pitch * i + pitch * 3 / 4;
        ring.push_back(Pt(x0, Rat(0)));
        ring.push_back(Pt(x0, -delta * 2));
        ring.push_back(Pt(x1, -delta * 2));
        ring.push_back(Pt(x1, Rat(0)));
    }
    ring.push_back(Pt(W, Rat(0)));
    ring.push_back(Pt(W, H));
    for (int i = r2 - 1; i >= 0; --i) {
        Rat x0 = pitch * i + pitch / 4;
        Rat x1 = pitch * i + pitch * 3 / 4;
        ring.push_back(Pt(x1, H));
        ring.push_back(Pt(x1, H + delta * 2));
        ring.push_back(Pt(x0, H + delta * 2));
        ring.push_back(Pt(x0, H));
    }
    ring.push_back(Pt(Rat(0), H));
    inst.polygon.outer = ring;

    // clusters: floor(n/r) points per notch, spread along the notch interior
    // with a decimal step so all coordinates stay exactly representable
    int per = n / r;
    Rat step;
    {
        BigInt extra = 10;
        while (extra < 8 * std::max(per, 1)) extra *= 10;
        BigInt D = pitch.get_den() * extra;
        BigInt num = (pitch.get_num() * extra) / (4 * std::max(per, 1));
        step = Rat(num, D);
        step.canonicalize();
    }
    auto cluster = [&](int slot, bool top) {
        Rat xc = pitch * slot + pitch / 2;
        for (int k = 0; k < per; ++k) {
            Rat dx = (Rat(k) - Rat(per - 1) / 2) * step;
            Rat jitter = delta * (k % 2) / 4;
            Rat y = top ? Rat(H + delta + jitter) : Rat(-delta - jitter);
            inst.points.push_back(Pt(xc + dx, y));
        }
    };
    for (int i = 0; i < r2; ++i) cluster(i, true);
    for (int i = 0; i < r2; ++i) cluster(i, false);
    inst.validate();
    return inst;
}

}  // namespace cliquesep
