#pragma once

// Geodesic shortest paths and geodesic disks in a simple polygon. Paths come
// from the funnel algorithm over an ear-clipping triangulation; a visibility
// graph Dijkstra serves as the independent oracle. Path lengths are sums of
// square roots of rationals, compared through high-precision floats with a
// certified margin.

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <unordered_map>
#include <vector>

#include "cliquesep/support.hpp"
#include "cliquesep/visibility.hpp"

namespace cliquesep {

// ---------------------------------------------------------------------------
// length algebra: sums of sqrt of rationals at 256-bit precision

struct GeoLength {
    std::vector<Rat> sq_legs;  // squared segment lengths along the path

    void add_leg(const Pt& a, const Pt& b) {
        Rat d2 = dist2(a, b);
        if (sgn(d2) != 0) sq_legs.push_back(d2);
    }
    bool zero() const { return sq_legs.empty(); }
};

namespace detail_geo {

constexpr int kPrec = 256;

inline mpf_class sqrt_sum(const std::vector<Rat>& sq, int prec = kPrec) {
    mpf_class acc(0, prec);
    for (const Rat& s : sq) {
        mpf_class f(s, prec);
        acc += sqrt(f);
    }
    return acc;
}

inline mpf_class compare_margin() {
    mpf_class m(1, kPrec);
    m >>= 180;
    return m;
}

}  // namespace detail_geo

// sign of (len - rhs); 0 means equal within the certified margin
inline int geo_compare(const GeoLength& len, const Rat& rhs) {
    mpf_class v = detail_geo::sqrt_sum(len.sq_legs);
    mpf_class w(rhs, detail_geo::kPrec);
    mpf_class d = v - w;
    mpf_class m = detail_geo::compare_margin();
    if (d > m) return 1;
    if (d < -m) return -1;
    return 0;
}

inline int geo_compare(const GeoLength& a, const GeoLength& b) {
    mpf_class d = detail_geo::sqrt_sum(a.sq_legs) - detail_geo::sqrt_sum(b.sq_legs);
    mpf_class m = detail_geo::compare_margin();
    if (d > m) return 1;
    if (d < -m) return -1;
    return 0;
}

inline double geo_value(const GeoLength& len) {
    return detail_geo::sqrt_sum(len.sq_legs).get_d();
}

// ---------------------------------------------------------------------------
// triangulation of a simple polygon (ear clipping, exact predicates)

struct PolyTriangulation {
    std::vector<std::array<int, 3>> tris;  // vertex indices, ccw
};

inline PolyTriangulation triangulate_simple_polygon(const Ring& ring) {
    PolyTriangulation out;
    std::size_t n = ring.size();
    if (n < 3) throw std::invalid_argument("polygon too small");
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    if (!ring_is_ccw(ring)) std::reverse(idx.begin(), idx.end());

    auto is_ear = [&](int ia, int ib, int ic) {
        const Pt &a = ring[ia], &b = ring[ib], &c = ring[ic];
        if (orient(a, b, c) <= 0) return false;
        for (int j : idx) {
            if (j == ia || j == ib || j == ic) continue;
            const Pt& p = ring[j];
            if (orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0) return false;
        }
        return true;
    };
    while (idx.size() > 3) {
        bool clipped = false;
        for (std::size_t k = 0; k < idx.size(); ++k) {
            int ia = idx[(k + idx.size() - 1) % idx.size()];
            int ib = idx[k];
            int ic = idx[(k + 1) % idx.size()];
            if (is_ear(ia, ib, ic)) {
                out.tris.push_back({ia, ib, ic});
                idx.erase(idx.begin() + k);
                clipped = true;
                break;
            }
        }
        if (!clipped) throw std::runtime_error("ear clipping failed (polygon not simple?)");
    }
    out.tris.push_back({idx[0], idx[1], idx[2]});
    return out;
}

// ---------------------------------------------------------------------------
// funnel shortest path

struct GeodesicPath {
    std::vector<Pt> chain;  // p, bends (reflex vertices), q

    GeoLength length() const {
        GeoLength l;
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) l.add_leg(chain[i], chain[i + 1]);
        return l;
    }
};

namespace detail_geo {

struct TriGraph {
    const Ring* ring = nullptr;
    PolyTriangulation tri;
    std::vector<std::vector<std::pair<int, std::pair<int, int>>>> adj;  // tri -> (tri, portal)

    void build(const Ring& r) {
        ring = &r;
        tri = triangulate_simple_polygon(r);
        std::map<std::pair<int, int>, std::vector<int>> by_edge;
        for (std::size_t t = 0; t < tri.tris.size(); ++t)
            for (int e = 0; e < 3; ++e) {
                int u = tri.tris[t][e], v = tri.tris[t][(e + 1) % 3];
                by_edge[std::minmax(u, v)].push_back(static_cast<int>(t));
            }
        adj.assign(tri.tris.size(), {});
        for (auto& [edge, ts] : by_edge) {
            if (ts.size() != 2) continue;
            adj[ts[0]].push_back({ts[1], edge});
            adj[ts[1]].push_back({ts[0], edge});
        }
    }

    bool point_in_tri(const Pt& p, int t) const {
        const auto& T = tri.tris[t];
        return orient((*ring)[T[0]], (*ring)[T[1]], p) >= 0 &&
               orient((*ring)[T[1]], (*ring)[T[2]], p) >= 0 &&
               orient((*ring)[T[2]], (*ring)[T[0]], p) >= 0;
    }

    int locate(const Pt& p) const {
        for (std::size_t t = 0; t < tri.tris.size(); ++t)
            if (point_in_tri(p, static_cast<int>(t))) return static_cast<int>(t);
        return -1;
    }
};

}  // namespace detail_geo

// Reusable polygon frame: triangulating once covers all path queries.
struct GeodesicFrame {
    Ring polygon;
    detail_geo::TriGraph tg;
    explicit GeodesicFrame(Ring ring) : polygon(std::move(ring)) { tg.build(polygon); }
};

// Shortest path between two points of a simple polygon (funnel algorithm over
// the triangulation dual).
inline GeodesicPath geodesic_path(const Pt& p, const Pt& q, const GeodesicFrame& frame) {
    const Ring& polygon = frame.polygon;
    if (point_in_ring(p, polygon) == Loc::Outside || point_in_ring(q, polygon) == Loc::Outside)
        throw std::invalid_argument("geodesic_path: endpoint outside polygon");
    GeodesicPath path;
    if (p == q) {
        path.chain = {p};
        return path;
    }
    const detail_geo::TriGraph& tg = frame.tg;
    int tp = tg.locate(p), tq = tg.locate(q);
    if (tp < 0 || tq < 0) throw std::logic_error("point location failed");

    std::vector<int> prev(tg.tri.tris.size(), -2);
    std::vector<std::pair<int, int>> portal_to(tg.tri.tris.size(), {-1, -1});
    std::queue<int> bfs;
    bfs.push(tp);
    prev[tp] = -1;
    while (!bfs.empty()) {
        int t = bfs.front();
        bfs.pop();
        for (auto& [t2, portal] : tg.adj[t])
            if (prev[t2] == -2) {
                prev[t2] = t;
                portal_to[t2] = portal;
                bfs.push(t2);
            }
    }

    // portals from p's triangle to q's, oriented (left, right) as seen walking
    // out of the exited triangle: crossing the ccw edge (a -> b) puts b on the
    // traveller's left
    std::vector<std::pair<Pt, Pt>> portals;  // (left, right)
    {
        std::vector<int> tri_path;
        for (int t = tq; t != -1; t = prev[t]) tri_path.push_back(t);
        std::reverse(tri_path.begin(), tri_path.end());
        for (std::size_t k = 1; k < tri_path.size(); ++k) {
            int exited = tri_path[k - 1];
            auto [u, v] = portal_to[tri_path[k]];
            const auto& T = tg.tri.tris[exited];
            int a = -1, b = -1;
            for (int e = 0; e < 3; ++e) {
                int s = T[e], t2 = T[(e + 1) % 3];
                if ((s == u && t2 == v) || (s == v && t2 == u)) {
                    a = s;
                    b = t2;
                }
            }
            if (a < 0) throw std::logic_error("portal not on exited triangle");
            portals.emplace_back(polygon[b], polygon[a]);  // left = b, right = a
        }
        portals.emplace_back(q, q);
    }

    // funnel scan with exact orientation tests: the funnel is the wedge
    // between rays apex->pl (left) and apex->pr (right)
    std::vector<Pt> chain{p};
    Pt apex = p, pl = p, pr = p;
    std::size_t apex_i = 0, left_i = 0, right_i = 0;
    for (std::size_t i = 0; i < portals.size(); ++i) {
        const Pt& left = portals[i].first;
        const Pt& right = portals[i].second;
        // right boundary moves ccw-inward when the candidate is left of it
        if (pr == apex || orient(apex, pr, right) >= 0) {
            if (pr == apex || pl == apex || orient(apex, pl, right) < 0) {
                pr = right;
                right_i = i;
            } else {
                // right crossed the left boundary: the apex advances to pl
                if (chain.back() != pl) chain.push_back(pl);
                apex = pl;
                apex_i = left_i;
                pl = apex;
                pr = apex;
                left_i = right_i = apex_i;
                i = apex_i;
                continue;
            }
        }
        // left boundary moves cw-inward when the candidate is right of it
        if (pl == apex || orient(apex, pl, left) <= 0) {
            if (pl == apex || pr == apex || orient(apex, pr, left) > 0) {
                pl = left;
                left_i = i;
            } else {
                if (chain.back() != pr) chain.push_back(pr);
                apex = pr;
                apex_i = right_i;
                pl = apex;
                pr = apex;
                left_i = right_i = apex_i;
                i = apex_i;
                continue;
            }
        }
    }
    if (chain.back() != q) chain.push_back(q);

    // drop exact collinear interior bends
    std::vector<Pt> cleaned;
    for (const Pt& pt : chain) {
        while (cleaned.size() >= 2 &&
               orient(cleaned[cleaned.size() - 2], cleaned.back(), pt) == 0 &&
               dot(cleaned.back(), cleaned[cleaned.size() - 2], pt) <= 0)
            cleaned.pop_back();
        if (cleaned.empty() || cleaned.back() != pt) cleaned.push_back(pt);
    }
    path.chain = std::move(cleaned);
    return path;
}

inline GeodesicPath geodesic_path(const Pt& p, const Pt& q, const Ring& polygon) {
    return geodesic_path(p, q, GeodesicFrame(polygon));
}

// Independent oracle: Dijkstra over the visibility graph of the polygon
// vertices plus the two endpoints.
inline GeodesicPath geodesic_path_dijkstra(const Pt& p, const Pt& q, const Ring& polygon) {
    PolygonWithHoles poly;
    poly.outer = polygon;
    std::vector<Pt> nodes{p, q};
    for (const Pt& v : polygon) nodes.push_back(v);
    std::size_t n = nodes.size();
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (nodes[i] == nodes[j]) continue;
            if (sees(nodes[i], nodes[j], poly)) {
                double w = std::sqrt(rat_to_double(dist2(nodes[i], nodes[j])));
                adj[i].push_back({j, w});
                adj[j].push_back({i, w});
            }
        }
    std::vector<double> dist(n, 1e300);
    std::vector<int> from(n, -1);
    using QE = std::pair<double, std::size_t>;
    std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
    dist[0] = 0;
    pq.push({0, 0});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u]) continue;
        for (auto& [v, w] : adj[u])
            if (dist[u] + w < dist[v]) {
                dist[v] = dist[u] + w;
                from[v] = static_cast<int>(u);
                pq.push({dist[v], v});
            }
    }
    GeodesicPath path;
    std::vector<Pt> rev;
    for (int v = 1; v != -1; v = from[v]) rev.push_back(nodes[v]);
    std::reverse(rev.begin(), rev.end());
    path.chain = std::move(rev);
    return path;
}

inline GeoLength geodesic_distance(const Pt& p, const Pt& q, const Ring& polygon) {
    return geodesic_path(p, q, polygon).length();
}

inline GeoLength geodesic_distance(const Pt& p, const Pt& q, const GeodesicFrame& frame) {
    return geodesic_path(p, q, frame).length();
}

// ---------------------------------------------------------------------------
// geodesic disks

struct GeodesicDisk {
    Pt center;
    Rat radius;
    PolygonalRegion boundary_approx;
    double approx_tolerance = 0;
};

// Disks meet iff the geodesic distance between centers is at most the radius
// sum (geodesic disks are geodesically convex). Numeric ties count as touching
// since the objects are closed.
inline Graph geodisk_graph(const std::vector<Pt>& centers, const std::vector<Rat>& radii,
                           const Ring& polygon) {
    GeodesicFrame frame(polygon);
    std::size_t n = centers.size();
    Graph g(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            GeoLength d = geodesic_distance(centers[i], centers[j], frame);
            if (geo_compare(d, radii[i] + radii[j]) <= 0)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    g.finalize();
    return g;
}

namespace detail_geo {

inline Pt snap_point(double x, double y) {
    const long denom = 1 << 20;
    return Pt(rat_of(std::llround(x * denom), denom), rat_of(std::llround(y * denom), denom));
}

inline double angle_of(const Pt& from, const Pt& to) {
    return std::atan2(rat_to_double(to.y - from.y), rat_to_double(to.x - from.x));
}

}  // namespace detail_geo

// Polyline approximation of the geodesic disk D(center, radius). The boundary
// is traced over the shortest-path map: per shortest-path-tree node, the part
// of the circle of the residual radius that is visible, with polygon boundary
// parts where the polygon is closer, and recursive pockets behind reflex
// bends. Arcs are sampled with sagitta at most tol, rounded inward.
inline GeodesicDisk geodisk_region(const Pt& center, const Rat& radius, const Ring& polygon,
                                   double tol) {
    if (point_in_ring(center, polygon) == Loc::Outside)
        throw std::invalid_argument("geodisk_region: center outside polygon");
    GeodesicDisk disk;
    disk.center = center;
    disk.radius = radius;
    disk.approx_tolerance = tol;

    GeodesicFrame frame(polygon);
    // whole-polygon short circuit: all vertices and all wall feet in range
    {
        bool whole = true;
        for (const Pt& v : polygon) {
            if (geo_compare(geodesic_distance(center, v, frame), radius) > 0) {
                whole = false;
                break;
            }
        }
        if (whole) {
            for (const Pt& v : polygon) {
                GeodesicPath path = geodesic_path(center, v, frame);
                if (path.chain.size() < 2) continue;
                const Pt& bend = path.chain.back();
                const Pt& pre = path.chain[path.chain.size() - 2];
                Pt dir(bend.x - pre.x, bend.y - pre.y);
                std::optional<std::pair<Rat, Pt>> best;
                for (std::size_t e = 0; e < polygon.size(); ++e) {
                    auto h = detail_vis::ray_segment(bend, dir, polygon[e],
                                                     polygon[(e + 1) % polygon.size()]);
                    if (!h || sgn(h->first) <= 0) continue;
                    if (!best || h->first < best->first) best = h;
                }
                if (!best) continue;
                GeoLength d = path.length();
                d.add_leg(bend, best->second);
                if (geo_compare(d, radius) > 0) {
                    whole = false;
                    break;
                }
            }
        }
        if (whole) {
            disk.boundary_approx.boundary = polygon;
            disk.boundary_approx.normalize();
            return disk;
        }
    }

    PolygonWithHoles poly;
    poly.outer = polygon;
    std::unordered_map<std::string, Ring> vp_cache;
    auto vp = [&](const Pt& at) -> const Ring& {
        auto it = vp_cache.find(pt_key(at));
        if (it != vp_cache.end()) return it->second;
        return vp_cache.emplace(pt_key(at), visibility_polygon(at, poly)).first->second;
    };

    Ring out;
    auto emit = [&](const Pt& p) {
        if (out.empty() || out.back() != p) out.push_back(p);
    };
    auto emit_arc = [&](const Pt& v, double rho, double a0, double a1) {
        if (rho <= tol * 0.25) {
            emit(v);
            return;
        }
        // keep a hair away from the cone ends so rounded samples cannot cross
        // a polygon edge that runs along the cone boundary
        double guard = std::min(1e-7, (a1 - a0) / 256);
        a0 += guard;
        a1 -= guard;
        double span = a1 - a0;
        if (span <= 0) return;
        double max_step = 2.0 * std::acos(std::max(0.0, std::min(1.0, 1.0 - tol / (2.0 * rho))));
        if (max_step <= 1e-4 || !std::isfinite(max_step)) max_step = 0.3;
        int steps = std::max(1, static_cast<int>(std::ceil(span / max_step)));
        double vr = rho - tol * 0.25;
        if (vr <= 0) vr = rho * 0.5;
        double vx = rat_to_double(v.x), vy = rat_to_double(v.y);
        for (int k = 0; k <= steps; ++k) {
            double a = a0 + span * k / steps;
            double rr = vr;
            for (int pull = 0; pull < 5; ++pull, rr -= tol * 0.25) {
                if (rr <= 0) break;
                Pt cand = detail_geo::snap_point(vx + rr * std::cos(a), vy + rr * std::sin(a));
                if (point_in_ring(cand, polygon) != Loc::Outside) {
                    emit(cand);
                    break;
                }
            }
        }
    };

    double two_pi = 2 * M_PI;

    // trace the disk boundary within the ccw cone [a_from, a_from+span) around
    // apex; budget is the residual radius there
    std::function<void(const Pt&, double, double, double, int)> trace =
        [&](const Pt& apex, double budget, double a_from, double span, int depth) {
            if (depth > static_cast<int>(polygon.size()) + 4) return;
            if (budget <= tol * 0.25) {
                emit(apex);
                return;
            }
            const Ring& vis = vp(apex);
            std::size_t m = vis.size();
            auto norm = [&](double a) {
                while (a < a_from - 1e-12) a += two_pi;
                while (a >= a_from + two_pi - 1e-12) a -= two_pi;
                return a;
            };

            struct Item {
                double a0, a1;  // normalized angular interval
                std::size_t edge;
                bool window;
            };
            std::vector<Item> items;
            for (std::size_t i = 0; i < m; ++i) {
                const Pt& x = vis[i];
                const Pt& y = vis[(i + 1) % m];
                if (x == apex || y == apex) continue;
                bool window = orient(apex, x, y) == 0;
                double e0 = norm(detail_geo::angle_of(apex, x));
                if (window) {
                    if (e0 <= a_from + span + 1e-12)
                        items.push_back({e0, e0, i, true});
                    continue;
                }
                double raw1 = detail_geo::angle_of(apex, y);
                double e1 = raw1;
                while (e1 < e0 - 1e-12) e1 += two_pi;
                if (e1 - e0 > M_PI) continue;  // guard against inverted edges
                double c0 = std::max(e0, a_from);
                double c1 = std::min(e1, a_from + span);
                if (c1 <= c0 + 1e-12) continue;
                items.push_back({c0, c1, i, false});
            }
            std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
                if (a.a0 != b.a0) return a.a0 < b.a0;
                return a.a1 < b.a1;
            });

            for (const Item& item : items) {
                const Pt& x = vis[item.edge];
                const Pt& y = vis[(item.edge + 1) % m];
                if (item.window) {
                    bool x_near = dist2(apex, x) < dist2(apex, y);
                    const Pt& b = x_near ? x : y;
                    double db = std::sqrt(rat_to_double(dist2(apex, b)));
                    if (db >= budget) continue;
                    // the blocking vertex must be a polygon vertex; its hidden
                    // incident edge is the one not reached by the visible ring
                    std::size_t bi = polygon.size();
                    for (std::size_t k = 0; k < polygon.size(); ++k)
                        if (polygon[k] == b) bi = k;
                    if (bi == polygon.size()) continue;
                    const Pt& prev = polygon[(bi + polygon.size() - 1) % polygon.size()];
                    const Pt& next = polygon[(bi + 1) % polygon.size()];
                    // ring neighbour of b on the visible side
                    const Pt& nb = x_near ? vis[(item.edge + m - 1) % m] : vis[(item.edge + 2) % m];
                    const Pt* hidden;
                    if (on_segment(nb, prev, b))
                        hidden = &next;
                    else if (on_segment(nb, b, next))
                        hidden = &prev;
                    else
                        continue;  // degenerate window; skip
                    double d_wall = detail_geo::angle_of(apex, b);  // continuation direction
                    double d_hidden = detail_geo::angle_of(b, *hidden);
                    double sub_budget = budget - db;
                    if (x_near) {
                        // ring passes b -> w: pocket is swept ccw from the hidden
                        // edge up to the window direction
                        double s = d_hidden, sp = d_wall - d_hidden;
                        while (sp < 0) sp += two_pi;
                        trace(b, sub_budget, s, sp, depth + 1);
                    } else {
                        double s = d_wall, sp = d_hidden - d_wall;
                        while (sp < 0) sp += two_pi;
                        trace(b, sub_budget, s, sp, depth + 1);
                    }
                    continue;
                }
                // regular edge portion [a0, a1]
                auto ray_hit = [&](double ang) -> std::optional<Pt> {
                    Pt dir(rat_of(std::llround(std::cos(ang) * (1 << 20)), 1 << 20),
                           rat_of(std::llround(std::sin(ang) * (1 << 20)), 1 << 20));
                    auto h = detail_vis::ray_segment(apex, dir, x, y);
                    if (!h) return std::nullopt;
                    return h->second;
                };
                double seg_min =
                    std::sqrt(std::max(0.0, rat_to_double(point_segment_dist2(apex, x, y))));
                if (seg_min >= budget) {
                    emit_arc(apex, budget, item.a0, item.a1);
                    continue;
                }
                // mixed walk in angular steps: polygon part where the edge is
                // nearer than the budget, arc part elsewhere
                double astep = std::max(0.02, std::sqrt(std::max(tol, 1e-9) / std::max(budget, 0.01)));
                int steps = std::max(1, static_cast<int>(std::ceil((item.a1 - item.a0) / astep)));
                int prev_mode = -1;
                double arc_start = item.a0;
                for (int k = 0; k <= steps; ++k) {
                    double ang = item.a0 + (item.a1 - item.a0) * k / steps;
                    auto hit = ray_hit(ang);
                    double dh = hit ? std::sqrt(rat_to_double(dist2(apex, *hit))) : 1e300;
                    int mode = dh <= budget ? 0 : 1;
                    if (mode == 0) {
                        if (prev_mode == 1) emit_arc(apex, budget, arc_start, ang);
                        if (hit) emit(*hit);
                    } else {
                        if (prev_mode != 1) arc_start = ang;
                        if (k == steps) emit_arc(apex, budget, arc_start, ang);
                    }
                    prev_mode = mode;
                }
            }
        };

    trace(center, rat_to_double(radius), -M_PI, two_pi, 0);

    if (out.size() >= 2 && out.front() == out.back()) out.pop_back();
    if (out.size() < 3) {
        double eps = std::max(tol * 0.25, 1e-6);
        double cx = rat_to_double(center.x), cy = rat_to_double(center.y);
        out = {detail_geo::snap_point(cx + eps, cy), detail_geo::snap_point(cx, cy + eps),
               detail_geo::snap_point(cx - eps, cy - eps)};
    }
    disk.boundary_approx.boundary = std::move(out);
    disk.boundary_approx.normalize();
    return disk;
}

// Separator for geodesic disks: approximate regions feed the pseudo-disk
// pipeline; the result must verify against the exact geodesic graph, else the
// tolerance is halved and the construction retried.
inline CliqueSeparator geodisk_separator(const std::vector<Pt>& centers,
                                         const std::vector<Rat>& radii, const Ring& polygon,
                                         double tol = 0, int max_retries = 4,
                                         const std::vector<Rat>* weights = nullptr) {
    Graph exact = geodisk_graph(centers, radii, polygon);
    std::size_t n = centers.size();
    std::string last;
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        std::vector<PolygonalRegion> regions;
        for (std::size_t i = 0; i < n; ++i) {
            double t = tol > 0 ? tol : rat_to_double(radii[i]) / 64.0;
            t /= (1 << attempt);
            GeodesicDisk d = geodisk_region(centers[i], radii[i], polygon, t);
            d.boundary_approx.id = static_cast<int>(i);
            regions.push_back(d.boundary_approx);
        }
        CliqueSeparator s = pseudodisk_separator(regions, std::nullopt, weights, /*force=*/true);
        VerifyReport rep = verify_separator(exact, s, static_cast<long>(n));
        if (rep.ok) return s;
        last = rep.violations.empty() ? "unknown" : rep.violations.front();
    }
    throw std::runtime_error("geodisk_separator: retries exhausted: " + last);
}

}  // namespace cliquesep
