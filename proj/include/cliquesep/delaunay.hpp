#pragma once

// Incremental Delaunay triangulation over integer sites (exact int128
// predicates), used by the Voronoi map generator. Desk-scale: point location
// by walking, cavity by search.

#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace cliquesep {

struct IntPt {
    long long x = 0, y = 0;
    bool operator==(const IntPt& o) const { return x == o.x && y == o.y; }
};

namespace detail_del {

using I128 = __int128;

inline int orient_i(const IntPt& a, const IntPt& b, const IntPt& c) {
    I128 v = static_cast<I128>(b.x - a.x) * (c.y - a.y) -
             static_cast<I128>(b.y - a.y) * (c.x - a.x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

// sign of the incircle determinant: > 0 iff d is strictly inside the
// circumcircle of ccw triangle abc
inline int incircle_i(const IntPt& a, const IntPt& b, const IntPt& c, const IntPt& d) {
    I128 adx = a.x - d.x, ady = a.y - d.y;
    I128 bdx = b.x - d.x, bdy = b.y - d.y;
    I128 cdx = c.x - d.x, cdy = c.y - d.y;
    I128 ad = adx * adx + ady * ady;
    I128 bd = bdx * bdx + bdy * bdy;
    I128 cd = cdx * cdx + cdy * cdy;
    // 3x3 determinant | adx ady ad ; bdx bdy bd ; cdx cdy cd |
    I128 det = adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) +
               ad * (bdx * cdy - bdy * cdx);
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

}  // namespace detail_del

struct Delaunay {
    std::vector<IntPt> pts;  // first 3 are the super-triangle
    struct Tri {
        std::array<int, 3> v;
        std::array<int, 3> nb;  // neighbor across edge (v[i], v[i+1]); -1 outside
        bool alive = true;
    };
    std::vector<Tri> tris;

    explicit Delaunay(const std::vector<IntPt>& sites, long long span) {
        long long m = 4 * span + 16;
        pts = {{-m, -m}, {3 * m, -m}, {-m, 3 * m}};
        tris.push_back({{0, 1, 2}, {-1, -1, -1}, true});
        for (const IntPt& s : sites) insert(s);
    }

    int locate(const IntPt& p) const {
        // walk from the most recent triangle
        int t = -1;
        for (int i = static_cast<int>(tris.size()) - 1; i >= 0; --i)
            if (tris[i].alive) {
                t = i;
                break;
            }
        for (int steps = 0; steps < static_cast<int>(tris.size()) + 8; ++steps) {
            const Tri& T = tris[t];
            bool moved = false;
            for (int e = 0; e < 3; ++e) {
                if (detail_del::orient_i(pts[T.v[e]], pts[T.v[(e + 1) % 3]], p) < 0) {
                    if (T.nb[e] < 0) throw std::runtime_error("delaunay walk left the hull");
                    t = T.nb[e];
                    moved = true;
                    break;
                }
            }
            if (!moved) return t;
        }
        // fallback scan
        for (std::size_t i = 0; i < tris.size(); ++i) {
            if (!tris[i].alive) continue;
            const Tri& T = tris[i];
            bool in = true;
            for (int e = 0; e < 3; ++e)
                if (detail_del::orient_i(pts[T.v[e]], pts[T.v[(e + 1) % 3]], p) < 0) in = false;
            if (in) return static_cast<int>(i);
        }
        throw std::runtime_error("delaunay location failed");
    }

    void insert(const IntPt& p) {
        for (const IntPt& q : pts)
            if (q == p) throw std::invalid_argument("duplicate site");
        int pid = static_cast<int>(pts.size());
        pts.push_back(p);
        // cavity: all triangles whose circumcircle strictly contains p
        int seed = locate(p);
        std::vector<int> cavity;
        std::vector<char> in_cavity(tris.size(), 0);
        std::vector<int> stack{seed};
        in_cavity[seed] = 1;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            cavity.push_back(t);
            for (int e = 0; e < 3; ++e) {
                int u = tris[t].nb[e];
                if (u < 0 || in_cavity[u]) continue;
                const Tri& U = tris[u];
                if (detail_del::incircle_i(pts[U.v[0]], pts[U.v[1]], pts[U.v[2]], p) > 0) {
                    in_cavity[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        // boundary edges of the cavity, walked in order
        struct BEdge {
            int a, b, outer;
        };
        std::vector<BEdge> boundary;
        for (int t : cavity)
            for (int e = 0; e < 3; ++e) {
                int u = tris[t].nb[e];
                if (u >= 0 && in_cavity[u]) continue;
                boundary.push_back({tris[t].v[e], tris[t].v[(e + 1) % 3], u});
            }
        for (int t : cavity) tris[t].alive = false;
        // fan of new triangles over the boundary
        std::vector<int> fresh;
        for (const BEdge& be : boundary) {
            Tri nt;
            nt.v = {be.a, be.b, pid};
            nt.nb = {be.outer, -1, -1};
            fresh.push_back(static_cast<int>(tris.size()));
            tris.push_back(nt);
        }
        // wire up neighbor links among the fresh fan and to the outside
        for (std::size_t i = 0; i < fresh.size(); ++i) {
            Tri& nt = tris[fresh[i]];
            if (nt.nb[0] >= 0) {
                Tri& out = tris[nt.nb[0]];
                for (int e = 0; e < 3; ++e)
                    if (out.v[e] == nt.v[1] && out.v[(e + 1) % 3] == nt.v[0])
                        out.nb[e] = fresh[i];
            }
            for (std::size_t j = 0; j < fresh.size(); ++j) {
                if (i == j) continue;
                Tri& ot = tris[fresh[j]];
                if (nt.v[1] == ot.v[0]) nt.nb[1] = fresh[j];
                if (ot.v[1] == nt.v[0]) nt.nb[2] = fresh[j];
            }
        }
    }

    // Delaunay neighbor site ids (>= 3 are real sites) per site id.
    std::vector<std::vector<int>> neighbors() const {
        std::vector<std::vector<int>> nb(pts.size());
        for (const Tri& t : tris) {
            if (!t.alive) continue;
            for (int e = 0; e < 3; ++e) {
                int a = t.v[e], b = t.v[(e + 1) % 3];
                nb[a].push_back(b);
                nb[b].push_back(a);
            }
        }
        for (auto& v : nb) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        }
        return nb;
    }
};

}  // namespace cliquesep
