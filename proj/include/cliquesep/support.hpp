#pragma once

// Clique-based separators from planar supports: stabbing points in arrangement
// faces, the dual graph as support, ply peeling above the n^(1/3) threshold,
// and the pseudo-disk entry point.

#include <cmath>
#include <optional>
#include <set>
#include <vector>

#include "cliquesep/arrangement.hpp"
#include "cliquesep/clique_separator.hpp"
#include "cliquesep/cycle_separator.hpp"
#include "cliquesep/graph.hpp"

namespace cliquesep {

namespace detail_support {

// conservative double bounding boxes per ring edge (pad covers conversion
// error, so it never excludes a true intersection)
struct SegBoxes {
    std::vector<double> x0, y0, x1, y1;
    explicit SegBoxes(const Ring& r) {
        std::size_t n = r.size();
        x0.resize(n);
        y0.resize(n);
        x1.resize(n);
        y1.resize(n);
        auto lo = [](double a, double b) { return std::min(a, b); };
        auto hi = [](double a, double b) { return std::max(a, b); };
        for (std::size_t i = 0; i < n; ++i) {
            double ax = rat_to_double(r[i].x), ay = rat_to_double(r[i].y);
            double bx = rat_to_double(r[(i + 1) % n].x), by = rat_to_double(r[(i + 1) % n].y);
            double pad = 1e-9 * (std::abs(ax) + std::abs(ay) + std::abs(bx) + std::abs(by) + 1);
            x0[i] = lo(ax, bx) - pad;
            y0[i] = lo(ay, by) - pad;
            x1[i] = hi(ax, bx) + pad;
            y1[i] = hi(ay, by) + pad;
        }
    }
    bool maybe(const SegBoxes& o, std::size_t i, std::size_t j) const {
        return !(x1[i] < o.x0[j] || o.x1[j] < x0[i] || y1[i] < o.y0[j] || o.y1[j] < y0[i]);
    }
};

}  // namespace detail_support

// Exact polygon-polygon intersection test (closed regions): boundaries meet or
// one contains the other.
inline bool regions_intersect(const PolygonalRegion& a, const PolygonalRegion& b) {
    if (!ring_bbox(a.boundary).overlaps(ring_bbox(b.boundary))) return false;
    detail_support::SegBoxes ba(a.boundary), bb(b.boundary);
    for (std::size_t i = 0; i < a.boundary.size(); ++i)
        for (std::size_t j = 0; j < b.boundary.size(); ++j) {
            if (!ba.maybe(bb, i, j)) continue;
            SegIntersection is = seg_intersect(
                a.boundary[i], a.boundary[(i + 1) % a.boundary.size()], b.boundary[j],
                b.boundary[(j + 1) % b.boundary.size()]);
            if (is.kind != SegIntersection::None) return true;
        }
    if (point_in_ring(a.boundary[0], b.boundary) != Loc::Outside) return true;
    if (point_in_ring(b.boundary[0], a.boundary) != Loc::Outside) return true;
    return false;
}

// Number of proper boundary crossings between two rings.
inline int boundary_crossings(const Ring& a, const Ring& b) {
    detail_support::SegBoxes ba(a), bb(b);
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!ba.maybe(bb, i, j)) continue;
            if (segments_cross_properly(a[i], a[(i + 1) % a.size()], b[j], b[(j + 1) % b.size()]))
                ++c;
        }
    return c;
}

// Exact intersection graph of polygonal objects (ids = positions in the list).
inline Graph build_object_graph(const std::vector<PolygonalRegion>& objects) {
    int n = static_cast<int>(objects.size());
    Graph g(n);
    std::vector<BBox> bb(n);
    double extent = 1.0;
    {
        BBox all;
        for (int i = 0; i < n; ++i) {
            bb[i] = ring_bbox(objects[i].boundary);
            all.add(Pt(bb[i].xmin, bb[i].ymin));
            all.add(Pt(bb[i].xmax, bb[i].ymax));
        }
        if (!all.empty)
            extent = std::max(rat_to_double(all.xmax - all.xmin),
                              rat_to_double(all.ymax - all.ymin)) /
                     std::max(1.0, std::sqrt(static_cast<double>(n)));
        if (extent <= 0) extent = 1.0;
    }
    BucketGrid grid(extent);
    for (int i = 0; i < n; ++i) grid.insert(i, bb[i]);
    for (int i = 0; i < n; ++i)
        for (int j : grid.query(bb[i])) {
            if (j <= i) continue;
            if (regions_intersect(objects[i], objects[j])) g.add_edge(i, j);
        }
    g.finalize();
    return g;
}

// Repeatedly removes the heaviest-ply clique while some arrangement face is
// contained in more than `threshold` objects. Returns the peeled cliques (as
// lists of positions into `objects`) and the residual positions.
inline std::pair<std::vector<std::vector<int>>, std::vector<int>> ply_peel(
    const std::vector<PolygonalRegion>& objects, long threshold) {
    std::vector<std::vector<int>> cliques;
    std::vector<int> live(objects.size());
    std::iota(live.begin(), live.end(), 0);
    while (live.size() > static_cast<std::size_t>(threshold)) {
        std::vector<PolygonalRegion> cur;
        cur.reserve(live.size());
        for (int i : live) cur.push_back(objects[i]);
        Arrangement arr = build_arrangement(cur);
        int best = -1;
        for (int f = 0; f < arr.num_faces(); ++f) {
            if (best == -1 || arr.faces[f].contains.size() > arr.faces[best].contains.size() ||
                (arr.faces[f].contains.size() == arr.faces[best].contains.size() &&
                 lex_less(arr.faces[f].sample, arr.faces[best].sample)))
                best = f;
        }
        if (best == -1 ||
            static_cast<long>(arr.faces[best].contains.size()) <= threshold)
            break;
        std::vector<int> clique;
        std::set<int> gone;
        for (int local : arr.faces[best].contains) {
            clique.push_back(live[local]);
            gone.insert(local);
        }
        cliques.push_back(std::move(clique));
        std::vector<int> next;
        for (std::size_t k = 0; k < live.size(); ++k)
            if (!gone.count(static_cast<int>(k))) next.push_back(live[k]);
        live = std::move(next);
    }
    return {std::move(cliques), std::move(live)};
}

namespace detail_support {

// Separator of one connected set of mutually interlinked objects via the
// arrangement-dual planar support. weights: balancing weight per object.
inline CliqueSeparator support_component(const std::vector<PolygonalRegion>& objects,
                                         const std::vector<int>& ids,
                                         const std::vector<Rat>& weights, int size_factor) {
    CliqueSeparator out;
    std::vector<PolygonalRegion> objs;
    objs.reserve(ids.size());
    for (int i : ids) objs.push_back(objects[i]);
    Arrangement arr = build_arrangement(objs);
    PlaneGraph dual = arr.dual();

    // representative face of each object: lexicographically smallest sample
    // among faces inside it
    int n = static_cast<int>(ids.size());
    std::vector<int> rep(n, -1);
    for (int f = 0; f < arr.num_faces(); ++f)
        for (int local : arr.faces[f].contains) {
            if (rep[local] == -1 || lex_less(arr.faces[f].sample, arr.faces[rep[local]].sample))
                rep[local] = f;
        }
    Rat total_w = 0;
    for (int i = 0; i < n; ++i) total_w += weights[ids[i]];
    for (int i = 0; i < n; ++i) {
        if (rep[i] == -1) throw std::runtime_error("object without a representative face");
        dual.cost[rep[i]] += weights[ids[i]] / total_w;
    }

    PlaneGraph tri = triangulate(dual);
    CycleSeparator cs = cycle_separator(tri, size_factor);

    std::vector<char> face_in_s(arr.num_faces(), 0);
    for (int v : cs.separator)
        if (v < arr.num_faces()) face_in_s[v] = 1;  // dual node labels are face ids
    std::vector<char> face_side(arr.num_faces(), 0);
    for (int v : cs.side_a)
        if (v < arr.num_faces()) face_side[v] = 1;
    for (int v : cs.side_b)
        if (v < arr.num_faces()) face_side[v] = 2;

    std::vector<char> in_clique(n, 0);
    for (int f = 0; f < arr.num_faces(); ++f) {
        if (!face_in_s[f] || arr.faces[f].contains.empty()) continue;
        std::vector<int> clique;
        for (int local : arr.faces[f].contains) {
            if (!in_clique[local]) {
                in_clique[local] = 1;
                clique.push_back(ids[local]);
            }
        }
        if (!clique.empty()) out.cliques.push_back(std::move(clique));
    }
    for (int i = 0; i < n; ++i) {
        if (in_clique[i]) continue;
        if (face_side[rep[i]] == 1)
            out.side_a.push_back(ids[i]);
        else if (face_side[rep[i]] == 2)
            out.side_b.push_back(ids[i]);
        else
            out.cliques.push_back({ids[i]});  // representative on the separator
    }
    return out;
}

}  // namespace detail_support

// Clique-based separator of the intersection graph of `objects` via the
// planar-support route. `subset` defaults to all objects; `weights` override
// the uniform balancing weights. Pairs that touch without sharing a face are
// defused by pulling one side into a singleton clique.
inline CliqueSeparator support_separator(const std::vector<PolygonalRegion>& objects,
                                         std::optional<std::vector<int>> subset_opt = std::nullopt,
                                         const std::vector<Rat>* weights = nullptr,
                                         int size_factor = 4) {
    std::vector<int> subset;
    if (subset_opt) {
        subset = std::move(*subset_opt);
    } else {
        subset.resize(objects.size());
        std::iota(subset.begin(), subset.end(), 0);
    }
    CliqueSeparator out;
    if (subset.empty()) return out;

    std::vector<Rat> w(objects.size(), Rat(1));
    if (weights) w = *weights;

    std::vector<PolygonalRegion> objs;
    objs.reserve(subset.size());
    for (int i : subset) objs.push_back(objects[i]);
    Graph g = build_object_graph(objs);

    // touching-only pairs (no common arrangement face) break the stabbing
    // property; remove one endpoint of each as a singleton clique
    std::vector<char> kicked(subset.size(), 0);
    {
        Arrangement arr = build_arrangement(objs);
        std::set<std::pair<int, int>> covered;
        for (int f = 0; f < arr.num_faces(); ++f) {
            const auto& c = arr.faces[f].contains;
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j)
                    covered.insert({c[i], c[j]});
        }
        for (int u = 0; u < g.n; ++u)
            for (int v : g.adj[u]) {
                if (v <= u || kicked[u] || kicked[v]) continue;
                if (!covered.count({u, v})) {
                    kicked[u] = 1;
                    out.cliques.push_back({subset[u]});
                }
            }
    }

    std::vector<int> alive;
    for (std::size_t i = 0; i < subset.size(); ++i)
        if (!kicked[i]) alive.push_back(static_cast<int>(i));
    Graph g2 = induced(g, alive);

    Rat total_w = 0;
    for (int local : alive) total_w += w[subset[local]];
    std::vector<std::vector<int>> comps = components(g2);
    int big = -1;
    Rat big_w = 0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        Rat cw = 0;
        for (int v : comps[c]) cw += w[subset[alive[v]]];
        if (cw > big_w) {
            big_w = cw;
            big = static_cast<int>(c);
        }
    }
    bool need_split = big >= 0 && big_w * 3 > total_w && comps[big].size() > 1;

    std::vector<std::vector<int>> leftovers;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        std::vector<int> ids;
        for (int v : comps[c]) ids.push_back(subset[alive[v]]);
        if (need_split && static_cast<int>(c) == big) {
            CliqueSeparator part =
                detail_support::support_component(objects, ids, w, size_factor);
            for (auto& cl : part.cliques) out.cliques.push_back(std::move(cl));
            out.side_a = std::move(part.side_a);
            out.side_b = std::move(part.side_b);
        } else {
            leftovers.push_back(std::move(ids));
        }
    }
    pack_components(leftovers, out.side_a, out.side_b);
    out.dedupe();
    return out;
}

// Validates the pseudo-disk property (pairwise proper boundary crossings <= 2)
// unless force is set, peels high-ply cliques at threshold ceil(n^(1/3)), and
// runs the support separator on the residual set.
inline CliqueSeparator pseudodisk_separator(const std::vector<PolygonalRegion>& objects,
                                            std::optional<std::vector<int>> subset_opt = std::nullopt,
                                            const std::vector<Rat>* weights = nullptr,
                                            bool force = false, int size_factor = 4) {
    std::vector<int> subset;
    if (subset_opt) {
        subset = std::move(*subset_opt);
    } else {
        subset.resize(objects.size());
        std::iota(subset.begin(), subset.end(), 0);
    }
    CliqueSeparator out;
    if (subset.empty()) return out;

    std::vector<PolygonalRegion> objs;
    objs.reserve(subset.size());
    for (int i : subset) objs.push_back(objects[i]);

    if (!force) {
        Graph g = build_object_graph(objs);
        for (int u = 0; u < g.n; ++u)
            for (int v : g.adj[u]) {
                if (v <= u) continue;
                if (boundary_crossings(objs[u].boundary, objs[v].boundary) > 2)
                    throw std::invalid_argument("pseudo-disk violation: boundaries cross > 2 times");
            }
    }

    long n = static_cast<long>(subset.size());
    long threshold = static_cast<long>(std::ceil(std::cbrt(static_cast<double>(n))));
    while (threshold * threshold * threshold < n) ++threshold;  // exact ceil(n^(1/3))
    auto [peeled, residual_local] = ply_peel(objs, threshold);

    for (auto& c : peeled) {
        std::vector<int> clique;
        for (int local : c) clique.push_back(subset[local]);
        out.cliques.push_back(std::move(clique));
    }
    std::vector<int> residual;
    for (int local : residual_local) residual.push_back(subset[local]);

    CliqueSeparator rest = support_separator(objects, residual, weights, size_factor);
    for (auto& c : rest.cliques) out.cliques.push_back(std::move(c));
    out.side_a = std::move(rest.side_a);
    out.side_b = std::move(rest.side_b);
    out.dedupe();
    return out;
}

}  // namespace cliquesep
