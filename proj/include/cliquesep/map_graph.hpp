#pragma once

// Clique-based separators for map graphs. Pipeline: bipartite witness graph
// over region representatives and boundary witness points, bounded-degree
// gadget trees replacing high-degree witnesses, star triangulation, balanced
// cycle separator, and conversion back to cliques of the intersection graph.

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cliquesep/clique_separator.hpp"
#include "cliquesep/cycle_separator.hpp"
#include "cliquesep/graph.hpp"
#include "cliquesep/polygon.hpp"
#include "cliquesep/spatial.hpp"

namespace cliquesep {

struct MapInstance {
    std::vector<PolygonalRegion> regions;  // interior-disjoint, vertex-welded

    std::size_t size() const { return regions.size(); }
};

namespace detail_map {

struct EdgeRef {
    int region;
    int edge;  // boundary[edge] -> boundary[edge+1]
};

struct Incidences {
    // distinct boundary points incident to >= 2 regions, with the incident
    // region set of each
    std::vector<Pt> points;
    std::vector<std::vector<int>> point_regions;
    // pairs of regions sharing a positive-length boundary piece, with one
    // interior point of such a piece
    std::vector<std::pair<std::pair<int, int>, Pt>> edge_pairs;
    Graph adjacency;
};

inline double typical_extent(const MapInstance& inst) {
    BBox bb;
    for (const auto& r : inst.regions)
        for (const auto& p : r.boundary) bb.add(p);
    if (bb.empty) return 1.0;
    double w = rat_to_double(bb.xmax - bb.xmin), h = rat_to_double(bb.ymax - bb.ymin);
    std::size_t m = 0;
    for (const auto& r : inst.regions) m += r.boundary.size();
    double cell = std::max(w, h) / std::max(1.0, std::sqrt(static_cast<double>(m)));
    return cell > 0 ? cell : 1.0;
}

// Shared-boundary analysis: welded vertices, T-junction contacts, overlapping
// edges. Throws if region interiors overlap (proper boundary crossing or a
// region interior point inside another region).
inline Incidences analyze(const MapInstance& inst) {
    Incidences inc;
    int n = static_cast<int>(inst.regions.size());
    inc.adjacency = Graph(n);
    for (int i = 0; i < n; ++i) inc.adjacency.labels[i] = inst.regions[i].id;

    std::vector<EdgeRef> edges;
    BucketGrid egrid(typical_extent(inst));
    for (int r = 0; r < n; ++r) {
        const Ring& ring = inst.regions[r].boundary;
        for (int e = 0; e < static_cast<int>(ring.size()); ++e) {
            BBox bb;
            bb.add(ring[e]);
            bb.add(ring[(e + 1) % ring.size()]);
            egrid.insert(static_cast<int>(edges.size()), bb);
            edges.push_back({r, e});
        }
    }
    auto edge_pts = [&](const EdgeRef& er) {
        const Ring& ring = inst.regions[er.region].boundary;
        return std::pair<const Pt&, const Pt&>(ring[er.edge],
                                               ring[(er.edge + 1) % ring.size()]);
    };

    // distinct vertex points -> incident regions (as vertex or edge-interior)
    std::map<std::string, std::pair<Pt, std::vector<int>>> at_point;
    for (int r = 0; r < n; ++r)
        for (const Pt& v : inst.regions[r].boundary) {
            auto& slot = at_point[pt_key(v)];
            slot.first = v;
            slot.second.push_back(r);
        }
    for (auto& [key, slot] : at_point) {
        const Pt& v = slot.first;
        BBox bb;
        bb.add(v);
        for (int eid : egrid.query(bb)) {
            const EdgeRef& er = edges[eid];
            auto [a, b] = edge_pts(er);
            if (v == a || v == b) continue;
            if (on_segment(v, a, b)) slot.second.push_back(er.region);
        }
        std::sort(slot.second.begin(), slot.second.end());
        slot.second.erase(std::unique(slot.second.begin(), slot.second.end()), slot.second.end());
    }

    // edge overlaps and interior-overlap detection
    std::map<std::pair<int, int>, std::pair<Pt, Pt>> overlap_of_pair;
    for (std::size_t eid = 0; eid < edges.size(); ++eid) {
        auto [a, b] = edge_pts(edges[eid]);
        BBox bb;
        bb.add(a);
        bb.add(b);
        for (int oid : egrid.query(bb)) {
            if (static_cast<std::size_t>(oid) <= eid) continue;
            const EdgeRef& er = edges[oid];
            if (er.region == edges[eid].region) continue;
            auto [c, d] = edge_pts(er);
            if (segments_cross_properly(a, b, c, d))
                throw std::invalid_argument("map regions have overlapping interiors");
            SegIntersection is = seg_intersect(a, b, c, d);
            if (is.kind == SegIntersection::Overlap) {
                int r1 = edges[eid].region, r2 = er.region;
                auto key = std::minmax(r1, r2);
                overlap_of_pair.emplace(std::make_pair(key.first, key.second),
                                        std::make_pair(is.q0, is.q1));
            }
        }
    }

    // containment / identical-region detection on bbox-overlapping pairs
    {
        BucketGrid rgrid(typical_extent(inst) * 4);
        std::vector<BBox> rbb(n);
        for (int r = 0; r < n; ++r) {
            rbb[r] = ring_bbox(inst.regions[r].boundary);
            rgrid.insert(r, rbb[r]);
        }
        for (int r = 0; r < n; ++r) {
            Pt ip = ring_interior_point(inst.regions[r].boundary);
            BBox bb;
            bb.add(ip);
            for (int o : rgrid.query(bb)) {
                if (o == r) continue;
                if (point_in_ring(ip, inst.regions[o].boundary) == Loc::Inside)
                    throw std::invalid_argument("map regions have overlapping interiors");
            }
        }
    }

    for (auto& [key, slot] : at_point) {
        if (slot.second.size() < 2) continue;
        for (std::size_t i = 0; i < slot.second.size(); ++i)
            for (std::size_t j = i + 1; j < slot.second.size(); ++j)
                if (!inc.adjacency.has_edge(slot.second[i], slot.second[j]))
                    inc.adjacency.add_edge(slot.second[i], slot.second[j]);
        inc.adjacency.finalize();
        inc.points.push_back(slot.first);
        inc.point_regions.push_back(slot.second);
    }
    inc.adjacency.finalize();

    // one interior witness point per edge-adjacent pair, avoiding existing
    // vertex points and third-party boundaries
    for (auto& [pr, seg] : overlap_of_pair) {
        const Pt &q0 = seg.first, &q1 = seg.second;
        Pt chosen;
        bool found = false;
        for (long num = 1, den = 2; den <= 64 && !found; ) {
            Rat t(num, den);
            Pt cand(q0.x + t * (q1.x - q0.x), q0.y + t * (q1.y - q0.y));
            bool clean = at_point.find(pt_key(cand)) == at_point.end();
            if (clean) {
                BBox bb;
                bb.add(cand);
                for (int eid : egrid.query(bb)) {
                    const EdgeRef& er = edges[eid];
                    if (er.region == pr.first || er.region == pr.second) continue;
                    auto [a, b] = edge_pts(er);
                    if (on_segment(cand, a, b)) {
                        clean = false;
                        break;
                    }
                }
            }
            if (clean) {
                chosen = cand;
                found = true;
            }
            num += 2;
            if (num >= den) {
                num = 1;
                den *= 2;
            }
        }
        if (!found) throw std::runtime_error("could not place an edge witness point");
        inc.edge_pairs.push_back({pr, chosen});
        if (!inc.adjacency.has_edge(pr.first, pr.second)) {
            inc.adjacency.add_edge(pr.first, pr.second);
            inc.adjacency.finalize();
        }
    }
    return inc;
}

}  // namespace detail_map

// Intersection graph of a map instance: regions are adjacent iff their
// boundaries share at least one point.
inline Graph build_map_graph(const MapInstance& inst) {
    return detail_map::analyze(inst).adjacency;
}

// Gadget tree replacing a witness star: root of degree <= 3, internal nodes
// with at most two children, all leaves on the last level. Level cycles and
// 4-cycle diagonals are added by the witness-graph builder.
struct GadgetTree {
    int degree = 0;                        // |N(q)|
    int max_level = 0;                     // leaf level
    std::vector<std::vector<int>> levels;  // local node ids per level; node 0 = root
    std::vector<int> parent;               // local parent ids, -1 at root
    std::vector<int> leaf_region;          // per leaf position: region id

    int num_nodes() const { return static_cast<int>(parent.size()); }
    int height(int v) const {
        int lvl = 0;
        for (int l = 0; l <= max_level; ++l)
            for (int u : levels[l])
                if (u == v) lvl = l;
        return max_level - lvl;
    }
    std::vector<int> leaves_below(int v) const {
        std::vector<int> out;
        std::vector<char> mark(num_nodes(), 0);
        mark[v] = 1;
        for (int u = 0; u < num_nodes(); ++u) {
            int w = u;
            bool below = false;
            while (w != -1) {
                if (mark[w]) {
                    below = true;
                    break;
                }
                w = parent[w];
            }
            if (below) mark[u] = 1;
        }
        for (int leaf : levels[max_level])
            if (mark[leaf]) out.push_back(leaf);
        return out;
    }
    int tree_dist_to_nearest_leaf(int v) const {
        // distances measured along tree edges
        std::vector<int> depth(num_nodes(), 0);
        for (int u = 1; u < num_nodes(); ++u) depth[u] = depth[parent[u]] + 1;
        int best = -1;
        for (int leaf : levels[max_level]) {
            // walk up from leaf and from v to the common ancestor
            int a = leaf, b = v, da = depth[a], db = depth[b];
            while (da > db) {
                a = parent[a];
                --da;
            }
            while (db > da) {
                b = parent[b];
                --db;
            }
            while (a != b) {
                a = parent[a];
                b = parent[b];
                --da;
            }
            int d = (depth[leaf] - da) + (depth[v] - da);
            if (best < 0 || d < best) best = d;
        }
        return best;
    }
};

// Builds the gadget tree shape for a witness with the given ccw-ordered
// neighbor regions. Whole-gadget embedding is done by the caller.
inline GadgetTree build_gadget(const std::vector<int>& neighbors) {
    int L = static_cast<int>(neighbors.size());
    if (L < 2) throw std::invalid_argument("gadget requires at least two neighbors");
    GadgetTree t;
    t.degree = L;
    int lmax = 1;
    if (L > 3) {
        lmax = 1;
        while (3 * (1 << (lmax - 1)) < L) ++lmax;  // smallest level with capacity
    }
    t.max_level = lmax;
    // level sizes: smallest left-packed profile reaching L leaves at lmax,
    // with the root taking three children once L >= 3
    std::vector<int> sizes(lmax + 1);
    sizes[0] = 1;
    for (int l = 1; l <= lmax; ++l)
        sizes[l] = static_cast<int>((L + (1L << (lmax - l)) - 1) / (1L << (lmax - l)));
    if (L >= 3) sizes[1] = 3;
    for (int l = 2; l <= lmax; ++l) sizes[l] = std::max(sizes[l], sizes[l - 1]);
    for (int l = 2; l <= lmax; ++l)
        if (sizes[l] > 2 * sizes[l - 1]) throw std::logic_error("gadget level overflow");

    t.levels.assign(lmax + 1, {});
    t.parent.assign(1, -1);
    t.levels[0].push_back(0);
    for (int l = 1; l <= lmax; ++l) {
        int prev = sizes[l - 1];
        int cur = sizes[l];
        int doubles = cur - prev;  // parents (left-packed) getting two children
        int next_id = t.num_nodes();
        for (int pi = 0; pi < prev; ++pi) {
            int kids = pi < doubles ? 2 : 1;
            if (l == 1) kids = cur;  // root takes the whole first level
            for (int k = 0; k < kids; ++k) {
                t.parent.push_back(t.levels[l - 1][pi]);
                t.levels[l].push_back(next_id++);
            }
            if (l == 1) break;
        }
        if (static_cast<int>(t.levels[l].size()) != cur)
            throw std::logic_error("gadget level fill mismatch");
    }
    t.leaf_region.assign(L, -1);
    for (int i = 0; i < L; ++i) t.leaf_region[i] = neighbors[i];
    return t;
}

// The witness graph with gadgets in place, ready for triangulation, plus the
// bookkeeping needed to convert a plane separator back to region cliques.
struct WitnessGraph {
    PlaneGraph h;                       // gadget-expanded witness graph (pre-triangulation)
    std::vector<int> region_node;       // instance region index -> node id
    std::vector<int> node_region;       // node id -> region index (-1 if not a P-node)
    struct Gadget {
        GadgetTree tree;
        std::vector<int> node_of_local;  // local tree id -> graph node id
    };
    std::vector<Gadget> gadgets;
    long num_witnesses = 0;
};

// Assembles the plane witness graph of the regions listed in `subset`
// (instance indices). Witness points, wedge-ordered rotations and gadget
// embeddings are all derived from the exact geometry.
inline WitnessGraph build_witness_graph(const MapInstance& inst, const std::vector<int>& subset) {
    MapInstance sub;
    sub.regions.reserve(subset.size());
    for (int idx : subset) sub.regions.push_back(inst.regions[idx]);
    detail_map::Incidences inc = detail_map::analyze(sub);

    int n = static_cast<int>(subset.size());
    WitnessGraph wg;
    wg.node_region.clear();

    // collect witnesses: (point, regions, sort of rotation info); vertex
    // witnesses need >= 2 incident regions, edge witnesses always have 2
    struct Witness {
        Pt at;
        std::vector<int> regions;  // sub-instance indices, ccw-wedge order
    };
    std::vector<Witness> witnesses;
    for (std::size_t i = 0; i < inc.points.size(); ++i)
        witnesses.push_back({inc.points[i], inc.point_regions[i]});
    for (auto& [pr, pt] : inc.edge_pairs) witnesses.push_back({pt, {pr.first, pr.second}});
    wg.num_witnesses = static_cast<long>(witnesses.size());

    // wedge order around each witness: sort regions by the ccw angle of the
    // direction in which their boundary leaves the witness with interior left
    auto wedge_start = [&](int region, const Pt& q) -> Pt {
        const Ring& ring = sub.regions[region].boundary;
        std::size_t m = ring.size();
        for (std::size_t i = 0; i < m; ++i) {
            if (ring[i] == q) return Pt(ring[(i + 1) % m].x - q.x, ring[(i + 1) % m].y - q.y);
        }
        for (std::size_t i = 0; i < m; ++i) {
            const Pt& a = ring[i];
            const Pt& b = ring[(i + 1) % m];
            if (on_segment(q, a, b) && q != a && q != b) return Pt(b.x - q.x, b.y - q.y);
        }
        throw std::logic_error("witness not on region boundary");
    };
    for (auto& w : witnesses) {
        std::vector<std::pair<Pt, int>> order;
        for (int r : w.regions) order.emplace_back(wedge_start(r, w.at), r);
        std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
            if (angle_equal(a.first, b.first)) return a.second < b.second;
            return angle_less(a.first, b.first);
        });
        w.regions.clear();
        for (auto& [d, r] : order) w.regions.push_back(r);
    }

    // traversal position of each witness along each incident region boundary,
    // to order the arcs around P-nodes
    struct Slot {
        int witness;
        int edge;
        Rat param;
    };
    std::vector<std::vector<Slot>> region_slots(n);
    for (std::size_t wi = 0; wi < witnesses.size(); ++wi) {
        const Pt& q = witnesses[wi].at;
        for (int r : witnesses[wi].regions) {
            const Ring& ring = sub.regions[r].boundary;
            std::size_t m = ring.size();
            bool placed = false;
            for (std::size_t e = 0; e < m && !placed; ++e) {
                const Pt& a = ring[e];
                const Pt& b = ring[(e + 1) % m];
                if (q == a) {
                    region_slots[r].push_back({static_cast<int>(wi), static_cast<int>(e), Rat(0)});
                    placed = true;
                } else if (q != b && on_segment(q, a, b)) {
                    Rat t = (sgn(b.x - a.x) != 0) ? (q.x - a.x) / (b.x - a.x) : (q.y - a.y) / (b.y - a.y);
                    region_slots[r].push_back({static_cast<int>(wi), static_cast<int>(e), t});
                    placed = true;
                }
            }
            if (!placed) throw std::logic_error("witness placement failed");
        }
    }
    for (auto& slots : region_slots)
        std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
            if (a.edge != b.edge) return a.edge < b.edge;
            if (a.param != b.param) return a.param < b.param;
            return a.witness < b.witness;
        });

    // nodes: P-nodes first, then witness roots; gadget internals appended later
    PlaneGraph& g = wg.h;
    wg.region_node.assign(n, -1);
    for (int r = 0; r < n; ++r) {
        wg.region_node[r] = g.add_node(Rat(0), false, subset[r]);
        wg.node_region.push_back(r);
    }
    std::vector<int> witness_node(witnesses.size());
    for (std::size_t wi = 0; wi < witnesses.size(); ++wi) {
        witness_node[wi] = g.add_node(Rat(0), false, -1);
        wg.node_region.push_back(-1);
    }

    // per-gadget construction; records the dart entering each (witness,region)
    // arc slot so P-node rotations can be assembled afterwards
    std::map<std::pair<int, int>, int> arc_dart;  // (witness, region) -> dart at P side

    for (std::size_t wi = 0; wi < witnesses.size(); ++wi) {
        const auto& nbrs = witnesses[wi].regions;
        GadgetTree tree = build_gadget(nbrs);
        WitnessGraph::Gadget gad;
        gad.tree = tree;
        gad.node_of_local.assign(tree.num_nodes(), -1);
        gad.node_of_local[0] = witness_node[wi];
        for (int l = 1; l <= tree.max_level; ++l)
            for (int v : tree.levels[l]) {
                if (l == tree.max_level) {
                    int pos = v - tree.levels[l].front();
                    gad.node_of_local[v] = wg.region_node[tree.leaf_region[pos]];
                } else {
                    gad.node_of_local[v] = g.add_node(Rat(0), false, -1);
                    wg.node_region.push_back(-1);
                }
            }

        // tree edges; keep the dart ids per local node
        int nn = tree.num_nodes();
        std::vector<int> up_dart(nn, -1);  // dart child -> parent
        for (int v = 1; v < nn; ++v) {
            int d = g.add_edge(gad.node_of_local[tree.parent[v]], gad.node_of_local[v]);
            up_dart[v] = d + 1;
        }
        // level cycles (levels 1..max_level-1 have >= 3 nodes by construction)
        std::map<std::pair<int, int>, int> ring_dart;  // (level node u, to v): dart u->v
        for (int l = 1; l < tree.max_level; ++l) {
            const auto& lv = tree.levels[l];
            int k = static_cast<int>(lv.size());
            for (int i = 0; i < k; ++i) {
                int u = lv[i], v = lv[(i + 1) % k];
                int d = g.add_edge(gad.node_of_local[u], gad.node_of_local[v]);
                ring_dart[{u, v}] = d;
                ring_dart[{v, u}] = d + 1;
            }
        }
        // diagonals in the 4-cycle faces between consecutive cycled levels:
        // (u_i, first child of u_{i+1})
        std::map<std::pair<int, int>, int> diag_dart;  // (from u, to child) both directions
        std::vector<std::vector<int>> kids(nn);
        for (int v = 1; v < nn; ++v) kids[tree.parent[v]].push_back(v);
        for (int l = 1; l + 1 < tree.max_level; ++l) {
            const auto& lv = tree.levels[l];
            int k = static_cast<int>(lv.size());
            for (int i = 0; i < k; ++i) {
                int u = lv[i], un = lv[(i + 1) % k];
                int b = kids[un].front();
                int d = g.add_edge(gad.node_of_local[u], gad.node_of_local[b]);
                diag_dart[{u, b}] = d;
                diag_dart[{b, u}] = d + 1;
            }
        }

        // rotations: root gets children in order; ring node u gets
        // [parent, prev, children..., diag_out, next], with an incoming
        // diagonal placed between parent and prev at its target child
        auto dart_to_child = [&](int v) { return PlaneGraph::twin(up_dart[v]); };
        {
            std::vector<int> rot_root;
            for (int c : kids[0]) rot_root.push_back(dart_to_child(c));
            g.set_rotation(gad.node_of_local[0], rot_root);
        }
        for (int l = 1; l < tree.max_level; ++l) {
            const auto& lv = tree.levels[l];
            int k = static_cast<int>(lv.size());
            for (int i = 0; i < k; ++i) {
                int u = lv[i];
                int prev = lv[(i + k - 1) % k], next = lv[(i + 1) % k];
                std::vector<int> r;
                r.push_back(up_dart[u]);
                // incoming diagonal: u is the first child of its parent and the
                // diagonal source is the parent's ring-predecessor
                if (l >= 2 && kids[tree.parent[u]].front() == u) {
                    const auto& plv = tree.levels[l - 1];
                    int pk = static_cast<int>(plv.size());
                    int ppos = 0;
                    for (int j = 0; j < pk; ++j)
                        if (plv[j] == tree.parent[u]) ppos = j;
                    int src = plv[(ppos + pk - 1) % pk];
                    auto it = diag_dart.find({u, src});
                    if (it != diag_dart.end()) r.push_back(it->second);
                }
                r.push_back(ring_dart[{u, prev}]);
                for (int c : kids[u]) r.push_back(dart_to_child(c));
                // outgoing diagonal to the next parent's first child
                if (l + 1 < tree.max_level) {
                    int b = kids[next].front();
                    auto it = diag_dart.find({u, b});
                    if (it != diag_dart.end()) r.push_back(it->second);
                }
                r.push_back(ring_dart[{u, next}]);
                g.set_rotation(gad.node_of_local[u], r);
            }
        }
        // leaf arc slots: the up-dart of each leaf starts at the P-node
        const auto& leaves = tree.levels[tree.max_level];
        for (std::size_t pos = 0; pos < leaves.size(); ++pos) {
            int leaf = leaves[pos];
            int region = tree.leaf_region[pos];
            arc_dart[{static_cast<int>(wi), region}] = up_dart[leaf];
        }
        wg.gadgets.push_back(std::move(gad));
    }

    // P-node rotations: arcs ordered by boundary traversal position
    for (int r = 0; r < n; ++r) {
        std::vector<int> rot;
        for (const auto& slot : region_slots[r]) {
            auto it = arc_dart.find({slot.witness, r});
            if (it == arc_dart.end()) throw std::logic_error("missing arc for P-node rotation");
            rot.push_back(it->second);
        }
        g.set_rotation(wg.region_node[r], rot);
    }

    g.check_rotation_coverage();
    g.build_faces();
    g.check_euler();
    return wg;
}

inline WitnessGraph build_witness_graph(const MapInstance& inst) {
    std::vector<int> all(inst.regions.size());
    std::iota(all.begin(), all.end(), 0);
    return build_witness_graph(inst, all);
}

// Separator of the induced map graph on `subset` (defaults to all regions).
// Costs default to 1/n per region of the subset; `weights` overrides them for
// boundary-balanced calls.
inline CliqueSeparator map_separator(const MapInstance& inst,
                                     std::optional<std::vector<int>> subset_opt = std::nullopt,
                                     const std::vector<Rat>* weights = nullptr,
                                     int size_factor = 4) {
    std::vector<int> subset;
    if (subset_opt) {
        subset = std::move(*subset_opt);
    } else {
        subset.resize(inst.regions.size());
        std::iota(subset.begin(), subset.end(), 0);
    }
    int n = static_cast<int>(subset.size());
    CliqueSeparator out;
    if (n == 0) return out;

    MapInstance sub;
    for (int idx : subset) sub.regions.push_back(inst.regions[idx]);
    Graph g = build_map_graph(sub);

    auto weight_of = [&](int local) -> Rat {
        return weights ? (*weights)[subset[local]] : Rat(1);
    };
    Rat total_w = 0;
    for (int i = 0; i < n; ++i) total_w += weight_of(i);
    if (total_w == 0) total_w = 1;

    std::vector<std::vector<int>> comps = components(g);
    // the component carrying more than a third of the weight gets separated
    int big = -1;
    Rat big_w = 0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        Rat w = 0;
        for (int v : comps[c]) w += weight_of(v);
        if (w > big_w) {
            big_w = w;
            big = static_cast<int>(c);
        }
    }
    bool need_split = big >= 0 && big_w * 3 > total_w;

    std::vector<std::vector<int>> leftovers;  // instance-index pieces
    auto to_instance = [&](const std::vector<int>& locals) {
        std::vector<int> out2;
        out2.reserve(locals.size());
        for (int v : locals) out2.push_back(subset[v]);
        return out2;
    };

    if (need_split) {
        const std::vector<int>& comp = comps[big];
        if (comp.size() == 1) {
            out.cliques.push_back({subset[comp[0]]});
        } else {
            std::vector<int> comp_inst = to_instance(comp);
            WitnessGraph wg = build_witness_graph(inst, comp_inst);
            // costs: region weights normalized over the component
            Rat comp_w = 0;
            for (int v : comp) comp_w += weight_of(v);
            for (std::size_t local = 0; local < comp.size(); ++local)
                wg.h.cost[wg.region_node[local]] = weight_of(comp[local]) / comp_w;
            PlaneGraph h2 = triangulate(wg.h);
            CycleSeparator cs = cycle_separator(h2, size_factor);

            std::vector<char> in_s(h2.num_nodes(), 0);
            for (int v : cs.separator) in_s[v] = 1;
            std::vector<char> node_side(h2.num_nodes(), 0);  // 1 = A, 2 = B
            for (int v : cs.side_a) node_side[v] = 1;
            for (int v : cs.side_b) node_side[v] = 2;

            std::vector<char> in_clique(comp.size(), 0);
            // singleton cliques for separator P-nodes
            for (int v : cs.separator) {
                if (v < static_cast<int>(wg.node_region.size()) && wg.node_region[v] >= 0) {
                    int local = wg.node_region[v];
                    if (!in_clique[local]) {
                        in_clique[local] = 1;
                        out.cliques.push_back({comp_inst[local]});
                    }
                }
            }
            // gadget cliques: leaves below separator nodes of the gadget tree
            for (const auto& gad : wg.gadgets) {
                std::vector<int> vq;
                for (int local_id = 0; local_id < gad.tree.num_nodes(); ++local_id) {
                    bool is_leaf = false;
                    for (int leaf : gad.tree.levels[gad.tree.max_level])
                        if (leaf == local_id) is_leaf = true;
                    if (is_leaf) continue;
                    int node = gad.node_of_local[local_id];
                    if (node < h2.num_nodes() && in_s[node]) vq.push_back(local_id);
                }
                if (vq.empty()) continue;
                std::vector<int> clique;
                for (int v : vq)
                    for (int leaf : gad.tree.leaves_below(v)) {
                        int pos = leaf - gad.tree.levels[gad.tree.max_level].front();
                        int local = gad.tree.leaf_region[pos];
                        if (!in_clique[local]) {
                            in_clique[local] = 1;
                            clique.push_back(comp_inst[local]);
                        }
                    }
                if (!clique.empty()) out.cliques.push_back(std::move(clique));
            }
            // sides for surviving regions of the component
            std::vector<int> a_piece, b_piece;
            for (std::size_t local = 0; local < comp.size(); ++local) {
                if (in_clique[local]) continue;
                int node = wg.region_node[local];
                if (node_side[node] == 1)
                    a_piece.push_back(comp_inst[local]);
                else if (node_side[node] == 2)
                    b_piece.push_back(comp_inst[local]);
                else  // P-node on the separator but already covered as clique
                    a_piece.push_back(comp_inst[local]);
            }
            out.side_a = std::move(a_piece);
            out.side_b = std::move(b_piece);
        }
        for (std::size_t c = 0; c < comps.size(); ++c)
            if (static_cast<int>(c) != big) leftovers.push_back(to_instance(comps[c]));
    } else {
        for (auto& comp : comps) leftovers.push_back(to_instance(comp));
    }

    pack_components(leftovers, out.side_a, out.side_b);
    out.dedupe();
    return out;
}

}  // namespace cliquesep
