#pragma once

// Cost-balanced simple-cycle separators on triangulated plane graphs.
//
// Primary route: fundamental-cycle search over a BFS spanning tree. For every
// non-tree edge the cost strictly inside its fundamental cycle is computed
// exactly via the interdigitating dual spanning tree, and the best balanced
// cycle is returned. Fallback route for graphs of large radius: two small BFS
// levels plus a fundamental cycle in the contracted middle band.

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "cliquesep/plane_graph.hpp"

namespace cliquesep {

struct CycleSeparator {
    std::vector<int> separator;  // node ids of g
    std::vector<int> side_a, side_b;
    Rat cost_a{0}, cost_b{0};
    bool is_cycle = true;   // simple cycle (or a single node / edge)
    bool balanced = true;   // both sides <= 2/3 of total cost
};

namespace detail_sep {

struct BfsTree {
    std::vector<int> parent_dart;  // dart parent->v, -1 at root
    std::vector<int> depth;
    std::vector<int> order;  // visit order
    int root = -1;
};

inline BfsTree bfs_tree(const PlaneGraph& g, int root) {
    BfsTree t;
    t.root = root;
    t.parent_dart.assign(g.num_nodes(), -2);
    t.depth.assign(g.num_nodes(), -1);
    std::queue<int> q;
    q.push(root);
    t.parent_dart[root] = -1;
    t.depth[root] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        t.order.push_back(v);
        for (int d : g.rot[v]) {
            int w = g.target(d);
            if (t.parent_dart[w] == -2) {
                t.parent_dart[w] = d;
                t.depth[w] = t.depth[v] + 1;
                q.push(w);
            }
        }
    }
    return t;
}

// Binary-lifting LCA over an arbitrary parent-array forest.
struct Lca {
    std::vector<std::vector<int>> up;
    std::vector<int> depth;

    void build(const std::vector<int>& parent, const std::vector<int>& dep) {
        int n = static_cast<int>(parent.size());
        depth = dep;
        int lg = 1;
        while ((1 << lg) < std::max(1, n)) ++lg;
        up.assign(lg + 1, std::vector<int>(n, -1));
        up[0] = parent;
        for (int k = 1; k <= lg; ++k)
            for (int v = 0; v < n; ++v) up[k][v] = up[k - 1][v] == -1 ? -1 : up[k - 1][up[k - 1][v]];
    }
    int lift(int v, int h) const {
        for (int k = 0; h && v != -1; ++k, h >>= 1)
            if (h & 1) v = up[k][v];
        return v;
    }
    int operator()(int u, int v) const {
        if (depth[u] < depth[v]) std::swap(u, v);
        u = lift(u, depth[u] - depth[v]);
        if (u == v) return u;
        for (int k = static_cast<int>(up.size()) - 1; k >= 0; --k)
            if (up[k][u] != up[k][v]) {
                u = up[k][u];
                v = up[k][v];
            }
        return up[0][u];
    }
};

// Fundamental-cycle machinery over one triangulated connected plane graph.
struct CycleSearch {
    const PlaneGraph* g = nullptr;
    BfsTree tree;
    Lca lca;
    std::vector<char> edge_in_tree;       // per dart pair (index d/2)
    std::vector<Rat> prefix_cost;         // root-path cost including v
    std::vector<int> dual_parent;         // per face
    std::vector<int> dual_parent_edge;    // dart pair index crossing to parent
    std::vector<int> dual_depth;
    Lca dual_lca;
    std::vector<int> tin, tout;           // Euler interval of faces in dual tree
    std::vector<int> vertex_anchor;       // a_v: dual-LCA of faces around v
    std::vector<Rat> subtree_cost;        // per face: cost of vertices anchored below
    std::vector<int> child_face;          // per dart pair: dual child side face (-1 if tree edge)

    void build(const PlaneGraph& graph, int root) {
        g = &graph;
        const PlaneGraph& G = *g;
        tree = bfs_tree(G, root);
        if (static_cast<int>(tree.order.size()) != G.num_nodes())
            throw std::invalid_argument("cycle separator requires a connected graph");

        std::vector<int> par(G.num_nodes(), -1);
        for (int v = 0; v < G.num_nodes(); ++v)
            if (tree.parent_dart[v] >= 0) par[v] = G.origin(tree.parent_dart[v]);
        lca.build(par, tree.depth);

        edge_in_tree.assign(G.num_darts() / 2, 0);
        for (int v = 0; v < G.num_nodes(); ++v)
            if (tree.parent_dart[v] >= 0) edge_in_tree[tree.parent_dart[v] / 2] = 1;

        prefix_cost.assign(G.num_nodes(), Rat(0));
        for (int v : tree.order) {
            prefix_cost[v] = G.cost[v];
            if (par[v] != -1) prefix_cost[v] += prefix_cost[par[v]];
        }

        // dual spanning tree across non-tree edges
        int nf = G.num_faces();
        int root_face = G.outer_face >= 0 ? G.outer_face : 0;
        dual_parent.assign(nf, -1);
        dual_parent_edge.assign(nf, -1);
        dual_depth.assign(nf, -1);
        std::vector<std::vector<int>> dual_children(nf);
        std::queue<int> q;
        q.push(root_face);
        dual_depth[root_face] = 0;
        std::vector<char> seen(nf, 0);
        seen[root_face] = 1;
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            for (int d : G.face_darts[f]) {
                if (edge_in_tree[d / 2]) continue;
                int f2 = G.face_of_dart[PlaneGraph::twin(d)];
                if (seen[f2]) continue;
                seen[f2] = 1;
                dual_parent[f2] = f;
                dual_parent_edge[f2] = d / 2;
                dual_depth[f2] = dual_depth[f] + 1;
                dual_children[f].push_back(f2);
                q.push(f2);
            }
        }
        for (int f = 0; f < nf; ++f)
            if (!seen[f]) throw std::runtime_error("dual tree does not span all faces");
        dual_lca.build(dual_parent, dual_depth);

        tin.assign(nf, -1);
        tout.assign(nf, -1);
        int timer = 0;
        {
            std::vector<std::pair<int, int>> stack;  // (face, child index)
            stack.emplace_back(root_face, 0);
            tin[root_face] = timer++;
            while (!stack.empty()) {
                auto& [f, ci] = stack.back();
                if (ci < static_cast<int>(dual_children[f].size())) {
                    int c = dual_children[f][ci++];
                    tin[c] = timer++;
                    stack.emplace_back(c, 0);
                } else {
                    tout[f] = timer;
                    stack.pop_back();
                }
            }
        }

        vertex_anchor.assign(G.num_nodes(), -1);
        for (int v = 0; v < G.num_nodes(); ++v) {
            int a = -1;
            for (int d : G.rot[v]) {
                int f = G.face_of_dart[d];
                a = a == -1 ? f : dual_lca(a, f);
            }
            vertex_anchor[v] = a;
        }

        subtree_cost.assign(nf, Rat(0));
        for (int v = 0; v < G.num_nodes(); ++v)
            if (vertex_anchor[v] != -1) subtree_cost[vertex_anchor[v]] += G.cost[v];
        // accumulate children into parents, deepest first
        std::vector<int> faces_by_depth(nf);
        for (int f = 0; f < nf; ++f) faces_by_depth[f] = f;
        std::sort(faces_by_depth.begin(), faces_by_depth.end(),
                  [&](int a, int b) { return dual_depth[a] > dual_depth[b]; });
        for (int f : faces_by_depth)
            if (dual_parent[f] != -1) subtree_cost[dual_parent[f]] += subtree_cost[f];

        child_face.assign(G.num_darts() / 2, -1);
        for (int f = 0; f < nf; ++f)
            if (dual_parent_edge[f] != -1) child_face[dual_parent_edge[f]] = f;
    }

    int cycle_len(int edge_pair) const {
        int d = edge_pair * 2;
        int u = g->origin(d), v = g->target(d);
        int l = lca(u, v);
        return tree.depth[u] + tree.depth[v] - 2 * tree.depth[l] + 1;
    }

    // inside cost / on-cycle cost of the fundamental cycle of a non-tree edge
    void costs(int edge_pair, Rat& inside, Rat& on_cycle) const {
        int cf = child_face[edge_pair];
        inside = subtree_cost[cf];
        int d = edge_pair * 2;
        int u = g->origin(d), v = g->target(d);
        int l = lca(u, v);
        int pl = lca.up[0][l];
        on_cycle = prefix_cost[u] + prefix_cost[v] - prefix_cost[l] -
                   (pl == -1 ? Rat(0) : prefix_cost[pl]);
    }

    std::vector<int> cycle_nodes(int edge_pair) const {
        int d = edge_pair * 2;
        int u = g->origin(d), v = g->target(d);
        int l = lca(u, v);
        std::vector<int> left, right;
        for (int x = u; x != l; x = g->origin(tree.parent_dart[x])) left.push_back(x);
        left.push_back(l);
        for (int x = v; x != l; x = g->origin(tree.parent_dart[x])) right.push_back(x);
        std::reverse(right.begin(), right.end());
        left.insert(left.end(), right.begin(), right.end());
        return left;
    }

    bool inside_cycle(int edge_pair, int v) const {
        int cf = child_face[edge_pair];
        int a = vertex_anchor[v];
        return tin[cf] <= tin[a] && tin[a] < tout[cf];
    }
};

struct Candidate {
    int edge_pair = -1;
    Rat max_side;
    int len = 0;
    bool balanced = false;
};

// Deterministic best fundamental cycle: prefer balanced, then short, then
// smallest max side, then lowest edge index.
inline std::optional<Candidate> select_cycle(const CycleSearch& cs, const Rat& total) {
    const PlaneGraph& g = *cs.g;
    Rat two_thirds = total * 2 / 3;
    std::optional<Candidate> best;
    for (int ep = 0; ep < g.num_darts() / 2; ++ep) {
        if (g.dart_dead[ep * 2] || cs.edge_in_tree[ep] || cs.child_face[ep] == -1) continue;
        Rat inside, on_cycle;
        cs.costs(ep, inside, on_cycle);
        Rat outside = total - inside - on_cycle;
        Candidate c;
        c.edge_pair = ep;
        c.max_side = inside > outside ? inside : outside;
        c.len = cs.cycle_len(ep);
        c.balanced = c.max_side <= two_thirds;
        auto better = [](const Candidate& x, const Candidate& y) {
            if (x.balanced != y.balanced) return x.balanced;
            if (x.balanced) {
                if (x.len != y.len) return x.len < y.len;
                if (x.max_side != y.max_side) return x.max_side < y.max_side;
            } else {
                if (x.max_side != y.max_side) return x.max_side < y.max_side;
                if (x.len != y.len) return x.len < y.len;
            }
            return x.edge_pair < y.edge_pair;
        };
        if (!best || better(c, *best)) best = c;
    }
    return best;
}

inline int pick_low_eccentricity_root(const PlaneGraph& g) {
    auto far_and_ecc = [&](int s) {
        BfsTree t = bfs_tree(g, s);
        int far = s, ecc = 0;
        for (int v : t.order)
            if (t.depth[v] > ecc) {
                ecc = t.depth[v];
                far = v;
            }
        return std::tuple<int, int, BfsTree>(far, ecc, std::move(t));
    };
    auto [f1, e1, t1] = far_and_ecc(0);
    auto [f2, e2, t2] = far_and_ecc(f1);
    // middle of the path f1 -> f2
    int mid = f2;
    for (int k = 0; k < e2 / 2; ++k) mid = g.origin(t2.parent_dart[mid]);
    int best = 0, best_ecc = e1;
    for (int cand : {f1, mid}) {
        BfsTree t = bfs_tree(g, cand);
        int ecc = 0;
        for (int v : t.order) ecc = std::max(ecc, t.depth[v]);
        if (ecc < best_ecc) {
            best_ecc = ecc;
            best = cand;
        }
    }
    return best;
}

// Splits pieces (cost, nodes) into two sides, each of total cost <= 2/3 of
// the grand total whenever every piece is <= 2/3 (at most two pieces can
// exceed 1/3; they seed the two sides).
inline void pack_pieces(std::vector<std::pair<Rat, std::vector<int>>> pieces,
                        std::vector<int>& side_a, std::vector<int>& side_b, Rat& cost_a,
                        Rat& cost_b) {
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const auto& x, const auto& y) { return x.first > y.first; });
    cost_a = 0;
    cost_b = 0;
    for (auto& [c, nodes] : pieces) {
        bool to_a = cost_a <= cost_b;
        auto& side = to_a ? side_a : side_b;
        (to_a ? cost_a : cost_b) += c;
        side.insert(side.end(), nodes.begin(), nodes.end());
    }
}

}  // namespace detail_sep

// Cost-balanced separator of a triangulated connected plane graph. The
// separator is a simple cycle whenever the graph admits a short balanced
// fundamental cycle; otherwise two BFS levels plus a cycle in the contracted
// middle band are returned with is_cycle = false. size_factor is the asserted
// bound |S| <= size_factor * sqrt(V).
inline CycleSeparator cycle_separator(const PlaneGraph& g_in, int size_factor = 4) {
    using namespace detail_sep;
    PlaneGraph g = g_in;  // local copy: we need faces
    g.build_faces();
    for (const auto& fd : g.face_darts)
        if (fd.size() != 3) throw std::invalid_argument("cycle_separator requires a triangulation");

    int n = g.num_nodes();
    CycleSeparator out;
    if (n <= 4) {
        for (int v = 0; v < n; ++v) out.separator.push_back(v);
        return out;
    }

    Rat total = g.total_cost();
    int root = pick_low_eccentricity_root(g);

    CycleSearch cs;
    cs.build(g, root);
    auto cand = select_cycle(cs, total);

    long budget_sq = static_cast<long>(size_factor) * size_factor * n;
    auto within_budget = [&](long len) { return len * len <= budget_sq; };

    if (cand && cand->balanced && within_budget(cand->len)) {
        std::vector<int> cyc = cs.cycle_nodes(cand->edge_pair);
        std::vector<char> in_sep(n, 0);
        for (int v : cyc) in_sep[v] = 1;
        out.separator = cyc;
        for (int v = 0; v < n; ++v) {
            if (in_sep[v]) continue;
            if (cs.inside_cycle(cand->edge_pair, v)) {
                out.side_a.push_back(v);
                out.cost_a += g.cost[v];
            } else {
                out.side_b.push_back(v);
                out.cost_b += g.cost[v];
            }
        }
        out.is_cycle = true;
        out.balanced = true;
        return out;
    }

    // Banded fallback: separator = two small BFS levels + fundamental cycle of
    // the contracted middle band.
    BfsTree t = bfs_tree(g, root);
    int max_level = 0;
    for (int v = 0; v < n; ++v) max_level = std::max(max_level, t.depth[v]);
    std::vector<std::vector<int>> levels(max_level + 1);
    std::vector<Rat> level_cost(max_level + 2, Rat(0));
    for (int v = 0; v < n; ++v) {
        levels[t.depth[v]].push_back(v);
        level_cost[t.depth[v]] += g.cost[v];
    }
    int l1 = 0;
    {
        Rat acc = 0;
        for (int l = 0; l <= max_level; ++l) {
            acc += level_cost[l];
            if (acc * 2 >= total) {
                l1 = l;
                break;
            }
        }
    }
    // choose the level pair minimizing the size bound |L0| + |L2| + 2(l2-l0-1)
    int best_l0 = 0, best_l2 = max_level + 1;
    long best_bound = -1;
    for (int l0 = 0; l0 <= l1; ++l0) {
        for (int l2 = l1 + 1; l2 <= max_level + 1; ++l2) {
            long sz0 = static_cast<long>(levels[l0].size());
            long sz2 = l2 <= max_level ? static_cast<long>(levels[l2].size()) : 0;
            long bound = sz0 + sz2 + 2L * std::max(0, l2 - l0 - 1) + 1;
            if (best_bound < 0 || bound < best_bound) {
                best_bound = bound;
                best_l0 = l0;
                best_l2 = l2;
            }
        }
    }
    int l0 = best_l0, l2 = best_l2;

    std::vector<int> sep;
    for (int v : levels[l0]) sep.push_back(v);
    if (l2 <= max_level)
        for (int v : levels[l2]) sep.push_back(v);

    std::vector<std::pair<Rat, std::vector<int>>> pieces;
    auto add_piece = [&](std::vector<int> nodes) {
        if (nodes.empty()) return;
        Rat c = 0;
        for (int v : nodes) c += g.cost[v];
        pieces.emplace_back(c, std::move(nodes));
    };
    {
        std::vector<int> top, bot;
        for (int l = 0; l < l0; ++l) top.insert(top.end(), levels[l].begin(), levels[l].end());
        for (int l = l2 + 1; l <= max_level; ++l) bot.insert(bot.end(), levels[l].begin(), levels[l].end());
        add_piece(std::move(top));
        add_piece(std::move(bot));
    }

    bool band_nonempty = l2 - l0 > 1;
    if (band_nonempty) {
        // contract levels <= l0 into the root, delete levels >= l2
        PlaneGraph work = g;
        for (int v = 0; v < n; ++v) work.label[v] = v;
        for (int l = l2; l <= max_level; ++l)
            for (int v : levels[l]) work.delete_node(v);
        for (int l = 1; l <= l0; ++l)
            for (int v : levels[l]) contract_edge(work, t.parent_dart[v]);
        work.cost[root] = 0;
        std::vector<int> node_map;
        PlaneGraph band = work.compact(node_map);
        // band may have lost faces; re-triangulate for the cycle search
        PlaneGraph band_tri = triangulate(band);
        band_tri.build_faces();
        Rat band_total = band_tri.total_cost();

        if (band_tri.num_nodes() <= 4) {
            for (int v = 0; v < band_tri.num_nodes(); ++v)
                if (band_tri.label[v] >= 0 && band_tri.label[v] != root)
                    sep.push_back(static_cast<int>(band_tri.label[v]));
        } else {
            int broot = pick_low_eccentricity_root(band_tri);
            CycleSearch bs;
            bs.build(band_tri, broot);
            auto bc = select_cycle(bs, band_total);
            if (!bc) throw std::runtime_error("band cycle search failed");
            std::vector<int> cyc = bs.cycle_nodes(bc->edge_pair);
            std::vector<char> on_cyc(band_tri.num_nodes(), 0);
            for (int v : cyc) on_cyc[v] = 1;
            for (int v : cyc)
                if (band_tri.label[v] >= 0 && band_tri.label[v] != root)
                    sep.push_back(static_cast<int>(band_tri.label[v]));
            std::vector<int> in_piece, out_piece;
            for (int v = 0; v < band_tri.num_nodes(); ++v) {
                if (on_cyc[v] || band_tri.label[v] < 0 || band_tri.label[v] == root) continue;
                (bs.inside_cycle(bc->edge_pair, v) ? in_piece : out_piece)
                    .push_back(static_cast<int>(band_tri.label[v]));
            }
            add_piece(std::move(in_piece));
            add_piece(std::move(out_piece));
        }
    }

    out.separator = std::move(sep);
    out.is_cycle = out.separator.size() <= 2;
    pack_pieces(std::move(pieces), out.side_a, out.side_b, out.cost_a, out.cost_b);
    out.balanced = out.cost_a * 3 <= total * 2 && out.cost_b * 3 <= total * 2;
    return out;
}

}  // namespace cliquesep
