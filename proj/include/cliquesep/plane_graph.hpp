#pragma once

// Embedded planar (multi)graph given by a rotation system. Darts are directed
// half-edges; dart d and dart d^1 (twin) form one edge. The cyclic order of
// darts around each node is the counterclockwise rotation; faces are the
// orbits of next(d) = rot_next(twin(d)), which traces the face lying to the
// right of each dart (so bounded faces come out as clockwise walks).

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquesep/rational.hpp"

namespace cliquesep {

struct PlaneGraph {
    // per node
    std::vector<Rat> cost;
    std::vector<char> is_dummy;          // triangulation star nodes etc.
    std::vector<std::int64_t> label;     // external id (region index, face id, ...)
    std::vector<std::vector<int>> rot;   // ccw-ordered darts leaving each node

    // per dart (2 per edge; twin(d) = d ^ 1)
    std::vector<int> dart_origin;
    std::vector<int> rot_pos;   // index of dart within rot[origin]
    std::vector<char> dart_dead;

    // face structure (filled by build_faces)
    std::vector<int> face_of_dart;
    std::vector<std::vector<int>> face_darts;  // closed walks
    int outer_face = -1;

    int num_nodes() const { return static_cast<int>(rot.size()); }
    int num_darts() const { return static_cast<int>(dart_origin.size()); }
    int num_live_edges() const {
        int e = 0;
        for (int d = 0; d < num_darts(); d += 2)
            if (!dart_dead[d]) ++e;
        return e;
    }
    int num_faces() const { return static_cast<int>(face_darts.size()); }

    static int twin(int d) { return d ^ 1; }
    int origin(int d) const { return dart_origin[d]; }
    int target(int d) const { return dart_origin[twin(d)]; }

    int add_node(Rat c = Rat(0), bool dummy = false, std::int64_t lab = -1) {
        cost.push_back(std::move(c));
        is_dummy.push_back(dummy ? 1 : 0);
        label.push_back(lab);
        rot.emplace_back();
        return num_nodes() - 1;
    }

    // Appends edge (u,v) at the end of both rotations; returns the dart u->v.
    int add_edge(int u, int v) {
        int d = num_darts();
        dart_origin.push_back(u);
        dart_origin.push_back(v);
        rot_pos.push_back(static_cast<int>(rot[u].size()));
        rot_pos.push_back(static_cast<int>(rot[v].size()));
        dart_dead.push_back(0);
        dart_dead.push_back(0);
        rot[u].push_back(d);
        rot[v].push_back(d + 1);
        return d;
    }

    void set_rotation(int v, std::vector<int> darts) {
        rot[v] = std::move(darts);
        for (std::size_t i = 0; i < rot[v].size(); ++i) rot_pos[rot[v][i]] = static_cast<int>(i);
    }

    int rot_next(int d) const {
        int v = dart_origin[d];
        const auto& r = rot[v];
        return r[(rot_pos[d] + 1) % r.size()];
    }
    int rot_prev(int d) const {
        int v = dart_origin[d];
        const auto& r = rot[v];
        return r[(rot_pos[d] + r.size() - 1) % r.size()];
    }

    // Next dart along the face to the left of d.
    int face_next(int d) const { return rot_next(twin(d)); }

    // Every live dart must sit in its origin's rotation exactly once, at the
    // recorded position; dead darts must be listed nowhere.
    void check_rotation_coverage() const {
        std::vector<int> seen(num_darts(), 0);
        for (int v = 0; v < num_nodes(); ++v) {
            for (std::size_t k = 0; k < rot[v].size(); ++k) {
                int d = rot[v][k];
                ++seen[d];
                if (dart_dead[d])
                    throw std::runtime_error("dead dart in rotation: " + std::to_string(d));
                if (dart_origin[d] != v)
                    throw std::runtime_error("dart in wrong rotation: " + std::to_string(d));
                if (rot_pos[d] != static_cast<int>(k))
                    throw std::runtime_error("stale rot_pos for dart " + std::to_string(d));
            }
        }
        for (int d = 0; d < num_darts(); ++d) {
            if (!dart_dead[d] && seen[d] != 1)
                throw std::runtime_error("dart listed " + std::to_string(seen[d]) +
                                         " times: " + std::to_string(d));
        }
    }

    void build_faces() {
        face_of_dart.assign(num_darts(), -1);
        face_darts.clear();
        for (int d0 = 0; d0 < num_darts(); ++d0) {
            if (dart_dead[d0] || face_of_dart[d0] != -1) continue;
            int f = num_faces();
            face_darts.emplace_back();
            int d = d0;
            do {
                face_of_dart[d] = f;
                face_darts[f].push_back(d);
                d = face_next(d);
                if (face_darts[f].size() > static_cast<std::size_t>(num_darts()))
                    throw std::runtime_error("inconsistent rotation system: face walk diverges");
            } while (d != d0);
        }
    }

    std::vector<int> component_ids() const {
        std::vector<int> comp(num_nodes(), -1);
        int c = 0;
        std::vector<int> stack;
        for (int s = 0; s < num_nodes(); ++s) {
            if (comp[s] != -1) continue;
            comp[s] = c;
            stack.push_back(s);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int d : rot[v]) {
                    int w = target(d);
                    if (comp[w] == -1) {
                        comp[w] = c;
                        stack.push_back(w);
                    }
                }
            }
            ++c;
        }
        return comp;
    }

    // Euler check V - E + F = 2 per connected component (isolated nodes are
    // trivially planar). Requires build_faces() to have run.
    void check_euler() const {
        std::vector<int> comp = component_ids();
        int c = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
        std::vector<long> v(c, 0), e(c, 0), f(c, 0);
        for (int i = 0; i < num_nodes(); ++i) ++v[comp[i]];
        for (int d = 0; d < num_darts(); d += 2)
            if (!dart_dead[d]) ++e[comp[dart_origin[d]]];
        std::vector<char> seen_face(num_faces(), 0);
        for (int d = 0; d < num_darts(); ++d) {
            if (dart_dead[d]) continue;
            int ff = face_of_dart[d];
            if (!seen_face[ff]) {
                seen_face[ff] = 1;
                ++f[comp[dart_origin[d]]];
            }
        }
        for (int i = 0; i < c; ++i) {
            if (e[i] == 0) continue;
            if (v[i] - e[i] + f[i] != 2)
                throw std::runtime_error("Euler check failed: V-E+F = " +
                                         std::to_string(v[i] - e[i] + f[i]));
        }
    }

    Rat total_cost() const {
        Rat s = 0;
        for (const Rat& c : cost) s += c;
        return s;
    }

    void kill_dart_pair(int d) {
        dart_dead[d] = 1;
        dart_dead[twin(d)] = 1;
    }

    // Removes node v and all incident edges; v stays as an isolated slot.
    void delete_node(int v) {
        std::vector<int> incident = rot[v];
        for (int d : incident) {
            int w = target(d);
            kill_dart_pair(d);
            if (w != v) {
                std::vector<int> r2;
                for (int x : rot[w])
                    if (x != twin(d)) r2.push_back(x);
                set_rotation(w, r2);
            }
        }
        rot[v].clear();
    }

    // Rebuild with only live darts and non-isolated nodes. node_map (old->new)
    // gets -1 for dropped nodes.
    PlaneGraph compact(std::vector<int>& node_map) const {
        PlaneGraph g;
        node_map.assign(num_nodes(), -1);
        for (int v = 0; v < num_nodes(); ++v)
            if (!rot[v].empty()) node_map[v] = g.add_node(cost[v], is_dummy[v], label[v]);
        std::vector<int> dart_map(num_darts(), -1);
        for (int d = 0; d < num_darts(); d += 2) {
            if (dart_dead[d]) continue;
            int nd = g.add_edge(node_map[origin(d)], node_map[target(d)]);
            dart_map[d] = nd;
            dart_map[d + 1] = nd + 1;
        }
        for (int v = 0; v < num_nodes(); ++v) {
            if (node_map[v] == -1) continue;
            std::vector<int> r;
            r.reserve(rot[v].size());
            for (int d : rot[v]) r.push_back(dart_map[d]);
            g.set_rotation(node_map[v], r);
        }
        return g;
    }
};

// Star-triangulates every face of walk length > 3 by inserting one zero-cost
// dummy node per face, connected to each corner occurrence of the walk in
// order. All faces of the result are triangles. Original nodes, edges and
// costs are untouched.
inline PlaneGraph triangulate(PlaneGraph g) {
    g.build_faces();
    g.check_euler();
    int nf = g.num_faces();
    for (int f = 0; f < nf; ++f) {
        std::vector<int> walk = g.face_darts[f];  // copy: we mutate g
        if (walk.size() == 3) continue;  // digon faces (walk length 2) get a star too
        int s = g.add_node(Rat(0), /*dummy=*/true);
        // The triangle (w_i, t_{i+1}, u_i) closes under next = rot_next(twin)
        // iff each star dart v->s sits ccw-immediately-before its walk dart w
        // and the star rotation lists the corners in reverse walk order.
        std::vector<int> star_rot;
        for (std::size_t i = 0; i < walk.size(); ++i) {
            int d = walk[i];
            int v = g.origin(d);
            int nd = g.num_darts();  // dart s->v is nd, dart v->s is nd+1
            g.dart_origin.push_back(s);
            g.dart_origin.push_back(v);
            g.rot_pos.push_back(0);
            g.rot_pos.push_back(0);
            g.dart_dead.push_back(0);
            g.dart_dead.push_back(0);
            star_rot.push_back(nd);
            auto& rv = g.rot[v];
            rv.insert(rv.begin() + g.rot_pos[d], nd + 1);
            for (std::size_t k = 0; k < rv.size(); ++k) g.rot_pos[rv[k]] = static_cast<int>(k);
        }
        std::reverse(star_rot.begin(), star_rot.end());
        g.set_rotation(s, star_rot);
    }
    g.build_faces();
    g.check_euler();
    for (const auto& fd : g.face_darts)
        if (fd.size() != 3) throw std::runtime_error("triangulation left a non-triangle face");
    return g;
}

// Contracts the edge of dart d (origin u absorbs target v); the embedding is
// preserved by splicing v's rotation into u's at the edge position. Self-loops
// arising from parallel edges are removed. v becomes an isolated slot.
inline void contract_edge(PlaneGraph& g, int d) {
    int u = g.origin(d);
    int v = g.target(d);
    if (u == v) throw std::invalid_argument("contract_edge: self-loop");
    int t = PlaneGraph::twin(d);
    std::vector<int> merged;
    const auto ru = g.rot[u];
    const auto rv = g.rot[v];
    int pu = g.rot_pos[d];
    for (std::size_t i = 1; i < ru.size(); ++i) merged.push_back(ru[(pu + i) % ru.size()]);
    int pv = g.rot_pos[t];
    for (std::size_t i = 1; i < rv.size(); ++i) {
        int dd = rv[(pv + i) % rv.size()];
        g.dart_origin[dd] = u;
        merged.push_back(dd);
    }
    g.rot[v].clear();
    g.kill_dart_pair(d);
    g.set_rotation(u, merged);
    // drop self-loops created by edges that ran parallel to the contracted one
    bool changed = true;
    while (changed) {
        changed = false;
        for (int dd : g.rot[u]) {
            if (g.target(dd) == u) {
                int tt = PlaneGraph::twin(dd);
                std::vector<int> r2;
                for (int x : g.rot[u])
                    if (x != dd && x != tt) r2.push_back(x);
                g.kill_dart_pair(dd);
                g.set_rotation(u, r2);
                changed = true;
                break;
            }
        }
    }
}

}  // namespace cliquesep
