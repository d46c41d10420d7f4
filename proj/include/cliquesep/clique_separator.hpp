#pragma once

// Clique-based separators: node-disjoint cliques whose removal splits the
// graph into two parts of bounded size, plus the shared verification logic.

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "cliquesep/graph.hpp"
#include "cliquesep/rational.hpp"

namespace cliquesep {

struct CliqueSeparator {
    std::vector<std::vector<int>> cliques;  // node-disjoint, ids of the instance
    std::vector<int> side_a, side_b;

    double weight() const {
        double w = 0;
        for (const auto& c : cliques) w += std::log2(static_cast<double>(c.size()) + 1.0);
        return w;
    }

    std::size_t separator_size() const {
        std::size_t s = 0;
        for (const auto& c : cliques) s += c.size();
        return s;
    }

    void drop_empty_cliques() {
        cliques.erase(std::remove_if(cliques.begin(), cliques.end(),
                                     [](const std::vector<int>& c) { return c.empty(); }),
                      cliques.end());
    }

    // Removes repeated occurrences of a node, keeping its first clique.
    void dedupe() {
        std::set<int> seen;
        for (auto& c : cliques) {
            std::vector<int> kept;
            for (int v : c)
                if (seen.insert(v).second) kept.push_back(v);
            c = std::move(kept);
        }
        drop_empty_cliques();
    }
};

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> violations;
    void fail(std::string what) {
        ok = false;
        violations.push_back(std::move(what));
    }
};

// Structural check of a separator against an explicit graph: cliques are
// cliques and node-disjoint, S/A/B partition a subset of V consistently,
// no A-B edge, and both sides hold at most 2/3 of the non-clique..covered
// population. population = number of nodes the balance is measured against
// (defaults to all of g).
inline VerifyReport verify_separator(const Graph& g, const CliqueSeparator& s,
                                     long population = -1) {
    VerifyReport rep;
    std::vector<int> where(g.n, 0);  // 0 unseen, 1 clique, 2 A, 3 B
    for (const auto& c : s.cliques) {
        for (int v : c) {
            if (v < 0 || v >= g.n) {
                rep.fail("clique node out of range: " + std::to_string(v));
                continue;
            }
            if (where[v] != 0) rep.fail("node in two separator parts: " + std::to_string(v));
            where[v] = 1;
        }
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (!g.has_edge(c[i], c[j]))
                    rep.fail("clique pair not adjacent: " + std::to_string(c[i]) + "," +
                             std::to_string(c[j]));
    }
    for (int v : s.side_a) {
        if (v < 0 || v >= g.n || where[v] != 0)
            rep.fail("side A node invalid or duplicated: " + std::to_string(v));
        else
            where[v] = 2;
    }
    for (int v : s.side_b) {
        if (v < 0 || v >= g.n || where[v] != 0)
            rep.fail("side B node invalid or duplicated: " + std::to_string(v));
        else
            where[v] = 3;
    }
    for (int v = 0; v < g.n; ++v)
        if (where[v] == 0) rep.fail("node in no part: " + std::to_string(v));
    for (int u = 0; u < g.n; ++u) {
        if (where[u] != 2) continue;
        for (int w : g.adj[u])
            if (where[w] == 3)
                rep.fail("edge between A and B: " + std::to_string(u) + "-" + std::to_string(w));
    }
    long pop = population >= 0 ? population : g.n;
    if (3 * static_cast<long>(s.side_a.size()) > 2 * pop)
        rep.fail("side A too large: " + std::to_string(s.side_a.size()));
    if (3 * static_cast<long>(s.side_b.size()) > 2 * pop)
        rep.fail("side B too large: " + std::to_string(s.side_b.size()));
    return rep;
}

// Balanced bipartition of whole pieces (used when the intersection graph is
// disconnected, and to attach leftover components around a separator found in
// one component). Greedy over pieces sorted by size; both sides end at most
// 2/3 of the total when every piece is at most 2/3 of it.
inline void pack_components(const std::vector<std::vector<int>>& pieces, std::vector<int>& side_a,
                            std::vector<int>& side_b) {
    std::vector<int> idx(pieces.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int x, int y) { return pieces[x].size() > pieces[y].size(); });
    std::size_t ca = side_a.size(), cb = side_b.size();
    for (int i : idx) {
        bool to_a = ca <= cb;
        auto& side = to_a ? side_a : side_b;
        (to_a ? ca : cb) += pieces[i].size();
        side.insert(side.end(), pieces[i].begin(), pieces[i].end());
    }
}

}  // namespace cliquesep
