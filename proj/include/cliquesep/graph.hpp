#pragma once

// Minimal abstract graph: sorted adjacency lists over dense node ids, with an
// external label map for induced subgraphs.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cliquesep {

struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;       // sorted, symmetric, no self-loops
    std::vector<std::int64_t> labels;        // object ids; defaults to identity

    Graph() = default;
    explicit Graph(int nodes) : n(nodes), adj(nodes), labels(nodes) {
        std::iota(labels.begin(), labels.end(), 0);
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("bad node id");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    void finalize() {
        for (auto& a : adj) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
        }
    }

    bool has_edge(int u, int v) const {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }

    long num_edges() const {
        long m = 0;
        for (const auto& a : adj) m += static_cast<long>(a.size());
        return m / 2;
    }
};

// Induced subgraph on the given nodes (must be valid ids). Node i of the
// result corresponds to nodes[i] and inherits its label.
inline Graph induced(const Graph& g, const std::vector<int>& nodes) {
    std::vector<int> to_new(g.n, -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        int v = nodes[i];
        if (v < 0 || v >= g.n) throw std::out_of_range("induced: unknown node id");
        to_new[v] = static_cast<int>(i);
    }
    Graph h(static_cast<int>(nodes.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        h.labels[i] = g.labels[nodes[i]];
        for (int w : g.adj[nodes[i]])
            if (to_new[w] > static_cast<int>(i)) h.add_edge(static_cast<int>(i), to_new[w]);
    }
    h.finalize();
    return h;
}

// Connected components as lists of node ids, ordered by smallest member.
inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1) continue;
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = static_cast<int>(out.size()) - 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (int w : g.adj[v])
                if (comp[w] == -1) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

inline bool is_acyclic(const Graph& g) {
    return g.num_edges() == g.n - static_cast<long>(components(g).size());
}

struct UnionFind {
    std::vector<int> parent, rank_;
    explicit UnionFind(int n) : parent(n), rank_(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // returns false if x and y were already joined (a cycle would close)
    bool unite(int x, int y) {
        int a = find(x), b = find(y);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }
};

}  // namespace cliquesep
