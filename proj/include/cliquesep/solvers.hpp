#pragma once

// Separator-driven exact solvers for Maximum Independent Set, Maximum Induced
// Forest (complement of Feedback Vertex Set) and q-Coloring, parameterized by
// a clique-separator oracle, plus exhaustive reference oracles.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cliquesep/clique_separator.hpp"
#include "cliquesep/graph.hpp"

namespace cliquesep {

// Computes a clique-based separator of the induced intersection subgraph on
// the given instance ids; the optional weights bias the balance (used by the
// induced-forest recursion to keep boundary sets small).
using SeparatorOracle =
    std::function<CliqueSeparator(const std::vector<int>&, const std::vector<Rat>*)>;

struct SolveStats {
    long nodes_expanded = 0;
    long oracle_calls = 0;
    long fallbacks = 0;
};

namespace detail_solve {

inline bool lex_better(const std::vector<int>& a, const std::vector<int>& b) {
    // a better than b: larger, then lexicographically smaller
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
}

// ---------------------------------------------------------------------------
// branch-and-bound maximum independent set with degree-0/1/2 reductions and
// vertex folding; certificates are rebuilt from the reduction trace

class FoldMis {
    struct Action {
        enum Kind { Take, Fold } kind;
        int a = -1, b = -1, c = -1, folded = -1;  // Take: a; Fold: v' = folded from (a;b,c)
    };
    struct State {
        std::vector<int> local_of;
        std::vector<int> orig;              // local id -> original id (-1 for fold nodes)
        std::vector<std::vector<int>> adj;  // local adjacency
        std::vector<char> alive;
        std::vector<Action> trace;
        int gain = 0;  // nodes guaranteed by the trace
    };

  public:
    FoldMis(const Graph& g, SolveStats* stats) : g_(g), stats_(stats) {}

    // nodes: original graph ids; returns the maximum independent set
    std::vector<int> solve(const std::vector<int>& nodes) {
        State s;
        s.local_of.assign(g_.n, -1);
        for (int v : nodes) {
            s.local_of[v] = static_cast<int>(s.orig.size());
            s.orig.push_back(v);
        }
        s.adj.resize(s.orig.size());
        s.alive.assign(s.orig.size(), 1);
        for (int v : nodes)
            for (int w : g_.adj[v])
                if (s.local_of[w] != -1) s.adj[s.local_of[v]].push_back(s.local_of[w]);
        best_gain_ = -1;
        seed_incumbent(s);
        recurse(std::move(s), 0);
        std::sort(best_set_.begin(), best_set_.end());
        return best_set_;
    }

    // a greedy min-degree solution warms up the incumbent so pruning engages
    // from the start
    void seed_incumbent(const State& s0) {
        State s = s0;
        std::vector<int> set;
        while (true) {
            int pick = -1;
            std::size_t mindeg = SIZE_MAX;
            for (int v = 0; v < static_cast<int>(s.adj.size()); ++v)
                if (s.alive[v] && s.adj[v].size() < mindeg) {
                    mindeg = s.adj[v].size();
                    pick = v;
                }
            if (pick == -1) break;
            set.push_back(s.orig[pick]);
            std::vector<int> nbrs = s.adj[pick];
            drop(s, pick);
            for (int w : nbrs) drop(s, w);
        }
        std::sort(set.begin(), set.end());
        best_gain_ = static_cast<int>(set.size());
        best_set_ = std::move(set);
    }

  private:
    const Graph& g_;
    SolveStats* stats_;
    std::vector<int> best_set_;
    int best_gain_ = -1;

    static void drop(State& s, int v) {
        s.alive[v] = 0;
        for (int w : s.adj[v]) {
            auto& a = s.adj[w];
            a.erase(std::remove(a.begin(), a.end(), v), a.end());
        }
        s.adj[v].clear();
    }

    void offer(const State& s) {
        if (s.gain < best_gain_) return;
        // reconstruct: walk the trace backwards
        std::vector<char> chosen(s.orig.size(), 0);
        for (auto it = s.trace.rbegin(); it != s.trace.rend(); ++it) {
            if (it->kind == Action::Take) {
                chosen[it->a] = 1;
            } else {
                if (chosen[it->folded]) {
                    chosen[it->folded] = 0;
                    chosen[it->b] = 1;
                    chosen[it->c] = 1;
                } else {
                    chosen[it->a] = 1;
                }
            }
        }
        std::vector<int> set;
        for (std::size_t v = 0; v < s.orig.size(); ++v)
            if (chosen[v]) set.push_back(s.orig[v]);
        std::sort(set.begin(), set.end());
        if (s.gain > best_gain_ || (s.gain == best_gain_ && set < best_set_)) {
            best_gain_ = s.gain;
            best_set_ = set;
        }
    }

    int clique_cover_bound(const State& s, const std::vector<int>& live) const {
        std::vector<char> used(s.adj.size(), 0);
        int cliques = 0;
        for (int v : live) {
            if (used[v]) continue;
            ++cliques;
            used[v] = 1;
            std::vector<int> members{v};
            for (int w : s.adj[v]) {
                if (used[w]) continue;
                bool ok = true;
                for (int m : members) {
                    bool adjacent = false;
                    for (int x : s.adj[m])
                        if (x == w) adjacent = true;
                    if (!adjacent) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    members.push_back(w);
                    used[w] = 1;
                }
            }
        }
        return cliques;
    }

    // drops one vertex whose closed neighborhood contains a neighbor's closed
    // neighborhood (some maximum independent set avoids it)
    bool dominate_once(State& s) {
        std::vector<char> mark(s.adj.size(), 0);
        for (int v = 0; v < static_cast<int>(s.adj.size()); ++v) {
            if (!s.alive[v]) continue;
            mark[v] = 1;
            for (int w : s.adj[v]) mark[w] = 1;
            for (int u : s.adj[v]) {
                if (s.adj[u].size() > s.adj[v].size()) continue;
                bool subset = true;
                for (int x : s.adj[u])
                    if (!mark[x]) {
                        subset = false;
                        break;
                    }
                if (subset) {
                    mark[v] = 0;
                    for (int w : s.adj[v]) mark[w] = 0;
                    drop(s, v);
                    return true;
                }
            }
            mark[v] = 0;
            for (int w : s.adj[v]) mark[w] = 0;
        }
        return false;
    }

    void recurse(State s, int depth) {
        if (stats_) ++stats_->nodes_expanded;
        // reduction loop
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < static_cast<int>(s.adj.size()); ++v) {
                if (!s.alive[v]) continue;
                std::size_t deg = s.adj[v].size();
                if (deg == 0) {
                    s.trace.push_back({Action::Take, v});
                    ++s.gain;
                    drop(s, v);
                    changed = true;
                } else if (deg == 1) {
                    int nb = s.adj[v][0];
                    s.trace.push_back({Action::Take, v});
                    ++s.gain;
                    drop(s, v);
                    drop(s, nb);
                    changed = true;
                } else if (deg == 2) {
                    int a = s.adj[v][0], b = s.adj[v][1];
                    bool ab = false;
                    for (int x : s.adj[a])
                        if (x == b) ab = true;
                    if (ab) {
                        // triangle: v is optimal
                        s.trace.push_back({Action::Take, v});
                        ++s.gain;
                        drop(s, v);
                        drop(s, a);
                        drop(s, b);
                    } else {
                        // fold v,a,b into a fresh node
                        int f = static_cast<int>(s.adj.size());
                        std::vector<int> nbrs;
                        for (int x : s.adj[a])
                            if (x != v) nbrs.push_back(x);
                        for (int x : s.adj[b])
                            if (x != v) nbrs.push_back(x);
                        std::sort(nbrs.begin(), nbrs.end());
                        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
                        drop(s, v);
                        drop(s, a);
                        drop(s, b);
                        s.adj.push_back(nbrs);
                        s.alive.push_back(1);
                        s.orig.push_back(-1);
                        for (int x : nbrs) s.adj[x].push_back(f);
                        s.trace.push_back({Action::Fold, v, a, b, f});
                        ++s.gain;  // either v alone or both a,b; one is banked here
                    }
                    changed = true;
                }
                if (changed) break;
            }
            if (!changed) changed = dominate_once(s);
        }
        std::vector<int> live;
        for (int v = 0; v < static_cast<int>(s.adj.size()); ++v)
            if (s.alive[v]) live.push_back(v);
        if (live.empty()) {
            offer(s);
            return;
        }
        if (s.gain + clique_cover_bound(s, live) <= best_gain_) return;
        // split into connected components
        {
            std::vector<int> comp(s.adj.size(), -1);
            int nc = 0;
            for (int v : live) {
                if (comp[v] != -1) continue;
                std::vector<int> stack{v};
                comp[v] = nc;
                while (!stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    for (int w : s.adj[u])
                        if (comp[w] == -1) {
                            comp[w] = nc;
                            stack.push_back(w);
                        }
                }
                ++nc;
            }
            if (nc > 1) {
                // solve each component independently on a scratch instance and
                // commit its take-set into the trace
                for (int c = 1; c < nc; ++c) {
                    std::vector<int> part;
                    for (int v : live)
                        if (comp[v] == c) part.push_back(v);
                    State sub;
                    sub.adj.resize(s.adj.size());
                    sub.alive.assign(s.adj.size(), 0);
                    sub.orig.assign(s.adj.size(), -1);
                    for (int v : part) {
                        sub.alive[v] = 1;
                        sub.adj[v] = s.adj[v];
                        sub.orig[v] = v;  // local ids of s
                    }
                    FoldMis inner(g_, stats_);
                    inner.best_gain_ = -1;
                    inner.recurse(std::move(sub), depth + 1);
                    for (int v : inner.best_set_) {
                        // inner ids are s-local ids
                        s.trace.push_back({Action::Take, v});
                        ++s.gain;
                    }
                    for (int v : part) drop(s, v);
                }
                recurse(std::move(s), depth + 1);
                return;
            }
        }
        // branch on a maximum-degree node
        int pick = live[0];
        std::size_t maxdeg = 0;
        for (int v : live)
            if (s.adj[v].size() > maxdeg) {
                maxdeg = s.adj[v].size();
                pick = v;
            }
        {
            State inc = s;
            inc.trace.push_back({Action::Take, pick});
            ++inc.gain;
            std::vector<int> nbrs = inc.adj[pick];
            drop(inc, pick);
            for (int w : nbrs) drop(inc, w);
            recurse(std::move(inc), depth + 1);
        }
        {
            State exc = std::move(s);
            drop(exc, pick);
            recurse(std::move(exc), depth + 1);
        }
    }
};


}  // namespace detail_solve

// ---------------------------------------------------------------------------
// exhaustive reference oracles

inline std::vector<int> brute_mis(const Graph& g) {
    if (g.n > 25) throw std::invalid_argument("brute_mis capped at 25 nodes");
    std::vector<std::uint32_t> nb(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v]) nb[v] |= 1u << w;
    std::uint32_t best = 0;
    int best_count = -1;
    for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
        int count = __builtin_popcount(mask);
        if (count < best_count) continue;
        bool ok = true;
        for (int v = 0; v < g.n && ok; ++v)
            if ((mask >> v) & 1u)
                if (nb[v] & mask) ok = false;
        if (!ok) continue;
        if (count > best_count || (count == best_count && mask < best)) {
            best = mask;
            best_count = count;
        }
    }
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if ((best >> v) & 1u) out.push_back(v);
    return out;
}

inline std::vector<int> brute_mif(const Graph& g) {
    if (g.n > 16) throw std::invalid_argument("brute_mif capped at 16 nodes");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v])
            if (v < w) edges.emplace_back(v, w);
    std::uint32_t best = 0;
    int best_count = -1;
    for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
        int count = __builtin_popcount(mask);
        if (count < best_count) continue;
        UnionFind uf(g.n);
        bool ok = true;
        for (auto& [v, w] : edges) {
            if (((mask >> v) & 1u) && ((mask >> w) & 1u))
                if (!uf.unite(v, w)) {
                    ok = false;
                    break;
                }
        }
        if (!ok) continue;
        if (count > best_count || (count == best_count && mask < best)) {
            best = mask;
            best_count = count;
        }
    }
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if ((best >> v) & 1u) out.push_back(v);
    return out;
}

// exhaustive q-colorability decision with a witness
inline std::optional<std::vector<int>> brute_qcoloring(const Graph& g, int q) {
    if (g.n > 18) throw std::invalid_argument("brute_qcoloring capped at 18 nodes");
    std::vector<int> color(g.n, -1);
    std::function<bool(int)> go = [&](int v) -> bool {
        if (v == g.n) return true;
        for (int c = 0; c < q; ++c) {
            bool ok = true;
            for (int w : g.adj[v])
                if (w < v && color[w] == c) ok = false;
            if (!ok) continue;
            color[v] = c;
            if (go(v + 1)) return true;
            color[v] = -1;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return color;
}

// ---------------------------------------------------------------------------
// separator-driven maximum independent set

struct MisOptions {
    int base_n = 20;
    int budget_bits = 14;  // clique-choice enumeration cap per separator
    int max_depth = 64;
};

namespace detail_solve {

struct MisRec {
    const Graph& g;  // full instance graph, node ids = instance ids
    const SeparatorOracle* oracle;
    MisOptions opt;
    SolveStats* stats;
    std::map<std::vector<int>, std::vector<int>> memo;

    std::vector<int> fallback(const std::vector<int>& nodes) {
        if (stats) ++stats->fallbacks;
        FoldMis bb(g, stats);
        return bb.solve(nodes);
    }

    std::vector<int> solve(std::vector<int> nodes, int depth) {
        std::sort(nodes.begin(), nodes.end());
        if (nodes.empty()) return {};
        auto it = memo.find(nodes);
        if (it != memo.end()) return it->second;
        std::vector<int> result;
        if (static_cast<int>(nodes.size()) <= opt.base_n || !oracle || depth >= opt.max_depth) {
            result = fallback(nodes);
            memo.emplace(std::move(nodes), result);
            return result;
        }
        if (stats) ++stats->oracle_calls;
        CliqueSeparator sep = (*oracle)(nodes, nullptr);
        // enumeration budget: product of (|C|+1)
        double bits = 0;
        for (const auto& c : sep.cliques) bits += std::log2(static_cast<double>(c.size()) + 1);
        std::size_t sep_nodes = sep.separator_size();
        std::size_t maxside = std::max(sep.side_a.size(), sep.side_b.size());
        if (bits > opt.budget_bits || maxside + sep_nodes >= nodes.size()) {
            result = fallback(nodes);
            memo.emplace(std::move(nodes), result);
            return result;
        }

        std::vector<char> in_instance(g.n, 0);
        for (int v : nodes) in_instance[v] = 1;

        // enumerate independent choices of at most one node per clique
        std::vector<int> chosen;
        std::vector<char> removed(g.n, 0);  // chosen-neighborhood mask
        std::vector<int> best;
        auto consider = [&]() {
            std::vector<int> sub_a, sub_b;
            for (int v : sep.side_a)
                if (!removed[v]) sub_a.push_back(v);
            for (int v : sep.side_b)
                if (!removed[v]) sub_b.push_back(v);
            std::vector<int> cand = chosen;
            std::vector<int> ra = solve(sub_a, depth + 1);
            std::vector<int> rb = solve(sub_b, depth + 1);
            cand.insert(cand.end(), ra.begin(), ra.end());
            cand.insert(cand.end(), rb.begin(), rb.end());
            std::sort(cand.begin(), cand.end());
            if (lex_better(cand, best)) best = cand;
        };
        std::function<void(std::size_t)> enumerate = [&](std::size_t ci) {
            // optimistic bound: everything left could join
            std::size_t left = 0;
            for (std::size_t k = ci; k < sep.cliques.size(); ++k) ++left;
            std::size_t open = 0;
            for (int v : sep.side_a)
                if (!removed[v]) ++open;
            for (int v : sep.side_b)
                if (!removed[v]) ++open;
            if (chosen.size() + left + open <= best.size()) return;
            if (ci == sep.cliques.size()) {
                consider();
                return;
            }
            enumerate(ci + 1);  // skip this clique
            for (int v : sep.cliques[ci]) {
                bool clash = false;
                for (int u : chosen)
                    if (g.has_edge(u, v)) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
                chosen.push_back(v);
                std::vector<int> marked;
                if (!removed[v]) {
                    removed[v] = 1;
                    marked.push_back(v);
                }
                for (int w : g.adj[v])
                    if (in_instance[w] && !removed[w]) {
                        removed[w] = 1;
                        marked.push_back(w);
                    }
                enumerate(ci + 1);
                chosen.pop_back();
                for (int w : marked) removed[w] = 0;
            }
        };
        enumerate(0);
        result = best;
        memo.emplace(std::move(nodes), result);
        return result;
    }
};

}  // namespace detail_solve

inline std::vector<int> solve_mis(const Graph& g, const SeparatorOracle* oracle,
                                  MisOptions opt = {}, SolveStats* stats = nullptr) {
    detail_solve::MisRec rec{g, oracle, opt, stats, {}};
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    return rec.solve(all, 0);
}

// ---------------------------------------------------------------------------
// separator-driven maximum induced forest (complement of FVS)

struct MifOptions {
    int base_n = 14;
    int budget_bits = 12;
    int max_depth = 40;
};

namespace detail_solve {

// canonical boundary-partition key of a candidate set over the boundary
inline std::vector<int> partition_pattern(const Graph& g, const std::vector<int>& x,
                                          const std::vector<int>& boundary) {
    // boundary must be a subset of x; pattern = class id per boundary position
    std::vector<int> sorted_x = x;
    std::sort(sorted_x.begin(), sorted_x.end());
    std::vector<int> local(g.n, -1);
    for (std::size_t i = 0; i < sorted_x.size(); ++i) local[sorted_x[i]] = static_cast<int>(i);
    UnionFind uf(static_cast<int>(sorted_x.size()));
    for (int v : sorted_x)
        for (int w : g.adj[v])
            if (w > v && local[w] != -1) uf.unite(local[v], local[w]);
    std::vector<int> pattern;
    std::map<int, int> relabel;
    for (int b : boundary) {
        int root = uf.find(local[b]);
        auto [it, fresh] = relabel.emplace(root, static_cast<int>(relabel.size()));
        pattern.push_back(it->second);
    }
    return pattern;
}

struct MifRec {
    const Graph& g;
    const SeparatorOracle* oracle;
    MifOptions opt;
    SolveStats* stats;
    std::map<std::pair<std::vector<int>, std::vector<int>>,
             std::map<std::vector<int>, std::vector<int>>>
        memo;

    bool is_forest(const std::vector<int>& x) const {
        std::vector<int> sorted_x = x;
        std::sort(sorted_x.begin(), sorted_x.end());
        std::vector<int> local(g.n, -1);
        for (std::size_t i = 0; i < sorted_x.size(); ++i) local[sorted_x[i]] = static_cast<int>(i);
        UnionFind uf(static_cast<int>(sorted_x.size()));
        for (int v : sorted_x)
            for (int w : g.adj[v])
                if (w > v && local[w] != -1)
                    if (!uf.unite(local[v], local[w])) return false;
        return true;
    }

    // all maximal results per boundary partition for the node set `nodes`
    std::map<std::vector<int>, std::vector<int>> solve(std::vector<int> nodes,
                                                       std::vector<int> boundary, int depth) {
        std::sort(nodes.begin(), nodes.end());
        std::sort(boundary.begin(), boundary.end());
        auto key = std::make_pair(nodes, boundary);
        auto mit = memo.find(key);
        if (mit != memo.end()) return mit->second;
        if (stats) ++stats->nodes_expanded;

        std::map<std::vector<int>, std::vector<int>> result;
        auto offer = [&](const std::vector<int>& x) {
            std::vector<int> pat = partition_pattern(g, x, boundary);
            auto it = result.find(pat);
            std::vector<int> sx = x;
            std::sort(sx.begin(), sx.end());
            if (it == result.end() || lex_better(sx, it->second)) result[pat] = sx;
        };

        bool small = static_cast<int>(nodes.size()) <= opt.base_n;
        bool use_fallback = small || !oracle || depth >= opt.max_depth;
        CliqueSeparator sep;
        if (!use_fallback) {
            if (stats) ++stats->oracle_calls;
            // alternate between uniform and boundary-heavy balance
            if (depth % 2 == 1 && !boundary.empty()) {
                std::vector<Rat> w(g.n, Rat(1, 1000000));
                for (int b : boundary) w[b] = 1;
                sep = (*oracle)(nodes, &w);
            } else {
                sep = (*oracle)(nodes, nullptr);
            }
            double bits = 0;
            for (const auto& c : sep.cliques)
                bits += 2 * std::log2(static_cast<double>(c.size()) + 1);
            if (bits > opt.budget_bits ||
                std::max(sep.side_a.size(), sep.side_b.size()) + sep.separator_size() >=
                    nodes.size())
                use_fallback = true;
        }

        if (use_fallback) {
            if (stats) ++stats->fallbacks;
            // exhaustive over supersets of the boundary
            std::vector<int> free;
            std::vector<char> is_boundary(g.n, 0);
            for (int b : boundary) is_boundary[b] = 1;
            for (int v : nodes)
                if (!is_boundary[v]) free.push_back(v);
            if (free.size() > 22) throw std::runtime_error("induced-forest fallback too large");
            for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
                std::vector<int> x = boundary;
                for (std::size_t k = 0; k < free.size(); ++k)
                    if ((mask >> k) & 1u) x.push_back(free[k]);
                if (!is_forest(x)) continue;
                offer(x);
            }
            memo.emplace(std::move(key), result);
            return result;
        }

        // separator route: choose at most two nodes per clique (all boundary
        // nodes that sit inside cliques are forced)
        std::vector<char> in_boundary(g.n, 0);
        for (int b : boundary) in_boundary[b] = 1;
        std::vector<char> side_of(g.n, 0);
        for (int v : sep.side_a) side_of[v] = 1;
        for (int v : sep.side_b) side_of[v] = 2;

        std::vector<std::vector<int>> choices_per_clique;
        for (const auto& c : sep.cliques) {
            (void)c;
            choices_per_clique.emplace_back();
        }
        std::vector<int> xs;
        std::function<void(std::size_t)> enumerate = [&](std::size_t ci) {
            if (ci == sep.cliques.size()) {
                // X_S fixed; all boundary-in-clique nodes must be chosen
                for (int b : boundary) {
                    bool in_clique = false;
                    for (const auto& c : sep.cliques)
                        for (int v : c)
                            if (v == b) in_clique = true;
                    if (in_clique &&
                        std::find(xs.begin(), xs.end(), b) == xs.end())
                        return;
                }
                if (!is_forest(xs)) return;
                std::vector<int> na, nb_;
                for (int v : sep.side_a) na.push_back(v);
                for (int v : sep.side_b) nb_.push_back(v);
                std::vector<int> ba, bb;
                for (int b : boundary) {
                    if (side_of[b] == 1) ba.push_back(b);
                    if (side_of[b] == 2) bb.push_back(b);
                }
                for (int v : xs) {
                    na.push_back(v);
                    nb_.push_back(v);
                    ba.push_back(v);
                    bb.push_back(v);
                }
                auto ra = solve(na, ba, depth + 1);
                auto rb = solve(nb_, bb, depth + 1);
                for (auto& [pa, seta] : ra)
                    for (auto& [pb, setb] : rb) {
                        std::vector<int> x = seta;
                        x.insert(x.end(), setb.begin(), setb.end());
                        std::sort(x.begin(), x.end());
                        x.erase(std::unique(x.begin(), x.end()), x.end());
                        if (!is_forest(x)) continue;
                        offer(x);
                    }
                return;
            }
            const auto& c = sep.cliques[ci];
            // choices: subsets of size <= 2
            enumerate(ci + 1);
            for (std::size_t i = 0; i < c.size(); ++i) {
                xs.push_back(c[i]);
                enumerate(ci + 1);
                for (std::size_t j = i + 1; j < c.size(); ++j) {
                    xs.push_back(c[j]);
                    enumerate(ci + 1);
                    xs.pop_back();
                }
                xs.pop_back();
            }
        };
        enumerate(0);
        memo.emplace(std::move(key), result);
        return result;
    }
};

}  // namespace detail_solve

inline std::vector<int> solve_mif(const Graph& g, const SeparatorOracle* oracle,
                                  MifOptions opt = {}, SolveStats* stats = nullptr) {
    detail_solve::MifRec rec{g, oracle, opt, stats, {}};
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    auto result = rec.solve(all, {}, 0);
    std::vector<int> best;
    for (auto& [pat, set] : result)
        if (detail_solve::lex_better(set, best)) best = set;
    return best;
}

// minimum feedback vertex set = complement of the maximum induced forest
inline std::vector<int> solve_fvs(const Graph& g, const SeparatorOracle* oracle,
                                  MifOptions opt = {}, SolveStats* stats = nullptr) {
    std::vector<int> mif = solve_mif(g, oracle, opt, stats);
    std::vector<char> in_mif(g.n, 0);
    for (int v : mif) in_mif[v] = 1;
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (!in_mif[v]) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------------------
// separator-driven q-coloring

struct ColorOptions {
    int base_n = 18;
    int budget_bits = 14;
    int max_depth = 40;
};

namespace detail_solve {

struct ColorRec {
    const Graph& g;
    const SeparatorOracle* oracle;
    int q;
    ColorOptions opt;
    SolveStats* stats;
    std::vector<int> color;  // over g.n, -1 = uncolored

    bool backtrack(const std::vector<int>& nodes, std::size_t i) {
        if (i == nodes.size()) return true;
        int v = nodes[i];
        for (int c = 0; c < q; ++c) {
            bool ok = true;
            for (int w : g.adj[v])
                if (color[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (backtrack(nodes, i + 1)) return true;
            color[v] = -1;
        }
        return false;
    }

    bool solve(std::vector<int> nodes, int depth) {
        if (nodes.empty()) return true;
        if (stats) ++stats->nodes_expanded;
        std::sort(nodes.begin(), nodes.end());
        if (static_cast<int>(nodes.size()) <= opt.base_n || !oracle || depth >= opt.max_depth) {
            if (stats) ++stats->fallbacks;
            return backtrack(nodes, 0);
        }
        if (stats) ++stats->oracle_calls;
        CliqueSeparator sep = (*oracle)(nodes, nullptr);
        std::vector<int> sep_nodes;
        for (const auto& c : sep.cliques)
            for (int v : c) sep_nodes.push_back(v);
        double bits = static_cast<double>(sep_nodes.size()) * std::log2(std::max(2, q));
        if (bits > opt.budget_bits ||
            std::max(sep.side_a.size(), sep.side_b.size()) + sep_nodes.size() >= nodes.size()) {
            if (stats) ++stats->fallbacks;
            return backtrack(nodes, 0);
        }
        // enumerate proper colorings of the separator nodes, then recurse into
        // the two sides with those colors pinned; side colors are unwound when
        // a combination fails
        auto reset = [&](const std::vector<int>& set) {
            for (int v : set) color[v] = -1;
        };
        std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
            if (i == sep_nodes.size()) {
                if (!solve(sep.side_a, depth + 1)) {
                    reset(sep.side_a);
                    return false;
                }
                if (!solve(sep.side_b, depth + 1)) {
                    reset(sep.side_a);
                    reset(sep.side_b);
                    return false;
                }
                return true;
            }
            int v = sep_nodes[i];
            for (int c = 0; c < q; ++c) {
                bool ok = true;
                for (int w : g.adj[v])
                    if (color[w] == c) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                color[v] = c;
                if (assign(i + 1)) return true;
                color[v] = -1;
            }
            return false;
        };
        if (assign(0)) return true;
        for (int v : nodes) color[v] = -1;
        return false;
    }
};

}  // namespace detail_solve

// Returns a proper q-coloring or nullopt. A clique of size q+1 rejects
// immediately.
inline std::optional<std::vector<int>> solve_qcoloring(const Graph& g,
                                                       const SeparatorOracle* oracle, int q,
                                                       ColorOptions opt = {},
                                                       SolveStats* stats = nullptr) {
    if (q < 1) return std::nullopt;
    // clique pre-check restricted to closed neighborhoods
    {
        std::vector<int> clique;
        std::function<bool(const std::vector<int>&, std::size_t)> grow =
            [&](const std::vector<int>& cand, std::size_t need) -> bool {
            if (clique.size() == need) return true;
            for (std::size_t i = 0; i < cand.size(); ++i) {
                int v = cand[i];
                std::vector<int> next;
                for (std::size_t j = i + 1; j < cand.size(); ++j)
                    if (g.has_edge(v, cand[j])) next.push_back(cand[j]);
                if (clique.size() + 1 + next.size() < need) continue;
                clique.push_back(v);
                if (grow(next, need)) return true;
                clique.pop_back();
            }
            return false;
        };
        for (int v = 0; v < g.n && q + 1 <= g.n; ++v) {
            if (static_cast<int>(g.adj[v].size()) < q) continue;
            clique = {v};
            if (grow(g.adj[v], static_cast<std::size_t>(q) + 1)) return std::nullopt;
        }
    }
    detail_solve::ColorRec rec{g, oracle, q, opt, stats, std::vector<int>(g.n, -1)};
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    if (!rec.solve(all, 0)) return std::nullopt;
    return rec.color;
}

}  // namespace cliquesep
