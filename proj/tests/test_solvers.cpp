#include <catch2/catch.hpp>

#include "cliquesep/instance.hpp"
#include "cliquesep/solvers.hpp"

#include <random>

using namespace cliquesep;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    g.finalize();
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    g.finalize();
    return g;
}

bool independent(const Graph& g, const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) return false;
    return true;
}

bool forest(const Graph& g, const std::vector<int>& s) {
    Graph h = induced(g, s);
    return is_acyclic(h);
}

bool proper(const Graph& g, const std::vector<int>& col) {
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v])
            if (col[v] == col[w]) return false;
    return true;
}

}  // namespace

TEST_CASE("brute-force oracles on canned graphs") {
    Graph empty(5);
    empty.finalize();
    CHECK(brute_mis(empty).size() == 5);
    CHECK(brute_mif(empty).size() == 5);
    CHECK(brute_qcoloring(empty, 1).has_value());

    Graph k4 = complete(4);
    CHECK(brute_mis(k4).size() == 1);
    CHECK(brute_mif(k4).size() == 2);
    CHECK(!brute_qcoloring(k4, 3).has_value());
    CHECK(brute_qcoloring(k4, 4).has_value());

    Graph c4 = cycle(4);
    CHECK(brute_mif(c4).size() == 3);  // FVS size 1

    Graph c5 = cycle(5);
    CHECK(!brute_qcoloring(c5, 2).has_value());
    CHECK(brute_qcoloring(c5, 3).has_value());

    Instance pet = gen_petersen();
    CHECK(brute_mis(pet.abstract_graph).size() == 4);
    CHECK(brute_qcoloring(pet.abstract_graph, 3).has_value());

    CHECK_THROWS(brute_mis(complete(26)));
}

TEST_CASE("solver equals brute force without an oracle") {
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
        int n = 6 + static_cast<int>(rng() % 10);
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 4 == 0) g.add_edge(i, j);
        g.finalize();
        std::vector<int> a = solve_mis(g, nullptr);
        std::vector<int> b = brute_mis(g);
        CHECK(a.size() == b.size());
        CHECK(independent(g, a));
        if (n <= 14) {
            std::vector<int> fa = solve_mif(g, nullptr);
            std::vector<int> fb = brute_mif(g);
            CHECK(fa.size() == fb.size());
            CHECK(forest(g, fa));
        }
        for (int q : {2, 3}) {
            auto ca = solve_qcoloring(g, nullptr, q);
            auto cb = brute_qcoloring(g, q);
            CHECK(ca.has_value() == cb.has_value());
            if (ca) CHECK(proper(g, *ca));
        }
    }
}

TEST_CASE("MIS with geometric oracles equals brute force") {
    std::mt19937 rng(11);
    MisOptions opt;
    opt.base_n = 6;  // force the separator recursion to engage
    SECTION("map instances") {
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            Instance inst = gen_map_voronoi(14, seed);
            Graph g = instance_graph(inst);
            SeparatorOracle oracle = make_oracle(inst);
            SolveStats stats;
            std::vector<int> a = solve_mis(g, &oracle, opt, &stats);
            std::vector<int> b = brute_mis(g);
            CHECK(a.size() == b.size());
            CHECK(independent(g, a));
            CHECK(stats.oracle_calls > 0);
        }
    }
    SECTION("pseudodisk instances") {
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            Instance inst = gen_pseudodisk(13, seed);
            Graph g = instance_graph(inst);
            SeparatorOracle oracle = make_oracle(inst);
            std::vector<int> a = solve_mis(g, &oracle, opt);
            std::vector<int> b = brute_mis(g);
            CHECK(a.size() == b.size());
            CHECK(independent(g, a));
        }
    }
    SECTION("visibility instances") {
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            Instance inst = gen_visibility(14, seed, seed % 2 ? 1 : 0);
            Graph g = instance_graph(inst);
            SeparatorOracle oracle = make_oracle(inst);
            std::vector<int> a = solve_mis(g, &oracle, opt);
            std::vector<int> b = brute_mis(g);
            CHECK(a.size() == b.size());
            CHECK(independent(g, a));
        }
    }
    SECTION("geodesic instances") {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            Instance inst = gen_geodesic(10, seed, 14);
            Graph g = instance_graph(inst);
            SeparatorOracle oracle = make_oracle(inst);
            std::vector<int> a = solve_mis(g, &oracle, opt);
            std::vector<int> b = brute_mis(g);
            CHECK(a.size() == b.size());
            CHECK(independent(g, a));
        }
    }
}

TEST_CASE("MIF with geometric oracles equals brute force") {
    MifOptions opt;
    opt.base_n = 6;
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        Instance inst = gen_map_voronoi(11, seed);
        Graph g = instance_graph(inst);
        SeparatorOracle oracle = make_oracle(inst);
        std::vector<int> a = solve_mif(g, &oracle, opt);
        std::vector<int> b = brute_mif(g);
        CHECK(a.size() == b.size());
        CHECK(forest(g, a));
    }
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        Instance inst = gen_visibility(11, seed, 0);
        Graph g = instance_graph(inst);
        SeparatorOracle oracle = make_oracle(inst);
        std::vector<int> a = solve_mif(g, &oracle, opt);
        std::vector<int> b = brute_mif(g);
        CHECK(a.size() == b.size());
        CHECK(forest(g, a));
    }
}

TEST_CASE("q-coloring with geometric oracles equals brute force") {
    ColorOptions opt;
    opt.base_n = 6;
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        Instance inst = gen_map_voronoi(13, seed);
        Graph g = instance_graph(inst);
        SeparatorOracle oracle = make_oracle(inst);
        for (int q : {2, 3, 4}) {
            auto a = solve_qcoloring(g, &oracle, q, opt);
            auto b = brute_qcoloring(g, q);
            CHECK(a.has_value() == b.has_value());
            if (a) CHECK(proper(g, *a));
        }
    }
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        Instance inst = gen_pseudodisk(12, seed);
        Graph g = instance_graph(inst);
        SeparatorOracle oracle = make_oracle(inst);
        for (int q : {2, 3}) {
            auto a = solve_qcoloring(g, &oracle, q, opt);
            auto b = brute_qcoloring(g, q);
            CHECK(a.has_value() == b.has_value());
            if (a) CHECK(proper(g, *a));
        }
    }
}

TEST_CASE("FVS is the complement of the maximum induced forest") {
    Graph c4 = cycle(4);
    std::vector<int> fvs = solve_fvs(c4, nullptr);
    CHECK(fvs.size() == 1);
    Graph c6 = cycle(6);
    CHECK(solve_fvs(c6, nullptr).size() == 1);
}

TEST_CASE("solver recursion shrinks strictly and terminates on cliques") {
    Graph k9 = complete(9);
    // an oracle that puts everything into one clique: the subcalls are empty
    SeparatorOracle oracle = [&](const std::vector<int>& subset,
                                 const std::vector<Rat>*) -> CliqueSeparator {
        CliqueSeparator s;
        s.cliques.push_back(subset);
        return s;
    };
    MisOptions opt;
    opt.base_n = 2;
    std::vector<int> a = solve_mis(k9, &oracle, opt);
    CHECK(a.size() == 1);
}
