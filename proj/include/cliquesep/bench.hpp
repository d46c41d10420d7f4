#pragma once

// Scaling benchmark: per-size separator weight records and the least-squares
// slope of log2(weight) against log2(n).

#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>
#include <vector>

#include "cliquesep/instance.hpp"

namespace cliquesep {

struct BenchRecord {
    long n = 0;
    std::uint64_t seed = 0;
    double weight = 0;
    long num_cliques = 0;
    double balance = 0;  // max(|A|,|B|) / n
    double wall_ms = 0;
};

struct BenchReport {
    std::string cls;
    std::vector<BenchRecord> records;
    double slope = 0;

    json to_json() const {
        json j;
        j["class"] = cls;
        j["slope"] = slope;
        json recs = json::array();
        for (const auto& r : records)
            recs.push_back(json{{"n", r.n},
                                {"seed", r.seed},
                                {"weight", r.weight},
                                {"num_cliques", r.num_cliques},
                                {"balance", r.balance},
                                {"wall_ms", r.wall_ms}});
        j["records"] = recs;
        return j;
    }

    std::string to_csv() const {
        std::ostringstream out;
        out << "n,seed,weight,num_cliques,balance,wall_ms\n";
        for (const auto& r : records)
            out << r.n << "," << r.seed << "," << r.weight << "," << r.num_cliques << ","
                << r.balance << "," << r.wall_ms << "\n";
        return out.str();
    }
};

// least-squares slope of log2(weight) vs log2(n) over all records
inline double fit_slope(const std::vector<BenchRecord>& records) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int k = 0;
    for (const auto& r : records) {
        if (r.weight <= 0 || r.n <= 1) continue;
        double x = std::log2(static_cast<double>(r.n));
        double y = std::log2(r.weight);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++k;
    }
    if (k < 2) return 0;
    double denom = k * sxx - sx * sx;
    return denom == 0 ? 0 : (k * sxy - sx * sy) / denom;
}

inline Instance bench_instance(const std::string& cls, long n, std::uint64_t seed) {
    if (cls == "map") return gen_map_voronoi(static_cast<int>(n), seed);
    if (cls == "pseudodisk") return gen_pseudodisk(static_cast<int>(n), seed);
    if (cls == "geodesic")
        return gen_geodesic(static_cast<int>(std::min<long>(n, 200)), seed, 24);
    if (cls == "visibility") return gen_visibility(static_cast<int>(n), seed, 0);
    throw std::invalid_argument("bench supports map, pseudodisk, geodesic, visibility");
}

inline BenchReport run_bench(const std::string& cls, const std::vector<long>& sizes, int seeds,
                             int threads = 1) {
    if (sizes.size() < 5) throw std::invalid_argument("bench needs at least 5 sizes");
    BenchReport report;
    report.cls = cls;
    struct Cell {
        long n;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (long n : sizes)
        for (int s = 1; s <= seeds; ++s) cells.push_back({n, static_cast<std::uint64_t>(s)});
    report.records.resize(cells.size());

    auto work = [&](std::size_t idx) {
        const Cell& cell = cells[idx];
        auto t0 = std::chrono::steady_clock::now();
        Instance inst = bench_instance(cls, cell.n, cell.seed);
        CliqueSeparator s = instance_separator(inst);
        auto t1 = std::chrono::steady_clock::now();
        BenchRecord rec;
        rec.n = cell.n;
        rec.seed = cell.seed;
        rec.weight = s.weight();
        rec.num_cliques = static_cast<long>(s.cliques.size());
        rec.balance =
            static_cast<double>(std::max(s.side_a.size(), s.side_b.size())) / std::max<long>(1, cell.n);
        rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        report.records[idx] = rec;
    };

    if (threads <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < cells.size(); i = next++) work(i);
            });
        for (auto& th : pool) th.join();
    }
    report.slope = fit_slope(report.records);
    return report;
}

}  // namespace cliquesep
