#pragma once

// Uniform bucket grid over double-rounded bounding boxes. Used only to prune
// candidate pairs; all hits are re-checked with exact predicates by callers.

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <vector>

#include "cliquesep/geom.hpp"

namespace cliquesep {

class BucketGrid {
  public:
    // cell: expected feature extent; larger cells mean fewer, bigger buckets
    explicit BucketGrid(double cell) : cell_(cell <= 0 ? 1.0 : cell) {}

    void insert(int id, const BBox& bb) {
        auto [x0, y0, x1, y1] = cells(bb);
        for (long cx = x0; cx <= x1; ++cx)
            for (long cy = y0; cy <= y1; ++cy) buckets_[key(cx, cy)].push_back(id);
    }

    // ids whose grid cells overlap bb (superset of true bbox overlaps)
    std::vector<int> query(const BBox& bb) const {
        std::vector<int> out;
        auto [x0, y0, x1, y1] = cells(bb);
        for (long cx = x0; cx <= x1; ++cx)
            for (long cy = y0; cy <= y1; ++cy) {
                auto it = buckets_.find(key(cx, cy));
                if (it == buckets_.end()) continue;
                out.insert(out.end(), it->second.begin(), it->second.end());
            }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

  private:
    struct Cells {
        long x0, y0, x1, y1;
    };
    Cells cells(const BBox& bb) const {
        double xmin = std::nextafter(rat_to_double(bb.xmin), -1e300);
        double ymin = std::nextafter(rat_to_double(bb.ymin), -1e300);
        double xmax = std::nextafter(rat_to_double(bb.xmax), 1e300);
        double ymax = std::nextafter(rat_to_double(bb.ymax), 1e300);
        return {static_cast<long>(std::floor(xmin / cell_)),
                static_cast<long>(std::floor(ymin / cell_)),
                static_cast<long>(std::floor(xmax / cell_)),
                static_cast<long>(std::floor(ymax / cell_))};
    }
    // collisions only merge buckets, which is harmless for a candidate filter
    static long long key(long cx, long cy) { return cx * 1000003LL + cy; }

    double cell_;
    std::unordered_map<long long, std::vector<int>> buckets_;
};

}  // namespace cliquesep
