#include "vesselmap/spatial_hash.hpp"

#include <algorithm>
#include <cmath>

namespace vmap {

int SegmentHash::insert(const HashedSegment& s) {
    const int id = static_cast<int>(segments_.size());
    segments_.push_back(s);
    stamp_.push_back(0);

    const double x0 = std::min(s.a.x(), s.b.x()), x1 = std::max(s.a.x(), s.b.x());
    const double y0 = std::min(s.a.y(), s.b.y()), y1 = std::max(s.a.y(), s.b.y());
    const auto cx0 = static_cast<std::int64_t>(std::floor(x0 / cell_));
    const auto cx1 = static_cast<std::int64_t>(std::floor(x1 / cell_));
    const auto cy0 = static_cast<std::int64_t>(std::floor(y0 / cell_));
    const auto cy1 = static_cast<std::int64_t>(std::floor(y1 / cell_));
    for (std::int64_t cy = cy0; cy <= cy1; ++cy)
        for (std::int64_t cx = cx0; cx <= cx1; ++cx) cells_[key(cx, cy)].push_back(id);
    return id;
}

void SegmentHash::query(const Vec2& a, const Vec2& b, double margin, std::vector<int>& out) const {
    out.clear();
    if (segments_.empty()) return;
    ++stamp_now_;

    const double x0 = std::min(a.x(), b.x()) - margin, x1 = std::max(a.x(), b.x()) + margin;
    const double y0 = std::min(a.y(), b.y()) - margin, y1 = std::max(a.y(), b.y()) + margin;
    const auto cx0 = static_cast<std::int64_t>(std::floor(x0 / cell_));
    const auto cx1 = static_cast<std::int64_t>(std::floor(x1 / cell_));
    const auto cy0 = static_cast<std::int64_t>(std::floor(y0 / cell_));
    const auto cy1 = static_cast<std::int64_t>(std::floor(y1 / cell_));
    for (std::int64_t cy = cy0; cy <= cy1; ++cy)
        for (std::int64_t cx = cx0; cx <= cx1; ++cx) {
            const auto it = cells_.find(key(cx, cy));
            if (it == cells_.end()) continue;
            for (int id : it->second) {
                if (stamp_[id] == stamp_now_) continue;
                stamp_[id] = stamp_now_;
                out.push_back(id);
            }
        }
    std::sort(out.begin(), out.end());
}

}  // namespace vmap
