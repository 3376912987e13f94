#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "vesselmap/geometry.hpp"

namespace vmap {

struct HashedSegment {
    Vec2 a, b;
    int node_a = -1, node_b = -1;  // tree node ids, for adjacency exemptions
    double radius = 0.0;           // mm, max of the two endpoint radii
};

/// Uniform grid over 2D segments. Queries return candidate ids in insertion
/// order, which keeps every consumer deterministic.
class SegmentHash {
public:
    explicit SegmentHash(double cell_size) : cell_(cell_size > 0.0 ? cell_size : 1.0) {}

    int insert(const HashedSegment& s);

    /// Ids of segments whose cells intersect the box of ab inflated by margin.
    void query(const Vec2& a, const Vec2& b, double margin, std::vector<int>& out) const;

    const HashedSegment& segment(int id) const { return segments_[id]; }
    size_t size() const { return segments_.size(); }

private:
    static std::uint64_t key(std::int64_t cx, std::int64_t cy) {
        return (static_cast<std::uint64_t>(cx) << 32) ^
               (static_cast<std::uint64_t>(cy) & 0xffffffffull);
    }

    double cell_;
    std::vector<HashedSegment> segments_;
    std::unordered_map<std::uint64_t, std::vector<int>> cells_;
    mutable std::vector<std::uint32_t> stamp_;
    mutable std::uint32_t stamp_now_ = 0;
};

}  // namespace vmap
