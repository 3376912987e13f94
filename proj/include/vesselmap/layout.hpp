#pragma once

#include <optional>
#include <vector>

#include "vesselmap/curvature.hpp"
#include "vesselmap/graph.hpp"
#include "vesselmap/spatial_hash.hpp"

namespace vmap {

struct LayoutParams {
    double min_clearance = 0.2;    // mm
    bool radius_clearance = true;  // widen the gap to the local vessel radius
    double sector_min_deg = 5.0;
    double straight_step_deg = 1.0;
    double cell_size = 0.0;        // spatial hash cell; 0 = auto

    double pair_clearance(double ra, double rb) const {
        return radius_clearance ? std::max({ra, rb, min_clearance}) : min_clearance;
    }
};

/// Angular wedge reserved for one subtree. The two boundary rays emanate from
/// ray_origin (the junction whose subdivision created the sector); the apex is
/// where the subtree root sits and drawing starts.
struct SectorRegion {
    Vec2 apex{0.0, 0.0};
    Vec2 ray_origin{0.0, 0.0};
    double dir_lo = 0.0;
    double dir_hi = kPi;
    double incoming_theta = kPi / 2.0;  // 2D direction of the edge arriving at the apex
};

/// theta(v) is the absolute direction of the edge parent->v; the root holds
/// pi/2 by convention. Positions follow from theta and the 3D edge lengths,
/// which makes length preservation structural.
struct AngularLayout {
    std::vector<double> theta;
    std::vector<Vec2> pos;
    std::vector<std::uint8_t> placed;
};

struct BranchEmbedResult {
    std::vector<double> theta;  // aligned with path[1..]
    std::vector<Vec2> pos;
    std::optional<int> collision_index;  // path index where theta freezes
    bool truncated = false;
    int truncated_from = 0;   // path index of the first unplaced node
    double lost_length = 0.0;  // mm of tail that could not be drawn
};

/// Integrates theta_i = theta_{i-1} + kappa(v_i) from the region apex until a
/// segment would come closer than the pair clearance to an obstacle or a
/// boundary ray, then continues straight along a collision-free direction.
/// Committed segments are inserted into the obstacle hash.
BranchEmbedResult integrate_branch(const std::vector<int>& path, double theta_start,
                                   const VesselTree& t, const std::vector<double>& kappa,
                                   const SectorRegion& region, SegmentHash& obstacles,
                                   const LayoutParams& params);

/// Splits the forward half-plane at the junction into one wedge per child,
/// widths proportional to the downstream lengths with a minimum width.
/// Boundaries are nudged between consecutive endpoint directions when the
/// endpoints are angularly ordered, so a drawn branch keeps its own subtree.
std::vector<SectorRegion> subdivide_region(const SectorRegion& region,
                                           const std::vector<Vec2>& endpoints,
                                           const std::vector<double>& end_thetas,
                                           const std::vector<double>& weights,
                                           const LayoutParams& params);

struct EmbedResult {
    AngularLayout layout;
    int collided_branches = 0;
    int truncated_branches = 0;
    double unembedded_length = 0.0;  // mm
};

/// Junctions processed root-to-leaf; the root sits at the origin with its
/// subtree opening into the upper half-plane.
EmbedResult recursive_embed(const VesselTree& t, const CoarseTree& coarse,
                            const std::vector<double>& kappa, const LayoutParams& params);

}  // namespace vmap
