#pragma once

#include <vector>

#include "vesselmap/graph.hpp"

namespace vmap {

/// Per-node frame and signed bending angle.
///
/// tangent(v) is the unit direction of the edge parent->v (the root carries a
/// reference direction instead). kappa(v) is the signed angle turned at the
/// parent: from the direction arriving at parent(v) to the direction of the
/// edge parent->v, so that theta(v) = theta(parent) + kappa(v) reproduces a
/// planar polyline exactly. Positive kappa renders as a left turn.
struct CurvatureField {
    std::vector<double> kappa;
    std::vector<Vec3> normal;
    std::vector<Vec3> tangent;
    int degenerate_transports = 0;  // antiparallel steps handled by projection
};

/// Minimal rotation taking t_from to t_to, applied to n.
Vec3 parallel_transport(const Vec3& n, const Vec3& t_from, const Vec3& t_to, bool* degenerate);

/// Reference tangent at the root: direction toward its lowest-index child.
Vec3 root_reference_tangent(const VesselTree& t);

/// Deterministic seed normal: cross of the tangent with the canonical axis
/// least aligned with it.
Vec3 initial_normal(const Vec3& tangent);

/// Root-to-leaf sweep; children of a junction all inherit its frame.
/// Throws on zero-length edges.
CurvatureField transport_frames(const VesselTree& t);

/// Fills kappa from the frames. Sign comes from the dot product of the
/// parent's normal with the outgoing edge direction.
void signed_curvatures(const VesselTree& t, CurvatureField& frames);

}  // namespace vmap
