#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vesselmap/geometry.hpp"
#include "vesselmap/volume.hpp"

namespace vmap {

struct GraphNode {
    Vec3 pos;            // mm
    double radius = 0.0; // mm
};

struct GraphEdge {
    int a = 0, b = 0;
    double length = 0.0;  // mm, equals |pos(a) - pos(b)|
};

struct VesselGraph {
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;

    void validate() const;
};

/// Rooted tree over the graph nodes; parent[root] == -1.
struct VesselTree {
    std::vector<GraphNode> nodes;
    std::vector<int> parent;
    std::vector<std::vector<int>> children;  // each list sorted by node index
    int root = 0;

    int degree(int v) const {
        return static_cast<int>(children[v].size()) + (parent[v] >= 0 ? 1 : 0);
    }
    double edge_length(int v) const { return (nodes[v].pos - nodes[parent[v]].pos).norm(); }
    /// Node order where every parent precedes its children.
    std::vector<int> topo_order() const;
    void rebuild_children();
    void validate() const;
};

/// Branch/junction decomposition. Branch node paths run away from the root:
/// front() is the parent-side junction, back() the child-side one.
struct CoarseTree {
    std::vector<int> junction_ids;                 // node ids, root first
    std::vector<int> junction_slot;                // node id -> slot, -1 otherwise
    std::vector<std::vector<int>> branches;        // node paths
    std::vector<std::vector<int>> child_branches;  // per junction slot, ordered
    std::vector<int> incoming_branch;              // per junction slot, -1 at root
    std::vector<double> branch_length;             // mm along the path
    std::vector<double> subtree_length;            // branch + everything downstream

    int branch_start_junction(int b) const { return branches[b].front(); }
    int branch_end_junction(int b) const { return branches[b].back(); }
};

struct ExtractStats {
    int cycle_edges_removed = 0;
    int components_dropped = 0;
    double length_dropped = 0.0;  // mm
};

/// One node per skeleton voxel at its world center, radius from the SDF
/// (clamped at 0), one edge per 26-adjacent voxel pair.
VesselGraph skeleton_to_graph(const Volume& skel, const Volume& sdf);

/// Minimum spanning forest by edge length (Kruskal), drop components shorter
/// than min_component, keep the longest one, root it and orient parent links.
VesselTree clean_to_tree(const VesselGraph& g, const std::optional<Vec3>& root_hint,
                         double min_component_mm, ExtractStats* stats = nullptr);

/// Junctions are the nodes of tree degree != 2, plus the root.
CoarseTree decompose_branches(const VesselTree& t);

/// Orders each junction's child branches by the signed bend of their first
/// edge (most rightward turn first); kappa is indexed per node.
void order_children(CoarseTree& coarse, const std::vector<double>& kappa);

}  // namespace vmap
