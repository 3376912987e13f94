#include "vesselmap/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace vmap {

void VesselGraph::validate() const {
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges) {
        if (e.a == e.b) throw std::invalid_argument("graph has a self-loop");
        if (e.a < 0 || e.b < 0 || e.a >= static_cast<int>(nodes.size()) ||
            e.b >= static_cast<int>(nodes.size()))
            throw std::invalid_argument("edge endpoint out of range");
        const auto key = std::minmax(e.a, e.b);
        if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge");
        const double geo = (nodes[e.a].pos - nodes[e.b].pos).norm();
        if (std::fabs(e.length - geo) > 1e-9 * std::max(1.0, geo))
            throw std::invalid_argument("edge length does not match endpoint distance");
    }
    for (const auto& n : nodes)
        if (n.radius < 0.0) throw std::invalid_argument("negative node radius");
}

void VesselTree::rebuild_children() {
    children.assign(nodes.size(), {});
    for (size_t v = 0; v < nodes.size(); ++v)
        if (parent[v] >= 0) children[parent[v]].push_back(static_cast<int>(v));
}

std::vector<int> VesselTree::topo_order() const {
    std::vector<int> order;
    order.reserve(nodes.size());
    std::vector<int> stack{root};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        // push in reverse so children come out in index order
        for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) stack.push_back(*it);
    }
    return order;
}

void VesselTree::validate() const {
    if (nodes.empty()) throw std::invalid_argument("empty tree");
    if (root < 0 || root >= static_cast<int>(nodes.size()))
        throw std::invalid_argument("root out of range");
    if (parent.size() != nodes.size() || children.size() != nodes.size())
        throw std::invalid_argument("tree arrays out of sync");
    if (parent[root] != -1) throw std::invalid_argument("root must have parent -1");
    const auto order = topo_order();
    if (order.size() != nodes.size())
        throw std::invalid_argument("tree is not connected or has a cycle");
}

VesselGraph skeleton_to_graph(const Volume& skel, const Volume& sdf) {
    skel.validate();
    if (skel.unit != VolumeUnit::binary)
        throw std::invalid_argument("skeleton_to_graph expects a binary skeleton");
    if (sdf.dims != skel.dims)
        throw std::invalid_argument("sdf dims differ from skeleton dims");

    VesselGraph g;
    std::vector<int> node_of(skel.size(), -1);
    const int nx = skel.dims[0], ny = skel.dims[1], nz = skel.dims[2];
    for (int z = 0; z < nz; ++z)
        for (int y = 0; y < ny; ++y)
            for (int x = 0; x < nx; ++x) {
                const size_t idx = skel.index(x, y, z);
                if (skel.data[idx] == 0.0f) continue;
                node_of[idx] = static_cast<int>(g.nodes.size());
                g.nodes.push_back({skel.voxel_center(x, y, z),
                                   std::max(0.0, static_cast<double>(sdf.data[idx]))});
            }

    for (int z = 0; z < nz; ++z)
        for (int y = 0; y < ny; ++y)
            for (int x = 0; x < nx; ++x) {
                const size_t idx = skel.index(x, y, z);
                if (node_of[idx] < 0) continue;
                for (int dz = -1; dz <= 1; ++dz)
                    for (int dy = -1; dy <= 1; ++dy)
                        for (int dx = -1; dx <= 1; ++dx) {
                            if (dx == 0 && dy == 0 && dz == 0) continue;
                            const int xx = x + dx, yy = y + dy, zz = z + dz;
                            if (!skel.in_bounds(xx, yy, zz)) continue;
                            const size_t nidx = skel.index(xx, yy, zz);
                            if (node_of[nidx] < 0 || nidx <= idx) continue;  // each pair once
                            const int a = node_of[idx], b = node_of[nidx];
                            g.edges.push_back({a, b, (g.nodes[a].pos - g.nodes[b].pos).norm()});
                        }
            }
    return g;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

}  // namespace

VesselTree clean_to_tree(const VesselGraph& g, const std::optional<Vec3>& root_hint,
                         double min_component_mm, ExtractStats* stats) {
    g.validate();
    ExtractStats local;

    // Kruskal with a full ordering so ties cannot depend on input order.
    std::vector<int> order(g.edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const auto& a = g.edges[i];
        const auto& b = g.edges[j];
        if (a.length != b.length) return a.length < b.length;
        const auto ka = std::minmax(a.a, a.b), kb = std::minmax(b.a, b.b);
        return ka < kb;
    });

    Dsu dsu(g.nodes.size());
    std::vector<std::vector<std::pair<int, int>>> adj(g.nodes.size());  // (neighbor, edge)
    for (int ei : order) {
        const auto& e = g.edges[ei];
        if (dsu.unite(e.a, e.b)) {
            adj[e.a].push_back({e.b, ei});
            adj[e.b].push_back({e.a, ei});
        } else {
            ++local.cycle_edges_removed;
        }
    }

    // Component totals count forest edges only; rejected cycle edges do not.
    std::map<int, double> component_length;
    for (size_t v = 0; v < g.nodes.size(); ++v) component_length[dsu.find(static_cast<int>(v))];
    for (size_t v = 0; v < g.nodes.size(); ++v)
        for (const auto& [w, ei] : adj[v])
            if (static_cast<int>(v) < w)
                component_length[dsu.find(static_cast<int>(v))] += g.edges[ei].length;

    int best_root_comp = -1;
    double best_len = -1.0;
    for (const auto& [comp, len] : component_length) {
        if (len < min_component_mm) continue;
        if (len > best_len) {
            best_len = len;
            best_root_comp = comp;
        }
    }
    for (const auto& [comp, len] : component_length) {
        if (comp == best_root_comp) continue;
        ++local.components_dropped;
        local.length_dropped += len;
    }
    if (best_root_comp < 0) throw std::runtime_error("no vessels found: graph empty after pruning");

    // Compact the kept component, preserving index order.
    std::vector<int> new_id(g.nodes.size(), -1);
    VesselTree t;
    for (size_t v = 0; v < g.nodes.size(); ++v)
        if (dsu.find(static_cast<int>(v)) == best_root_comp) {
            new_id[v] = static_cast<int>(t.nodes.size());
            t.nodes.push_back(g.nodes[v]);
        }

    // Pick the root among kept nodes.
    int root_old = -1;
    if (root_hint) {
        double best = std::numeric_limits<double>::infinity();
        for (size_t v = 0; v < g.nodes.size(); ++v) {
            if (new_id[v] < 0) continue;
            const double d = (g.nodes[v].pos - *root_hint).norm();
            if (d < best) {
                best = d;
                root_old = static_cast<int>(v);
            }
        }
    } else {
        double best_radius = -1.0;
        for (size_t v = 0; v < g.nodes.size(); ++v) {
            if (new_id[v] < 0) continue;
            if (adj[v].size() == 1 && g.nodes[v].radius > best_radius) {
                best_radius = g.nodes[v].radius;
                root_old = static_cast<int>(v);
            }
        }
        if (root_old < 0) {  // no leaf (single node component)
            for (size_t v = 0; v < g.nodes.size(); ++v)
                if (new_id[v] >= 0) {
                    root_old = static_cast<int>(v);
                    break;
                }
        }
    }

    t.parent.assign(t.nodes.size(), -1);
    t.root = new_id[root_old];
    std::vector<int> stack{root_old};
    std::vector<std::uint8_t> visited(g.nodes.size(), 0);
    visited[root_old] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const auto& [w, ei] : adj[v]) {
            if (visited[w]) continue;
            visited[w] = 1;
            t.parent[new_id[w]] = new_id[v];
            stack.push_back(w);
        }
    }
    t.rebuild_children();
    t.validate();
    if (stats) *stats = local;
    return t;
}

CoarseTree decompose_branches(const VesselTree& t) {
    CoarseTree c;
    const int n = static_cast<int>(t.nodes.size());
    c.junction_slot.assign(n, -1);

    auto is_junction = [&](int v) { return v == t.root || t.degree(v) != 2; };

    // Root first, then ascending node id.
    c.junction_ids.push_back(t.root);
    for (int v = 0; v < n; ++v)
        if (v != t.root && is_junction(v)) c.junction_ids.push_back(v);
    for (size_t s = 0; s < c.junction_ids.size(); ++s) c.junction_slot[c.junction_ids[s]] = static_cast<int>(s);

    c.child_branches.assign(c.junction_ids.size(), {});
    c.incoming_branch.assign(c.junction_ids.size(), -1);

    // Walk from every junction through degree-2 chains; BFS order over
    // junctions keeps branch indices root-to-leaf.
    std::vector<int> queue{t.root};
    std::vector<std::uint8_t> enqueued(n, 0);
    enqueued[t.root] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        const int j = queue[qi];
        for (int child : t.children[j]) {
            std::vector<int> path{j, child};
            while (!is_junction(path.back())) path.push_back(t.children[path.back()][0]);
            const int b = static_cast<int>(c.branches.size());
            double len = 0.0;
            for (size_t i = 1; i < path.size(); ++i)
                len += (t.nodes[path[i]].pos - t.nodes[path[i - 1]].pos).norm();
            c.branch_length.push_back(len);
            c.child_branches[c.junction_slot[j]].push_back(b);
            c.incoming_branch[c.junction_slot[path.back()]] = b;
            c.branches.push_back(std::move(path));
            const int end = c.branches.back().back();
            if (!enqueued[end]) {
                enqueued[end] = 1;
                queue.push_back(end);
            }
        }
    }

    // Downstream totals, leaves first.
    c.subtree_length.assign(c.branches.size(), 0.0);
    for (int b = static_cast<int>(c.branches.size()) - 1; b >= 0; --b) {
        c.subtree_length[b] = c.branch_length[b];
        for (int cb : c.child_branches[c.junction_slot[c.branches[b].back()]])
            c.subtree_length[b] += c.subtree_length[cb];
    }
    return c;
}

void order_children(CoarseTree& coarse, const std::vector<double>& kappa) {
    for (auto& list : coarse.child_branches)
        std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
            return kappa[coarse.branches[a][1]] < kappa[coarse.branches[b][1]];
        });
}

}  // namespace vmap
