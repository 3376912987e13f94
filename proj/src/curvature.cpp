#include "vesselmap/curvature.hpp"

#include <stdexcept>

namespace vmap {

Vec3 parallel_transport(const Vec3& n, const Vec3& t_from, const Vec3& t_to, bool* degenerate) {
    const Vec3 axis = t_from.cross(t_to);
    const double s = axis.norm();
    const double c = std::clamp(t_from.dot(t_to), -1.0, 1.0);
    if (s < 1e-12) {
        if (c > 0.0) return n;  // parallel, nothing to do
        if (degenerate) *degenerate = true;
        Vec3 proj = n - n.dot(t_to) * t_to;
        const double len = proj.norm();
        return len > 1e-12 ? Vec3(proj / len) : n;
    }
    const Vec3 a = axis / s;
    // Rodrigues rotation by the angle between the tangents.
    return n * c + a.cross(n) * s + a * (a.dot(n)) * (1.0 - c);
}

Vec3 root_reference_tangent(const VesselTree& t) {
    if (t.children[t.root].empty()) return Vec3(1.0, 0.0, 0.0);
    const int c = t.children[t.root][0];
    const Vec3 d = t.nodes[c].pos - t.nodes[t.root].pos;
    const double len = d.norm();
    if (len <= 0.0) throw std::invalid_argument("zero-length edge at the root");
    return d / len;
}

Vec3 initial_normal(const Vec3& tangent) {
    int axis = 0;
    double best = std::fabs(tangent.x());
    if (std::fabs(tangent.y()) < best) {
        best = std::fabs(tangent.y());
        axis = 1;
    }
    if (std::fabs(tangent.z()) < best) axis = 2;
    Vec3 e = Vec3::Zero();
    e[axis] = 1.0;
    return tangent.cross(e).normalized();
}

CurvatureField transport_frames(const VesselTree& t) {
    t.validate();
    CurvatureField f;
    const size_t n = t.nodes.size();
    f.kappa.assign(n, 0.0);
    f.normal.assign(n, Vec3::Zero());
    f.tangent.assign(n, Vec3::Zero());

    f.tangent[t.root] = root_reference_tangent(t);
    f.normal[t.root] = initial_normal(f.tangent[t.root]);

    for (int v : t.topo_order()) {
        if (v == t.root) continue;
        const int p = t.parent[v];
        const Vec3 d = t.nodes[v].pos - t.nodes[p].pos;
        const double len = d.norm();
        if (len <= 0.0) throw std::invalid_argument("zero-length edge in tree");
        f.tangent[v] = d / len;

        bool degenerate = false;
        Vec3 nv = parallel_transport(f.normal[p], f.tangent[p], f.tangent[v], &degenerate);
        if (degenerate) ++f.degenerate_transports;
        nv -= nv.dot(f.tangent[v]) * f.tangent[v];  // keep the frame orthonormal
        const double nlen = nv.norm();
        f.normal[v] = nlen > 1e-12 ? Vec3(nv / nlen) : initial_normal(f.tangent[v]);
    }
    return f;
}

void signed_curvatures(const VesselTree& t, CurvatureField& f) {
    for (int v : t.topo_order()) {
        if (v == t.root) {
            f.kappa[v] = 0.0;
            continue;
        }
        const int p = t.parent[v];
        const double mag = angle_between(f.tangent[p], f.tangent[v]);
        const double d = f.normal[p].dot(f.tangent[v]);
        f.kappa[v] = (mag < 1e-12) ? 0.0 : (d < 0.0 ? -mag : mag);
    }
}

}  // namespace vmap
