#include "vesselmap/segmentation.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

namespace vmap {

void FrangiParams::validate() const {
    if (scales.empty()) throw std::invalid_argument("frangi needs at least one scale");
    for (size_t i = 0; i < scales.size(); ++i) {
        if (scales[i] <= 0.0) throw std::invalid_argument("frangi scales must be positive");
        if (i > 0 && scales[i] <= scales[i - 1])
            throw std::invalid_argument("frangi scales must be strictly increasing");
    }
    if (alpha <= 0.0 || beta <= 0.0) throw std::invalid_argument("frangi alpha/beta must be > 0");
}

// ---------------------------------------------------------------------------
// Hysteresis thresholding: union-find over the >= low voxels, then keep the
// components that contain a >= high voxel.
// ---------------------------------------------------------------------------

namespace {

struct DisjointSet {
    std::vector<std::int32_t> parent;
    explicit DisjointSet(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::int32_t find(std::int32_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }
    void unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    }
};

}  // namespace

Volume hysteresis_threshold(const Volume& vol, const HysteresisParams& p) {
    p.validate();
    const int nx = vol.dims[0], ny = vol.dims[1], nz = vol.dims[2];
    Volume mask(nx, ny, nz, VolumeUnit::binary, vol.spacing);

    const float low = static_cast<float>(p.low);
    const float high = static_cast<float>(p.high);
    DisjointSet dsu(vol.size());

    // 13 backward offsets cover every unordered 26-neighbor pair once.
    static const int back[13][3] = {
        {-1, -1, -1}, {0, -1, -1}, {1, -1, -1}, {-1, 0, -1}, {0, 0, -1}, {1, 0, -1},
        {-1, 1, -1},  {0, 1, -1},  {1, 1, -1},  {-1, -1, 0}, {0, -1, 0}, {1, -1, 0},
        {-1, 0, 0}};

    for (int z = 0; z < nz; ++z)
        for (int y = 0; y < ny; ++y)
            for (int x = 0; x < nx; ++x) {
                const size_t idx = vol.index(x, y, z);
                if (vol.data[idx] < low) continue;
                for (const auto& o : back) {
                    const int xx = x + o[0], yy = y + o[1], zz = z + o[2];
                    if (!vol.in_bounds(xx, yy, zz)) continue;
                    const size_t nidx = vol.index(xx, yy, zz);
                    if (vol.data[nidx] >= low)
                        dsu.unite(static_cast<std::int32_t>(idx), static_cast<std::int32_t>(nidx));
                }
            }

    std::vector<std::uint8_t> root_has_high(vol.size(), 0);
    for (size_t i = 0; i < vol.size(); ++i)
        if (vol.data[i] >= high) root_has_high[dsu.find(static_cast<std::int32_t>(i))] = 1;
    for (size_t i = 0; i < vol.size(); ++i)
        mask.data[i] = (vol.data[i] >= low && root_has_high[dsu.find(static_cast<std::int32_t>(i))])
                           ? 1.0f : 0.0f;
    return mask;
}

// ---------------------------------------------------------------------------
// Exact Euclidean distance transform, separable lower-envelope per axis.
// ---------------------------------------------------------------------------

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 1D squared distance transform in index units scaled by spacing s.
void dt1d(const double* f, double* d, int n, double s, int* v, double* z) {
    int k = -1;
    const double s2 = s * s;
    for (int q = 0; q < n; ++q) {
        if (f[q] == kInf) continue;
        if (k < 0) {
            k = 0;
            v[0] = q;
            z[0] = -kInf;
            z[1] = kInf;
            continue;
        }
        double inter;
        for (;;) {
            const int p = v[k];
            inter = ((f[q] - f[p]) / s2 + static_cast<double>(q) * q - static_cast<double>(p) * p) /
                    (2.0 * (q - p));
            if (inter > z[k]) break;
            --k;
            if (k < 0) break;
        }
        ++k;
        v[k] = q;
        z[k] = inter;
        z[k + 1] = kInf;
    }
    if (k < 0) {
        for (int q = 0; q < n; ++q) d[q] = kInf;
        return;
    }
    int j = 0;
    for (int q = 0; q < n; ++q) {
        while (z[j + 1] < q) ++j;
        const double dq = (q - v[j]) * s;
        d[q] = dq * dq + f[v[j]];
    }
}

// Squared distance in mm^2 from every voxel to the nearest seed voxel center.
std::vector<double> squared_distance_to_set(const Volume& vol, const std::vector<std::uint8_t>& seed) {
    const int nx = vol.dims[0], ny = vol.dims[1], nz = vol.dims[2];
    std::vector<double> d2(vol.size());
    for (size_t i = 0; i < vol.size(); ++i) d2[i] = seed[i] ? 0.0 : kInf;

    const int nmax = std::max({nx, ny, nz});

#pragma omp parallel
    {
        std::vector<double> f(nmax), g(nmax), zbuf(nmax + 1);
        std::vector<int> vbuf(nmax);

        // x pass
#pragma omp for schedule(static)
        for (int z = 0; z < nz; ++z)
            for (int y = 0; y < ny; ++y) {
                const size_t base = vol.index(0, y, z);
                for (int x = 0; x < nx; ++x) f[x] = d2[base + x];
                dt1d(f.data(), g.data(), nx, vol.spacing[0], vbuf.data(), zbuf.data());
                for (int x = 0; x < nx; ++x) d2[base + x] = g[x];
            }

        // y pass
#pragma omp for schedule(static)
        for (int z = 0; z < nz; ++z)
            for (int x = 0; x < nx; ++x) {
                const size_t stride = static_cast<size_t>(nx);
                const size_t base = vol.index(x, 0, z);
                for (int y = 0; y < ny; ++y) f[y] = d2[base + y * stride];
                dt1d(f.data(), g.data(), ny, vol.spacing[1], vbuf.data(), zbuf.data());
                for (int y = 0; y < ny; ++y) d2[base + y * stride] = g[y];
            }

        // z pass
#pragma omp for schedule(static)
        for (int y = 0; y < ny; ++y)
            for (int x = 0; x < nx; ++x) {
                const size_t stride = static_cast<size_t>(nx) * ny;
                const size_t base = vol.index(x, y, 0);
                for (int z = 0; z < nz; ++z) f[z] = d2[base + z * stride];
                dt1d(f.data(), g.data(), nz, vol.spacing[2], vbuf.data(), zbuf.data());
                for (int z = 0; z < nz; ++z) d2[base + z * stride] = g[z];
            }
    }
    return d2;
}

// Distance to the nearest voxel center just outside the volume.
double boundary_distance(const Volume& vol, int x, int y, int z) {
    const double dx = std::min(x + 1, vol.dims[0] - x) * vol.spacing[0];
    const double dy = std::min(y + 1, vol.dims[1] - y) * vol.spacing[1];
    const double dz = std::min(z + 1, vol.dims[2] - z) * vol.spacing[2];
    return std::min({dx, dy, dz});
}

}  // namespace

SdfResult signed_distance_transform(const Volume& mask) {
    mask.validate();
    if (mask.unit != VolumeUnit::binary)
        throw std::invalid_argument("signed_distance_transform expects a binary mask");

    SdfResult res;
    res.sdf = Volume(mask.dims[0], mask.dims[1], mask.dims[2], VolumeUnit::distance_mm, mask.spacing);

    size_t fg = 0;
    for (float v : mask.data) fg += (v != 0.0f);
    const size_t bg = mask.size() - fg;

    if (fg == 0 || bg == 0) {
        // Single-phase mask: measure to the volume boundary as opposite phase.
        res.single_phase_warning = true;
        const double sign = fg == 0 ? -1.0 : 1.0;
        for (int z = 0; z < mask.dims[2]; ++z)
            for (int y = 0; y < mask.dims[1]; ++y)
                for (int x = 0; x < mask.dims[0]; ++x)
                    res.sdf.at(x, y, z) = static_cast<float>(sign * boundary_distance(mask, x, y, z));
        return res;
    }

    std::vector<std::uint8_t> is_fg(mask.size()), is_bg(mask.size());
    for (size_t i = 0; i < mask.size(); ++i) {
        is_fg[i] = mask.data[i] != 0.0f;
        is_bg[i] = !is_fg[i];
    }
    const auto d2_to_bg = squared_distance_to_set(mask, is_bg);
    const auto d2_to_fg = squared_distance_to_set(mask, is_fg);

#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(mask.size()); ++i)
        res.sdf.data[i] = static_cast<float>(is_fg[i] ? std::sqrt(d2_to_bg[i])
                                                      : -std::sqrt(d2_to_fg[i]));
    return res;
}

// ---------------------------------------------------------------------------
// Gaussian smoothing and the scaled Hessian.
// ---------------------------------------------------------------------------

namespace {

std::vector<double> gaussian_kernel(double sigma_mm, double spacing) {
    const int radius = static_cast<int>(std::ceil(3.0 * sigma_mm / spacing));
    std::vector<double> k(2 * radius + 1);
    double sum = 0.0;
    for (int t = -radius; t <= radius; ++t) {
        const double x = t * spacing;
        k[t + radius] = std::exp(-x * x / (2.0 * sigma_mm * sigma_mm));
        sum += k[t + radius];
    }
    for (double& w : k) w /= sum;
    return k;
}

void blur_axis(Volume& vol, int axis, const std::vector<double>& kernel) {
    const int radius = static_cast<int>(kernel.size() / 2);
    if (radius == 0) return;
    const int nx = vol.dims[0], ny = vol.dims[1], nz = vol.dims[2];
    const int n = vol.dims[axis];
    const std::vector<float> src = vol.data;

#pragma omp parallel for schedule(static)
    for (int z = 0; z < nz; ++z)
        for (int y = 0; y < ny; ++y)
            for (int x = 0; x < nx; ++x) {
                const int c = axis == 0 ? x : axis == 1 ? y : z;
                double sum = 0.0;
                for (int t = -radius; t <= radius; ++t) {
                    const int cc = std::clamp(c + t, 0, n - 1);
                    const size_t idx = axis == 0 ? vol.index(cc, y, z)
                                     : axis == 1 ? vol.index(x, cc, z)
                                                 : vol.index(x, y, cc);
                    sum += kernel[t + radius] * src[idx];
                }
                vol.at(x, y, z) = static_cast<float>(sum);
            }
}

}  // namespace

Volume gaussian_smooth(const Volume& vol, double sigma_mm) {
    if (sigma_mm <= 0.0) throw std::invalid_argument("sigma must be positive");
    Volume out = vol;
    for (int axis = 0; axis < 3; ++axis)
        blur_axis(out, axis, gaussian_kernel(sigma_mm, vol.spacing[axis]));
    return out;
}

std::array<std::vector<float>, 6> scaled_hessian(const Volume& vol, double sigma_mm) {
    const Volume sm = gaussian_smooth(vol, sigma_mm);
    const int nx = vol.dims[0], ny = vol.dims[1], nz = vol.dims[2];
    const double sx = vol.spacing[0], sy = vol.spacing[1], sz = vol.spacing[2];
    const double g = sigma_mm * sigma_mm;  // gamma normalization

    std::array<std::vector<float>, 6> h;
    for (auto& c : h) c.assign(vol.size(), 0.0f);

    auto v = [&](int x, int y, int z) {
        return static_cast<double>(sm.at(std::clamp(x, 0, nx - 1), std::clamp(y, 0, ny - 1),
                                         std::clamp(z, 0, nz - 1)));
    };

#pragma omp parallel for schedule(static)
    for (int z = 0; z < nz; ++z)
        for (int y = 0; y < ny; ++y)
            for (int x = 0; x < nx; ++x) {
                const size_t i = vol.index(x, y, z);
                const double f = v(x, y, z);
                h[0][i] = static_cast<float>(g * (v(x + 1, y, z) - 2 * f + v(x - 1, y, z)) / (sx * sx));
                h[1][i] = static_cast<float>(g * (v(x, y + 1, z) - 2 * f + v(x, y - 1, z)) / (sy * sy));
                h[2][i] = static_cast<float>(g * (v(x, y, z + 1) - 2 * f + v(x, y, z - 1)) / (sz * sz));
                h[3][i] = static_cast<float>(g * (v(x + 1, y + 1, z) - v(x + 1, y - 1, z) -
                                                  v(x - 1, y + 1, z) + v(x - 1, y - 1, z)) /
                                             (4 * sx * sy));
                h[4][i] = static_cast<float>(g * (v(x + 1, y, z + 1) - v(x + 1, y, z - 1) -
                                                  v(x - 1, y, z + 1) + v(x - 1, y, z - 1)) /
                                             (4 * sx * sz));
                h[5][i] = static_cast<float>(g * (v(x, y + 1, z + 1) - v(x, y + 1, z - 1) -
                                                  v(x, y - 1, z + 1) + v(x, y - 1, z - 1)) /
                                             (4 * sy * sz));
            }
    return h;
}

// Analytic eigenvalues of a symmetric 3x3 matrix (Cardano form), ascending.
void sym3_eigenvalues(double a11, double a22, double a33, double a12, double a13,
                      double a23, double out[3]) {
    const double de = a12 * a23;
    const double dd = a12 * a12, ee = a23 * a23, ff = a13 * a13;
    const double m = a11 + a22 + a33;
    const double c1 = (a11 * a22 + a11 * a33 + a22 * a33) - (dd + ee + ff);
    const double c0 = a33 * dd + a11 * ee + a22 * ff - a11 * a22 * a33 - 2.0 * a13 * de;

    const double p = m * m - 3.0 * c1;
    const double q = m * (p - 1.5 * c1) - 13.5 * c0;
    const double sqrt_p = std::sqrt(std::fabs(p));

    double phi = 27.0 * (0.25 * c1 * c1 * (p - c1) + c0 * (q + 6.75 * c0));
    phi = (1.0 / 3.0) * std::atan2(std::sqrt(std::fabs(phi)), q);

    const double c = sqrt_p * std::cos(phi);
    const double s = (1.0 / 1.7320508075688772) * sqrt_p * std::sin(phi);

    double w1 = (1.0 / 3.0) * (m - c);
    const double w2 = w1 + s;
    const double w0 = w1 + c;
    w1 -= s;

    out[0] = w0;
    out[1] = w1;
    out[2] = w2;
    std::sort(out, out + 3);
}

FrangiResult frangi_vesselness(const Volume& vol, const FrangiParams& p) {
    p.validate();
    FrangiResult res;
    res.vesselness = Volume(vol.dims[0], vol.dims[1], vol.dims[2], VolumeUnit::vesselness, vol.spacing);

    const double max_spacing = std::max({vol.spacing[0], vol.spacing[1], vol.spacing[2]});
    const double sgn = p.bright_on_dark ? 1.0 : -1.0;
    const std::int64_t n = static_cast<std::int64_t>(vol.size());

    std::vector<float> l1(vol.size()), l2(vol.size()), l3(vol.size());

    for (double sigma : p.scales) {
        if (sigma < 0.5 * max_spacing) ++res.undersampled_scales;
        const auto h = scaled_hessian(vol, sigma);

        double max_s2 = 0.0;
#pragma omp parallel for schedule(static) reduction(max : max_s2)
        for (std::int64_t i = 0; i < n; ++i) {
            double w[3];
            sym3_eigenvalues(sgn * h[0][i], sgn * h[1][i], sgn * h[2][i], sgn * h[3][i],
                             sgn * h[4][i], sgn * h[5][i], w);
            // order by absolute value: |l1| <= |l2| <= |l3|
            std::sort(w, w + 3, [](double a, double b) { return std::fabs(a) < std::fabs(b); });
            l1[i] = static_cast<float>(w[0]);
            l2[i] = static_cast<float>(w[1]);
            l3[i] = static_cast<float>(w[2]);
            const double s2 = w[0] * w[0] + w[1] * w[1] + w[2] * w[2];
            max_s2 = std::max(max_s2, s2);
        }

        const double c_eff = p.c > 0.0 ? p.c : 0.5 * std::sqrt(max_s2);
        if (c_eff <= 0.0) continue;  // flat volume at this scale

        const double inv2a2 = 1.0 / (2.0 * p.alpha * p.alpha);
        const double inv2b2 = 1.0 / (2.0 * p.beta * p.beta);
        const double inv2c2 = 1.0 / (2.0 * c_eff * c_eff);

#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            const double e1 = l1[i], e2 = l2[i], e3 = l3[i];
            if (e2 > 0.0 || e3 > 0.0 || e3 == 0.0) continue;
            const double ra = std::fabs(e2) / std::fabs(e3);
            const double rb = std::fabs(e1) / std::sqrt(std::fabs(e2 * e3));
            const double s2 = e1 * e1 + e2 * e2 + e3 * e3;
            const double v = (1.0 - std::exp(-ra * ra * inv2a2)) * std::exp(-rb * rb * inv2b2) *
                             (1.0 - std::exp(-s2 * inv2c2));
            res.vesselness.data[i] = std::max(res.vesselness.data[i], static_cast<float>(v));
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Topology-preserving thinning.
// ---------------------------------------------------------------------------

namespace {

inline bool fg_at(const Volume& m, int x, int y, int z) {
    return m.in_bounds(x, y, z) && m.at(x, y, z) != 0.0f;
}

int neighbor_count26(const Volume& m, int x, int y, int z) {
    int n = 0;
    for (int dz = -1; dz <= 1; ++dz)
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                if (dx == 0 && dy == 0 && dz == 0) continue;
                n += fg_at(m, x + dx, y + dy, z + dz);
            }
    return n;
}

inline int cell_index(int dx, int dy, int dz) { return (dx + 1) + 3 * ((dy + 1) + 3 * (dz + 1)); }

}  // namespace

bool is_simple_point(const Volume& mask, int x, int y, int z) {
    bool fg[27];
    for (int dz = -1; dz <= 1; ++dz)
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx)
                fg[cell_index(dx, dy, dz)] = fg_at(mask, x + dx, y + dy, z + dz);

    // One 26-component of foreground in the punctured neighborhood.
    {
        bool seen[27] = {};
        int components = 0;
        for (int start = 0; start < 27; ++start) {
            if (start == 13 || !fg[start] || seen[start]) continue;
            if (++components > 1) return false;
            int stack[26], top = 0;
            stack[top++] = start;
            seen[start] = true;
            while (top > 0) {
                const int cur = stack[--top];
                const int cx = cur % 3 - 1, cy = (cur / 3) % 3 - 1, cz = cur / 9 - 1;
                for (int dz = -1; dz <= 1; ++dz)
                    for (int dy = -1; dy <= 1; ++dy)
                        for (int dx = -1; dx <= 1; ++dx) {
                            const int nx2 = cx + dx, ny2 = cy + dy, nz2 = cz + dz;
                            if (nx2 < -1 || nx2 > 1 || ny2 < -1 || ny2 > 1 || nz2 < -1 || nz2 > 1)
                                continue;
                            const int ni = cell_index(nx2, ny2, nz2);
                            if (ni == 13 || ni == cur || !fg[ni] || seen[ni]) continue;
                            seen[ni] = true;
                            stack[top++] = ni;
                        }
            }
        }
        if (components != 1) return false;
    }

    // One 6-component of background in the 18-neighborhood that touches a
    // face neighbor of the center.
    {
        static const int face_cells[6] = {cell_index(1, 0, 0), cell_index(-1, 0, 0),
                                          cell_index(0, 1, 0), cell_index(0, -1, 0),
                                          cell_index(0, 0, 1), cell_index(0, 0, -1)};
        auto in_n18 = [](int cx, int cy, int cz) {
            return std::abs(cx) + std::abs(cy) + std::abs(cz) <= 2 &&
                   !(cx == 0 && cy == 0 && cz == 0);
        };
        bool seen[27] = {};
        int components = 0;
        for (int f = 0; f < 6; ++f) {
            const int start = face_cells[f];
            if (fg[start] || seen[start]) continue;
            if (++components > 1) return false;
            int stack[18], top = 0;
            stack[top++] = start;
            seen[start] = true;
            while (top > 0) {
                const int cur = stack[--top];
                const int cx = cur % 3 - 1, cy = (cur / 3) % 3 - 1, cz = cur / 9 - 1;
                static const int steps[6][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                                {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
                for (const auto& s : steps) {
                    const int nx2 = cx + s[0], ny2 = cy + s[1], nz2 = cz + s[2];
                    if (nx2 < -1 || nx2 > 1 || ny2 < -1 || ny2 > 1 || nz2 < -1 || nz2 > 1) continue;
                    if (!in_n18(nx2, ny2, nz2)) continue;
                    const int ni = cell_index(nx2, ny2, nz2);
                    if (fg[ni] || seen[ni]) continue;
                    seen[ni] = true;
                    stack[top++] = ni;
                }
            }
        }
        if (components != 1) return false;
    }
    return true;
}

Volume skeletonize(const Volume& mask) {
    mask.validate();
    if (mask.unit != VolumeUnit::binary)
        throw std::invalid_argument("skeletonize expects a binary mask");

    Volume out = mask;
    const int nx = out.dims[0], ny = out.dims[1], nz = out.dims[2];

    // Fixed subiteration order: U, D, N, S, E, W.
    static const int dirs[6][3] = {{0, 0, 1},  {0, 0, -1}, {0, -1, 0},
                                   {0, 1, 0},  {1, 0, 0},  {-1, 0, 0}};

    bool any_deleted = true;
    while (any_deleted) {
        any_deleted = false;
        for (const auto& d : dirs) {
            std::vector<std::vector<size_t>> per_slice(nz);
#pragma omp parallel for schedule(static)
            for (int z = 0; z < nz; ++z)
                for (int y = 0; y < ny; ++y)
                    for (int x = 0; x < nx; ++x) {
                        if (out.at(x, y, z) == 0.0f) continue;
                        if (fg_at(out, x + d[0], y + d[1], z + d[2])) continue;  // not border
                        if (neighbor_count26(out, x, y, z) == 1) continue;       // endpoint
                        if (!is_simple_point(out, x, y, z)) continue;
                        per_slice[z].push_back(out.index(x, y, z));
                    }

            // Sequential recheck keeps every deletion individually simple.
            for (int z = 0; z < nz; ++z)
                for (size_t idx : per_slice[z]) {
                    const int x = static_cast<int>(idx % nx);
                    const int y = static_cast<int>((idx / nx) % ny);
                    const int zz = static_cast<int>(idx / (static_cast<size_t>(nx) * ny));
                    if (neighbor_count26(out, x, y, zz) == 1) continue;
                    if (!is_simple_point(out, x, y, zz)) continue;
                    out.data[idx] = 0.0f;
                    any_deleted = true;
                }
        }
    }
    return out;
}

int count_components26(const Volume& mask) {
    const int nx = mask.dims[0], ny = mask.dims[1], nz = mask.dims[2];
    std::vector<std::uint8_t> seen(mask.size(), 0);
    std::vector<size_t> stack;
    int components = 0;
    for (size_t i = 0; i < mask.size(); ++i) {
        if (mask.data[i] == 0.0f || seen[i]) continue;
        ++components;
        seen[i] = 1;
        stack.assign(1, i);
        while (!stack.empty()) {
            const size_t cur = stack.back();
            stack.pop_back();
            const int x = static_cast<int>(cur % nx);
            const int y = static_cast<int>((cur / nx) % ny);
            const int z = static_cast<int>(cur / (static_cast<size_t>(nx) * ny));
            for (int dz = -1; dz <= 1; ++dz)
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0 && dz == 0) continue;
                        const int xx = x + dx, yy = y + dy, zz = z + dz;
                        if (!mask.in_bounds(xx, yy, zz)) continue;
                        const size_t ni = mask.index(xx, yy, zz);
                        if (mask.data[ni] == 0.0f || seen[ni]) continue;
                        seen[ni] = 1;
                        stack.push_back(ni);
                    }
        }
    }
    return components;
}

}  // namespace vmap
