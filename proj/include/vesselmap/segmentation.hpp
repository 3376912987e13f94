#pragma once

#include <vector>

#include "vesselmap/volume.hpp"

namespace vmap {

struct HysteresisParams {
    double low = 0.0;
    double high = 0.0;

    void validate() const {
        if (low > high) throw std::invalid_argument("hysteresis requires low <= high");
    }
};

struct FrangiParams {
    std::vector<double> scales{1.0, 2.0, 3.0, 4.0};  // Gaussian sigmas in mm
    double alpha = 0.5;  // plate discriminant
    double beta = 0.5;   // blob discriminant
    double c = 0.0;      // structureness scale; <= 0 means half the observed maximum
    bool bright_on_dark = true;

    void validate() const;
};

/// Double threshold: a voxel survives iff it is >= low and 26-connected
/// through >= low voxels to some voxel >= high.
Volume hysteresis_threshold(const Volume& vol, const HysteresisParams& p);

struct SdfResult {
    Volume sdf;                       // unit distance_mm
    bool single_phase_warning = false;  // mask was all-foreground or all-background
};

/// Exact signed Euclidean distance in mm: positive inside the mask (distance
/// to the nearest background voxel center), negative outside. Separable
/// lower-envelope passes per axis, honoring anisotropic spacing.
SdfResult signed_distance_transform(const Volume& mask);

struct FrangiResult {
    Volume vesselness;          // values in [0, 1]
    int undersampled_scales = 0;  // sigma < half the smallest voxel spacing
};

FrangiResult frangi_vesselness(const Volume& vol, const FrangiParams& p);

/// Topology-preserving 3D thinning: six fixed subiteration directions
/// (U,D,N,S,E,W), parallel candidate marking, sequential simple-point
/// recheck before each deletion. Keeps curve endpoints.
Volume skeletonize(const Volume& mask);

// Building blocks, exposed for tests and benchmarks.

/// Separable Gaussian smoothing, kernel truncated at 3 sigma, borders clamped.
Volume gaussian_smooth(const Volume& vol, double sigma_mm);

/// Smooth at sigma, then central-difference Hessian scaled by sigma^2.
/// Component order: xx, yy, zz, xy, xz, yz.
std::array<std::vector<float>, 6> scaled_hessian(const Volume& vol, double sigma_mm);

/// Eigenvalues of a symmetric 3x3 matrix, ascending. Closed form.
void sym3_eigenvalues(double a11, double a22, double a33, double a12, double a13,
                      double a23, double out[3]);

/// True if the voxel can be removed without changing local topology
/// (26-connectivity for foreground, 6 for background).
bool is_simple_point(const Volume& mask, int x, int y, int z);

/// Number of 26-connected foreground components.
int count_components26(const Volume& mask);

}  // namespace vmap
