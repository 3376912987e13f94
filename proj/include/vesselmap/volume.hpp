#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vesselmap/geometry.hpp"

namespace vmap {

enum class VolumeUnit { hounsfield, distance_mm, vesselness, binary };

const char* to_string(VolumeUnit u);
VolumeUnit volume_unit_from_string(const std::string& s);

struct VolumeIoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense 3D scalar grid, x-fastest linear order, float storage.
/// World coordinates are in mm with voxel centers at (i + 0.5) * spacing.
struct Volume {
    std::array<int, 3> dims{0, 0, 0};
    std::array<double, 3> spacing{1.0, 1.0, 1.0};
    std::vector<float> data;
    VolumeUnit unit = VolumeUnit::hounsfield;

    Volume() = default;
    Volume(int nx, int ny, int nz, VolumeUnit u = VolumeUnit::hounsfield,
           std::array<double, 3> sp = {1.0, 1.0, 1.0})
        : dims{nx, ny, nz}, spacing(sp), data(static_cast<size_t>(nx) * ny * nz, 0.0f), unit(u) {}

    size_t size() const { return static_cast<size_t>(dims[0]) * dims[1] * dims[2]; }
    size_t index(int x, int y, int z) const {
        return static_cast<size_t>(x) + static_cast<size_t>(dims[0]) *
               (static_cast<size_t>(y) + static_cast<size_t>(dims[1]) * static_cast<size_t>(z));
    }
    float& at(int x, int y, int z) { return data[index(x, y, z)]; }
    float at(int x, int y, int z) const { return data[index(x, y, z)]; }
    bool in_bounds(int x, int y, int z) const {
        return x >= 0 && x < dims[0] && y >= 0 && y < dims[1] && z >= 0 && z < dims[2];
    }
    Vec3 voxel_center(int x, int y, int z) const {
        return {(x + 0.5) * spacing[0], (y + 0.5) * spacing[1], (z + 0.5) * spacing[2]};
    }

    /// Throws std::invalid_argument when an invariant is broken.
    void validate() const;
};

/// Tube phantom: a polyline with per-point radii rasterized into a volume.
struct PhantomSpec {
    std::vector<Vec3> centerline;       // mm
    std::vector<double> radius_profile; // mm, one per centerline point
    float background_value = 0.0f;
    float foreground_value = 100.0f;
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Reads .nrrd/.nhdr (raw little-endian uint8/int16/float32) or .raw with a
/// `<path>.txt` sidecar. Distinct errors for unreadable files, bad headers,
/// and payload size mismatches.
Volume load_volume(const std::string& path);

/// Writer counterpart; load_volume(path) round-trips bit-exactly.
void save_volume(const Volume& vol, const std::string& path);

struct PhantomResult {
    Volume volume;
    bool clipped = false;  // centerline left the volume bounds (warning, not error)
};

PhantomResult synth_tube_volume(const PhantomSpec& spec, std::array<int, 3> dims,
                                std::array<double, 3> spacing);

}  // namespace vmap
