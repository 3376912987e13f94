#include "vesselmap/volume.hpp"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vesselmap/rng.hpp"

namespace vmap {

const char* to_string(VolumeUnit u) {
    switch (u) {
        case VolumeUnit::hounsfield: return "hounsfield";
        case VolumeUnit::distance_mm: return "distance_mm";
        case VolumeUnit::vesselness: return "vesselness";
        case VolumeUnit::binary: return "binary";
    }
    return "hounsfield";
}

VolumeUnit volume_unit_from_string(const std::string& s) {
    if (s == "hounsfield") return VolumeUnit::hounsfield;
    if (s == "distance_mm") return VolumeUnit::distance_mm;
    if (s == "vesselness") return VolumeUnit::vesselness;
    if (s == "binary") return VolumeUnit::binary;
    throw std::invalid_argument("unknown volume unit: " + s);
}

void Volume::validate() const {
    if (dims[0] <= 0 || dims[1] <= 0 || dims[2] <= 0)
        throw std::invalid_argument("volume dims must be positive");
    if (spacing[0] <= 0.0 || spacing[1] <= 0.0 || spacing[2] <= 0.0)
        throw std::invalid_argument("volume spacing must be positive");
    if (data.size() != size())
        throw std::invalid_argument("volume data length does not match dims");
    if (unit == VolumeUnit::binary) {
        for (float v : data)
            if (v != 0.0f && v != 1.0f)
                throw std::invalid_argument("binary volume contains values outside {0,1}");
    }
}

void PhantomSpec::validate() const {
    if (centerline.size() < 2)
        throw std::invalid_argument("phantom centerline needs at least 2 points");
    if (radius_profile.size() != centerline.size())
        throw std::invalid_argument("radius profile size must match centerline");
    for (double r : radius_profile)
        if (r <= 0.0) throw std::invalid_argument("phantom radii must be positive");
    if (noise_sigma < 0.0) throw std::invalid_argument("noise sigma must be >= 0");
}

namespace {

enum class Dtype { u8, i16, f32 };

size_t dtype_size(Dtype t) {
    switch (t) {
        case Dtype::u8: return 1;
        case Dtype::i16: return 2;
        case Dtype::f32: return 4;
    }
    return 4;
}

Dtype dtype_from_string(const std::string& s) {
    if (s == "uint8" || s == "uchar" || s == "unsigned char") return Dtype::u8;
    if (s == "int16" || s == "short" || s == "signed short") return Dtype::i16;
    if (s == "float" || s == "float32") return Dtype::f32;
    throw VolumeIoError("unsupported voxel type: " + s);
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool ends_with(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

void decode_payload(Volume& vol, Dtype dtype, const std::vector<char>& raw) {
    const size_t n = vol.size();
    if (raw.size() != n * dtype_size(dtype))
        throw VolumeIoError("value-count mismatch: header declares " + std::to_string(n) +
                            " values but payload holds " +
                            std::to_string(raw.size() / dtype_size(dtype)));
    vol.data.resize(n);
    switch (dtype) {
        case Dtype::u8:
            for (size_t i = 0; i < n; ++i)
                vol.data[i] = static_cast<float>(static_cast<unsigned char>(raw[i]));
            break;
        case Dtype::i16:
            for (size_t i = 0; i < n; ++i) {
                std::int16_t v;
                std::memcpy(&v, raw.data() + 2 * i, 2);
                vol.data[i] = static_cast<float>(v);
            }
            break;
        case Dtype::f32:
            std::memcpy(vol.data.data(), raw.data(), n * 4);
            break;
    }
}

std::vector<char> read_file_tail(std::istream& in) {
    std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return raw;
}

Volume load_nrrd(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw VolumeIoError("cannot open file: " + path);

    std::string magic;
    std::getline(in, magic);
    if (magic.rfind("NRRD", 0) != 0) throw VolumeIoError("not an NRRD file: " + path);

    Volume vol;
    Dtype dtype = Dtype::f32;
    std::string datafile;
    bool have_sizes = false;
    bool have_spacing = false;

    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) break;  // header/payload separator
        if (line[0] == '#') continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        const std::string key = trim(line.substr(0, colon));
        const std::string value = trim(line.substr(colon + 1));
        if (key == "type") {
            dtype = dtype_from_string(value);
        } else if (key == "dimension") {
            if (trim(value) != "3") throw VolumeIoError("only 3D NRRD is supported: " + path);
        } else if (key == "sizes") {
            std::istringstream ss(value);
            if (!(ss >> vol.dims[0] >> vol.dims[1] >> vol.dims[2]))
                throw VolumeIoError("malformed sizes line: " + path);
            have_sizes = true;
        } else if (key == "spacings") {
            std::istringstream ss(value);
            if (!(ss >> vol.spacing[0] >> vol.spacing[1] >> vol.spacing[2]))
                throw VolumeIoError("malformed spacings line: " + path);
            have_spacing = true;
        } else if (key == "encoding") {
            if (value != "raw") throw VolumeIoError("unsupported encoding: " + value);
        } else if (key == "endian") {
            if (value != "little") throw VolumeIoError("unsupported endian: " + value);
        } else if (key == "content") {
            try {
                vol.unit = volume_unit_from_string(value);
            } catch (const std::invalid_argument&) {
                // foreign content strings are fine, keep the default
            }
        } else if (key == "data file") {
            datafile = value;
        }
    }
    if (!have_sizes) throw VolumeIoError("NRRD header missing sizes: " + path);
    if (!have_spacing) vol.spacing = {1.0, 1.0, 1.0};
    if (vol.dims[0] <= 0 || vol.dims[1] <= 0 || vol.dims[2] <= 0)
        throw VolumeIoError("non-positive dimensions in header: " + path);
    if (vol.spacing[0] <= 0 || vol.spacing[1] <= 0 || vol.spacing[2] <= 0)
        throw VolumeIoError("non-positive spacing in header: " + path);

    std::vector<char> raw;
    if (datafile.empty()) {
        raw = read_file_tail(in);
    } else {
        const auto dir = std::filesystem::path(path).parent_path();
        std::ifstream din(dir / datafile, std::ios::binary);
        if (!din) throw VolumeIoError("cannot open detached data file: " + datafile);
        raw = read_file_tail(din);
    }
    decode_payload(vol, dtype, raw);
    return vol;
}

Volume load_raw_sidecar(const std::string& path) {
    std::ifstream side(path + ".txt");
    if (!side) throw VolumeIoError("cannot open sidecar: " + path + ".txt");
    Volume vol;
    Dtype dtype = Dtype::f32;
    bool have_dims = false;
    std::string line;
    while (std::getline(side, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        std::istringstream ss(value);
        if (key == "dims") {
            if (!(ss >> vol.dims[0] >> vol.dims[1] >> vol.dims[2]))
                throw VolumeIoError("malformed dims in sidecar: " + path);
            have_dims = true;
        } else if (key == "spacing") {
            if (!(ss >> vol.spacing[0] >> vol.spacing[1] >> vol.spacing[2]))
                throw VolumeIoError("malformed spacing in sidecar: " + path);
        } else if (key == "dtype") {
            dtype = dtype_from_string(value);
        } else if (key == "unit") {
            vol.unit = volume_unit_from_string(value);
        }
    }
    if (!have_dims) throw VolumeIoError("sidecar missing dims= line: " + path);
    if (vol.spacing[0] <= 0 || vol.spacing[1] <= 0 || vol.spacing[2] <= 0)
        throw VolumeIoError("non-positive spacing in sidecar: " + path);

    std::ifstream in(path, std::ios::binary);
    if (!in) throw VolumeIoError("cannot open file: " + path);
    auto raw = read_file_tail(in);
    decode_payload(vol, dtype, raw);
    return vol;
}

}  // namespace

Volume load_volume(const std::string& path) {
    Volume vol;
    if (ends_with(path, ".nrrd") || ends_with(path, ".nhdr")) {
        vol = load_nrrd(path);
    } else if (ends_with(path, ".raw")) {
        vol = load_raw_sidecar(path);
    } else {
        // sniff the magic
        std::ifstream in(path, std::ios::binary);
        if (!in) throw VolumeIoError("cannot open file: " + path);
        char magic[4] = {0, 0, 0, 0};
        in.read(magic, 4);
        if (std::strncmp(magic, "NRRD", 4) == 0) vol = load_nrrd(path);
        else vol = load_raw_sidecar(path);
    }
    vol.validate();
    return vol;
}

void save_volume(const Volume& vol, const std::string& path) {
    vol.validate();
    if (ends_with(path, ".raw")) {
        std::ofstream side(path + ".txt");
        if (!side) throw VolumeIoError("cannot write sidecar: " + path + ".txt");
        side << "dims= " << vol.dims[0] << ' ' << vol.dims[1] << ' ' << vol.dims[2] << '\n'
             << "spacing= " << vol.spacing[0] << ' ' << vol.spacing[1] << ' ' << vol.spacing[2] << '\n'
             << "dtype= float32\n"
             << "unit= " << to_string(vol.unit) << '\n';
        std::ofstream out(path, std::ios::binary);
        if (!out) throw VolumeIoError("cannot write file: " + path);
        out.write(reinterpret_cast<const char*>(vol.data.data()),
                  static_cast<std::streamsize>(vol.data.size() * 4));
        if (!out) throw VolumeIoError("write failed: " + path);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw VolumeIoError("cannot write file: " + path);
    std::ostringstream header;
    header << "NRRD0004\n"
           << "type: float\n"
           << "dimension: 3\n"
           << "sizes: " << vol.dims[0] << ' ' << vol.dims[1] << ' ' << vol.dims[2] << '\n';
    header.precision(17);
    header << "spacings: " << vol.spacing[0] << ' ' << vol.spacing[1] << ' ' << vol.spacing[2] << '\n'
           << "encoding: raw\n"
           << "endian: little\n"
           << "content: " << to_string(vol.unit) << "\n\n";
    out << header.str();
    out.write(reinterpret_cast<const char*>(vol.data.data()),
              static_cast<std::streamsize>(vol.data.size() * 4));
    if (!out) throw VolumeIoError("write failed: " + path);
}

PhantomResult synth_tube_volume(const PhantomSpec& spec, std::array<int, 3> dims,
                                std::array<double, 3> spacing) {
    spec.validate();
    PhantomResult result;
    Volume& vol = result.volume;
    vol = Volume(dims[0], dims[1], dims[2], VolumeUnit::hounsfield, spacing);

    const Vec3 lo(0.0, 0.0, 0.0);
    const Vec3 hi(dims[0] * spacing[0], dims[1] * spacing[1], dims[2] * spacing[2]);
    for (size_t i = 0; i < spec.centerline.size(); ++i) {
        const Vec3& p = spec.centerline[i];
        const double r = spec.radius_profile[i];
        for (int a = 0; a < 3; ++a)
            if (p[a] - r < lo[a] || p[a] + r > hi[a]) result.clipped = true;
    }

    // Distance to the polyline with the radius interpolated at the closest
    // parameter; a voxel is inside if any segment admits it.
    const size_t nseg = spec.centerline.size() - 1;
    for (int z = 0; z < dims[2]; ++z) {
        for (int y = 0; y < dims[1]; ++y) {
            for (int x = 0; x < dims[0]; ++x) {
                const Vec3 c = vol.voxel_center(x, y, z);
                bool inside = false;
                for (size_t s = 0; s < nseg && !inside; ++s) {
                    const Vec3& a = spec.centerline[s];
                    const Vec3& b = spec.centerline[s + 1];
                    const Vec3 ab = b - a;
                    const double len2 = ab.squaredNorm();
                    double t = len2 > 0.0 ? std::clamp((c - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
                    const double d = (c - (a + t * ab)).norm();
                    const double r = spec.radius_profile[s] +
                                     t * (spec.radius_profile[s + 1] - spec.radius_profile[s]);
                    inside = d <= r;
                }
                vol.at(x, y, z) = inside ? spec.foreground_value : spec.background_value;
            }
        }
    }

    if (spec.noise_sigma > 0.0) {
        Rng rng(spec.seed);
        for (float& v : vol.data)
            v += static_cast<float>(spec.noise_sigma * rng.normal());
    }
    return result;
}

}  // namespace vmap
