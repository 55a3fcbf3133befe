#include "mstruct/volume.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "mstruct/numeric.hpp"

namespace mstruct {

namespace {

constexpr char kMagic[] = "MVX1\n";
constexpr std::size_t kMagicLen = 5;

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

// "key=value" with an exact expected key.
std::string_view field_value(std::string_view token, std::string_view key,
                             const std::filesystem::path& path) {
  std::size_t eq = token.find('=');
  if (eq == std::string_view::npos || token.substr(0, eq) != key) {
    fail(ErrorCode::HeaderParse,
         "expected '" + std::string(key) + "=...' in header of " + path.string());
  }
  return token.substr(eq + 1);
}

}  // namespace

const char* axis_name(Axis axis) {
  switch (axis) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  return "?";
}

const char* boundary_name(BoundaryMode boundary) {
  return boundary == BoundaryMode::Periodic ? "periodic" : "truncated";
}

void VoxelVolume::validate() const {
  if (dims[0] <= 0 || dims[1] <= 0 || dims[2] <= 0) {
    fail(ErrorCode::HeaderParse, "dims must be positive");
  }
  if (data.size() != voxel_count()) {
    fail(ErrorCode::PayloadSizeMismatch,
         "data holds " + std::to_string(data.size()) + " bytes, dims need " +
             std::to_string(voxel_count()));
  }
  if (!(voxel_size > 0)) {
    fail(ErrorCode::HeaderParse, "voxel_size must be positive");
  }
  if (kind == VolumeKind::Phase) {
    if (n_phases < 1 || n_phases > 256) {
      fail(ErrorCode::HeaderParse, "n_phases must be in [1, 256]");
    }
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (data[i] >= n_phases) {
        fail(ErrorCode::LabelOutOfRange,
             "voxel " + std::to_string(i) + " has label " +
                 std::to_string(int(data[i])) + " but n_phases is " +
                 std::to_string(n_phases));
      }
    }
  }
}

VoxelVolume VoxelVolume::create(std::array<int, 3> dims, VolumeKind kind,
                                int n_phases, double voxel_size,
                                std::vector<std::uint8_t> data) {
  VoxelVolume vol;
  vol.dims = dims;
  vol.kind = kind;
  vol.n_phases = kind == VolumeKind::Phase ? n_phases : 0;
  vol.voxel_size = voxel_size;
  vol.data = std::move(data);
  vol.validate();
  return vol;
}

VoxelVolume load_volume(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoFailure, "cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (in.bad()) fail(ErrorCode::IoFailure, "read failed for " + path.string());

  if (bytes.size() < kMagicLen || bytes.compare(0, kMagicLen, kMagic) != 0) {
    fail(ErrorCode::BadMagic, path.string() + " does not start with MVX1");
  }
  std::size_t header_end = bytes.find('\n', kMagicLen);
  if (header_end == std::string::npos) {
    fail(ErrorCode::HeaderParse, "missing header line in " + path.string());
  }
  std::string_view header(bytes.data() + kMagicLen, header_end - kMagicLen);

  auto tokens = split(header, ' ');
  if (tokens.size() != 4) {
    fail(ErrorCode::HeaderParse, "header must carry exactly 4 fields, got " +
                                     std::to_string(tokens.size()));
  }

  auto dims_text = split(field_value(tokens[0], "dims", path), ',');
  if (dims_text.size() != 3) {
    fail(ErrorCode::HeaderParse, "dims must be three comma-separated counts");
  }
  std::array<int, 3> dims{};
  for (int i = 0; i < 3; ++i) {
    auto v = parse_integer(dims_text[i]);
    if (!v || *v <= 0 || *v > 1 << 20) {
      fail(ErrorCode::HeaderParse, "bad dimension '" + std::string(dims_text[i]) + "'");
    }
    dims[i] = static_cast<int>(*v);
  }

  auto kind_text = field_value(tokens[1], "kind", path);
  VolumeKind kind;
  if (kind_text == "phase") {
    kind = VolumeKind::Phase;
  } else if (kind_text == "gray") {
    kind = VolumeKind::Gray;
  } else {
    fail(ErrorCode::HeaderParse, "kind must be 'phase' or 'gray'");
  }

  auto phases_value = parse_integer(field_value(tokens[2], "n_phases", path));
  if (!phases_value) fail(ErrorCode::HeaderParse, "bad n_phases");
  int n_phases = static_cast<int>(*phases_value);
  if (kind == VolumeKind::Phase && (n_phases < 1 || n_phases > 256)) {
    fail(ErrorCode::HeaderParse, "n_phases must be in [1, 256] for phase volumes");
  }
  if (kind == VolumeKind::Gray && n_phases != 0) {
    fail(ErrorCode::HeaderParse, "n_phases must be 0 for gray volumes");
  }

  auto size_value = parse_double(field_value(tokens[3], "voxel_size", path));
  if (!size_value || !(*size_value > 0) || !std::isfinite(*size_value)) {
    fail(ErrorCode::HeaderParse, "voxel_size must be a positive finite number");
  }

  const std::size_t payload_begin = header_end + 1;
  const std::size_t expected =
      static_cast<std::size_t>(dims[0]) * dims[1] * dims[2];
  const std::size_t actual = bytes.size() - payload_begin;
  if (actual != expected) {
    fail(ErrorCode::PayloadSizeMismatch,
         path.string() + " payload is " + std::to_string(actual) +
             " bytes, header needs " + std::to_string(expected));
  }

  VoxelVolume vol;
  vol.dims = dims;
  vol.kind = kind;
  vol.n_phases = n_phases;
  vol.voxel_size = *size_value;
  vol.data.assign(bytes.begin() + payload_begin, bytes.end());
  vol.validate();
  return vol;
}

void save_volume(const VoxelVolume& vol, const std::filesystem::path& path) {
  vol.validate();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoFailure, "cannot open " + path.string() + " for writing");

  std::ostringstream header;
  header << kMagic << "dims=" << vol.dims[0] << ',' << vol.dims[1] << ','
         << vol.dims[2]
         << " kind=" << (vol.kind == VolumeKind::Phase ? "phase" : "gray")
         << " n_phases=" << (vol.kind == VolumeKind::Phase ? vol.n_phases : 0)
         << " voxel_size=" << format_double(vol.voxel_size) << '\n';
  const std::string head = header.str();
  out.write(head.data(), static_cast<std::streamsize>(head.size()));
  out.write(reinterpret_cast<const char*>(vol.data.data()),
            static_cast<std::streamsize>(vol.data.size()));
  out.flush();
  if (!out) fail(ErrorCode::IoFailure, "write failed for " + path.string());
}

SliceImage slice(const VoxelVolume& vol, Axis axis, int index) {
  if (index < 0 || index >= vol.dim(axis)) {
    fail(ErrorCode::IndexOutOfRange,
         "slice index " + std::to_string(index) + " out of range for axis " +
             axis_name(axis) + " of length " + std::to_string(vol.dim(axis)));
  }
  SliceImage img;
  img.source_axis = axis;
  img.source_index = index;
  const auto [nx, ny, nz] = vol.dims;
  switch (axis) {
    case Axis::Z:
      img.width = nx;
      img.height = ny;
      img.data.resize(img.pixel_count());
      for (int y = 0; y < ny; ++y)
        for (int x = 0; x < nx; ++x)
          img.data[static_cast<std::size_t>(x) + static_cast<std::size_t>(nx) * y] =
              vol.at(x, y, index);
      break;
    case Axis::Y:
      img.width = nx;
      img.height = nz;
      img.data.resize(img.pixel_count());
      for (int z = 0; z < nz; ++z)
        for (int x = 0; x < nx; ++x)
          img.data[static_cast<std::size_t>(x) + static_cast<std::size_t>(nx) * z] =
              vol.at(x, index, z);
      break;
    case Axis::X:
      img.width = ny;
      img.height = nz;
      img.data.resize(img.pixel_count());
      for (int z = 0; z < nz; ++z)
        for (int y = 0; y < ny; ++y)
          img.data[static_cast<std::size_t>(y) + static_cast<std::size_t>(ny) * z] =
              vol.at(index, y, z);
      break;
  }
  return img;
}

std::uint8_t phase_to_gray(int label, int n_phases) {
  if (n_phases <= 1) return 0;
  return static_cast<std::uint8_t>(label * (255 / (n_phases - 1)));
}

SliceImage gray_slice(const VoxelVolume& vol, Axis axis, int index) {
  SliceImage img = slice(vol, axis, index);
  if (vol.kind == VolumeKind::Phase) {
    for (auto& v : img.data) v = phase_to_gray(v, vol.n_phases);
  }
  return img;
}

}  // namespace mstruct
