#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mstruct/descriptors.hpp"
#include "mstruct/image_quality.hpp"
#include "mstruct/physics.hpp"
#include "mstruct/texture.hpp"
#include "mstruct/volume.hpp"

namespace mstruct::report {

enum class DescriptorKind { TwoPointCorrelation, TwoPointCluster, LinealPath };

/// "s2", "c2" or "l"; used in CSV file names and report keys.
const char* descriptor_short_name(DescriptorKind kind);

struct DescriptorConfig {
  bool enabled = true;
  std::vector<int> phases;  // empty = every phase of the volume
  int r_max = 0;            // 0 = floor(min_dim / 2)
  BoundaryMode boundary = BoundaryMode::Truncated;
  std::vector<descriptors::Direction> directions{
      descriptors::Direction::X, descriptors::Direction::Y,
      descriptors::Direction::Z, descriptors::Direction::AxisAverage};
  descriptors::ClusterVariant cluster_variant =
      descriptors::ClusterVariant::SameCluster;
  descriptors::Connectivity connectivity = descriptors::Connectivity::Face6;
  bool porosity = true;
  int porosity_window = 0;  // 0 = floor(min_dim / 4)
  int porosity_stride = 0;  // 0 = window (non-overlapping)
};

struct TextureConfig {
  bool enabled = true;
  int levels = 0;  // 0 = kind default: 256 for phase volumes, 32 for gray
  int distance = 1;
  std::vector<texture::GlcmAngle> angles{
      texture::GlcmAngle::Deg0, texture::GlcmAngle::Deg45,
      texture::GlcmAngle::Deg90, texture::GlcmAngle::Deg135};
};

struct QualityConfig {
  bool enabled = true;  // takes effect only when a generated volume is given
  quality::SsimParams params;
};

struct PhysicsConfig {
  bool enabled = true;
  BoundaryMode boundary = BoundaryMode::Truncated;
  bool diffusion = true;
  std::vector<int> phases;  // diffusion phases; empty = every phase
  std::vector<Axis> axes{Axis::X, Axis::Y, Axis::Z};
  physics::SolverParams solver;
};

struct ReportConfig {
  std::filesystem::path reference_path;
  std::optional<std::filesystem::path> generated_path;
  std::filesystem::path output_dir = "mstruct-report";
  DescriptorConfig descriptors;
  TextureConfig texture;
  QualityConfig quality;
  PhysicsConfig physics;

  /// ConfigInvalid unless at least one analysis is enabled and the two paths
  /// differ when a comparison is requested.
  void validate() const;
};

/// Strict JSON parse: unknown keys are rejected so typos cannot silently
/// disable an analysis.
ReportConfig load_config(const std::filesystem::path& json_path);
std::string config_to_json(const ReportConfig& config);

struct NamedProfile {
  DescriptorKind kind;
  descriptors::RadialProfile profile;
};

struct VolumeAnalyses {
  std::vector<NamedProfile> profiles;
  std::vector<descriptors::PorosityCdf> porosity;
  std::optional<texture::AnisotropyReport> texture;
  std::optional<physics::PhysicsReport> physics;
  std::vector<physics::DiffusionResult> diffusion;
};

struct VolumeMeta {
  std::string path;
  std::array<int, 3> dims{0, 0, 0};
  VolumeKind kind = VolumeKind::Phase;
  int n_phases = 0;
  double voxel_size = 1.0;
};

struct EvaluationReport {
  std::string toolkit_version;
  int schema_version = 0;
  ReportConfig config;
  VolumeMeta reference;
  std::optional<VolumeMeta> generated;
  VolumeAnalyses reference_analyses;
  std::optional<VolumeAnalyses> generated_analyses;
  std::optional<quality::QualityReport> quality;
};

/// Loads the inputs, runs every enabled analysis and returns the aggregate.
/// Deterministic: identical config and inputs give identical reports.
EvaluationReport run_report(const ReportConfig& config);

/// Canonical JSON. Infinite values are encoded as the strings "inf"/"-inf"
/// (JSON has no infinity literal); everything else round-trips losslessly.
std::string report_to_json(const EvaluationReport& report);

/// Writes report.json plus one CSV per profile/table (and physics.json) into
/// config.output_dir. Pair reports prefix per-volume files with ref_/gen_.
void write_report_files(const EvaluationReport& report);

// CSV renderers shared with the CLI subcommands. Numeric cells use the
// shortest round-trip form; "inf" is the PSNR sentinel.
std::string profile_csv(const descriptors::RadialProfile& profile);
std::string porosity_csv(const descriptors::PorosityCdf& cdf);
std::string texture_features_csv(const texture::AnisotropyReport& report);
std::string texture_ai_csv(const texture::AnisotropyReport& report);
std::string quality_csv(const quality::QualityReport& report);
std::string physics_to_json(const physics::PhysicsReport& report,
                            const std::vector<physics::DiffusionResult>& diffusion);

}  // namespace mstruct::report
