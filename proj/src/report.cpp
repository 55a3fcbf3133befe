#include "mstruct/report.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mstruct/numeric.hpp"
#include "mstruct/version.hpp"

namespace mstruct::report {

using nlohmann::json;

namespace {

// JSON has no infinity literal; encode non-finite values as strings so
// report.json stays parseable and round-trips.
json jnum(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : "-inf";
}

json jaxis(Axis a) { return axis_name(a); }

Axis parse_axis(const std::string& s) {
  if (s == "x") return Axis::X;
  if (s == "y") return Axis::Y;
  if (s == "z") return Axis::Z;
  fail(ErrorCode::ConfigInvalid, "unknown axis '" + s + "'");
}

descriptors::Direction parse_direction(const std::string& s) {
  if (s == "avg") return descriptors::Direction::AxisAverage;
  return static_cast<descriptors::Direction>(parse_axis(s));
}

BoundaryMode parse_boundary(const std::string& s) {
  if (s == "periodic") return BoundaryMode::Periodic;
  if (s == "truncated") return BoundaryMode::Truncated;
  fail(ErrorCode::ConfigInvalid, "unknown boundary mode '" + s + "'");
}

texture::GlcmAngle parse_angle(int deg) {
  switch (deg) {
    case 0: return texture::GlcmAngle::Deg0;
    case 45: return texture::GlcmAngle::Deg45;
    case 90: return texture::GlcmAngle::Deg90;
    case 135: return texture::GlcmAngle::Deg135;
  }
  fail(ErrorCode::ConfigInvalid,
       "angle must be one of 0, 45, 90, 135, got " + std::to_string(deg));
}

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      fail(ErrorCode::ConfigInvalid, "unknown key '" + key + "' in " + where);
    }
  }
}

template <typename T>
T get_or(const json& obj, const char* key, T fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    fail(ErrorCode::ConfigInvalid, std::string("bad value for '") + key + "'");
  }
}

json config_json(const ReportConfig& c) {
  json j;
  j["reference"] = c.reference_path.string();
  if (c.generated_path) j["generated"] = c.generated_path->string();
  j["output_dir"] = c.output_dir.string();

  json d;
  d["enabled"] = c.descriptors.enabled;
  d["phases"] = c.descriptors.phases;
  d["r_max"] = c.descriptors.r_max;
  d["boundary"] = boundary_name(c.descriptors.boundary);
  json dirs = json::array();
  for (auto dir : c.descriptors.directions) dirs.push_back(direction_name(dir));
  d["directions"] = dirs;
  d["cluster_variant"] =
      c.descriptors.cluster_variant == descriptors::ClusterVariant::LiteralS8
          ? "literal_s8"
          : "same_cluster";
  d["connectivity"] =
      c.descriptors.connectivity == descriptors::Connectivity::Face6 ? "face6"
                                                                     : "full26";
  d["porosity"] = c.descriptors.porosity;
  d["porosity_window"] = c.descriptors.porosity_window;
  d["porosity_stride"] = c.descriptors.porosity_stride;
  j["descriptors"] = d;

  json t;
  t["enabled"] = c.texture.enabled;
  t["levels"] = c.texture.levels;
  t["distance"] = c.texture.distance;
  json angles = json::array();
  for (auto a : c.texture.angles) angles.push_back(static_cast<int>(a));
  t["angles"] = angles;
  j["texture"] = t;

  json q;
  q["enabled"] = c.quality.enabled;
  q["window"] = c.quality.params.window;
  q["k1"] = c.quality.params.k1;
  q["k2"] = c.quality.params.k2;
  q["dynamic_range"] = c.quality.params.dynamic_range;
  j["quality"] = q;

  json p;
  p["enabled"] = c.physics.enabled;
  p["boundary"] = boundary_name(c.physics.boundary);
  p["diffusion"] = c.physics.diffusion;
  p["phases"] = c.physics.phases;
  json axes = json::array();
  for (auto a : c.physics.axes) axes.push_back(axis_name(a));
  p["axes"] = axes;
  p["tolerance"] = c.physics.solver.tolerance;
  p["max_iterations"] = c.physics.solver.max_iterations;
  p["preconditioner"] =
      c.physics.solver.preconditioner == physics::Preconditioner::Diagonal
          ? "diagonal"
          : "none";
  j["physics"] = p;
  return j;
}

ReportConfig config_from_json(const json& j) {
  check_keys(j, {"reference", "generated", "output_dir", "descriptors",
                 "texture", "quality", "physics"},
             "config");
  ReportConfig c;
  if (!j.contains("reference") || !j.at("reference").is_string()) {
    fail(ErrorCode::ConfigInvalid, "config needs a 'reference' volume path");
  }
  c.reference_path = j.at("reference").get<std::string>();
  if (j.contains("generated")) {
    c.generated_path = std::filesystem::path(j.at("generated").get<std::string>());
  }
  c.output_dir = get_or<std::string>(j, "output_dir", c.output_dir.string());

  if (j.contains("descriptors")) {
    const json& d = j.at("descriptors");
    check_keys(d,
               {"enabled", "phases", "r_max", "boundary", "directions",
                "cluster_variant", "connectivity", "porosity",
                "porosity_window", "porosity_stride"},
               "descriptors");
    c.descriptors.enabled = get_or(d, "enabled", true);
    c.descriptors.phases = get_or(d, "phases", std::vector<int>{});
    c.descriptors.r_max = get_or(d, "r_max", 0);
    c.descriptors.boundary =
        parse_boundary(get_or<std::string>(d, "boundary", "truncated"));
    if (d.contains("directions")) {
      c.descriptors.directions.clear();
      for (const auto& s : d.at("directions")) {
        c.descriptors.directions.push_back(parse_direction(s.get<std::string>()));
      }
    }
    const auto variant = get_or<std::string>(d, "cluster_variant", "same_cluster");
    if (variant == "literal_s8") {
      c.descriptors.cluster_variant = descriptors::ClusterVariant::LiteralS8;
    } else if (variant == "same_cluster") {
      c.descriptors.cluster_variant = descriptors::ClusterVariant::SameCluster;
    } else {
      fail(ErrorCode::ConfigInvalid, "unknown cluster_variant '" + variant + "'");
    }
    const auto conn = get_or<std::string>(d, "connectivity", "face6");
    if (conn == "face6") {
      c.descriptors.connectivity = descriptors::Connectivity::Face6;
    } else if (conn == "full26") {
      c.descriptors.connectivity = descriptors::Connectivity::Full26;
    } else {
      fail(ErrorCode::ConfigInvalid, "unknown connectivity '" + conn + "'");
    }
    c.descriptors.porosity = get_or(d, "porosity", true);
    c.descriptors.porosity_window = get_or(d, "porosity_window", 0);
    c.descriptors.porosity_stride = get_or(d, "porosity_stride", 0);
  }

  if (j.contains("texture")) {
    const json& t = j.at("texture");
    check_keys(t, {"enabled", "levels", "distance", "angles"}, "texture");
    c.texture.enabled = get_or(t, "enabled", true);
    c.texture.levels = get_or(t, "levels", 0);
    c.texture.distance = get_or(t, "distance", 1);
    if (t.contains("angles")) {
      c.texture.angles.clear();
      for (const auto& a : t.at("angles")) {
        c.texture.angles.push_back(parse_angle(a.get<int>()));
      }
    }
  }

  if (j.contains("quality")) {
    const json& q = j.at("quality");
    check_keys(q, {"enabled", "window", "k1", "k2", "dynamic_range"}, "quality");
    c.quality.enabled = get_or(q, "enabled", true);
    c.quality.params.window = get_or(q, "window", 7);
    c.quality.params.k1 = get_or(q, "k1", 0.01);
    c.quality.params.k2 = get_or(q, "k2", 0.03);
    c.quality.params.dynamic_range = get_or(q, "dynamic_range", 255.0);
  }

  if (j.contains("physics")) {
    const json& p = j.at("physics");
    check_keys(p,
               {"enabled", "boundary", "diffusion", "phases", "axes",
                "tolerance", "max_iterations", "preconditioner"},
               "physics");
    c.physics.enabled = get_or(p, "enabled", true);
    c.physics.boundary = parse_boundary(get_or<std::string>(p, "boundary", "truncated"));
    c.physics.diffusion = get_or(p, "diffusion", true);
    c.physics.phases = get_or(p, "phases", std::vector<int>{});
    if (p.contains("axes")) {
      c.physics.axes.clear();
      for (const auto& a : p.at("axes")) {
        c.physics.axes.push_back(parse_axis(a.get<std::string>()));
      }
    }
    c.physics.solver.tolerance = get_or(p, "tolerance", 1e-8);
    c.physics.solver.max_iterations = get_or(p, "max_iterations", 0);
    const auto precond = get_or<std::string>(p, "preconditioner", "diagonal");
    if (precond == "diagonal") {
      c.physics.solver.preconditioner = physics::Preconditioner::Diagonal;
    } else if (precond == "none") {
      c.physics.solver.preconditioner = physics::Preconditioner::None;
    } else {
      fail(ErrorCode::ConfigInvalid, "unknown preconditioner '" + precond + "'");
    }
  }

  c.validate();
  return c;
}

VolumeMeta meta_of(const VoxelVolume& vol, const std::filesystem::path& path) {
  VolumeMeta m;
  m.path = path.string();
  m.dims = vol.dims;
  m.kind = vol.kind;
  m.n_phases = vol.n_phases;
  m.voxel_size = vol.voxel_size;
  return m;
}

std::vector<int> resolve_phases(const std::vector<int>& configured,
                                const VoxelVolume& vol) {
  if (!configured.empty()) return configured;
  std::vector<int> all(vol.n_phases);
  for (int i = 0; i < vol.n_phases; ++i) all[i] = i;
  return all;
}

int min_dim(const VoxelVolume& vol) {
  return std::min({vol.dims[0], vol.dims[1], vol.dims[2]});
}

VolumeAnalyses analyze_volume(const VoxelVolume& vol, const ReportConfig& config) {
  VolumeAnalyses out;

  if (config.descriptors.enabled) {
    const auto& dc = config.descriptors;
    const int r_max = dc.r_max > 0 ? dc.r_max : min_dim(vol) / 2;
    for (int phase : resolve_phases(dc.phases, vol)) {
      // Per-axis profiles are computed once; the axis average is derived
      // from them instead of recomputing each axis.
      for (DescriptorKind kind :
           {DescriptorKind::TwoPointCorrelation, DescriptorKind::TwoPointCluster,
            DescriptorKind::LinealPath}) {
        auto compute = [&](descriptors::Direction dir) {
          switch (kind) {
            case DescriptorKind::TwoPointCorrelation:
              return descriptors::two_point_correlation(vol, phase, dir, r_max,
                                                        dc.boundary);
            case DescriptorKind::TwoPointCluster:
              return descriptors::two_point_cluster(vol, phase, dir, r_max,
                                                    dc.boundary, dc.cluster_variant,
                                                    dc.connectivity);
            case DescriptorKind::LinealPath:
              return descriptors::lineal_path(vol, phase, dir, r_max, dc.boundary);
          }
          fail(ErrorCode::ConfigInvalid, "unreachable descriptor kind");
        };
        std::vector<descriptors::RadialProfile> per_axis;
        bool want_average = false;
        for (auto dir : dc.directions) {
          if (dir == descriptors::Direction::AxisAverage) {
            want_average = true;
            continue;
          }
          out.profiles.push_back({kind, compute(dir)});
          per_axis.push_back(out.profiles.back().profile);
        }
        if (want_average) {
          if (per_axis.size() == 3) {
            out.profiles.push_back({kind, descriptors::average_profiles(per_axis)});
          } else {
            out.profiles.push_back(
                {kind, compute(descriptors::Direction::AxisAverage)});
          }
        }
      }
      if (dc.porosity) {
        int window = dc.porosity_window > 0 ? dc.porosity_window : min_dim(vol) / 4;
        window = std::max(window, 1);
        const int stride = dc.porosity_stride > 0 ? dc.porosity_stride : window;
        out.porosity.push_back(
            descriptors::local_porosity_cdf(vol, phase, window, stride));
      }
    }
  }

  if (config.texture.enabled) {
    texture::GlcmParams params = texture::GlcmParams::defaults_for(vol);
    if (config.texture.levels > 0) params.levels = config.texture.levels;
    params.distance = config.texture.distance;
    params.angles = config.texture.angles;
    out.texture = texture::classify_volume(vol, params);
  }

  if (config.physics.enabled) {
    out.physics = physics::physics_report(vol, config.physics.boundary);
    if (config.physics.diffusion) {
      for (int phase : resolve_phases(config.physics.phases, vol)) {
        for (Axis axis : config.physics.axes) {
          out.diffusion.push_back(
              physics::effective_diffusion(vol, phase, axis, config.physics.solver));
        }
      }
    }
  }

  return out;
}

json profile_json(const descriptors::RadialProfile& p) {
  json j;
  j["phase"] = p.phase;
  j["direction"] = direction_name(p.direction);
  j["r_max"] = p.r_max;
  j["boundary"] = boundary_name(p.boundary);
  json values = json::array();
  for (double v : p.values) values.push_back(jnum(v));
  j["values"] = values;
  j["n_samples"] = p.n_samples;
  j["n_hits"] = p.n_hits;
  return j;
}

json porosity_json(const descriptors::PorosityCdf& c) {
  json j;
  j["phase"] = c.phase;
  j["window"] = c.window;
  j["stride"] = c.stride;
  json points = json::array();
  for (const auto& [value, fraction] : c.points) {
    points.push_back(json::array({value, fraction}));
  }
  j["points"] = points;
  return j;
}

json feature_json(const texture::FeatureStats& f) {
  json j;
  j["contrast"] = jnum(f.contrast);
  j["homogeneity"] = jnum(f.homogeneity);
  j["energy"] = jnum(f.energy);
  j["entropy"] = jnum(f.entropy);
  return j;
}

json texture_json(const texture::AnisotropyReport& t) {
  json j;
  j["x"] = feature_json(t.x);
  j["y"] = feature_json(t.y);
  j["z"] = feature_json(t.z);
  j["sigma_contrast"] = jnum(t.sigma_contrast);
  j["sigma_homogeneity"] = jnum(t.sigma_homogeneity);
  j["sigma_energy"] = jnum(t.sigma_energy);
  j["sigma_entropy"] = jnum(t.sigma_entropy);
  j["ai"] = jnum(t.ai);
  j["log10_ai"] = jnum(t.log10_ai);
  j["verdict"] = t.verdict == texture::Verdict::Anisotropy ? "anisotropy" : "isotropy";
  return j;
}

json diffusion_json(const physics::DiffusionResult& d) {
  json j;
  j["axis"] = jaxis(d.axis);
  j["phase"] = d.phase;
  j["percolates"] = d.percolates;
  j["d_eff_ratio"] = jnum(d.d_eff_ratio);
  if (d.tortuosity) {
    j["tortuosity"] = jnum(*d.tortuosity);
  } else {
    j["tortuosity"] = nullptr;  // non-percolating
  }
  j["phase_fraction"] = jnum(d.phase_fraction);
  j["inlet_flux"] = jnum(d.inlet_flux);
  j["outlet_flux"] = jnum(d.outlet_flux);
  j["residual"] = jnum(d.residual);
  j["iterations"] = d.iterations;
  return j;
}

json physics_json_obj(const physics::PhysicsReport& p,
                      const std::vector<physics::DiffusionResult>& diffusion) {
  json j;
  json fr = json::array();
  for (double v : p.phase_fractions) fr.push_back(jnum(v));
  j["phase_fractions"] = fr;
  json ssa = json::array();
  for (double v : p.ssa) ssa.push_back(jnum(v));
  j["ssa"] = ssa;
  j["tpb_density"] = jnum(p.tpb_density);
  j["boundary"] = boundary_name(p.boundary);
  json diff = json::array();
  for (const auto& d : diffusion) diff.push_back(diffusion_json(d));
  j["diffusion"] = diff;
  return j;
}

json quality_json(const quality::QualityReport& q) {
  auto axis_obj = [](const quality::AxisQuality& a) {
    json j;
    j["n_slices"] = a.n_slices;
    j["mean_ssim"] = jnum(a.mean_ssim);
    j["mean_psnr"] = jnum(a.mean_psnr);
    return j;
  };
  json j;
  j["x"] = axis_obj(q.x);
  j["y"] = axis_obj(q.y);
  j["z"] = axis_obj(q.z);
  j["overall"] = axis_obj(q.overall);
  return j;
}

json meta_json(const VolumeMeta& m) {
  json j;
  j["path"] = m.path;
  j["dims"] = m.dims;
  j["kind"] = m.kind == VolumeKind::Phase ? "phase" : "gray";
  j["n_phases"] = m.n_phases;
  j["voxel_size"] = m.voxel_size;
  return j;
}

json analyses_json(const VolumeAnalyses& a) {
  json j;
  json profiles = json::array();
  for (const auto& np : a.profiles) {
    json p = profile_json(np.profile);
    p["descriptor"] = descriptor_short_name(np.kind);
    profiles.push_back(p);
  }
  j["profiles"] = profiles;
  json porosity = json::array();
  for (const auto& c : a.porosity) porosity.push_back(porosity_json(c));
  j["porosity"] = porosity;
  if (a.texture) j["texture"] = texture_json(*a.texture);
  if (a.physics) j["physics"] = physics_json_obj(*a.physics, a.diffusion);
  return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoFailure, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) fail(ErrorCode::IoFailure, "write failed for " + path.string());
}

}  // namespace

const char* descriptor_short_name(DescriptorKind kind) {
  switch (kind) {
    case DescriptorKind::TwoPointCorrelation: return "s2";
    case DescriptorKind::TwoPointCluster: return "c2";
    case DescriptorKind::LinealPath: return "l";
  }
  return "?";
}

void ReportConfig::validate() const {
  if (reference_path.empty()) {
    fail(ErrorCode::ConfigInvalid, "a reference volume path is required");
  }
  const bool any = descriptors.enabled || texture.enabled || physics.enabled ||
                   (quality.enabled && generated_path.has_value());
  if (!any) {
    fail(ErrorCode::ConfigInvalid, "no analysis is enabled");
  }
  if (generated_path && *generated_path == reference_path) {
    fail(ErrorCode::ConfigInvalid,
         "reference and generated paths must differ for a comparison");
  }
}

ReportConfig load_config(const std::filesystem::path& json_path) {
  std::ifstream in(json_path);
  if (!in) fail(ErrorCode::IoFailure, "cannot open config " + json_path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(ErrorCode::ConfigInvalid, std::string("config is not valid JSON: ") + e.what());
  }
  return config_from_json(j);
}

std::string config_to_json(const ReportConfig& config) {
  return config_json(config).dump(2) + "\n";
}

EvaluationReport run_report(const ReportConfig& config) {
  config.validate();
  EvaluationReport report;
  report.toolkit_version = kVersion;
  report.schema_version = kReportSchemaVersion;
  report.config = config;

  const VoxelVolume reference = load_volume(config.reference_path);
  report.reference = meta_of(reference, config.reference_path);
  report.reference_analyses = analyze_volume(reference, config);

  if (config.generated_path) {
    const VoxelVolume generated = load_volume(*config.generated_path);
    report.generated = meta_of(generated, *config.generated_path);
    report.generated_analyses = analyze_volume(generated, config);
    if (config.quality.enabled) {
      report.quality =
          quality::volume_quality(reference, generated, config.quality.params);
    }
  }
  return report;
}

std::string report_to_json(const EvaluationReport& report) {
  json j;
  j["schema_version"] = report.schema_version;
  j["toolkit_version"] = report.toolkit_version;
  j["config"] = config_json(report.config);
  j["reference"] = meta_json(report.reference);
  j["reference_analyses"] = analyses_json(report.reference_analyses);
  if (report.generated) {
    j["generated"] = meta_json(*report.generated);
    j["generated_analyses"] = analyses_json(*report.generated_analyses);
  }
  if (report.quality) j["quality"] = quality_json(*report.quality);
  return j.dump(2) + "\n";
}

std::string profile_csv(const descriptors::RadialProfile& profile) {
  std::ostringstream out;
  out << "r,value,n_samples\n";
  for (std::size_t r = 0; r < profile.values.size(); ++r) {
    out << r << ',' << format_double(profile.values[r]) << ','
        << profile.n_samples[r] << '\n';
  }
  return out.str();
}

std::string porosity_csv(const descriptors::PorosityCdf& cdf) {
  std::ostringstream out;
  out << "porosity,cumulative_fraction\n";
  for (const auto& [value, fraction] : cdf.points) {
    out << format_double(value) << ',' << format_double(fraction) << '\n';
  }
  return out.str();
}

std::string texture_features_csv(const texture::AnisotropyReport& report) {
  std::ostringstream out;
  out << "Direction,Contrast,Homogeneity,Energy,Entropy\n";
  const std::pair<const char*, const texture::FeatureStats*> rows[3] = {
      {"X", &report.x}, {"Y", &report.y}, {"Z", &report.z}};
  for (const auto& [name, f] : rows) {
    out << name << ',' << format_double(f->contrast) << ','
        << format_double(f->homogeneity) << ',' << format_double(f->energy)
        << ',' << format_double(f->entropy) << '\n';
  }
  return out.str();
}

std::string texture_ai_csv(const texture::AnisotropyReport& report) {
  std::ostringstream out;
  out << "ai,log10_ai,sigma_contrast,sigma_homogeneity,sigma_energy,sigma_entropy,"
         "verdict\n";
  out << format_double(report.ai) << ',' << format_double(report.log10_ai) << ','
      << format_double(report.sigma_contrast) << ','
      << format_double(report.sigma_homogeneity) << ','
      << format_double(report.sigma_energy) << ','
      << format_double(report.sigma_entropy) << ','
      << (report.verdict == texture::Verdict::Anisotropy ? "anisotropy"
                                                         : "isotropy")
      << '\n';
  return out.str();
}

std::string quality_csv(const quality::QualityReport& report) {
  std::ostringstream out;
  out << "axis,n_slices,mean_ssim,mean_psnr\n";
  const std::pair<const char*, const quality::AxisQuality*> rows[4] = {
      {"x", &report.x}, {"y", &report.y}, {"z", &report.z},
      {"overall", &report.overall}};
  for (const auto& [name, a] : rows) {
    out << name << ',' << a->n_slices << ',' << format_double(a->mean_ssim)
        << ',' << format_double(a->mean_psnr) << '\n';
  }
  return out.str();
}

std::string physics_to_json(const physics::PhysicsReport& report,
                            const std::vector<physics::DiffusionResult>& diffusion) {
  return physics_json_obj(report, diffusion).dump(2) + "\n";
}

void write_report_files(const EvaluationReport& report) {
  const std::filesystem::path dir = report.config.output_dir;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(ErrorCode::IoFailure, "cannot create " + dir.string());

  write_text(dir / "report.json", report_to_json(report));

  const bool pair = report.generated.has_value();
  auto write_analyses = [&](const VolumeAnalyses& a, const std::string& prefix) {
    for (const auto& np : a.profiles) {
      const std::string name = prefix + std::string(descriptor_short_name(np.kind)) +
                               "_phase" + std::to_string(np.profile.phase) + "_" +
                               direction_name(np.profile.direction) + ".csv";
      write_text(dir / name, profile_csv(np.profile));
    }
    for (const auto& c : a.porosity) {
      write_text(dir / (prefix + "porosity_phase" + std::to_string(c.phase) + ".csv"),
                 porosity_csv(c));
    }
    if (a.texture) {
      write_text(dir / (prefix + "texture_features.csv"),
                 texture_features_csv(*a.texture));
      write_text(dir / (prefix + "texture_ai.csv"), texture_ai_csv(*a.texture));
    }
    if (a.physics) {
      write_text(dir / (prefix + "physics.json"),
                 physics_to_json(*a.physics, a.diffusion));
    }
  };

  write_analyses(report.reference_analyses, pair ? "ref_" : "");
  if (pair) {
    write_analyses(*report.generated_analyses, "gen_");
  }
  if (report.quality) {
    write_text(dir / "quality.csv", quality_csv(*report.quality));
  }
}

}  // namespace mstruct::report
