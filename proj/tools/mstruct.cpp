// mstruct: microstructure descriptor, texture, image-quality and transport
// metrics for voxel volumes in the MVX1 format.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mstruct/descriptors.hpp"
#include "mstruct/image_quality.hpp"
#include "mstruct/losses.hpp"
#include "mstruct/numeric.hpp"
#include "mstruct/physics.hpp"
#include "mstruct/report.hpp"
#include "mstruct/synth.hpp"
#include "mstruct/texture.hpp"
#include "mstruct/version.hpp"
#include "mstruct/volume.hpp"

namespace {

using namespace mstruct;

// Exit classes: 2 = input error, 3 = config error, 4 = solver failure.
int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadMagic:
    case ErrorCode::HeaderParse:
    case ErrorCode::PayloadSizeMismatch:
    case ErrorCode::LabelOutOfRange:
    case ErrorCode::IoFailure:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::NotBinary:
    case ErrorCode::BadPhase:
    case ErrorCode::EmptyPhase:
    case ErrorCode::NoValidPairs:
    case ErrorCode::NonFinite:
    case ErrorCode::DimMismatch:
    case ErrorCode::KindMismatch:
    case ErrorCode::NotPhase:
    case ErrorCode::SizeMismatch:
    case ErrorCode::NotDistribution:
    case ErrorCode::DomainViolation:
    case ErrorCode::EmptyBatch:
    case ErrorCode::ShapeMismatch:
      return 2;
    case ErrorCode::BadSpec:
    case ErrorCode::LagTooLarge:
    case ErrorCode::WindowTooLarge:
    case ErrorCode::MixedShapes:
    case ErrorCode::NotNormalized:
    case ErrorCode::ImageSmallerThanWindow:
    case ErrorCode::NegativeClip:
    case ErrorCode::ConfigInvalid:
      return 3;
    case ErrorCode::SolverDiverged:
      return 4;
  }
  return 2;
}

std::array<int, 3> parse_dims(const std::string& text) {
  std::array<int, 3> dims{};
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t comma = text.find(',', start);
    const std::string part =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    auto v = parse_integer(part);
    if (!v || *v <= 0) {
      fail(ErrorCode::ConfigInvalid, "bad dims '" + text + "', expected NX,NY,NZ");
    }
    dims[i] = static_cast<int>(*v);
    if (i < 2) {
      if (comma == std::string::npos) {
        fail(ErrorCode::ConfigInvalid, "bad dims '" + text + "', expected NX,NY,NZ");
      }
      start = comma + 1;
    } else if (comma != std::string::npos) {
      fail(ErrorCode::ConfigInvalid, "bad dims '" + text + "', expected NX,NY,NZ");
    }
  }
  return dims;
}

Axis parse_axis_flag(const std::string& s) {
  if (s == "x") return Axis::X;
  if (s == "y") return Axis::Y;
  if (s == "z") return Axis::Z;
  fail(ErrorCode::ConfigInvalid, "axis must be x, y or z, got '" + s + "'");
}

BoundaryMode parse_boundary_flag(const std::string& s) {
  if (s == "periodic") return BoundaryMode::Periodic;
  if (s == "truncated") return BoundaryMode::Truncated;
  fail(ErrorCode::ConfigInvalid, "boundary must be periodic or truncated");
}

std::vector<double> read_score_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoFailure, "cannot open " + path.string());
  std::vector<double> scores;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto v = parse_double(line);
    if (!v) {
      fail(ErrorCode::DomainViolation, path.string() + ":" +
                                           std::to_string(line_no) +
                                           " is not a number");
    }
    scores.push_back(*v);
  }
  return scores;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoFailure, "cannot write " + path.string());
  out << text;
  if (!out) fail(ErrorCode::IoFailure, "write failed for " + path.string());
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(ErrorCode::IoFailure, "cannot create directory " + dir.string());
}

// ---------------------------------------------------------------------------

struct SynthArgs {
  std::string variant;
  std::string dims = "16,16,16";
  std::uint64_t seed = 0;
  double p = 0.5;
  std::string axis = "z";
  int slab_thickness = 1;
  double fraction = 0.25;
  std::string center;
  double radius = 0;
  std::string output;
};

void run_synth(const SynthArgs& args) {
  synth::FixtureSpec spec;
  spec.dims = parse_dims(args.dims);
  const Axis axis = parse_axis_flag(args.axis);
  if (args.variant == "bernoulli") {
    spec.variant = synth::BernoulliSpec{args.p};
  } else if (args.variant == "laminate") {
    spec.variant = synth::LaminateSpec{axis, args.slab_thickness};
  } else if (args.variant == "channels") {
    spec.variant = synth::ChannelsSpec{axis, args.fraction};
  } else if (args.variant == "sphere") {
    std::array<double, 3> center{(spec.dims[0] - 1) / 2.0, (spec.dims[1] - 1) / 2.0,
                                 (spec.dims[2] - 1) / 2.0};
    if (!args.center.empty()) {
      const auto d = parse_dims(args.center);
      center = {static_cast<double>(d[0]), static_cast<double>(d[1]),
                static_cast<double>(d[2])};
    }
    spec.variant = synth::SphereSpec{center, args.radius};
  } else if (args.variant == "halfsplit") {
    spec.variant = synth::HalfSplitSpec{axis};
  } else {
    fail(ErrorCode::ConfigInvalid, "unknown variant '" + args.variant + "'");
  }
  const VoxelVolume vol = synth::generate(spec, args.seed);
  save_volume(vol, args.output);
  std::cout << "wrote " << args.output << " (" << vol.dims[0] << "x" << vol.dims[1]
            << "x" << vol.dims[2] << ")\n";
}

void run_info(const std::string& path) {
  const VoxelVolume vol = load_volume(path);
  std::cout << "path: " << path << "\n"
            << "dims: " << vol.dims[0] << " " << vol.dims[1] << " " << vol.dims[2]
            << "\n"
            << "kind: " << (vol.kind == VolumeKind::Phase ? "phase" : "gray") << "\n"
            << "n_phases: " << vol.n_phases << "\n"
            << "voxel_size: " << format_double(vol.voxel_size) << "\n";
  if (vol.kind == VolumeKind::Phase) {
    const auto fractions = physics::phase_volume_fractions(vol);
    std::cout << "phase_fractions:";
    for (double f : fractions) std::cout << " " << format_double(f);
    std::cout << "\n";
  }
}

struct DescriptorArgs {
  std::string input;
  int phase = 1;
  std::string direction = "all";
  int r_max = 0;
  std::string boundary = "truncated";
  std::string which = "s2,c2,l,porosity";
  std::string cluster_variant = "same-cluster";
  std::string connectivity = "face6";
  int window = 0;
  int stride = 0;
  std::string output_dir = ".";
};

void run_descriptors(const DescriptorArgs& args) {
  const VoxelVolume vol = load_volume(args.input);
  const BoundaryMode boundary = parse_boundary_flag(args.boundary);
  const int min_dim = std::min({vol.dims[0], vol.dims[1], vol.dims[2]});
  const int r_max = args.r_max > 0 ? args.r_max : min_dim / 2;

  std::vector<descriptors::Direction> directions;
  if (args.direction == "all") {
    directions = {descriptors::Direction::X, descriptors::Direction::Y,
                  descriptors::Direction::Z, descriptors::Direction::AxisAverage};
  } else if (args.direction == "avg") {
    directions = {descriptors::Direction::AxisAverage};
  } else {
    directions = {static_cast<descriptors::Direction>(parse_axis_flag(args.direction))};
  }

  descriptors::ClusterVariant variant;
  if (args.cluster_variant == "literal" || args.cluster_variant == "literal-s8") {
    variant = descriptors::ClusterVariant::LiteralS8;
  } else if (args.cluster_variant == "same-cluster") {
    variant = descriptors::ClusterVariant::SameCluster;
  } else {
    fail(ErrorCode::ConfigInvalid, "cluster variant must be literal or same-cluster");
  }
  descriptors::Connectivity connectivity;
  if (args.connectivity == "face6") {
    connectivity = descriptors::Connectivity::Face6;
  } else if (args.connectivity == "full26") {
    connectivity = descriptors::Connectivity::Full26;
  } else {
    fail(ErrorCode::ConfigInvalid, "connectivity must be face6 or full26");
  }

  ensure_dir(args.output_dir);
  const std::filesystem::path dir = args.output_dir;

  bool want_s2 = false, want_c2 = false, want_l = false, want_porosity = false;
  std::size_t start = 0;
  const std::string which = args.which + ",";
  while (start < which.size()) {
    const std::size_t comma = which.find(',', start);
    const std::string item = which.substr(start, comma - start);
    if (item == "s2") want_s2 = true;
    else if (item == "c2") want_c2 = true;
    else if (item == "l") want_l = true;
    else if (item == "porosity") want_porosity = true;
    else if (!item.empty()) {
      fail(ErrorCode::ConfigInvalid, "unknown descriptor '" + item + "'");
    }
    start = comma + 1;
  }

  auto emit = [&](const char* name, const descriptors::RadialProfile& p) {
    const std::string file = std::string(name) + "_phase" + std::to_string(p.phase) +
                             "_" + descriptors::direction_name(p.direction) + ".csv";
    write_file(dir / file, report::profile_csv(p));
    std::cout << "wrote " << (dir / file).string() << "\n";
  };

  for (auto direction : directions) {
    if (want_s2) {
      emit("s2", descriptors::two_point_correlation(vol, args.phase, direction,
                                                    r_max, boundary));
    }
    if (want_c2) {
      emit("c2", descriptors::two_point_cluster(vol, args.phase, direction, r_max,
                                                boundary, variant, connectivity));
    }
    if (want_l) {
      emit("l", descriptors::lineal_path(vol, args.phase, direction, r_max, boundary));
    }
  }
  if (want_porosity) {
    int window = args.window > 0 ? args.window : std::max(min_dim / 4, 1);
    const int stride = args.stride > 0 ? args.stride : window;
    const auto cdf = descriptors::local_porosity_cdf(vol, args.phase, window, stride);
    const std::string file = "porosity_phase" + std::to_string(args.phase) + ".csv";
    write_file(dir / file, report::porosity_csv(cdf));
    std::cout << "wrote " << (dir / file).string() << "\n";
  }
}

struct TextureArgs {
  std::string input;
  int levels = 0;
  int distance = 1;
  std::string output_dir;
};

void run_texture(const TextureArgs& args) {
  const VoxelVolume vol = load_volume(args.input);
  texture::GlcmParams params = texture::GlcmParams::defaults_for(vol);
  if (args.levels > 0) params.levels = args.levels;
  params.distance = args.distance;
  const auto report = texture::classify_volume(vol, params);

  std::cout << report::texture_features_csv(report) << "\n"
            << "ai: " << format_double(report.ai) << "\n"
            << "log10_ai: " << format_double(report.log10_ai) << "\n"
            << "verdict: "
            << (report.verdict == texture::Verdict::Anisotropy ? "anisotropy"
                                                               : "isotropy")
            << "\n";
  if (!args.output_dir.empty()) {
    ensure_dir(args.output_dir);
    const std::filesystem::path dir = args.output_dir;
    write_file(dir / "texture_features.csv", report::texture_features_csv(report));
    write_file(dir / "texture_ai.csv", report::texture_ai_csv(report));
    std::cout << "wrote " << (dir / "texture_features.csv").string() << "\n"
              << "wrote " << (dir / "texture_ai.csv").string() << "\n";
  }
}

struct CompareArgs {
  std::string reference;
  std::string generated;
  int window = 7;
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 255.0;
  std::string output_dir;
};

void run_compare(const CompareArgs& args) {
  const VoxelVolume ref = load_volume(args.reference);
  const VoxelVolume gen = load_volume(args.generated);
  quality::SsimParams params;
  params.window = args.window;
  params.k1 = args.k1;
  params.k2 = args.k2;
  params.dynamic_range = args.dynamic_range;
  const auto report = quality::volume_quality(ref, gen, params);
  std::cout << report::quality_csv(report);
  if (!args.output_dir.empty()) {
    ensure_dir(args.output_dir);
    write_file(std::filesystem::path(args.output_dir) / "quality.csv",
               report::quality_csv(report));
    std::cout << "wrote "
              << (std::filesystem::path(args.output_dir) / "quality.csv").string()
              << "\n";
  }
}

struct PhysicsArgs {
  std::string input;
  std::string boundary = "truncated";
  bool no_diffusion = false;
  std::vector<int> phases;
  std::string axes = "x,y,z";
  double tolerance = 1e-8;
  int max_iterations = 0;
  std::string preconditioner = "diagonal";
  std::string output_dir;
};

void run_physics(const PhysicsArgs& args) {
  const VoxelVolume vol = load_volume(args.input);
  const BoundaryMode boundary = parse_boundary_flag(args.boundary);
  const auto report = physics::physics_report(vol, boundary);

  std::vector<physics::DiffusionResult> diffusion;
  if (!args.no_diffusion) {
    physics::SolverParams solver;
    solver.tolerance = args.tolerance;
    solver.max_iterations = args.max_iterations;
    if (args.preconditioner == "diagonal") {
      solver.preconditioner = physics::Preconditioner::Diagonal;
    } else if (args.preconditioner == "none") {
      solver.preconditioner = physics::Preconditioner::None;
    } else {
      fail(ErrorCode::ConfigInvalid, "preconditioner must be diagonal or none");
    }
    std::vector<int> phases = args.phases;
    if (phases.empty()) {
      for (int i = 0; i < vol.n_phases; ++i) phases.push_back(i);
    }
    std::vector<Axis> axes;
    std::size_t start = 0;
    const std::string text = args.axes + ",";
    while (start < text.size()) {
      const std::size_t comma = text.find(',', start);
      const std::string item = text.substr(start, comma - start);
      if (!item.empty()) axes.push_back(parse_axis_flag(item));
      start = comma + 1;
    }
    for (int phase : phases) {
      for (Axis axis : axes) {
        diffusion.push_back(physics::effective_diffusion(vol, phase, axis, solver));
      }
    }
  }

  const std::string text = report::physics_to_json(report, diffusion);
  std::cout << text;
  if (!args.output_dir.empty()) {
    ensure_dir(args.output_dir);
    write_file(std::filesystem::path(args.output_dir) / "physics.json", text);
  }
}

struct LossesArgs {
  std::string real_file;
  std::string fake_file;
  std::string convention = "standard";
  std::optional<double> lambda_w;
  std::optional<double> lambda_r;
  std::optional<double> regularization;
};

void run_losses_eval(const LossesArgs& args) {
  const auto real = read_score_file(args.real_file);
  const auto fake = read_score_file(args.fake_file);

  losses::WganConvention convention;
  if (args.convention == "standard") {
    convention = losses::WganConvention::Standard;
  } else if (args.convention == "literal-eq6") {
    convention = losses::WganConvention::LiteralEq6;
  } else {
    fail(ErrorCode::ConfigInvalid, "convention must be standard or literal-eq6");
  }

  nlohmann::json j;
  j["n_real"] = real.size();
  j["n_fake"] = fake.size();
  j["wgan_standard"] =
      losses::wgan_objective(real, fake, losses::WganConvention::Standard);
  j["wgan_literal_eq6"] =
      losses::wgan_objective(real, fake, losses::WganConvention::LiteralEq6);
  const double wasserstein = losses::wgan_objective(real, fake, convention);
  j["wasserstein"] = wasserstein;

  bool gan_domain_ok = true;
  for (double v : real) gan_domain_ok &= v > 0.0 && v <= 1.0;
  for (double v : fake) gan_domain_ok &= v >= 0.0 && v < 1.0;
  if (gan_domain_ok) {
    j["gan_objective"] = losses::gan_objective(real, fake);
  } else {
    j["gan_objective"] = nullptr;
  }

  if (args.lambda_w && args.lambda_r && args.regularization) {
    j["total_loss"] = losses::total_loss(wasserstein, *args.regularization,
                                         {*args.lambda_w, *args.lambda_r});
  }
  std::cout << j.dump(2) << "\n";
}

struct ReportArgs {
  std::string config_file;
  std::string reference;
  std::string generated;
  std::string output_dir;
};

void run_report_cmd(const ReportArgs& args) {
  report::ReportConfig config;
  if (!args.config_file.empty()) {
    config = report::load_config(args.config_file);
  }
  if (!args.reference.empty()) config.reference_path = args.reference;
  if (!args.generated.empty()) config.generated_path = args.generated;
  if (!args.output_dir.empty()) config.output_dir = args.output_dir;
  config.validate();

  const auto report = report::run_report(config);
  report::write_report_files(report);
  std::cout << "wrote " << (config.output_dir / "report.json").string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"microstructure descriptors, texture, image quality and transport "
               "metrics for MVX1 voxel volumes"};
  app.set_version_flag("--version", std::string(mstruct::kVersion));
  app.require_subcommand(1);

  std::string info_path;
  auto* info = app.add_subcommand("info", "print volume header and phase fractions");
  info->add_option("file", info_path, "MVX1 volume")->required();

  SynthArgs synth_args;
  auto* synth_cmd = app.add_subcommand("synth", "generate a deterministic fixture volume");
  synth_cmd->add_option("--variant", synth_args.variant,
                        "bernoulli|laminate|channels|sphere|halfsplit")
      ->required();
  synth_cmd->add_option("--dims", synth_args.dims, "NX,NY,NZ");
  synth_cmd->add_option("--seed", synth_args.seed, "generator seed");
  synth_cmd->add_option("--p", synth_args.p, "bernoulli probability");
  synth_cmd->add_option("--axis", synth_args.axis, "x|y|z");
  synth_cmd->add_option("--slab-thickness", synth_args.slab_thickness, "laminate slab voxels");
  synth_cmd->add_option("--fraction", synth_args.fraction, "channels volume fraction");
  synth_cmd->add_option("--center", synth_args.center, "sphere center CX,CY,CZ");
  synth_cmd->add_option("--radius", synth_args.radius, "sphere radius in voxels");
  synth_cmd->add_option("-o,--output", synth_args.output, "output MVX1 path")->required();

  DescriptorArgs desc_args;
  auto* desc = app.add_subcommand("descriptors", "two-point, cluster, lineal-path and porosity curves");
  desc->add_option("file", desc_args.input, "MVX1 volume")->required();
  desc->add_option("--phase", desc_args.phase, "phase label (default 1)");
  desc->add_option("--direction", desc_args.direction, "x|y|z|avg|all");
  desc->add_option("--rmax", desc_args.r_max, "max lag (default min_dim/2)");
  desc->add_option("--boundary", desc_args.boundary, "periodic|truncated");
  desc->add_option("--which", desc_args.which, "comma list of s2,c2,l,porosity");
  desc->add_option("--cluster-variant", desc_args.cluster_variant, "literal|same-cluster");
  desc->add_option("--connectivity", desc_args.connectivity, "face6|full26");
  desc->add_option("--window", desc_args.window, "porosity window edge (default min_dim/4)");
  desc->add_option("--stride", desc_args.stride, "porosity stride (default window)");
  desc->add_option("-o,--output-dir", desc_args.output_dir, "CSV output directory");

  TextureArgs tex_args;
  auto* tex = app.add_subcommand("texture", "GLCM features per axis and the anisotropy index");
  tex->add_option("file", tex_args.input, "MVX1 volume")->required();
  tex->add_option("--levels", tex_args.levels, "gray levels (default 256 phase / 32 gray)");
  tex->add_option("--distance", tex_args.distance, "pixel offset distance");
  tex->add_option("-o,--output-dir", tex_args.output_dir, "CSV output directory");

  CompareArgs cmp_args;
  auto* cmp = app.add_subcommand("compare", "slice-averaged SSIM/PSNR between two volumes");
  cmp->add_option("reference", cmp_args.reference, "reference MVX1 volume")->required();
  cmp->add_option("generated", cmp_args.generated, "generated MVX1 volume")->required();
  cmp->add_option("--window", cmp_args.window, "SSIM window edge (odd, >= 3)");
  cmp->add_option("--k1", cmp_args.k1, "SSIM k1");
  cmp->add_option("--k2", cmp_args.k2, "SSIM k2");
  cmp->add_option("--dynamic-range", cmp_args.dynamic_range, "pixel dynamic range L");
  cmp->add_option("-o,--output-dir", cmp_args.output_dir, "CSV output directory");

  PhysicsArgs phys_args;
  auto* phys = app.add_subcommand("physics", "phase fractions, SSA, TPB and effective diffusivity");
  phys->add_option("file", phys_args.input, "MVX1 volume")->required();
  phys->add_option("--boundary", phys_args.boundary, "periodic|truncated");
  phys->add_flag("--no-diffusion", phys_args.no_diffusion, "skip the diffusion solve");
  phys->add_option("--phase", phys_args.phases, "diffusion phase label (repeatable; default all)");
  phys->add_option("--axes", phys_args.axes, "comma list of transport axes");
  phys->add_option("--tolerance", phys_args.tolerance, "CG relative residual target");
  phys->add_option("--max-iterations", phys_args.max_iterations, "CG iteration cap (0 = auto)");
  phys->add_option("--preconditioner", phys_args.preconditioner, "diagonal|none");
  phys->add_option("-o,--output-dir", phys_args.output_dir, "write physics.json here too");

  LossesArgs loss_args;
  auto* losses_cmd = app.add_subcommand("losses", "loss and divergence evaluators");
  auto* eval = losses_cmd->add_subcommand("eval", "evaluate objectives on critic score files");
  eval->add_option("--real", loss_args.real_file, "real scores, one per line")->required();
  eval->add_option("--fake", loss_args.fake_file, "fake scores, one per line")->required();
  eval->add_option("--convention", loss_args.convention, "standard|literal-eq6");
  double lw = 0, lr = 0, reg = 0;
  auto* o_lw = eval->add_option("--lambda-w", lw, "Wasserstein weight");
  auto* o_lr = eval->add_option("--lambda-r", lr, "regularization weight");
  auto* o_reg = eval->add_option("--regularization", reg, "regularization loss value");
  losses_cmd->require_subcommand(1);

  ReportArgs report_args;
  auto* rep = app.add_subcommand("report", "run every enabled analysis and write report.json + CSVs");
  rep->add_option("--config", report_args.config_file, "JSON config file");
  rep->add_option("--reference", report_args.reference, "reference MVX1 volume");
  rep->add_option("--generated", report_args.generated, "generated MVX1 volume");
  rep->add_option("-o,--output-dir", report_args.output_dir, "output directory");

  try {
    app.parse(argc, argv);

    if (*info) run_info(info_path);
    if (*synth_cmd) run_synth(synth_args);
    if (*desc) run_descriptors(desc_args);
    if (*tex) run_texture(tex_args);
    if (*cmp) run_compare(cmp_args);
    if (*phys) run_physics(phys_args);
    if (*eval) {
      if (*o_lw) loss_args.lambda_w = lw;
      if (*o_lr) loss_args.lambda_r = lr;
      if (*o_reg) loss_args.regularization = reg;
      run_losses_eval(loss_args);
    }
    if (*rep) run_report_cmd(report_args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  } catch (const mstruct::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
