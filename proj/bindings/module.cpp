// Python bindings for the mstruct core. Volumes cross the boundary as
// C-contiguous uint8 numpy arrays with shape (nz, ny, nx), matching the
// x-fastest flat layout.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "mstruct/descriptors.hpp"
#include "mstruct/image_quality.hpp"
#include "mstruct/losses.hpp"
#include "mstruct/physics.hpp"
#include "mstruct/report.hpp"
#include "mstruct/synth.hpp"
#include "mstruct/texture.hpp"
#include "mstruct/version.hpp"
#include "mstruct/volume.hpp"

namespace py = pybind11;
using namespace mstruct;

namespace {

VoxelVolume volume_from_numpy(const py::array_t<std::uint8_t, py::array::c_style>& arr,
                              const std::string& kind, int n_phases,
                              double voxel_size) {
  if (arr.ndim() != 3) {
    throw py::value_error("expected a 3D uint8 array with shape (nz, ny, nx)");
  }
  VolumeKind k;
  if (kind == "phase") {
    k = VolumeKind::Phase;
  } else if (kind == "gray") {
    k = VolumeKind::Gray;
  } else {
    throw py::value_error("kind must be 'phase' or 'gray'");
  }
  const std::array<int, 3> dims = {static_cast<int>(arr.shape(2)),
                                   static_cast<int>(arr.shape(1)),
                                   static_cast<int>(arr.shape(0))};
  std::vector<std::uint8_t> data(arr.data(), arr.data() + arr.size());
  return VoxelVolume::create(dims, k, n_phases, voxel_size, std::move(data));
}

py::array_t<std::uint8_t> volume_to_numpy(const VoxelVolume& vol) {
  py::array_t<std::uint8_t> arr({vol.dims[2], vol.dims[1], vol.dims[0]});
  std::copy(vol.data.begin(), vol.data.end(), arr.mutable_data());
  return arr;
}

py::array_t<std::uint8_t> slice_to_numpy(const SliceImage& img) {
  py::array_t<std::uint8_t> arr({img.height, img.width});
  std::copy(img.data.begin(), img.data.end(), arr.mutable_data());
  return arr;
}

SliceImage slice_from_numpy(const py::array_t<std::uint8_t, py::array::c_style>& arr) {
  if (arr.ndim() != 2) throw py::value_error("expected a 2D uint8 array");
  SliceImage img;
  img.height = static_cast<int>(arr.shape(0));
  img.width = static_cast<int>(arr.shape(1));
  img.data.assign(arr.data(), arr.data() + arr.size());
  return img;
}

}  // namespace

PYBIND11_MODULE(_mstruct, m) {
  m.doc() = "Microstructure descriptors, texture, image quality and transport "
            "metrics for voxel volumes";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "MstructError", PyExc_RuntimeError);

  py::enum_<Axis>(m, "Axis")
      .value("X", Axis::X)
      .value("Y", Axis::Y)
      .value("Z", Axis::Z);
  py::enum_<BoundaryMode>(m, "BoundaryMode")
      .value("Periodic", BoundaryMode::Periodic)
      .value("Truncated", BoundaryMode::Truncated);
  py::enum_<descriptors::Direction>(m, "Direction")
      .value("X", descriptors::Direction::X)
      .value("Y", descriptors::Direction::Y)
      .value("Z", descriptors::Direction::Z)
      .value("AxisAverage", descriptors::Direction::AxisAverage);
  py::enum_<descriptors::Connectivity>(m, "Connectivity")
      .value("Face6", descriptors::Connectivity::Face6)
      .value("Full26", descriptors::Connectivity::Full26);
  py::enum_<descriptors::ClusterVariant>(m, "ClusterVariant")
      .value("LiteralS8", descriptors::ClusterVariant::LiteralS8)
      .value("SameCluster", descriptors::ClusterVariant::SameCluster);
  py::enum_<losses::WganConvention>(m, "WganConvention")
      .value("Standard", losses::WganConvention::Standard)
      .value("LiteralEq6", losses::WganConvention::LiteralEq6);
  py::enum_<physics::Preconditioner>(m, "Preconditioner")
      .value("NoPreconditioner", physics::Preconditioner::None)
      .value("Diagonal", physics::Preconditioner::Diagonal);
  py::enum_<texture::Verdict>(m, "Verdict")
      .value("Isotropy", texture::Verdict::Isotropy)
      .value("Anisotropy", texture::Verdict::Anisotropy);
  py::enum_<texture::GlcmAngle>(m, "GlcmAngle")
      .value("Deg0", texture::GlcmAngle::Deg0)
      .value("Deg45", texture::GlcmAngle::Deg45)
      .value("Deg90", texture::GlcmAngle::Deg90)
      .value("Deg135", texture::GlcmAngle::Deg135);

  py::class_<VoxelVolume>(m, "VoxelVolume")
      .def(py::init(&volume_from_numpy), py::arg("data"), py::arg("kind") = "phase",
           py::arg("n_phases") = 2, py::arg("voxel_size") = 1.0)
      .def_property_readonly(
          "dims", [](const VoxelVolume& v) { return py::make_tuple(v.dims[0], v.dims[1], v.dims[2]); })
      .def_property_readonly("kind",
                             [](const VoxelVolume& v) {
                               return v.kind == VolumeKind::Phase ? "phase" : "gray";
                             })
      .def_readonly("n_phases", &VoxelVolume::n_phases)
      .def_readonly("voxel_size", &VoxelVolume::voxel_size)
      .def("to_numpy", &volume_to_numpy)
      .def("__repr__", [](const VoxelVolume& v) {
        return "<VoxelVolume " + std::to_string(v.dims[0]) + "x" +
               std::to_string(v.dims[1]) + "x" + std::to_string(v.dims[2]) + " " +
               (v.kind == VolumeKind::Phase ? "phase" : "gray") + ">";
      });

  m.def("load_volume", &load_volume, py::arg("path"));
  m.def("save_volume", &save_volume, py::arg("volume"), py::arg("path"));
  m.def(
      "slice",
      [](const VoxelVolume& vol, Axis axis, int index) {
        return slice_to_numpy(slice(vol, axis, index));
      },
      py::arg("volume"), py::arg("axis"), py::arg("index"));
  m.def(
      "gray_slice",
      [](const VoxelVolume& vol, Axis axis, int index) {
        return slice_to_numpy(gray_slice(vol, axis, index));
      },
      py::arg("volume"), py::arg("axis"), py::arg("index"));

  // --- synth ---------------------------------------------------------------
  auto synth_mod = m.def_submodule("synth", "deterministic fixture volumes");
  synth_mod.def(
      "bernoulli",
      [](std::array<int, 3> dims, double p, std::uint64_t seed) {
        return synth::generate({synth::BernoulliSpec{p}, dims}, seed);
      },
      py::arg("dims"), py::arg("p"), py::arg("seed") = 0);
  synth_mod.def(
      "laminate",
      [](std::array<int, 3> dims, Axis axis, int slab_thickness) {
        return synth::generate({synth::LaminateSpec{axis, slab_thickness}, dims}, 0);
      },
      py::arg("dims"), py::arg("axis") = Axis::Z, py::arg("slab_thickness") = 1);
  synth_mod.def(
      "channels",
      [](std::array<int, 3> dims, Axis axis, double fraction, std::uint64_t seed) {
        return synth::generate({synth::ChannelsSpec{axis, fraction}, dims}, seed);
      },
      py::arg("dims"), py::arg("axis") = Axis::Z, py::arg("fraction") = 0.25,
      py::arg("seed") = 0);
  synth_mod.def(
      "sphere",
      [](std::array<int, 3> dims, std::array<double, 3> center, double radius) {
        return synth::generate({synth::SphereSpec{center, radius}, dims}, 0);
      },
      py::arg("dims"), py::arg("center"), py::arg("radius"));
  synth_mod.def(
      "half_split",
      [](std::array<int, 3> dims, Axis axis) {
        return synth::generate({synth::HalfSplitSpec{axis}, dims}, 0);
      },
      py::arg("dims"), py::arg("axis") = Axis::Z);
  synth_mod.def("complement", &synth::complement, py::arg("volume"));

  // --- descriptors ---------------------------------------------------------
  py::class_<descriptors::RadialProfile>(m, "RadialProfile")
      .def_readonly("phase", &descriptors::RadialProfile::phase)
      .def_readonly("direction", &descriptors::RadialProfile::direction)
      .def_readonly("r_max", &descriptors::RadialProfile::r_max)
      .def_readonly("boundary", &descriptors::RadialProfile::boundary)
      .def_readonly("values", &descriptors::RadialProfile::values)
      .def_readonly("n_samples", &descriptors::RadialProfile::n_samples)
      .def_readonly("n_hits", &descriptors::RadialProfile::n_hits);
  py::class_<descriptors::PorosityCdf>(m, "PorosityCdf")
      .def_readonly("phase", &descriptors::PorosityCdf::phase)
      .def_readonly("window", &descriptors::PorosityCdf::window)
      .def_readonly("stride", &descriptors::PorosityCdf::stride)
      .def_readonly("points", &descriptors::PorosityCdf::points);
  py::class_<descriptors::ComponentLabels>(m, "ComponentLabels")
      .def_readonly("count", &descriptors::ComponentLabels::count)
      .def("to_numpy", [](const descriptors::ComponentLabels& c) {
        py::array_t<std::int32_t> arr({c.dims[2], c.dims[1], c.dims[0]});
        std::copy(c.labels.begin(), c.labels.end(), arr.mutable_data());
        return arr;
      });

  auto desc_mod = m.def_submodule("descriptors", "statistical microstructure descriptors");
  desc_mod.def("two_point_correlation", &descriptors::two_point_correlation,
               py::arg("volume"), py::arg("phase"), py::arg("direction"),
               py::arg("r_max"), py::arg("boundary") = BoundaryMode::Truncated);
  desc_mod.def("two_point_cluster", &descriptors::two_point_cluster,
               py::arg("volume"), py::arg("phase"), py::arg("direction"),
               py::arg("r_max"), py::arg("boundary") = BoundaryMode::Truncated,
               py::arg("variant") = descriptors::ClusterVariant::SameCluster,
               py::arg("connectivity") = descriptors::Connectivity::Face6);
  desc_mod.def("lineal_path", &descriptors::lineal_path, py::arg("volume"),
               py::arg("phase"), py::arg("direction"), py::arg("r_max"),
               py::arg("boundary") = BoundaryMode::Truncated);
  desc_mod.def("local_porosity_cdf", &descriptors::local_porosity_cdf,
               py::arg("volume"), py::arg("phase"), py::arg("window"),
               py::arg("stride"));
  desc_mod.def("connected_components", &descriptors::connected_components,
               py::arg("volume"), py::arg("phase"),
               py::arg("connectivity") = descriptors::Connectivity::Face6,
               py::arg("boundary") = BoundaryMode::Truncated);
  desc_mod.def("average_profiles", &descriptors::average_profiles, py::arg("profiles"));

  // --- texture ---------------------------------------------------------------
  py::class_<texture::GlcmParams>(m, "GlcmParams")
      .def(py::init<>())
      .def_readwrite("levels", &texture::GlcmParams::levels)
      .def_readwrite("distance", &texture::GlcmParams::distance)
      .def_readwrite("angles", &texture::GlcmParams::angles)
      .def_readwrite("symmetric", &texture::GlcmParams::symmetric)
      .def_readwrite("normalized", &texture::GlcmParams::normalized)
      .def_static("defaults_for", &texture::GlcmParams::defaults_for);
  py::class_<texture::FeatureStats>(m, "FeatureStats")
      .def(py::init([](double c, double h, double e, double en) {
             return texture::FeatureStats{c, h, e, en};
           }),
           py::arg("contrast"), py::arg("homogeneity"), py::arg("energy"),
           py::arg("entropy"))
      .def_readwrite("contrast", &texture::FeatureStats::contrast)
      .def_readwrite("homogeneity", &texture::FeatureStats::homogeneity)
      .def_readwrite("energy", &texture::FeatureStats::energy)
      .def_readwrite("entropy", &texture::FeatureStats::entropy);
  py::class_<texture::AnisotropyReport>(m, "AnisotropyReport")
      .def_readonly("x", &texture::AnisotropyReport::x)
      .def_readonly("y", &texture::AnisotropyReport::y)
      .def_readonly("z", &texture::AnisotropyReport::z)
      .def_readonly("sigma_contrast", &texture::AnisotropyReport::sigma_contrast)
      .def_readonly("sigma_homogeneity", &texture::AnisotropyReport::sigma_homogeneity)
      .def_readonly("sigma_energy", &texture::AnisotropyReport::sigma_energy)
      .def_readonly("sigma_entropy", &texture::AnisotropyReport::sigma_entropy)
      .def_readonly("ai", &texture::AnisotropyReport::ai)
      .def_readonly("log10_ai", &texture::AnisotropyReport::log10_ai)
      .def_readonly("verdict", &texture::AnisotropyReport::verdict);
  py::class_<texture::Glcm>(m, "Glcm")
      .def_readonly("levels", &texture::Glcm::levels)
      .def("to_numpy", [](const texture::Glcm& g) {
        py::array_t<double> arr({g.levels, g.levels});
        std::copy(g.p.begin(), g.p.end(), arr.mutable_data());
        return arr;
      });

  auto tex_mod = m.def_submodule("texture", "GLCM texture features and anisotropy");
  tex_mod.def(
      "glcm",
      [](const py::array_t<std::uint8_t, py::array::c_style>& image,
         const texture::GlcmParams& params) {
        return texture::glcm(slice_from_numpy(image), params);
      },
      py::arg("image"), py::arg("params"));
  tex_mod.def("glcm_features", &texture::glcm_features, py::arg("glcm"));
  tex_mod.def("directional_features", &texture::directional_features,
              py::arg("volume"), py::arg("axis"), py::arg("params"));
  tex_mod.def("anisotropy_index", &texture::anisotropy_index, py::arg("x"),
              py::arg("y"), py::arg("z"));
  tex_mod.def("classify_volume", &texture::classify_volume, py::arg("volume"),
              py::arg("params"));
  tex_mod.def(
      "classify_volume_default",
      [](const VoxelVolume& vol) {
        return texture::classify_volume(vol, texture::GlcmParams::defaults_for(vol));
      },
      py::arg("volume"));

  // --- image quality ---------------------------------------------------------
  py::class_<quality::SsimParams>(m, "SsimParams")
      .def(py::init<>())
      .def_readwrite("window", &quality::SsimParams::window)
      .def_readwrite("k1", &quality::SsimParams::k1)
      .def_readwrite("k2", &quality::SsimParams::k2)
      .def_readwrite("dynamic_range", &quality::SsimParams::dynamic_range);
  py::class_<quality::AxisQuality>(m, "AxisQuality")
      .def_readonly("n_slices", &quality::AxisQuality::n_slices)
      .def_readonly("mean_ssim", &quality::AxisQuality::mean_ssim)
      .def_readonly("mean_psnr", &quality::AxisQuality::mean_psnr);
  py::class_<quality::QualityReport>(m, "QualityReport")
      .def_readonly("x", &quality::QualityReport::x)
      .def_readonly("y", &quality::QualityReport::y)
      .def_readonly("z", &quality::QualityReport::z)
      .def_readonly("overall", &quality::QualityReport::overall);

  auto quality_mod = m.def_submodule("quality", "MSE, PSNR, SSIM and volume comparison");
  quality_mod.def(
      "mse",
      [](const py::array_t<std::uint8_t, py::array::c_style>& a,
         const py::array_t<std::uint8_t, py::array::c_style>& b) {
        return quality::mse(slice_from_numpy(a), slice_from_numpy(b));
      },
      py::arg("a"), py::arg("b"));
  quality_mod.def(
      "psnr",
      [](const py::array_t<std::uint8_t, py::array::c_style>& a,
         const py::array_t<std::uint8_t, py::array::c_style>& b, double max_i) {
        return quality::psnr(slice_from_numpy(a), slice_from_numpy(b), max_i);
      },
      py::arg("a"), py::arg("b"), py::arg("max_i") = 255.0);
  quality_mod.def(
      "ssim",
      [](const py::array_t<std::uint8_t, py::array::c_style>& a,
         const py::array_t<std::uint8_t, py::array::c_style>& b,
         const quality::SsimParams& params) {
        return quality::ssim(slice_from_numpy(a), slice_from_numpy(b), params);
      },
      py::arg("a"), py::arg("b"), py::arg("params") = quality::SsimParams{});
  quality_mod.def("volume_quality", &quality::volume_quality, py::arg("reference"),
                  py::arg("generated"), py::arg("params") = quality::SsimParams{});

  // --- physics ----------------------------------------------------------------
  py::class_<physics::SolverParams>(m, "SolverParams")
      .def(py::init<>())
      .def_readwrite("tolerance", &physics::SolverParams::tolerance)
      .def_readwrite("max_iterations", &physics::SolverParams::max_iterations)
      .def_readwrite("preconditioner", &physics::SolverParams::preconditioner);
  py::class_<physics::DiffusionResult>(m, "DiffusionResult")
      .def_readonly("axis", &physics::DiffusionResult::axis)
      .def_readonly("phase", &physics::DiffusionResult::phase)
      .def_readonly("percolates", &physics::DiffusionResult::percolates)
      .def_readonly("d_eff_ratio", &physics::DiffusionResult::d_eff_ratio)
      .def_readonly("tortuosity", &physics::DiffusionResult::tortuosity)
      .def_readonly("phase_fraction", &physics::DiffusionResult::phase_fraction)
      .def_readonly("inlet_flux", &physics::DiffusionResult::inlet_flux)
      .def_readonly("outlet_flux", &physics::DiffusionResult::outlet_flux)
      .def_readonly("residual", &physics::DiffusionResult::residual)
      .def_readonly("iterations", &physics::DiffusionResult::iterations);
  py::class_<physics::PhysicsReport>(m, "PhysicsReport")
      .def_readonly("phase_fractions", &physics::PhysicsReport::phase_fractions)
      .def_readonly("ssa", &physics::PhysicsReport::ssa)
      .def_readonly("tpb_density", &physics::PhysicsReport::tpb_density)
      .def_readonly("boundary", &physics::PhysicsReport::boundary);

  auto phys_mod = m.def_submodule("physics", "volume fractions, SSA, TPB and diffusion");
  phys_mod.def("phase_volume_fractions", &physics::phase_volume_fractions,
               py::arg("volume"));
  phys_mod.def("specific_surface_area", &physics::specific_surface_area,
               py::arg("volume"), py::arg("phase"),
               py::arg("boundary") = BoundaryMode::Truncated);
  phys_mod.def("tpb_density", &physics::tpb_density, py::arg("volume"),
               py::arg("boundary") = BoundaryMode::Truncated);
  phys_mod.def("effective_diffusion", &physics::effective_diffusion,
               py::arg("volume"), py::arg("phase"), py::arg("axis"),
               py::arg("solver") = physics::SolverParams{});
  phys_mod.def("physics_report", &physics::physics_report, py::arg("volume"),
               py::arg("boundary") = BoundaryMode::Truncated);

  // --- losses -------------------------------------------------------------------
  auto losses_mod = m.def_submodule("losses", "loss and divergence formulas");
  losses_mod.def(
      "kl_divergence",
      [](const std::vector<double>& p, const std::vector<double>& q) {
        return losses::kl_divergence(losses::DiscreteDistribution::from(p),
                                     losses::DiscreteDistribution::from(q));
      },
      py::arg("p"), py::arg("q"));
  losses_mod.def(
      "js_divergence",
      [](const std::vector<double>& p, const std::vector<double>& q) {
        return losses::js_divergence(losses::DiscreteDistribution::from(p),
                                     losses::DiscreteDistribution::from(q));
      },
      py::arg("p"), py::arg("q"));
  losses_mod.def(
      "gan_objective",
      [](const std::vector<double>& real_d, const std::vector<double>& fake_d) {
        return losses::gan_objective(real_d, fake_d);
      },
      py::arg("real_d"), py::arg("fake_d"));
  losses_mod.def(
      "wgan_objective",
      [](const std::vector<double>& real_d, const std::vector<double>& fake_d,
         losses::WganConvention convention) {
        return losses::wgan_objective(real_d, fake_d, convention);
      },
      py::arg("real_d"), py::arg("fake_d"),
      py::arg("convention") = losses::WganConvention::Standard);
  losses_mod.def(
      "l1_loss",
      [](const std::vector<double>& y, const std::vector<double>& g) {
        return losses::l1_loss(y, g);
      },
      py::arg("y"), py::arg("g"));
  losses_mod.def(
      "l2_loss",
      [](const std::vector<double>& y, const std::vector<double>& g) {
        return losses::l2_loss(y, g);
      },
      py::arg("y"), py::arg("g"));
  losses_mod.def(
      "total_loss",
      [](double wasserstein, double regularization, double lambda_w, double lambda_r) {
        return losses::total_loss(wasserstein, regularization, {lambda_w, lambda_r});
      },
      py::arg("wasserstein"), py::arg("regularization"), py::arg("lambda_w") = 1.0,
      py::arg("lambda_r") = 0.0);
  losses_mod.def(
      "weight_clip",
      [](const std::vector<double>& values, double c) {
        return losses::weight_clip(values, c);
      },
      py::arg("values"), py::arg("c"));

  // --- report -------------------------------------------------------------------
  auto report_mod = m.def_submodule("report", "aggregate evaluation reports");
  report_mod.def(
      "run_report_json",
      [](const std::filesystem::path& config_path) {
        return report::report_to_json(report::run_report(report::load_config(config_path)));
      },
      py::arg("config_path"),
      "Run every enabled analysis for a JSON config file and return report JSON");
}
