#include "femup/garteur.hpp"

#include <stdexcept>

namespace femup::fem {

namespace {

// Fixed section constants. Wing and tail members are 100 x 10 mm aluminium
// plate; the fuselage is a 150 x 50 mm solid rectangle (torsion constant
// with the aspect-ratio-3 coefficient 0.263).
constexpr double kPlateArea = 1.0e-3;
constexpr double kPlateImin = 8.3e-9;
constexpr double kPlateImax = 8.3e-7;
constexpr double kPlateItors = 4.0e-8;

constexpr double kFuselageArea = 7.5e-3;
constexpr double kFuselageIvert = 1.40625e-5;   // bending in the vertical plane
constexpr double kFuselageIlat = 1.5625e-6;     // lateral bending
constexpr double kFuselageItors = 4.93125e-6;

}  // namespace

ParameterVector ParameterVector::from_span(std::span<const double> values) {
  if (values.size() != kDim)
    throw std::invalid_argument("parameter vector must have exactly 8 entries");
  return {values[0], values[1], values[2], values[3], values[4], values[5], values[6], values[7]};
}

std::array<double, ParameterVector::kDim> ParameterVector::to_array() const {
  return {rho, vtp_imin, l_imin, l_imax, l_itors, r_imin, r_imax, r_itors};
}

ParameterVector ParameterVector::nominal() {
  return {2700.0, 8.3e-9, 8.3e-9, 8.3e-7, 4.0e-8, 8.3e-9, 8.3e-7, 4.0e-8};
}

void ParameterVector::validate() const {
  for (double v : to_array())
    if (!(v > 0.0)) throw std::invalid_argument("updating parameters must be strictly positive");
}

void GarteurConfig::validate() const {
  if (fuselage_elements < 2 || fuselage_elements % 2 != 0)
    throw std::invalid_argument("fuselage_elements must be even and at least 2");
  if (wing_elements < 1) throw std::invalid_argument("wing_elements must be at least 1");
  if (vtp_elements < 1) throw std::invalid_argument("vtp_elements must be at least 1");
  if (htp_elements < 2 || htp_elements % 2 != 0)
    throw std::invalid_argument("htp_elements must be even and at least 2");
  if (fuselage_length <= 0.0 || wing_span <= 0.0 || vtp_height <= 0.0 || htp_span <= 0.0)
    throw std::invalid_argument("geometry lengths must be positive");
  if (youngs_modulus <= 0.0 || poisson_ratio <= -1.0 || poisson_ratio >= 0.5)
    throw std::invalid_argument("invalid material constants");
}

namespace {

using Eigen::Vector3d;

// Straight run of identical elements from start to end, reusing any
// coincident existing nodes.
void add_chain(Mesh& mesh, const Vector3d& start, const Vector3d& end, int count,
               const SectionProperties& section, const Vector3d& ey_hint, MemberGroup group) {
  int previous = mesh.add_or_find_node(start);
  for (int i = 1; i <= count; ++i) {
    const double t = static_cast<double>(i) / count;
    const int current = mesh.add_or_find_node(start + t * (end - start));
    mesh.elements.push_back(make_element(mesh, previous, current, section, ey_hint, group));
    previous = current;
  }
}

}  // namespace

Mesh build_garteur(const ParameterVector& params, const GarteurConfig& config) {
  params.validate();
  config.validate();

  const double E = config.youngs_modulus;
  const double G = config.shear_modulus();
  const double rho = params.rho;

  const SectionProperties fuselage{E, G, rho, kFuselageArea, kFuselageIlat, kFuselageIvert,
                                   kFuselageItors};
  const SectionProperties wing_left{E, G, rho, kPlateArea, params.l_imax, params.l_imin,
                                    params.l_itors};
  const SectionProperties wing_right{E, G, rho, kPlateArea, params.r_imax, params.r_imin,
                                     params.r_itors};
  const SectionProperties vtp{E, G, rho, kPlateArea, kPlateImax, params.vtp_imin, kPlateItors};
  const SectionProperties htp{E, G, rho, kPlateArea, kPlateImax, kPlateImin, kPlateItors};

  Mesh mesh;
  const Vector3d nose(0.0, 0.0, 0.0);
  const Vector3d rear(config.fuselage_length, 0.0, 0.0);
  const Vector3d wing_root(config.fuselage_length / 2.0, 0.0, 0.0);
  const Vector3d fin_top(config.fuselage_length, 0.0, config.vtp_height);
  const double half_span = config.wing_span / 2.0;
  const double half_htp = config.htp_span / 2.0;

  // Local y is vertical for fuselage and wings (so Iz governs vertical
  // bending) and lateral for the fin (so Iz governs its weak direction).
  const Vector3d up(0.0, 0.0, 1.0);
  const Vector3d lateral(0.0, 1.0, 0.0);

  add_chain(mesh, nose, rear, config.fuselage_elements, fuselage, up, MemberGroup::fuselage);
  add_chain(mesh, wing_root, wing_root + Vector3d(0.0, -half_span, 0.0), config.wing_elements,
            wing_left, up, MemberGroup::wing_left);
  add_chain(mesh, wing_root, wing_root + Vector3d(0.0, half_span, 0.0), config.wing_elements,
            wing_right, up, MemberGroup::wing_right);
  add_chain(mesh, rear, fin_top, config.vtp_elements, vtp, lateral, MemberGroup::vertical_tail);
  add_chain(mesh, fin_top, fin_top + Vector3d(0.0, -half_htp, 0.0), config.htp_elements / 2, htp,
            up, MemberGroup::horizontal_tail);
  add_chain(mesh, fin_top, fin_top + Vector3d(0.0, half_htp, 0.0), config.htp_elements / 2, htp,
            up, MemberGroup::horizontal_tail);

  return mesh;
}

ModalResult model_frequencies(const ParameterVector& params, int n_modes,
                              const GarteurConfig& config) {
  const Mesh mesh = build_garteur(params, config);
  const GlobalMatrices global = assemble(mesh);
  return solve_modes(global.stiffness, global.mass, n_modes);
}

}  // namespace femup::fem
