#pragma once

#include <array>
#include <span>

#include "femup/beam_fem.hpp"

namespace femup::fem {

/// The eight updating parameters: overall density plus the wing and
/// vertical-tail section inertias, in the fixed order used everywhere
/// (rho, vtp_imin, l_imin, l_imax, l_itors, r_imin, r_imax, r_itors).
struct ParameterVector {
  double rho = 0.0;       // [kg/m^3]
  double vtp_imin = 0.0;  // [m^4]
  double l_imin = 0.0;
  double l_imax = 0.0;
  double l_itors = 0.0;
  double r_imin = 0.0;
  double r_imax = 0.0;
  double r_itors = 0.0;

  static constexpr int kDim = 8;

  static ParameterVector from_span(std::span<const double> values);
  std::array<double, kDim> to_array() const;

  /// Nominal design values of the benchmark structure.
  static ParameterVector nominal();

  /// Throws unless every entry is strictly positive.
  void validate() const;

  bool operator==(const ParameterVector&) const = default;
};

/// Geometry and discretization of the beam-frame aeroplane. The fuselage
/// runs along +x with the wing crossing it mid-length, the wing spans +/-y,
/// the vertical tail rises from the rear fuselage node and carries the
/// horizontal tail on top.
struct GarteurConfig {
  int fuselage_elements = 12;  // even, so the wing lands on a node
  int wing_elements = 12;      // per half wing
  int vtp_elements = 4;
  int htp_elements = 4;        // even, split across the fin top

  double fuselage_length = 1.5;  // [m]
  double wing_span = 3.0;        // total span [m]
  double vtp_height = 0.3;       // [m]
  double htp_span = 0.4;         // [m]

  double youngs_modulus = 70e9;  // [Pa]
  double poisson_ratio = 0.3;

  double shear_modulus() const { return youngs_modulus / (2.0 * (1.0 + poisson_ratio)); }
  void validate() const;
};

/// Assemble the aeroplane mesh for one parameter set. The density applies
/// to every element; the left/right wing elements take (imin, imax, itors)
/// as (Iz, Iy, J); the vertical tail takes vtp_imin as its minor-axis Iz.
/// Everything else is a fixed constant of the model.
Mesh build_garteur(const ParameterVector& params, const GarteurConfig& config = {});

/// build_garteur -> assemble -> solve_modes for the n lowest elastic
/// frequencies.
ModalResult model_frequencies(const ParameterVector& params, int n_modes,
                              const GarteurConfig& config = {});

}  // namespace femup::fem
