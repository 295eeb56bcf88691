#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace femup::fem {

struct Node {
  Eigen::Vector3d xyz;
};

enum class MemberGroup { generic, fuselage, wing_left, wing_right, vertical_tail, horizontal_tail };

std::string to_string(MemberGroup group);

struct SectionProperties {
  double E = 0.0;    // Young's modulus [Pa]
  double G = 0.0;    // shear modulus [Pa]
  double rho = 0.0;  // density [kg/m^3]
  double A = 0.0;    // cross-section area [m^2]
  double Iy = 0.0;   // second moment about the local y axis [m^4]
  double Iz = 0.0;   // second moment about the local z axis [m^4]
  double J = 0.0;    // torsion constant [m^4]

  // Polar second moment for rotary inertia about the element axis.
  double Ip() const { return Iy + Iz; }
  void validate() const;
};

/// Two-node Euler-Bernoulli space frame element with 6 DOF per node
/// (ux, uy, uz, rx, ry, rz). The triad rows are the local x, y, z axes in
/// global coordinates; transverse displacement along local y bends about
/// local z (stiffness E*Iz) and vice versa.
struct FrameElement {
  int node_a = -1;
  int node_b = -1;
  SectionProperties section;
  double length = 0.0;
  Eigen::Matrix3d triad = Eigen::Matrix3d::Identity();
  MemberGroup group = MemberGroup::generic;
};

struct Mesh {
  std::vector<Node> nodes;
  std::vector<FrameElement> elements;

  int dof_count() const { return 6 * static_cast<int>(nodes.size()); }
  /// Index of the node at xyz within tolerance, or a fresh one.
  int add_or_find_node(const Eigen::Vector3d& xyz, double tol = 1e-12);
};

/// Build an element between two existing nodes. ey_hint fixes the local y
/// axis (projected orthogonal to the element axis); it must not be
/// parallel to the axis.
FrameElement make_element(const Mesh& mesh, int node_a, int node_b,
                          const SectionProperties& section, const Eigen::Vector3d& ey_hint,
                          MemberGroup group = MemberGroup::generic);

using Matrix12 = Eigen::Matrix<double, 12, 12>;

struct ElementMatrices {
  Matrix12 stiffness;
  Matrix12 mass;
};

/// Closed-form element matrices in the local frame: axial and torsion
/// bar terms, cubic bending, consistent (translational + torsional
/// rotary) mass.
ElementMatrices element_matrices_local(const FrameElement& element);

/// Local matrices rotated into global coordinates.
ElementMatrices element_matrices(const FrameElement& element);

struct GlobalMatrices {
  Eigen::MatrixXd stiffness;
  Eigen::MatrixXd mass;
};

/// Dense free-free assembly over 6 DOF per node. Throws on an empty or
/// disconnected mesh (a disconnected free-free mesh would carry more than
/// six rigid modes).
GlobalMatrices assemble(const Mesh& mesh);

struct ModalResult {
  std::vector<double> frequencies_hz;  // ascending elastic frequencies
  int rigid_mode_count = 0;
};

inline constexpr double kRigidThresholdHz = 0.5;

/// Generalized eigensolution K*phi = lambda*M*phi via Cholesky reduction
/// to a dense symmetric standard problem. Modes below rigid_threshold_hz
/// are counted and discarded; the n_elastic lowest elastic frequencies are
/// returned in Hz. Throws if M is not positive definite or fewer than
/// n_elastic elastic modes exist.
ModalResult solve_modes(const Eigen::MatrixXd& K, const Eigen::MatrixXd& M, int n_elastic,
                        double rigid_threshold_hz = kRigidThresholdHz);

struct ModalSolution {
  Eigen::VectorXd eigenvalues;  // all, ascending
  Eigen::MatrixXd shapes;       // columns, M-orthonormal
};

/// Full spectrum with mode shapes, for diagnostics and residual checks.
ModalSolution solve_modes_full(const Eigen::MatrixXd& K, const Eigen::MatrixXd& M);

/// Structured text dump (nodes, elements, section properties).
std::string dump_mesh(const Mesh& mesh);

}  // namespace femup::fem
