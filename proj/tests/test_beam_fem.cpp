#include <doctest.h>

#include <stdexcept>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "femup/beam_fem.hpp"

using namespace femup::fem;

namespace {

constexpr double kE = 70e9;
constexpr double kG = kE / 2.6;
constexpr double kRho = 2700.0;

SectionProperties test_section() {
  // 20 x 10 mm rectangle: weak bending about local y, strong about local z.
  SectionProperties s;
  s.E = kE;
  s.G = kG;
  s.rho = kRho;
  s.A = 2.0e-4;
  s.Iy = 1.66666666666667e-9;
  s.Iz = 6.66666666666667e-9;
  s.J = 4.0e-9;
  return s;
}

Mesh straight_beam(int elements, double length, const SectionProperties& section) {
  Mesh mesh;
  for (int i = 0; i <= elements; ++i)
    mesh.nodes.push_back(Node{{length * i / elements, 0.0, 0.0}});
  for (int i = 0; i < elements; ++i)
    mesh.elements.push_back(
        make_element(mesh, i, i + 1, section, Eigen::Vector3d(0.0, 0.0, 1.0)));
  return mesh;
}

// Analytic first bending frequency of a uniform beam, f = (bL)^2/(2 pi L^2)
// * sqrt(EI/(rho A)).
double closed_form_hz(double beta_l, double E, double I, double rho, double A, double L) {
  return beta_l * beta_l / (2.0 * std::numbers::pi * L * L) * std::sqrt(E * I / (rho * A));
}

Eigen::MatrixXd drop_node_dofs(const Eigen::MatrixXd& full, int node) {
  const int n = static_cast<int>(full.rows());
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (i < 6 * node || i >= 6 * node + 6) keep.push_back(i);
  Eigen::MatrixXd reduced(keep.size(), keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (std::size_t c = 0; c < keep.size(); ++c) reduced(r, c) = full(keep[r], keep[c]);
  return reduced;
}

}  // namespace

TEST_CASE("element matrices are symmetric") {
  Mesh mesh;
  mesh.nodes.push_back(Node{{0.1, -0.4, 0.2}});
  mesh.nodes.push_back(Node{{0.9, 0.3, -0.5}});
  const FrameElement element =
      make_element(mesh, 0, 1, test_section(), Eigen::Vector3d(0.0, 0.0, 1.0));
  const ElementMatrices em = element_matrices(element);
  CHECK((em.stiffness - em.stiffness.transpose()).norm() <= 1e-12 * em.stiffness.norm());
  CHECK((em.mass - em.mass.transpose()).norm() <= 1e-12 * em.mass.norm());
}

TEST_CASE("rigid motions carry no strain energy") {
  Mesh mesh;
  mesh.nodes.push_back(Node{{0.2, 0.1, -0.3}});
  mesh.nodes.push_back(Node{{1.1, 0.7, 0.4}});
  const FrameElement element =
      make_element(mesh, 0, 1, test_section(), Eigen::Vector3d(0.0, 0.0, 1.0));
  const ElementMatrices em = element_matrices(element);
  const double scale = em.stiffness.norm();

  for (int axis = 0; axis < 3; ++axis) {
    Eigen::Matrix<double, 12, 1> u = Eigen::Matrix<double, 12, 1>::Zero();
    u(axis) = 1.0;
    u(6 + axis) = 1.0;
    CHECK((em.stiffness * u).norm() <= 1e-12 * scale);
  }
  for (int axis = 0; axis < 3; ++axis) {
    Eigen::Vector3d w = Eigen::Vector3d::Zero();
    w(axis) = 1.0;
    Eigen::Matrix<double, 12, 1> u;
    u.segment<3>(0) = w.cross(mesh.nodes[0].xyz);
    u.segment<3>(3) = w;
    u.segment<3>(6) = w.cross(mesh.nodes[1].xyz);
    u.segment<3>(9) = w;
    CHECK((em.stiffness * u).norm() <= 1e-10 * scale * u.norm());
  }
}

TEST_CASE("axial stiffness entry equals EA over L") {
  Mesh mesh;
  mesh.nodes.push_back(Node{{0.0, 0.0, 0.0}});
  mesh.nodes.push_back(Node{{0.8, 0.0, 0.0}});
  const SectionProperties s = test_section();
  const FrameElement element = make_element(mesh, 0, 1, s, Eigen::Vector3d(0.0, 0.0, 1.0));
  const ElementMatrices local = element_matrices_local(element);
  CHECK(local.stiffness(0, 0) == doctest::Approx(s.E * s.A / 0.8).epsilon(1e-12));
  CHECK(local.stiffness(0, 6) == doctest::Approx(-s.E * s.A / 0.8).epsilon(1e-12));
  CHECK(local.stiffness(3, 3) == doctest::Approx(s.G * s.J / 0.8).epsilon(1e-12));
}

TEST_CASE("element mass matrix is positive definite") {
  Mesh mesh;
  mesh.nodes.push_back(Node{{0.0, 0.0, 0.0}});
  mesh.nodes.push_back(Node{{0.3, 0.4, 0.5}});
  const FrameElement element =
      make_element(mesh, 0, 1, test_section(), Eigen::Vector3d(0.0, 0.0, 1.0));
  const ElementMatrices em = element_matrices(element);
  Eigen::LLT<Eigen::MatrixXd> llt(em.mass);
  CHECK(llt.info() == Eigen::Success);
}

TEST_CASE("non-positive section values are rejected") {
  Mesh mesh;
  mesh.nodes.push_back(Node{{0.0, 0.0, 0.0}});
  mesh.nodes.push_back(Node{{1.0, 0.0, 0.0}});
  SectionProperties s = test_section();
  s.A = 0.0;
  CHECK_THROWS_AS(make_element(mesh, 0, 1, s, Eigen::Vector3d(0.0, 0.0, 1.0)),
                  std::invalid_argument);
}

TEST_CASE("assembling a single element reproduces its matrices") {
  Mesh mesh;
  mesh.nodes.push_back(Node{{0.0, 0.0, 0.0}});
  mesh.nodes.push_back(Node{{1.0, 0.5, 0.25}});
  mesh.elements.push_back(
      make_element(mesh, 0, 1, test_section(), Eigen::Vector3d(0.0, 0.0, 1.0)));
  const GlobalMatrices global = assemble(mesh);
  const ElementMatrices em = element_matrices(mesh.elements[0]);
  CHECK((global.stiffness - em.stiffness).norm() == 0.0);
  CHECK((global.mass - em.mass).norm() == 0.0);
}

TEST_CASE("two collinear elements leave exactly six rigid modes") {
  const Mesh mesh = straight_beam(2, 1.0, test_section());
  const GlobalMatrices global = assemble(mesh);
  CHECK(global.stiffness.rows() == 18);
  const ModalResult modes = solve_modes(global.stiffness, global.mass, 3);
  CHECK(modes.rigid_mode_count == 6);
}

TEST_CASE("a disconnected mesh is rejected") {
  Mesh mesh;
  mesh.nodes.push_back(Node{{0.0, 0.0, 0.0}});
  mesh.nodes.push_back(Node{{1.0, 0.0, 0.0}});
  mesh.nodes.push_back(Node{{5.0, 0.0, 0.0}});
  mesh.nodes.push_back(Node{{6.0, 0.0, 0.0}});
  mesh.elements.push_back(
      make_element(mesh, 0, 1, test_section(), Eigen::Vector3d(0.0, 0.0, 1.0)));
  mesh.elements.push_back(
      make_element(mesh, 2, 3, test_section(), Eigen::Vector3d(0.0, 0.0, 1.0)));
  CHECK_THROWS_AS(assemble(mesh), std::invalid_argument);
}

TEST_CASE("density scaling moves mass only and frequencies follow one over sqrt rho") {
  SectionProperties s = test_section();
  const Mesh mesh_a = straight_beam(8, 1.0, s);
  s.rho *= 4.0;
  const Mesh mesh_b = straight_beam(8, 1.0, s);
  const GlobalMatrices ga = assemble(mesh_a);
  const GlobalMatrices gb = assemble(mesh_b);
  CHECK((gb.stiffness - ga.stiffness).norm() == 0.0);
  CHECK((gb.mass - 4.0 * ga.mass).norm() <= 1e-12 * ga.mass.norm());

  const ModalResult ma = solve_modes(ga.stiffness, ga.mass, 5);
  const ModalResult mb = solve_modes(gb.stiffness, gb.mass, 5);
  for (int i = 0; i < 5; ++i)
    CHECK(mb.frequencies_hz[i] ==
          doctest::Approx(ma.frequencies_hz[i] / 2.0).epsilon(1e-9));
}

TEST_CASE("free-free beam matches the closed-form first bending frequency") {
  const SectionProperties s = test_section();
  const Mesh mesh = straight_beam(20, 1.0, s);
  const GlobalMatrices global = assemble(mesh);
  const ModalResult modes = solve_modes(global.stiffness, global.mass, 3);
  CHECK(modes.rigid_mode_count == 6);
  const double expected = closed_form_hz(4.730040744862704, s.E, s.Iy, s.rho, s.A, 1.0);
  CHECK(modes.frequencies_hz[0] == doctest::Approx(expected).epsilon(0.01));
}

TEST_CASE("cantilever matches the closed-form first bending frequency") {
  const SectionProperties s = test_section();
  const Mesh mesh = straight_beam(20, 1.0, s);
  const GlobalMatrices global = assemble(mesh);
  const Eigen::MatrixXd K = drop_node_dofs(global.stiffness, 0);
  const Eigen::MatrixXd M = drop_node_dofs(global.mass, 0);
  const ModalResult modes = solve_modes(K, M, 1);
  CHECK(modes.rigid_mode_count == 0);
  const double expected = closed_form_hz(1.875104068711961, s.E, s.Iy, s.rho, s.A, 1.0);
  CHECK(modes.frequencies_hz[0] == doctest::Approx(expected).epsilon(0.01));
}

TEST_CASE("returned modes satisfy the generalized eigenproblem") {
  const Mesh mesh = straight_beam(10, 1.0, test_section());
  const GlobalMatrices global = assemble(mesh);
  const ModalSolution solution = solve_modes_full(global.stiffness, global.mass);
  // Elastic modes only; the rigid eigenvectors have K*phi ~ 0.
  for (int i = 6; i < 18; ++i) {
    const Eigen::VectorXd phi = solution.shapes.col(i);
    const double lambda = solution.eigenvalues[i];
    const Eigen::VectorXd k_phi = global.stiffness * phi;
    const Eigen::VectorXd residual = k_phi - lambda * global.mass * phi;
    CHECK(residual.norm() <= 1e-8 * k_phi.norm());
  }
}

TEST_CASE("eigensolver rejects an indefinite mass matrix") {
  const Eigen::MatrixXd K = Eigen::MatrixXd::Identity(4, 4);
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(4, 4);
  M(2, 2) = -1.0;
  CHECK_THROWS_AS(solve_modes(K, M, 1), std::runtime_error);
}

TEST_CASE("asking for more elastic modes than exist fails") {
  const Mesh mesh = straight_beam(2, 1.0, test_section());
  const GlobalMatrices global = assemble(mesh);
  CHECK_THROWS_AS(solve_modes(global.stiffness, global.mass, 13), std::runtime_error);
}
