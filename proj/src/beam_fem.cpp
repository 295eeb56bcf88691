#include "femup/beam_fem.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace femup::fem {

std::string to_string(MemberGroup group) {
  switch (group) {
    case MemberGroup::generic: return "generic";
    case MemberGroup::fuselage: return "fuselage";
    case MemberGroup::wing_left: return "wing_left";
    case MemberGroup::wing_right: return "wing_right";
    case MemberGroup::vertical_tail: return "vertical_tail";
    case MemberGroup::horizontal_tail: return "horizontal_tail";
  }
  return "unknown";
}

void SectionProperties::validate() const {
  if (E <= 0.0 || G <= 0.0 || rho <= 0.0 || A <= 0.0 || Iy <= 0.0 || Iz <= 0.0 || J <= 0.0)
    throw std::invalid_argument("section and material properties must be strictly positive");
}

int Mesh::add_or_find_node(const Eigen::Vector3d& xyz, double tol) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if ((nodes[i].xyz - xyz).norm() <= tol) return static_cast<int>(i);
  nodes.push_back(Node{xyz});
  return static_cast<int>(nodes.size()) - 1;
}

FrameElement make_element(const Mesh& mesh, int node_a, int node_b,
                          const SectionProperties& section, const Eigen::Vector3d& ey_hint,
                          MemberGroup group) {
  if (node_a < 0 || node_b < 0 || node_a >= static_cast<int>(mesh.nodes.size()) ||
      node_b >= static_cast<int>(mesh.nodes.size()))
    throw std::invalid_argument("element references a node outside the mesh");
  section.validate();

  FrameElement element;
  element.node_a = node_a;
  element.node_b = node_b;
  element.section = section;
  element.group = group;

  const Eigen::Vector3d axis = mesh.nodes[node_b].xyz - mesh.nodes[node_a].xyz;
  element.length = axis.norm();
  if (element.length <= 0.0) throw std::invalid_argument("element has zero length");

  const Eigen::Vector3d ex = axis / element.length;
  Eigen::Vector3d ey = ey_hint - ey_hint.dot(ex) * ex;
  if (ey.norm() < 1e-9 * ey_hint.norm())
    throw std::invalid_argument("ey_hint is parallel to the element axis");
  ey.normalize();
  element.triad.row(0) = ex;
  element.triad.row(1) = ey;
  element.triad.row(2) = ex.cross(ey);
  return element;
}

ElementMatrices element_matrices_local(const FrameElement& element) {
  element.section.validate();
  const double L = element.length;
  const double E = element.section.E;
  const double G = element.section.G;
  const double A = element.section.A;
  const double Iy = element.section.Iy;
  const double Iz = element.section.Iz;
  const double J = element.section.J;
  const double rho = element.section.rho;

  Matrix12 k = Matrix12::Zero();
  Matrix12 m = Matrix12::Zero();

  // Axial (ux) and torsion (rx) bar terms.
  const double ka = E * A / L;
  k(0, 0) = k(6, 6) = ka;
  k(0, 6) = k(6, 0) = -ka;
  const double kt = G * J / L;
  k(3, 3) = k(9, 9) = kt;
  k(3, 9) = k(9, 3) = -kt;

  // Bending with displacement along local y, rotation about local z.
  {
    const double c = E * Iz / (L * L * L);
    const int i[4] = {1, 5, 7, 11};
    const double kb[4][4] = {{12.0, 6.0 * L, -12.0, 6.0 * L},
                             {6.0 * L, 4.0 * L * L, -6.0 * L, 2.0 * L * L},
                             {-12.0, -6.0 * L, 12.0, -6.0 * L},
                             {6.0 * L, 2.0 * L * L, -6.0 * L, 4.0 * L * L}};
    for (int r = 0; r < 4; ++r)
      for (int s = 0; s < 4; ++s) k(i[r], i[s]) = c * kb[r][s];
  }
  // Bending with displacement along local z, rotation about local y. Same
  // pattern with the rotation sign flipped.
  {
    const double c = E * Iy / (L * L * L);
    const int i[4] = {2, 4, 8, 10};
    const double kb[4][4] = {{12.0, -6.0 * L, -12.0, -6.0 * L},
                             {-6.0 * L, 4.0 * L * L, 6.0 * L, 2.0 * L * L},
                             {-12.0, 6.0 * L, 12.0, 6.0 * L},
                             {-6.0 * L, 2.0 * L * L, 6.0 * L, 4.0 * L * L}};
    for (int r = 0; r < 4; ++r)
      for (int s = 0; s < 4; ++s) k(i[r], i[s]) = c * kb[r][s];
  }

  // Consistent mass: bar terms for ux and rx, cubic-beam terms transverse.
  const double mass = rho * A * L;
  m(0, 0) = m(6, 6) = mass / 3.0;
  m(0, 6) = m(6, 0) = mass / 6.0;
  const double inertia = rho * element.section.Ip() * L;
  m(3, 3) = m(9, 9) = inertia / 3.0;
  m(3, 9) = m(9, 3) = inertia / 6.0;
  {
    const double c = mass / 420.0;
    const int i[4] = {1, 5, 7, 11};
    const double mb[4][4] = {{156.0, 22.0 * L, 54.0, -13.0 * L},
                             {22.0 * L, 4.0 * L * L, 13.0 * L, -3.0 * L * L},
                             {54.0, 13.0 * L, 156.0, -22.0 * L},
                             {-13.0 * L, -3.0 * L * L, -22.0 * L, 4.0 * L * L}};
    for (int r = 0; r < 4; ++r)
      for (int s = 0; s < 4; ++s) m(i[r], i[s]) = c * mb[r][s];
  }
  {
    const double c = mass / 420.0;
    const int i[4] = {2, 4, 8, 10};
    const double mb[4][4] = {{156.0, -22.0 * L, 54.0, 13.0 * L},
                             {-22.0 * L, 4.0 * L * L, -13.0 * L, -3.0 * L * L},
                             {54.0, -13.0 * L, 156.0, 22.0 * L},
                             {13.0 * L, -3.0 * L * L, 22.0 * L, 4.0 * L * L}};
    for (int r = 0; r < 4; ++r)
      for (int s = 0; s < 4; ++s) m(i[r], i[s]) = c * mb[r][s];
  }

  return {k, m};
}

ElementMatrices element_matrices(const FrameElement& element) {
  ElementMatrices local = element_matrices_local(element);
  Matrix12 T = Matrix12::Zero();
  for (int b = 0; b < 4; ++b) T.block<3, 3>(3 * b, 3 * b) = element.triad;
  return {T.transpose() * local.stiffness * T, T.transpose() * local.mass * T};
}

namespace {

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

void check_connected(const Mesh& mesh) {
  std::vector<int> parent(mesh.nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& e : mesh.elements) {
    const int ra = find_root(parent, e.node_a);
    const int rb = find_root(parent, e.node_b);
    parent[ra] = rb;
  }
  const int root = find_root(parent, 0);
  for (std::size_t i = 1; i < mesh.nodes.size(); ++i)
    if (find_root(parent, static_cast<int>(i)) != root)
      throw std::invalid_argument("mesh is disconnected");
}

}  // namespace

GlobalMatrices assemble(const Mesh& mesh) {
  if (mesh.nodes.empty() || mesh.elements.empty())
    throw std::invalid_argument("mesh has no nodes or elements");
  check_connected(mesh);

  const int n = mesh.dof_count();
  GlobalMatrices global{Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n)};
  for (const auto& element : mesh.elements) {
    const ElementMatrices em = element_matrices(element);
    int dof[12];
    for (int i = 0; i < 6; ++i) {
      dof[i] = 6 * element.node_a + i;
      dof[6 + i] = 6 * element.node_b + i;
    }
    for (int r = 0; r < 12; ++r) {
      for (int c = 0; c < 12; ++c) {
        global.stiffness(dof[r], dof[c]) += em.stiffness(r, c);
        global.mass(dof[r], dof[c]) += em.mass(r, c);
      }
    }
  }
  return global;
}

namespace {

// Reduce K*phi = lambda*M*phi to a standard symmetric problem through the
// Cholesky factor of M.
Eigen::MatrixXd reduced_operator(const Eigen::MatrixXd& K, const Eigen::MatrixXd& M,
                                 Eigen::LLT<Eigen::MatrixXd>& llt) {
  if (K.rows() != K.cols() || M.rows() != M.cols() || K.rows() != M.rows())
    throw std::invalid_argument("stiffness and mass matrices must be square and equally sized");
  llt.compute(M);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("mass matrix is not positive definite");
  Eigen::MatrixXd t = llt.matrixL().solve(K);
  return llt.matrixL().solve(t.transpose());
}

double frequency_hz(double eigenvalue) {
  return std::sqrt(std::max(eigenvalue, 0.0)) / (2.0 * std::numbers::pi);
}

}  // namespace

ModalResult solve_modes(const Eigen::MatrixXd& K, const Eigen::MatrixXd& M, int n_elastic,
                        double rigid_threshold_hz) {
  if (n_elastic < 1) throw std::invalid_argument("n_elastic must be positive");
  Eigen::LLT<Eigen::MatrixXd> llt;
  const Eigen::MatrixXd C = reduced_operator(K, M, llt);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(C, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed to converge");
  const Eigen::VectorXd& eigenvalues = solver.eigenvalues();

  ModalResult result;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double f = frequency_hz(eigenvalues[i]);
    if (f < rigid_threshold_hz)
      ++result.rigid_mode_count;
    else if (static_cast<int>(result.frequencies_hz.size()) < n_elastic)
      result.frequencies_hz.push_back(f);
  }
  if (static_cast<int>(result.frequencies_hz.size()) < n_elastic)
    throw std::runtime_error("model carries fewer elastic modes than requested");
  return result;
}

ModalSolution solve_modes_full(const Eigen::MatrixXd& K, const Eigen::MatrixXd& M) {
  Eigen::LLT<Eigen::MatrixXd> llt;
  const Eigen::MatrixXd C = reduced_operator(K, M, llt);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(C, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed to converge");

  ModalSolution solution;
  solution.eigenvalues = solver.eigenvalues();
  // Back-transform: phi = L^-T * y.
  solution.shapes = llt.matrixL().transpose().solve(solver.eigenvectors());
  return solution;
}

std::string dump_mesh(const Mesh& mesh) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "nodes %zu\n", mesh.nodes.size());
  out += line;
  for (std::size_t i = 0; i < mesh.nodes.size(); ++i) {
    std::snprintf(line, sizeof line, "%zu % .9e % .9e % .9e\n", i, mesh.nodes[i].xyz.x(),
                  mesh.nodes[i].xyz.y(), mesh.nodes[i].xyz.z());
    out += line;
  }
  std::snprintf(line, sizeof line, "elements %zu\n", mesh.elements.size());
  out += line;
  for (std::size_t i = 0; i < mesh.elements.size(); ++i) {
    const auto& e = mesh.elements[i];
    std::snprintf(line, sizeof line,
                  "%zu %d %d %s E=%.6e G=%.6e rho=%.6e A=%.6e Iy=%.6e Iz=%.6e J=%.6e L=%.6e\n", i,
                  e.node_a, e.node_b, to_string(e.group).c_str(), e.section.E, e.section.G,
                  e.section.rho, e.section.A, e.section.Iy, e.section.Iz, e.section.J, e.length);
    out += line;
  }
  return out;
}

}  // namespace femup::fem
