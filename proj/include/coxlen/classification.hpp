#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "coxlen/coxeter_matrix.hpp"
#include "coxlen/errors.hpp"

namespace coxlen {

enum class ComponentType { Finite, Affine, Indefinite };

inline const char* to_string(ComponentType t) {
  switch (t) {
  case ComponentType::Finite:
    return "Finite";
  case ComponentType::Affine:
    return "Affine";
  case ComponentType::Indefinite:
    return "Indefinite";
  }
  return "?";
}

/// Default zero threshold for the eigenvalue tests. The Gram entries
/// -cos(pi/m) are irrational for most labels, so classification is done in
/// floating point; the threshold is validated against the standard diagram
/// lists in the test suite.
inline constexpr double kClassifyTolerance = 1e-8;

/// The symmetric bilinear form of the standard geometric representation:
/// B_ii = 1, B_ij = -cos(pi / m_ij), with infinite labels contributing -1.
inline Eigen::MatrixXd gram_matrix(const CoxeterMatrix& m) {
  const int n = m.rank();
  Eigen::MatrixXd B = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        continue;
      unsigned lab = m.label(i, j);
      B(i, j) = (lab == kInfinity) ? -1.0 : -std::cos(M_PI / static_cast<double>(lab));
    }
  return B;
}

/// Classify one irreducible system by the signature of its Gram form:
/// positive definite = Finite, positive semidefinite with a one-dimensional
/// kernel = Affine, anything else = Indefinite. Requires connected input.
inline ComponentType classify_component(const CoxeterMatrix& m, double tol = kClassifyTolerance) {
  if (!CoxeterGraph::of(m).connected())
    throw DisconnectedInput("classify_component requires a connected Coxeter graph");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram_matrix(m),
                                                        Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  int negative = 0, zero = 0;
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) < -tol)
      ++negative;
    else if (ev(i) <= tol)
      ++zero;
  }
  if (negative > 0)
    return ComponentType::Indefinite;
  if (zero == 0)
    return ComponentType::Finite;
  if (zero == 1)
    return ComponentType::Affine;
  return ComponentType::Indefinite;
}

struct Component {
  std::vector<int> vertices; // global generator indices, sorted
  CoxeterMatrix matrix;      // restriction to those vertices
  ComponentType type;
};

/// Irreducible components: connected components of the Coxeter graph, each
/// with its restricted matrix and classification. Vertex sets partition
/// {0..rank-1} and are ordered by least vertex.
struct Decomposition {
  std::vector<Component> components;

  bool all_finite() const {
    for (const auto& c : components)
      if (c.type != ComponentType::Finite)
        return false;
    return true;
  }
};

inline Decomposition decompose(const CoxeterMatrix& m, double tol = kClassifyTolerance) {
  Decomposition dec;
  for (auto& verts : connected_components(CoxeterGraph::of(m))) {
    CoxeterMatrix sub = m.restrict(verts);
    ComponentType type = classify_component(sub, tol);
    dec.components.push_back(Component{std::move(verts), std::move(sub), type});
  }
  return dec;
}

} // namespace coxlen
