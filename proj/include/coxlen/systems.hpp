#pragma once

#include <string>
#include <vector>

#include "coxlen/classification.hpp"
#include "coxlen/coxeter_matrix.hpp"

namespace coxlen {

/// A named irreducible diagram with its known classification, used to
/// cross-check the Gram-matrix criterion against the standard lists.
struct DiagramTemplate {
  std::string name;
  CoxeterMatrix matrix;
  ComponentType type;
};

/// Every irreducible finite and affine Coxeter diagram of rank <= 5, plus a
/// few indefinite landmarks.
inline std::vector<DiagramTemplate> standard_diagram_templates() {
  using M = CoxeterMatrix;
  const long long inf = static_cast<long long>(kInfinity);
  std::vector<DiagramTemplate> t;
  auto fin = [&](std::string name, CoxeterMatrix m) {
    t.push_back({std::move(name), std::move(m), ComponentType::Finite});
  };
  auto aff = [&](std::string name, CoxeterMatrix m) {
    t.push_back({std::move(name), std::move(m), ComponentType::Affine});
  };
  auto indef = [&](std::string name, CoxeterMatrix m) {
    t.push_back({std::move(name), std::move(m), ComponentType::Indefinite});
  };

  fin("A1", M::from_edges(1, {}));
  fin("A2", M::path({3}));
  fin("B2", M::path({4}));
  fin("I2(5)", M::path({5}));
  fin("G2", M::path({6}));
  fin("I2(7)", M::path({7}));
  fin("I2(8)", M::path({8}));
  fin("A3", M::path({3, 3}));
  fin("B3", M::path({4, 3}));
  fin("H3", M::path({5, 3}));
  fin("A4", M::path({3, 3, 3}));
  fin("B4", M::path({4, 3, 3}));
  fin("D4", M::from_edges(4, {{0, 3, 3}, {1, 3, 3}, {2, 3, 3}}));
  fin("F4", M::path({3, 4, 3}));
  fin("H4", M::path({5, 3, 3}));
  fin("A5", M::path({3, 3, 3, 3}));
  fin("B5", M::path({4, 3, 3, 3}));
  fin("D5", M::from_edges(5, {{0, 2, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}}));

  aff("A~1", M::dihedral(inf));
  aff("A~2", M::from_edges(3, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}}));
  aff("A~3", M::from_edges(4, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {0, 3, 3}}));
  aff("A~4", M::from_edges(5, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {0, 4, 3}}));
  aff("C~2", M::path({4, 4}));
  aff("C~3", M::path({4, 3, 4}));
  aff("C~4", M::path({4, 3, 3, 4}));
  aff("G~2", M::path({3, 6}));
  aff("B~3", M::from_edges(4, {{0, 2, 3}, {1, 2, 3}, {2, 3, 4}}));
  aff("B~4", M::from_edges(5, {{0, 2, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 4}}));
  aff("D~4", M::from_edges(5, {{0, 4, 3}, {1, 4, 3}, {2, 4, 3}, {3, 4, 3}}));
  aff("F~4", M::path({3, 3, 4, 3}));

  indef("(3,3,4) triangle", M::from_edges(3, {{0, 1, 3}, {0, 2, 3}, {1, 2, 4}}));
  indef("(2,4,5)", M::from_edges(3, {{0, 2, 4}, {1, 2, 5}}));
  indef("K3 universal", M::universal(3));
  return t;
}

} // namespace coxlen
