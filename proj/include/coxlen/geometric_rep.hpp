#pragma once

#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "coxlen/classification.hpp"
#include "coxlen/coxeter_matrix.hpp"
#include "coxlen/errors.hpp"
#include "coxlen/word_engine.hpp"

namespace coxlen {

/// Floating-point oracle: the standard geometric representation
/// sigma_s(v) = v - 2 B(v, e_s) e_s over the Gram form B. Used to
/// cross-check the word engine and, on finite groups, to compute
/// reflection length as the codimension of the fixed space.
class GeometricRep {
public:
  explicit GeometricRep(const CoxeterMatrix& m, double tol = 1e-8)
      : rank_(m.rank()), tol_(tol), B_(gram_matrix(m)) {
    generators_.reserve(static_cast<std::size_t>(rank_));
    for (int s = 0; s < rank_; ++s) {
      // column j of sigma_s is e_j - 2 B_{js} e_s
      Eigen::MatrixXd sigma = Eigen::MatrixXd::Identity(rank_, rank_);
      for (int j = 0; j < rank_; ++j)
        sigma(s, j) -= 2.0 * B_(j, s);
      generators_.push_back(std::move(sigma));
    }
    all_finite_ = decompose(m).all_finite();
  }

  int rank() const { return rank_; }
  const Eigen::MatrixXd& gram() const { return B_; }
  const Eigen::MatrixXd& generator(int s) const { return generators_[static_cast<std::size_t>(s)]; }

  Eigen::MatrixXd rep_of(const Word& w) const {
    Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(rank_, rank_);
    for (Gen s : w)
      acc = acc * generators_[s];
    return acc;
  }

  Eigen::MatrixXd rep_of(const GroupElement& g) const { return rep_of(g.word()); }

  bool numeric_identity(const Word& w) const {
    return (rep_of(w) - Eigen::MatrixXd::Identity(rank_, rank_)).cwiseAbs().maxCoeff() < tol_;
  }

  bool numeric_identity(const GroupElement& g) const { return numeric_identity(g.word()); }

  /// sigma^T B sigma == B up to tolerance.
  bool preserves_form(const Eigen::MatrixXd& sigma) const {
    return (sigma.transpose() * B_ * sigma - B_).cwiseAbs().maxCoeff() < tol_;
  }

  /// Fixed-space length formula for finite groups: rank minus the dimension
  /// of the eigenspace for eigenvalue 1, i.e. the rank of rep(w) - I.
  int carter_rl(const GroupElement& g) const {
    if (!all_finite_)
      throw NotFiniteComponent("the fixed-space length formula requires a finite group");
    Eigen::MatrixXd d = rep_of(g) - Eigen::MatrixXd::Identity(rank_, rank_);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(d);
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > tol_)
        ++r;
    return r;
  }

private:
  int rank_;
  double tol_;
  Eigen::MatrixXd B_;
  std::vector<Eigen::MatrixXd> generators_;
  bool all_finite_ = false;
};

} // namespace coxlen
