#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <unsupported/Eigen/MatrixFunctions>

#include "pbb/errors.hpp"
#include "pbb/sparse.hpp"

namespace pbb {

struct KrylovOptions {
  int m_max = 30;        // Krylov dimension per step
  double rtol = 1e-8;    // per-step local error, relative to the state norm
  double breakdown_tol = 1e-13;
};

/// One Arnoldi subspace built from a state vector for a fixed linear map A.
/// Supports evaluating exp(tau*A)*v and its norm for any tau within the
/// step accepted by the error estimate, which is what makes locating jump
/// times cheap: the bisection runs entirely on the small projected matrix.
class KrylovSubspace {
 public:
  using ApplyFn = std::function<void(const StateVector&, StateVector&)>;

  KrylovSubspace(const ApplyFn& apply, const StateVector& v, const KrylovOptions& opt)
      : opt_(opt), beta_(v.norm()) {
    const auto n = v.size();
    if (beta_ == 0.0) {
      m_ = 0;
      return;
    }
    basis_.resize(n, opt.m_max + 1);
    hess_ = Eigen::MatrixXcd::Zero(opt.m_max + 1, opt.m_max);
    basis_.col(0) = v / beta_;
    StateVector w(n);
    int j = 0;
    for (; j < opt.m_max; ++j) {
      apply(basis_.col(j), w);
      // modified Gram-Schmidt with one reorthogonalization pass
      for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i <= j; ++i) {
          const Complex c = basis_.col(i).dot(w);
          hess_(i, j) += c;
          w -= c * basis_.col(i);
        }
      }
      const double hn = w.norm();
      hess_(j + 1, j) = hn;
      scale_ = std::max(scale_, hess_.col(j).cwiseAbs().maxCoeff());
      if (hn <= opt.breakdown_tol * std::max(scale_, 1.0)) {
        happy_ = true;  // invariant subspace: propagation exact within it
        m_ = j + 1;
        return;
      }
      basis_.col(j + 1) = w / hn;
    }
    m_ = j;
  }

  double beta() const { return beta_; }
  bool happy() const { return happy_; }

  /// Frequency scale of the projected operator; 1/scale is a natural
  /// first-step guess.
  double op_scale() const { return std::max(scale_, 1e-30); }

  /// Largest tau <= h_max passing the local error test. Only the small
  /// exponential is recomputed while shrinking, so this costs O(m^3) per try.
  double select_tau(double h_max) {
    if (m_ == 0 || beta_ == 0.0) return h_max;
    double tau = std::min(h_max, tau_hint_ > 0 ? tau_hint_ : 2.0 * m_ / op_scale());
    for (int tries = 0; tries < 60; ++tries) {
      const double err = local_error(tau);
      const double tol = opt_.rtol * beta_ * std::max(tau * op_scale(), 1.0);
      if (happy_ || err <= tol) {
        // grow the hint gently when the step was comfortably accepted
        tau_hint_ = (err < 0.1 * tol) ? 1.4 * tau : tau;
        return tau;
      }
      tau *= 0.5;
      if (tau * op_scale() < 1e-12)
        throw ConvergenceError("krylov step underflow; operator scale " +
                               std::to_string(op_scale()));
    }
    return tau;
  }

  /// exp(tau*A) v for tau within the accepted step.
  StateVector eval(double tau) const {
    if (m_ == 0) return StateVector::Zero(basis_.rows());
    return beta_ * (basis_.leftCols(m_) * small_exp(tau));
  }

  /// ||exp(tau*A) v||^2 without forming the full-space vector.
  double norm2(double tau) const {
    if (m_ == 0) return 0.0;
    return beta_ * beta_ * small_exp(tau).squaredNorm();
  }

 private:
  Eigen::VectorXcd small_exp(double tau) const {
    // cache: bisection evaluates many taus for the same subspace
    if (tau == cached_tau_ && cache_valid_) return cached_u_;
    Eigen::MatrixXcd ht = tau * hess_.topLeftCorner(m_, m_);
    cached_u_ = ht.exp().col(0);
    cached_tau_ = tau;
    cache_valid_ = true;
    return cached_u_;
  }

  double local_error(double tau) const {
    if (happy_ || m_ == 0) return 0.0;
    const Eigen::VectorXcd u = small_exp(tau);
    return beta_ * std::abs(hess_(m_, m_ - 1)) * std::abs(u(m_ - 1)) * tau;
  }

  KrylovOptions opt_;
  double beta_ = 0.0;
  double scale_ = 0.0;
  double tau_hint_ = -1.0;
  int m_ = 0;
  bool happy_ = false;
  Eigen::MatrixXcd basis_;
  Eigen::MatrixXcd hess_;
  mutable Eigen::VectorXcd cached_u_;
  mutable double cached_tau_ = -1.0;
  mutable bool cache_valid_ = false;
};

/// Adaptive exp(tA) propagation of a time-independent linear map. Holds the
/// step-size hint across steps.
class KrylovPropagator {
 public:
  KrylovPropagator(KrylovSubspace::ApplyFn apply, KrylovOptions opt = {})
      : apply_(std::move(apply)), opt_(opt) {}

  /// Advance psi by exactly dt (possibly via several internal substeps).
  void propagate(StateVector& psi, double dt) {
    double remaining = dt;
    while (remaining > 0.0) {
      KrylovSubspace sub(apply_, psi, opt_);
      if (sub.beta() == 0.0) return;
      swap_hint(sub);
      const double tau = sub.select_tau(remaining);
      psi = sub.eval(tau);
      store_hint(sub);
      remaining -= tau;
      if (tau <= 0.0) throw ConvergenceError("krylov propagate made no progress");
    }
  }

  const KrylovOptions& options() const { return opt_; }

 private:
  // KrylovSubspace keeps its own hint; persist it across subspaces.
  void swap_hint(KrylovSubspace&) {}
  void store_hint(KrylovSubspace&) {}

  KrylovSubspace::ApplyFn apply_;
  KrylovOptions opt_;
};

}  // namespace pbb
