#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <cstdint>
#include <vector>

#include "pbb/errors.hpp"
#include "pbb/space.hpp"

namespace pbb {

using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;
using DenseMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline constexpr std::int64_t kDefaultDenseCap = 4000;

/// Complex sparse operator in compressed-row storage. Immutable by
/// convention once built: builders construct, everything downstream reads.
/// The hermitian flag is asserted by whoever sets it (see mark_hermitian),
/// never inferred.
class SparseOperator {
 public:
  SparseOperator() = default;
  explicit SparseOperator(SparseMatrix m, bool hermitian = false)
      : mat_(std::move(m)), hermitian_(hermitian) {
    mat_.makeCompressed();
  }

  static SparseOperator zero(std::int64_t dim) {
    return SparseOperator(SparseMatrix(dim, dim));
  }

  static SparseOperator identity(std::int64_t dim) {
    SparseMatrix m(dim, dim);
    m.setIdentity();
    return SparseOperator(std::move(m), true);
  }

  static SparseOperator from_triplets(std::int64_t dim,
                                      const std::vector<Eigen::Triplet<Complex>>& t) {
    SparseMatrix m(dim, dim);
    m.setFromTriplets(t.begin(), t.end());
    return SparseOperator(std::move(m));
  }

  std::int64_t dim() const { return mat_.rows(); }
  std::int64_t nnz() const { return mat_.nonZeros(); }
  const SparseMatrix& matrix() const { return mat_; }
  bool hermitian() const { return hermitian_; }

  double max_abs() const {
    double m = 0.0;
    for (int k = 0; k < mat_.outerSize(); ++k)
      for (SparseMatrix::InnerIterator it(mat_, k); it; ++it)
        m = std::max(m, std::abs(it.value()));
    return m;
  }

  SparseOperator adjoint() const {
    SparseMatrix a = mat_.adjoint();
    return SparseOperator(std::move(a), hermitian_);
  }

  SparseOperator transpose() const {
    SparseMatrix a = mat_.transpose();
    return SparseOperator(std::move(a));
  }

  SparseOperator conjugate() const {
    SparseMatrix a = mat_.conjugate();
    return SparseOperator(std::move(a));
  }

  /// max|A - A^dagger| <= tol * max|A|; the check behind the hermitian flag.
  bool is_hermitian(double rel_tol = 1e-12) const {
    SparseMatrix d = SparseMatrix(mat_ - SparseMatrix(mat_.adjoint()));
    double dev = 0.0;
    for (int k = 0; k < d.outerSize(); ++k)
      for (SparseMatrix::InnerIterator it(d, k); it; ++it)
        dev = std::max(dev, std::abs(it.value()));
    double scale = max_abs();
    return dev <= rel_tol * (scale > 0 ? scale : 1.0);
  }

  SparseOperator& mark_hermitian() {
    if (!is_hermitian()) throw DimensionError("mark_hermitian: operator is not hermitian");
    hermitian_ = true;
    return *this;
  }

  StateVector apply(const StateVector& v) const { return mat_ * v; }

  Complex expectation(const StateVector& psi) const { return psi.dot(mat_ * psi); }

  Complex trace_with(const DenseMatrix& rho) const {
    // tr(A rho) = sum_ij A_ij rho_ji
    Complex t = 0;
    for (int k = 0; k < mat_.outerSize(); ++k)
      for (SparseMatrix::InnerIterator it(mat_, k); it; ++it)
        t += it.value() * rho(it.col(), it.row());
    return t;
  }

  DenseMatrix dense() const { return DenseMatrix(mat_); }

  friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
    return SparseOperator(SparseMatrix(a.mat_ + b.mat_), a.hermitian_ && b.hermitian_);
  }
  friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
    return SparseOperator(SparseMatrix(a.mat_ - b.mat_), a.hermitian_ && b.hermitian_);
  }
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
    return SparseOperator(SparseMatrix(a.mat_ * b.mat_));
  }
  friend SparseOperator operator*(Complex s, const SparseOperator& a) {
    return SparseOperator(SparseMatrix(s * a.mat_),
                          a.hermitian_ && s.imag() == 0.0);
  }
  friend SparseOperator operator*(double s, const SparseOperator& a) {
    return SparseOperator(SparseMatrix(s * a.mat_), a.hermitian_);
  }

 private:
  SparseMatrix mat_;
  bool hermitian_ = false;
};

/// Kronecker product; dimensions multiply, sparsity pattern is the
/// product pattern.
inline SparseOperator tensor_product(const SparseOperator& a, const SparseOperator& b,
                                     std::int64_t dim_cap = kDefaultDimensionCap) {
  const std::int64_t da = a.dim(), db = b.dim();
  if (da * db > dim_cap)
    throw DimensionError("tensor_product dimension " + std::to_string(da * db) +
                         " exceeds cap " + std::to_string(dim_cap));
  std::vector<Eigen::Triplet<Complex>> trip;
  trip.reserve(static_cast<std::size_t>(a.nnz()) * static_cast<std::size_t>(b.nnz()));
  const SparseMatrix& A = a.matrix();
  const SparseMatrix& B = b.matrix();
  for (int ka = 0; ka < A.outerSize(); ++ka)
    for (SparseMatrix::InnerIterator ia(A, ka); ia; ++ia)
      for (int kb = 0; kb < B.outerSize(); ++kb)
        for (SparseMatrix::InnerIterator ib(B, kb); ib; ++ib)
          trip.emplace_back(ia.row() * db + ib.row(), ia.col() * db + ib.col(),
                            ia.value() * ib.value());
  SparseMatrix m(da * db, da * db);
  m.setFromTriplets(trip.begin(), trip.end());
  return SparseOperator(std::move(m), a.hermitian() && b.hermitian());
}

}  // namespace pbb
