#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "pbb/operators.hpp"
#include "pbb/params.hpp"
#include "pbb/sparse.hpp"

namespace pbb {

struct JumpChannel {
  SparseOperator op;   // L_k, angular units
  SparseOperator ldl;  // L_k^dag L_k, cached for rates and H_eff
  std::string label;
};

/// Hamiltonian plus ordered jump channels. Channel order is construction
/// order and never changes: cavity loss first, then per atom
/// (decay e->g, decay f->e, dephase g, e, f). Zero-rate channels are
/// omitted entirely. Immutable after assembly; safe to share across
/// trajectory workers.
struct LindbladSet {
  SpaceDescriptor space;
  SparseOperator hamiltonian;  // Hermitian, rad/us
  std::vector<JumpChannel> jumps;
  SparseOperator h_eff;  // H - (i/2) sum L^dag L
};

/// Rotating-frame Hamiltonian in angular units (rad/us):
///   H = sum_k [D1_k |g><g|_k - D2_k |f><f|_k] - Dc a^dag a + eta (a + a^dag)
///       + sum_k [g1_k (a^dag |g><e|_k + h.c.) + g2_k (a^dag |e><f|_k + h.c.)]
/// with every MHz input multiplied by 2pi.
inline SparseOperator build_hamiltonian(const SystemParams& params,
                                        const SpaceDescriptor& space) {
  params.validate();
  if (space.n_max != params.n_max || space.n_atoms != params.n_atoms())
    throw DimensionError("build_hamiltonian: space/params mismatch");

  const SparseOperator a = annihilation(space);
  const SparseOperator ad = a.adjoint();
  SparseOperator h = (-angular(params.delta_c())) * number_operator(space) +
                     angular(params.eta) * (a + ad);
  for (int k = 0; k < params.n_atoms(); ++k) {
    const auto& at = params.atoms[k];
    h = h + angular(params.delta1(k)) * atomic_projector(space, k, AtomLevel::g) -
        angular(params.delta2(k)) * atomic_projector(space, k, AtomLevel::f);
    const SparseOperator sge = atomic_op(space, k, AtomLevel::g, AtomLevel::e);
    const SparseOperator sef = atomic_op(space, k, AtomLevel::e, AtomLevel::f);
    const SparseOperator c1 = ad * sge;
    const SparseOperator c2 = ad * sef;
    h = h + angular(at.g1) * (c1 + c1.adjoint()) + angular(at.g2) * (c2 + c2.adjoint());
  }
  h.mark_hermitian();
  return h;
}

/// Jump operators of the zero-temperature master equation, in Lindblad form:
///   L_cav = sqrt(2 kappa) a
///   per atom: sqrt(2 gamma_par) |g><e|, sqrt(2 gamma_par) |e><f|,
///             sqrt(8 gamma_perp) |i><i| for i in {g,e,f}
/// (rates angular). The three projector jumps per atom reproduce the
/// projector dephasing term exactly since the projectors sum to identity.
inline LindbladSet build_jump_ops(const SystemParams& params, const SpaceDescriptor& space) {
  LindbladSet set;
  set.space = space;
  set.hamiltonian = build_hamiltonian(params, space);

  auto push = [&set](SparseOperator l, std::string label) {
    JumpChannel ch;
    ch.ldl = SparseOperator(SparseMatrix(l.adjoint().matrix() * l.matrix()));
    ch.op = std::move(l);
    ch.label = std::move(label);
    set.jumps.push_back(std::move(ch));
  };

  push(std::sqrt(2.0 * angular(params.kappa)) * annihilation(space), "cavity-loss");
  for (int k = 0; k < params.n_atoms(); ++k) {
    const std::string idx = "[" + std::to_string(k) + "]";
    if (params.gamma_par > 0.0) {
      const double amp = std::sqrt(2.0 * angular(params.gamma_par));
      push(amp * atomic_op(space, k, AtomLevel::g, AtomLevel::e), "decay-eg" + idx);
      push(amp * atomic_op(space, k, AtomLevel::e, AtomLevel::f), "decay-fe" + idx);
    }
    if (params.gamma_perp > 0.0) {
      const double amp = std::sqrt(8.0 * angular(params.gamma_perp));
      push(amp * atomic_projector(space, k, AtomLevel::g), "dephase-g" + idx);
      push(amp * atomic_projector(space, k, AtomLevel::e), "dephase-e" + idx);
      push(amp * atomic_projector(space, k, AtomLevel::f), "dephase-f" + idx);
    }
  }

  SparseOperator damp = SparseOperator::zero(space.dim());
  for (const auto& ch : set.jumps) damp = damp + ch.ldl;
  set.h_eff = SparseOperator(
      SparseMatrix(set.hamiltonian.matrix() + Complex(0.0, -0.5) * damp.matrix()));
  return set;
}

/// rho -> -i[H,rho] + sum_k (L rho L^dag - 1/2 {L^dag L, rho}), evaluated
/// directly on a dense matrix. This is the master-equation right-hand side.
inline DenseMatrix apply_liouvillian(const LindbladSet& set, const DenseMatrix& rho) {
  const SparseMatrix& h = set.hamiltonian.matrix();
  DenseMatrix out = Complex(0, -1) * (h * rho - rho * h);
  for (const auto& ch : set.jumps) {
    const SparseMatrix& l = ch.op.matrix();
    const SparseMatrix& ldl = ch.ldl.matrix();
    out += l * rho * SparseMatrix(l.adjoint());
    out -= 0.5 * (ldl * rho + rho * ldl);
  }
  return out;
}

/// Explicit superoperator matrix acting on column-stacked vec(rho):
/// vec(A rho B) = (B^T kron A) vec(rho).
inline SparseOperator build_liouvillian(const LindbladSet& set,
                                        std::int64_t superop_dim_cap = kDefaultDimensionCap) {
  const std::int64_t d = set.space.dim();
  if (d * d > superop_dim_cap)
    throw DimensionError("build_liouvillian: superoperator dimension " +
                         std::to_string(d * d) + " exceeds cap " +
                         std::to_string(superop_dim_cap));
  const SparseOperator eye = SparseOperator::identity(d);
  const SparseOperator& h = set.hamiltonian;
  SparseOperator liou =
      Complex(0, -1) * (tensor_product(eye, h, superop_dim_cap) -
                        tensor_product(h.transpose(), eye, superop_dim_cap));
  for (const auto& ch : set.jumps) {
    liou = liou + tensor_product(ch.op.conjugate(), ch.op, superop_dim_cap) -
           0.5 * (tensor_product(eye, ch.ldl, superop_dim_cap) +
                  tensor_product(ch.ldl.transpose(), eye, superop_dim_cap));
  }
  return liou;
}

inline Eigen::VectorXcd vectorize(const DenseMatrix& rho) {
  return Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
}

inline DenseMatrix devectorize(const Eigen::VectorXcd& v, std::int64_t d) {
  return Eigen::Map<const DenseMatrix>(v.data(), d, d);
}

}  // namespace pbb
