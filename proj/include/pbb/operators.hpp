#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "pbb/space.hpp"
#include "pbb/sparse.hpp"

namespace pbb {

/// Cavity annihilation operator embedded on the full space: a|n> = sqrt(n)|n-1>
/// on the Fock factor, identity on every atom. The top Fock level only maps
/// downward (truncation, no wraparound).
inline SparseOperator annihilation(const SpaceDescriptor& space) {
  const std::int64_t adim = space.atomic_dim();
  std::vector<Eigen::Triplet<Complex>> t;
  t.reserve(static_cast<std::size_t>((space.n_max - 1) * adim));
  for (int n = 1; n < space.n_max; ++n) {
    const double amp = std::sqrt(static_cast<double>(n));
    for (std::int64_t j = 0; j < adim; ++j)
      t.emplace_back((n - 1) * adim + j, n * adim + j, amp);
  }
  return SparseOperator::from_triplets(space.dim(), t);
}

inline SparseOperator creation(const SpaceDescriptor& space) {
  return annihilation(space).adjoint();
}

inline SparseOperator number_operator(const SpaceDescriptor& space) {
  const std::int64_t adim = space.atomic_dim();
  std::vector<Eigen::Triplet<Complex>> t;
  for (int n = 1; n < space.n_max; ++n)
    for (std::int64_t j = 0; j < adim; ++j)
      t.emplace_back(n * adim + j, n * adim + j, static_cast<double>(n));
  auto op = SparseOperator::from_triplets(space.dim(), t);
  op.mark_hermitian();
  return op;
}

/// |bra><ket| on atom atom_index, identity on the cavity and all other atoms.
inline SparseOperator atomic_op(const SpaceDescriptor& space, int atom_index, int bra_level,
                                int ket_level) {
  if (atom_index < 0 || atom_index >= space.n_atoms)
    throw DimensionError("atomic_op: atom index " + std::to_string(atom_index) +
                         " out of range (n_atoms=" + std::to_string(space.n_atoms) + ")");
  if (bra_level < 0 || bra_level >= kLevelsPerAtom || ket_level < 0 ||
      ket_level >= kLevelsPerAtom)
    throw DimensionError("atomic_op: level out of range");
  // idx = hi * (3*stride) + level * stride + lo
  std::int64_t stride = 1;
  for (int k = atom_index + 1; k < space.n_atoms; ++k) stride *= kLevelsPerAtom;
  const std::int64_t hi_count = space.dim() / (kLevelsPerAtom * stride);
  std::vector<Eigen::Triplet<Complex>> t;
  t.reserve(static_cast<std::size_t>(hi_count * stride));
  for (std::int64_t hi = 0; hi < hi_count; ++hi)
    for (std::int64_t lo = 0; lo < stride; ++lo)
      t.emplace_back(hi * kLevelsPerAtom * stride + bra_level * stride + lo,
                     hi * kLevelsPerAtom * stride + ket_level * stride + lo, 1.0);
  auto op = SparseOperator::from_triplets(space.dim(), t);
  if (bra_level == ket_level) op.mark_hermitian();
  return op;
}

inline SparseOperator atomic_op(const SpaceDescriptor& space, int atom_index, AtomLevel bra,
                                AtomLevel ket) {
  return atomic_op(space, atom_index, static_cast<int>(bra), static_cast<int>(ket));
}

inline SparseOperator atomic_projector(const SpaceDescriptor& space, int atom_index,
                                       AtomLevel level) {
  return atomic_op(space, atom_index, level, level);
}

/// Total excitation operator a^dag a + sum_k (|e><e|_k + 2 |f><f|_k).
inline SparseOperator excitation_number(const SpaceDescriptor& space) {
  SparseOperator n = number_operator(space);
  for (int k = 0; k < space.n_atoms; ++k) {
    n = n + atomic_projector(space, k, AtomLevel::e) +
        2.0 * atomic_projector(space, k, AtomLevel::f);
  }
  n.mark_hermitian();
  return n;
}

/// Transmon parameters. All values are ordinary frequencies in MHz
/// (E_C and E_J given as E/h).
struct TransmonSpec {
  double E_C = 0.0;
  double E_J = 0.0;
  double freq_eg = 0.0;
  double freq_fe = 0.0;
};

/// freq_eg = sqrt(8 E_C E_J) - E_C, freq_fe = freq_eg - E_C.
inline TransmonSpec transmon_derive(double E_C, double E_J) {
  if (!(E_C > 0.0) || !(E_J > E_C))
    throw ConfigError("transmon regime requires E_J > E_C > 0 (got E_C=" +
                      std::to_string(E_C) + ", E_J=" + std::to_string(E_J) + ")");
  TransmonSpec s;
  s.E_C = E_C;
  s.E_J = E_J;
  s.freq_eg = std::sqrt(8.0 * E_C * E_J) - E_C;
  s.freq_fe = s.freq_eg - E_C;
  return s;
}

}  // namespace pbb
