#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pbb/errors.hpp"

namespace pbb {

inline constexpr int kLevelsPerAtom = 3;  // |g>, |e>, |f>
inline constexpr std::int64_t kDefaultDimensionCap = 100000;

enum class AtomLevel : int { g = 0, e = 1, f = 2 };

inline char level_char(int l) { return "gef"[l]; }

/// Composite Hilbert space: one truncated Fock mode followed by n_atoms
/// three-level atoms. Basis index runs with the cavity index slowest,
/// then atoms in order, i.e. idx = ((n*3 + l0)*3 + l1)*3 + ...
struct SpaceDescriptor {
  int n_max = 0;
  int n_atoms = 0;

  SpaceDescriptor() = default;
  SpaceDescriptor(int n_max_, int n_atoms_, std::int64_t dim_cap = kDefaultDimensionCap)
      : n_max(n_max_), n_atoms(n_atoms_) {
    if (n_max < 2) throw DimensionError("n_max must be >= 2, got " + std::to_string(n_max));
    if (n_atoms < 0) throw DimensionError("n_atoms must be >= 0");
    std::int64_t d = n_max;
    for (int k = 0; k < n_atoms; ++k) {
      d *= kLevelsPerAtom;
      if (d > dim_cap)
        throw DimensionError("space dimension " + std::to_string(d) + "+ exceeds cap " +
                             std::to_string(dim_cap));
    }
  }

  std::int64_t dim() const {
    std::int64_t d = n_max;
    for (int k = 0; k < n_atoms; ++k) d *= kLevelsPerAtom;
    return d;
  }

  std::int64_t atomic_dim() const {
    std::int64_t d = 1;
    for (int k = 0; k < n_atoms; ++k) d *= kLevelsPerAtom;
    return d;
  }

  std::int64_t index_of(int fock, const std::vector<int>& levels) const {
    std::int64_t idx = fock;
    for (int k = 0; k < n_atoms; ++k) idx = idx * kLevelsPerAtom + levels[k];
    return idx;
  }

  int fock_of(std::int64_t idx) const { return static_cast<int>(idx / atomic_dim()); }

  std::vector<int> levels_of(std::int64_t idx) const {
    std::vector<int> lv(n_atoms, 0);
    for (int k = n_atoms - 1; k >= 0; --k) {
      lv[k] = static_cast<int>(idx % kLevelsPerAtom);
      idx /= kLevelsPerAtom;
    }
    return lv;
  }

  /// Human-readable basis label like "|g g, 2>" (atoms first, photon last).
  std::string basis_label(std::int64_t idx) const {
    std::string s = "|";
    auto lv = levels_of(idx);
    for (int k = 0; k < n_atoms; ++k) {
      s += level_char(lv[k]);
      if (k + 1 < n_atoms) s += ' ';
    }
    if (n_atoms > 0) s += ',';
    s += std::to_string(fock_of(idx));
    s += '>';
    return s;
  }

  bool operator==(const SpaceDescriptor&) const = default;
};

inline SpaceDescriptor build_space(int n_max, int n_atoms,
                                   std::int64_t dim_cap = kDefaultDimensionCap) {
  return SpaceDescriptor(n_max, n_atoms, dim_cap);
}

}  // namespace pbb
