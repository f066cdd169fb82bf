#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "pbb/errors.hpp"
#include "pbb/space.hpp"

namespace pbb {

// All user-facing frequencies and rates are ordinary frequencies nu = omega/2pi
// in MHz; times are in microseconds. The dynamics layer multiplies by 2pi, so
// angular quantities are in rad/us (MHz * us = 1).
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double angular(double freq_mhz) { return kTwoPi * freq_mhz; }

struct AtomParams {
  double freq_eg = 0.0;  // |g>-|e> transition (MHz)
  double freq_fe = 0.0;  // |e>-|f> transition (MHz)
  double g1 = 0.0;       // cavity coupling on g-e (MHz, sign kept)
  double g2 = 0.0;       // cavity coupling on e-f (MHz, sign kept)
};

struct SystemParams {
  double drive_freq = 0.0;   // nu (MHz)
  double cavity_freq = 0.0;  // nu_c (MHz)
  std::vector<AtomParams> atoms;
  double eta = 0.0;         // drive amplitude (MHz)
  double kappa = 0.0;       // cavity half-width (MHz); FWHM = 2*kappa
  double gamma_par = 0.0;   // population decay (MHz), same for e->g and f->e
  double gamma_perp = 0.0;  // dephasing (MHz)
  int n_max = 0;

  int n_atoms() const { return static_cast<int>(atoms.size()); }

  double delta1(int k) const { return drive_freq - atoms[k].freq_eg; }
  double delta2(int k) const { return drive_freq - atoms[k].freq_fe; }
  double delta_c() const { return drive_freq - cavity_freq; }

  SpaceDescriptor space(std::int64_t dim_cap = kDefaultDimensionCap) const {
    return SpaceDescriptor(n_max, n_atoms(), dim_cap);
  }

  void validate() const {
    if (!(kappa > 0.0)) throw ConfigError("kappa must be > 0");
    if (gamma_par < 0.0) throw ConfigError("gamma_par must be >= 0");
    if (gamma_perp < 0.0) throw ConfigError("gamma_perp must be >= 0");
    if (eta < 0.0) throw ConfigError("eta must be >= 0");
    if (n_max < 2) throw ConfigError("n_max must be >= 2");
  }
};

/// Default g2 when a config leaves it out: sqrt(2)*g1 with the sign inherited.
inline double default_g2(double g1) { return std::sqrt(2.0) * g1; }

}  // namespace pbb
