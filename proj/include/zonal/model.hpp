// Configuration of one invariant subspace of the Landau-Zeeman operator.

#pragma once

#include <stdexcept>

#include "zonal/rational.hpp"

namespace zonal {

// Sign convention of the angular-momentum term.  Plus makes the Fock zone
// holomorphic (the charge-sign choice is equivalent to choosing J or -J).
enum class Orientation { Plus, Minus };

struct ModelParams {
  Rational lambda{1};            // spectral parameter, pi*|Z_gamma|
  int kappa = 1;                 // particle count, kappa = k/2
  double coulomb_strength = 1.0; // Q = Z_p e^2
  Orientation orientation = Orientation::Plus;
  bool include_field_term = true;  // the constant 2k*lambda^2 energy density

  void validate() const {
    if (lambda <= 0) throw std::invalid_argument("ModelParams: lambda must be > 0");
    if (kappa < 1) throw std::invalid_argument("ModelParams: kappa must be >= 1");
    if (coulomb_strength < 0) throw std::invalid_argument("ModelParams: Q must be >= 0");
  }

  double lambda_d() const { return to_double(lambda); }
};

}  // namespace zonal
