#pragma once

#include "nah/util/errors.hpp"

namespace nah::field {

// Acoustic medium constants (air at 20 C by default).
struct PhysicalConstants {
  double rho0 = 1.2;  // air density, kg/m^3
  double c = 343.0;   // sound speed, m/s

  void validate() const {
    if (!(rho0 > 0.0)) throw ValidationError("PhysicalConstants: rho0 must be > 0");
    if (!(c > 0.0)) throw ValidationError("PhysicalConstants: c must be > 0");
  }
};

}  // namespace nah::field
