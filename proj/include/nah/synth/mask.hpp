#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nah/util/errors.hpp"

namespace nah::synth {

// {0,1} image selecting the grid points that belong to the plate.
struct BinaryMask {
  int n1 = 0;  // rows
  int n2 = 0;  // cols
  std::vector<uint8_t> values;  // row-major, n1*n2

  uint8_t at(int i, int j) const { return values[static_cast<size_t>(i) * n2 + j]; }
  uint8_t& at(int i, int j) { return values[static_cast<size_t>(i) * n2 + j]; }
  int count() const;
  bool connected() const;  // 4-neighborhood over set cells
};

enum class MaskFamily { rectangle, superellipse, violinoid };

std::string to_string(MaskFamily family);
MaskFamily mask_family_from_string(const std::string& name);

// Shape parameters in normalized coordinates xi = 2x/lx, eta = 2y/ly,
// both in (-1, 1) over the bounding box.
//   superellipse: |xi/fx|^p + |eta/fy|^p <= 1
//   violinoid:    union of two superellipse lobes offset along xi by the
//                 waist parameter; waist = 0 degenerates to one superellipse
struct MaskParams {
  double exponent = 2.0;     // p
  double width_frac = 1.0;   // fx, fraction of the half-length used
  double height_frac = 1.0;  // fy
  double waist = 0.0;        // lobe separation in [0, 1)
  double lower_frac = 1.0;   // lower-bout height multiplier
  double upper_frac = 1.0;   // upper-bout height multiplier
};

BinaryMask make_mask(MaskFamily family, const MaskParams& params, int n1, int n2);

}  // namespace nah::synth
