#include "nah/synth/mask.hpp"

#include <cmath>
#include <numeric>
#include <stack>

namespace nah::synth {

int BinaryMask::count() const {
  return std::accumulate(values.begin(), values.end(), 0, [](int a, uint8_t b) { return a + (b ? 1 : 0); });
}

bool BinaryMask::connected() const {
  const int total = count();
  if (total == 0) return false;
  std::vector<uint8_t> seen(values.size(), 0);
  std::stack<int> stack;
  for (size_t k = 0; k < values.size(); ++k) {
    if (values[k]) {
      stack.push(static_cast<int>(k));
      seen[k] = 1;
      break;
    }
  }
  int reached = 0;
  while (!stack.empty()) {
    const int k = stack.top();
    stack.pop();
    ++reached;
    const int i = k / n2, j = k % n2;
    const int di[4] = {-1, 1, 0, 0};
    const int dj[4] = {0, 0, -1, 1};
    for (int d = 0; d < 4; ++d) {
      const int ii = i + di[d], jj = j + dj[d];
      if (ii < 0 || ii >= n1 || jj < 0 || jj >= n2) continue;
      const int kk = ii * n2 + jj;
      if (values[kk] && !seen[kk]) {
        seen[kk] = 1;
        stack.push(kk);
      }
    }
  }
  return reached == total;
}

std::string to_string(MaskFamily family) {
  switch (family) {
    case MaskFamily::rectangle: return "rectangle";
    case MaskFamily::superellipse: return "superellipse";
    case MaskFamily::violinoid: return "violinoid";
  }
  return "unknown";
}

MaskFamily mask_family_from_string(const std::string& name) {
  if (name == "rectangle") return MaskFamily::rectangle;
  if (name == "superellipse") return MaskFamily::superellipse;
  if (name == "violinoid") return MaskFamily::violinoid;
  throw ValidationError("unknown mask family: " + name);
}

namespace {

bool inside_superellipse(double xi, double eta, double cx, double ax, double ay, double p) {
  if (ax <= 0.0 || ay <= 0.0) return false;
  return std::pow(std::abs((xi - cx) / ax), p) + std::pow(std::abs(eta / ay), p) <= 1.0;
}

void check_params(const MaskParams& p) {
  if (!(p.exponent >= 1.0)) throw ValidationError("make_mask: exponent must be >= 1");
  if (!(p.width_frac > 0.0 && p.width_frac <= 1.0) || !(p.height_frac > 0.0 && p.height_frac <= 1.0))
    throw ValidationError("make_mask: size fractions must be in (0, 1]");
  if (!(p.waist >= 0.0 && p.waist < 1.0)) throw ValidationError("make_mask: waist must be in [0, 1)");
  if (!(p.lower_frac > 0.0 && p.lower_frac <= 1.0) || !(p.upper_frac > 0.0 && p.upper_frac <= 1.0))
    throw ValidationError("make_mask: bout fractions must be in (0, 1]");
}

}  // namespace

BinaryMask make_mask(MaskFamily family, const MaskParams& params, int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw ValidationError("make_mask: grid dims must be >= 1");
  check_params(params);

  BinaryMask mask;
  mask.n1 = n1;
  mask.n2 = n2;
  mask.values.assign(static_cast<size_t>(n1) * n2, 0);

  if (family == MaskFamily::rectangle) {
    std::fill(mask.values.begin(), mask.values.end(), 1);
    return mask;
  }

  const double p = params.exponent;
  const double fx = params.width_frac;
  const double fy = params.height_frac;

  for (int i = 0; i < n1; ++i) {
    // interior-node coordinates of the bounding box, in (-1, 1)
    const double eta = -1.0 + 2.0 * (i + 1) / (n1 + 1);
    for (int j = 0; j < n2; ++j) {
      const double xi = -1.0 + 2.0 * (j + 1) / (n2 + 1);
      bool in = false;
      if (family == MaskFamily::superellipse) {
        in = inside_superellipse(xi, eta, 0.0, fx, fy, p);
      } else {
        // two lobes: centers at -+ s*fx/2, half-length fx*(1 - s/2);
        // each lobe keeps contact with its end of the plate
        const double s = params.waist;
        const double half = fx * (1.0 - 0.5 * s);
        const double off = 0.5 * s * fx;
        in = inside_superellipse(xi, eta, -off, half, fy * params.lower_frac, p) ||
             inside_superellipse(xi, eta, +off, half, fy * params.upper_frac, p);
      }
      if (in) mask.at(i, j) = 1;
    }
  }

  if (mask.count() == 0) throw ValidationError("make_mask: parameters produce an empty mask");
  if (!mask.connected()) throw ValidationError("make_mask: parameters produce a disconnected mask");
  return mask;
}

}  // namespace nah::synth
