#pragma once

#include <array>

namespace gmr {

/// One frame of quantized arm posture: four direction indices into the
/// 26-direction table (left upper arm, left forearm, right upper arm,
/// right forearm). `valid` is cleared on frames repaired by the validity
/// filter.
struct ArmPostureFrame {
  double timestamp = 0.0;
  std::array<int, 4> dirs{0, 0, 0, 0};
  bool valid = true;

  friend bool operator==(const ArmPostureFrame&, const ArmPostureFrame&) = default;
};

}  // namespace gmr
