#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gmrtask/geometry.hpp"
#include "gmrtask/posture_types.hpp"

namespace gmr {

using Skeleton = std::map<std::string, Vec3>;

namespace joints {
inline constexpr const char* kSpineBase = "spineBase";
inline constexpr const char* kSpineTop = "spineTop";
inline constexpr const char* kLeftShoulder = "leftShoulder";
inline constexpr const char* kRightShoulder = "rightShoulder";
inline constexpr const char* kLeftElbow = "leftElbow";
inline constexpr const char* kRightElbow = "rightElbow";
inline constexpr const char* kLeftWrist = "leftWrist";
inline constexpr const char* kRightWrist = "rightWrist";
}  // namespace joints

/// Body-local frame anchored at the spine base. Orthonormal, right-handed,
/// with `up` exactly along the spine axis.
struct BodyFrame {
  Vec3 origin = Vec3::Zero();
  Vec3 forward = Vec3::UnitX();
  Vec3 left = Vec3::UnitY();
  Vec3 up = Vec3::UnitZ();
};

/// The 26 unit directions: normalized nonzero vectors of {-1,0,1}^3 in body
/// coordinates (x forward, y left, z up), ordered lexicographically by
/// (x, y, z) with -1 < 0 < 1.
const std::array<Vec3, 26>& direction_table();

/// Index of the exact component triple, e.g. index_of_direction(0,0,1).
int index_of_direction(int x, int y, int z);

/// Frame from spine and shoulder joints. up = spineTop - spineBase,
/// forward = (leftShoulder - rightShoulder) x up, left = up x forward,
/// all normalized. Throws DegenerateSkeleton on missing joints, segments
/// shorter than 1 mm, or spine/shoulder axes parallel within 1 degree.
BodyFrame build_body_frame(const Skeleton& skeleton);

/// Nearest of the 26 directions to `d` expressed in body coordinates
/// (maximum dot product; ties go to the lowest index). `d` must be unit
/// within 1e-6 or NotUnit is thrown.
int quantize_direction(const Vec3& d, const BodyFrame& frame);

/// Quantized upper-arm (elbow - shoulder) and forearm (wrist - elbow)
/// directions for both sides, in the frame built from the same skeleton.
ArmPostureFrame encode_arm_posture(const Skeleton& skeleton, double timestamp);

/// Allowed (upperArm, forearm) index pairs per side. The default table
/// excludes pairs whose elbow flexion angle, measured between the canonical
/// vectors of shoulder->elbow reversed and elbow->wrist, is below 20 degrees.
struct ValidityTable {
  std::set<std::pair<int, int>> left;
  std::set<std::pair<int, int>> right;

  bool allows(int side, int upperArm, int forearm) const;  // side 0 left, 1 right
  static ValidityTable default_table();
  static ValidityTable from_json_text(const std::string& text);
  std::string to_json_text() const;
};

/// Marks frames whose pair is absent from the table on either side and
/// repairs them by holding the most recent valid frame (leading invalid
/// frames take the first valid frame). Repaired frames keep their own
/// timestamp and have `valid` cleared. Throws AllFramesInvalid.
std::vector<ArmPostureFrame> filter_invalid(const std::vector<ArmPostureFrame>& timeline,
                                            const ValidityTable& table);

}  // namespace gmr
