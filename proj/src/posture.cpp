#include "gmrtask/posture.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "gmrtask/errors.hpp"

namespace gmr {

namespace {

constexpr double kMinSegmentLength = 1e-3;  // 1 mm

const Vec3& require_joint(const Skeleton& skeleton, const char* name) {
  const auto it = skeleton.find(name);
  if (it == skeleton.end()) {
    fail(ErrorCode::DegenerateSkeleton, std::string("missing joint '") + name + "'");
  }
  return it->second;
}

Vec3 segment_direction(const Vec3& a, const Vec3& b, const char* what) {
  const Vec3 d = b - a;
  const double n = d.norm();
  if (n < kMinSegmentLength) {
    fail(ErrorCode::DegenerateSkeleton, std::string(what) + " segment shorter than 1 mm");
  }
  return d / n;
}

}  // namespace

const std::array<Vec3, 26>& direction_table() {
  static const std::array<Vec3, 26> table = [] {
    std::array<Vec3, 26> t;
    int i = 0;
    for (int x = -1; x <= 1; ++x) {
      for (int y = -1; y <= 1; ++y) {
        for (int z = -1; z <= 1; ++z) {
          if (x == 0 && y == 0 && z == 0) continue;
          t[i++] = Vec3(x, y, z).normalized();
        }
      }
    }
    return t;
  }();
  return table;
}

int index_of_direction(int x, int y, int z) {
  const Vec3 v = Vec3(x, y, z).normalized();
  const auto& table = direction_table();
  for (int i = 0; i < 26; ++i) {
    if ((table[i] - v).norm() < 1e-12) return i;
  }
  return -1;
}

BodyFrame build_body_frame(const Skeleton& skeleton) {
  const Vec3& spineBase = require_joint(skeleton, joints::kSpineBase);
  const Vec3& spineTop = require_joint(skeleton, joints::kSpineTop);
  const Vec3& leftShoulder = require_joint(skeleton, joints::kLeftShoulder);
  const Vec3& rightShoulder = require_joint(skeleton, joints::kRightShoulder);

  const Vec3 up = segment_direction(spineBase, spineTop, "spine");
  const Vec3 leftRaw = segment_direction(rightShoulder, leftShoulder, "shoulder");

  const Vec3 fwdRaw = leftRaw.cross(up);
  constexpr double kSinOneDegree = 0.017452406437283512;
  if (fwdRaw.norm() < kSinOneDegree) {
    fail(ErrorCode::DegenerateSkeleton, "spine and shoulder axes parallel within 1 degree");
  }

  BodyFrame frame;
  frame.origin = spineBase;
  frame.up = up;
  frame.forward = fwdRaw.normalized();
  frame.left = up.cross(frame.forward);
  return frame;
}

int quantize_direction(const Vec3& d, const BodyFrame& frame) {
  if (std::abs(d.norm() - 1.0) > 1e-6) {
    fail(ErrorCode::NotUnit, "direction must be unit length");
  }
  const Vec3 body(d.dot(frame.forward), d.dot(frame.left), d.dot(frame.up));
  const auto& table = direction_table();
  int best = 0;
  double bestDot = body.dot(table[0]);
  for (int i = 1; i < 26; ++i) {
    const double dot = body.dot(table[i]);
    if (dot > bestDot) {
      bestDot = dot;
      best = i;
    }
  }
  return best;
}

ArmPostureFrame encode_arm_posture(const Skeleton& skeleton, double timestamp) {
  const BodyFrame frame = build_body_frame(skeleton);

  const Vec3& ls = require_joint(skeleton, joints::kLeftShoulder);
  const Vec3& le = require_joint(skeleton, joints::kLeftElbow);
  const Vec3& lw = require_joint(skeleton, joints::kLeftWrist);
  const Vec3& rs = require_joint(skeleton, joints::kRightShoulder);
  const Vec3& re = require_joint(skeleton, joints::kRightElbow);
  const Vec3& rw = require_joint(skeleton, joints::kRightWrist);

  ArmPostureFrame out;
  out.timestamp = timestamp;
  out.dirs[0] = quantize_direction(segment_direction(ls, le, "left upper arm"), frame);
  out.dirs[1] = quantize_direction(segment_direction(le, lw, "left forearm"), frame);
  out.dirs[2] = quantize_direction(segment_direction(rs, re, "right upper arm"), frame);
  out.dirs[3] = quantize_direction(segment_direction(re, rw, "right forearm"), frame);
  out.valid = true;
  return out;
}

bool ValidityTable::allows(int side, int upperArm, int forearm) const {
  const auto& pairs = side == 0 ? left : right;
  return pairs.count({upperArm, forearm}) > 0;
}

ValidityTable ValidityTable::default_table() {
  // A pair is impossible when the forearm folds back along the upper arm:
  // angle between (shoulder - elbow) and (wrist - elbow) below 20 degrees.
  static const ValidityTable table = [] {
    ValidityTable t;
    const auto& dirs = direction_table();
    const double cosLimit = std::cos(20.0 * std::numbers::pi / 180.0);
    for (int u = 0; u < 26; ++u) {
      for (int f = 0; f < 26; ++f) {
        const double c = (-dirs[u]).dot(dirs[f]);
        if (c < cosLimit) {
          t.left.insert({u, f});
          t.right.insert({u, f});
        }
      }
    }
    return t;
  }();
  return table;
}

ValidityTable ValidityTable::from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::MalformedDocument, std::string("validity table: ") + e.what());
  }
  ValidityTable t;
  const auto read_side = [&](const char* key, std::set<std::pair<int, int>>& out) {
    if (!doc.contains(key)) return;
    for (const auto& pair : doc.at(key)) {
      if (!pair.is_array() || pair.size() != 2) {
        fail(ErrorCode::SchemaViolation, "validity table entries must be [upperArm, forearm]");
      }
      const int u = pair.at(0).get<int>();
      const int f = pair.at(1).get<int>();
      if (u < 0 || u > 25 || f < 0 || f > 25) {
        fail(ErrorCode::SchemaViolation, "validity table index out of range");
      }
      out.insert({u, f});
    }
  };
  read_side("left", t.left);
  read_side("right", t.right);
  return t;
}

std::string ValidityTable::to_json_text() const {
  nlohmann::ordered_json doc;
  const auto dump_side = [](const std::set<std::pair<int, int>>& pairs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [u, f] : pairs) arr.push_back({u, f});
    return arr;
  };
  doc["left"] = dump_side(left);
  doc["right"] = dump_side(right);
  return doc.dump(2) + "\n";
}

std::vector<ArmPostureFrame> filter_invalid(const std::vector<ArmPostureFrame>& timeline,
                                            const ValidityTable& table) {
  std::vector<ArmPostureFrame> out = timeline;
  const auto frame_ok = [&](const ArmPostureFrame& f) {
    return table.allows(0, f.dirs[0], f.dirs[1]) && table.allows(1, f.dirs[2], f.dirs[3]);
  };

  const ArmPostureFrame* lastValid = nullptr;
  std::size_t firstValid = out.size();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (frame_ok(timeline[i])) {
      firstValid = i;
      break;
    }
  }
  if (firstValid == out.size()) {
    fail(ErrorCode::AllFramesInvalid, "no frame passes the validity table");
  }

  for (std::size_t i = 0; i < out.size(); ++i) {
    if (frame_ok(timeline[i])) {
      lastValid = &timeline[i];
      continue;
    }
    const ArmPostureFrame& donor = lastValid ? *lastValid : timeline[firstValid];
    out[i].dirs = donor.dirs;
    out[i].valid = false;
  }
  return out;
}

}  // namespace gmr
