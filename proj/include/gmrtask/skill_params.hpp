#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gmrtask/geometry.hpp"
#include "gmrtask/posture_types.hpp"
#include "gmrtask/task.hpp"

namespace gmr {

/// Free-space trajectory, spatially discretized. Meters, world frame.
struct Waypoints {
  std::vector<Vec3> points;
  friend bool operator==(const Waypoints&, const Waypoints&) = default;
};

/// 2D trajectory on a plane. path2d coordinates are in the basis
/// basis_for_axis(normal), relative to origin.
struct PlaneTrajectory {
  Vec3 origin = Vec3::Zero();
  Vec3 normal = Vec3::UnitZ();
  std::vector<Vec2> path2d;
  friend bool operator==(const PlaneTrajectory&, const PlaneTrajectory&) = default;
};

/// 1D trajectory along a line: signed distances from origin along direction.
struct LineTrajectory {
  Vec3 origin = Vec3::Zero();
  Vec3 direction = Vec3::UnitX();
  std::vector<double> displacements;
  friend bool operator==(const LineTrajectory&, const LineTrajectory&) = default;
};

/// Arc about an axis. Angles are measured in the basis basis_for_axis(axis):
/// point(a) = center + radius * (cos(a) e1 + sin(a) e2). Traversal from
/// startAngle to endAngle is counterclockwise about the axis.
struct CircleTrajectory {
  Vec3 center = Vec3::Zero();
  Vec3 axis = Vec3::UnitZ();
  double radius = 0.0;
  double startAngle = 0.0;
  double endAngle = 0.0;
  friend bool operator==(const CircleTrajectory&, const CircleTrajectory&) = default;
};

using PositionParams = std::variant<Waypoints, PlaneTrajectory, LineTrajectory, CircleTrajectory>;

/// Force direction(s) and default magnitude. `secondAxis` is present only
/// for the OrthogonalPlane role, where two basis vectors span the plane
/// orthogonal to the motion.
struct ForceParams {
  Vec3 axis = Vec3::UnitZ();
  std::optional<Vec3> secondAxis;
  double magnitude = 0.0;  // newtons
  ForceRole role = ForceRole::DetachingAxis;
  friend bool operator==(const ForceParams&, const ForceParams&) = default;
};

enum class Hand { Left, Right };
const char* to_string(Hand hand);
std::optional<Hand> parse_hand(const std::string& s);

/// Grasp parameters observable from the demonstration. The grasp position
/// itself is resolved at execution time and is deliberately absent.
struct GraspParams {
  std::string objectName;
  std::string objectAttribute;
  std::string graspType;
  Hand hand = Hand::Right;
  std::string graspLocation;
  friend bool operator==(const GraspParams&, const GraspParams&) = default;
};

struct ReleaseParams {
  std::string releaseLocation;
  friend bool operator==(const ReleaseParams&, const ReleaseParams&) = default;
};

struct SkillParams {
  std::optional<PositionParams> position;
  std::optional<ForceParams> force;
  std::optional<GraspParams> grasp;
  std::optional<ReleaseParams> release;
  std::vector<ArmPostureFrame> postures;
  friend bool operator==(const SkillParams&, const SkillParams&) = default;
};

/// A task paired with its skill parameters and the demonstration interval
/// it was extracted from.
struct TaskModel {
  Task task;
  SkillParams params;
  double startTime = 0.0;
  double endTime = 0.0;
  friend bool operator==(const TaskModel&, const TaskModel&) = default;
};

/// A grasp-manipulation-release operation: grasp first, release last,
/// chained manipulation tasks in between.
struct GmrOperation {
  std::vector<TaskModel> models;

  std::vector<Task> tasks() const;
  friend bool operator==(const GmrOperation&, const GmrOperation&) = default;
};

/// Verifies that parameter-block presence matches required_params(task)
/// exactly, direction fields are unit within 1e-9, magnitudes are positive,
/// and the position form matches the schema. Throws SchemaViolation.
void check_params(const Task& task, const SkillParams& params);

/// Chain check plus per-task schema and interval checks. Throws on schema
/// problems; returns the chain result.
ChainCheck validate_operation(const GmrOperation& op);

/// Attaches to each task model the subsequence of posture frames whose
/// timestamp falls inside its source interval (inclusive). Throws
/// CoverageGap if any task interval contains no frames.
GmrOperation attach_postures(const GmrOperation& op,
                             const std::vector<ArmPostureFrame>& timeline);

}  // namespace gmr
