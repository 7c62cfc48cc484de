#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gmrtask/contact_state.hpp"

namespace gmr {

enum class TaskKind { Grasp, Release, Manipulation };

/// A grasp/release event or a contact-state transition of the target object.
struct Task {
  TaskKind kind = TaskKind::Grasp;
  ContactState from = ContactState::NC;  // Manipulation only
  ContactState to = ContactState::NC;    // Manipulation only

  static Task grasp() { return Task{TaskKind::Grasp, {}, {}}; }
  static Task release() { return Task{TaskKind::Release, {}, {}}; }
  /// Canonical transition; throws Error{NonCanonicalTask} otherwise.
  static Task manipulation(ContactState from, ContactState to);
  /// Unchecked transition, for paths that validate later.
  static Task raw_manipulation(ContactState from, ContactState to) {
    return Task{TaskKind::Manipulation, from, to};
  }

  bool is_manipulation() const { return kind == TaskKind::Manipulation; }
  friend bool operator==(const Task&, const Task&) = default;
};

/// "grasp", "release", or "XX-YY".
std::string to_label(const Task& task);

/// Inverse of to_label. Throws MalformedLabel for unparseable text and
/// NonCanonicalTask for a well-formed pair outside the canonical set.
Task parse_task_label(const std::string& label);

bool is_canonical_transition(ContactState from, ContactState to);

/// The 12-element task set: grasp, release, and the ten canonical
/// contact-state transitions.
const std::vector<Task>& canonical_task_set();

enum class ControlClass { PositionGoal, ForceGoal, HybridGoal, GraspRelease };
const char* to_string(ControlClass c);

/// Control class required to achieve the task: a positional shift, a force,
/// or both.
ControlClass classify_control(const Task& task);

enum class ForceRole {
  DetachingAxis,
  AttachingAxis,
  SurfaceNormal,
  OrthogonalPlane,
  RadialToCenter,
};
const char* to_string(ForceRole role);
std::optional<ForceRole> parse_force_role(const std::string& s);

enum class PositionForm { None, Waypoints, PlanePath, LineDisplacement, CircleArc };

/// Which parameter blocks a task carries.
struct ParamSchema {
  PositionForm position = PositionForm::None;
  bool force = false;
  ForceRole forceRole = ForceRole::DetachingAxis;
  bool grasp = false;
  bool release = false;
};

/// Per-task skill-parameter schema. Task must be canonical.
ParamSchema required_params(const Task& task);

enum class ChainViolation { NotGraspFirst, NotReleaseLast, ChainBreak, NonCanonicalTask };
const char* to_string(ChainViolation v);

struct ChainCheck {
  bool ok = true;
  std::size_t index = 0;
  ChainViolation reason = ChainViolation::NotGraspFirst;
  explicit operator bool() const { return ok; }
};

/// Grammar check over a task sequence: grasp first, release last, canonical
/// manipulations in between, adjacent transitions chained (to_i == from_i+1).
/// Reports the first offending index.
ChainCheck validate_chain(std::span<const Task> seq);

}  // namespace gmr
