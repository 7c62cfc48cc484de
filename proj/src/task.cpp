#include "gmrtask/task.hpp"

#include <array>
#include <utility>

#include "gmrtask/errors.hpp"

namespace gmr {

namespace {

// The ten canonical transitions, in task-set listing order.
constexpr std::array<std::pair<ContactState, ContactState>, 10> kTransitions{{
    {ContactState::NC, ContactState::NC},
    {ContactState::NC, ContactState::PC},
    {ContactState::PC, ContactState::NC},
    {ContactState::PC, ContactState::PC},
    {ContactState::OP, ContactState::PR},
    {ContactState::PR, ContactState::OP},
    {ContactState::PR, ContactState::PR},
    {ContactState::OR, ContactState::RV},
    {ContactState::RV, ContactState::OR},
    {ContactState::RV, ContactState::RV},
}};

}  // namespace

bool is_canonical_transition(ContactState from, ContactState to) {
  for (const auto& [f, t] : kTransitions) {
    if (f == from && t == to) return true;
  }
  return false;
}

Task Task::manipulation(ContactState from, ContactState to) {
  if (!is_canonical_transition(from, to)) {
    fail(ErrorCode::NonCanonicalTask,
         std::string("transition ") + gmr::to_string(from) + "-" +
             gmr::to_string(to) + " is not in the canonical task set");
  }
  return raw_manipulation(from, to);
}

const std::vector<Task>& canonical_task_set() {
  static const std::vector<Task> set = [] {
    std::vector<Task> tasks;
    tasks.push_back(Task::grasp());
    tasks.push_back(Task::release());
    for (const auto& [f, t] : kTransitions) tasks.push_back(Task::raw_manipulation(f, t));
    return tasks;
  }();
  return set;
}

std::string to_label(const Task& task) {
  switch (task.kind) {
    case TaskKind::Grasp: return "grasp";
    case TaskKind::Release: return "release";
    case TaskKind::Manipulation:
      return std::string(to_string(task.from)) + "-" + to_string(task.to);
  }
  return "?";
}

Task parse_task_label(const std::string& label) {
  if (label == "grasp") return Task::grasp();
  if (label == "release") return Task::release();
  const auto dash = label.find('-');
  if (dash == std::string::npos) {
    fail(ErrorCode::MalformedLabel, "unrecognized task label '" + label + "'");
  }
  const auto from = parse_contact_state(label.substr(0, dash));
  const auto to = parse_contact_state(label.substr(dash + 1));
  if (!from || !to) {
    fail(ErrorCode::MalformedLabel, "unrecognized task label '" + label + "'");
  }
  return Task::manipulation(*from, *to);
}

ControlClass classify_control(const Task& task) {
  if (!task.is_manipulation()) return ControlClass::GraspRelease;
  if (task.from == task.to) {
    return task.from == ContactState::NC ? ControlClass::PositionGoal
                                         : ControlClass::HybridGoal;
  }
  return ControlClass::ForceGoal;
}

const char* to_string(ControlClass c) {
  switch (c) {
    case ControlClass::PositionGoal: return "position-goal";
    case ControlClass::ForceGoal: return "force-goal";
    case ControlClass::HybridGoal: return "hybrid-goal";
    case ControlClass::GraspRelease: return "grasp-release";
  }
  return "?";
}

const char* to_string(ForceRole role) {
  switch (role) {
    case ForceRole::DetachingAxis: return "detaching-axis";
    case ForceRole::AttachingAxis: return "attaching-axis";
    case ForceRole::SurfaceNormal: return "surface-normal";
    case ForceRole::OrthogonalPlane: return "orthogonal-plane";
    case ForceRole::RadialToCenter: return "radial-to-center";
  }
  return "?";
}

std::optional<ForceRole> parse_force_role(const std::string& s) {
  for (ForceRole r : {ForceRole::DetachingAxis, ForceRole::AttachingAxis,
                      ForceRole::SurfaceNormal, ForceRole::OrthogonalPlane,
                      ForceRole::RadialToCenter}) {
    if (s == to_string(r)) return r;
  }
  return std::nullopt;
}

ParamSchema required_params(const Task& task) {
  ParamSchema schema;
  if (task.kind == TaskKind::Grasp) {
    schema.grasp = true;
    return schema;
  }
  if (task.kind == TaskKind::Release) {
    schema.release = true;
    return schema;
  }
  const ContactState f = task.from;
  const ContactState t = task.to;
  if (f == ContactState::NC && t == ContactState::NC) {
    schema.position = PositionForm::Waypoints;
    return schema;
  }
  if (f == t) {
    schema.force = true;
    switch (f) {
      case ContactState::PC:
        schema.position = PositionForm::PlanePath;
        schema.forceRole = ForceRole::SurfaceNormal;
        break;
      case ContactState::PR:
        schema.position = PositionForm::LineDisplacement;
        schema.forceRole = ForceRole::OrthogonalPlane;
        break;
      case ContactState::RV:
        schema.position = PositionForm::CircleArc;
        schema.forceRole = ForceRole::RadialToCenter;
        break;
      default:
        fail(ErrorCode::NonCanonicalTask, "no parameter schema for " + to_label(task));
    }
    return schema;
  }
  // Contact-transition tasks carry only a force axis. Role labels follow the
  // task-set table; they have no behavioral meaning beyond naming.
  schema.force = true;
  const bool detaching = (f == ContactState::NC && t == ContactState::PC) ||
                         (f == ContactState::OP && t == ContactState::PR) ||
                         (f == ContactState::OR && t == ContactState::RV);
  const bool attaching = (f == ContactState::PC && t == ContactState::NC) ||
                         (f == ContactState::PR && t == ContactState::OP) ||
                         (f == ContactState::RV && t == ContactState::OR);
  if (!detaching && !attaching) {
    fail(ErrorCode::NonCanonicalTask, "no parameter schema for " + to_label(task));
  }
  schema.forceRole = detaching ? ForceRole::DetachingAxis : ForceRole::AttachingAxis;
  return schema;
}

const char* to_string(ChainViolation v) {
  switch (v) {
    case ChainViolation::NotGraspFirst: return "NotGraspFirst";
    case ChainViolation::NotReleaseLast: return "NotReleaseLast";
    case ChainViolation::ChainBreak: return "ChainBreak";
    case ChainViolation::NonCanonicalTask: return "NonCanonicalTask";
  }
  return "?";
}

ChainCheck validate_chain(std::span<const Task> seq) {
  if (seq.empty() || seq.front().kind != TaskKind::Grasp) {
    return {false, 0, ChainViolation::NotGraspFirst};
  }
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    const Task& cur = seq[i];
    if (!cur.is_manipulation() || !is_canonical_transition(cur.from, cur.to)) {
      return {false, i, ChainViolation::NonCanonicalTask};
    }
    const Task& prev = seq[i - 1];
    if (prev.is_manipulation() && prev.to != cur.from) {
      return {false, i, ChainViolation::ChainBreak};
    }
  }
  if (seq.size() < 2 || seq.back().kind != TaskKind::Release) {
    return {false, seq.size() - 1, ChainViolation::NotReleaseLast};
  }
  return {};
}

}  // namespace gmr
