#include "gmrtask/skill_params.hpp"

#include <algorithm>

#include "gmrtask/errors.hpp"

namespace gmr {

const char* to_string(Hand hand) {
  return hand == Hand::Left ? "left" : "right";
}

std::optional<Hand> parse_hand(const std::string& s) {
  if (s == "left") return Hand::Left;
  if (s == "right") return Hand::Right;
  return std::nullopt;
}

std::vector<Task> GmrOperation::tasks() const {
  std::vector<Task> out;
  out.reserve(models.size());
  for (const auto& m : models) out.push_back(m.task);
  return out;
}

namespace {

void require_unit(const Vec3& v, const std::string& what) {
  if (!is_unit(v)) {
    fail(ErrorCode::SchemaViolation, what + " must be unit length within 1e-9");
  }
}

PositionForm form_of(const PositionParams& p) {
  if (std::holds_alternative<Waypoints>(p)) return PositionForm::Waypoints;
  if (std::holds_alternative<PlaneTrajectory>(p)) return PositionForm::PlanePath;
  if (std::holds_alternative<LineTrajectory>(p)) return PositionForm::LineDisplacement;
  return PositionForm::CircleArc;
}

}  // namespace

void check_params(const Task& task, const SkillParams& params) {
  const ParamSchema schema = required_params(task);
  const std::string label = to_label(task);

  if (schema.grasp != params.grasp.has_value()) {
    fail(ErrorCode::SchemaViolation, label + ": grasp parameter block mismatch");
  }
  if (schema.release != params.release.has_value()) {
    fail(ErrorCode::SchemaViolation, label + ": release parameter block mismatch");
  }
  if ((schema.position != PositionForm::None) != params.position.has_value()) {
    fail(ErrorCode::SchemaViolation, label + ": position parameter block mismatch");
  }
  if (schema.force != params.force.has_value()) {
    fail(ErrorCode::SchemaViolation, label + ": force parameter block mismatch");
  }

  if (params.position) {
    if (form_of(*params.position) != schema.position) {
      fail(ErrorCode::SchemaViolation, label + ": wrong position parameter form");
    }
    if (const auto* plane = std::get_if<PlaneTrajectory>(&*params.position)) {
      require_unit(plane->normal, label + ": plane normal");
    } else if (const auto* line = std::get_if<LineTrajectory>(&*params.position)) {
      require_unit(line->direction, label + ": line direction");
    } else if (const auto* circle = std::get_if<CircleTrajectory>(&*params.position)) {
      require_unit(circle->axis, label + ": circle axis");
      if (!(circle->radius > 0.0)) {
        fail(ErrorCode::SchemaViolation, label + ": circle radius must be positive");
      }
    }
  }

  if (params.force) {
    const ForceParams& f = *params.force;
    if (f.role != schema.forceRole) {
      fail(ErrorCode::SchemaViolation, label + ": wrong force role");
    }
    require_unit(f.axis, label + ": force axis");
    if (f.secondAxis.has_value() != (f.role == ForceRole::OrthogonalPlane)) {
      fail(ErrorCode::SchemaViolation,
           label + ": second force axis is required exactly for the orthogonal-plane role");
    }
    if (f.secondAxis) require_unit(*f.secondAxis, label + ": second force axis");
    if (!(f.magnitude > 0.0)) {
      fail(ErrorCode::SchemaViolation, label + ": force magnitude must be positive");
    }
  }
}

ChainCheck validate_operation(const GmrOperation& op) {
  // Chain first: a mislabeled sequence should surface as a chain violation,
  // not as a parameter mismatch against the wrong label.
  const auto tasks = op.tasks();
  const ChainCheck chain = validate_chain(tasks);
  if (!chain.ok) return chain;
  for (const auto& model : op.models) {
    if (model.startTime > model.endTime) {
      fail(ErrorCode::SchemaViolation,
           to_label(model.task) + ": source interval start exceeds end");
    }
    check_params(model.task, model.params);
  }
  return chain;
}

GmrOperation attach_postures(const GmrOperation& op,
                             const std::vector<ArmPostureFrame>& timeline) {
  GmrOperation out = op;
  for (std::size_t i = 0; i < out.models.size(); ++i) {
    TaskModel& model = out.models[i];
    model.params.postures.clear();
    for (const auto& frame : timeline) {
      if (frame.timestamp >= model.startTime && frame.timestamp <= model.endTime) {
        model.params.postures.push_back(frame);
      }
    }
    if (model.params.postures.empty()) {
      fail(ErrorCode::CoverageGap,
           "task " + std::to_string(i) + " (" + to_label(model.task) +
               "): no posture frames inside its source interval");
    }
  }
  return out;
}

}  // namespace gmr
