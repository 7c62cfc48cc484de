#include "gmrtask/serialization.hpp"

#include <set>

#include <nlohmann/json.hpp>

#include "gmrtask/errors.hpp"

namespace gmr {

namespace {

using Json = nlohmann::ordered_json;

Json vec3_to_json(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }
Json vec2_to_json(const Vec2& v) { return Json::array({v.x(), v.y()}); }

Vec3 vec3_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() ||
      !j[2].is_number()) {
    fail(ErrorCode::SchemaViolation, what + " must be a numeric [x, y, z] triple");
  }
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

Vec2 vec2_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(ErrorCode::SchemaViolation, what + " must be a numeric [x, y] pair");
  }
  return Vec2(j[0].get<double>(), j[1].get<double>());
}

void require_keys(const Json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      fail(ErrorCode::SchemaViolation, where + ": unknown key '" + key + "'");
    }
  }
}

const Json& require_field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) {
    fail(ErrorCode::SchemaViolation, where + ": missing key '" + key + "'");
  }
  return obj.at(key);
}

std::string require_string(const Json& obj, const char* key, const std::string& where) {
  const Json& v = require_field(obj, key, where);
  if (!v.is_string()) fail(ErrorCode::SchemaViolation, where + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

double require_number(const Json& obj, const char* key, const std::string& where) {
  const Json& v = require_field(obj, key, where);
  if (!v.is_number()) fail(ErrorCode::SchemaViolation, where + ": '" + key + "' must be a number");
  return v.get<double>();
}

Json position_to_json(const PositionParams& position) {
  Json j;
  if (const auto* wp = std::get_if<Waypoints>(&position)) {
    j["type"] = "waypoints";
    Json pts = Json::array();
    for (const auto& p : wp->points) pts.push_back(vec3_to_json(p));
    j["points"] = std::move(pts);
  } else if (const auto* plane = std::get_if<PlaneTrajectory>(&position)) {
    j["type"] = "plane";
    j["origin"] = vec3_to_json(plane->origin);
    j["normal"] = vec3_to_json(plane->normal);
    Json path = Json::array();
    for (const auto& p : plane->path2d) path.push_back(vec2_to_json(p));
    j["path2d"] = std::move(path);
  } else if (const auto* line = std::get_if<LineTrajectory>(&position)) {
    j["type"] = "line";
    j["origin"] = vec3_to_json(line->origin);
    j["direction"] = vec3_to_json(line->direction);
    j["displacements"] = line->displacements;
  } else {
    const auto& circle = std::get<CircleTrajectory>(position);
    j["type"] = "circle";
    j["center"] = vec3_to_json(circle.center);
    j["axis"] = vec3_to_json(circle.axis);
    j["radius"] = circle.radius;
    j["start_angle"] = circle.startAngle;
    j["end_angle"] = circle.endAngle;
  }
  return j;
}

PositionParams position_from_json(const Json& j, const std::string& where) {
  const std::string type = require_string(j, "type", where);
  if (type == "waypoints") {
    require_keys(j, {"type", "points"}, where);
    Waypoints wp;
    for (const auto& p : require_field(j, "points", where)) {
      wp.points.push_back(vec3_from_json(p, where + ": waypoint"));
    }
    return wp;
  }
  if (type == "plane") {
    require_keys(j, {"type", "origin", "normal", "path2d"}, where);
    PlaneTrajectory plane;
    plane.origin = vec3_from_json(require_field(j, "origin", where), where + ": origin");
    plane.normal = vec3_from_json(require_field(j, "normal", where), where + ": normal");
    for (const auto& p : require_field(j, "path2d", where)) {
      plane.path2d.push_back(vec2_from_json(p, where + ": path2d point"));
    }
    return plane;
  }
  if (type == "line") {
    require_keys(j, {"type", "origin", "direction", "displacements"}, where);
    LineTrajectory line;
    line.origin = vec3_from_json(require_field(j, "origin", where), where + ": origin");
    line.direction = vec3_from_json(require_field(j, "direction", where), where + ": direction");
    for (const auto& d : require_field(j, "displacements", where)) {
      if (!d.is_number()) fail(ErrorCode::SchemaViolation, where + ": displacement must be a number");
      line.displacements.push_back(d.get<double>());
    }
    return line;
  }
  if (type == "circle") {
    require_keys(j, {"type", "center", "axis", "radius", "start_angle", "end_angle"}, where);
    CircleTrajectory circle;
    circle.center = vec3_from_json(require_field(j, "center", where), where + ": center");
    circle.axis = vec3_from_json(require_field(j, "axis", where), where + ": axis");
    circle.radius = require_number(j, "radius", where);
    circle.startAngle = require_number(j, "start_angle", where);
    circle.endAngle = require_number(j, "end_angle", where);
    return circle;
  }
  fail(ErrorCode::SchemaViolation, where + ": unknown position type '" + type + "'");
}

Json params_to_json(const SkillParams& params) {
  Json j;
  if (params.position) j["position"] = position_to_json(*params.position);
  if (params.force) {
    Json f;
    f["axis"] = vec3_to_json(params.force->axis);
    if (params.force->secondAxis) f["axis2"] = vec3_to_json(*params.force->secondAxis);
    f["magnitude"] = params.force->magnitude;
    f["role"] = to_string(params.force->role);
    j["force"] = std::move(f);
  }
  if (params.grasp) {
    Json g;
    g["object_name"] = params.grasp->objectName;
    g["object_attribute"] = params.grasp->objectAttribute;
    g["grasp_type"] = params.grasp->graspType;
    g["hand"] = to_string(params.grasp->hand);
    g["grasp_location"] = params.grasp->graspLocation;
    j["grasp"] = std::move(g);
  }
  if (params.release) {
    Json r;
    r["release_location"] = params.release->releaseLocation;
    j["release"] = std::move(r);
  }
  Json postures = Json::array();
  for (const auto& frame : params.postures) {
    Json p;
    p["t"] = frame.timestamp;
    p["dirs"] = frame.dirs;
    p["valid"] = frame.valid;
    postures.push_back(std::move(p));
  }
  j["postures"] = std::move(postures);
  return j;
}

SkillParams params_from_json(const Json& j, const std::string& where) {
  require_keys(j, {"position", "force", "grasp", "release", "postures"}, where);
  SkillParams params;
  if (j.contains("position")) {
    params.position = position_from_json(j.at("position"), where + ": position");
  }
  if (j.contains("force")) {
    const Json& f = j.at("force");
    require_keys(f, {"axis", "axis2", "magnitude", "role"}, where + ": force");
    ForceParams force;
    force.axis = vec3_from_json(require_field(f, "axis", where), where + ": force axis");
    if (f.contains("axis2")) {
      force.secondAxis = vec3_from_json(f.at("axis2"), where + ": force axis2");
    }
    force.magnitude = require_number(f, "magnitude", where + ": force");
    const std::string role = require_string(f, "role", where + ": force");
    const auto parsed = parse_force_role(role);
    if (!parsed) fail(ErrorCode::SchemaViolation, where + ": unknown force role '" + role + "'");
    force.role = *parsed;
    params.force = force;
  }
  if (j.contains("grasp")) {
    const Json& g = j.at("grasp");
    require_keys(g, {"object_name", "object_attribute", "grasp_type", "hand", "grasp_location"},
                 where + ": grasp");
    GraspParams grasp;
    grasp.objectName = require_string(g, "object_name", where + ": grasp");
    grasp.objectAttribute = require_string(g, "object_attribute", where + ": grasp");
    grasp.graspType = require_string(g, "grasp_type", where + ": grasp");
    const std::string hand = require_string(g, "hand", where + ": grasp");
    const auto parsedHand = parse_hand(hand);
    if (!parsedHand) fail(ErrorCode::SchemaViolation, where + ": unknown hand '" + hand + "'");
    grasp.hand = *parsedHand;
    grasp.graspLocation = require_string(g, "grasp_location", where + ": grasp");
    params.grasp = grasp;
  }
  if (j.contains("release")) {
    const Json& r = j.at("release");
    require_keys(r, {"release_location"}, where + ": release");
    ReleaseParams release;
    release.releaseLocation = require_string(r, "release_location", where + ": release");
    params.release = release;
  }
  if (j.contains("postures")) {
    for (const auto& p : j.at("postures")) {
      require_keys(p, {"t", "dirs", "valid"}, where + ": posture frame");
      ArmPostureFrame frame;
      frame.timestamp = require_number(p, "t", where + ": posture frame");
      const Json& dirs = require_field(p, "dirs", where + ": posture frame");
      if (!dirs.is_array() || dirs.size() != 4) {
        fail(ErrorCode::SchemaViolation, where + ": posture dirs must have 4 entries");
      }
      for (int k = 0; k < 4; ++k) {
        const int idx = dirs[k].get<int>();
        if (idx < 0 || idx > 25) {
          fail(ErrorCode::SchemaViolation, where + ": posture direction index out of range");
        }
        frame.dirs[k] = idx;
      }
      const Json& valid = require_field(p, "valid", where + ": posture frame");
      if (!valid.is_boolean()) {
        fail(ErrorCode::SchemaViolation, where + ": posture 'valid' must be a boolean");
      }
      frame.valid = valid.get<bool>();
      params.postures.push_back(frame);
    }
  }
  return params;
}

Json operation_to_json(const GmrOperation& op) {
  Json tasks = Json::array();
  for (const auto& model : op.models) {
    Json t;
    t["task"] = to_label(model.task);
    t["interval"] = Json::array({model.startTime, model.endTime});
    t["params"] = params_to_json(model.params);
    tasks.push_back(std::move(t));
  }
  Json j;
  j["tasks"] = std::move(tasks);
  return j;
}

GmrOperation operation_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(ErrorCode::SchemaViolation, where + " must be an object");
  require_keys(j, {"tasks"}, where);
  const Json& tasks = require_field(j, "tasks", where);
  if (!tasks.is_array()) fail(ErrorCode::SchemaViolation, where + ": 'tasks' must be an array");

  GmrOperation op;
  std::size_t index = 0;
  for (const auto& t : tasks) {
    const std::string taskWhere = where + ": task " + std::to_string(index);
    if (!t.is_object()) fail(ErrorCode::SchemaViolation, taskWhere + " must be an object");
    require_keys(t, {"task", "interval", "params"}, taskWhere);
    TaskModel model;
    model.task = parse_task_label(require_string(t, "task", taskWhere));
    const Json& interval = require_field(t, "interval", taskWhere);
    if (!interval.is_array() || interval.size() != 2 || !interval[0].is_number() ||
        !interval[1].is_number()) {
      fail(ErrorCode::SchemaViolation, taskWhere + ": interval must be [start, end]");
    }
    model.startTime = interval[0].get<double>();
    model.endTime = interval[1].get<double>();
    model.params = params_from_json(require_field(t, "params", taskWhere), taskWhere);
    op.models.push_back(std::move(model));
    ++index;
  }

  const ChainCheck chain = validate_operation(op);
  if (!chain.ok) {
    const ErrorCode code = chain.reason == ChainViolation::NotGraspFirst ? ErrorCode::NotGraspFirst
                           : chain.reason == ChainViolation::NotReleaseLast
                               ? ErrorCode::NotReleaseLast
                           : chain.reason == ChainViolation::ChainBreak ? ErrorCode::ChainBreak
                                                                        : ErrorCode::NonCanonicalTask;
    fail(code, where + ": task " + std::to_string(chain.index) + ": " +
                   to_string(chain.reason));
  }
  return op;
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::MalformedDocument, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string serialize_document(const TaskModelDocument& doc) {
  Json operations = Json::array();
  for (const auto& op : doc.operations) {
    const ChainCheck chain = validate_operation(op);
    if (!chain.ok) {
      fail(ErrorCode::SchemaViolation,
           std::string("refusing to serialize an invalid operation: ") + to_string(chain.reason));
    }
    operations.push_back(operation_to_json(op));
  }
  Json j;
  j["operations"] = std::move(operations);
  return j.dump(2) + "\n";
}

TaskModelDocument deserialize_document(const std::string& text) {
  const Json j = parse_text(text);
  if (!j.is_object()) fail(ErrorCode::SchemaViolation, "document must be an object");
  require_keys(j, {"operations"}, "document");
  const Json& operations = require_field(j, "operations", "document");
  if (!operations.is_array()) {
    fail(ErrorCode::SchemaViolation, "document: 'operations' must be an array");
  }
  TaskModelDocument doc;
  std::size_t index = 0;
  for (const auto& op : operations) {
    doc.operations.push_back(operation_from_json(op, "operation " + std::to_string(index)));
    ++index;
  }
  return doc;
}

std::string serialize_operation(const GmrOperation& op) {
  return serialize_document(TaskModelDocument{{op}});
}

GmrOperation deserialize_operation(const std::string& text) {
  TaskModelDocument doc = deserialize_document(text);
  if (doc.operations.size() != 1) {
    fail(ErrorCode::SchemaViolation, "expected exactly one operation");
  }
  return std::move(doc.operations.front());
}

}  // namespace gmr
