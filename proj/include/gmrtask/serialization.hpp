#pragma once

#include <string>
#include <vector>

#include "gmrtask/skill_params.hpp"

namespace gmr {

/// A task-model document: one or more operations in demonstration order.
struct TaskModelDocument {
  std::vector<GmrOperation> operations;
  friend bool operator==(const TaskModelDocument&, const TaskModelDocument&) = default;
};

/// Canonical JSON text (UTF-8, fixed key order, 2-space indent, trailing
/// newline). Numbers are emitted with enough digits to round-trip exactly.
/// Every operation is validated before writing; throws on invalid input.
std::string serialize_document(const TaskModelDocument& doc);

/// Strict parse: unknown keys, missing blocks, non-unit directions and other
/// schema problems throw SchemaViolation; unparseable text throws
/// MalformedDocument; bad task labels throw MalformedLabel or
/// NonCanonicalTask; chain violations throw the corresponding chain code.
TaskModelDocument deserialize_document(const std::string& text);

std::string serialize_operation(const GmrOperation& op);
GmrOperation deserialize_operation(const std::string& text);

}  // namespace gmr
