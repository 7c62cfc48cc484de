#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "gmrtask/errors.hpp"
#include "gmrtask/serialization.hpp"
#include "gmrtask/skill_params.hpp"
#include "gmrtask/task.hpp"
#include "support/op_generator.hpp"

using namespace gmr;

namespace {

// Independent grammar checker, written from the rules rather than sharing the
// implementation's tables: grasp first, release last, interior tasks drawn
// from its own transition list, adjacent transitions chained.
const std::set<std::string> kOracleTransitions{
    "NC-NC", "NC-PC", "PC-NC", "PC-PC", "OP-PR",
    "PR-OP", "PR-PR", "OR-RV", "RV-OR", "RV-RV"};

bool oracle_chain_ok(const std::vector<Task>& seq) {
  if (seq.size() < 2) return false;
  if (to_label(seq.front()) != "grasp") return false;
  if (to_label(seq.back()) != "release") return false;
  std::string prevTo;
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    const std::string label = to_label(seq[i]);
    if (!kOracleTransitions.count(label)) return false;
    const std::string from = label.substr(0, 2);
    if (!prevTo.empty() && prevTo != from) return false;
    prevTo = label.substr(3, 2);
  }
  return true;
}

}  // namespace

TEST_CASE("canonical task set") {
  const auto& set = canonical_task_set();
  CHECK(set.size() == 12);

  auto contains = [&](const std::string& label) {
    for (const Task& t : set) {
      if (to_label(t) == label) return true;
    }
    return false;
  };
  CHECK(contains("grasp"));
  CHECK(contains("release"));
  CHECK(contains("PC-PC"));
  CHECK(contains("OR-RV"));
  CHECK_FALSE(contains("NC-RV"));

  // Of all 36 ordered state pairs exactly 10 are canonical transitions.
  int canonical = 0;
  for (ContactState f : kAllContactStates) {
    for (ContactState t : kAllContactStates) {
      if (is_canonical_transition(f, t)) ++canonical;
    }
  }
  CHECK(canonical == 10);
}

TEST_CASE("parse_task_label") {
  CHECK(parse_task_label("grasp") == Task::grasp());
  CHECK(parse_task_label("release") == Task::release());
  CHECK(parse_task_label("OR-RV") ==
        Task::manipulation(ContactState::OR, ContactState::RV));

  CHECK_THROWS_WITH_AS(parse_task_label("NC-RV"), doctest::Contains("canonical"), Error);
  try {
    parse_task_label("NC-RV");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonCanonicalTask);
  }
  try {
    parse_task_label("gibberish");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedLabel);
  }
  try {
    parse_task_label("NC_PC");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedLabel);
  }
}

TEST_CASE("classify_control") {
  CHECK(classify_control(parse_task_label("NC-NC")) == ControlClass::PositionGoal);
  CHECK(classify_control(parse_task_label("NC-PC")) == ControlClass::ForceGoal);
  CHECK(classify_control(parse_task_label("PC-PC")) == ControlClass::HybridGoal);
  CHECK(classify_control(Task::grasp()) == ControlClass::GraspRelease);
  CHECK(classify_control(Task::release()) == ControlClass::GraspRelease);

  // Partition of the ten transitions: 1 position, 6 force, 3 hybrid.
  int position = 0, force = 0, hybrid = 0;
  for (const Task& t : canonical_task_set()) {
    if (!t.is_manipulation()) continue;
    switch (classify_control(t)) {
      case ControlClass::PositionGoal: ++position; break;
      case ControlClass::ForceGoal: ++force; break;
      case ControlClass::HybridGoal: ++hybrid; break;
      default: break;
    }
  }
  CHECK(position == 1);
  CHECK(force == 6);
  CHECK(hybrid == 3);
}

TEST_CASE("required_params schemas") {
  const auto rvrv = required_params(parse_task_label("RV-RV"));
  CHECK(rvrv.position == PositionForm::CircleArc);
  CHECK(rvrv.force);
  CHECK(rvrv.forceRole == ForceRole::RadialToCenter);

  const auto ncnc = required_params(parse_task_label("NC-NC"));
  CHECK(ncnc.position == PositionForm::Waypoints);
  CHECK_FALSE(ncnc.force);

  const auto prpr = required_params(parse_task_label("PR-PR"));
  CHECK(prpr.position == PositionForm::LineDisplacement);
  CHECK(prpr.forceRole == ForceRole::OrthogonalPlane);

  const auto grasp = required_params(Task::grasp());
  CHECK(grasp.grasp);
  CHECK_FALSE(grasp.force);
  CHECK(grasp.position == PositionForm::None);
  CHECK(required_params(Task::release()).release);

  const auto ncpc = required_params(parse_task_label("NC-PC"));
  CHECK(ncpc.forceRole == ForceRole::DetachingAxis);
  const auto pcnc = required_params(parse_task_label("PC-NC"));
  CHECK(pcnc.forceRole == ForceRole::AttachingAxis);
}

TEST_CASE("validate_chain examples") {
  const auto seq = std::vector<Task>{
      Task::grasp(), parse_task_label("PC-NC"), parse_task_label("NC-NC"),
      parse_task_label("NC-PC"), Task::release()};
  CHECK(validate_chain(seq).ok);

  const auto broken = std::vector<Task>{Task::grasp(), parse_task_label("PC-NC"),
                                        parse_task_label("RV-RV"), Task::release()};
  const auto check = validate_chain(broken);
  CHECK_FALSE(check.ok);
  CHECK(check.index == 2);
  CHECK(check.reason == ChainViolation::ChainBreak);

  const auto noGrasp = std::vector<Task>{parse_task_label("PC-NC"), Task::release()};
  const auto check2 = validate_chain(noGrasp);
  CHECK_FALSE(check2.ok);
  CHECK(check2.index == 0);
  CHECK(check2.reason == ChainViolation::NotGraspFirst);

  // Degenerate but grammatical: grasp directly followed by release.
  const auto minimal = std::vector<Task>{Task::grasp(), Task::release()};
  CHECK(validate_chain(minimal).ok);
}

TEST_CASE("validate_chain agrees with exhaustive oracle up to length 5") {
  const auto& alphabet = canonical_task_set();
  long total = 0;
  std::vector<Task> seq;

  // Iterative odometer over sequences of length 1..5 from the 12-task set.
  for (int len = 1; len <= 5; ++len) {
    std::vector<int> digits(static_cast<std::size_t>(len), 0);
    while (true) {
      seq.clear();
      for (int d : digits) seq.push_back(alphabet[static_cast<std::size_t>(d)]);
      const bool expected = oracle_chain_ok(seq);
      const bool actual = validate_chain(seq).ok;
      REQUIRE(expected == actual);
      ++total;

      int pos = len - 1;
      while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == 11) {
        digits[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++digits[static_cast<std::size_t>(pos)];
    }
  }
  CHECK(total == 12L + 144 + 1728 + 20736 + 248832);
}

TEST_CASE("serialization round-trips property-generated operations") {
  std::mt19937_64 rng(20260810);
  for (int i = 0; i < 200; ++i) {
    const GmrOperation op = gmrtest::random_operation(rng);
    const std::string text = serialize_operation(op);
    const GmrOperation back = deserialize_operation(text);
    REQUIRE(back == op);
    REQUIRE(serialize_operation(back) == text);
  }
}

TEST_CASE("deserialization rejects mutated documents with the right class") {
  std::mt19937_64 rng(424242);
  for (int i = 0; i < 40; ++i) {
    const GmrOperation op = gmrtest::random_operation(rng);
    const auto mutation = gmrtest::mutate_document(op, i % gmrtest::mutation_kind_count(), rng);
    bool threw = false;
    try {
      deserialize_document(mutation.document);
    } catch (const Error& e) {
      threw = true;
      INFO(mutation.description);
      CHECK(e.code() == mutation.expected);
    }
    REQUIRE(threw);
  }
}

TEST_CASE("document may hold several operations in order") {
  std::mt19937_64 rng(7);
  TaskModelDocument doc;
  doc.operations.push_back(gmrtest::random_operation(rng));
  doc.operations.push_back(gmrtest::random_operation(rng));
  const auto text = serialize_document(doc);
  const auto back = deserialize_document(text);
  CHECK(back == doc);
}

TEST_CASE("schema violations on hand-built operations") {
  GmrOperation op;
  op.models.push_back({Task::grasp(), SkillParams{}, 0.0, 0.0});
  op.models.push_back({parse_task_label("NC-PC"), SkillParams{}, 0.0, 1.0});
  op.models.push_back({Task::release(), SkillParams{}, 1.0, 1.0});
  op.models[0].params.grasp = GraspParams{"cup", "red", "medium wrap", Hand::Right, "on-table area"};
  op.models[2].params.release = ReleaseParams{"above-a-shelf area"};

  // Missing the force block on NC-PC.
  CHECK_THROWS_AS(validate_operation(op), Error);

  op.models[1].params.force = ForceParams{Vec3(0, 0, -1), std::nullopt, 5.0, ForceRole::DetachingAxis};
  CHECK(validate_operation(op).ok);

  op.models[1].params.force->magnitude = -1.0;
  CHECK_THROWS_AS(validate_operation(op), Error);
  op.models[1].params.force->magnitude = 5.0;

  op.models[1].params.force->axis = Vec3(0, 0, -1.01);
  CHECK_THROWS_AS(validate_operation(op), Error);
}
