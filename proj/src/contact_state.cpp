#include "gmrtask/contact_state.hpp"

namespace gmr {

const char* to_string(ContactState s) {
  switch (s) {
    case ContactState::NC: return "NC";
    case ContactState::PC: return "PC";
    case ContactState::PR: return "PR";
    case ContactState::OP: return "OP";
    case ContactState::RV: return "RV";
    case ContactState::OR: return "OR";
  }
  return "?";
}

std::optional<ContactState> parse_contact_state(const std::string& label) {
  for (ContactState s : kAllContactStates) {
    if (label == to_string(s)) return s;
  }
  return std::nullopt;
}

}  // namespace gmr
