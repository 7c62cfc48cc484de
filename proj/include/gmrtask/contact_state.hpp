#pragma once

#include <array>
#include <optional>
#include <string>

namespace gmr {

/// Contact state of the target object against the environment.
/// NC non-contact, PC planar contact, PR prismatic contact, OP one-way
/// prismatic (slider terminal), RV revolute contact, OR one-way revolute
/// (hinge terminal).
enum class ContactState { NC, PC, PR, OP, RV, OR };

inline constexpr std::array<ContactState, 6> kAllContactStates{
    ContactState::NC, ContactState::PC, ContactState::PR,
    ContactState::OP, ContactState::RV, ContactState::OR};

const char* to_string(ContactState s);
std::optional<ContactState> parse_contact_state(const std::string& label);

}  // namespace gmr
