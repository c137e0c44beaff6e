#pragma once

#include <string>
#include <string_view>

namespace hka {

enum class VerdictState { Proved, Refuted, Unknown };

std::string_view to_string(VerdictState s);
VerdictState parse_verdict_state(std::string_view text);

// Outcome of a sufficient-condition check. Proved and Refuted always carry
// the anchor of the rule that fired; Unknown lists what was attempted.
struct Verdict {
  VerdictState state = VerdictState::Unknown;
  std::string citation;
  std::string details;

  static Verdict proved(std::string citation, std::string details = {});
  static Verdict refuted(std::string citation, std::string details = {});
  static Verdict unknown(std::string details);

  bool is_proved() const noexcept { return state == VerdictState::Proved; }
  bool is_refuted() const noexcept { return state == VerdictState::Refuted; }
  bool is_unknown() const noexcept { return state == VerdictState::Unknown; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace hka
