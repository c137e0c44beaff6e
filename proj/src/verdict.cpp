#include "hka/verdict.hpp"

#include <stdexcept>

namespace hka {

std::string_view to_string(VerdictState s) {
  switch (s) {
    case VerdictState::Proved: return "PROVED";
    case VerdictState::Refuted: return "REFUTED";
    case VerdictState::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

VerdictState parse_verdict_state(std::string_view text) {
  if (text == "PROVED") return VerdictState::Proved;
  if (text == "REFUTED") return VerdictState::Refuted;
  if (text == "UNKNOWN") return VerdictState::Unknown;
  throw std::invalid_argument("unknown verdict '" + std::string(text) + "'");
}

Verdict Verdict::proved(std::string citation, std::string details) {
  return {VerdictState::Proved, std::move(citation), std::move(details)};
}

Verdict Verdict::refuted(std::string citation, std::string details) {
  return {VerdictState::Refuted, std::move(citation), std::move(details)};
}

Verdict Verdict::unknown(std::string details) {
  return {VerdictState::Unknown, {}, std::move(details)};
}

}  // namespace hka
