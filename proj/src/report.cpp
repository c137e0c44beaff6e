#include "hka/report.hpp"

#include <stdexcept>

namespace hka {

std::string_view to_string(SymGroup g) {
  switch (g) {
    case SymGroup::Trivial: return "TRIVIAL";
    case SymGroup::Z2: return "Z2";
    case SymGroup::Z2xZ2: return "Z2xZ2";
  }
  return "TRIVIAL";
}

SymGroup parse_sym_group(std::string_view text) {
  if (text == "TRIVIAL") return SymGroup::Trivial;
  if (text == "Z2") return SymGroup::Z2;
  if (text == "Z2xZ2") return SymGroup::Z2xZ2;
  throw std::invalid_argument("unknown symmetry group \"" + std::string(text) + "\"");
}

SymGroup AnnulusClassMask::largest_subgroup() const noexcept {
  if (reverse && reverse_swap && swap) return SymGroup::Z2xZ2;
  if (reverse || reverse_swap || swap) return SymGroup::Z2;
  return SymGroup::Trivial;
}

std::optional<SymGroup> SymmetryBound::exact() const {
  if (upper && *upper == SymGroup::Trivial) return SymGroup::Trivial;
  if (upper && lower && *upper == *lower) return upper;
  return std::nullopt;
}

}  // namespace hka
