#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hka/lattice.hpp"
#include "hka/verdict.hpp"

namespace hka {

// Subgroups of MCG(open annulus) = Z2 x Z2, up to isomorphism.
enum class SymGroup { Trivial, Z2, Z2xZ2 };

std::string_view to_string(SymGroup g);
SymGroup parse_sym_group(std::string_view text);
constexpr int order(SymGroup g) noexcept { return g == SymGroup::Trivial ? 1 : g == SymGroup::Z2 ? 2 : 4; }

// Which non-identity mapping classes of A may still lie in the image of
// Sym(HK). Each class is a pair of bits: reverses the orientation of A,
// swaps the ends l1 and l2.
struct AnnulusClassMask {
  bool reverse = true;       // reverses A, keeps ends
  bool reverse_swap = true;  // reverses A, swaps ends
  bool swap = true;          // keeps A's orientation, swaps ends (core reversed)

  SymGroup largest_subgroup() const noexcept;
  friend bool operator==(const AnnulusClassMask&, const AnnulusClassMask&) = default;
};

struct SymmetryBound {
  std::optional<SymGroup> upper;
  std::vector<std::string> upper_citations;
  AnnulusClassMask allowed;
  std::optional<SymGroup> lower;
  std::string lower_provenance;
  Verdict chiral;

  // Filled only when both bounds meet.
  std::optional<SymGroup> exact() const;
  friend bool operator==(const SymmetryBound&, const SymmetryBound&) = default;
};

struct SlopeSummary {
  lattice::SlopeInvariant invariant;
  std::int64_t n_used = 0;
  lattice::SlopeInvariant type;
  bool symmetric_type = false;
  friend bool operator==(const SlopeSummary&, const SlopeSummary&) = default;
};

struct Report {
  std::string label;
  std::int64_t p = 0;
  Verdict condition_dagger;
  Verdict condition_double_dagger;
  Verdict essential;
  Verdict irreducible;
  Verdict atoroidal;
  Verdict unique_annulus;
  SlopeSummary slope;
  SymmetryBound symmetry;
  std::vector<std::string> notes;

  friend bool operator==(const Report&, const Report&) = default;
};

}  // namespace hka

namespace hka::model {

inline constexpr std::string_view kReportSchema = "annulus-report/1";

// Deterministic: sorted keys, two-space indent, LF, trailing newline.
std::string save_report(const Report& report);
Report load_report(std::string_view text);

}  // namespace hka::model
