#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hka/model.hpp"
#include "hka/report.hpp"
#include "hka/verdict.hpp"

// Verdict engine over the sufficient conditions for irreducibility,
// atoroidality, uniqueness of the type 3-3 annulus and symmetry bounds.
// Nothing here is ever Refuted except conditions on the boundary knots and
// the basis test: the criteria are sufficient only.
namespace hka::criteria {

using model::AnnulusPresentation;

enum class Side { Plus, Minus };

// A pi1-level fact about l+ or l-, with the evidence that decided it.
// Sources in priority order: "word", "asserted fact", "homology".
struct Evidence {
  std::optional<bool> value;
  std::string source;
};

Evidence is_p_power(const AnnulusPresentation& pres, Side side);
Evidence is_p_power_of_primitive(const AnnulusPresentation& pres, Side side);
Evidence is_primitive(const AnnulusPresentation& pres, Side side);
// Power of a primitive with an explicit exponent k >= 1; words or homology.
Evidence is_power_of_primitive(const AnnulusPresentation& pres, Side side, std::int64_t k);

// Whether {l+, l-} can represent a basis: from words when both are
// present, otherwise from the CLASSES_CONTAIN_BASIS fact.
Verdict basis_verdict(const AnnulusPresentation& pres);

// Slope +-1 with HK_A atoroidal, and no basis when HK_A is trivial.
bool rigidity_applies(const AnnulusPresentation& pres, std::string* why = nullptr);

struct DaggerVerdicts {
  Verdict dagger;
  Verdict double_dagger;
};

struct IrreducibleVerdicts {
  Verdict irreducible;
  Verdict essential;
};

DaggerVerdicts check_condition_dagger(const AnnulusPresentation& pres);

// Throws model::ValidationError on an inconsistent exterior status.
IrreducibleVerdicts check_irreducible(const AnnulusPresentation& pres);

Verdict check_atoroidal(const AnnulusPresentation& pres, const Verdict& irreducible, const Verdict& essential);

Verdict check_unique_annulus(const AnnulusPresentation& pres, const Verdict& irreducible, const Verdict& atoroidal);

// Upper bound only; the lower bound is family metadata.
SymmetryBound symmetry_upper_bound(const AnnulusPresentation& pres, const Verdict& unique);

SlopeSummary slope_summary(const AnnulusPresentation& pres);

struct KnownLowerBound {
  SymGroup group = SymGroup::Trivial;
  std::string provenance;
};

Report classify(const AnnulusPresentation& pres, const std::optional<KnownLowerBound>& lower = std::nullopt);

}  // namespace hka::criteria
