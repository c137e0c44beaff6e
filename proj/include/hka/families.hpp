#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hka/criteria.hpp"
#include "hka/model.hpp"

// Handlebody-knot families T(mu,nu), I(mu,nu) and U(mu,nu) with their
// annulus data, exterior facts and known symmetry lower bounds.
namespace hka::families {

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family { T, I, U };

std::string_view to_string(Family f);
Family parse_family(std::string_view text);

struct FamilyInstance {
  Family family = Family::T;
  std::int64_t mu = 0;
  std::int64_t nu = 0;
  model::AnnulusPresentation presentation;
  std::optional<criteria::KnownLowerBound> known_lower_bound;
  lattice::SlopeInvariant expected_slope_type;
};

// mu, nu odd with mu + nu != 0.
FamilyInstance family_T(std::int64_t mu, std::int64_t nu);
// mu + nu + 3 != 0.
FamilyInstance family_I(std::int64_t mu, std::int64_t nu);
// mu + nu != 0.
FamilyInstance family_U(std::int64_t mu, std::int64_t nu);

FamilyInstance make(Family f, std::int64_t mu, std::int64_t nu);

// Membership predicates by name: PT, PI, V, W, Vprime, U, all.
bool is_known_predicate(std::string_view name);
bool satisfies(std::string_view predicate, Family f, std::int64_t mu, std::int64_t nu);
// Family a predicate lives in, if it is tied to one.
std::optional<Family> predicate_family(std::string_view predicate);

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t step = 1;
  std::vector<std::int64_t> values() const;
};

// Parses "a..b" or "a..b:step" (step > 0).
Range parse_range(std::string_view text);

// nu as a function of mu for predicates that fix it (V, Vprime).
std::optional<std::int64_t> pinned_nu(std::string_view predicate, std::int64_t mu);

// Instances over mu x nu passing the predicate, in (mu, nu) ascending order.
// Without a nu range the predicate must pin nu. Parameter pairs the
// constructor rejects are skipped.
std::vector<FamilyInstance> enumerate(Family f, const Range& mu, const std::optional<Range>& nu,
                                      std::string_view predicate);

// "T:3,3" or "T:mu=3..15:2,nu=3..15:2,filter=PT".
std::vector<FamilyInstance> parse_family_spec(std::string_view spec);

}  // namespace hka::families
