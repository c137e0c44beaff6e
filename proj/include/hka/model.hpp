#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hka/lattice.hpp"
#include "hka/word.hpp"

// Symbolic description of a handlebody-knot together with a type 3-3
// annulus A: boundary slope, the classes of l+ and l- in H1 and pi1 of the
// exterior of HK_A, boundary knot types, and imported facts.
namespace hka::model {

using lattice::LatticeVector;

enum class Tri { True, False, Unknown };

std::string_view to_string(Tri t);
Tri parse_tri(std::string_view text);

// A tri-state fact plus where it comes from.
struct Fact {
  Tri value = Tri::Unknown;
  std::string provenance;

  bool is_true() const noexcept { return value == Tri::True; }
  bool is_false() const noexcept { return value == Tri::False; }
  friend bool operator==(const Fact&, const Fact&) = default;
};

struct KnotDescriptor {
  enum class Kind { Trivial, Torus, Cable, Other };

  Kind kind = Kind::Other;
  std::int64_t m = 0;  // Torus / Cable
  std::int64_t n = 0;  // Torus / Cable
  std::string label;   // companion for Cable, knot name for Other
  Tri invertible = Tri::Unknown;

  static KnotDescriptor trivial();
  static KnotDescriptor torus(std::int64_t m, std::int64_t n);
  static KnotDescriptor cable(std::int64_t m, std::int64_t n, std::string companion);
  static KnotDescriptor other(std::string label, Tri invertible = Tri::Unknown);

  friend bool operator==(const KnotDescriptor&, const KnotDescriptor&) = default;
};

std::string_view to_string(KnotDescriptor::Kind k);

// Parameters are the (2m, 2n) of a torus or cable link.
struct BoundaryLinkDescriptor {
  enum class Kind { TorusLink, CableLink, Other, Unknown };

  Kind kind = Kind::Unknown;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::string companion;

  static BoundaryLinkDescriptor torus_link(std::int64_t a, std::int64_t b);
  static BoundaryLinkDescriptor cable_link(std::int64_t a, std::int64_t b, std::string companion);
  static BoundaryLinkDescriptor other();
  static BoundaryLinkDescriptor unknown();

  friend bool operator==(const BoundaryLinkDescriptor&, const BoundaryLinkDescriptor&) = default;
};

std::string_view to_string(BoundaryLinkDescriptor::Kind k);

struct ExteriorStatus {
  Fact hk_a_trivial;
  Fact hk_a_irreducible;
  Fact hk_a_atoroidal;
  friend bool operator==(const ExteriorStatus&, const ExteriorStatus&) = default;
};

// Facts about l+ and l- imported from outside the engine. "P power" means
// the |p|-th power of some element of pi1, up to conjugation.
enum class FactKey {
  LPlusIsPPower,
  LMinusIsPPower,
  LPlusIsPPowerOfPrimitive,
  LMinusIsPPowerOfPrimitive,
  LPlusPrimitive,
  LMinusPrimitive,
  ClassesContainBasis,
};

std::string_view to_string(FactKey k);
std::optional<FactKey> parse_fact_key(std::string_view text);

struct AnnulusPresentation {
  std::string label;
  std::int64_t p = 0;
  LatticeVector h_l_plus;
  LatticeVector h_l_minus;
  std::optional<Word> w_l_plus;
  std::optional<Word> w_l_minus;
  std::optional<KnotDescriptor> l1;
  std::optional<KnotDescriptor> l2;
  BoundaryLinkDescriptor boundary_link;
  ExteriorStatus exterior;
  std::map<FactKey, Fact> asserted_facts;
  std::string notes;

  Fact fact(FactKey k) const;
  friend bool operator==(const AnnulusPresentation&, const AnnulusPresentation&) = default;
};

struct Violation {
  std::string invariant;  // short name, e.g. "orientation offset violated"
  std::string detail;
};

std::vector<Violation> validate(const AnnulusPresentation& pres);

class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message);
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

inline constexpr std::string_view kPresentationSchema = "annulus-presentation/1";

// Parses and validates. Throws SchemaError (with a JSON path) or
// ValidationError.
AnnulusPresentation load_presentation(std::string_view text);
std::string save_presentation(const AnnulusPresentation& pres);

}  // namespace hka::model
