#pragma once

#include <array>
#include <string_view>

// Stable citation identifiers. Every Proved/Refuted verdict carries exactly
// one of these; README.md lists the statement behind each.
namespace hka::anchor {

inline constexpr std::string_view kDagger = "condition:not-torus-or-cable";
inline constexpr std::string_view kDoubleDagger = "condition:not-torus";

inline constexpr std::string_view kIrreducibleExterior = "irreducibility:irreducible-exterior";
inline constexpr std::string_view kTrivialNoPrimitivePower = "irreducibility:trivial-exterior-no-primitive-power";
inline constexpr std::string_view kTrivialHomology = "irreducibility:trivial-exterior-homology";
inline constexpr std::string_view kTrivialTorusBoundary = "irreducibility:trivial-exterior-torus-knots";
inline constexpr std::string_view kRigiditySlopeOne = "rigidity:slope-pm1";

inline constexpr std::string_view kAtoroidalTrivial = "atoroidality:trivial-exterior";
inline constexpr std::string_view kAtoroidalNoTorusLink = "atoroidality:no-torus-link-boundary";

inline constexpr std::string_view kUniqueIrreducible = "uniqueness:irreducible-exterior";
inline constexpr std::string_view kUniqueTrivialNonPrimitive = "uniqueness:trivial-exterior-non-primitive";
inline constexpr std::string_view kUniqueTrivialOddSlope = "uniqueness:trivial-exterior-odd-slope";

inline constexpr std::string_view kChiralLinking = "symmetry:linking-number-chirality";
inline constexpr std::string_view kSymmetryGeneral = "symmetry:general-bound";
inline constexpr std::string_view kSymmetryAsymmetricType = "symmetry:asymmetric-slope-type";
inline constexpr std::string_view kSymmetrySwapObstruction = "symmetry:swap-obstruction";
inline constexpr std::string_view kSymmetryNonInvertible = "symmetry:non-invertible-boundary";

inline constexpr std::string_view kBasisTwoSyllable = "basis:two-syllable-exponents";
inline constexpr std::string_view kBasisSearch = "basis:commutator-search";
inline constexpr std::string_view kBasisAsserted = "basis:asserted-fact";

inline constexpr std::array kAll = {
    kDagger,
    kDoubleDagger,
    kIrreducibleExterior,
    kTrivialNoPrimitivePower,
    kTrivialHomology,
    kTrivialTorusBoundary,
    kRigiditySlopeOne,
    kAtoroidalTrivial,
    kAtoroidalNoTorusLink,
    kUniqueIrreducible,
    kUniqueTrivialNonPrimitive,
    kUniqueTrivialOddSlope,
    kChiralLinking,
    kSymmetryGeneral,
    kSymmetryAsymmetricType,
    kSymmetrySwapObstruction,
    kSymmetryNonInvertible,
    kBasisTwoSyllable,
    kBasisSearch,
    kBasisAsserted,
};

constexpr bool is_registered(std::string_view s) {
  for (auto a : kAll) {
    if (a == s) return true;
  }
  return false;
}

}  // namespace hka::anchor
