#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

// Exact arithmetic on H1 of the exterior of HK_A, a rank-2 lattice with a
// meridional basis {a1, a2}. No floating point anywhere.
namespace hka::lattice {

class LatticeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LatticeVector {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;

  constexpr std::int64_t sum() const noexcept { return c1 + c2; }
  constexpr bool is_zero() const noexcept { return c1 == 0 && c2 == 0; }

  friend constexpr LatticeVector operator+(LatticeVector a, LatticeVector b) noexcept {
    return {a.c1 + b.c1, a.c2 + b.c2};
  }
  friend constexpr LatticeVector operator-(LatticeVector a, LatticeVector b) noexcept {
    return {a.c1 - b.c1, a.c2 - b.c2};
  }
  friend constexpr LatticeVector operator-(LatticeVector a) noexcept { return {-a.c1, -a.c2}; }
  friend constexpr LatticeVector operator*(std::int64_t k, LatticeVector a) noexcept {
    return {k * a.c1, k * a.c2};
  }
  friend constexpr bool operator==(LatticeVector, LatticeVector) = default;
};

std::string to_string(LatticeVector v);

// Exact rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational(std::int64_t num, std::int64_t den = 1);
  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

enum class SlopePairKind { TorusFibered, Handlebody, BoundarySlope, Invalid };

struct SlopePairClass {
  SlopePairKind kind = SlopePairKind::Invalid;
  std::int64_t p = 0;
  std::int64_t q = 0;
  friend bool operator==(const SlopePairClass&, const SlopePairClass&) = default;
};

// Matches an unordered slope pair against {p/q, q/p} (pq != 0) and
// {p/q, pq} (q != 0). The handlebody form wins when both match, since HK_A
// is a handlebody exactly in that case.
SlopePairClass classify_slope_pair(const Rational& r1, const Rational& r2);

// The two meridional transition shapes. The matrices act on basis vectors:
// {a1', a2'} = {a1, a2} * M.
//   Plus : [[1-n, -n  ], [n, n+1]]   det +1
//   Minus: [[1-n, -n+2], [n, n-1]]   det -1
enum class ChangeKind { Plus, Minus };

struct BasisChange {
  std::int64_t n = 0;
  ChangeKind kind = ChangeKind::Plus;

  BasisChange() = default;
  BasisChange(std::int64_t n_, ChangeKind kind_);

  std::int64_t determinant() const noexcept;
  friend bool operator==(const BasisChange&, const BasisChange&) = default;
};

// Coordinates of the same class in the basis reached through `t`.
LatticeVector apply_change(LatticeVector v, const BasisChange& t);

struct OrientedPair {
  LatticeVector plus;
  LatticeVector minus;
  friend bool operator==(const OrientedPair&, const OrientedPair&) = default;
};

// Moves the pair ([l+], [l-]) to a new meridional basis. A Minus transition
// turns the offset [l+] - [l-] from (1,-1) into (-1,1), so it never relates
// two bases in the normalized convention and is rejected.
OrientedPair transition(const OrientedPair& pair, const BasisChange& t);

struct SlopeInvariant {
  std::int64_t p1 = 0;
  std::int64_t p2 = 0;
  std::int64_t p = 0;
  friend bool operator==(const SlopeInvariant&, const SlopeInvariant&) = default;
};

std::string to_string(const SlopeInvariant& s);

// True when p1 lies in the window 0 < p1 <= p (p > 0) or p < p1 <= 0 (p < 0)
// and p1 + p2 = p != 0.
bool in_normal_window(const SlopeInvariant& s) noexcept;

struct Normalization {
  SlopeInvariant invariant;
  std::int64_t n_used = 0;  // p1 = n_used * p + q1
};

Normalization normalize(std::int64_t q1, std::int64_t q2);

SlopeInvariant reverse_orientation(const SlopeInvariant& s);
SlopeInvariant slope_type(const SlopeInvariant& s);
bool is_symmetric_type(const SlopeInvariant& s) noexcept;

enum class Divisibility { NotMultiple, MultipleOfElement, MultipleOfGenerator };

std::string_view to_string(Divisibility d);

Divisibility divisibility_class(LatticeVector v, std::int64_t p);

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept;

}  // namespace hka::lattice
