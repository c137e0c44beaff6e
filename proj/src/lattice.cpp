#include "hka/lattice.hpp"

#include <array>
#include <cstdlib>

namespace hka::lattice {

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string to_string(LatticeVector v) {
  return "(" + std::to_string(v.c1) + "," + std::to_string(v.c2) + ")";
}

std::string to_string(const SlopeInvariant& s) {
  return "(" + std::to_string(s.p1) + "," + std::to_string(s.p2) + ")";
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw LatticeError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

namespace {

// {a/b, r} with r = ab is the handlebody shape with (p, q) = (a, b).
bool handlebody_match(const Rational& r, const Rational& other) {
  return other.den() == 1 && other.num() == r.num() * r.den();
}

bool torus_match(const Rational& r, const Rational& other) {
  if (r.num() == 0) return false;
  return other == Rational(r.den(), r.num());
}

}  // namespace

SlopePairClass classify_slope_pair(const Rational& r1, const Rational& r2) {
  for (const auto& [a, b] : {std::pair{r1, r2}, std::pair{r2, r1}}) {
    if (handlebody_match(a, b)) {
      if (a.den() == 1 && a.num() != 0) return {SlopePairKind::BoundarySlope, a.num(), 1};
      return {SlopePairKind::Handlebody, a.num(), a.den()};
    }
  }
  for (const auto& [a, b] : {std::pair{r1, r2}, std::pair{r2, r1}}) {
    if (torus_match(a, b)) return {SlopePairKind::TorusFibered, a.num(), a.den()};
  }
  return {};
}

BasisChange::BasisChange(std::int64_t n_, ChangeKind kind_) : n(n_), kind(kind_) {
  const std::int64_t d = determinant();
  if (d != (kind == ChangeKind::Plus ? 1 : -1)) {
    throw LatticeError("basis change has unexpected determinant " + std::to_string(d));
  }
}

namespace {

using Mat = std::array<std::array<std::int64_t, 2>, 2>;

Mat basis_matrix(const BasisChange& t) {
  const std::int64_t n = t.n;
  if (t.kind == ChangeKind::Plus) return {{{1 - n, -n}, {n, n + 1}}};
  return {{{1 - n, -n + 2}, {n, n - 1}}};
}

}  // namespace

std::int64_t BasisChange::determinant() const noexcept {
  const Mat m = basis_matrix(*this);
  return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

LatticeVector apply_change(LatticeVector v, const BasisChange& t) {
  // Old coordinates q relate to new ones p by q = M p, so p = M^-1 q, and
  // M^-1 = adj(M) / det(M) with det = +-1.
  const Mat m = basis_matrix(t);
  const std::int64_t det = t.determinant();
  const Mat inv = {{{m[1][1] * det, -m[0][1] * det}, {-m[1][0] * det, m[0][0] * det}}};
  return {inv[0][0] * v.c1 + inv[0][1] * v.c2, inv[1][0] * v.c1 + inv[1][1] * v.c2};
}

OrientedPair transition(const OrientedPair& pair, const BasisChange& t) {
  if (t.kind == ChangeKind::Minus) {
    throw LatticeError("MINUS transition flips the orientation offset to (-1,1); not a normalized transition");
  }
  return {apply_change(pair.plus, t), apply_change(pair.minus, t)};
}

bool in_normal_window(const SlopeInvariant& s) noexcept {
  if (s.p == 0 || s.p1 + s.p2 != s.p) return false;
  if (s.p > 0) return 0 < s.p1 && s.p1 <= s.p;
  return s.p < s.p1 && s.p1 <= 0;
}

Normalization normalize(std::int64_t q1, std::int64_t q2) {
  const std::int64_t p = q1 + q2;
  if (p == 0) throw LatticeError("non-trivial boundary slope required (p = 0)");
  const std::int64_t m = p < 0 ? -p : p;
  const std::int64_t r = ((q1 % m) + m) % m;
  std::int64_t p1;
  if (p > 0) {
    p1 = r == 0 ? p : r;
  } else {
    p1 = r == 0 ? 0 : r - m;
  }
  return {{p1, p - p1, p}, (p1 - q1) / p};
}

SlopeInvariant reverse_orientation(const SlopeInvariant& s) {
  return normalize(s.p2 + 1, s.p1 - 1).invariant;
}

SlopeInvariant slope_type(const SlopeInvariant& s) {
  if (s.p1 > s.p2) return s;
  return reverse_orientation(s);
}

bool is_symmetric_type(const SlopeInvariant& s) noexcept {
  if (s.p % 2 == 0) return false;
  return s.p1 == (s.p + 1) / 2 && s.p2 == (s.p - 1) / 2;
}

std::string_view to_string(Divisibility d) {
  switch (d) {
    case Divisibility::NotMultiple: return "NOT_MULTIPLE";
    case Divisibility::MultipleOfElement: return "MULTIPLE_OF_ELEMENT";
    case Divisibility::MultipleOfGenerator: return "MULTIPLE_OF_GENERATOR";
  }
  return "NOT_MULTIPLE";
}

Divisibility divisibility_class(LatticeVector v, std::int64_t p) {
  if (p == 0) throw LatticeError("divisibility by zero slope");
  if (v.c1 % p != 0 || v.c2 % p != 0) return Divisibility::NotMultiple;
  return gcd(v.c1 / p, v.c2 / p) == 1 ? Divisibility::MultipleOfGenerator
                                      : Divisibility::MultipleOfElement;
}

}  // namespace hka::lattice
