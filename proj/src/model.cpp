#include "hka/model.hpp"

#include "hka/fgroup.hpp"

namespace hka::model {

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

Tri parse_tri(std::string_view text) {
  if (text == "true") return Tri::True;
  if (text == "false") return Tri::False;
  if (text == "unknown") return Tri::Unknown;
  throw std::invalid_argument("expected \"true\", \"false\" or \"unknown\"");
}

KnotDescriptor KnotDescriptor::trivial() {
  KnotDescriptor k;
  k.kind = Kind::Trivial;
  k.invertible = Tri::True;
  return k;
}

KnotDescriptor KnotDescriptor::torus(std::int64_t m, std::int64_t n) {
  KnotDescriptor k;
  k.kind = Kind::Torus;
  k.m = m;
  k.n = n;
  k.invertible = Tri::True;
  return k;
}

KnotDescriptor KnotDescriptor::cable(std::int64_t m, std::int64_t n, std::string companion) {
  KnotDescriptor k;
  k.kind = Kind::Cable;
  k.m = m;
  k.n = n;
  k.label = std::move(companion);
  return k;
}

KnotDescriptor KnotDescriptor::other(std::string label, Tri invertible) {
  KnotDescriptor k;
  k.kind = Kind::Other;
  k.label = std::move(label);
  k.invertible = invertible;
  return k;
}

std::string_view to_string(KnotDescriptor::Kind k) {
  switch (k) {
    case KnotDescriptor::Kind::Trivial: return "TRIVIAL";
    case KnotDescriptor::Kind::Torus: return "TORUS";
    case KnotDescriptor::Kind::Cable: return "CABLE";
    case KnotDescriptor::Kind::Other: return "OTHER";
  }
  return "OTHER";
}

BoundaryLinkDescriptor BoundaryLinkDescriptor::torus_link(std::int64_t a, std::int64_t b) {
  return {Kind::TorusLink, a, b, {}};
}

BoundaryLinkDescriptor BoundaryLinkDescriptor::cable_link(std::int64_t a, std::int64_t b,
                                                          std::string companion) {
  return {Kind::CableLink, a, b, std::move(companion)};
}

BoundaryLinkDescriptor BoundaryLinkDescriptor::other() { return {Kind::Other, 0, 0, {}}; }
BoundaryLinkDescriptor BoundaryLinkDescriptor::unknown() { return {}; }

std::string_view to_string(BoundaryLinkDescriptor::Kind k) {
  switch (k) {
    case BoundaryLinkDescriptor::Kind::TorusLink: return "TORUS_LINK";
    case BoundaryLinkDescriptor::Kind::CableLink: return "CABLE_LINK";
    case BoundaryLinkDescriptor::Kind::Other: return "OTHER";
    case BoundaryLinkDescriptor::Kind::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string_view to_string(FactKey k) {
  switch (k) {
    case FactKey::LPlusIsPPower: return "L_PLUS_IS_P_POWER";
    case FactKey::LMinusIsPPower: return "L_MINUS_IS_P_POWER";
    case FactKey::LPlusIsPPowerOfPrimitive: return "L_PLUS_IS_P_POWER_OF_PRIMITIVE";
    case FactKey::LMinusIsPPowerOfPrimitive: return "L_MINUS_IS_P_POWER_OF_PRIMITIVE";
    case FactKey::LPlusPrimitive: return "L_PLUS_PRIMITIVE";
    case FactKey::LMinusPrimitive: return "L_MINUS_PRIMITIVE";
    case FactKey::ClassesContainBasis: return "CLASSES_CONTAIN_BASIS";
  }
  return "";
}

std::optional<FactKey> parse_fact_key(std::string_view text) {
  for (FactKey k : {FactKey::LPlusIsPPower, FactKey::LMinusIsPPower, FactKey::LPlusIsPPowerOfPrimitive,
                    FactKey::LMinusIsPPowerOfPrimitive, FactKey::LPlusPrimitive, FactKey::LMinusPrimitive,
                    FactKey::ClassesContainBasis}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

Fact AnnulusPresentation::fact(FactKey k) const {
  if (auto it = asserted_facts.find(k); it != asserted_facts.end()) return it->second;
  return {};
}

SchemaError::SchemaError(std::string path, const std::string& message)
    : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

namespace {

std::string join_violations(const std::vector<Violation>& vs) {
  std::string out = "presentation invalid:";
  for (const auto& v : vs) out += "\n  " + v.invariant + " (" + v.detail + ")";
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations)) {}

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

void check_knot(const std::optional<KnotDescriptor>& k, const char* name, std::vector<Violation>& out) {
  if (!k) return;
  if (k->kind != KnotDescriptor::Kind::Torus && k->kind != KnotDescriptor::Kind::Cable) return;
  const std::string kind(to_string(k->kind));
  if (abs64(k->m) < 2 || k->n < 2) {
    out.push_back({"knot parameters out of range",
                   std::string(name) + " is " + kind + "(" + std::to_string(k->m) + "," + std::to_string(k->n) +
                       "); non-trivial torus and cable knots need |m| >= 2 and n >= 2"});
  } else if (lattice::gcd(k->m, k->n) != 1) {
    out.push_back({"knot parameters out of range",
                   std::string(name) + " parameters must be coprime"});
  }
}

// Asserted facts must agree with whatever the words or homology already decide.
void check_fact(const AnnulusPresentation& pres, FactKey key, bool plus, std::vector<Violation>& out) {
  const Fact f = pres.fact(key);
  if (f.value == Tri::Unknown) return;
  const bool asserted = f.is_true();
  const std::int64_t ap = abs64(pres.p);
  const auto& h = plus ? pres.h_l_plus : pres.h_l_minus;
  const auto& w = plus ? pres.w_l_plus : pres.w_l_minus;
  std::optional<bool> computed;
  std::string source;
  if (ap == 0) return;
  switch (key) {
    case FactKey::LPlusIsPPower:
    case FactKey::LMinusIsPPower:
      if (w) {
        computed = fgroup::nth_root(*w, ap).has_value();
        source = "word";
      } else if (lattice::divisibility_class(h, ap) == lattice::Divisibility::NotMultiple) {
        computed = false;
        source = "homology";
      }
      break;
    case FactKey::LPlusIsPPowerOfPrimitive:
    case FactKey::LMinusIsPPowerOfPrimitive:
      if (w) {
        computed = fgroup::is_power_of_primitive(*w, ap);
        source = "word";
      } else if (lattice::divisibility_class(h, ap) != lattice::Divisibility::MultipleOfGenerator) {
        computed = false;
        source = "homology";
      }
      break;
    case FactKey::LPlusPrimitive:
    case FactKey::LMinusPrimitive:
      if (w) {
        computed = fgroup::is_primitive(*w);
        source = "word";
      } else if (lattice::gcd(h.c1, h.c2) != 1) {
        computed = false;
        source = "homology";
      }
      break;
    case FactKey::ClassesContainBasis:
      break;
  }
  if (computed && *computed != asserted) {
    out.push_back({"asserted fact contradicts computation",
                   std::string(to_string(key)) + " asserted " + std::string(to_string(f.value)) + " but " + source +
                       " gives " + (*computed ? "true" : "false")});
  }
}

}  // namespace

std::vector<Violation> validate(const AnnulusPresentation& pres) {
  std::vector<Violation> out;
  const auto& hp = pres.h_l_plus;
  const auto& hm = pres.h_l_minus;

  if (pres.p == 0) {
    out.push_back({"non-trivial boundary slope required", "p = 0"});
  }
  const auto offset = hp - hm;
  if (offset != LatticeVector{1, -1}) {
    std::string d = "[l+] - [l-] = " + lattice::to_string(offset) + ", expected (1,-1)";
    if (offset == LatticeVector{-1, 1}) d += "; this is the offset after a MINUS transition, re-express in a PLUS basis";
    out.push_back({"orientation offset violated", d});
  }
  if (hp.sum() != pres.p) {
    out.push_back({"coordinate sum differs from boundary slope",
                   "[l+] = " + lattice::to_string(hp) + " sums to " + std::to_string(hp.sum()) + ", p = " +
                       std::to_string(pres.p)});
  }
  if (hp.is_zero() || hm.is_zero() || hp == hm || hp == -hm) {
    out.push_back({"homology classes degenerate",
                   "[l+] = " + lattice::to_string(hp) + ", [l-] = " + lattice::to_string(hm) +
                       "; need [l+] != +-[l-] and both non-zero"});
  }
  if (pres.w_l_plus && fgroup::abelianize(*pres.w_l_plus) != hp) {
    out.push_back({"abelianization mismatch", "w_l_plus abelianizes to " +
                                                  lattice::to_string(fgroup::abelianize(*pres.w_l_plus)) +
                                                  ", h_l_plus = " + lattice::to_string(hp)});
  }
  if (pres.w_l_minus && fgroup::abelianize(*pres.w_l_minus) != hm) {
    out.push_back({"abelianization mismatch", "w_l_minus abelianizes to " +
                                                  lattice::to_string(fgroup::abelianize(*pres.w_l_minus)) +
                                                  ", h_l_minus = " + lattice::to_string(hm)});
  }

  check_knot(pres.l1, "l1", out);
  check_knot(pres.l2, "l2", out);

  const auto& bl = pres.boundary_link;
  if (bl.kind == BoundaryLinkDescriptor::Kind::TorusLink || bl.kind == BoundaryLinkDescriptor::Kind::CableLink) {
    if (bl.a % 2 != 0 || bl.b % 2 != 0) {
      out.push_back({"boundary link parameters must be even",
                     std::string(to_string(bl.kind)) + "(" + std::to_string(bl.a) + "," + std::to_string(bl.b) + ")"});
    } else if (bl.kind == BoundaryLinkDescriptor::Kind::TorusLink) {
      // Components of the (2m,2n)-torus link are (m,n)-torus knots.
      for (const auto* k : {&pres.l1, &pres.l2}) {
        if (!*k || (*k)->kind != KnotDescriptor::Kind::Torus) continue;
        const bool same = ((*k)->m == bl.a / 2 && (*k)->n == bl.b / 2) ||
                          ((*k)->m == bl.b / 2 && (*k)->n == bl.a / 2);
        if (!same) {
          out.push_back({"boundary knots disagree with boundary link",
                         "TORUS(" + std::to_string((*k)->m) + "," + std::to_string((*k)->n) +
                             ") is not a component of TORUS_LINK(" + std::to_string(bl.a) + "," +
                             std::to_string(bl.b) + ")"});
        }
      }
    }
  }

  const auto& ex = pres.exterior;
  if (ex.hk_a_trivial.is_true() && ex.hk_a_irreducible.is_false()) {
    out.push_back({"inconsistent exterior status", "hk_a_trivial = true forces hk_a_irreducible = true"});
  }
  if (ex.hk_a_trivial.is_true() && ex.hk_a_atoroidal.is_false()) {
    out.push_back({"inconsistent exterior status", "hk_a_trivial = true forces hk_a_atoroidal = true"});
  }

  check_fact(pres, FactKey::LPlusIsPPower, true, out);
  check_fact(pres, FactKey::LMinusIsPPower, false, out);
  check_fact(pres, FactKey::LPlusIsPPowerOfPrimitive, true, out);
  check_fact(pres, FactKey::LMinusIsPPowerOfPrimitive, false, out);
  check_fact(pres, FactKey::LPlusPrimitive, true, out);
  check_fact(pres, FactKey::LMinusPrimitive, false, out);
  return out;
}

}  // namespace hka::model
