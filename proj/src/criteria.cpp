#include "hka/criteria.hpp"

#include "hka/anchors.hpp"
#include "hka/fgroup.hpp"

namespace hka::criteria {

using model::FactKey;
using model::KnotDescriptor;
using model::Tri;

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

std::string ordinal(std::int64_t n) {
  const std::int64_t t = n % 100;
  const char* suffix = "th";
  if (t < 11 || t > 13) {
    if (n % 10 == 1) suffix = "st";
    if (n % 10 == 2) suffix = "nd";
    if (n % 10 == 3) suffix = "rd";
  }
  return std::to_string(n) + suffix;
}

const char* name(Side s) { return s == Side::Plus ? "l+" : "l-"; }

const std::optional<Word>& word_of(const AnnulusPresentation& pres, Side s) {
  return s == Side::Plus ? pres.w_l_plus : pres.w_l_minus;
}

lattice::LatticeVector class_of(const AnnulusPresentation& pres, Side s) {
  return s == Side::Plus ? pres.h_l_plus : pres.h_l_minus;
}

std::optional<bool> from_fact(const AnnulusPresentation& pres, FactKey k) {
  const auto f = pres.fact(k);
  if (f.value == Tri::Unknown) return std::nullopt;
  return f.is_true();
}

std::string describe(const Evidence& e) {
  if (!e.value) return "undecided";
  return std::string(*e.value ? "yes" : "no") + " (" + e.source + ")";
}

std::string list_sources(const Evidence& a, const Evidence& b) {
  return a.source == b.source ? a.source : a.source + "/" + b.source;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

void check_exterior(const AnnulusPresentation& pres) {
  const auto& ex = pres.exterior;
  std::vector<model::Violation> v;
  if (ex.hk_a_trivial.is_true() && ex.hk_a_irreducible.is_false()) {
    v.push_back({"inconsistent exterior status", "hk_a_trivial = true with hk_a_irreducible = false"});
  }
  if (ex.hk_a_trivial.is_true() && ex.hk_a_atoroidal.is_false()) {
    v.push_back({"inconsistent exterior status", "hk_a_trivial = true with hk_a_atoroidal = false"});
  }
  if (!v.empty()) throw model::ValidationError(std::move(v));
}

bool torus_with_product(const std::optional<KnotDescriptor>& k, std::int64_t p) {
  return k && k->kind == KnotDescriptor::Kind::Torus && k->m * k->n == p;
}

}  // namespace

Evidence is_p_power(const AnnulusPresentation& pres, Side side) {
  const std::int64_t ap = abs64(pres.p);
  if (const auto& w = word_of(pres, side)) return {fgroup::nth_root(*w, ap).has_value(), "word"};
  if (auto f = from_fact(pres, side == Side::Plus ? FactKey::LPlusIsPPower : FactKey::LMinusIsPPower)) {
    return {*f, "asserted fact"};
  }
  if (lattice::divisibility_class(class_of(pres, side), ap) == lattice::Divisibility::NotMultiple) {
    return {false, "homology"};
  }
  return {};
}

Evidence is_p_power_of_primitive(const AnnulusPresentation& pres, Side side) {
  const std::int64_t ap = abs64(pres.p);
  if (const auto& w = word_of(pres, side)) return {fgroup::is_power_of_primitive(*w, ap), "word"};
  if (auto f = from_fact(pres, side == Side::Plus ? FactKey::LPlusIsPPowerOfPrimitive
                                                  : FactKey::LMinusIsPPowerOfPrimitive)) {
    return {*f, "asserted fact"};
  }
  if (lattice::divisibility_class(class_of(pres, side), ap) != lattice::Divisibility::MultipleOfGenerator) {
    return {false, "homology"};
  }
  return {};
}

Evidence is_primitive(const AnnulusPresentation& pres, Side side) {
  if (const auto& w = word_of(pres, side)) return {fgroup::is_primitive(*w), "word"};
  if (auto f = from_fact(pres, side == Side::Plus ? FactKey::LPlusPrimitive : FactKey::LMinusPrimitive)) {
    return {*f, "asserted fact"};
  }
  const auto h = class_of(pres, side);
  if (lattice::gcd(h.c1, h.c2) != 1) return {false, "homology"};
  return {};
}

Evidence is_power_of_primitive(const AnnulusPresentation& pres, Side side, std::int64_t k) {
  if (const auto& w = word_of(pres, side)) return {fgroup::is_power_of_primitive(*w, k), "word"};
  if (lattice::divisibility_class(class_of(pres, side), k) != lattice::Divisibility::MultipleOfGenerator) {
    return {false, "homology"};
  }
  return {};
}

Verdict basis_verdict(const AnnulusPresentation& pres) {
  if (pres.w_l_plus && pres.w_l_minus) return fgroup::classes_contain_basis(*pres.w_l_plus, *pres.w_l_minus);
  const auto f = pres.fact(FactKey::ClassesContainBasis);
  if (f.is_true()) return Verdict::proved(std::string(anchor::kBasisAsserted), "asserted fact: " + f.provenance);
  if (f.is_false()) return Verdict::refuted(std::string(anchor::kBasisAsserted), "asserted fact: " + f.provenance);
  return Verdict::unknown("no words and no CLASSES_CONTAIN_BASIS fact");
}

bool rigidity_applies(const AnnulusPresentation& pres, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (abs64(pres.p) != 1) return fail("slope rigidity needs |p| = 1");
  const auto& ex = pres.exterior;
  if (!ex.hk_a_trivial.is_true() && !ex.hk_a_atoroidal.is_true()) {
    return fail("slope rigidity needs HK_A atoroidal");
  }
  if (!ex.hk_a_trivial.is_false()) {
    const Verdict b = basis_verdict(pres);
    if (!b.is_refuted()) {
      return fail("slope rigidity needs {l+, l-} not a basis; basis test " + std::string(to_string(b.state)) +
                  (b.details.empty() ? "" : " (" + b.details + ")"));
    }
    if (why) *why = "|p| = 1, HK_A trivial, basis refuted: " + b.details;
    return true;
  }
  if (why) *why = "|p| = 1, HK_A non-trivial and atoroidal";
  return true;
}

DaggerVerdicts check_condition_dagger(const AnnulusPresentation& pres) {
  std::vector<std::string> cable_hits;
  std::vector<std::string> torus_hits;
  std::vector<std::string> missing;
  for (auto [k, label] : {std::pair{&pres.l1, "l1"}, std::pair{&pres.l2, "l2"}}) {
    if (!*k) {
      missing.emplace_back(label);
      continue;
    }
    const auto& d = **k;
    if (d.m * d.n != pres.p) continue;
    const std::string desc = std::string(label) + " = " + std::string(model::to_string(d.kind)) + "(" +
                             std::to_string(d.m) + "," + std::to_string(d.n) + ") with mn = p";
    if (d.kind == KnotDescriptor::Kind::Torus) torus_hits.push_back(desc);
    if (d.kind == KnotDescriptor::Kind::Cable) cable_hits.push_back(desc);
  }

  DaggerVerdicts out;
  std::vector<std::string> both = torus_hits;
  both.insert(both.end(), cable_hits.begin(), cable_hits.end());
  if (!both.empty()) {
    out.dagger = Verdict::refuted(std::string(anchor::kDagger), join(both));
  } else if (!missing.empty()) {
    out.dagger = Verdict::unknown("descriptor missing for " + join(missing));
  } else {
    out.dagger = Verdict::proved(std::string(anchor::kDagger), "no torus or cable boundary knot with mn = p");
  }
  if (!torus_hits.empty()) {
    out.double_dagger = Verdict::refuted(std::string(anchor::kDoubleDagger), join(torus_hits));
  } else if (!missing.empty()) {
    out.double_dagger = Verdict::unknown("descriptor missing for " + join(missing));
  } else {
    out.double_dagger = Verdict::proved(std::string(anchor::kDoubleDagger), "no torus boundary knot with mn = p");
  }
  return out;
}

IrreducibleVerdicts check_irreducible(const AnnulusPresentation& pres) {
  check_exterior(pres);
  const auto& ex = pres.exterior;
  const std::int64_t ap = abs64(pres.p);
  std::vector<std::string> tried;

  auto done = [](Verdict v) {
    IrreducibleVerdicts out;
    out.essential = Verdict::proved(v.citation, "follows from irreducibility: " + v.details);
    out.irreducible = std::move(v);
    return out;
  };

  if (ex.hk_a_irreducible.is_true() && ex.hk_a_trivial.is_false()) {
    return done(Verdict::proved(std::string(anchor::kIrreducibleExterior),
                                "HK_A irreducible and non-trivial (" + ex.hk_a_irreducible.provenance + ")"));
  }
  tried.emplace_back("irreducible exterior: HK_A not known to be irreducible and non-trivial");

  std::string why;
  if (rigidity_applies(pres, &why)) return done(Verdict::proved(std::string(anchor::kRigiditySlopeOne), why));
  tried.push_back(why);

  if (ex.hk_a_trivial.is_true()) {
    const auto dd = check_condition_dagger(pres).double_dagger;
    if (dd.is_proved()) {
      const Evidence ep = is_p_power_of_primitive(pres, Side::Plus);
      const Evidence em = is_p_power_of_primitive(pres, Side::Minus);
      if (ep.value == false && em.value == false) {
        const bool homology_only = ep.source == "homology" && em.source == "homology";
        return done(Verdict::proved(
            std::string(homology_only ? anchor::kTrivialHomology : anchor::kTrivialNoPrimitivePower),
            "neither l+ nor l- is a " + ordinal(ap) + " power of a primitive element (" +
                list_sources(ep, em) + ")"));
      }
      tried.push_back("trivial exterior: l+ power of primitive " + describe(ep) + ", l- " + describe(em));
    } else {
      tried.push_back("trivial exterior: torus condition " + std::string(to_string(dd.state)));
    }

    if (torus_with_product(pres.l1, pres.p) && torus_with_product(pres.l2, pres.p) && *pres.l1 == *pres.l2) {
      const std::int64_t m = abs64(pres.l1->m);
      const std::int64_t n = pres.l1->n;
      for (Side s : {Side::Plus, Side::Minus}) {
        const Evidence en = is_power_of_primitive(pres, s, n);
        const Evidence em = is_power_of_primitive(pres, s, m);
        if (en.value == false && em.value == false) {
          return done(Verdict::proved(std::string(anchor::kTrivialTorusBoundary),
                                      std::string(name(s)) + " is neither a " + ordinal(n) + " nor a " +
                                          ordinal(m) + " power of a primitive element (" +
                                          list_sources(en, em) + ")"));
        }
      }
      tried.emplace_back("torus boundary knots: both l+ and l- may be powers of primitives");
    } else {
      tried.emplace_back("torus boundary knots: l1, l2 are not equal torus knots with mn = p");
    }
  } else {
    tried.emplace_back("trivial exterior: HK_A not known to be trivial");
  }

  IrreducibleVerdicts out;
  out.irreducible = Verdict::unknown(join(tried));
  out.essential = Verdict::unknown("irreducibility not established");
  return out;
}

Verdict check_atoroidal(const AnnulusPresentation& pres, const Verdict& irreducible, const Verdict& essential) {
  const auto& ex = pres.exterior;
  std::vector<std::string> tried;
  std::string why;
  if (rigidity_applies(pres, &why)) return Verdict::proved(std::string(anchor::kRigiditySlopeOne), why);
  tried.push_back(why);

  if (irreducible.is_proved() && ex.hk_a_trivial.is_true()) {
    return Verdict::proved(std::string(anchor::kAtoroidalTrivial), "HK irreducible and HK_A trivial");
  }
  tried.emplace_back("trivial exterior: needs irreducibility and HK_A trivial");

  if (!essential.is_proved()) {
    tried.emplace_back("boundary link: A not known to be essential");
  } else if (!ex.hk_a_atoroidal.is_true()) {
    tried.emplace_back("boundary link: HK_A not known to be atoroidal");
  } else {
    const auto& bl = pres.boundary_link;
    using K = model::BoundaryLinkDescriptor::Kind;
    if (bl.kind == K::Unknown) {
      tried.emplace_back("boundary link: type unknown");
    } else if (bl.kind == K::TorusLink && abs64(bl.a / 2) > 1 && bl.b / 2 > 1 &&
               abs64((bl.a / 2) * (bl.b / 2)) == abs64(pres.p)) {
      tried.push_back("boundary link: TORUS_LINK(" + std::to_string(bl.a) + "," + std::to_string(bl.b) +
                      ") with mn = +-p");
    } else {
      return Verdict::proved(std::string(anchor::kAtoroidalNoTorusLink),
                             "HK_A atoroidal (" + ex.hk_a_atoroidal.provenance + "), boundary link " +
                                 std::string(model::to_string(bl.kind)) + " is no (2m,2n)-torus link with mn = +-p");
    }
  }
  return Verdict::unknown(join(tried));
}

Verdict check_unique_annulus(const AnnulusPresentation& pres, const Verdict& irreducible, const Verdict& atoroidal) {
  if (!irreducible.is_proved() || !atoroidal.is_proved()) {
    return Verdict::unknown("hypotheses not established: irreducible " + std::string(to_string(irreducible.state)) +
                            ", atoroidal " + std::string(to_string(atoroidal.state)));
  }
  const auto& ex = pres.exterior;
  const std::int64_t ap = abs64(pres.p);
  std::vector<std::string> tried;

  std::string why;
  if (rigidity_applies(pres, &why)) return Verdict::proved(std::string(anchor::kRigiditySlopeOne), why);
  tried.push_back(why);

  if (ex.hk_a_trivial.is_false() && ex.hk_a_irreducible.is_true()) {
    const auto d = check_condition_dagger(pres).dagger;
    if (!d.is_proved()) {
      tried.push_back("irreducible exterior: torus-or-cable condition " + std::string(to_string(d.state)));
    } else if (ap == 1) {
      return Verdict::proved(std::string(anchor::kUniqueIrreducible), "|p| = 1");
    } else {
      const Evidence ep = is_p_power(pres, Side::Plus);
      const Evidence em = is_p_power(pres, Side::Minus);
      if (ep.value == false && em.value == false) {
        return Verdict::proved(std::string(anchor::kUniqueIrreducible),
                               "neither l+ nor l- is a " + ordinal(ap) + " power (" +
                                   list_sources(ep, em) + ")");
      }
      tried.push_back("irreducible exterior: l+ is p-th power " + describe(ep) + ", l- " + describe(em));
    }
  } else if (ex.hk_a_trivial.is_true()) {
    const auto dd = check_condition_dagger(pres).double_dagger;
    if (!dd.is_proved()) {
      tried.push_back("trivial exterior: torus condition " + std::string(to_string(dd.state)));
    } else if (ap == 1) {
      return Verdict::proved(std::string(anchor::kUniqueTrivialNonPrimitive), "|p| = 1");
    } else {
      const Evidence pp = is_p_power_of_primitive(pres, Side::Plus);
      const Evidence pm = is_p_power_of_primitive(pres, Side::Minus);
      const Evidence qp = is_primitive(pres, Side::Plus);
      const Evidence qm = is_primitive(pres, Side::Minus);
      if (pp.value == false && pm.value == false && (qp.value == false || qm.value == false)) {
        const Evidence& np = qp.value == false ? qp : qm;
        return Verdict::proved(std::string(anchor::kUniqueTrivialNonPrimitive),
                               "neither l+ nor l- is a " + ordinal(ap) +
                                   " power of a primitive element (" + list_sources(pp, pm) + "); " +
                                   (qp.value == false ? "l+" : "l-") + " is not primitive (" + np.source + ")");
      }
      tried.push_back("trivial exterior: power of primitive l+ " + describe(pp) + ", l- " + describe(pm) +
                      "; primitive l+ " + describe(qp) + ", l- " + describe(qm));

      if (ap % 2 == 1) {
        using lattice::Divisibility;
        const auto dp = lattice::divisibility_class(pres.h_l_plus, ap);
        const auto dm = lattice::divisibility_class(pres.h_l_minus, ap);
        if (dp != Divisibility::MultipleOfGenerator && dm != Divisibility::MultipleOfGenerator) {
          return Verdict::proved(std::string(anchor::kUniqueTrivialOddSlope),
                                 "p odd; [l+] " + std::string(to_string(dp)) + ", [l-] " +
                                     std::string(to_string(dm)));
        }
        tried.emplace_back("odd slope: a class is a |p|-th multiple of a generator");
      } else {
        tried.emplace_back("odd slope: p is even");
      }
    }
  } else {
    tried.emplace_back("exterior status of HK_A undetermined");
  }
  return Verdict::unknown(join(tried));
}

SlopeSummary slope_summary(const AnnulusPresentation& pres) {
  const auto norm = lattice::normalize(pres.h_l_plus.c1, pres.h_l_plus.c2);
  SlopeSummary s;
  s.invariant = norm.invariant;
  s.n_used = norm.n_used;
  s.type = lattice::slope_type(norm.invariant);
  s.symmetric_type = lattice::is_symmetric_type(s.type);
  return s;
}

SymmetryBound symmetry_upper_bound(const AnnulusPresentation& pres, const Verdict& unique) {
  SymmetryBound b;
  if (!unique.is_proved()) {
    b.chiral = Verdict::unknown("uniqueness of the annulus not established");
    return b;
  }
  b.chiral = Verdict::proved(std::string(anchor::kChiralLinking),
                             "lk(l1, l2) = p = " + std::to_string(pres.p) + " changes sign under mirroring");
  b.upper_citations.emplace_back(anchor::kSymmetryGeneral);

  const auto slope = slope_summary(pres);
  if (!slope.symmetric_type) {
    b.allowed.reverse = false;
    b.allowed.reverse_swap = false;
    b.upper_citations.emplace_back(anchor::kSymmetryAsymmetricType);
  }

  if (pres.w_l_plus && pres.w_l_minus && fgroup::two_syllable_exponents(*pres.w_l_plus) &&
      fgroup::two_syllable_exponents(*pres.w_l_minus)) {
    const auto qp = fgroup::xayb_quotient_class(*pres.w_l_plus);
    const auto qm = fgroup::xayb_quotient_class(*pres.w_l_minus);
    if (qp && qm && *qp != *qm) {
      // Only the maps reversing A exchange l+ and l-.
      b.allowed.reverse = false;
      b.allowed.reverse_swap = false;
      b.upper_citations.emplace_back(anchor::kSymmetrySwapObstruction);
    }
  }

  const auto invertible_false = [](const std::optional<KnotDescriptor>& k) {
    return k && k->invertible == Tri::False;
  };
  if (!slope.symmetric_type && invertible_false(pres.l1) && invertible_false(pres.l2)) {
    b.allowed.swap = false;
    b.upper_citations.emplace_back(anchor::kSymmetryNonInvertible);
  }
  b.upper = b.allowed.largest_subgroup();
  return b;
}

Report classify(const AnnulusPresentation& pres, const std::optional<KnownLowerBound>& lower) {
  Report r;
  r.label = pres.label;
  r.p = pres.p;
  const auto daggers = check_condition_dagger(pres);
  r.condition_dagger = daggers.dagger;
  r.condition_double_dagger = daggers.double_dagger;
  const auto irr = check_irreducible(pres);
  r.irreducible = irr.irreducible;
  r.essential = irr.essential;
  r.atoroidal = check_atoroidal(pres, r.irreducible, r.essential);
  r.unique_annulus = check_unique_annulus(pres, r.irreducible, r.atoroidal);
  r.slope = slope_summary(pres);
  r.symmetry = symmetry_upper_bound(pres, r.unique_annulus);
  if (lower) {
    r.symmetry.lower = lower->group;
    r.symmetry.lower_provenance = lower->provenance;
    if (r.symmetry.upper && order(lower->group) > order(*r.symmetry.upper)) {
      r.notes.emplace_back("known lower bound exceeds computed upper bound");
    }
  }
  if (!pres.w_l_plus || !pres.w_l_minus) {
    r.notes.emplace_back("no words for l+/l-: pi1 conditions use asserted facts and homology only");
  }
  return r;
}

}  // namespace hka::criteria
