#include "hka/families.hpp"

#include <charconv>

#include "hka/lattice.hpp"

namespace hka::families {

using model::AnnulusPresentation;
using model::BoundaryLinkDescriptor;
using model::Fact;
using model::KnotDescriptor;
using model::Tri;

namespace {

std::string label(Family f, std::int64_t mu, std::int64_t nu) {
  return std::string(to_string(f)) + "(" + std::to_string(mu) + "," + std::to_string(nu) + ")";
}

bool odd(std::int64_t v) { return v % 2 != 0; }

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

FamilyInstance finish(Family f, std::int64_t mu, std::int64_t nu, AnnulusPresentation pres) {
  FamilyInstance inst;
  inst.family = f;
  inst.mu = mu;
  inst.nu = nu;
  pres.label = label(f, mu, nu);
  auto violations = model::validate(pres);
  if (!violations.empty()) throw model::ValidationError(std::move(violations));
  inst.expected_slope_type =
      lattice::slope_type(lattice::normalize(pres.h_l_plus.c1, pres.h_l_plus.c2).invariant);
  inst.presentation = std::move(pres);
  return inst;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::T: return "T";
    case Family::I: return "I";
    case Family::U: return "U";
  }
  return "T";
}

Family parse_family(std::string_view text) {
  if (text == "T") return Family::T;
  if (text == "I") return Family::I;
  if (text == "U") return Family::U;
  throw FamilyError("unknown family \"" + std::string(text) + "\" (expected T, I or U)");
}

FamilyInstance family_T(std::int64_t mu, std::int64_t nu) {
  if (!odd(mu) || !odd(nu)) throw FamilyError(label(Family::T, mu, nu) + ": mu and nu must be odd");
  if (mu + nu == 0) throw FamilyError(label(Family::T, mu, nu) + ": mu + nu must be non-zero");
  AnnulusPresentation pres;
  pres.p = (mu + nu) / 2;
  pres.h_l_plus = {(mu + 1) / 2, (nu - 1) / 2};
  pres.h_l_minus = {(mu - 1) / 2, (nu + 1) / 2};
  pres.w_l_plus = Word::generator_power(1, (mu + 1) / 2) * Word::generator_power(2, (nu - 1) / 2);
  pres.w_l_minus = Word::generator_power(1, (mu - 1) / 2) * Word::generator_power(2, (nu + 1) / 2);
  pres.l1 = KnotDescriptor::trivial();
  pres.l2 = KnotDescriptor::trivial();
  pres.boundary_link = BoundaryLinkDescriptor::unknown();
  const std::string src = "T(mu,nu) is built from a tunnel of the trivial knot; HK_A is a trivial handlebody-knot";
  pres.exterior.hk_a_trivial = {Tri::True, src};
  pres.exterior.hk_a_irreducible = {Tri::True, src};
  pres.exterior.hk_a_atoroidal = {Tri::True, src};
  pres.notes = "words x1^((mu+1)/2) x2^((nu-1)/2) and x1^((mu-1)/2) x2^((nu+1)/2) extrapolated from the cited cases";

  auto inst = finish(Family::T, mu, nu, std::move(pres));
  if (satisfies("V", Family::T, mu, nu)) {
    inst.known_lower_bound = criteria::KnownLowerBound{SymGroup::Z2xZ2, "explicit symmetries of T(p,p), |p| > 1 odd"};
  } else if (satisfies("Vprime", Family::T, mu, nu)) {
    inst.known_lower_bound = criteria::KnownLowerBound{SymGroup::Z2, "explicit symmetry of T(mu,2-mu), mu < -1"};
  } else if (satisfies("W", Family::T, mu, nu)) {
    inst.known_lower_bound =
        criteria::KnownLowerBound{SymGroup::Z2, "explicit symmetry of T(mu,nu), mu,nu > 1 or mu,nu < -1"};
  }
  return inst;
}

FamilyInstance family_I(std::int64_t mu, std::int64_t nu) {
  const std::int64_t p = mu + nu + 3;
  if (p == 0) throw FamilyError(label(Family::I, mu, nu) + ": mu + nu + 3 must be non-zero");
  AnnulusPresentation pres;
  pres.p = p;
  pres.h_l_plus = {mu + 2, nu + 1};
  pres.h_l_minus = {mu + 1, nu + 2};
  const std::string src = "HK_A is (S3, 5_2), which is irreducible and atoroidal";
  pres.exterior.hk_a_trivial = {Tri::False, src};
  pres.exterior.hk_a_irreducible = {Tri::True, src};
  pres.exterior.hk_a_atoroidal = {Tri::True, src};
  if (p == 6) {
    pres.l1 = KnotDescriptor::torus(3, 2);
    pres.l2 = KnotDescriptor::torus(3, 2);
    pres.boundary_link = BoundaryLinkDescriptor::torus_link(6, 4);
  } else {
    pres.l1 = KnotDescriptor::other("trefoil-pattern");
    pres.l2 = KnotDescriptor::other("trefoil-pattern");
    pres.boundary_link = BoundaryLinkDescriptor::other();
  }
  return finish(Family::I, mu, nu, std::move(pres));
}

FamilyInstance family_U(std::int64_t mu, std::int64_t nu) {
  if (mu + nu == 0) throw FamilyError(label(Family::U, mu, nu) + ": mu + nu must be non-zero");
  AnnulusPresentation pres;
  pres.p = mu + nu;
  pres.h_l_plus = {mu, nu};
  pres.h_l_minus = {mu - 1, nu + 1};
  pres.l1 = KnotDescriptor::other("8_16", Tri::False);
  pres.l2 = KnotDescriptor::other("8_16", Tri::False);
  pres.boundary_link = BoundaryLinkDescriptor::other();
  const std::string src = "HK_A is equivalent to the mirror image (S3, m5_1)";
  pres.exterior.hk_a_trivial = {Tri::False, src};
  pres.exterior.hk_a_irreducible = {Tri::True, src};
  pres.exterior.hk_a_atoroidal = {Tri::True, src};
  pres.notes = "l1, l2 are 8_16, a non-invertible knot";
  return finish(Family::U, mu, nu, std::move(pres));
}

FamilyInstance make(Family f, std::int64_t mu, std::int64_t nu) {
  switch (f) {
    case Family::T: return family_T(mu, nu);
    case Family::I: return family_I(mu, nu);
    case Family::U: return family_U(mu, nu);
  }
  throw FamilyError("unknown family");
}

namespace {

constexpr std::string_view kPredicates[] = {"PT", "PI", "V", "W", "Vprime", "U", "all"};

}  // namespace

bool is_known_predicate(std::string_view name) {
  for (auto p : kPredicates) {
    if (p == name) return true;
  }
  return false;
}

std::optional<Family> predicate_family(std::string_view predicate) {
  if (predicate == "PT" || predicate == "V" || predicate == "W" || predicate == "Vprime") return Family::T;
  if (predicate == "PI") return Family::I;
  if (predicate == "U") return Family::U;
  return std::nullopt;
}

bool satisfies(std::string_view predicate, Family f, std::int64_t mu, std::int64_t nu) {
  if (!is_known_predicate(predicate)) throw FamilyError("unknown predicate \"" + std::string(predicate) + "\"");
  if (predicate == "all") return true;
  if (predicate_family(predicate) != f) return false;
  if (predicate == "PT") return (mu >= nu && nu > 1) || (-1 > mu && mu >= nu);
  if (predicate == "PI") return ((mu >= nu && nu > -1) || (-2 > mu && mu >= nu)) && mu + nu + 3 != 6;
  if (predicate == "V") return mu == nu && odd(mu) && abs64(mu) > 1;
  if (predicate == "W") {
    return ((mu > 1 && nu > 1) || (mu < -1 && nu < -1)) && mu != nu && odd(mu) && odd(nu);
  }
  if (predicate == "Vprime") return nu == 2 - mu && odd(mu) && (mu < -1 || mu > 3);
  // U
  return (mu > nu + 1 && nu + 1 > 1) || (0 > mu && mu > nu + 1);
}

std::optional<std::int64_t> pinned_nu(std::string_view predicate, std::int64_t mu) {
  if (predicate == "V") return mu;
  if (predicate == "Vprime") return 2 - mu;
  return std::nullopt;
}

std::vector<std::int64_t> Range::values() const {
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; v += step) out.push_back(v);
  return out;
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw FamilyError("bad integer \"" + std::string(text) + "\" in " + std::string(what));
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Range parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw FamilyError("range \"" + std::string(text) + "\" needs the form a..b[:step]");
  Range r;
  r.lo = parse_int(text.substr(0, dots), "range");
  auto rest = text.substr(dots + 2);
  if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
    r.step = parse_int(rest.substr(colon + 1), "range step");
    rest = rest.substr(0, colon);
  }
  r.hi = parse_int(rest, "range");
  if (r.step <= 0) throw FamilyError("range step must be positive");
  if (r.lo > r.hi) throw FamilyError("range \"" + std::string(text) + "\" is empty");
  return r;
}

std::vector<FamilyInstance> enumerate(Family f, const Range& mu, const std::optional<Range>& nu,
                                      std::string_view predicate) {
  if (!is_known_predicate(predicate)) throw FamilyError("unknown predicate \"" + std::string(predicate) + "\"");
  std::vector<FamilyInstance> out;
  auto try_add = [&](std::int64_t m, std::int64_t n) {
    if (!satisfies(predicate, f, m, n)) return;
    try {
      out.push_back(make(f, m, n));
    } catch (const FamilyError&) {
    } catch (const model::ValidationError&) {
    }
  };
  for (std::int64_t m : mu.values()) {
    if (nu) {
      for (std::int64_t n : nu->values()) try_add(m, n);
    } else if (auto n = pinned_nu(predicate, m)) {
      try_add(m, *n);
    } else {
      throw FamilyError("predicate \"" + std::string(predicate) + "\" needs a nu range");
    }
  }
  return out;
}

std::vector<FamilyInstance> parse_family_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw FamilyError("family spec \"" + std::string(spec) + "\" needs F:...");
  const Family f = parse_family(spec.substr(0, colon));
  const auto body = spec.substr(colon + 1);

  if (body.find('=') == std::string_view::npos) {
    const auto parts = split(body, ',');
    if (parts.size() != 2) throw FamilyError("family spec \"" + std::string(spec) + "\" needs two parameters");
    return {make(f, parse_int(parts[0], "mu"), parse_int(parts[1], "nu"))};
  }

  std::optional<Range> mu;
  std::optional<Range> nu;
  std::string filter = "all";
  for (auto item : split(body, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw FamilyError("expected key=value, got \"" + std::string(item) + "\"");
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    auto as_range = [&](std::string_view v) {
      if (v.find("..") == std::string_view::npos) {
        const auto x = parse_int(v, key);
        return Range{x, x, 1};
      }
      return parse_range(v);
    };
    if (key == "mu") {
      mu = as_range(value);
    } else if (key == "nu") {
      nu = as_range(value);
    } else if (key == "filter") {
      filter = std::string(value);
      if (!is_known_predicate(filter)) throw FamilyError("unknown predicate \"" + filter + "\"");
    } else {
      throw FamilyError("unknown key \"" + std::string(key) + "\" in family spec");
    }
  }
  if (!mu) throw FamilyError("family spec needs mu=");
  return enumerate(f, *mu, nu, filter);
}

}  // namespace hka::families
