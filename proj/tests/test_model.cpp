#include <algorithm>
#include <functional>

#include "doctest.h"
#include "hka/criteria.hpp"
#include "hka/families.hpp"
#include "hka/model.hpp"
#include "hka/oracle.hpp"
#include "json.hpp"

using namespace hka;
using namespace hka::model;

namespace {

AnnulusPresentation t33() { return families::family_T(3, 3).presentation; }

bool names(const std::vector<Violation>& vs, const std::string& invariant) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.invariant == invariant; });
}

const char* kMinimal = R"({
  "schema": "annulus-presentation/1",
  "label": "min",
  "p": 3,
  "h_l_plus": [2, 1],
  "h_l_minus": [1, 2],
  "boundary_link": {"kind": "UNKNOWN"},
  "exterior": {},
  "asserted_facts": {}
})";

std::string with(const std::string& key, const nlohmann::json& value) {
  auto j = nlohmann::json::parse(kMinimal);
  j[key] = value;
  return j.dump();
}

std::string schema_path(const std::string& text) {
  try {
    load_presentation(text);
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("validate examples") {
  CHECK(validate(t33()).empty());

  auto p = t33();
  p.h_l_minus = p.h_l_plus;
  CHECK(names(validate(p), "orientation offset violated"));

  p = t33();
  p.p = 1;
  p.h_l_plus = {0, 1};
  p.h_l_minus = {-1, 2};
  p.w_l_plus = parse_word("x1");
  p.w_l_minus.reset();
  CHECK(names(validate(p), "abelianization mismatch"));
}

TEST_CASE("validate flags each broken invariant") {
  struct Mutation {
    const char* invariant;
    std::function<void(AnnulusPresentation&)> apply;
  };
  const std::vector<Mutation> mutations = {
      {"non-trivial boundary slope required", [](auto& p) { p.p = 0; }},
      {"orientation offset violated", [](auto& p) { p.h_l_minus = {2, 1}; }},
      {"orientation offset violated", [](auto& p) { std::swap(p.h_l_plus, p.h_l_minus); }},
      {"coordinate sum differs from boundary slope", [](auto& p) { p.p = 5; }},
      {"homology classes degenerate",
       [](auto& p) {
         p.w_l_plus.reset();
         p.w_l_minus.reset();
         p.p = 2;
         p.h_l_plus = {1, 1};
         p.h_l_minus = {-1, -1};
       }},
      {"abelianization mismatch", [](auto& p) { p.w_l_plus = parse_word("x1 x2^2"); }},
      {"abelianization mismatch", [](auto& p) { p.w_l_minus = parse_word("x1^2 x2"); }},
      {"knot parameters out of range", [](auto& p) { p.l1 = KnotDescriptor::torus(1, 3); }},
      {"knot parameters out of range", [](auto& p) { p.l2 = KnotDescriptor::cable(4, 2, "3_1"); }},
      {"boundary link parameters must be even", [](auto& p) { p.boundary_link = BoundaryLinkDescriptor::torus_link(3, 2); }},
      {"boundary knots disagree with boundary link",
       [](auto& p) {
         p.l1 = KnotDescriptor::torus(3, 2);
         p.l2 = KnotDescriptor::torus(3, 2);
         p.boundary_link = BoundaryLinkDescriptor::torus_link(10, 4);
         p.exterior.hk_a_trivial = {};
       }},
      {"inconsistent exterior status", [](auto& p) { p.exterior.hk_a_irreducible = {Tri::False, "x"}; }},
      {"inconsistent exterior status", [](auto& p) { p.exterior.hk_a_atoroidal = {Tri::False, "x"}; }},
      {"asserted fact contradicts computation",
       [](auto& p) { p.asserted_facts[FactKey::LPlusIsPPower] = {Tri::True, "x"}; }},
      {"asserted fact contradicts computation",
       [](auto& p) { p.asserted_facts[FactKey::LMinusPrimitive] = {Tri::False, "x"}; }},
      {"asserted fact contradicts computation",
       [](auto& p) {
         p.w_l_plus.reset();
         p.asserted_facts[FactKey::LPlusIsPPowerOfPrimitive] = {Tri::True, "x"};
       }},
  };
  for (const auto& m : mutations) {
    auto p = t33();
    m.apply(p);
    CAPTURE(m.invariant);
    CHECK(names(validate(p), m.invariant));
  }
}

TEST_CASE("the homology-degenerate invariant covers zero and +-equal classes") {
  AnnulusPresentation p;
  p.p = 1;
  p.h_l_plus = {1, 0};
  p.h_l_minus = {0, 1};
  CHECK_FALSE(names(validate(p), "homology classes degenerate"));
  p.h_l_plus = {0, 0};
  CHECK(names(validate(p), "homology classes degenerate"));
  p.h_l_plus = {1, 2};
  p.h_l_minus = {-1, -2};
  CHECK(names(validate(p), "homology classes degenerate"));
}

TEST_CASE("every family instance validates") {
  for (std::int64_t mu = -9; mu <= 9; ++mu) {
    for (std::int64_t nu = -9; nu <= 9; ++nu) {
      for (auto f : {families::Family::T, families::Family::I, families::Family::U}) {
        try {
          const auto inst = families::make(f, mu, nu);
          CHECK(validate(inst.presentation).empty());
        } catch (const families::FamilyError&) {
        }
      }
    }
  }
}

TEST_CASE("load_presentation accepts a minimal document") {
  const auto p = load_presentation(kMinimal);
  CHECK(p.label == "min");
  CHECK(p.p == 3);
  CHECK(p.h_l_plus == LatticeVector{2, 1});
  CHECK_FALSE(p.w_l_plus);
  CHECK_FALSE(p.l1);
  CHECK(p.exterior.hk_a_trivial.value == Tri::Unknown);
}

TEST_CASE("schema errors name the offending field") {
  CHECK(schema_path(with("l1", {{"kind", "SPIRAL"}})) == "$.l1.kind");
  CHECK(schema_path(with("colour", "red")) == "$.colour");
  CHECK(schema_path(with("p", "three")) == "$.p");
  CHECK(schema_path(with("h_l_plus", {2})) == "$.h_l_plus");
  CHECK(schema_path(with("w_l_plus", "x3")) == "$.w_l_plus");
  CHECK(schema_path(with("schema", "annulus-presentation/2")) == "$.schema");
  CHECK(schema_path(with("asserted_facts", {{"L_PLUS_IS_SQUARE", {{"value", "true"}}}})) ==
        "$.asserted_facts.L_PLUS_IS_SQUARE");
  CHECK(schema_path(with("exterior", {{"hk_a_trivial", {{"value", "maybe"}}}})) ==
        "$.exterior.hk_a_trivial.value");
  CHECK(schema_path("{\"schema\": ") == "$");
  auto j = nlohmann::json::parse(kMinimal);
  j.erase("p");
  CHECK(schema_path(j.dump()) == "$.p");
}

TEST_CASE("p = 0 is a validation error") {
  auto j = nlohmann::json::parse(kMinimal);
  j["p"] = 0;
  j["h_l_plus"] = {1, -1};
  j["h_l_minus"] = {0, 0};
  try {
    load_presentation(j.dump());
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(names(e.violations(), "non-trivial boundary slope required"));
    CHECK(std::string(e.what()).find("non-trivial boundary slope required") != std::string::npos);
  }
}

TEST_CASE("presentations round-trip through JSON") {
  for (const auto& inst : families::enumerate(families::Family::T, {-9, 9, 2}, families::Range{-9, 9, 2}, "all")) {
    const auto text = save_presentation(inst.presentation);
    CHECK(load_presentation(text) == inst.presentation);
    CHECK(save_presentation(load_presentation(text)) == text);
  }
  for (auto f : {families::Family::I, families::Family::U}) {
    for (const auto& inst : families::enumerate(f, {-5, 5, 1}, families::Range{-5, 5, 1}, "all")) {
      CHECK(load_presentation(save_presentation(inst.presentation)) == inst.presentation);
    }
  }
}

TEST_CASE("tri-state and fact key names") {
  for (auto t : {Tri::True, Tri::False, Tri::Unknown}) CHECK(parse_tri(to_string(t)) == t);
  for (auto k : {FactKey::LPlusIsPPower, FactKey::LMinusIsPPower, FactKey::LPlusIsPPowerOfPrimitive,
                 FactKey::LMinusIsPPowerOfPrimitive, FactKey::LPlusPrimitive, FactKey::LMinusPrimitive,
                 FactKey::ClassesContainBasis}) {
    CHECK(parse_fact_key(to_string(k)) == k);
  }
  CHECK_FALSE(parse_fact_key("L_PLUS_IS_SQUARE"));
}

TEST_CASE("report serialization is deterministic and round-trips") {
  const auto r = criteria::classify(t33(), criteria::KnownLowerBound{SymGroup::Z2xZ2, "known isotopies"});
  const auto text = save_report(r);
  CHECK(text == save_report(r));
  CHECK(text.back() == '\n');
  CHECK(text.find('\r') == std::string::npos);
  CHECK(load_report(text) == r);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["schema"] == "annulus-report/1");
  CHECK(j["unique_annulus"]["citation"] == r.unique_annulus.citation);
  CHECK(j["unique_annulus"]["verdict"] == "PROVED");
}

TEST_CASE("random reports round-trip") {
  const auto result = oracle::check_json_roundtrip(200, 0);
  CHECK(result.checked == 200);
  CHECK(result.passed());
}
