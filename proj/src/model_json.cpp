#include "json.hpp"

#include "hka/model.hpp"
#include "hka/report.hpp"

namespace hka::model {

using nlohmann::json;

namespace {

// Strict reader over a JSON object that remembers its path and rejects
// unknown keys.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw SchemaError(path_, "expected an object");
  }

  std::string child(std::string_view key) const { return path_ + "." + std::string(key); }
  bool has(std::string_view key) const { return j_.contains(key) && !j_.at(std::string(key)).is_null(); }

  const json& at(std::string_view key) const {
    seen_.emplace_back(key);
    auto it = j_.find(key);
    if (it == j_.end()) throw SchemaError(child(key), "missing required field");
    return *it;
  }

  std::string str(std::string_view key) const {
    const json& v = at(key);
    if (!v.is_string()) throw SchemaError(child(key), "expected a string");
    return v.get<std::string>();
  }

  std::string str_or(std::string_view key, std::string fallback) const {
    if (!j_.contains(key)) return fallback;
    return str(key);
  }

  std::int64_t integer(std::string_view key) const {
    const json& v = at(key);
    if (!v.is_number_integer()) throw SchemaError(child(key), "expected an integer");
    return v.get<std::int64_t>();
  }

  bool boolean(std::string_view key) const {
    const json& v = at(key);
    if (!v.is_boolean()) throw SchemaError(child(key), "expected a boolean");
    return v.get<bool>();
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      bool known = false;
      for (const auto& s : seen_) known = known || s == it.key();
      if (!known) throw SchemaError(child(it.key()), "unknown field");
    }
  }

  void touch(std::string_view key) const { seen_.emplace_back(key); }

 private:
  const json& j_;
  std::string path_;
  mutable std::vector<std::string> seen_;
};

LatticeVector read_vector(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw SchemaError(path, "expected [c1, c2] with integer entries");
  }
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

Tri read_tri(const ObjectReader& r, std::string_view key) {
  const std::string s = r.str(key);
  try {
    return parse_tri(s);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(r.child(key), e.what());
  }
}

Fact read_fact(const json& j, const std::string& path) {
  ObjectReader r(j, path);
  Fact f;
  f.value = read_tri(r, "value");
  f.provenance = r.str_or("provenance", "");
  r.touch("provenance");
  r.finish();
  return f;
}

json write_fact(const Fact& f) { return {{"value", to_string(f.value)}, {"provenance", f.provenance}}; }

KnotDescriptor read_knot(const json& j, const std::string& path) {
  ObjectReader r(j, path);
  const std::string kind = r.str("kind");
  KnotDescriptor k;
  if (kind == "TRIVIAL") {
    k = KnotDescriptor::trivial();
  } else if (kind == "TORUS") {
    k = KnotDescriptor::torus(r.integer("m"), r.integer("n"));
  } else if (kind == "CABLE") {
    k = KnotDescriptor::cable(r.integer("m"), r.integer("n"), r.str("companion"));
  } else if (kind == "OTHER") {
    k = KnotDescriptor::other(r.str("label"));
  } else {
    throw SchemaError(r.child("kind"), "unknown knot kind \"" + kind + "\"");
  }
  r.touch("invertible");
  if (r.has("invertible")) k.invertible = read_tri(r, "invertible");
  r.finish();
  return k;
}

json write_knot(const KnotDescriptor& k) {
  json j = {{"kind", to_string(k.kind)}, {"invertible", to_string(k.invertible)}};
  switch (k.kind) {
    case KnotDescriptor::Kind::Trivial: break;
    case KnotDescriptor::Kind::Torus:
      j["m"] = k.m;
      j["n"] = k.n;
      break;
    case KnotDescriptor::Kind::Cable:
      j["m"] = k.m;
      j["n"] = k.n;
      j["companion"] = k.label;
      break;
    case KnotDescriptor::Kind::Other: j["label"] = k.label; break;
  }
  return j;
}

BoundaryLinkDescriptor read_link(const json& j, const std::string& path) {
  ObjectReader r(j, path);
  const std::string kind = r.str("kind");
  BoundaryLinkDescriptor b;
  auto params = [&] {
    const LatticeVector v = read_vector(r.at("params"), r.child("params"));
    return std::pair{v.c1, v.c2};
  };
  if (kind == "TORUS_LINK") {
    auto [a, c] = params();
    b = BoundaryLinkDescriptor::torus_link(a, c);
  } else if (kind == "CABLE_LINK") {
    auto [a, c] = params();
    b = BoundaryLinkDescriptor::cable_link(a, c, r.str("companion"));
  } else if (kind == "OTHER") {
    b = BoundaryLinkDescriptor::other();
  } else if (kind == "UNKNOWN") {
    b = BoundaryLinkDescriptor::unknown();
  } else {
    throw SchemaError(r.child("kind"), "unknown boundary link kind \"" + kind + "\"");
  }
  r.finish();
  return b;
}

json write_link(const BoundaryLinkDescriptor& b) {
  json j = {{"kind", to_string(b.kind)}};
  if (b.kind == BoundaryLinkDescriptor::Kind::TorusLink || b.kind == BoundaryLinkDescriptor::Kind::CableLink) {
    j["params"] = {b.a, b.b};
  }
  if (b.kind == BoundaryLinkDescriptor::Kind::CableLink) j["companion"] = b.companion;
  return j;
}

Word read_word(const ObjectReader& r, std::string_view key) {
  try {
    return parse_word(r.str(key));
  } catch (const WordParseError& e) {
    throw SchemaError(r.child(key), e.what());
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("malformed JSON: ") + e.what());
  }
}

void check_schema(const ObjectReader& r, std::string_view expected) {
  const std::string s = r.str("schema");
  if (s != expected) {
    throw SchemaError(r.child("schema"), "expected \"" + std::string(expected) + "\", got \"" + s + "\"");
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

AnnulusPresentation load_presentation(std::string_view text) {
  const json j = parse_json(text);
  ObjectReader r(j, "$");
  check_schema(r, kPresentationSchema);
  AnnulusPresentation pres;
  pres.label = r.str("label");
  pres.p = r.integer("p");
  pres.h_l_plus = read_vector(r.at("h_l_plus"), r.child("h_l_plus"));
  pres.h_l_minus = read_vector(r.at("h_l_minus"), r.child("h_l_minus"));
  for (auto key : {"w_l_plus", "w_l_minus", "l1", "l2", "boundary_link", "exterior", "asserted_facts", "notes"}) {
    r.touch(key);
  }
  if (r.has("w_l_plus")) pres.w_l_plus = read_word(r, "w_l_plus");
  if (r.has("w_l_minus")) pres.w_l_minus = read_word(r, "w_l_minus");
  if (r.has("l1")) pres.l1 = read_knot(r.at("l1"), r.child("l1"));
  if (r.has("l2")) pres.l2 = read_knot(r.at("l2"), r.child("l2"));
  if (r.has("boundary_link")) pres.boundary_link = read_link(r.at("boundary_link"), r.child("boundary_link"));
  if (r.has("exterior")) {
    const std::string path = r.child("exterior");
    ObjectReader e(r.at("exterior"), path);
    for (auto key : {"hk_a_trivial", "hk_a_irreducible", "hk_a_atoroidal"}) e.touch(key);
    if (e.has("hk_a_trivial")) pres.exterior.hk_a_trivial = read_fact(e.at("hk_a_trivial"), e.child("hk_a_trivial"));
    if (e.has("hk_a_irreducible")) {
      pres.exterior.hk_a_irreducible = read_fact(e.at("hk_a_irreducible"), e.child("hk_a_irreducible"));
    }
    if (e.has("hk_a_atoroidal")) {
      pres.exterior.hk_a_atoroidal = read_fact(e.at("hk_a_atoroidal"), e.child("hk_a_atoroidal"));
    }
    e.finish();
  }
  if (r.has("asserted_facts")) {
    const json& facts = r.at("asserted_facts");
    const std::string path = r.child("asserted_facts");
    if (!facts.is_object()) throw SchemaError(path, "expected an object");
    for (auto it = facts.begin(); it != facts.end(); ++it) {
      const auto key = parse_fact_key(it.key());
      if (!key) throw SchemaError(path + "." + it.key(), "unknown fact key");
      pres.asserted_facts[*key] = read_fact(it.value(), path + "." + it.key());
    }
  }
  if (r.has("notes")) pres.notes = r.str("notes");
  r.finish();

  auto violations = validate(pres);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return pres;
}

std::string save_presentation(const AnnulusPresentation& pres) {
  json j = {
      {"schema", kPresentationSchema},
      {"label", pres.label},
      {"p", pres.p},
      {"h_l_plus", {pres.h_l_plus.c1, pres.h_l_plus.c2}},
      {"h_l_minus", {pres.h_l_minus.c1, pres.h_l_minus.c2}},
      {"boundary_link", write_link(pres.boundary_link)},
      {"exterior",
       {{"hk_a_trivial", write_fact(pres.exterior.hk_a_trivial)},
        {"hk_a_irreducible", write_fact(pres.exterior.hk_a_irreducible)},
        {"hk_a_atoroidal", write_fact(pres.exterior.hk_a_atoroidal)}}},
      {"asserted_facts", json::object()},
  };
  if (pres.w_l_plus) j["w_l_plus"] = to_string(*pres.w_l_plus);
  if (pres.w_l_minus) j["w_l_minus"] = to_string(*pres.w_l_minus);
  if (pres.l1) j["l1"] = write_knot(*pres.l1);
  if (pres.l2) j["l2"] = write_knot(*pres.l2);
  for (const auto& [k, f] : pres.asserted_facts) j["asserted_facts"][std::string(to_string(k))] = write_fact(f);
  if (!pres.notes.empty()) j["notes"] = pres.notes;
  return dump(j);
}

namespace {

json write_verdict(const Verdict& v) {
  return {{"verdict", to_string(v.state)}, {"citation", v.citation}, {"details", v.details}};
}

Verdict read_verdict(const json& j, const std::string& path) {
  ObjectReader r(j, path);
  Verdict v;
  try {
    v.state = parse_verdict_state(r.str("verdict"));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(r.child("verdict"), e.what());
  }
  v.citation = r.str("citation");
  v.details = r.str("details");
  r.finish();
  return v;
}

json optional_group(const std::optional<SymGroup>& g) { return g ? json(to_string(*g)) : json(nullptr); }

std::optional<SymGroup> read_group(const ObjectReader& r, std::string_view key) {
  const json& v = r.at(key);
  if (v.is_null()) return std::nullopt;
  if (!v.is_string()) throw SchemaError(r.child(key), "expected a string or null");
  try {
    return parse_sym_group(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(r.child(key), e.what());
  }
}

std::vector<std::string> read_strings(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw SchemaError(path + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

}  // namespace

std::string save_report(const Report& rep) {
  const auto& s = rep.slope;
  const auto& sym = rep.symmetry;
  json j = {
      {"schema", kReportSchema},
      {"label", rep.label},
      {"p", rep.p},
      {"condition_dagger", write_verdict(rep.condition_dagger)},
      {"condition_double_dagger", write_verdict(rep.condition_double_dagger)},
      {"essential", write_verdict(rep.essential)},
      {"irreducible", write_verdict(rep.irreducible)},
      {"atoroidal", write_verdict(rep.atoroidal)},
      {"unique_annulus", write_verdict(rep.unique_annulus)},
      {"chiral", write_verdict(sym.chiral)},
      {"slope",
       {{"invariant", {s.invariant.p1, s.invariant.p2}},
        {"n_used", s.n_used},
        {"type", {s.type.p1, s.type.p2}},
        {"symmetric_type", s.symmetric_type}}},
      {"symmetry",
       {{"upper", optional_group(sym.upper)},
        {"upper_citations", sym.upper_citations},
        {"allowed",
         {{"reverse", sym.allowed.reverse}, {"reverse_swap", sym.allowed.reverse_swap}, {"swap", sym.allowed.swap}}},
        {"lower", optional_group(sym.lower)},
        {"lower_provenance", sym.lower_provenance},
        {"exact", optional_group(sym.exact())}}},
      {"notes", rep.notes},
  };
  return dump(j);
}

Report load_report(std::string_view text) {
  const json j = parse_json(text);
  ObjectReader r(j, "$");
  check_schema(r, kReportSchema);
  Report rep;
  rep.label = r.str("label");
  rep.p = r.integer("p");
  rep.condition_dagger = read_verdict(r.at("condition_dagger"), r.child("condition_dagger"));
  rep.condition_double_dagger = read_verdict(r.at("condition_double_dagger"), r.child("condition_double_dagger"));
  rep.essential = read_verdict(r.at("essential"), r.child("essential"));
  rep.irreducible = read_verdict(r.at("irreducible"), r.child("irreducible"));
  rep.atoroidal = read_verdict(r.at("atoroidal"), r.child("atoroidal"));
  rep.unique_annulus = read_verdict(r.at("unique_annulus"), r.child("unique_annulus"));
  rep.symmetry.chiral = read_verdict(r.at("chiral"), r.child("chiral"));

  {
    ObjectReader s(r.at("slope"), r.child("slope"));
    const auto inv = read_vector(s.at("invariant"), s.child("invariant"));
    const auto type = read_vector(s.at("type"), s.child("type"));
    rep.slope.invariant = {inv.c1, inv.c2, rep.p};
    rep.slope.type = {type.c1, type.c2, rep.p};
    rep.slope.n_used = s.integer("n_used");
    rep.slope.symmetric_type = s.boolean("symmetric_type");
    s.finish();
  }
  {
    ObjectReader s(r.at("symmetry"), r.child("symmetry"));
    rep.symmetry.upper = read_group(s, "upper");
    rep.symmetry.lower = read_group(s, "lower");
    read_group(s, "exact");
    rep.symmetry.upper_citations = read_strings(s.at("upper_citations"), s.child("upper_citations"));
    rep.symmetry.lower_provenance = s.str("lower_provenance");
    ObjectReader a(s.at("allowed"), s.child("allowed"));
    rep.symmetry.allowed.reverse = a.boolean("reverse");
    rep.symmetry.allowed.reverse_swap = a.boolean("reverse_swap");
    rep.symmetry.allowed.swap = a.boolean("swap");
    a.finish();
    s.finish();
  }
  rep.notes = read_strings(r.at("notes"), r.child("notes"));
  r.finish();
  return rep;
}

}  // namespace hka::model
