#include "hka/oracle.hpp"

#include <deque>
#include <set>

#include "hka/anchors.hpp"
#include "hka/lattice.hpp"
#include "hka/model.hpp"
#include "hka/report.hpp"

namespace hka::oracle {

using fgroup::CyclicWord;

std::string SuiteResult::summary() const {
  if (passed()) return suite + ": pass, " + std::to_string(checked) + " checked";
  return suite + ": FAIL, " + std::to_string(failures.size()) + " of " + std::to_string(checked) +
         " checks failed; first: " + failures.front();
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Word Rng::word(std::size_t min_len, std::size_t max_len) {
  static constexpr Letter kLetters[] = {Letter::x1, Letter::X1, Letter::x2, Letter::X2};
  const auto len = static_cast<std::size_t>(uniform(static_cast<std::int64_t>(min_len),
                                                     static_cast<std::int64_t>(max_len)));
  std::vector<Letter> letters;
  while (letters.size() < len) {
    const Letter l = kLetters[uniform(0, 3)];
    if (!letters.empty() && letters.back() == inverse(l)) continue;
    letters.push_back(l);
  }
  return Word(std::span<const Letter>(letters));
}

namespace {

Word gen(int g, int s = 1) { return Word{make_letter(g, s)}; }

// Elementary Nielsen automorphisms of F(x1, x2), by images of x1 and x2.
std::vector<fgroup::Automorphism> elementary_automorphisms() {
  std::vector<fgroup::Automorphism> out;
  const Word x1 = gen(1), x2 = gen(2);
  for (int s : {1, -1}) {
    out.push_back({x1 * gen(2, s), x2});
    out.push_back({gen(2, s) * x1, x2});
    out.push_back({x1, x2 * gen(1, s)});
    out.push_back({x1, gen(1, s) * x2});
  }
  out.push_back({x1.inverse(), x2});
  out.push_back({x1, x2.inverse()});
  out.push_back({x2, x1});
  return out;
}

}  // namespace

std::unordered_set<CyclicWord> primitive_classes(std::size_t keep, std::size_t explore) {
  const auto autos = elementary_automorphisms();
  std::unordered_set<CyclicWord> seen;
  std::deque<CyclicWord> queue;
  const CyclicWord start = fgroup::canonical_class(gen(1));
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    const CyclicWord c = queue.front();
    queue.pop_front();
    for (const auto& phi : autos) {
      CyclicWord img = fgroup::canonical_class(phi.apply(c.rep()));
      if (img.size() > explore) continue;
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }
  std::unordered_set<CyclicWord> out;
  for (const auto& c : seen) {
    if (c.size() <= keep) out.insert(c);
  }
  return out;
}

std::vector<std::pair<Word, Word>> basis_pairs(std::size_t max_total) {
  using Pair = std::pair<Word, Word>;
  std::set<Pair> seen;
  std::deque<Pair> queue;
  const Pair start{gen(1), gen(2)};
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    const auto [u, v] = queue.front();
    queue.pop_front();
    std::vector<Pair> next = {{u.inverse(), v}, {u, v.inverse()}, {v, u}};
    for (int s : {1, -1}) {
      next.push_back({u * v.pow(s), v});
      next.push_back({v.pow(s) * u, v});
      next.push_back({u, v * u.pow(s)});
      next.push_back({u, u.pow(s) * v});
    }
    for (auto& n : next) {
      if (n.first.size() + n.second.size() > max_total) continue;
      if (seen.insert(n).second) queue.push_back(std::move(n));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<CyclicWord> cyclic_words_up_to(std::size_t max_len) {
  std::set<CyclicWord> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const Word& w : fgroup::reduced_words_of_length(len)) {
      if (w.front() == inverse(w.back()) && len > 1) continue;
      out.insert(fgroup::canonical_class(w));
    }
  }
  return {out.begin(), out.end()};
}

SuiteResult check_primitivity(std::size_t max_len) {
  SuiteResult r{"primitivity", 0, {}};
  const auto primitive = primitive_classes(max_len, max_len + 4);
  for (const auto& c : cyclic_words_up_to(max_len)) {
    ++r.checked;
    const bool expected = primitive.count(c) != 0;
    if (fgroup::is_primitive(c.rep()) != expected) {
      r.failures.push_back(to_string(c.rep()) + ": Whitehead says " + (expected ? "not primitive" : "primitive") +
                           ", Nielsen orbit disagrees");
    }
  }
  return r;
}

SuiteResult check_basis(std::size_t max_total) {
  SuiteResult r{"basis", 0, {}};
  const auto pairs = basis_pairs(max_total);
  const std::set<std::pair<Word, Word>> bases(pairs.begin(), pairs.end());
  std::vector<std::vector<Word>> by_len(max_total + 1);
  for (std::size_t len = 0; len <= max_total; ++len) by_len[len] = fgroup::reduced_words_of_length(len);
  for (std::size_t a = 0; a <= max_total; ++a) {
    for (std::size_t b = 0; a + b <= max_total; ++b) {
      for (const Word& u : by_len[a]) {
        for (const Word& v : by_len[b]) {
          ++r.checked;
          const bool expected = bases.count({u, v}) != 0;
          if (fgroup::is_basis_pair(u, v) != expected) {
            r.failures.push_back("(" + to_string(u) + ", " + to_string(v) + "): commutator test says " +
                                 (expected ? "no basis" : "basis") + ", Nielsen orbit disagrees");
          }
        }
      }
    }
  }
  return r;
}

SuiteResult check_roots(std::size_t cases, std::uint64_t seed) {
  SuiteResult r{"roots", 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const Word u = rng.word(1, 6);
    const auto n = rng.uniform(1, 5);
    const Word c = rng.word(0, 4);
    const Word w = c * u.pow(n) * c.inverse();
    ++r.checked;
    const std::string where = "u = " + to_string(u) + ", n = " + std::to_string(n) + ", c = " + to_string(c);
    if (fgroup::cyclic_reduce(u).core.empty()) continue;
    const auto root = fgroup::nth_root(w, n);
    if (!root) {
      r.failures.push_back(where + ": no root found");
      continue;
    }
    if (fgroup::canonical_class(root->pow(n)) != fgroup::canonical_class(w)) {
      r.failures.push_back(where + ": root^n not conjugate to w");
    }
    if (!fgroup::are_conjugate(*root, u)) r.failures.push_back(where + ": root not conjugate to u");
    if (fgroup::abelianize(u.pow(n)) != n * fgroup::abelianize(u)) {
      r.failures.push_back(where + ": abelianization not multiplicative");
    }
    // A root cannot exist when the abelianization is not divisible.
    const Word x = rng.word(1, 10);
    const auto k = rng.uniform(2, 5);
    const auto h = fgroup::abelianize(x);
    if ((h.c1 % k != 0 || h.c2 % k != 0) && fgroup::nth_root(x, k)) {
      r.failures.push_back(to_string(x) + ": root of order " + std::to_string(k) + " despite abelianization");
    }
  }
  return r;
}

namespace {

lattice::SlopeInvariant random_invariant(Rng& rng) {
  std::int64_t p = 0;
  while (p == 0) p = rng.uniform(-40, 40);
  const std::int64_t p1 = p > 0 ? rng.uniform(1, p) : rng.uniform(p + 1, 0);
  return {p1, p - p1, p};
}

}  // namespace

SuiteResult check_normalize(std::size_t cases, std::uint64_t seed) {
  SuiteResult r{"normalize", 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    ++r.checked;
    lattice::LatticeVector q{rng.uniform(-50, 50), 0};
    while (q.sum() == 0) q.c2 = rng.uniform(-50, 50);
    const lattice::OrientedPair pair{q, q - lattice::LatticeVector{1, -1}};
    const lattice::BasisChange t(rng.uniform(-20, 20), lattice::ChangeKind::Plus);
    const auto moved = lattice::transition(pair, t);
    const std::string where = "q = " + lattice::to_string(q) + ", n = " + std::to_string(t.n);
    const auto a = lattice::normalize(q.c1, q.c2);
    const auto b = lattice::normalize(moved.plus.c1, moved.plus.c2);
    if (a.invariant != b.invariant) r.failures.push_back(where + ": invariant changed under PLUS transition");
    if (moved.plus - moved.minus != lattice::LatticeVector{1, -1}) {
      r.failures.push_back(where + ": orientation offset not preserved");
    }
    if (!lattice::in_normal_window(a.invariant)) r.failures.push_back(where + ": result outside window");
    if (a.invariant.p1 != a.n_used * q.sum() + q.c1) r.failures.push_back(where + ": n_used inconsistent");
    bool rejected = false;
    try {
      lattice::transition(pair, lattice::BasisChange(t.n, lattice::ChangeKind::Minus));
    } catch (const lattice::LatticeError&) {
      rejected = true;
    }
    if (!rejected) r.failures.push_back(where + ": MINUS transition accepted");
  }
  return r;
}

SuiteResult check_involution(std::size_t cases, std::uint64_t seed) {
  SuiteResult r{"involution", 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    ++r.checked;
    const auto s = random_invariant(rng);
    const auto once = lattice::reverse_orientation(s);
    const std::string where = lattice::to_string(s);
    if (lattice::reverse_orientation(once) != s) r.failures.push_back(where + ": reversal is not an involution");
    if (once.p1 + once.p2 != once.p || once.p != s.p) r.failures.push_back(where + ": p1 + p2 != p");
    const auto t = lattice::slope_type(s);
    if (t.p1 < t.p2) r.failures.push_back(where + ": slope type has p1 < p2");
  }
  return r;
}

namespace {

Verdict random_verdict(Rng& rng) {
  const auto& anchors = anchor::kAll;
  const std::string details = "details " + std::to_string(rng.uniform(0, 1000)) + " \"quoted\" \xc2\xb1";
  switch (rng.uniform(0, 2)) {
    case 0: return Verdict::proved(std::string(anchors[rng.uniform(0, anchors.size() - 1)]), details);
    case 1: return Verdict::refuted(std::string(anchors[rng.uniform(0, anchors.size() - 1)]), details);
    default: return Verdict::unknown(details);
  }
}

std::optional<SymGroup> random_group(Rng& rng) {
  switch (rng.uniform(0, 3)) {
    case 0: return std::nullopt;
    case 1: return SymGroup::Trivial;
    case 2: return SymGroup::Z2;
    default: return SymGroup::Z2xZ2;
  }
}

Report random_report(Rng& rng) {
  Report rep;
  rep.label = "R" + std::to_string(rng.uniform(0, 99999));
  const auto s = random_invariant(rng);
  rep.p = s.p;
  rep.condition_dagger = random_verdict(rng);
  rep.condition_double_dagger = random_verdict(rng);
  rep.essential = random_verdict(rng);
  rep.irreducible = random_verdict(rng);
  rep.atoroidal = random_verdict(rng);
  rep.unique_annulus = random_verdict(rng);
  rep.slope.invariant = s;
  rep.slope.n_used = rng.uniform(-9, 9);
  rep.slope.type = lattice::slope_type(s);
  rep.slope.symmetric_type = lattice::is_symmetric_type(rep.slope.type);
  rep.symmetry.upper = random_group(rng);
  rep.symmetry.lower = random_group(rng);
  rep.symmetry.lower_provenance = rep.symmetry.lower ? "family metadata" : "";
  rep.symmetry.allowed = {rng.uniform(0, 1) == 1, rng.uniform(0, 1) == 1, rng.uniform(0, 1) == 1};
  for (auto k = rng.uniform(0, 3); k > 0; --k) {
    rep.symmetry.upper_citations.emplace_back(anchor::kAll[rng.uniform(0, anchor::kAll.size() - 1)]);
  }
  rep.symmetry.chiral = random_verdict(rng);
  for (auto k = rng.uniform(0, 2); k > 0; --k) rep.notes.push_back("note " + std::to_string(k));
  return rep;
}

}  // namespace

SuiteResult check_json_roundtrip(std::size_t cases, std::uint64_t seed) {
  SuiteResult r{"json", 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    ++r.checked;
    const Report rep = random_report(rng);
    const std::string text = model::save_report(rep);
    Report back;
    try {
      back = model::load_report(text);
    } catch (const std::exception& e) {
      r.failures.push_back(rep.label + ": load failed: " + e.what());
      continue;
    }
    if (!(back == rep)) r.failures.push_back(rep.label + ": round trip changed the report");
    if (model::save_report(back) != text) r.failures.push_back(rep.label + ": second save differs");
    if (text.empty() || text.back() != '\n' || text.find('\r') != std::string::npos) {
      r.failures.push_back(rep.label + ": line ending contract broken");
    }
  }
  return r;
}

}  // namespace hka::oracle
