#include <set>

#include "doctest.h"
#include "hka/fgroup.hpp"
#include "hka/oracle.hpp"

using namespace hka;
using namespace hka::fgroup;

namespace {

Word w(const char* text) { return parse_word(text); }

// Every rotation of the cyclic core, compared directly.
bool conjugate_by_rotation(const Word& a, const Word& b) {
  const Word ca = cyclic_reduce(a).core;
  const Word cb = cyclic_reduce(b).core;
  if (ca.size() != cb.size()) return false;
  if (ca.empty()) return true;
  for (std::size_t k = 0; k < ca.size(); ++k) {
    if (ca.rotate(k) == cb) return true;
  }
  return false;
}

// Roots by trying every word of length |core| / n.
std::optional<Word> brute_root(const Word& x, std::int64_t n) {
  const Word core = cyclic_reduce(x).core;
  if (core.size() % n != 0) return std::nullopt;
  for (const Word& u : reduced_words_of_length(core.size() / n)) {
    if (conjugate_by_rotation(u.pow(n), core)) return u;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("free_reduce cancels adjacent inverse pairs") {
  CHECK(free_reduce(std::vector<Letter>{Letter::x1, Letter::X1}).empty());
  CHECK(free_reduce(std::vector<Letter>{Letter::x1, Letter::x2, Letter::X2, Letter::x1}) ==
        Word{Letter::x1, Letter::x1});
  CHECK(free_reduce(std::vector<Letter>{Letter::x1, Letter::x1, Letter::x2}) == w("x1^2 x2"));
}

TEST_CASE("free_reduce is idempotent and never lengthens") {
  oracle::Rng rng(0);
  for (int i = 0; i < 500; ++i) {
    std::vector<Letter> raw;
    const auto len = rng.uniform(0, 14);
    static constexpr Letter kLetters[] = {Letter::x1, Letter::X1, Letter::x2, Letter::X2};
    for (int k = 0; k < len; ++k) raw.push_back(kLetters[rng.uniform(0, 3)]);
    const Word once = free_reduce(raw);
    CHECK(once.size() <= raw.size());
    CHECK(free_reduce(once.letters()) == once);
  }
}

TEST_CASE("word text syntax") {
  CHECK(to_string(w("x1^-2 x2^3")) == "x1^-2 x2^3");
  CHECK(w("X1 X1 x2") == w("x1^-2 x2"));
  CHECK(w("x1 x1^-1").empty());
  CHECK(to_string(Word{}).empty());
  CHECK_THROWS_AS(parse_word("x3"), WordParseError);
  CHECK_THROWS_AS(parse_word("x1^"), WordParseError);
  CHECK_THROWS_AS(parse_word("y"), WordParseError);
}

TEST_CASE("cyclic_reduce peels conjugators") {
  auto r = cyclic_reduce(w("x2 x1^2 x2^-1"));
  CHECK(r.core == w("x1^2"));
  CHECK(r.conjugator == w("x2"));
  r = cyclic_reduce(w("x1^2 x2"));
  CHECK(r.core == w("x1^2 x2"));
  CHECK(r.conjugator.empty());
  r = cyclic_reduce(w("x1 x2 x1^-1"));
  CHECK(r.core == w("x2"));
  CHECK(r.conjugator == w("x1"));
}

TEST_CASE("cyclic_reduce reconstructs its input") {
  oracle::Rng rng(0);
  for (int i = 0; i < 500; ++i) {
    const Word x = rng.word(0, 12);
    const auto r = cyclic_reduce(x);
    CHECK(r.conjugator * r.core * r.conjugator.inverse() == x);
    if (r.core.size() > 1) CHECK(r.core.front() != inverse(r.core.back()));
  }
}

TEST_CASE("canonical_class is the conjugacy key") {
  CHECK(canonical_class(w("x2 x1")) == canonical_class(w("x1 x2")));
  CHECK(canonical_class(w("x1^-1 x1 x2 x1")) == canonical_class(w("x1 x2")));
  CHECK(canonical_class(w("x1^2 x2")) != canonical_class(w("x1 x2^2")));
  CHECK_FALSE(conjugate_by_rotation(w("x1^2 x2"), w("x1 x2^2")));
}

TEST_CASE("canonical_class agrees with the rotation oracle") {
  oracle::Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const Word a = rng.word(0, 8);
    const Word c = rng.word(0, 4);
    const Word b = rng.uniform(0, 1) ? c * a * c.inverse() : rng.word(0, 8);
    CHECK(are_conjugate(a, b) == conjugate_by_rotation(a, b));
    const auto rep = canonical_class(a).rep();
    for (std::size_t k = 0; k < rep.size(); ++k) CHECK_FALSE(rep.rotate(k) < rep);
  }
}

TEST_CASE("are_conjugate examples") {
  CHECK(are_conjugate(w("x1 x2"), w("x2 x1")));
  CHECK_FALSE(are_conjugate(w("x1"), w("x2")));
  CHECK(are_conjugate(w("x1^2 x2^3"), w("x2^3 x1^2")));
}

TEST_CASE("are_conjugate is an equivalence relation on random triples") {
  oracle::Rng rng(0);
  for (int i = 0; i < 1000; ++i) {
    const Word base = rng.word(0, 8);
    auto pick = [&] {
      if (rng.uniform(0, 2) == 0) return rng.word(0, 12);
      const Word c = rng.word(0, 2);
      return c * base * c.inverse();
    };
    const Word a = pick(), b = pick(), c = pick();
    CHECK(are_conjugate(a, a));
    CHECK(are_conjugate(a, b) == are_conjugate(b, a));
    if (are_conjugate(a, b) && are_conjugate(b, c)) CHECK(are_conjugate(a, c));
  }
}

TEST_CASE("nth_root examples") {
  CHECK(nth_root(w("x1^2 x2 x1^2 x2"), 2) == w("x1^2 x2"));
  CHECK_FALSE(nth_root(w("x1^2 x2"), 2));
  const Word x = w("x2") * w("x1 x2").pow(3) * w("x2^-1");
  CHECK(nth_root(x, 3) == w("x1 x2"));
  CHECK(brute_root(x, 3).has_value());
  CHECK(are_conjugate(*brute_root(x, 3), w("x1 x2")));
  CHECK_THROWS_AS(nth_root(w("x1"), 0), std::invalid_argument);
}

TEST_CASE("nth_root agrees with brute force on short words") {
  for (std::size_t len = 1; len <= 6; ++len) {
    for (const Word& x : reduced_words_of_length(len)) {
      for (std::int64_t n = 1; n <= 3; ++n) {
        const auto fast = nth_root(x, n);
        const auto slow = brute_root(x, n);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) CHECK(are_conjugate(fast->pow(n), x));
      }
    }
  }
}

TEST_CASE("nth_root reconstructs and respects abelianization") {
  oracle::Rng rng(0);
  for (int i = 0; i < 1000; ++i) {
    const Word u = rng.word(1, 6);
    const auto n = rng.uniform(1, 5);
    const auto root = nth_root(u.pow(n), n);
    REQUIRE(root.has_value());
    CHECK(canonical_class(root->pow(n)) == canonical_class(u.pow(n)));
    CHECK(abelianize(u.pow(n)) == n * abelianize(u));
    const Word x = rng.word(1, 10);
    const auto k = rng.uniform(2, 5);
    const auto h = abelianize(x);
    if (h.c1 % k != 0 || h.c2 % k != 0) CHECK_FALSE(nth_root(x, k));
  }
}

TEST_CASE("max_root examples") {
  auto r = max_root(w("x1^4"));
  CHECK(r.root == w("x1"));
  CHECK(r.exponent == 4);
  r = max_root(w("x1 x2"));
  CHECK(r.root == w("x1 x2"));
  CHECK(r.exponent == 1);
  r = max_root(w("x1 x2^2").pow(3));
  CHECK(r.root == w("x1 x2^2"));
  CHECK(r.exponent == 3);
  CHECK_THROWS_AS(max_root(Word{}), std::invalid_argument);
}

TEST_CASE("max_root matches a divisor scan") {
  for (std::size_t len = 1; len <= 7; ++len) {
    for (const Word& x : reduced_words_of_length(len)) {
      const std::int64_t core = static_cast<std::int64_t>(cyclic_reduce(x).core.size());
      std::int64_t best = 1;
      for (std::int64_t d = 1; d <= core; ++d) {
        if (core % d == 0 && brute_root(x, d)) best = d;
      }
      CHECK(max_root(x).exponent == best);
    }
  }
}

TEST_CASE("is_primitive examples") {
  CHECK(is_primitive(w("x1")));
  CHECK_FALSE(is_primitive(w("x1^2 x2^2")));
  CHECK(is_primitive(w("x1 x2^5")));
  CHECK_FALSE(is_primitive(Word{}));
  CHECK_FALSE(is_primitive(w("x1^2")));
  CHECK_FALSE(is_primitive(w("x1 x2 x1^-1 x2^-1")));
}

TEST_CASE("is_primitive is invariant under inversion and conjugation") {
  oracle::Rng rng(0);
  for (int i = 0; i < 500; ++i) {
    const Word x = rng.word(1, 10);
    const Word c = rng.word(0, 4);
    const bool p = is_primitive(x);
    CHECK(is_primitive(x.inverse()) == p);
    CHECK(is_primitive(c * x * c.inverse()) == p);
  }
}

TEST_CASE("is_power_of_primitive examples") {
  CHECK(is_power_of_primitive(w("x1^3"), 3));
  CHECK_FALSE(is_power_of_primitive(w("x1^2 x2^2").pow(2), 2));
  CHECK_FALSE(is_power_of_primitive(w("x1^2 x2"), 3));
}

TEST_CASE("is_basis_pair examples") {
  CHECK(is_basis_pair(w("x1"), w("x2")));
  CHECK(is_basis_pair(w("x1"), w("x1 x2")));
  CHECK_FALSE(is_basis_pair(w("x1^2"), w("x2")));
  CHECK_FALSE(is_basis_pair(w("x1"), w("x1")));
}

TEST_CASE("whitehead set has twelve type-II automorphisms that are invertible") {
  const auto& autos = whitehead_type_two();
  CHECK(autos.size() == 12);
  for (const auto& phi : autos) CHECK(is_basis_pair(phi.image_x1, phi.image_x2));
}

TEST_CASE("classes_contain_basis examples") {
  auto v = classes_contain_basis(w("x1^-1 x2^2"), w("x1^-2 x2^3"));
  CHECK(v.is_refuted());
  CHECK(v.citation == "basis:two-syllable-exponents");
  v = classes_contain_basis(w("x1"), w("x2"));
  CHECK(v.is_proved());
  CHECK(v.citation == "basis:commutator-search");
  v = classes_contain_basis(w("x1^2 x2^3 x1^-1 x2"), w("x1 x2"), 1);
  CHECK(v.is_unknown());
  CHECK_FALSE(v.details.empty());
}

TEST_CASE("classes_contain_basis finds conjugated bases") {
  const Word c = w("x2 x1");
  CHECK(classes_contain_basis(w("x1"), c * w("x2") * c.inverse()).is_proved());
  CHECK(classes_contain_basis(w("x1 x2"), w("x2")).is_proved());
}

TEST_CASE("xayb_quotient_class examples") {
  CHECK(xayb_quotient_class(w("x1^-1 x2^2")) == QuotientClass{});
  const auto t = xayb_quotient_class(w("x1^-2 x2^3"));
  REQUIRE(t);
  CHECK(to_string(*t) == "TORUS_GROUP{2,3}");
  CHECK_FALSE(xayb_quotient_class(w("x1 x2 x1 x2^2")));
  CHECK(xayb_quotient_class(w("x2^3 x1^2")) == xayb_quotient_class(w("x1^-2 x2^-3")));
  CHECK(xayb_quotient_class(w("x1")) == QuotientClass{});
  CHECK_FALSE(xayb_quotient_class(w("x1^2")));
}

TEST_CASE("two_syllable_exponents reads the cyclic word") {
  CHECK(two_syllable_exponents(w("x2 x1^2")) == std::pair<std::int64_t, std::int64_t>{2, 1});
  CHECK(two_syllable_exponents(w("x1 x2 x1")) == std::pair<std::int64_t, std::int64_t>{2, 1});
  CHECK_FALSE(two_syllable_exponents(w("x1 x2 x1 x2")));
}

TEST_CASE("abelianize examples") {
  CHECK(abelianize(w("x1^2 x2")) == lattice::LatticeVector{2, 1});
  CHECK(abelianize(w("x1 x1^-1")) == lattice::LatticeVector{0, 0});
  CHECK(abelianize(w("x1^-1 x2^2")) == lattice::LatticeVector{-1, 2});
  CHECK(abelianize(Word{}).is_zero());
}

TEST_CASE("reduced_words_of_length counts") {
  CHECK(reduced_words_of_length(0).size() == 1);
  CHECK(reduced_words_of_length(1).size() == 4);
  CHECK(reduced_words_of_length(5).size() == 4 * 81);
  const auto all = reduced_words_of_length(4);
  CHECK(std::set<Word>(all.begin(), all.end()).size() == all.size());
}
