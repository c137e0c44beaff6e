#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hka/lattice.hpp"
#include "hka/verdict.hpp"
#include "hka/word.hpp"

// Decision procedures in the free group F(x1, x2) used by the criteria:
// conjugacy normal forms, roots, primitivity, bases.
namespace hka::fgroup {

struct CyclicReduction {
  Word core;
  Word conjugator;  // w = conjugator * core * conjugator^-1
};

CyclicReduction cyclic_reduce(const Word& w);

// Conjugacy class key: the lexicographically least rotation of the cyclic
// core under x1 < x1^-1 < x2 < x2^-1.
class CyclicWord {
 public:
  CyclicWord() = default;
  const Word& rep() const noexcept { return rep_; }
  std::size_t size() const noexcept { return rep_.size(); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord& a, const CyclicWord& b) { return a.rep_ <=> b.rep_; }

 private:
  friend CyclicWord canonical_class(const Word& w);
  explicit CyclicWord(Word rep) : rep_(std::move(rep)) {}
  Word rep_;
};

CyclicWord canonical_class(const Word& w);
bool are_conjugate(const Word& u, const Word& v);

// Root u with w conjugate to u^n, returned as the period prefix of the
// canonical class. Throws std::invalid_argument for n < 1.
std::optional<Word> nth_root(const Word& w, std::int64_t n);

struct Root {
  Word root;
  std::int64_t exponent = 1;
};

// Throws std::invalid_argument on the empty word.
Root max_root(const Word& w);

// A rank-2 automorphism given by the images of x1 and x2.
struct Automorphism {
  Word image_x1;
  Word image_x2;
  Word apply(const Word& w) const;
};

// The twelve Whitehead automorphisms of type II for rank 2: fix a letter
// a^{+-1} and send the other generator y to y a, a^-1 y or a^-1 y a.
const std::vector<Automorphism>& whitehead_type_two();

// Whitehead length descent. The empty word is not primitive.
bool is_primitive(const Word& w);
bool is_power_of_primitive(const Word& w, std::int64_t n);

Word commutator(const Word& u, const Word& v);

// {u, v} is a basis of F2 iff [u, v] is conjugate to [x1, x2]^{+-1}.
bool is_basis_pair(const Word& u, const Word& v);

// Exponents (a, b) when the cyclic core is x1^a x2^b with a, b != 0.
std::optional<std::pair<std::int64_t, std::int64_t>> two_syllable_exponents(const Word& w);

inline constexpr std::size_t kDefaultConjugatorBudget = 6;

// Whether the conjugacy classes of u and v contain a basis of F2.
// Refuted only by the two-syllable exponent criterion; Proved by a search
// over conjugators of length <= budget; Unknown otherwise.
Verdict classes_contain_basis(const Word& u, const Word& v,
                              std::size_t budget = kDefaultConjugatorBudget);

// Isomorphism invariant of <x1, x2 | x1^a x2^b>.
struct QuotientClass {
  enum class Kind { InfiniteCyclic, TorusGroup };
  Kind kind = Kind::InfiniteCyclic;
  std::int64_t a = 0;  // TorusGroup only, a <= b
  std::int64_t b = 0;
  friend bool operator==(const QuotientClass&, const QuotientClass&) = default;
};

std::string to_string(const QuotientClass& q);

std::optional<QuotientClass> xayb_quotient_class(const Word& w);

lattice::LatticeVector abelianize(const Word& w);

// All reduced words of exactly the given length, in canonical letter order.
std::vector<Word> reduced_words_of_length(std::size_t length);

}  // namespace hka::fgroup

template <>
struct std::hash<hka::fgroup::CyclicWord> {
  std::size_t operator()(const hka::fgroup::CyclicWord& c) const noexcept {
    return std::hash<hka::Word>{}(c.rep());
  }
};
