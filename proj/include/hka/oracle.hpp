#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hka/fgroup.hpp"
#include "hka/word.hpp"

// Brute-force cross-checks. None of these use the Whitehead descent or the
// commutator test; they enumerate Nielsen orbits directly.
namespace hka::oracle {

struct SuiteResult {
  std::string suite;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
  // One line: "<suite>: pass, N checked" or "<suite>: FAIL, k of N ...".
  std::string summary() const;
};

// Deterministic draws from mt19937_64 by plain modulo, so sequences are
// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  Word word(std::size_t min_len, std::size_t max_len);

 private:
  std::mt19937_64 engine_;
};

// Conjugacy classes of primitive elements with cyclic length <= keep,
// found by breadth-first search from x1 under elementary Nielsen
// automorphisms, never leaving cyclic length <= explore.
std::unordered_set<fgroup::CyclicWord> primitive_classes(std::size_t keep, std::size_t explore);

// Ordered bases (u, v) with |u| + |v| <= max_total, by breadth-first search
// from (x1, x2) under elementary Nielsen moves.
std::vector<std::pair<Word, Word>> basis_pairs(std::size_t max_total);

// All canonical cyclic words of length 1..max_len.
std::vector<fgroup::CyclicWord> cyclic_words_up_to(std::size_t max_len);

SuiteResult check_primitivity(std::size_t max_len);
SuiteResult check_basis(std::size_t max_total);
SuiteResult check_roots(std::size_t cases, std::uint64_t seed);
SuiteResult check_normalize(std::size_t cases, std::uint64_t seed);
SuiteResult check_involution(std::size_t cases, std::uint64_t seed);
SuiteResult check_json_roundtrip(std::size_t cases, std::uint64_t seed);

}  // namespace hka::oracle
