#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hka {

// Letters of the rank-2 free group. The magnitude is the generator index,
// the sign the exponent.
enum class Letter : std::int8_t { x1 = 1, X1 = -1, x2 = 2, X2 = -2 };

constexpr Letter inverse(Letter l) noexcept {
  return static_cast<Letter>(-static_cast<std::int8_t>(l));
}
constexpr int generator(Letter l) noexcept {
  const auto v = static_cast<std::int8_t>(l);
  return v < 0 ? -v : v;
}
constexpr int sign(Letter l) noexcept {
  return static_cast<std::int8_t>(l) < 0 ? -1 : 1;
}
constexpr Letter make_letter(int gen, int sgn) noexcept {
  return static_cast<Letter>(sgn < 0 ? -gen : gen);
}
// Total order x1 < x1^-1 < x2 < x2^-1 used for canonical forms.
constexpr int rank(Letter l) noexcept {
  return 2 * (generator(l) - 1) + (sign(l) < 0 ? 1 : 0);
}

class WordParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A freely reduced word in F(x1, x2). Every constructor reduces, so a Word
// never holds an adjacent pair l, l^-1.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::span<const Letter> letters);

  static Word generator_power(int gen, std::int64_t exponent);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  Word inverse() const;
  Word pow(std::int64_t n) const;
  // Rotation by k letters to the left; only meaningful on cyclically reduced
  // words, where the result is again reduced.
  Word rotate(std::size_t k) const;
  Word prefix(std::size_t n) const;

  friend Word operator*(const Word& a, const Word& b);
  Word& operator*=(const Word& b);

  friend bool operator==(const Word& a, const Word& b) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  void push(Letter l);
  std::vector<Letter> letters_;
};

Word free_reduce(std::span<const Letter> raw);

// Syllable form: maximal runs of one generator, e.g. x1^2 x2^-3 -> {(1,2),(2,-3)}.
struct Syllable {
  int gen;
  std::int64_t exponent;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};
std::vector<Syllable> syllables(const Word& w);

// Text syntax: tokens x1 x2 X1 X2 (capitals are inverses), optionally
// followed by ^k with k a signed integer. Whitespace separates tokens.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

}  // namespace hka

template <>
struct std::hash<hka::Word> {
  std::size_t operator()(const hka::Word& w) const noexcept;
};
