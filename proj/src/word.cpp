#include "hka/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace hka {

Word::Word(std::initializer_list<Letter> letters) {
  for (Letter l : letters) push(l);
}

Word::Word(std::span<const Letter> letters) {
  for (Letter l : letters) push(l);
}

void Word::push(Letter l) {
  if (!letters_.empty() && letters_.back() == hka::inverse(l)) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

Word Word::generator_power(int gen, std::int64_t exponent) {
  if (gen != 1 && gen != 2) throw std::invalid_argument("generator index must be 1 or 2");
  Word w;
  const Letter l = make_letter(gen, exponent < 0 ? -1 : 1);
  const std::int64_t n = exponent < 0 ? -exponent : exponent;
  w.letters_.assign(static_cast<std::size_t>(n), l);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back(hka::inverse(*it));
  }
  return w;
}

Word Word::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  Word result;
  Word base = *this;
  // Square-and-multiply keeps the reductions local.
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Word Word::rotate(std::size_t k) const {
  if (letters_.empty()) return *this;
  k %= letters_.size();
  std::vector<Letter> r(letters_.begin() + static_cast<std::ptrdiff_t>(k), letters_.end());
  r.insert(r.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k));
  return Word(std::span<const Letter>(r));
}

Word Word::prefix(std::size_t n) const {
  n = std::min(n, letters_.size());
  Word w;
  w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n));
  return w;
}

Word operator*(const Word& a, const Word& b) {
  Word r = a;
  r *= b;
  return r;
}

Word& Word::operator*=(const Word& b) {
  for (Letter l : b.letters_) push(l);
  return *this;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = rank(a[i]) <=> rank(b[i]); c != 0) return c;
  }
  return a.size() <=> b.size();
}

Word free_reduce(std::span<const Letter> raw) { return Word(raw); }

std::vector<Syllable> syllables(const Word& w) {
  std::vector<Syllable> out;
  for (Letter l : w.letters()) {
    if (!out.empty() && out.back().gen == generator(l)) {
      out.back().exponent += sign(l);
    } else {
      out.push_back({generator(l), sign(l)});
    }
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw WordParseError("word syntax: " + what + " at offset " + std::to_string(i) + " in '" +
                         std::string(text) + "'");
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const char c = text[i];
    if ((c != 'x' && c != 'X') || i + 1 >= text.size() || (text[i + 1] != '1' && text[i + 1] != '2')) {
      fail("expected one of x1 x2 X1 X2");
    }
    const int gen = text[i + 1] - '0';
    const int sgn = c == 'x' ? 1 : -1;
    i += 2;
    std::int64_t k = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const char* first = text.data() + i;
      const char* last = text.data() + text.size();
      if (first != last && *first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, k);
      if (ec != std::errc() || ptr == first) fail("expected integer exponent");
      i = static_cast<std::size_t>(ptr - text.data());
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      fail("unexpected character");
    }
    const Letter l = make_letter(gen, k < 0 ? -sgn : sgn);
    const std::int64_t n = k < 0 ? -k : k;
    raw.insert(raw.end(), static_cast<std::size_t>(n), l);
  }
  return free_reduce(raw);
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (const Syllable& s : syllables(w)) {
    if (!first) os << ' ';
    first = false;
    os << 'x' << s.gen;
    if (s.exponent != 1) os << '^' << s.exponent;
  }
  return os.str();
}

}  // namespace hka

std::size_t std::hash<hka::Word>::operator()(const hka::Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (hka::Letter l : w.letters()) {
    h ^= static_cast<std::size_t>(hka::rank(l) + 1);
    h *= 1099511628211ull;
  }
  return h;
}
