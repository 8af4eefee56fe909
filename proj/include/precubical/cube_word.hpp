#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace precubical {

enum class Letter : char { zero = '0', one = '1', star = '*' };

// A word over {0, 1, *}. A word of length n with m stars is a morphism
// [m] -> [n] of the cube category: the i-th star receives the i-th input
// coordinate, the other letters are constants.
class CubeWord {
public:
  CubeWord() = default;

  explicit CubeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static CubeWord parse(std::string_view text) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char ch : text) {
      switch (ch) {
        case '0': letters.push_back(Letter::zero); break;
        case '1': letters.push_back(Letter::one); break;
        case '*': letters.push_back(Letter::star); break;
        default:
          throw std::invalid_argument("cube word: unexpected character '" +
                                      std::string(1, ch) + "' in \"" +
                                      std::string(text) + "\"");
      }
    }
    return CubeWord(std::move(letters));
  }

  static CubeWord identity(std::size_t n) { return CubeWord(std::vector<Letter>(n, Letter::star)); }

  std::size_t length() const noexcept { return letters_.size(); }

  std::size_t stars() const noexcept {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), Letter::star));
  }

  bool is_identity() const noexcept { return stars() == length(); }

  Letter operator[](std::size_t pos) const { return letters_[pos]; }

  const std::vector<Letter>& letters() const noexcept { return letters_; }

  // Face d_i^alpha of the word: the i-th star (1-based, left to right) becomes alpha.
  CubeWord face(std::size_t i, int alpha) const {
    if (i == 0) {
      throw std::out_of_range("cube word: face index is 1-based");
    }
    std::vector<Letter> out = letters_;
    std::size_t seen = 0;
    for (Letter& l : out) {
      if (l == Letter::star && ++seen == i) {
        l = alpha == 0 ? Letter::zero : Letter::one;
        return CubeWord(std::move(out));
      }
    }
    throw std::out_of_range("cube word: face index exceeds star count");
  }

  // Composite of [k] -v-> [m] -this-> [n]: substitute the letters of v into
  // the stars of this word, in order.
  CubeWord compose(const CubeWord& v) const {
    if (v.length() != stars()) {
      throw std::invalid_argument("cube word: cannot compose, length " +
                                  std::to_string(v.length()) + " against " +
                                  std::to_string(stars()) + " stars");
    }
    std::vector<Letter> out = letters_;
    std::size_t next = 0;
    for (Letter& l : out) {
      if (l == Letter::star) {
        l = v.letters_[next++];
      }
    }
    return CubeWord(std::move(out));
  }

  std::string str() const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter l : letters_) {
      s.push_back(static_cast<char>(l));
    }
    return s;
  }

  friend bool operator==(const CubeWord&, const CubeWord&) = default;
  friend auto operator<=>(const CubeWord& a, const CubeWord& b) { return a.str() <=> b.str(); }

private:
  std::vector<Letter> letters_;
};

// All words of length n, in lexicographic order of their string form.
inline std::vector<CubeWord> all_words(std::size_t n) {
  std::vector<CubeWord> out{CubeWord{}};
  static constexpr Letter alphabet[] = {Letter::star, Letter::zero, Letter::one};  // '*' < '0' < '1'
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<CubeWord> next;
    next.reserve(out.size() * 3);
    for (const CubeWord& w : out) {
      for (Letter l : alphabet) {
        std::vector<Letter> letters = w.letters();
        letters.push_back(l);
        next.emplace_back(std::move(letters));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace precubical
