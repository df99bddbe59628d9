#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cantorq/errors.hpp"

namespace cantorq {

/// A finite word over the alphabet {1,2}. The empty word addresses the whole
/// unit interval; a word of length k addresses one of the 2^k cylinders of
/// the k-th construction level. Lexicographic order on equal-length words
/// coincides with the spatial (left-to-right) order of their cylinders.
class Word {
 public:
  Word() = default;

  /// Parse from a digit string, e.g. "121". Empty string is the empty word.
  static Word parse(std::string_view text) {
    Word w;
    w.syms_.reserve(text.size());
    for (char c : text) {
      if (c != '1' && c != '2')
        throw Error(std::string("word symbol must be '1' or '2', got '") + c + "'");
      w.syms_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return w;
  }

  void push_back(int sym) {
    if (sym != 1 && sym != 2) throw Error("word symbol must be 1 or 2");
    syms_.push_back(static_cast<std::uint8_t>(sym));
  }

  int size() const { return static_cast<int>(syms_.size()); }
  bool empty() const { return syms_.empty(); }
  int operator[](int i) const { return syms_[static_cast<std::size_t>(i)]; }

  /// Swap 1 <-> 2 in every position (spatial reflection about 1/2).
  Word mirror() const {
    Word m;
    m.syms_.reserve(syms_.size());
    for (auto s : syms_) m.syms_.push_back(static_cast<std::uint8_t>(3 - s));
    return m;
  }

  /// Concatenation: this word followed by `tail`.
  Word concat(const Word& tail) const {
    Word w = *this;
    w.syms_.insert(w.syms_.end(), tail.syms_.begin(), tail.syms_.end());
    return w;
  }

  std::string str() const {
    std::string s;
    s.reserve(syms_.size());
    for (auto d : syms_) s.push_back(static_cast<char>('0' + d));
    return s;
  }

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<std::uint8_t> syms_;
};

/// The index-th word of the given length in lexicographic order
/// (index 0 is 11...1, the spatially leftmost cylinder).
inline Word word_at(int length, std::uint64_t index) {
  Word w;
  for (int b = length - 1; b >= 0; --b)
    w.push_back(((index >> b) & 1u) ? 2 : 1);
  return w;
}

/// All words of the given length in lexicographic (= spatial) order.
/// Materializes 2^length words; lengths above 20 are refused.
inline std::vector<Word> all_words(int length) {
  if (length < 0 || length > 20) throw NTooLarge("word level above 2^20 not supported");
  std::vector<Word> out;
  out.reserve(std::size_t{1} << length);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << length); ++i)
    out.push_back(word_at(length, i));
  return out;
}

}  // namespace cantorq
