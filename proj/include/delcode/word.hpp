#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace delcode {

using Symbol = std::uint8_t;

// A finite q-ary sequence. Public positions are 1-based (at()); operator[]
// is 0-based for internal loops.
class Word {
 public:
  Word() = default;
  explicit Word(unsigned q);
  Word(unsigned q, std::vector<Symbol> symbols);
  Word(unsigned q, std::initializer_list<int> symbols);

  static Word zeros(unsigned q, std::size_t n);
  // Parses the text format: bare digits for q <= 10, comma-separated otherwise.
  static Word parse(unsigned q, std::string_view text);
  // Lexicographic index in [0, q^n) back to a word.
  static Word from_index(unsigned q, std::size_t n, std::uint64_t index);

  unsigned q() const noexcept { return q_; }
  std::size_t size() const noexcept { return sym_.size(); }
  bool empty() const noexcept { return sym_.empty(); }

  Symbol operator[](std::size_t i) const noexcept { return sym_[i]; }
  Symbol at(std::size_t pos) const;  // 1-based, range-checked

  std::span<const Symbol> symbols() const noexcept { return sym_; }
  const std::vector<Symbol>& vec() const noexcept { return sym_; }

  // x_{[a,b]}, 1-based inclusive; empty when b < a.
  Word sub(std::size_t a, std::size_t b) const;
  Word concat(const Word& other) const;

  // Lexicographic index; requires q^n < 2^64.
  std::uint64_t index() const;

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return a.sym_ <=> b.sym_;
  }

 private:
  unsigned q_ = 2;
  std::vector<Symbol> sym_;
};

std::uint64_t ipow(std::uint64_t base, unsigned exp);  // throws on overflow

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace delcode
