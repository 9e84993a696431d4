#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "delcode/word.hpp"

namespace delcode {

// psi(x)_i = (x_{i-1} - x_i) mod q for i = 1..n+1, with x_0 = x_{n+1} = 0.
Word psi(const Word& x);
// Inverse of psi; throws ArgumentError unless Sum(y) = 0 mod q and |y| >= 1.
Word psi_inverse(const Word& y);
// y_i = (x_i - x_{i+1}) mod q for i < n, y_n = x_n.
Word dvt(const Word& x);

std::int64_t vt(const Word& y);
std::int64_t l1sum(const Word& y);
// Sum of y_a..y_b (1-based, inclusive); 0 when b < a.
std::int64_t l1sum(const Word& y, std::size_t a, std::size_t b);

Word apply_burst_deletion(const Word& x, std::size_t i, std::size_t len);

// All words reachable by deleting one substring of length 1..t.
std::set<Word> burst_ball(const Word& x, std::size_t t);

// Runs (i_s, t_s), 1-based, in increasing order of i_s.
struct LocalizedPattern {
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  std::size_t t = 0;

  std::size_t total() const;
  // Checks the window constraint, non-adjacency, 2 <= t' <= t, and that all
  // runs fit inside a word of length n.
  bool valid(std::size_t n) const;
  // Deleted positions in increasing order.
  std::vector<std::size_t> positions() const;

  friend bool operator==(const LocalizedPattern&, const LocalizedPattern&) = default;
};

Word apply_localized(const Word& x, const LocalizedPattern& p);

// Every valid pattern for words of length n, ordered by (i_1, bitmask).
std::vector<LocalizedPattern> localized_patterns(std::size_t n, std::size_t t);

// Union over all valid patterns plus all single deletions.
std::set<Word> localized_ball(const Word& x, std::size_t t);

// Deletes the given sorted 1-based positions.
Word delete_positions(const Word& x, const std::vector<std::size_t>& pos);

}  // namespace delcode
