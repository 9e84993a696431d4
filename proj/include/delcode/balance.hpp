#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "delcode/rational.hpp"
#include "delcode/word.hpp"

namespace delcode {

using BigInt = boost::multiprecision::cpp_int;

// p1(eps) = (q-1)/2 - eps, p2(eps) = (q-1)/2 + eps.
Rational p1(unsigned q, const Rational& eps);
Rational p2(unsigned q, const Rational& eps);

struct BalanceSpec {
  unsigned q = 2;
  std::size_t ell = 1;
  Rational eps{1, 4};

  void validate() const;  // throws ArgumentError
};

struct WindowSpec {
  unsigned q = 2;
  std::size_t m = 1;
  std::int64_t a = 0;
  std::int64_t b = 0;

  void validate() const;
  // Integer band [ceil(p1(eps) m), floor(p2(eps) m)].
  static WindowSpec from_eps(unsigned q, std::size_t m, const Rational& eps);
};

// Every substring of length >= ell has weight in [p1 len, p2 len]. O(n).
bool is_strong_locally_balanced(const Word& x, const BalanceSpec& spec);
bool is_strong_locally_balanced(std::span<const Symbol> x, unsigned q, std::size_t ell,
                                const Rational& eps);
// Length of the longest substring violating the (eps) band, 0 if none.
// The word is strong-(ell, eps) balanced iff the result is < ell.
std::size_t longest_unbalanced(std::span<const Symbol> x, unsigned q, const Rational& eps);

// Every length-m substring has weight in [a, b]. Throws if |x| < m.
bool is_window_bounded(const Word& x, const WindowSpec& spec);

// Words of a fixed length whose total weight lies in an allowed set, ranked
// lexicographically.
class WeightClass {
 public:
  WeightClass(unsigned q, std::size_t m, std::int64_t a, std::int64_t b);
  WeightClass(unsigned q, std::size_t m, std::vector<bool> allowed);

  unsigned q() const noexcept { return q_; }
  std::size_t length() const noexcept { return m_; }
  const BigInt& size() const noexcept { return count_[m_][0]; }
  bool contains(std::span<const Symbol> w) const;

  BigInt rank(std::span<const Symbol> w) const;  // throws if not a member
  std::vector<Symbol> unrank(const BigInt& r) const;  // throws if r >= size()

 private:
  // count_[r][s]: completions of length r given prefix weight s.
  const BigInt& completions(std::size_t r, std::int64_t s) const;

  unsigned q_;
  std::size_t m_;
  std::int64_t max_weight_;
  std::vector<bool> allowed_;
  std::vector<std::vector<BigInt>> count_;
};

BigInt count_weight_bounded(unsigned q, std::size_t m, std::int64_t a, std::int64_t b);
BigInt rank_in_weight_class(unsigned q, std::size_t m, std::int64_t a, std::int64_t b, const Word& w);
Word unrank_in_weight_class(unsigned q, std::size_t m, std::int64_t a, std::int64_t b, const BigInt& r);

struct CountingLemmaReport {
  unsigned q = 2;
  std::size_t n = 0;
  std::size_t ell = 0;
  Rational eps;
  unsigned s = 1;
  std::uint64_t total = 0;            // q^n
  std::uint64_t balanced = 0;         // strong-(ell, eps) balanced words
  std::uint64_t psi_balanced = 0;     // x with psi(x) strong-(ell, eps) balanced
  bool premise = false;               // ell >= ((q-1)^2/eps^2) ln(2 n sqrt(s))
  bool psi_premise = false;           // ell >= ((q-1)^2/eps^2) ln(2 (n+1) sqrt(q))
  bool bound_met = true;              // balanced >= q^n (1 - 1/(2s)) when premise
  bool psi_bound_met = true;          // psi_balanced >= q^n / 2 when psi_premise
};

// Exhaustive over q^n words; throws BudgetError above `budget` words.
CountingLemmaReport check_counting_lemma(unsigned q, std::size_t n, std::size_t ell,
                                         const Rational& eps, unsigned s,
                                         std::uint64_t budget = 50'000'000);

// Histograms over all q^n words of longest_unbalanced(x) and of
// longest_unbalanced(psi(x)); index = length. Shared by check_counting_lemma
// when sweeping many ell at once.
struct UnbalancedHistogram {
  std::vector<std::uint64_t> plain;
  std::vector<std::uint64_t> psi;
};
UnbalancedHistogram unbalanced_histogram(unsigned q, std::size_t n, const Rational& eps,
                                         std::uint64_t budget = 50'000'000);

// ln-based ell thresholds used by the counting lemma.
long double lemma_ell_bound(unsigned q, std::size_t n, const Rational& eps, unsigned s);
long double lemma_psi_ell_bound(unsigned q, std::size_t n, const Rational& eps);

}  // namespace delcode
